//! Command-line front end: compare notations and terms, run the condition
//! checkers over bounded term universes, translate between terms and
//! notations, classify digraph nodes by accessibility, and enumerate the
//! bounded universes themselves.
//!
//! Exit codes: 0 success / all checks pass, 1 failure with a witness,
//! 2 usage or parse error, 3 inconclusive.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use simpord::check::{
    check_decomposition_condition, check_lifting_condition, check_order_properties,
    check_subterm_condition, lex_arg_orders, ArgOrderEntry, ArgOrders, CheckStatus,
    ConditionId, ConditionReport, Lpo, Precedence,
};
use simpord::embed::{arg_orders as theta_arg_orders, denote, term_of, EmbeddingContext, ThetaOrder};
use simpord::ordinal::{enumerate_notations, Ordinal};
use simpord::orders::{
    lex_lt, wfp_compute, FnOrder, NodeClass, NonAccessWitness, OrderOracle, UnknownReason,
};
use simpord::term::{enumerate_terms, Signature, Term};

#[derive(Parser)]
#[command(
    name = "simpord",
    version,
    about = "Workbench for simplification orders on ground terms",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Operations on ordinal notations
    Ord {
        #[command(subcommand)]
        cmd: OrdCmd,
    },
    /// Operations on terms
    Term {
        #[command(subcommand)]
        cmd: TermCmd,
    },
    /// Check termination-order conditions over a bounded term universe
    Check(CheckArgs),
    /// Print the notation a term denotes
    Embed {
        /// Highest f index of the signature F_k
        #[arg(long)]
        k: usize,
        /// Term over F_k
        term: String,
    },
    /// Print a term denoting the zero-free image of a notation
    Termof {
        /// Highest f index of the signature F_k
        #[arg(long)]
        k: usize,
        /// Ordinal notation
        notation: String,
    },
    /// Classify digraph nodes as accessible, non-accessible, or unknown
    Wfp(WfpArgs),
    /// Enumerate a bounded universe
    Enum {
        #[command(subcommand)]
        cmd: EnumCmd,
    },
}

#[derive(Subcommand)]
enum OrdCmd {
    /// Compare two ordinal notations
    Cmp { a: String, b: String },
}

#[derive(Subcommand)]
enum TermCmd {
    /// Compare two terms under a chosen order
    Cmp(TermCmpArgs),
}

#[derive(Args)]
struct TermCmpArgs {
    /// Order to use
    #[arg(long, value_enum)]
    order: OrderName,
    /// Highest f index of F_k (theta order)
    #[arg(long)]
    k: Option<usize>,
    /// Signature file (lpo)
    #[arg(long)]
    sig: Option<PathBuf>,
    /// Precedence, ascending, comma-separated (lpo)
    #[arg(long, value_delimiter = ',')]
    prec: Vec<String>,
    s: String,
    t: String,
}

#[derive(Copy, Clone, ValueEnum)]
enum OrderName {
    Theta,
    Lpo,
}

#[derive(Copy, Clone, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Copy, Clone, ValueEnum)]
enum Defect {
    /// Replace every argument order by least-significant-first lexicographic
    ReversedLex,
    /// Plant a two-cycle into the first argument order
    PlantedCycle,
}

#[derive(Args)]
struct CheckArgs {
    /// Order to check
    #[arg(long, value_enum)]
    order: OrderName,
    /// Highest f index of F_k (theta order)
    #[arg(long)]
    k: Option<usize>,
    /// Signature file (lpo)
    #[arg(long)]
    sig: Option<PathBuf>,
    /// Precedence, ascending, comma-separated (lpo)
    #[arg(long, value_delimiter = ',')]
    prec: Vec<String>,
    /// Conditions to check: 0 order properties, 1 subterm, 2 decomposition,
    /// 3 lifting
    #[arg(long, value_delimiter = ',', default_value = "1,2,3")]
    conditions: Vec<u8>,
    /// Largest term size in the universe
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    /// Probe budget shared by the budgeted conditions
    #[arg(long, env = "SIMPORD_BUDGET", default_value_t = 100_000)]
    budget: usize,
    /// Seed for sampled checks
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Deliberately broken argument orders, for exercising the checkers
    #[arg(long, value_enum)]
    defect: Option<Defect>,
}

#[derive(Args)]
struct WfpArgs {
    /// Edge file: one `pred node` pair per line
    file: PathBuf,
    /// Extra nodes with no edges, comma-separated
    #[arg(long, value_delimiter = ',')]
    nodes: Vec<String>,
    /// Node expansion budget
    #[arg(long, env = "SIMPORD_BUDGET", default_value_t = 100_000)]
    budget: usize,
}

#[derive(Subcommand)]
enum EnumCmd {
    /// Enumerate canonical ordinal notations
    Ord {
        #[arg(long)]
        max_nodes: usize,
        #[arg(long)]
        max_vec_len: usize,
    },
    /// Enumerate ground terms
    Term {
        /// Highest f index of F_k
        #[arg(long)]
        k: Option<usize>,
        /// Signature file
        #[arg(long)]
        sig: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_size: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    let code = match cli.cmd {
        Cmd::Ord { cmd: OrdCmd::Cmp { a, b } } => cmd_ord_cmp(&a, &b),
        Cmd::Term { cmd: TermCmd::Cmp(args) } => cmd_term_cmp(&args),
        Cmd::Check(args) => cmd_check(&args),
        Cmd::Embed { k, term } => cmd_embed(k, &term),
        Cmd::Termof { k, notation } => cmd_termof(k, &notation),
        Cmd::Wfp(args) => cmd_wfp(&args),
        Cmd::Enum { cmd } => cmd_enum(&cmd),
    };
    ExitCode::from(code)
}

fn usage_error(msg: &str) -> u8 {
    eprintln!("error: {msg}");
    2
}

fn verdict(o: Ordering) -> &'static str {
    match o {
        Ordering::Less => "LESS",
        Ordering::Equal => "EQUAL",
        Ordering::Greater => "GREATER",
    }
}

fn cmd_ord_cmp(a: &str, b: &str) -> u8 {
    let pa = match Ordinal::parse(a) {
        Ok(v) => v,
        Err(e) => return usage_error(&e.to_string()),
    };
    let pb = match Ordinal::parse(b) {
        Ok(v) => v,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!("{}", verdict(pa.compare(&pb)));
    0
}

fn cmd_term_cmp(args: &TermCmpArgs) -> u8 {
    match args.order {
        OrderName::Theta => {
            let k = match args.k {
                Some(k) => k,
                None => return usage_error("--order theta requires --k"),
            };
            let ctx = EmbeddingContext::new(k);
            let (s, t) = match (
                ctx.signature().parse_term(&args.s),
                ctx.signature().parse_term(&args.t),
            ) {
                (Ok(s), Ok(t)) => (s, t),
                (Err(e), _) | (_, Err(e)) => return usage_error(&e.to_string()),
            };
            let (os, ot) = match (denote(&ctx, &s), denote(&ctx, &t)) {
                (Ok(a), Ok(b)) => (a, b),
                (Err(e), _) | (_, Err(e)) => return usage_error(&e.to_string()),
            };
            println!("{}", verdict(os.compare(&ot)));
            println!("o({s}) = {os}");
            println!("o({t}) = {ot}");
            0
        }
        OrderName::Lpo => {
            let (sig, prec) = match load_lpo(args.sig.as_deref(), &args.prec) {
                Ok(v) => v,
                Err(code) => return code,
            };
            let (s, t) = match (sig.parse_term(&args.s), sig.parse_term(&args.t)) {
                (Ok(s), Ok(t)) => (s, t),
                (Err(e), _) | (_, Err(e)) => return usage_error(&e.to_string()),
            };
            let lpo = Lpo::new(prec);
            let line = if lpo.eq(&s, &t) {
                "EQUAL"
            } else if lpo.lt(&s, &t) {
                "LESS"
            } else if lpo.lt(&t, &s) {
                "GREATER"
            } else {
                println!("INCOMPARABLE");
                return 3;
            };
            println!("{line}");
            0
        }
    }
}

fn load_lpo(
    sig: Option<&std::path::Path>,
    prec: &[String],
) -> Result<(Signature, Precedence), u8> {
    let path = match sig {
        Some(p) => p,
        None => return Err(usage_error("--order lpo requires --sig")),
    };
    if prec.is_empty() {
        return Err(usage_error("--order lpo requires --prec"));
    }
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Err(usage_error(&format!("{}: {e}", path.display()))),
    };
    let sig = match Signature::from_json(&text) {
        Ok(s) => s,
        Err(e) => return Err(usage_error(&e.to_string())),
    };
    let prec = match Precedence::new(&sig, prec) {
        Ok(p) => p,
        Err(e) => return Err(usage_error(&e.to_string())),
    };
    Ok((sig, prec))
}

/// The base order, term universe, and argument orders a check run uses.
struct CheckSetup {
    universe: Vec<Term>,
    order: Box<dyn OrderOracle<Term> + Send + Sync>,
    arg_orders: ArgOrders,
    sig: Signature,
}

fn check_setup(args: &CheckArgs) -> Result<CheckSetup, u8> {
    match args.order {
        OrderName::Theta => {
            let k = match args.k {
                Some(k) => k,
                None => return Err(usage_error("--order theta requires --k")),
            };
            let ctx = EmbeddingContext::new(k);
            let universe: Vec<Term> = enumerate_terms(ctx.signature(), args.max_size).collect();
            Ok(CheckSetup {
                universe,
                order: Box::new(ThetaOrder::new(k)),
                arg_orders: theta_arg_orders(&ctx),
                sig: ctx.signature().clone(),
            })
        }
        OrderName::Lpo => {
            let (sig, prec) = load_lpo(args.sig.as_deref(), &args.prec)?;
            let universe: Vec<Term> = enumerate_terms(&sig, args.max_size).collect();
            let lpo = Lpo::new(prec);
            let arg_orders = lex_arg_orders(&sig, &lpo);
            Ok(CheckSetup {
                universe,
                order: Box::new(lpo),
                arg_orders,
                sig,
            })
        }
    }
}

fn reversed_lex_orders(setup: &CheckSetup, args: &CheckArgs) -> Result<ArgOrders, u8> {
    let mut out = ArgOrders::new();
    for sym in setup.sig.symbols() {
        if sym.arity == 0 {
            continue;
        }
        let base: Box<dyn OrderOracle<Term> + Send + Sync> = match args.order {
            OrderName::Theta => Box::new(ThetaOrder::new(args.k.expect("validated"))),
            OrderName::Lpo => {
                let (_, prec) = load_lpo(args.sig.as_deref(), &args.prec)?;
                Box::new(Lpo::new(prec))
            }
        };
        out.insert(
            sym.name.clone(),
            ArgOrderEntry {
                arity: sym.arity,
                order: Box::new(FnOrder(move |x: &Vec<Term>, y: &Vec<Term>| {
                    let rx: Vec<Term> = x.iter().rev().cloned().collect();
                    let ry: Vec<Term> = y.iter().rev().cloned().collect();
                    lex_lt(&base, &rx, &ry).unwrap_or(false)
                })),
            },
        );
    }
    Ok(out)
}

fn plant_cycle(arg_orders: &mut ArgOrders, universe: &[Term]) -> Result<(), u8> {
    let name = arg_orders
        .iter()
        .find(|(_, e)| e.arity > 0)
        .map(|(n, _)| n.clone());
    let name = match name {
        Some(n) => n,
        None => return Err(usage_error("no positive-arity symbol to plant a cycle into")),
    };
    if universe.len() < 2 {
        return Err(usage_error("universe too small to plant a cycle"));
    }
    let entry = arg_orders.get_mut(&name).expect("present");
    let t0 = vec![universe[0].clone(); entry.arity];
    let t1 = vec![universe[1].clone(); entry.arity];
    let inner = std::mem::replace(
        &mut entry.order,
        Box::new(FnOrder(|_: &Vec<Term>, _: &Vec<Term>| false)),
    );
    entry.order = Box::new(FnOrder(move |a: &Vec<Term>, b: &Vec<Term>| {
        (a == &t0 && b == &t1) || (a == &t1 && b == &t0) || inner.lt(a, b)
    }));
    Ok(())
}

fn cmd_check(args: &CheckArgs) -> u8 {
    let mut conditions: Vec<u8> = args.conditions.clone();
    conditions.sort_unstable();
    conditions.dedup();
    let mut ids = Vec::new();
    for c in &conditions {
        match ConditionId::from_number(*c) {
            Some(id) => ids.push(id),
            None => return usage_error(&format!("unknown condition {c}; expected 0, 1, 2, or 3")),
        }
    }
    if ids.is_empty() {
        return usage_error("no conditions selected");
    }

    let mut setup = match check_setup(args) {
        Ok(s) => s,
        Err(code) => return code,
    };
    match args.defect {
        Some(Defect::ReversedLex) => {
            setup.arg_orders = match reversed_lex_orders(&setup, args) {
                Ok(o) => o,
                Err(code) => return code,
            };
        }
        Some(Defect::PlantedCycle) => {
            if let Err(code) = plant_cycle(&mut setup.arg_orders, &setup.universe) {
                return code;
            }
        }
        None => {}
    }

    let mut reports: Vec<ConditionReport> = Vec::new();
    for id in ids {
        let report = match id {
            ConditionId::OrderProperties => {
                check_order_properties(&setup.order, &setup.universe, args.budget, args.seed)
            }
            ConditionId::Subterm => check_subterm_condition(&setup.order, &setup.universe),
            ConditionId::Decomposition => {
                match check_decomposition_condition(&setup.order, &setup.arg_orders, &setup.universe)
                {
                    Ok(r) => r,
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
            ConditionId::Lifting => {
                match check_lifting_condition(
                    &setup.order,
                    &setup.arg_orders,
                    &setup.universe,
                    args.budget,
                ) {
                    Ok(r) => r,
                    Err(e) => return usage_error(&e.to_string()),
                }
            }
        };
        reports.push(report);
    }

    match args.format.unwrap_or(Format::Text) {
        Format::Text => {
            for r in &reports {
                println!("{r}");
            }
        }
        Format::Json => {
            let arr = serde_json::Value::Array(reports.iter().map(|r| r.to_json()).collect());
            println!("{}", serde_json::to_string_pretty(&arr).expect("serializable"));
        }
    }

    if reports.iter().any(|r| r.status == CheckStatus::Fail) {
        1
    } else if reports.iter().any(|r| r.status == CheckStatus::Inconclusive) {
        3
    } else {
        0
    }
}

fn cmd_embed(k: usize, term: &str) -> u8 {
    let ctx = EmbeddingContext::new(k);
    let t = match ctx.signature().parse_term(term) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    match denote(&ctx, &t) {
        Ok(o) => {
            println!("{o}");
            0
        }
        Err(e) => usage_error(&e.to_string()),
    }
}

fn cmd_termof(k: usize, notation: &str) -> u8 {
    let a = match Ordinal::parse(notation) {
        Ok(a) => a,
        Err(e) => return usage_error(&e.to_string()),
    };
    let ctx = EmbeddingContext::new(k);
    let t = match term_of(&ctx, &a) {
        Ok(t) => t,
        Err(e) => return usage_error(&e.to_string()),
    };
    println!("{t}");
    let denoted = denote(&ctx, &t).expect("term_of output is over F_k");
    println!("o({t}) = {denoted}");
    if denoted != a.plus_map() {
        eprintln!("error: denotation differs from the zero-free image {}", a.plus_map());
        return 1;
    }
    0
}

fn cmd_wfp(args: &WfpArgs) -> u8 {
    let text = match fs::read_to_string(&args.file) {
        Ok(t) => t,
        Err(e) => return usage_error(&format!("{}: {e}", args.file.display())),
    };
    let mut nodes: BTreeSet<String> = args.nodes.iter().cloned().collect();
    let mut preds: BTreeMap<String, Vec<String>> = BTreeMap::new();
    for (lineno, line) in text.lines().enumerate() {
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if tokens.is_empty() {
            continue;
        }
        if tokens.len() != 2 {
            return usage_error(&format!(
                "{}:{}: expected `pred node`, found {} tokens",
                args.file.display(),
                lineno + 1,
                tokens.len()
            ));
        }
        nodes.insert(tokens[0].to_string());
        nodes.insert(tokens[1].to_string());
        preds
            .entry(tokens[1].to_string())
            .or_default()
            .push(tokens[0].to_string());
    }

    let result = wfp_compute(
        |n: &String| preds.get(n).cloned().unwrap_or_default(),
        &nodes,
        args.budget,
    );

    let mut any_bad = false;
    let mut any_unknown = false;
    for (node, class) in &result.classes {
        match class {
            NodeClass::Accessible { rank } => println!("{node}: accessible rank={rank}"),
            NodeClass::NonAccessible { witness } => {
                any_bad = true;
                match witness {
                    NonAccessWitness::Cycle(cyc) => {
                        let mut parts: Vec<&str> = cyc.iter().map(|s| s.as_str()).collect();
                        if let Some(first) = parts.first().copied() {
                            parts.push(first);
                        }
                        println!("{node}: non-accessible (cycle: {})", parts.join(" -> "));
                    }
                    NonAccessWitness::BadPredecessor(p) => {
                        println!("{node}: non-accessible (bad predecessor: {p})");
                    }
                }
            }
            NodeClass::Unknown { reason } => {
                any_unknown = true;
                let why = match reason {
                    UnknownReason::BudgetExhausted => "budget exhausted",
                    UnknownReason::EscapedPredecessor => "predecessor outside the node set",
                };
                println!("{node}: unknown ({why})");
            }
        }
    }
    if any_bad {
        1
    } else if any_unknown {
        3
    } else {
        0
    }
}

fn cmd_enum(cmd: &EnumCmd) -> u8 {
    match cmd {
        EnumCmd::Ord {
            max_nodes,
            max_vec_len,
        } => {
            if *max_nodes == 0 || *max_vec_len == 0 {
                return usage_error("--max-nodes and --max-vec-len must be at least 1");
            }
            for o in enumerate_notations(*max_nodes, *max_vec_len) {
                println!("{o}");
            }
            0
        }
        EnumCmd::Term { k, sig, max_size } => {
            let sig = match (k, sig) {
                (Some(_), Some(_)) => return usage_error("--k and --sig are mutually exclusive"),
                (Some(k), None) => EmbeddingContext::new(*k).signature().clone(),
                (None, Some(path)) => {
                    let text = match fs::read_to_string(path) {
                        Ok(t) => t,
                        Err(e) => return usage_error(&format!("{}: {e}", path.display())),
                    };
                    match Signature::from_json(&text) {
                        Ok(s) => s,
                        Err(e) => return usage_error(&e.to_string()),
                    }
                }
                (None, None) => return usage_error("one of --k or --sig is required"),
            };
            for t in enumerate_terms(&sig, *max_size) {
                println!("{t}");
            }
            0
        }
    }
}
