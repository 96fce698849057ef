//! Executable checks, over a bounded universe of ground terms, for the
//! properties a termination order is supposed to have: being a proper
//! order, containing the subterm relation, decomposing same-head
//! comparisons through per-symbol argument orders, and lifting
//! accessibility to argument tuples.  A ground lexicographic path order is
//! provided as a second order instance, and a bounded descending-chain
//! search probes for counterexamples directly.
//!
//! Verdicts are always relative to the examined fragment: `Pass` means "no
//! counterexample among the checked instances", never a global proof.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use thiserror::Error;

use crate::orders::{lex_lt, wfp_compute, NodeClass, NonAccessWitness, OrderOracle, UnknownReason};
use crate::term::{Signature, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CheckError {
    #[error("symbol `{name}` has no precedence rank")]
    WrongSignature { name: String },
    #[error("invalid precedence: {reason}")]
    InvalidPrecedence { reason: String },
    #[error("no argument order supplied for `{symbol}`")]
    MissingArgOrder { symbol: String },
}

/// A strict total order on a signature's symbols, given as a list of names
/// from least to greatest.  Every symbol must appear exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Precedence {
    ascending: Vec<String>,
    rank: BTreeMap<String, usize>,
}

impl Precedence {
    pub fn new(sig: &Signature, ascending: &[String]) -> Result<Precedence, CheckError> {
        if ascending.len() != sig.symbols().len() {
            return Err(CheckError::InvalidPrecedence {
                reason: format!(
                    "expected {} names, got {}",
                    sig.symbols().len(),
                    ascending.len()
                ),
            });
        }
        let mut rank = BTreeMap::new();
        for (i, name) in ascending.iter().enumerate() {
            if sig.get(name).is_none() {
                return Err(CheckError::InvalidPrecedence {
                    reason: format!("`{name}` is not a signature symbol"),
                });
            }
            if rank.insert(name.clone(), i).is_some() {
                return Err(CheckError::InvalidPrecedence {
                    reason: format!("`{name}` listed twice"),
                });
            }
        }
        Ok(Precedence {
            ascending: ascending.to_vec(),
            rank,
        })
    }

    pub fn names_ascending(&self) -> &[String] {
        &self.ascending
    }

    pub fn rank(&self, name: &str) -> Option<usize> {
        self.rank.get(name).copied()
    }
}

fn ranked_everywhere(prec: &Precedence, t: &Term) -> Result<(), CheckError> {
    if prec.rank(&t.head().name).is_none() {
        return Err(CheckError::WrongSignature {
            name: t.head().name.clone(),
        });
    }
    for a in t.args() {
        ranked_everywhere(prec, a)?;
    }
    Ok(())
}

/// Ground lexicographic path order.  `s` is below `t` when s is equal to
/// or below an argument of t, or t's head dominates in the precedence with
/// every argument of s below t, or the heads agree, the argument tuples
/// compare lexicographically, and every argument of s is below t.
pub fn lpo_lt(prec: &Precedence, s: &Term, t: &Term) -> Result<bool, CheckError> {
    ranked_everywhere(prec, s)?;
    ranked_everywhere(prec, t)?;
    Ok(lpo_lt_in(prec, s, t))
}

fn lpo_lt_in(prec: &Precedence, s: &Term, t: &Term) -> bool {
    if t.args().iter().any(|tj| s == tj || lpo_lt_in(prec, s, tj)) {
        return true;
    }
    let rs = prec.rank(&s.head().name).expect("validated");
    let rt = prec.rank(&t.head().name).expect("validated");
    if rs < rt {
        return s.args().iter().all(|si| lpo_lt_in(prec, si, t));
    }
    if s.head() == t.head() {
        let sa = s.args();
        let ta = t.args();
        for i in 0..sa.len() {
            if sa[i] == ta[i] {
                continue;
            }
            return lpo_lt_in(prec, &sa[i], &ta[i])
                && sa.iter().all(|si| lpo_lt_in(prec, si, t));
        }
    }
    false
}

/// Oracle wrapper around [`lpo_lt`]; panics on terms with unranked symbols.
#[derive(Debug, Clone)]
pub struct Lpo {
    prec: Precedence,
}

impl Lpo {
    pub fn new(prec: Precedence) -> Lpo {
        Lpo { prec }
    }

    pub fn precedence(&self) -> &Precedence {
        &self.prec
    }
}

impl OrderOracle<Term> for Lpo {
    fn lt(&self, a: &Term, b: &Term) -> bool {
        lpo_lt(&self.prec, a, b).expect("term over the precedence's signature")
    }
    fn eq(&self, a: &Term, b: &Term) -> bool {
        a == b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConditionId {
    /// Irreflexivity and transitivity of the order itself.
    OrderProperties,
    Subterm,
    Decomposition,
    Lifting,
}

impl ConditionId {
    pub fn number(self) -> u8 {
        match self {
            ConditionId::OrderProperties => 0,
            ConditionId::Subterm => 1,
            ConditionId::Decomposition => 2,
            ConditionId::Lifting => 3,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            ConditionId::OrderProperties => "order-properties",
            ConditionId::Subterm => "subterm",
            ConditionId::Decomposition => "decomposition",
            ConditionId::Lifting => "lifting",
        }
    }

    pub fn from_number(n: u8) -> Option<ConditionId> {
        match n {
            0 => Some(ConditionId::OrderProperties),
            1 => Some(ConditionId::Subterm),
            2 => Some(ConditionId::Decomposition),
            3 => Some(ConditionId::Lifting),
            _ => None,
        }
    }
}

impl fmt::Display for ConditionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail,
    Inconclusive,
}

impl CheckStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            CheckStatus::Pass => "PASS",
            CheckStatus::Fail => "FAIL",
            CheckStatus::Inconclusive => "INCONCLUSIVE",
        }
    }
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A concrete counterexample; every variant can be re-checked against the
/// defining predicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Irreflexive {
        term: Term,
    },
    Transitivity {
        a: Term,
        b: Term,
        c: Term,
    },
    /// `inner` is a proper subterm of `term` but not below it.
    Subterm {
        term: Term,
        inner: Term,
    },
    /// `smaller` is below `larger`, the terms share a head, and neither
    /// disjunct of the decomposition dichotomy holds.
    Decomposition {
        smaller: Term,
        larger: Term,
    },
    /// A cycle in the argument-tuple order of `symbol`.
    TupleCycle {
        symbol: String,
        cycle: Vec<Vec<Term>>,
    },
}

fn fmt_tuple(ts: &[Term]) -> String {
    let parts: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Irreflexive { term } => write!(f, "not irreflexive: {term} < {term}"),
            Witness::Transitivity { a, b, c } => write!(
                f,
                "not transitive: {a} < {b} and {b} < {c} but not {a} < {c}"
            ),
            Witness::Subterm { term, inner } => {
                write!(f, "proper subterm {inner} is not below {term}")
            }
            Witness::Decomposition { smaller, larger } => write!(
                f,
                "{smaller} < {larger} but no argument of {larger} is above it \
                 and the argument tuples do not compare"
            ),
            Witness::TupleCycle { symbol, cycle } => {
                let mut parts: Vec<String> = cycle.iter().map(|t| fmt_tuple(t)).collect();
                if let Some(first) = parts.first().cloned() {
                    parts.push(first);
                }
                write!(
                    f,
                    "cycle in the {symbol} argument order: {}",
                    parts.join(" -> ")
                )
            }
        }
    }
}

impl Witness {
    fn to_json(&self) -> Value {
        match self {
            Witness::Irreflexive { term } => json!({
                "kind": "irreflexive",
                "term": term.to_string(),
            }),
            Witness::Transitivity { a, b, c } => json!({
                "kind": "transitivity",
                "a": a.to_string(),
                "b": b.to_string(),
                "c": c.to_string(),
            }),
            Witness::Subterm { term, inner } => json!({
                "kind": "subterm",
                "term": term.to_string(),
                "subterm": inner.to_string(),
            }),
            Witness::Decomposition { smaller, larger } => json!({
                "kind": "decomposition",
                "smaller": smaller.to_string(),
                "larger": larger.to_string(),
            }),
            Witness::TupleCycle { symbol, cycle } => json!({
                "kind": "tuple-cycle",
                "symbol": symbol,
                "cycle": cycle
                    .iter()
                    .map(|t| Value::Array(
                        t.iter().map(|x| Value::String(x.to_string())).collect()
                    ))
                    .collect::<Vec<_>>(),
            }),
        }
    }
}

/// Outcome of one condition check.  `pairs_checked` counts the instances
/// examined (pairs, triples, or tuples, per condition); `budget_used`
/// counts the probes charged against the caller's budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub condition: ConditionId,
    pub status: CheckStatus,
    pub witness: Option<Witness>,
    pub note: Option<String>,
    pub pairs_checked: usize,
    pub universe_size: usize,
    pub budget_used: usize,
    pub seed: Option<u64>,
}

impl ConditionReport {
    pub fn to_json(&self) -> Value {
        let mut obj = serde_json::Map::new();
        obj.insert("condition".into(), json!(self.condition.number()));
        obj.insert("condition_name".into(), json!(self.condition.label()));
        obj.insert(
            "status".into(),
            json!(self.status.as_str().to_lowercase()),
        );
        if let Some(w) = &self.witness {
            obj.insert("witness".into(), w.to_json());
        }
        if let Some(n) = &self.note {
            obj.insert("note".into(), json!(n));
        }
        obj.insert("pairs_checked".into(), json!(self.pairs_checked));
        obj.insert("universe_size".into(), json!(self.universe_size));
        obj.insert("budget_used".into(), json!(self.budget_used));
        if let Some(s) = self.seed {
            obj.insert("seed".into(), json!(s));
        }
        Value::Object(obj)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} (pairs={}, universe={}, budget_used={}",
            self.condition, self.status, self.pairs_checked, self.universe_size, self.budget_used
        )?;
        if let Some(s) = self.seed {
            write!(f, ", seed={s}")?;
        }
        write!(f, ")")?;
        if let Some(w) = &self.witness {
            write!(f, "\n  witness: {w}")?;
        }
        if let Some(n) = &self.note {
            write!(f, "\n  note: {n}")?;
        }
        Ok(())
    }
}

/// An argument-tuple order together with the arity it expects.
pub struct ArgOrderEntry {
    pub arity: usize,
    pub order: Box<dyn OrderOracle<Vec<Term>> + Send + Sync>,
}

/// Per-symbol argument orders, keyed by symbol name.
pub type ArgOrders = BTreeMap<String, ArgOrderEntry>;

/// Left-to-right lexicographic tuple order over a base term order.
#[derive(Debug, Clone)]
pub struct LexTupleOrder<O> {
    pub base: O,
}

impl<O: OrderOracle<Term>> OrderOracle<Vec<Term>> for LexTupleOrder<O> {
    fn lt(&self, a: &Vec<Term>, b: &Vec<Term>) -> bool {
        lex_lt(&self.base, a, b).expect("tuples of one symbol share an arity")
    }
    fn eq(&self, a: &Vec<Term>, b: &Vec<Term>) -> bool {
        a == b
    }
}

/// Lexicographic argument orders for every positive-arity symbol.
pub fn lex_arg_orders<O>(sig: &Signature, base: &O) -> ArgOrders
where
    O: OrderOracle<Term> + Clone + Send + Sync + 'static,
{
    let mut out = ArgOrders::new();
    for sym in sig.symbols() {
        if sym.arity == 0 {
            continue;
        }
        out.insert(
            sym.name.clone(),
            ArgOrderEntry {
                arity: sym.arity,
                order: Box::new(LexTupleOrder { base: base.clone() }),
            },
        );
    }
    out
}

fn vacuous_note(pairs: usize) -> Option<String> {
    if pairs == 0 {
        Some("no instances to check in this universe".to_string())
    } else {
        None
    }
}

/// Irreflexivity on every universe element, transitivity on every triple
/// when the cube fits in `budget`, otherwise on `budget` seeded random
/// triples (the seed is then part of the report).
pub fn check_order_properties<O>(
    order: &O,
    universe: &[Term],
    budget: usize,
    seed: u64,
) -> ConditionReport
where
    O: OrderOracle<Term> + ?Sized,
{
    let n = universe.len();
    let mut probes = 0usize;
    let fail = |witness: Witness, probes: usize, note: Option<String>, seed: Option<u64>| {
        ConditionReport {
            condition: ConditionId::OrderProperties,
            status: CheckStatus::Fail,
            witness: Some(witness),
            note,
            pairs_checked: probes,
            universe_size: n,
            budget_used: probes,
            seed,
        }
    };

    for t in universe {
        probes += 1;
        if order.lt(t, t) {
            return fail(Witness::Irreflexive { term: t.clone() }, probes, None, None);
        }
    }

    let cube = (n as u128) * (n as u128) * (n as u128);
    let mut seed_field = None;
    let mut note = None;
    if cube <= budget as u128 {
        for a in universe {
            for b in universe {
                if !order.lt(a, b) {
                    probes += n;
                    continue;
                }
                for c in universe {
                    probes += 1;
                    if order.lt(b, c) && !order.lt(a, c) {
                        return fail(
                            Witness::Transitivity {
                                a: a.clone(),
                                b: b.clone(),
                                c: c.clone(),
                            },
                            probes,
                            None,
                            None,
                        );
                    }
                }
            }
        }
    } else if n > 0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        seed_field = Some(seed);
        note = Some(format!("transitivity sampled on {budget} of {cube} triples"));
        for _ in 0..budget {
            probes += 1;
            let a = &universe[rng.gen_range(0..n)];
            let b = &universe[rng.gen_range(0..n)];
            let c = &universe[rng.gen_range(0..n)];
            if order.lt(a, b) && order.lt(b, c) && !order.lt(a, c) {
                return fail(
                    Witness::Transitivity {
                        a: a.clone(),
                        b: b.clone(),
                        c: c.clone(),
                    },
                    probes,
                    note,
                    seed_field,
                );
            }
        }
    }

    ConditionReport {
        condition: ConditionId::OrderProperties,
        status: CheckStatus::Pass,
        witness: None,
        note: note.or_else(|| vacuous_note(probes)),
        pairs_checked: probes,
        universe_size: n,
        budget_used: probes,
        seed: seed_field,
    }
}

/// Every proper subterm of every universe element must be below it.
pub fn check_subterm_condition<O>(order: &O, universe: &[Term]) -> ConditionReport
where
    O: OrderOracle<Term> + ?Sized,
{
    let mut pairs = 0usize;
    for t in universe {
        for s in t.proper_subterms() {
            pairs += 1;
            if !order.lt(&s, t) {
                return ConditionReport {
                    condition: ConditionId::Subterm,
                    status: CheckStatus::Fail,
                    witness: Some(Witness::Subterm {
                        term: t.clone(),
                        inner: s,
                    }),
                    note: None,
                    pairs_checked: pairs,
                    universe_size: universe.len(),
                    budget_used: pairs,
                    seed: None,
                };
            }
        }
    }
    ConditionReport {
        condition: ConditionId::Subterm,
        status: CheckStatus::Pass,
        witness: None,
        note: vacuous_note(pairs),
        pairs_checked: pairs,
        universe_size: universe.len(),
        budget_used: pairs,
        seed: None,
    }
}

fn require_arg_orders(universe: &[Term], arg_orders: &ArgOrders) -> Result<(), CheckError> {
    for t in universe {
        let h = t.head();
        if h.arity == 0 {
            continue;
        }
        match arg_orders.get(&h.name) {
            Some(e) if e.arity == h.arity => {}
            _ => {
                return Err(CheckError::MissingArgOrder {
                    symbol: h.name.clone(),
                })
            }
        }
    }
    Ok(())
}

/// For every same-head universe pair with the smaller strictly below the
/// larger, either the smaller is below-or-equal to some argument of the
/// larger, or the argument tuples compare in the symbol's argument order.
pub fn check_decomposition_condition<O>(
    order: &O,
    arg_orders: &ArgOrders,
    universe: &[Term],
) -> Result<ConditionReport, CheckError>
where
    O: OrderOracle<Term> + ?Sized,
{
    require_arg_orders(universe, arg_orders)?;
    let mut groups: BTreeMap<&str, Vec<&Term>> = BTreeMap::new();
    for t in universe {
        groups.entry(t.head().name.as_str()).or_default().push(t);
    }

    let mut premise_pairs = 0usize;
    for (name, terms) in &groups {
        for s in terms {
            for t in terms {
                if !order.lt(s, t) {
                    continue;
                }
                premise_pairs += 1;
                if t.args().iter().any(|ai| order.le(s, ai)) {
                    continue;
                }
                // a constant below itself has no decomposition at all
                let tuple_ok = if t.head().arity == 0 {
                    false
                } else {
                    let entry = arg_orders.get(*name).expect("validated above");
                    let sa = s.args().to_vec();
                    let ta = t.args().to_vec();
                    entry.order.lt(&sa, &ta)
                };
                if !tuple_ok {
                    return Ok(ConditionReport {
                        condition: ConditionId::Decomposition,
                        status: CheckStatus::Fail,
                        witness: Some(Witness::Decomposition {
                            smaller: (*s).clone(),
                            larger: (*t).clone(),
                        }),
                        note: None,
                        pairs_checked: premise_pairs,
                        universe_size: universe.len(),
                        budget_used: premise_pairs,
                        seed: None,
                    });
                }
            }
        }
    }
    Ok(ConditionReport {
        condition: ConditionId::Decomposition,
        status: CheckStatus::Pass,
        witness: None,
        note: vacuous_note(premise_pairs),
        pairs_checked: premise_pairs,
        universe_size: universe.len(),
        budget_used: premise_pairs,
        seed: None,
    })
}

fn cartesian(universe: &[Term], arity: usize) -> Vec<Vec<Term>> {
    let mut out = Vec::new();
    if universe.is_empty() {
        return out;
    }
    let mut idx = vec![0usize; arity];
    loop {
        out.push(idx.iter().map(|&i| universe[i].clone()).collect());
        // odometer, last position fastest
        let mut pos = arity;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < universe.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

fn first_cycle<'a>(
    classes: &'a BTreeMap<Vec<Term>, NodeClass<Vec<Term>>>,
) -> Option<&'a Vec<Vec<Term>>> {
    for class in classes.values() {
        if let NodeClass::NonAccessible {
            witness: NonAccessWitness::Cycle(cyc),
        } = class
        {
            return Some(cyc);
        }
    }
    None
}

/// For each symbol with an argument order, classify every argument tuple
/// over the universe by accessibility in that order.  A tuple on a cycle
/// is a hard failure; starved or unresolved tuples make the verdict
/// inconclusive.  The budget is charged per tuple-order probe, so a
/// symbol whose tuple space cannot be scanned even once is skipped and
/// reported.
pub fn check_lifting_condition<O>(
    order: &O,
    arg_orders: &ArgOrders,
    universe: &[Term],
    budget: usize,
) -> Result<ConditionReport, CheckError>
where
    O: OrderOracle<Term> + ?Sized,
{
    require_arg_orders(universe, arg_orders)?;

    let mut notes: Vec<String> = vec![
        "verdicts cover only argument tuples drawn from the supplied universe; \
         accessibility beyond this fragment is not established"
            .to_string(),
    ];
    if universe.iter().any(|t| order.lt(t, t)) {
        notes.push("the base order is not irreflexive on this universe".to_string());
    }

    let mut remaining = budget;
    let mut tuples_classified = 0usize;
    let mut calls_charged = 0usize;
    let mut unresolved = false;
    let mut starved: Vec<&str> = Vec::new();
    let mut failure: Option<Witness> = None;

    for (name, entry) in arg_orders {
        let tuples = cartesian(universe, entry.arity);
        if tuples.is_empty() {
            continue;
        }
        let per_visit = tuples.len();
        let allowed = remaining / per_visit;
        if allowed == 0 {
            unresolved = true;
            starved.push(name);
            continue;
        }
        let tuple_set: BTreeSet<Vec<Term>> = tuples.iter().cloned().collect();
        let preds = |t: &Vec<Term>| -> Vec<Vec<Term>> {
            tuples
                .iter()
                .filter(|u| entry.order.lt(u, t))
                .cloned()
                .collect()
        };
        let result = wfp_compute(preds, &tuple_set, allowed);
        tuples_classified += result.classes.len();
        let used = result.visited * per_visit;
        calls_charged += used;
        remaining = remaining.saturating_sub(used);

        let mut symbol_cycle: Option<Vec<Vec<Term>>> = None;
        for class in result.classes.values() {
            match class {
                NodeClass::NonAccessible { .. } => {
                    if symbol_cycle.is_none() {
                        symbol_cycle = first_cycle(&result.classes).cloned();
                    }
                }
                NodeClass::Unknown {
                    reason: UnknownReason::BudgetExhausted,
                } => unresolved = true,
                NodeClass::Unknown {
                    reason: UnknownReason::EscapedPredecessor,
                } => unresolved = true,
                NodeClass::Accessible { .. } => {}
            }
        }
        if let Some(cycle) = symbol_cycle {
            failure = Some(Witness::TupleCycle {
                symbol: name.clone(),
                cycle,
            });
            break;
        }
    }

    if !starved.is_empty() {
        notes.push(format!(
            "budget too small to scan the tuple space of: {}",
            starved.join(", ")
        ));
    }

    let status = if failure.is_some() {
        CheckStatus::Fail
    } else if unresolved {
        CheckStatus::Inconclusive
    } else {
        CheckStatus::Pass
    };
    Ok(ConditionReport {
        condition: ConditionId::Lifting,
        status,
        witness: failure,
        note: Some(notes.join("; ")),
        pairs_checked: tuples_classified,
        universe_size: universe.len(),
        budget_used: calls_charged,
        seed: None,
    })
}

/// Depth-first search for a strictly descending chain starting at `start`,
/// taking candidate next elements from `neighbor_gen` and keeping only
/// those actually below the current element.  Returns the first chain
/// reaching `max_len` descents, or the longest chain found; the start
/// alone is the trivial chain of length zero.
pub fn search_descending_chain<O, G>(
    order: &O,
    start: &Term,
    neighbor_gen: G,
    max_len: usize,
) -> Vec<Term>
where
    O: OrderOracle<Term> + ?Sized,
    G: Fn(&Term) -> Vec<Term>,
{
    fn go<O, G>(
        order: &O,
        neighbor_gen: &G,
        path: &mut Vec<Term>,
        best: &mut Vec<Term>,
        max_len: usize,
    ) -> bool
    where
        O: OrderOracle<Term> + ?Sized,
        G: Fn(&Term) -> Vec<Term>,
    {
        if path.len() == max_len + 1 {
            *best = path.clone();
            return true;
        }
        let last = path.last().expect("path never empty").clone();
        for nb in neighbor_gen(&last) {
            if !order.lt(&nb, &last) || path.contains(&nb) {
                continue;
            }
            path.push(nb);
            if path.len() > best.len() {
                *best = path.clone();
            }
            if go(order, neighbor_gen, path, best, max_len) {
                return true;
            }
            path.pop();
        }
        false
    }

    let mut path = vec![start.clone()];
    let mut best = path.clone();
    go(order, &neighbor_gen, &mut path, &mut best, max_len);
    best
}
