//! The signature F_k = {f_0, ..., f_k, g, 1} and the denotation of its
//! ground terms as ordinal notations: `1` denotes 1, `g` denotes natural
//! sum, and `f_i` (arity i+1) builds the ϑ-term whose first argument sits
//! at the highest exponent.  The induced term order compares denotations;
//! `term_of` inverts denotation up to the zero-erasing `plus_map`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::ordinal::Ordinal;
use crate::orders::{lex_lt, pair_multiset_lt, OrderOracle};
use crate::term::{FunctionSymbol, Signature, Term};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum EmbedError {
    #[error("symbol `{name}`/{arity} is not in F_{k}")]
    WrongSignature {
        name: String,
        arity: usize,
        k: usize,
    },
    #[error("theta vector of length {len} does not fit F_{k} (limit {limit})")]
    VectorTooLong { len: usize, k: usize, limit: usize },
    #[error("`{0}` takes no arguments, so it has no argument order")]
    NoArguments(String),
}

/// Fixes k and owns the signature F_k.  Symbol indices: f_0..f_k, then g,
/// then the constant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddingContext {
    k: usize,
    signature: Signature,
}

impl EmbeddingContext {
    pub fn new(k: usize) -> EmbeddingContext {
        let mut symbols = Vec::with_capacity(k + 3);
        for i in 0..=k {
            symbols.push(FunctionSymbol::new(&format!("f_{i}"), i + 1));
        }
        symbols.push(FunctionSymbol::new("g", 2));
        symbols.push(FunctionSymbol::new("1", 0));
        EmbeddingContext {
            k,
            signature: Signature::new(symbols).expect("F_k is a valid signature"),
        }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn signature(&self) -> &Signature {
        &self.signature
    }

    fn constant_one(&self) -> Term {
        Term::constant("1")
    }

    // Some(i) when the symbol is f_i with the right arity
    fn f_index(&self, sym: &FunctionSymbol) -> Option<usize> {
        for i in 0..=self.k {
            let f = &self.signature.symbols()[i];
            if f == sym {
                return Some(i);
            }
        }
        None
    }
}

/// The denotation of a ground term over F_k.
pub fn denote(ctx: &EmbeddingContext, t: &Term) -> Result<Ordinal, EmbedError> {
    let head = t.head();
    if head.name == "1" && head.arity == 0 {
        return Ok(Ordinal::one());
    }
    if head.name == "g" && head.arity == 2 {
        let a = denote(ctx, &t.args()[0])?;
        let b = denote(ctx, &t.args()[1])?;
        return Ok(a.natural_sum(&b));
    }
    if ctx.f_index(head).is_some() {
        let coeffs = t
            .args()
            .iter()
            .map(|a| denote(ctx, a))
            .collect::<Result<Vec<_>, _>>()?;
        // no term denotes zero, so the leading coefficient is nonzero
        return Ok(Ordinal::theta(coeffs));
    }
    Err(EmbedError::WrongSignature {
        name: head.name.clone(),
        arity: head.arity,
        k: ctx.k,
    })
}

/// The induced strict order on terms: compare denotations.
pub fn theta_order_lt(ctx: &EmbeddingContext, s: &Term, t: &Term) -> Result<bool, EmbedError> {
    Ok(denote(ctx, s)?.compare(&denote(ctx, t)?) == std::cmp::Ordering::Less)
}

/// Oracle wrapper around [`theta_order_lt`]; panics on terms outside F_k.
#[derive(Debug, Clone)]
pub struct ThetaOrder {
    ctx: EmbeddingContext,
}

impl ThetaOrder {
    pub fn new(k: usize) -> ThetaOrder {
        ThetaOrder {
            ctx: EmbeddingContext::new(k),
        }
    }

    pub fn context(&self) -> &EmbeddingContext {
        &self.ctx
    }
}

impl OrderOracle<Term> for ThetaOrder {
    fn lt(&self, a: &Term, b: &Term) -> bool {
        theta_order_lt(&self.ctx, a, b).expect("term over F_k")
    }
    fn eq(&self, a: &Term, b: &Term) -> bool {
        a == b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArgOrderKind {
    /// For f_i: first argument most significant.
    Lexicographic,
    /// For g: two-element multiset comparison.
    PairMultiset,
}

/// Order on same-arity argument tuples over the induced term order.
#[derive(Debug, Clone)]
pub struct ThetaArgOrder {
    base: ThetaOrder,
    kind: ArgOrderKind,
}

impl ThetaArgOrder {
    pub fn kind(&self) -> ArgOrderKind {
        self.kind
    }
}

impl OrderOracle<Vec<Term>> for ThetaArgOrder {
    fn lt(&self, a: &Vec<Term>, b: &Vec<Term>) -> bool {
        match self.kind {
            ArgOrderKind::Lexicographic => {
                lex_lt(&self.base, a, b).expect("tuples of equal arity")
            }
            ArgOrderKind::PairMultiset => {
                assert_eq!(a.len(), 2, "pair multiset order wants pairs");
                assert_eq!(b.len(), 2, "pair multiset order wants pairs");
                pair_multiset_lt(&self.base, (&a[0], &a[1]), (&b[0], &b[1]))
            }
        }
    }
    fn eq(&self, a: &Vec<Term>, b: &Vec<Term>) -> bool {
        a == b
    }
}

/// The argument-tuple order belonging to a symbol of F_k: lexicographic for
/// every f_i, pair-multiset for g.
pub fn arg_order(ctx: &EmbeddingContext, symbol: &FunctionSymbol) -> Result<ThetaArgOrder, EmbedError> {
    if symbol.arity == 0 {
        return Err(EmbedError::NoArguments(symbol.name.clone()));
    }
    let kind = if symbol.name == "g" && symbol.arity == 2 {
        ArgOrderKind::PairMultiset
    } else if ctx.f_index(symbol).is_some() {
        ArgOrderKind::Lexicographic
    } else {
        return Err(EmbedError::WrongSignature {
            name: symbol.name.clone(),
            arity: symbol.arity,
            k: ctx.k,
        });
    };
    Ok(ThetaArgOrder {
        base: ThetaOrder { ctx: ctx.clone() },
        kind,
    })
}

/// Argument orders for every F_k symbol of positive arity, keyed by name,
/// in the shape the condition checkers consume.
pub fn arg_orders(ctx: &EmbeddingContext) -> crate::check::ArgOrders {
    let mut out: BTreeMap<String, crate::check::ArgOrderEntry> = BTreeMap::new();
    for sym in ctx.signature().symbols() {
        if sym.arity == 0 {
            continue;
        }
        let ord = arg_order(ctx, sym).expect("positive arity symbol of F_k");
        out.insert(
            sym.name.clone(),
            crate::check::ArgOrderEntry {
                arity: sym.arity,
                order: Box::new(ord),
            },
        );
    }
    out
}

/// A term denoting `plus_map(a)`: zero becomes the constant 1, a longer
/// sum becomes `g(head, rest)`, and a ϑ-term with vector length l becomes
/// f_{l-1} applied to the translated coefficients, so the atom 1 becomes
/// f_0(1).
pub fn term_of(ctx: &EmbeddingContext, a: &Ordinal) -> Result<Term, EmbedError> {
    match a {
        Ordinal::Zero => Ok(ctx.constant_one()),
        Ordinal::Sum(ts) => {
            if ts.len() == 1 {
                theta_term_of(ctx, &ts[0])
            } else {
                let first = theta_term_of(ctx, &ts[0])?;
                let rest = term_of(ctx, &Ordinal::Sum(ts[1..].to_vec()))?;
                let g = ctx.signature.get("g").expect("g in F_k").clone();
                Ok(Term::new(g, vec![first, rest]).expect("arity 2"))
            }
        }
    }
}

fn theta_term_of(ctx: &EmbeddingContext, t: &crate::ordinal::Theta) -> Result<Term, EmbedError> {
    let len = t.coeffs.len();
    if len > ctx.k + 1 {
        return Err(EmbedError::VectorTooLong {
            len,
            k: ctx.k,
            limit: ctx.k + 1,
        });
    }
    let f = ctx.signature.symbols()[len - 1].clone();
    let args = t
        .coeffs
        .iter()
        .map(|c| term_of(ctx, c))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Term::new(f, args).expect("arity matches vector length"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::cmp::Ordering;

    fn ctx1() -> EmbeddingContext {
        EmbeddingContext::new(1)
    }

    fn term(ctx: &EmbeddingContext, s: &str) -> Term {
        ctx.signature().parse_term(s).unwrap()
    }

    fn ord(s: &str) -> Ordinal {
        Ordinal::parse(s).unwrap()
    }

    #[test]
    fn context_builds_the_expected_signature() {
        let ctx = EmbeddingContext::new(2);
        let names: Vec<(String, usize)> = ctx
            .signature()
            .symbols()
            .iter()
            .map(|s| (s.name.clone(), s.arity))
            .collect();
        assert_eq!(
            names,
            vec![
                ("f_0".to_string(), 1),
                ("f_1".to_string(), 2),
                ("f_2".to_string(), 3),
                ("g".to_string(), 2),
                ("1".to_string(), 0),
            ]
        );
    }

    #[test]
    fn denotation_examples() {
        let ctx = ctx1();
        assert_eq!(denote(&ctx, &term(&ctx, "1")).unwrap(), ord("1"));
        assert_eq!(denote(&ctx, &term(&ctx, "g(1,1)")).unwrap(), ord("1+1"));
        assert_eq!(denote(&ctx, &term(&ctx, "f_0(1)")).unwrap(), ord("t(1)"));
        assert_eq!(denote(&ctx, &term(&ctx, "f_1(1,1)")).unwrap(), ord("t(1,1)"));
        // first argument of f_1 carries the highest exponent
        assert_eq!(
            denote(&ctx, &term(&ctx, "f_1(g(1,1),1)")).unwrap(),
            ord("t(1+1,1)")
        );
        let foreign = Term::constant("c");
        assert_eq!(
            denote(&ctx, &foreign),
            Err(EmbedError::WrongSignature {
                name: "c".to_string(),
                arity: 0,
                k: 1
            })
        );
    }

    #[test]
    fn induced_order_examples() {
        let ctx = ctx1();
        assert!(theta_order_lt(&ctx, &term(&ctx, "1"), &term(&ctx, "f_0(1)")).unwrap());
        assert!(theta_order_lt(&ctx, &term(&ctx, "g(1,1)"), &term(&ctx, "f_1(1,1)")).unwrap());
        assert!(theta_order_lt(&ctx, &term(&ctx, "f_1(1,1)"), &term(&ctx, "f_1(f_0(1),1)")).unwrap());
        assert!(!theta_order_lt(&ctx, &term(&ctx, "f_0(1)"), &term(&ctx, "f_0(1)")).unwrap());
    }

    #[test]
    fn arg_order_kinds_and_examples() {
        let ctx = ctx1();
        let f1 = ctx.signature().get("f_1").unwrap().clone();
        let g = ctx.signature().get("g").unwrap().clone();
        let one = ctx.signature().get("1").unwrap().clone();
        let lex = arg_order(&ctx, &f1).unwrap();
        assert_eq!(lex.kind(), ArgOrderKind::Lexicographic);
        let ms = arg_order(&ctx, &g).unwrap();
        assert_eq!(ms.kind(), ArgOrderKind::PairMultiset);
        assert_eq!(
            arg_order(&ctx, &one).unwrap_err(),
            EmbedError::NoArguments("1".to_string())
        );

        let t1 = term(&ctx, "1");
        let tf = term(&ctx, "f_0(1)");
        assert!(lex.lt(&vec![t1.clone(), tf.clone()], &vec![tf.clone(), t1.clone()]));
        assert!(ms.lt(&vec![t1.clone(), t1.clone()], &vec![t1.clone(), tf.clone()]));
        assert!(!ms.lt(&vec![t1.clone(), tf.clone()], &vec![tf, t1]));
    }

    #[test]
    fn term_of_examples() {
        let ctx = ctx1();
        assert_eq!(term_of(&ctx, &ord("0")).unwrap().to_string(), "1");
        assert_eq!(term_of(&ctx, &ord("1")).unwrap().to_string(), "f_0(1)");
        assert_eq!(
            term_of(&ctx, &ord("t(1,0)")).unwrap().to_string(),
            "f_1(f_0(1),1)"
        );
        assert_eq!(
            term_of(&ctx, &ord("t(1)")).unwrap().to_string(),
            "f_0(f_0(1))"
        );
        assert_eq!(
            term_of(&ctx, &ord("t(1,0)+1+1")).unwrap().to_string(),
            "g(f_1(f_0(1),1),g(f_0(1),f_0(1)))"
        );
        let ctx0 = EmbeddingContext::new(0);
        assert_eq!(
            term_of(&ctx0, &ord("t(1,0)")),
            Err(EmbedError::VectorTooLong {
                len: 2,
                k: 0,
                limit: 1
            })
        );
    }

    #[test]
    fn denote_term_of_is_plus_map_on_small_universe() {
        let ctx = ctx1();
        for a in crate::ordinal::enumerate_notations(5, 2) {
            let t = term_of(&ctx, &a).unwrap();
            assert_eq!(denote(&ctx, &t).unwrap(), a.plus_map(), "at {a}");
        }
    }

    #[test]
    fn denotation_respects_compare_on_small_terms() {
        let ctx = ctx1();
        let terms: Vec<Term> = crate::term::enumerate_terms(ctx.signature(), 4).collect();
        let denots: Vec<Ordinal> = terms.iter().map(|t| denote(&ctx, t).unwrap()).collect();
        for (i, a) in denots.iter().enumerate() {
            for b in &denots {
                // denotation comparison is total; just exercise it
                let _ = a.compare(b);
            }
            assert_eq!(a.compare(&denots[i]), Ordering::Equal);
        }
    }
}
