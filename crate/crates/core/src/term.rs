//! Ground terms over a finite first-order signature: construction, parsing,
//! printing, and size-bounded enumeration.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("signature has no symbols")]
    EmptySignature,
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("signature has no constant, so there are no ground terms")]
    NoConstant,
    #[error("invalid symbol name `{0}`")]
    InvalidName(String),
    #[error("unknown symbol `{name}` at byte {at}")]
    UnknownSymbol { name: String, at: usize },
    #[error("`{name}` expects {expected} argument(s), got {found} (at byte {at})")]
    ArityMismatch {
        name: String,
        expected: usize,
        found: usize,
        at: usize,
    },
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
}

/// A function symbol: a name plus a fixed arity.
///
/// Names start with an ASCII letter or digit and continue with letters,
/// digits, or underscores, so `1` and `f_0` are both fine.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FunctionSymbol {
    pub name: String,
    pub arity: usize,
}

impl FunctionSymbol {
    pub fn new(name: &str, arity: usize) -> FunctionSymbol {
        FunctionSymbol {
            name: name.to_string(),
            arity,
        }
    }
}

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphanumeric() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// An ordered list of distinct function symbols.  The position of a symbol
/// in the list is its index; enumeration order follows it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    symbols: Vec<FunctionSymbol>,
}

#[derive(Serialize, Deserialize)]
struct SignatureFile {
    symbols: Vec<FunctionSymbol>,
}

impl Signature {
    pub fn new(symbols: Vec<FunctionSymbol>) -> Result<Signature, TermError> {
        if symbols.is_empty() {
            return Err(TermError::EmptySignature);
        }
        for (i, s) in symbols.iter().enumerate() {
            if !valid_name(&s.name) {
                return Err(TermError::InvalidName(s.name.clone()));
            }
            if symbols[..i].iter().any(|t| t.name == s.name) {
                return Err(TermError::DuplicateSymbol(s.name.clone()));
            }
        }
        Ok(Signature { symbols })
    }

    pub fn from_pairs(pairs: &[(&str, usize)]) -> Result<Signature, TermError> {
        Signature::new(
            pairs
                .iter()
                .map(|&(name, arity)| FunctionSymbol::new(name, arity))
                .collect(),
        )
    }

    /// Read a signature from its JSON form: `{"symbols":[{"name":..,"arity":..},..]}`.
    /// Array order fixes the symbol index.
    pub fn from_json(text: &str) -> Result<Signature, TermError> {
        let file: SignatureFile = serde_json::from_str(text).map_err(|e| TermError::Parse {
            at: 0,
            message: format!("bad signature JSON: {e}"),
        })?;
        Signature::new(file.symbols)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&SignatureFile {
            symbols: self.symbols.clone(),
        })
        .expect("signature serializes")
    }

    pub fn symbols(&self) -> &[FunctionSymbol] {
        &self.symbols
    }

    pub fn get(&self, name: &str) -> Option<&FunctionSymbol> {
        self.symbols.iter().find(|s| s.name == name)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s.name == name)
    }

    pub fn has_constant(&self) -> bool {
        self.symbols.iter().any(|s| s.arity == 0)
    }

    /// Strict variant of the constant check, for callers that need the
    /// ground-term set to be nonempty.
    pub fn require_constant(&self) -> Result<(), TermError> {
        if self.has_constant() {
            Ok(())
        } else {
            Err(TermError::NoConstant)
        }
    }

    /// Parse `ident | ident(term, ...)`; whitespace is insignificant.
    pub fn parse_term(&self, text: &str) -> Result<Term, TermError> {
        let mut p = Parser {
            sig: self,
            bytes: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let t = p.term()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(TermError::Parse {
                at: p.pos,
                message: "trailing input".to_string(),
            });
        }
        Ok(t)
    }
}

/// A ground term: a head symbol applied to exactly `arity` arguments.
/// Equality is structural.  The derived `Ord` is a syntactic order used for
/// deterministic tie-breaking, not a termination order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    head: FunctionSymbol,
    args: Vec<Term>,
}

impl Term {
    pub fn new(head: FunctionSymbol, args: Vec<Term>) -> Result<Term, TermError> {
        if args.len() != head.arity {
            return Err(TermError::ArityMismatch {
                name: head.name.clone(),
                expected: head.arity,
                found: args.len(),
                at: 0,
            });
        }
        Ok(Term { head, args })
    }

    pub fn constant(name: &str) -> Term {
        Term {
            head: FunctionSymbol::new(name, 0),
            args: Vec::new(),
        }
    }

    pub fn head(&self) -> &FunctionSymbol {
        &self.head
    }

    pub fn args(&self) -> &[Term] {
        &self.args
    }

    /// Node count.
    pub fn size(&self) -> usize {
        1 + self.args.iter().map(Term::size).sum::<usize>()
    }

    /// Every subterm occurrence except the term itself, in preorder.
    pub fn proper_subterms(&self) -> Vec<Term> {
        let mut out = Vec::new();
        for a in &self.args {
            a.collect(&mut out);
        }
        out
    }

    fn collect(&self, out: &mut Vec<Term>) {
        out.push(self.clone());
        for a in &self.args {
            a.collect(out);
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head.name)?;
        if !self.args.is_empty() {
            write!(f, "(")?;
            for (i, a) in self.args.iter().enumerate() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{a}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

struct Parser<'a> {
    sig: &'a Signature,
    bytes: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn ident(&mut self) -> Result<String, TermError> {
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphanumeric() => self.pos += 1,
            _ => {
                return Err(TermError::Parse {
                    at: start,
                    message: "expected an identifier".to_string(),
                })
            }
        }
        while let Some(c) = self.peek() {
            if c.is_ascii_alphanumeric() || c == b'_' {
                self.pos += 1;
            } else {
                break;
            }
        }
        Ok(String::from_utf8(self.bytes[start..self.pos].to_vec()).expect("ascii"))
    }

    fn term(&mut self) -> Result<Term, TermError> {
        self.skip_ws();
        let start = self.pos;
        let name = self.ident()?;
        let sym = match self.sig.get(&name) {
            Some(s) => s.clone(),
            None => return Err(TermError::UnknownSymbol { name, at: start }),
        };
        self.skip_ws();
        let mut args = Vec::new();
        if self.peek() == Some(b'(') {
            self.pos += 1;
            loop {
                args.push(self.term()?);
                self.skip_ws();
                match self.peek() {
                    Some(b',') => self.pos += 1,
                    Some(b')') => {
                        self.pos += 1;
                        break;
                    }
                    _ => {
                        return Err(TermError::Parse {
                            at: self.pos,
                            message: "expected `,` or `)`".to_string(),
                        })
                    }
                }
            }
        }
        if args.len() != sym.arity {
            return Err(TermError::ArityMismatch {
                name: sym.name,
                expected: sym.arity,
                found: args.len(),
                at: start,
            });
        }
        Ok(Term { head: sym, args })
    }
}

/// Emit every ground term of size at most `max_size`: smaller sizes first,
/// then symbol index order, then argument tuples with earlier arguments
/// taken in enumeration order.
pub fn enumerate_terms(sig: &Signature, max_size: usize) -> TermEnumerator<'_> {
    TermEnumerator {
        sig,
        max_size,
        layers: vec![Vec::new()], // layers[0] unused; sizes are 1-based
        size: 1,
        index: 0,
    }
}

pub struct TermEnumerator<'a> {
    sig: &'a Signature,
    max_size: usize,
    layers: Vec<Vec<Term>>,
    size: usize,
    index: usize,
}

impl TermEnumerator<'_> {
    fn build_layer(&mut self, size: usize) {
        let mut layer = Vec::new();
        for sym in self.sig.symbols() {
            let m = sym.arity;
            if m == 0 {
                if size == 1 {
                    layer.push(Term {
                        head: sym.clone(),
                        args: Vec::new(),
                    });
                }
                continue;
            }
            if size < m + 1 {
                continue;
            }
            let mut acc = Vec::new();
            tuples(&self.layers, m, size - 1, &mut acc, &mut |args| {
                layer.push(Term {
                    head: sym.clone(),
                    args: args.to_vec(),
                });
            });
        }
        self.layers.push(layer);
        debug_assert_eq!(self.layers.len(), size + 1);
    }
}

fn tuples(
    layers: &[Vec<Term>],
    slots: usize,
    total: usize,
    acc: &mut Vec<Term>,
    emit: &mut impl FnMut(&[Term]),
) {
    if slots == 0 {
        if total == 0 {
            emit(acc);
        }
        return;
    }
    // leave at least one node for each remaining slot
    let max_here = total - (slots - 1);
    for s in 1..=max_here {
        for t in &layers[s] {
            acc.push(t.clone());
            tuples(layers, slots - 1, total - s, acc, emit);
            acc.pop();
        }
    }
}

impl Iterator for TermEnumerator<'_> {
    type Item = Term;

    fn next(&mut self) -> Option<Term> {
        loop {
            if self.size > self.max_size {
                return None;
            }
            if self.layers.len() <= self.size {
                self.build_layer(self.size);
            }
            if self.index < self.layers[self.size].len() {
                let t = self.layers[self.size][self.index].clone();
                self.index += 1;
                return Some(t);
            }
            self.size += 1;
            self.index = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f1_sig() -> Signature {
        Signature::from_pairs(&[("f_0", 1), ("f_1", 2), ("g", 2), ("1", 0)]).unwrap()
    }

    #[test]
    fn signature_validation() {
        assert_eq!(Signature::new(vec![]), Err(TermError::EmptySignature));
        assert_eq!(
            Signature::from_pairs(&[("a", 0), ("a", 1)]),
            Err(TermError::DuplicateSymbol("a".to_string()))
        );
        assert_eq!(
            Signature::from_pairs(&[("_x", 0)]),
            Err(TermError::InvalidName("_x".to_string()))
        );
        assert_eq!(
            Signature::from_pairs(&[("x y", 0)]),
            Err(TermError::InvalidName("x y".to_string()))
        );
        let no_const = Signature::from_pairs(&[("f", 1)]).unwrap();
        assert!(!no_const.has_constant());
        assert_eq!(no_const.require_constant(), Err(TermError::NoConstant));
        assert!(f1_sig().require_constant().is_ok());
    }

    #[test]
    fn signature_json_round_trip() {
        let sig = f1_sig();
        let json = sig.to_json();
        assert_eq!(Signature::from_json(&json).unwrap(), sig);
        assert!(matches!(
            Signature::from_json("{"),
            Err(TermError::Parse { .. })
        ));
    }

    #[test]
    fn parse_and_format() {
        let sig = f1_sig();
        let t = sig.parse_term("g(1,f_0(1))").unwrap();
        assert_eq!(t.to_string(), "g(1,f_0(1))");
        assert_eq!(t.head().name, "g");
        assert_eq!(t.size(), 4);
        // whitespace is insignificant
        let s = sig.parse_term("  g( 1 ,\tf_0( 1 ) ) ").unwrap();
        assert_eq!(s, t);
    }

    #[test]
    fn parse_errors_carry_positions() {
        let sig = f1_sig();
        assert_eq!(
            sig.parse_term("h(1)"),
            Err(TermError::UnknownSymbol {
                name: "h".to_string(),
                at: 0
            })
        );
        assert_eq!(
            sig.parse_term("f_0(1,1)"),
            Err(TermError::ArityMismatch {
                name: "f_0".to_string(),
                expected: 1,
                found: 2,
                at: 0
            })
        );
        assert_eq!(
            sig.parse_term("g(1"),
            Err(TermError::Parse {
                at: 3,
                message: "expected `,` or `)`".to_string()
            })
        );
        assert_eq!(
            sig.parse_term("g(1,1) x"),
            Err(TermError::Parse {
                at: 7,
                message: "trailing input".to_string()
            })
        );
        assert!(matches!(sig.parse_term(""), Err(TermError::Parse { at: 0, .. })));
    }

    #[test]
    fn term_construction_checks_arity() {
        let g = FunctionSymbol::new("g", 2);
        let one = Term::constant("1");
        assert!(Term::new(g.clone(), vec![one.clone()]).is_err());
        assert!(Term::new(g, vec![one.clone(), one]).is_ok());
    }

    #[test]
    fn sizes_and_subterms() {
        let sig = f1_sig();
        let one = sig.parse_term("1").unwrap();
        assert_eq!(one.size(), 1);
        assert!(one.proper_subterms().is_empty());

        let t = sig.parse_term("f_0(g(1,1))").unwrap();
        let subs: Vec<String> = t.proper_subterms().iter().map(|s| s.to_string()).collect();
        assert_eq!(subs, vec!["g(1,1)", "1", "1"]);
        assert_eq!(t.proper_subterms().len(), t.size() - 1);
    }

    #[test]
    fn enumerate_binary_tree_counts() {
        // one constant and one binary symbol: full binary trees, Catalan counts
        let sig = Signature::from_pairs(&[("a", 0), ("g", 2)]).unwrap();
        let terms: Vec<Term> = enumerate_terms(&sig, 5).collect();
        assert_eq!(terms.len(), 4);
        let shown: Vec<String> = terms.iter().map(|t| t.to_string()).collect();
        assert_eq!(shown, vec!["a", "g(a,a)", "g(a,g(a,a))", "g(g(a,a),a)"]);
    }

    #[test]
    fn enumerate_f1_order_is_frozen() {
        let sig = f1_sig();
        let shown: Vec<String> = enumerate_terms(&sig, 3).map(|t| t.to_string()).collect();
        assert_eq!(
            shown,
            vec!["1", "f_0(1)", "f_0(f_0(1))", "f_1(1,1)", "g(1,1)"]
        );
    }

    #[test]
    fn enumerate_without_constant_is_empty() {
        let sig = Signature::from_pairs(&[("f", 1), ("g", 2)]).unwrap();
        assert_eq!(enumerate_terms(&sig, 6).count(), 0);
    }

    #[test]
    fn enumerate_is_deterministic() {
        let sig = f1_sig();
        let a: Vec<Term> = enumerate_terms(&sig, 5).collect();
        let b: Vec<Term> = enumerate_terms(&sig, 5).collect();
        assert_eq!(a, b);
    }

    /// Counting oracle: terms of each exact size via the size recurrence,
    /// with no term construction involved.
    fn count_by_size(sig: &Signature, max_size: usize) -> Vec<u64> {
        let mut counts = vec![0u64; max_size + 1];
        for s in 1..=max_size {
            let mut total = 0u64;
            for sym in sig.symbols() {
                if sym.arity == 0 {
                    if s == 1 {
                        total += 1;
                    }
                } else if s >= sym.arity + 1 {
                    total += compositions(&counts, sym.arity, s - 1);
                }
            }
            counts[s] = total;
        }
        counts
    }

    fn compositions(counts: &[u64], slots: usize, total: usize) -> u64 {
        if slots == 0 {
            return u64::from(total == 0);
        }
        let mut acc = 0;
        for s in 1..=total.saturating_sub(slots - 1) {
            acc += counts[s] * compositions(counts, slots - 1, total - s);
        }
        acc
    }

    #[test]
    fn enumeration_matches_counting_oracle() {
        let sigs = [
            f1_sig(),
            Signature::from_pairs(&[("a", 0), ("g", 2)]).unwrap(),
            Signature::from_pairs(&[("a", 0), ("b", 0), ("f", 1)]).unwrap(),
            Signature::from_pairs(&[("c", 0), ("u", 1), ("v", 1), ("w", 2)]).unwrap(),
        ];
        for sig in &sigs {
            let max = 6;
            let counts = count_by_size(sig, max);
            let mut by_size = vec![0u64; max + 1];
            let mut seen = std::collections::HashSet::new();
            for t in enumerate_terms(sig, max) {
                assert!(t.size() <= max);
                assert!(seen.insert(t.clone()), "duplicate {t}");
                by_size[t.size()] += 1;
            }
            assert_eq!(by_size, counts, "size histogram for {sig:?}");
        }
    }

    #[test]
    fn enumeration_is_complete() {
        // independent generator: close the term set under all symbols, then
        // filter by size
        let sig = f1_sig();
        let max = 5;
        let mut all: std::collections::BTreeSet<Term> = std::collections::BTreeSet::new();
        all.insert(Term::constant("1"));
        // repeatedly apply symbols to everything collected so far
        for _ in 0..max {
            let pool: Vec<Term> = all.iter().cloned().collect();
            let mut next = Vec::new();
            for sym in sig.symbols() {
                if sym.arity == 0 {
                    continue;
                }
                let mut idx = vec![0usize; sym.arity];
                loop {
                    let args: Vec<Term> = idx.iter().map(|&i| pool[i].clone()).collect();
                    let t = Term::new(sym.clone(), args).unwrap();
                    if t.size() <= max && !all.contains(&t) {
                        next.push(t);
                    }
                    // odometer
                    let mut carry = true;
                    for slot in idx.iter_mut() {
                        *slot += 1;
                        if *slot < pool.len() {
                            carry = false;
                            break;
                        }
                        *slot = 0;
                    }
                    if carry {
                        break;
                    }
                }
            }
            let before = all.len();
            all.extend(next);
            if all.len() == before {
                break;
            }
        }
        let enumerated: std::collections::BTreeSet<Term> = enumerate_terms(&sig, max).collect();
        assert_eq!(enumerated, all);
    }

    fn arb_term() -> impl Strategy<Value = Term> {
        let leaf = Just(Term::constant("1"));
        leaf.prop_recursive(4, 24, 2, |inner| {
            prop_oneof![
                inner
                    .clone()
                    .prop_map(|a| Term::new(FunctionSymbol::new("f_0", 1), vec![a]).unwrap()),
                (inner.clone(), inner.clone()).prop_map(|(a, b)| {
                    Term::new(FunctionSymbol::new("f_1", 2), vec![a, b]).unwrap()
                }),
                (inner.clone(), inner)
                    .prop_map(|(a, b)| Term::new(FunctionSymbol::new("g", 2), vec![a, b]).unwrap()),
            ]
        })
    }

    proptest! {
        #[test]
        fn parse_inverts_format(t in arb_term()) {
            let sig = f1_sig();
            let text = t.to_string();
            prop_assert_eq!(sig.parse_term(&text).unwrap(), t);
        }
    }
}
