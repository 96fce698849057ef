//! Canonical notations for ordinals below ϑ(Ω^(k+1)).
//!
//! A notation is zero or a sum of ϑ-terms; each ϑ-term carries a coefficient
//! vector listed highest exponent first, so `t(a,b)` stands for
//! ϑ(Ω·a + b).  The atom 1 is the ϑ-term with vector `[0]`.  Natural numbers
//! are sums 1+⋯+1; there is no dedicated numeral node.
//!
//! Canonical form: sum components are sorted nonincreasing under [`Ordinal::compare`],
//! and the leading coefficient of every vector is nonzero unless the vector
//! is exactly `[0]`.  All constructors here produce canonical values.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrdinalError {
    #[error("parse error at byte {at}: {message}")]
    Parse { at: usize, message: String },
    #[error("non-canonical notation: {0}")]
    NonCanonical(String),
}

/// An ordinal notation.  A sum of one ϑ-term is the only representation of
/// that ϑ-term; there is no separate single-term constructor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Ordinal {
    Zero,
    Sum(Vec<Theta>),
}

/// One ϑ-term: coefficients listed highest exponent first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Theta {
    pub coeffs: Vec<Ordinal>,
}

impl Theta {
    /// The vector `[0]`, i.e. the notation 1.
    #[inline]
    pub fn is_atom_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_zero()
    }
}

impl Ordinal {
    pub fn one() -> Ordinal {
        Ordinal::Sum(vec![Theta {
            coeffs: vec![Ordinal::Zero],
        }])
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Ordinal::Zero)
    }

    /// Build the ϑ-term with the given coefficients (highest exponent
    /// first), stripping leading zero coefficients down to the canonical
    /// vector.  `theta([0])` is the notation 1.
    pub fn theta(mut coeffs: Vec<Ordinal>) -> Ordinal {
        assert!(!coeffs.is_empty(), "a theta term needs a coefficient");
        while coeffs.len() > 1 && coeffs[0].is_zero() {
            coeffs.remove(0);
        }
        Ordinal::Sum(vec![Theta { coeffs }])
    }

    /// Sum components, largest first; empty for zero.
    pub fn components(&self) -> &[Theta] {
        match self {
            Ordinal::Zero => &[],
            Ordinal::Sum(ts) => ts,
        }
    }

    /// Natural (Hessenberg) sum: merge the component multisets.
    pub fn natural_sum(&self, other: &Ordinal) -> Ordinal {
        match (self, other) {
            (Ordinal::Zero, x) | (x, Ordinal::Zero) => x.clone(),
            (Ordinal::Sum(a), Ordinal::Sum(b)) => {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() && j < b.len() {
                    if cmp_theta(&a[i], &b[j]) == Ordering::Less {
                        out.push(b[j].clone());
                        j += 1;
                    } else {
                        out.push(a[i].clone());
                        i += 1;
                    }
                }
                out.extend(a[i..].iter().cloned());
                out.extend(b[j..].iter().cloned());
                Ordinal::Sum(out)
            }
        }
    }

    /// Total comparison of canonical notations.  `Equal` coincides with
    /// structural equality.
    pub fn compare(&self, other: &Ordinal) -> Ordering {
        cmp_ord(self, other)
    }

    /// Comparison that first rejects non-canonical operands.
    pub fn compare_checked(&self, other: &Ordinal) -> Result<Ordering, OrdinalError> {
        self.validate()?;
        other.validate()?;
        Ok(cmp_ord(self, other))
    }

    pub fn is_canonical(&self) -> bool {
        self.validate().is_ok()
    }

    pub fn validate(&self) -> Result<(), OrdinalError> {
        match self {
            Ordinal::Zero => Ok(()),
            Ordinal::Sum(ts) => {
                if ts.is_empty() {
                    return Err(OrdinalError::NonCanonical("empty sum".to_string()));
                }
                for t in ts {
                    validate_theta(t)?;
                }
                for w in ts.windows(2) {
                    if cmp_theta(&w[0], &w[1]) == Ordering::Less {
                        return Err(OrdinalError::NonCanonical(
                            "sum components not sorted nonincreasing".to_string(),
                        ));
                    }
                }
                Ok(())
            }
        }
    }

    /// Replace every zero by 1, uniformly through the whole structure:
    /// zero maps to 1, sums map componentwise, and a ϑ-term maps
    /// coefficientwise on its full vector, so the atom 1 itself maps to
    /// t(1).  A strict order embedding; the image carries no zero
    /// coefficient outside the atoms the map introduces.
    pub fn plus_map(&self) -> Ordinal {
        match self {
            Ordinal::Zero => Ordinal::one(),
            Ordinal::Sum(ts) => {
                let mut acc = Ordinal::Zero;
                for t in ts {
                    let mapped = Ordinal::Sum(vec![plus_theta(t)]);
                    acc = acc.natural_sum(&mapped);
                }
                acc
            }
        }
    }

    /// Constructor-node count: zero alone is 1 node, each ϑ-term is one
    /// node plus its nonzero coefficients, a sum costs its components.
    /// Zero coefficients inside a vector are free, so the atom 1 is 1 node.
    pub fn size(&self) -> usize {
        match self {
            Ordinal::Zero => 1,
            Ordinal::Sum(ts) => ts.iter().map(theta_size).sum(),
        }
    }

    /// Parse `0 | 1 | t(ord,...) | ord+ord`; `+` is the natural sum, so the
    /// result is canonical whatever the input order.
    pub fn parse(text: &str) -> Result<Ordinal, OrdinalError> {
        let mut p = OrdParser {
            bytes: text.as_bytes(),
            pos: 0,
        };
        p.skip_ws();
        let v = p.expr()?;
        p.skip_ws();
        if p.pos < p.bytes.len() {
            return Err(OrdinalError::Parse {
                at: p.pos,
                message: "trailing input".to_string(),
            });
        }
        Ok(v)
    }
}

fn validate_theta(t: &Theta) -> Result<(), OrdinalError> {
    if t.coeffs.is_empty() {
        return Err(OrdinalError::NonCanonical(
            "theta term with no coefficients".to_string(),
        ));
    }
    if t.coeffs.len() > 1 && t.coeffs[0].is_zero() {
        return Err(OrdinalError::NonCanonical(
            "leading zero coefficient".to_string(),
        ));
    }
    for c in &t.coeffs {
        c.validate()?;
    }
    Ok(())
}

fn theta_size(t: &Theta) -> usize {
    1 + t
        .coeffs
        .iter()
        .map(|c| if c.is_zero() { 0 } else { c.size() })
        .sum::<usize>()
}

fn plus_theta(t: &Theta) -> Theta {
    Theta {
        coeffs: t.coeffs.iter().map(Ordinal::plus_map).collect(),
    }
}

#[inline]
fn cmp_ord(a: &Ordinal, b: &Ordinal) -> Ordering {
    match (a, b) {
        (Ordinal::Zero, Ordinal::Zero) => Ordering::Equal,
        (Ordinal::Zero, Ordinal::Sum(_)) => Ordering::Less,
        (Ordinal::Sum(_), Ordinal::Zero) => Ordering::Greater,
        (Ordinal::Sum(x), Ordinal::Sum(y)) => cmp_components(x, y),
    }
}

// Nonincreasing component lists compare position by position; a strict
// prefix is smaller.
#[inline]
fn cmp_components(x: &[Theta], y: &[Theta]) -> Ordering {
    for (s, t) in x.iter().zip(y.iter()) {
        match cmp_theta(s, t) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    x.len().cmp(&y.len())
}

// One ϑ-term against a whole notation; the single component matches the
// leading one, then the remaining length decides.
#[inline]
fn cmp_theta_ord(s: &Theta, b: &Ordinal) -> Ordering {
    match b {
        Ordinal::Zero => Ordering::Greater,
        Ordinal::Sum(y) => match y.first() {
            None => Ordering::Greater,
            Some(y0) => match cmp_theta(s, y0) {
                Ordering::Equal => 1usize.cmp(&y.len()),
                other => other,
            },
        },
    }
}

// ϑ(0), the notation 1, is the least ϑ-term: any other canonical ϑ-term
// has a nonzero leading coefficient, so the at-or-below-a-coefficient
// clause fires on it at once.  Dispatching here keeps the hottest operand
// out of the general scans.
#[inline]
fn cmp_theta(s: &Theta, t: &Theta) -> Ordering {
    match (s.is_atom_one(), t.is_atom_one()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Less,
        (false, true) => Ordering::Greater,
        (false, false) => cmp_theta_general(s, t),
    }
}

// ϑ(a) < ϑ(b) iff ϑ(a) is at or below a coefficient of b, or every
// coefficient of a is below ϑ(b) and the padded vectors compare
// lexicographically; vectors of unequal length are padded with leading
// zeros.  The padded lex verdict runs first here: it already covers the
// all-coefficients-below case, and only the lex loser can still win by
// having the other term at or below one of its coefficients.  The two
// at-or-below clauses are each sound for the order, so they never both
// hold and a single directed scan suffices.
fn cmp_theta_general(s: &Theta, t: &Theta) -> Ordering {
    match cmp_vec_padded(&s.coeffs, &t.coeffs) {
        Ordering::Equal => Ordering::Equal,
        Ordering::Less => {
            if at_or_below_some(t, &s.coeffs) {
                Ordering::Greater
            } else {
                Ordering::Less
            }
        }
        Ordering::Greater => {
            if at_or_below_some(s, &t.coeffs) {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
    }
}

// A canonical vector longer than one entry starts nonzero, so under
// leading-zero padding the shorter vector loses at its first padded
// position and unequal lengths decide outright.
#[inline]
fn cmp_vec_padded(x: &[Ordinal], y: &[Ordinal]) -> Ordering {
    match x.len().cmp(&y.len()) {
        Ordering::Equal => {
            for (xc, yc) in x.iter().zip(y) {
                match cmp_ord(xc, yc) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        }
        other => other,
    }
}

#[inline]
fn at_or_below_some(w: &Theta, coeffs: &[Ordinal]) -> bool {
    coeffs
        .iter()
        .any(|c| cmp_theta_ord(w, c) != Ordering::Greater)
}

impl fmt::Display for Ordinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ordinal::Zero => write!(f, "0"),
            Ordinal::Sum(ts) => {
                for (i, t) in ts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    fmt_theta(t, f)?;
                }
                Ok(())
            }
        }
    }
}

fn fmt_theta(t: &Theta, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if t.is_atom_one() {
        return write!(f, "1");
    }
    write!(f, "t(")?;
    for (i, c) in t.coeffs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{c}")?;
    }
    write!(f, ")")
}

struct OrdParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl OrdParser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), OrdinalError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(OrdinalError::Parse {
                at: self.pos,
                message: format!("expected `{}`", c as char),
            })
        }
    }

    fn expr(&mut self) -> Result<Ordinal, OrdinalError> {
        let mut acc = self.atom()?;
        loop {
            self.skip_ws();
            if self.peek() == Some(b'+') {
                self.pos += 1;
                let next = self.atom()?;
                acc = acc.natural_sum(&next);
            } else {
                return Ok(acc);
            }
        }
    }

    fn atom(&mut self) -> Result<Ordinal, OrdinalError> {
        self.skip_ws();
        match self.peek() {
            Some(b'0') => {
                self.pos += 1;
                Ok(Ordinal::Zero)
            }
            Some(b'1') => {
                self.pos += 1;
                Ok(Ordinal::one())
            }
            Some(b't') => {
                self.pos += 1;
                self.skip_ws();
                self.expect(b'(')?;
                let mut coeffs = vec![self.expr()?];
                loop {
                    self.skip_ws();
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                            coeffs.push(self.expr()?);
                        }
                        Some(b')') => {
                            self.pos += 1;
                            return Ok(Ordinal::theta(coeffs));
                        }
                        _ => {
                            return Err(OrdinalError::Parse {
                                at: self.pos,
                                message: "expected `,` or `)`".to_string(),
                            })
                        }
                    }
                }
            }
            _ => Err(OrdinalError::Parse {
                at: self.pos,
                message: "expected `0`, `1`, or `t(`".to_string(),
            }),
        }
    }
}

/// Every canonical notation with at most `max_nodes` constructor nodes whose
/// ϑ-vectors (at every depth) have length at most `max_vector_len`.  Each
/// value appears exactly once; the order is deterministic, smaller sizes
/// first.
pub fn enumerate_notations(max_nodes: usize, max_vector_len: usize) -> Vec<Ordinal> {
    assert!(max_vector_len >= 1);
    // by exact size: all nonzero notations, and all theta terms
    let mut nonzero: Vec<Vec<Ordinal>> = vec![Vec::new(); max_nodes + 1];
    let mut thetas: Vec<Vec<Theta>> = vec![Vec::new(); max_nodes + 1];
    for s in 1..=max_nodes {
        let mut ts: Vec<Theta> = Vec::new();
        if s == 1 {
            ts.push(Theta {
                coeffs: vec![Ordinal::Zero],
            });
        }
        for len in 1..=max_vector_len {
            gen_vectors(len, s - 1, &nonzero, &mut ts);
        }
        let mut sums: Vec<Ordinal> = Vec::new();
        gen_sums(s, &thetas, &mut sums);
        nonzero[s] = ts
            .iter()
            .map(|t| Ordinal::Sum(vec![t.clone()]))
            .chain(sums)
            .collect();
        thetas[s] = ts;
    }
    let mut out = vec![Ordinal::Zero];
    for layer in nonzero.iter().skip(1) {
        out.extend(layer.iter().cloned());
    }
    out
}

// All vectors of the given length with a nonzero leading coefficient and
// total coefficient size `budget` (zero coefficients are free).
fn gen_vectors(len: usize, budget: usize, nonzero: &[Vec<Ordinal>], out: &mut Vec<Theta>) {
    for lead_size in 1..=budget {
        for lead in &nonzero[lead_size] {
            let mut acc = vec![lead.clone()];
            fill_tail(len - 1, budget - lead_size, nonzero, &mut acc, out);
        }
    }
}

fn fill_tail(
    slots: usize,
    remaining: usize,
    nonzero: &[Vec<Ordinal>],
    acc: &mut Vec<Ordinal>,
    out: &mut Vec<Theta>,
) {
    if slots == 0 {
        if remaining == 0 {
            out.push(Theta { coeffs: acc.clone() });
        }
        return;
    }
    acc.push(Ordinal::Zero);
    fill_tail(slots - 1, remaining, nonzero, acc, out);
    acc.pop();
    for c in 1..=remaining {
        for v in &nonzero[c] {
            acc.push(v.clone());
            fill_tail(slots - 1, remaining - c, nonzero, acc, out);
            acc.pop();
        }
    }
}

// Multisets of at least two theta terms with the given total size, each
// emitted once, components sorted nonincreasing.
fn gen_sums(total: usize, thetas: &[Vec<Theta>], out: &mut Vec<Ordinal>) {
    let mut pool: Vec<(Theta, usize)> = Vec::new();
    for (size, layer) in thetas.iter().enumerate().take(total).skip(1) {
        for t in layer {
            pool.push((t.clone(), size));
        }
    }
    pool.sort_by(|a, b| cmp_theta(&b.0, &a.0));
    let mut acc: Vec<Theta> = Vec::new();
    go_sums(&pool, 0, total, &mut acc, out);
}

fn go_sums(
    pool: &[(Theta, usize)],
    start: usize,
    remaining: usize,
    acc: &mut Vec<Theta>,
    out: &mut Vec<Ordinal>,
) {
    if remaining == 0 {
        if acc.len() >= 2 {
            out.push(Ordinal::Sum(acc.clone()));
        }
        return;
    }
    for i in start..pool.len() {
        if pool[i].1 > remaining {
            continue;
        }
        acc.push(pool[i].0.clone());
        go_sums(pool, i, remaining - pool[i].1, acc, out);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use std::collections::HashSet;

    fn ord(text: &str) -> Ordinal {
        Ordinal::parse(text).unwrap()
    }

    #[test]
    fn atoms() {
        assert_eq!(Ordinal::one(), Ordinal::theta(vec![Ordinal::Zero]));
        assert_eq!(ord("1"), Ordinal::one());
        assert_eq!(ord("0"), Ordinal::Zero);
        assert!(Ordinal::one().components()[0].is_atom_one());
    }

    #[test]
    fn theta_strips_leading_zeros() {
        assert_eq!(
            Ordinal::theta(vec![Ordinal::Zero, Ordinal::one()]),
            Ordinal::theta(vec![Ordinal::one()])
        );
        assert_eq!(ord("t(0,1)"), ord("t(1)"));
        assert_eq!(ord("t(0,0)"), ord("1"));
    }

    #[test]
    fn display_round_trips() {
        for text in ["0", "1", "t(1)", "t(1,0)", "t(1,1)", "1+1", "t(t(1,0))", "t(1,0)+1"] {
            let v = ord(text);
            assert_eq!(v.to_string(), text);
            assert_eq!(ord(&v.to_string()), v);
        }
    }

    #[test]
    fn parse_errors_carry_positions() {
        assert!(matches!(
            Ordinal::parse("t(1"),
            Err(OrdinalError::Parse { at: 3, .. })
        ));
        assert!(matches!(
            Ordinal::parse("2"),
            Err(OrdinalError::Parse { at: 0, .. })
        ));
        assert!(matches!(
            Ordinal::parse("1+"),
            Err(OrdinalError::Parse { at: 2, .. })
        ));
        assert!(matches!(
            Ordinal::parse("t(1,0) junk"),
            Err(OrdinalError::Parse { at: 7, .. })
        ));
    }

    // Hand-traced comparisons, kept as frozen expectations.
    #[test]
    fn compare_examples() {
        use Ordering::*;
        assert_eq!(ord("0").compare(&ord("1")), Less);
        assert_eq!(ord("1").compare(&ord("1")), Equal);
        // 1 sits at a coefficient of t(1,0)
        assert_eq!(ord("1+1").compare(&ord("t(1,0)")), Less);
        // t(1,0) is a coefficient of the right side
        assert_eq!(ord("t(1,0)").compare(&ord("t(t(1,0))")), Less);
        // both coefficients of the left side are below t(1,1); (0,t(1,0)) <lex (1,1)
        assert_eq!(ord("t(t(1,0))").compare(&ord("t(1,1)")), Less);
        assert_eq!(ord("t(1)").compare(&ord("1")), Greater);
        assert_eq!(ord("t(1,1)").compare(&ord("t(1,0)")), Greater);
        assert_eq!(ord("t(t(1,0))").compare(&ord("t(1,0)")), Greater);
    }

    #[test]
    fn compare_sum_vs_theta() {
        use Ordering::*;
        // a one-component sum is the theta term; prefix rule for longer sums
        assert_eq!(ord("t(1,0)+1").compare(&ord("t(1,0)")), Greater);
        assert_eq!(ord("t(1,0)").compare(&ord("t(1,0)+1")), Less);
        assert_eq!(ord("1+1").compare(&ord("1+1+1")), Less);
        assert_eq!(ord("1+1").compare(&ord("1+1")), Equal);
    }

    #[test]
    fn natural_sum_sorts_components() {
        let v = ord("1").natural_sum(&ord("t(1,0)"));
        assert_eq!(v.to_string(), "t(1,0)+1");
        let w = ord("t(1,0)").natural_sum(&ord("1"));
        assert_eq!(v, w);
        assert_eq!(ord("0").natural_sum(&ord("1")), ord("1"));
        assert_eq!(ord("1+1").to_string(), "1+1");
    }

    #[test]
    fn natural_sum_laws_on_small_universe() {
        let univ = enumerate_notations(4, 2);
        for a in &univ {
            assert_eq!(a.natural_sum(&Ordinal::Zero), *a);
            for b in &univ {
                let ab = a.natural_sum(b);
                assert_eq!(ab, b.natural_sum(a), "commutativity for {a}, {b}");
                assert!(ab.is_canonical());
                if !b.is_zero() {
                    // strict monotonicity in the right argument
                    assert_eq!(a.compare(&ab), Ordering::Less, "{a} vs {a}+{b}");
                }
            }
        }
    }

    #[test]
    fn plus_map_examples() {
        assert_eq!(Ordinal::Zero.plus_map(), Ordinal::one());
        assert_eq!(ord("1").plus_map(), ord("t(1)"));
        assert_eq!(ord("t(1,0)").plus_map(), ord("t(t(1),1)"));
        assert_eq!(ord("1+1").plus_map(), ord("t(1)+t(1)"));
        assert_eq!(ord("t(1,0)+1").plus_map(), ord("t(t(1),1)+t(1)"));
        assert_eq!(ord("t(t(1,0),0)").plus_map(), ord("t(t(t(1),1),1)"));
    }

    #[test]
    fn plus_map_embeds_and_leaves_no_zero() {
        fn has_zero_node(v: &Ordinal) -> bool {
            match v {
                Ordinal::Zero => true,
                Ordinal::Sum(ts) => ts
                    .iter()
                    .any(|t| !t.is_atom_one() && t.coeffs.iter().any(has_zero_node)),
            }
        }
        let universe = enumerate_notations(5, 3);
        let mapped: Vec<Ordinal> = universe.iter().map(Ordinal::plus_map).collect();
        for (v, p) in universe.iter().zip(&mapped) {
            assert!(p.is_canonical());
            assert!(!has_zero_node(p), "zero left in {p} (from {v})");
        }
        for (a, pa) in universe.iter().zip(&mapped) {
            for (b, pb) in universe.iter().zip(&mapped) {
                assert_eq!(a.compare(b), pa.compare(pb), "embedding broken at {a}, {b}");
            }
        }
    }

    #[test]
    fn sizes() {
        assert_eq!(ord("0").size(), 1);
        assert_eq!(ord("1").size(), 1);
        assert_eq!(ord("t(1)").size(), 2);
        assert_eq!(ord("t(1,0)").size(), 2);
        assert_eq!(ord("1+1").size(), 2);
        assert_eq!(ord("t(t(1,0))").size(), 3);
        assert_eq!(ord("t(1,1)").size(), 3);
    }

    #[test]
    fn validation_rejects_raw_garbage() {
        let empty_sum = Ordinal::Sum(vec![]);
        assert!(matches!(
            empty_sum.validate(),
            Err(OrdinalError::NonCanonical(_))
        ));
        let leading_zero = Ordinal::Sum(vec![Theta {
            coeffs: vec![Ordinal::Zero, Ordinal::one()],
        }]);
        assert!(matches!(
            leading_zero.validate(),
            Err(OrdinalError::NonCanonical(_))
        ));
        let unsorted = Ordinal::Sum(vec![
            Theta {
                coeffs: vec![Ordinal::Zero],
            },
            Theta {
                coeffs: vec![Ordinal::one(), Ordinal::Zero],
            },
        ]);
        assert!(matches!(
            unsorted.validate(),
            Err(OrdinalError::NonCanonical(_))
        ));
        assert!(unsorted.compare_checked(&Ordinal::Zero).is_err());
        assert!(ord("t(1,0)+1").compare_checked(&ord("1")).is_ok());
    }

    // Counting oracle: the same grammar counted by pure arithmetic over
    // sizes, sharing no code with the enumerator.
    fn oracle_counts(max_nodes: usize, max_len: usize) -> (Vec<u64>, Vec<u64>) {
        // a[s]: nonzero notations of size s; th[s]: theta terms of size s
        let mut a = vec![0u64; max_nodes + 1];
        let mut th = vec![0u64; max_nodes + 1];
        for s in 1..=max_nodes {
            let mut t_count = 0u64;
            if s == 1 {
                t_count += 1; // the atom 1
            }
            for len in 1..=max_len {
                t_count += vectors_count(&a, len, s - 1);
            }
            th[s] = t_count;
            a[s] = t_count + multisets_count(&th, s);
        }
        (a, th)
    }

    // vectors: leading nonzero coefficient, len-1 free slots, total budget
    fn vectors_count(a: &[u64], len: usize, budget: usize) -> u64 {
        let mut total = 0;
        for lead in 1..=budget {
            total += a[lead] * slots_count(a, len - 1, budget - lead);
        }
        total
    }

    fn slots_count(a: &[u64], slots: usize, remaining: usize) -> u64 {
        if slots == 0 {
            return u64::from(remaining == 0);
        }
        let mut total = slots_count(a, slots - 1, remaining); // zero here
        for c in 1..=remaining {
            total += a[c] * slots_count(a, slots - 1, remaining - c);
        }
        total
    }

    // multisets of >= 2 theta terms with given total size: count multisets
    // of each exact shape via a partition recursion over (max part size,
    // remaining, parts used)
    fn multisets_count(th: &[u64], total: usize) -> u64 {
        fn rec(th: &[u64], max_part: usize, remaining: usize, parts: usize) -> u64 {
            if remaining == 0 {
                return u64::from(parts >= 2);
            }
            if max_part == 0 {
                return 0;
            }
            let mut acc = rec(th, max_part - 1, remaining, parts);
            // use j >= 1 copies drawn (with repetition) from the th[max_part] pool
            let n = th[max_part];
            let mut used = 0usize;
            let mut ways = 1u64;
            loop {
                used += 1;
                if used * max_part > remaining {
                    break;
                }
                // multichoose(n, used)
                ways = ways * (n + used as u64 - 1) / used as u64;
                if ways == 0 {
                    break;
                }
                acc += ways * rec(th, max_part - 1, remaining - used * max_part, parts + used);
            }
            acc
        }
        rec(th, total.saturating_sub(1), total, 0)
    }

    #[test]
    fn enumerate_smallest_universes_are_frozen() {
        let u11: Vec<String> = enumerate_notations(1, 1).iter().map(|v| v.to_string()).collect();
        assert_eq!(u11, vec!["0", "1"]);
        let u22: Vec<String> = enumerate_notations(2, 2).iter().map(|v| v.to_string()).collect();
        assert_eq!(u22, vec!["0", "1", "t(1)", "t(1,0)", "1+1"]);
        // with room for length-3 vectors, t(1,0,0) joins at size 2
        let u23: HashSet<String> =
            enumerate_notations(2, 3).iter().map(|v| v.to_string()).collect();
        assert!(u23.contains("t(1,0,0)"));
        assert_eq!(u23.len(), 6);
    }

    #[test]
    fn enumerate_matches_counting_oracle() {
        for (max_nodes, max_len) in [(4, 1), (4, 2), (5, 2), (5, 3), (6, 3)] {
            let (a, _) = oracle_counts(max_nodes, max_len);
            let expected: u64 = 1 + a.iter().sum::<u64>();
            let univ = enumerate_notations(max_nodes, max_len);
            assert_eq!(univ.len() as u64, expected, "count at ({max_nodes},{max_len})");
            let distinct: HashSet<&Ordinal> = univ.iter().collect();
            assert_eq!(distinct.len(), univ.len(), "duplicates at ({max_nodes},{max_len})");
            for v in &univ {
                assert!(v.is_canonical(), "non-canonical {v}");
                assert!(v.size() <= max_nodes);
                assert!(max_vec_len(v) <= max_len);
            }
        }
    }

    fn max_vec_len(v: &Ordinal) -> usize {
        match v {
            Ordinal::Zero => 0,
            Ordinal::Sum(ts) => ts
                .iter()
                .map(|t| {
                    t.coeffs
                        .len()
                        .max(t.coeffs.iter().map(max_vec_len).max().unwrap_or(0))
                })
                .max()
                .unwrap_or(0),
        }
    }

    #[test]
    fn enumerate_counts_are_monotone() {
        let mut prev_nodes = 0;
        for n in 1..=5 {
            let c = enumerate_notations(n, 2).len();
            assert!(c >= prev_nodes);
            prev_nodes = c;
        }
        let mut prev_len = 0;
        for l in 1..=3 {
            let c = enumerate_notations(4, l).len();
            assert!(c >= prev_len);
            prev_len = c;
        }
    }

    fn arb_ordinal() -> impl Strategy<Value = Ordinal> {
        let leaf = prop_oneof![Just(Ordinal::Zero), Just(Ordinal::one())];
        leaf.prop_recursive(3, 16, 3, |inner| {
            prop_oneof![
                proptest::collection::vec(inner.clone(), 1..=3).prop_map(|mut cs| {
                    // make the leading coefficient nonzero unless it is the atom
                    if cs.iter().all(Ordinal::is_zero) {
                        Ordinal::one()
                    } else {
                        while cs[0].is_zero() {
                            cs.rotate_left(1);
                        }
                        Ordinal::theta(cs)
                    }
                }),
                (inner.clone(), inner).prop_map(|(a, b)| a.natural_sum(&b)),
            ]
        })
    }

    proptest! {
        #[test]
        fn constructors_only_build_canonical_values(v in arb_ordinal()) {
            prop_assert!(v.is_canonical());
        }

        #[test]
        fn parse_inverts_display(v in arb_ordinal()) {
            prop_assert_eq!(ord(&v.to_string()), v);
        }

        #[test]
        fn natural_sum_is_associative(a in arb_ordinal(), b in arb_ordinal(), c in arb_ordinal()) {
            prop_assert_eq!(
                a.natural_sum(&b).natural_sum(&c),
                a.natural_sum(&b.natural_sum(&c))
            );
        }

        #[test]
        fn compare_is_antisymmetric(a in arb_ordinal(), b in arb_ordinal()) {
            prop_assert_eq!(a.compare(&b), b.compare(&a).reverse());
            prop_assert_eq!(a.compare(&b) == Ordering::Equal, a == b);
        }
    }
}
