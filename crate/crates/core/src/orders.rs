//! Order plumbing: the oracle interface, lexicographic and two-element
//! multiset extensions, and a budgeted well-founded-part computation over
//! finite universes.

use std::collections::{BTreeMap, BTreeSet};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OrderError {
    #[error("tuple lengths differ: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
}

/// A decidable strict order (plus its equality) over some carrier.
pub trait OrderOracle<T: ?Sized> {
    fn lt(&self, a: &T, b: &T) -> bool;
    fn eq(&self, a: &T, b: &T) -> bool;
    fn le(&self, a: &T, b: &T) -> bool {
        self.eq(a, b) || self.lt(a, b)
    }
}

impl<T: ?Sized, O: OrderOracle<T> + ?Sized> OrderOracle<T> for &O {
    fn lt(&self, a: &T, b: &T) -> bool {
        (**self).lt(a, b)
    }
    fn eq(&self, a: &T, b: &T) -> bool {
        (**self).eq(a, b)
    }
}

impl<T: ?Sized, O: OrderOracle<T> + ?Sized> OrderOracle<T> for Box<O> {
    fn lt(&self, a: &T, b: &T) -> bool {
        (**self).lt(a, b)
    }
    fn eq(&self, a: &T, b: &T) -> bool {
        (**self).eq(a, b)
    }
}

/// Wrap a strict-order predicate; equality stays structural.
pub struct FnOrder<F>(pub F);

impl<T: PartialEq, F: Fn(&T, &T) -> bool> OrderOracle<T> for FnOrder<F> {
    fn lt(&self, a: &T, b: &T) -> bool {
        (self.0)(a, b)
    }
    fn eq(&self, a: &T, b: &T) -> bool {
        a == b
    }
}

/// Lexicographic extension to equal-length tuples, index 0 most significant.
pub fn lex_lt<T>(base: &impl OrderOracle<T>, a: &[T], b: &[T]) -> Result<bool, OrderError> {
    if a.len() != b.len() {
        return Err(OrderError::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    for (x, y) in a.iter().zip(b.iter()) {
        if !base.eq(x, y) {
            return Ok(base.lt(x, y));
        }
    }
    Ok(false)
}

/// Two-element multiset comparison in closed form: either the elements of
/// `t` match one-to-one against `s` with at least one strict drop, or both
/// fall below a single element of `s`.  The second clause matters: {1,1}
/// sits below {0,2} with no one-to-one matching.
pub fn pair_multiset_lt<T>(base: &impl OrderOracle<T>, t: (&T, &T), s: (&T, &T)) -> bool {
    let (t0, t1) = t;
    let (s0, s1) = s;
    (base.lt(t0, s0) && base.le(t1, s1))
        || (base.lt(t0, s1) && base.le(t1, s0))
        || (base.lt(t1, s0) && base.le(t0, s1))
        || (base.lt(t1, s1) && base.le(t0, s0))
        || (base.lt(t0, s0) && base.lt(t1, s0))
        || (base.lt(t0, s1) && base.lt(t1, s1))
}

/// Reference multiset comparison for arbitrary sizes: cancel equal elements
/// pairwise, then the right remainder is nonempty and every left survivor
/// sits strictly below some right survivor.
pub fn dm_multiset_lt<T>(base: &impl OrderOracle<T>, a: &[T], b: &[T]) -> bool {
    let mut used = vec![false; b.len()];
    let mut a_rem: Vec<&T> = Vec::new();
    for x in a {
        match b
            .iter()
            .enumerate()
            .find(|(i, y)| !used[*i] && base.eq(x, y))
        {
            Some((i, _)) => used[i] = true,
            None => a_rem.push(x),
        }
    }
    let b_rem: Vec<&T> = b
        .iter()
        .enumerate()
        .filter(|(i, _)| !used[*i])
        .map(|(_, y)| y)
        .collect();
    !b_rem.is_empty() && a_rem.iter().all(|x| b_rem.iter().any(|y| base.lt(x, y)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum UnknownReason {
    BudgetExhausted,
    /// The node, or something below it, has a predecessor outside the
    /// examined universe.
    EscapedPredecessor,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonAccessWitness<N> {
    /// Consecutive entries are predecessor-related, and the first entry is
    /// a predecessor of the last.
    Cycle(Vec<N>),
    /// A predecessor already classified non-accessible.
    BadPredecessor(N),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NodeClass<N> {
    /// In the well-founded part; rank is 1 + the maximum predecessor rank,
    /// 0 for nodes with no predecessors.
    Accessible { rank: u64 },
    NonAccessible { witness: NonAccessWitness<N> },
    Unknown { reason: UnknownReason },
}

#[derive(Debug, Clone)]
pub struct WfpResult<N: Ord> {
    pub classes: BTreeMap<N, NodeClass<N>>,
    /// Nodes whose predecessor lists were expanded.
    pub visited: usize,
}

impl<N: Ord> WfpResult<N> {
    pub fn accessible(&self) -> BTreeSet<&N> {
        self.classes
            .iter()
            .filter(|(_, c)| matches!(c, NodeClass::Accessible { .. }))
            .map(|(n, _)| n)
            .collect()
    }

    pub fn all_accessible(&self) -> bool {
        self.classes
            .values()
            .all(|c| matches!(c, NodeClass::Accessible { .. }))
    }

    pub fn rank(&self, n: &N) -> Option<u64> {
        match self.classes.get(n) {
            Some(NodeClass::Accessible { rank }) => Some(*rank),
            _ => None,
        }
    }
}

struct Frame<N> {
    node: N,
    preds: Vec<N>,
    next: usize,
    escaped: bool,
    bad_pred: Option<N>,
    unknown: Option<UnknownReason>,
    rank: u64,
}

/// Classify every universe node as accessible (with rank), non-accessible
/// (on or above a cycle), or unknown.  At most `budget` nodes have their
/// predecessors expanded; everything unresolved beyond that is unknown.
/// A predecessor outside the universe makes a node unknown rather than
/// guessing, but a cycle below it still wins: cycles genuinely refute
/// accessibility.  Deterministic: nodes and predecessor lists are processed
/// in sorted order.
pub fn wfp_compute<N, F>(predecessors: F, universe: &BTreeSet<N>, budget: usize) -> WfpResult<N>
where
    N: Ord + Clone,
    F: Fn(&N) -> Vec<N>,
{
    let mut classes: BTreeMap<N, NodeClass<N>> = BTreeMap::new();
    let mut in_progress: BTreeSet<N> = BTreeSet::new();
    let mut visited = 0usize;

    let expand = |n: &N, visited: &mut usize| -> Vec<N> {
        *visited += 1;
        let mut ps = predecessors(n);
        ps.sort();
        ps.dedup();
        ps
    };

    for root in universe {
        if classes.contains_key(root) {
            continue;
        }
        if visited >= budget {
            classes.insert(
                root.clone(),
                NodeClass::Unknown {
                    reason: UnknownReason::BudgetExhausted,
                },
            );
            continue;
        }
        let preds = expand(root, &mut visited);
        in_progress.insert(root.clone());
        let mut stack = vec![Frame {
            node: root.clone(),
            preds,
            next: 0,
            escaped: false,
            bad_pred: None,
            unknown: None,
            rank: 0,
        }];

        while let Some(top) = stack.last_mut() {
            // finalized early as a cycle member: unwind
            if classes.contains_key(&top.node) {
                in_progress.remove(&top.node);
                stack.pop();
                continue;
            }
            if top.next < top.preds.len() {
                let p = top.preds[top.next].clone();
                if !universe.contains(&p) {
                    top.escaped = true;
                    top.next += 1;
                    continue;
                }
                if let Some(c) = classes.get(&p) {
                    match c {
                        NodeClass::Accessible { rank } => {
                            top.rank = top.rank.max(rank + 1);
                        }
                        NodeClass::NonAccessible { .. } => {
                            if top.bad_pred.is_none() {
                                top.bad_pred = Some(p.clone());
                            }
                        }
                        NodeClass::Unknown { reason } => {
                            if top.unknown.is_none() {
                                top.unknown = Some(reason.clone());
                            }
                        }
                    }
                    top.next += 1;
                    continue;
                }
                if in_progress.contains(&p) {
                    // back edge: the stack suffix from p onward is a cycle
                    let pos = stack
                        .iter()
                        .position(|f| f.node == p)
                        .expect("in-progress node is on the stack");
                    let cycle: Vec<N> = stack[pos..].iter().map(|f| f.node.clone()).collect();
                    for n in &cycle {
                        in_progress.remove(n);
                        classes.insert(
                            n.clone(),
                            NodeClass::NonAccessible {
                                witness: NonAccessWitness::Cycle(cycle.clone()),
                            },
                        );
                    }
                    continue;
                }
                if visited >= budget {
                    classes.insert(
                        p,
                        NodeClass::Unknown {
                            reason: UnknownReason::BudgetExhausted,
                        },
                    );
                    continue;
                }
                let preds = expand(&p, &mut visited);
                in_progress.insert(p.clone());
                stack.push(Frame {
                    node: p,
                    preds,
                    next: 0,
                    escaped: false,
                    bad_pred: None,
                    unknown: None,
                    rank: 0,
                });
                continue;
            }
            // all predecessors examined
            let f = stack.pop().expect("frame");
            in_progress.remove(&f.node);
            let class = if let Some(p) = f.bad_pred {
                NodeClass::NonAccessible {
                    witness: NonAccessWitness::BadPredecessor(p),
                }
            } else if f.escaped {
                NodeClass::Unknown {
                    reason: UnknownReason::EscapedPredecessor,
                }
            } else if let Some(reason) = f.unknown {
                NodeClass::Unknown { reason }
            } else {
                NodeClass::Accessible { rank: f.rank }
            };
            classes.insert(f.node, class);
        }
    }

    WfpResult { classes, visited }
}

/// Fixpoint oracle for the well-founded part: keep adding nodes whose
/// predecessors (under the edge list, read as `(pred, node)`) were all
/// added already.
pub fn accessible_brute<N: Ord + Clone>(nodes: &BTreeSet<N>, edges: &[(N, N)]) -> BTreeSet<N> {
    let mut acc: BTreeSet<N> = BTreeSet::new();
    loop {
        let mut changed = false;
        for n in nodes {
            if !acc.contains(n)
                && edges
                    .iter()
                    .filter(|(_, tgt)| tgt == n)
                    .all(|(p, _)| acc.contains(p))
            {
                acc.insert(n.clone());
                changed = true;
            }
        }
        if !changed {
            return acc;
        }
    }
}
