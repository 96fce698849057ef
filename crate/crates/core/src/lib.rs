//! A workbench for simplification orders on ground terms.
//!
//! The pieces: additively closed ordinal notations below ϑ(Ω^(k+1)) with
//! their comparison and natural sum ([`ordinal`]), ground terms over finite
//! signatures ([`term`]), order extension combinators and a bounded
//! well-founded-part engine ([`orders`]), the denotation of terms over the
//! signature F_k as notations together with its inverse construction
//! ([`embed`]), and checkers that certify the conditions a termination
//! order has to satisfy on a bounded universe ([`check`]).

pub mod check;
pub mod embed;
pub mod ordinal;
pub mod orders;
pub mod term;

pub use check::{
    check_decomposition_condition, check_lifting_condition, check_order_properties,
    check_subterm_condition, lex_arg_orders, lpo_lt, search_descending_chain, ArgOrderEntry,
    ArgOrders, CheckError, CheckStatus, ConditionId, ConditionReport, LexTupleOrder, Lpo,
    Precedence, Witness,
};
pub use embed::{
    arg_order, arg_orders, denote, term_of, theta_order_lt, ArgOrderKind, EmbedError,
    EmbeddingContext, ThetaArgOrder, ThetaOrder,
};
pub use ordinal::{enumerate_notations, Ordinal, OrdinalError, Theta};
pub use orders::{
    accessible_brute, dm_multiset_lt, lex_lt, pair_multiset_lt, wfp_compute, FnOrder, NodeClass,
    NonAccessWitness, OrderError, OrderOracle, UnknownReason, WfpResult,
};
pub use term::{enumerate_terms, FunctionSymbol, Signature, Term, TermError};
