//! Crate-wide error type.
//!
//! Two families of failure are kept apart throughout the crate: structural
//! defects of the input (wrong dimensions, out-of-range indices, unparsable
//! documents) and mathematical checks that a well-formed input simply fails
//! (a table that is not a group, a non-central kappa, a parameter triple
//! whose constants depend on the base point). Both end up here; callers such
//! as the CLI map them to different exit codes.

use crate::group::{Diagnostics, Elem};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported group family: {0}")]
    UnsupportedFamily(String),

    #[error("order {order} exceeds the construction bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("order {order} is above the exhaustive-search bound {bound}; raise the bound explicitly to override")]
    ExhaustiveBound { order: usize, bound: usize },

    #[error("malformed table: {0}")]
    MalformedTable(String),

    #[error("group axioms fail: {0}")]
    InvalidGroup(Diagnostics),

    #[error("carrier size mismatch: {left} vs {right}")]
    CarrierMismatch { left: usize, right: usize },

    #[error("element index {index} out of range for order {order}")]
    ElementRange { index: usize, order: usize },

    #[error("kappa = {kappa} is not central: it does not commute with {witness}")]
    KappaNotCentral { kappa: Elem, witness: Elem },

    #[error("sigma row {row} is not a permutation")]
    SigmaRowNotPermutation { row: usize },

    #[error("addition is not associative: witness {witness:?}")]
    AdditionNotAssociative { witness: (Elem, Elem, Elem) },

    #[error("derived additive neutral is not unique: candidates {candidates:?}")]
    NeutralNotUnique { candidates: Vec<Elem> },

    #[error("left distributivity fails at (a, b, c) = {witness:?}")]
    NotDistributive { witness: (Elem, Elem, Elem) },

    #[error("{which} is not constant: a = {a1} gives {v1}, a = {a2} gives {v2}")]
    NonConstant {
        which: &'static str,
        a1: Elem,
        a2: Elem,
        v1: Elem,
        v2: Elem,
    },

    #[error("element {z} is not right-distributive")]
    NotRightDistributive { z: Elem },

    #[error("near brace is not skew (additive neutral differs from the multiplicative one)")]
    NotSkew,

    #[error("not a brace: {0}")]
    NotBrace(&'static str),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("reciprocal of a value with zero modulus")]
    ZeroReciprocal,

    #[error("not a carrier member: {0}")]
    NotMember(String),

    #[error("{which} is not constant: a = {a1} gives {v1}, a = {a2} gives {v2}")]
    NonConstantValue {
        which: &'static str,
        a1: String,
        a2: String,
        v1: String,
        v2: String,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("expected a \"{expected}\" document, found \"{found}\"")]
    WrongKind {
        expected: &'static str,
        found: String,
    },
}
