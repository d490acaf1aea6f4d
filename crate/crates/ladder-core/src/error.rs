//! One error type for the whole crate. Variants carry element labels rather
//! than raw indices so failures read back in terms of the offending input.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong while building or interrogating the finite
/// structures in this crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A label occurs twice in a poset's element list.
    DuplicateLabel { label: String },
    /// A relation endpoint is out of range or names an unknown element.
    UnknownElement { what: String },
    /// Antisymmetry fails: two distinct elements below each other.
    Antisymmetry { a: String, b: String },
    /// A raw order matrix is not reflexive/transitive where required.
    NotAPartialOrder { reason: String },
    /// A poset expected to be a lattice is missing a meet or a join.
    NoMeet { a: String, b: String },
    /// See [`Error::NoMeet`].
    NoJoin { a: String, b: String },
    /// The empty poset where a lattice is required.
    EmptyLattice,
    /// A norm is not max-compatible on the witnessed pair.
    NormNotCompatible { a: String, b: String },
    /// Norm table length does not match the element count.
    NormLengthMismatch { expected: usize, got: usize },
    /// A transitive norm (range an initial segment) was required.
    NormNotTransitive,
    /// The projection set `{ y <= x : norm(y) <= xi }` is empty.
    EmptyProjection { x: String, xi: usize },
    /// The projection set has no largest element (impossible for valid norms;
    /// kept as a defensive check).
    NoLargestProjection { x: String, xi: usize },
    /// An enumeration must be a permutation of the carrier.
    NotAPermutation,
    /// A sequence of sets fails the increasing-ideal-chain requirements.
    BadIdealChain { index: usize, reason: String },
    /// A subset expected to be pairwise comparable is not.
    NotAChain { a: String, b: String },
    /// A subset expected to be cofinal misses the witnessed element.
    NotCofinal { missed: String },
    /// A subset expected to be a preskeleton is not.
    NotAPreskeleton { reason: String },
    /// A bounded search for an extension meeting a dense target failed.
    NotDenseWithinBound { target: String },
    /// A parameter is outside its admissible range.
    BadParameter { what: String },
    /// An element-to-element map fails a structural requirement.
    BadMap { reason: String },
    /// A directed system's paths disagree between the witnessed objects.
    CommutationFailure { src: usize, dst: usize, detail: String },
    /// A directed system has no unique sink to serve as its limit.
    NoLimitObject,
    /// A verified postcondition failed; `check` names the violated claim.
    Verification { check: &'static str, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DuplicateLabel { label } => write!(f, "duplicate element label {label:?}"),
            Error::UnknownElement { what } => write!(f, "unknown element: {what}"),
            Error::Antisymmetry { a, b } => {
                write!(f, "antisymmetry violated: {a} and {b} lie below each other")
            }
            Error::NotAPartialOrder { reason } => write!(f, "not a partial order: {reason}"),
            Error::NoMeet { a, b } => write!(f, "no meet for {a} and {b}"),
            Error::NoJoin { a, b } => write!(f, "no join for {a} and {b}"),
            Error::EmptyLattice => write!(f, "a lattice must have at least one element"),
            Error::NormNotCompatible { a, b } => {
                write!(f, "norm of {a} v {b} is not the maximum of the two norms")
            }
            Error::NormLengthMismatch { expected, got } => {
                write!(f, "norm table has {got} entries for {expected} elements")
            }
            Error::NormNotTransitive => {
                write!(f, "norm range is not an initial segment of the naturals")
            }
            Error::EmptyProjection { x, xi } => {
                write!(f, "no element below {x} has norm at most {xi}")
            }
            Error::NoLargestProjection { x, xi } => {
                write!(f, "projection of {x} at {xi} has no largest element")
            }
            Error::NotAPermutation => write!(f, "enumeration is not a permutation of the carrier"),
            Error::BadIdealChain { index, reason } => {
                write!(f, "ideal chain invalid at index {index}: {reason}")
            }
            Error::NotAChain { a, b } => write!(f, "{a} and {b} are incomparable in a chain"),
            Error::NotCofinal { missed } => {
                write!(f, "subset is not cofinal: nothing lies above {missed}")
            }
            Error::NotAPreskeleton { reason } => write!(f, "not a preskeleton: {reason}"),
            Error::NotDenseWithinBound { target } => {
                write!(f, "no extension meets target {target} within the search bound")
            }
            Error::BadParameter { what } => write!(f, "bad parameter: {what}"),
            Error::BadMap { reason } => write!(f, "bad map: {reason}"),
            Error::CommutationFailure { src, dst, detail } => {
                write!(f, "paths from object {src} to object {dst} disagree: {detail}")
            }
            Error::NoLimitObject => write!(f, "directed system has no unique top object"),
            Error::Verification { check, detail } => {
                write!(f, "verified claim {check:?} failed: {detail}")
            }
        }
    }
}

impl core::error::Error for Error {}
