use alloc::string::String;
use core::fmt;

/// Errors raised by the algebra in this crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands have incompatible shapes. Carries the operation name and both shapes.
    DimensionMismatch { op: &'static str, left: (usize, usize), right: (usize, usize) },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// A polynomial has an irreducible factor of degree at least 2 over Q(i).
    /// Carries the degree of the part that could not be split.
    SpectrumNotSplit { residual_degree: usize },
    /// No usable auxiliary prime was found for the root search.
    RootSearchLimit,
    /// The zero polynomial has no root multiset.
    ZeroPolynomial,
    /// Tuple length does not match the number of declared variables.
    ArityMismatch { expected: usize, found: usize },
    /// A tuple of matrices does not all share one rank.
    RankMismatch { expected: usize, found: usize },
    /// A univariate (single matrix) point was required.
    NotUnivariate { arity: usize },
    /// A relator or form refers to more variables than declared.
    UnknownVariable { index: usize },
    /// `(a1 - a4)^2 + 4 a2 a3` is not identically zero.
    SolvabilityViolated,
    /// The closed-form fundamental solutions need constant entries in `A`.
    NonConstantA,
    /// The supplied `B` has a nonzero ODE residual.
    NotASolution,
    /// Higgsing data must be 2x2 with nonzero lambda.
    InvalidHiggsData(&'static str),
    /// The deformation broke the characteristic polynomial invariant.
    DeformationInvariantBroken,
    /// Weyl truncation needs a degree cap of at least 2.
    DegreeCapTooSmall { cap: usize },
    /// The torus modulus must have positive imaginary part.
    InvalidModulus,
    /// The zero homology class has no direction.
    ZeroClass,
    /// Amalgamation of morphisms into different tori.
    GeometryMismatch,
    /// A surrogate class with `r = 0` but nonzero `(p, q)`.
    EmptyRankNonzeroClass,
    /// Degenerate morphism component (zero degree or zero fiber rank).
    InvalidComponent(&'static str),
    /// Orbit profile is not an alternating interval/junction cycle.
    MalformedProfile(String),
    /// A partition is not weakly decreasing with positive parts.
    InvalidPartition,
    /// Support-length data with a repeated point or a zero length.
    InvalidSupport(String),
    /// Images of a morphism to an affine target do not commute.
    NonCommutingImages { first: usize, second: usize },
    /// Forms or matrices over incompatible ranks or degrees.
    IncompatibleForms(&'static str),
    /// A scalar could not be parsed.
    ParseScalar(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { op, left, right } => {
                write!(f, "dimension mismatch in {}: {}x{} against {}x{}", op, left.0, left.1, right.0, right.1)
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "expected a square matrix, got {}x{}", rows, cols)
            }
            Error::SpectrumNotSplit { residual_degree } => {
                write!(f, "polynomial does not split over Q(i); unsplit part has degree {}", residual_degree)
            }
            Error::RootSearchLimit => write!(f, "no usable auxiliary prime below the search limit"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::ArityMismatch { expected, found } => {
                write!(f, "expected {} matrices, found {}", expected, found)
            }
            Error::RankMismatch { expected, found } => {
                write!(f, "expected rank {}, found {}", expected, found)
            }
            Error::NotUnivariate { arity } => {
                write!(f, "expected a single matrix, found a {}-tuple", arity)
            }
            Error::UnknownVariable { index } => write!(f, "variable index {} not declared", index),
            Error::SolvabilityViolated => write!(f, "(a1-a4)^2 + 4 a2 a3 is not zero"),
            Error::NonConstantA => write!(f, "closed-form solutions require constant A"),
            Error::NotASolution => write!(f, "B does not satisfy lambda dB/dz + [A,B] = 0"),
            Error::InvalidHiggsData(what) => write!(f, "invalid Higgsing data: {}", what),
            Error::DeformationInvariantBroken => {
                write!(f, "characteristic polynomial of B differs from that of B(0)")
            }
            Error::DegreeCapTooSmall { cap } => write!(f, "degree cap {} is below 2", cap),
            Error::InvalidModulus => write!(f, "tau must have positive imaginary part"),
            Error::ZeroClass => write!(f, "zero homology class has no direction"),
            Error::GeometryMismatch => write!(f, "morphisms target different tori"),
            Error::EmptyRankNonzeroClass => write!(f, "rank 0 with nonzero (p,q)"),
            Error::InvalidComponent(what) => write!(f, "invalid component: {}", what),
            Error::MalformedProfile(what) => write!(f, "malformed profile: {}", what),
            Error::InvalidPartition => write!(f, "invalid partition"),
            Error::InvalidSupport(what) => write!(f, "invalid support data: {}", what),
            Error::NonCommutingImages { first, second } => {
                write!(f, "images {} and {} do not commute", first, second)
            }
            Error::IncompatibleForms(what) => write!(f, "incompatible forms: {}", what),
            Error::ParseScalar(s) => write!(f, "cannot parse scalar {:?}", s),
        }
    }
}

pub type Result<T> = core::result::Result<T, Error>;
