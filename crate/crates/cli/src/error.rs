use std::fmt;

use azumaya_core::Error;
use serde_json::{json, Value};

/// Everything a command can fail with.
#[derive(Debug, Clone, PartialEq)]
pub enum CliError {
    /// The input could not be read or does not have the expected shape.
    Malformed(String),
    /// The input was well formed but the computation refused it.
    Domain(Error),
}

impl CliError {
    /// 1 for domain errors, 2 for malformed input.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(_) => 1,
            CliError::Malformed(_) => 2,
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            CliError::Malformed(_) => "malformed_input",
            CliError::Domain(e) => domain_code(e),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": self.code(), "detail": self.to_string() })
    }
}

pub fn malformed(detail: impl Into<String>) -> CliError {
    CliError::Malformed(detail.into())
}

/// Stable snake_case name of a core error.
fn domain_code(e: &Error) -> &'static str {
    match e {
        Error::DimensionMismatch { .. } => "dimension_mismatch",
        Error::NotSquare { .. } => "not_square",
        Error::SpectrumNotSplit { .. } => "spectrum_not_split",
        Error::RootSearchLimit => "root_search_limit",
        Error::ZeroPolynomial => "zero_polynomial",
        Error::ArityMismatch { .. } => "arity_mismatch",
        Error::RankMismatch { .. } => "rank_mismatch",
        Error::NotUnivariate { .. } => "not_univariate",
        Error::UnknownVariable { .. } => "unknown_variable",
        Error::SolvabilityViolated => "solvability_violated",
        Error::NonConstantA => "non_constant_a",
        Error::NotASolution => "not_a_solution",
        Error::InvalidHiggsData(_) => "invalid_higgs_data",
        Error::DeformationInvariantBroken => "deformation_invariant_broken",
        Error::DegreeCapTooSmall { .. } => "degree_cap_too_small",
        Error::InvalidModulus => "invalid_modulus",
        Error::ZeroClass => "zero_class",
        Error::GeometryMismatch => "geometry_mismatch",
        Error::EmptyRankNonzeroClass => "empty_rank_nonzero_class",
        Error::InvalidComponent(_) => "invalid_component",
        Error::MalformedProfile(_) => "malformed_profile",
        Error::InvalidPartition => "invalid_partition",
        Error::InvalidSupport(_) => "invalid_support",
        Error::NonCommutingImages { .. } => "non_commuting_images",
        Error::IncompatibleForms(_) => "incompatible_forms",
        Error::ParseScalar(_) => "parse_scalar",
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(detail) => f.write_str(detail),
            CliError::Domain(e) => write!(f, "{}", e),
        }
    }
}

impl std::error::Error for CliError {}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}
