use alloc::string::String;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("polygon is degenerate (zero volume)")]
    DegeneratePolygon,
    #[error("empty point set")]
    EmptyInput,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("input is a monomial")]
    MonomialInput,
    #[error("degenerate resultant input: {0}")]
    DegenerateInput(&'static str),
    #[error("parametrization is constant")]
    ConstantMap,
    #[error("numerator and denominator share a root")]
    SharedRoot,
    #[error("{what} out of range: {detail}")]
    RangeError { what: &'static str, detail: String },
    #[error("family V has no parametrization")]
    NoParametrization,
    #[error("hypothesis failure: {0}")]
    HypothesisFailure(Hypothesis),
    #[error("k must be nonzero")]
    ZeroK,
    #[error("linear system is empty")]
    EmptySystem,
    #[error("precondition failed: {0}")]
    PreconditionFailure(String),
    #[error("empty list")]
    EmptyList,
    #[error("no entries left after filtering")]
    EmptyAfterFilter,
    #[error("weights {0}, {1} are not coprime")]
    NotCoprime(u64, u64),
    #[error("Minkowski decomposition search exceeds {0} edge splittings")]
    DecompositionLimit(u64),
}

/// Hypotheses of the multiplicity lemma for parametrized curves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Hypothesis {
    /// `gcd(f1, f2) = 1`
    Coprime,
    /// `f1 - f2 = f4 - f3`
    DifferenceIdentity,
    /// `deg(f1 - f2)` equals the maximal degree
    DegreeOfDifference,
}

impl core::fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(match self {
            Hypothesis::Coprime => "gcd(f1, f2) = 1",
            Hypothesis::DifferenceIdentity => "f1 - f2 = f4 - f3",
            Hypothesis::DegreeOfDifference => "deg(f1 - f2) = m",
        })
    }
}
