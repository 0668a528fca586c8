use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("invalid circle: discriminant |B|^2 - AD = {0} is not positive")]
    InvalidCircle(f64),
    #[error("singular map: ad - bc = 0")]
    SingularMap,
    #[error("degenerate triple: points are not distinct")]
    DegenerateTriple,
    #[error("undefined fixed-point set: map is the identity")]
    UndefinedFixedPoints,
    #[error("fixed points are only defined here for holomorphic maps")]
    NotHolomorphic,
    #[error("no translation length: map is {0}")]
    NoTranslationLength(&'static str),
    #[error("vector is not a unit spacelike normal: <e,e> = {0}")]
    NotUnitSpacelike(f64),
    #[error("not a discrete quadrilateral datum: 4cos^2(pi/n) - (s-1)(t-1) = {defect} < 0")]
    NotDiscrete { defect: f64 },
    #[error("invalid quadrilateral parameters: {0}")]
    InvalidParameters(String),
    #[error("solver did not converge after {iterations} iterations (residual {residual:e})")]
    SolverDiverged { iterations: usize, residual: f64 },
    #[error("exotic circle degenerates to limit set: datum is Fuchsian")]
    FuchsianDegenerate,
    #[error("outside geometric regime: {0}")]
    OutsideRegime(String),
    #[error("dynamic range exceeded: {0}")]
    DynamicRange(String),
    #[error("cannot certify closure of a truncated orbit")]
    CannotCertifyClosure,
    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),
    #[error("invalid orbit configuration: {0}")]
    InvalidConfig(String),
    #[error("invalid scene: {0}")]
    InvalidScene(String),
}

pub type Result<T> = std::result::Result<T, Error>;
