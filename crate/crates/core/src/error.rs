use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("m = {m} and n = {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },
    #[error("knot type entries must be positive, got ({m}, {n})")]
    NonPositive { m: i64, n: i64 },
    #[error("knot type entry exceeds 10^6: ({m}, {n})")]
    TooLarge { m: i64, n: i64 },
    #[error("{a} is not invertible modulo {modulus}")]
    NotInvertible { a: i64, modulus: i64 },
    #[error("congruences x = {r1} (mod {m1}) and x = {r2} (mod {m2}) are inconsistent")]
    Inconsistent { r1: i64, m1: i64, r2: i64, m2: i64 },
    #[error("({k}, {kp}) is not an irreducible component of the ({m}, {n}) torus knot")]
    InvalidComponent { m: u64, n: u64, k: i64, kp: i64 },
    #[error("parameter t must be nonzero")]
    ZeroParameter,
    #[error("matrix is not unimodular: |det - 1| = {defect:e}")]
    NotUnimodular { defect: f64 },
    #[error("no unimodular sample with |a| >= 1e-6 after {attempts} attempts")]
    SamplingFailed { attempts: usize },
    #[error("relation A^m = B^n violated: defect {defect:e} exceeds {tol:e}")]
    RelationViolated { defect: f64, tol: f64 },
    #[error("representation is irreducible")]
    NotReducible,
    #[error("representation is reducible")]
    NotIrreducible,
    #[error("eigenvalue {re} + {im}i is not a root of unity of the expected order")]
    EigenvalueNotRootOfUnity { re: f64, im: f64 },
    #[error("intersection abscissa s = {s} lies outside the window [{min}, {max}]")]
    WindowTooSmall { s: f64, min: f64, max: f64 },
    #[error("count mismatch for {what}: expected {expected}, found {found}")]
    CountMismatch {
        what: &'static str,
        expected: u64,
        found: u64,
    },
    #[error("invalid word letter {0:?} (expected one of x, X, y, Y)")]
    InvalidWord(char),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
