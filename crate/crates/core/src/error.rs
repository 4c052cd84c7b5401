use thiserror::Error;

/// Errors reported by the library surface.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A word was given a repeated letter.
    #[error("letters must be pairwise distinct: {0} occurs twice")]
    RepeatedLetter(u64),

    /// A sequence of letters is not a permutation of 1..=n.
    #[error("letters do not form a permutation of 1..={0}")]
    NotAPermutation(usize),

    /// Enumeration of S_n was requested beyond the configured cap.
    #[error("enumeration of S_{n} exceeds the configured maximum n = {max_n}")]
    EnumerationLimit { n: usize, max_n: usize },

    /// Index k outside 0..n for a table entry.
    #[error("descent index k = {k} is out of range for n = {n}")]
    IndexOutOfRange { n: usize, k: isize },

    /// No closed form is available for this t.
    #[error("no closed form for t = {t} (supported: t = 1, t = 2, or t >= n-1 by enumeration)")]
    ClosedFormUnavailable { t: usize },

    /// The zero polynomial has no Sturm chain or certificate.
    #[error("the zero polynomial is not admitted here")]
    ZeroPolynomial,

    /// reverse() was asked for a declared degree below the actual degree.
    #[error("declared degree {declared} is below the actual degree {actual}")]
    DegreeTooSmall { declared: usize, actual: usize },

    /// An operation required a squarefree polynomial.
    #[error("polynomial is not squarefree")]
    NotSquarefree,

    /// Interlacing requires deg q = deg p + 1.
    #[error("degree mismatch: expected deg q = deg p + 1, got deg p = {p}, deg q = {q}")]
    InterlacingDegrees { p: usize, q: usize },

    /// roots_same_sign was called on a certificate that is not real-rooted.
    #[error("certificate is not real-rooted")]
    NotRealRooted,

    /// A multiplier sequence is too short for the polynomial it is applied to.
    #[error("multiplier sequence of order {order} cannot act on degree {degree}")]
    SequenceOrderTooSmall { order: usize, degree: usize },

    /// The hypergeometric series does not terminate.
    #[error("series parameter a = {0} is not a nonpositive integer; the series does not terminate")]
    NonTerminating(String),

    /// A Pochhammer denominator (c)_k vanishes within the summation range.
    #[error("lower parameter {0} makes a denominator (c)_k vanish within the sum")]
    VanishingDenominator(String),

    /// A staged certification aborted.
    #[error("pipeline for n = {n} failed at stage '{stage}': {reason}")]
    PipelineStage {
        n: usize,
        stage: &'static str,
        reason: String,
    },

    /// Malformed CLI input.
    #[error("{0}")]
    Usage(String),
}
