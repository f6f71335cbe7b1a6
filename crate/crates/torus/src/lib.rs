//! Exact arithmetic for residue-class gcds of integer polynomial values,
//! and the application to the structure of maximal tori in exceptional
//! groups of Lie type.
//!
//! The crate has two halves. The first ([`poly`], [`gcdscheme`]) computes,
//! for integer polynomials `f`, `g`, a modulus `m` together with per-residue
//! contents and integral Bezout witnesses describing `gcd(f(z), g(z))` for
//! every integer `z`. The second ([`rootdata`], [`parammatrix`], [`tables`])
//! builds the relation matrix `M(q) = q·w·F0 − 1` of a maximal torus from a
//! root datum and a Weyl class word, computes its parametric elementary
//! divisors by applying the gcd machinery to all minors, and renders the
//! resulting structure tables. [`oracle`] verifies everything numerically.

pub mod gcdscheme;
pub mod oracle;
pub mod parammatrix;
pub mod poly;
pub mod rootdata;
pub mod tables;

/// Largest modulus for which schemes are stored densely.
pub const MODULUS_CAP: u64 = 1_000_000;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("both inputs are zero")]
    BothZero,
    #[error("polynomials are not coprime")]
    NotCoprime,
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("modulus {0} exceeds the dense-storage cap {MODULUS_CAP}")]
    ModulusTooLarge(u64),
    #[error("congruence precondition violated in witness search")]
    BadCongruence,
    #[error("cyclotomic index {0} outside supported range 1..=30")]
    CyclotomicRange(u32),
    #[error("unsupported twist characteristic {0}")]
    BadTwistPrime(u32),
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square")]
    NotSquare,
    #[error("index {0} out of range")]
    IndexRange(usize),
    #[error("unknown group type `{0}`")]
    UnknownType(String),
    #[error("unknown class `{0}`")]
    UnknownClass(String),
    #[error("center quotient is not defined for this group type")]
    NoCenterQuotient,
    #[error("center divisibility failed at entry ({0},{1}) under both orientations")]
    CenterDivisibility(usize, usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
