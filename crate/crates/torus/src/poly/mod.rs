//! Dense univariate polynomials with exact integer and rational coefficients.
//!
//! Coefficients are stored by ascending degree with trailing zeros trimmed;
//! the zero polynomial is the empty coefficient vector. All arithmetic is
//! exact, rational arithmetic never leaves lowest terms.

mod cyclotomic;
mod parse;

pub use cyclotomic::{cyclotomic, factor_order_key, Catalog, CatalogKind, Factorization};
pub use parse::{format_poly, format_rat_poly, parse_poly};

use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Polynomial over `Z`, dense by ascending degree.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Polynomial over `Q`, dense by ascending degree, coefficients reduced.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

fn trim_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

fn trim_rat(mut v: Vec<BigRational>) -> Vec<BigRational> {
    while v.last().is_some_and(Zero::is_zero) {
        v.pop();
    }
    v
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        IntPoly { coeffs: trim_int(coeffs) }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut v = vec![BigInt::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn eval(&self, z: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c;
        }
        acc
    }

    /// Evaluate at `z` modulo `m` (`m >= 1`), result in `0..m`.
    pub fn eval_mod(&self, z: u64, m: u64) -> u64 {
        let mm = BigInt::from(m);
        let mut acc = BigInt::zero();
        let zz = BigInt::from(z);
        for c in self.coeffs.iter().rev() {
            acc = (acc * &zz + c).mod_floor(&mm);
        }
        acc.try_into().expect("mod_floor result fits u64")
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigInt::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn mul_scalar(&self, s: &BigInt) -> IntPoly {
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Exact division in `Z[x]`; errors if the quotient is not integral.
    pub fn exact_div(&self, d: &IntPoly) -> Result<IntPoly> {
        let (q, r) = self.to_rat().divmod(&d.to_rat())?;
        if !r.is_zero() {
            return Err(Error::InexactDivision);
        }
        q.to_int().ok_or(Error::InexactDivision)
    }

    /// Signed integer content `c` and primitive part `p` with `self = c·p`,
    /// `p` primitive with positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigInt, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
        }
        if self.leading().unwrap().is_negative() {
            g = -g;
        }
        let p = IntPoly { coeffs: self.coeffs.iter().map(|c| c / &g).collect() };
        Ok((g, p))
    }

    pub fn primitive_part(&self) -> Result<IntPoly> {
        Ok(self.content_primitive()?.1)
    }

    /// Substitute `x = k·y + i`, expanding exactly.
    pub fn subst_linear(&self, k: u64, i: i64) -> IntPoly {
        let lin = IntPoly::from_i64(&[i, k as i64]);
        let mut acc = IntPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&lin).add(&IntPoly::constant(c.clone()));
        }
        acc
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly {
            coeffs: self.coeffs.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
        }
    }
}

impl RatPoly {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        RatPoly { coeffs: trim_rat(coeffs) }
    }

    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, z: &BigInt) -> BigRational {
        let zz = BigRational::from_integer(z.clone());
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * &zz + c;
        }
        acc
    }

    pub fn neg(&self) -> RatPoly {
        RatPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut v = vec![BigRational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            v[i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            v[i] += c;
        }
        Self::new(v)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Self::new(v)
    }

    pub fn mul_scalar(&self, s: &BigRational) -> RatPoly {
        if s.is_zero() {
            return Self::zero();
        }
        Self::new(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divmod(&self, d: &RatPoly) -> Result<(RatPoly, RatPoly)> {
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let dd = d.coeffs.len();
        let mut r = self.coeffs.clone();
        if r.len() < dd {
            return Ok((RatPoly::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); r.len() - dd + 1];
        let lead = d.coeffs.last().unwrap();
        while r.len() >= dd {
            let c = r.last().unwrap() / lead;
            let k = r.len() - dd;
            q[k] = c.clone();
            for (i, dc) in d.coeffs.iter().enumerate() {
                let t = &c * dc;
                r[k + i] -= t;
            }
            r.pop();
            r = trim_rat(r);
            if r.is_empty() {
                break;
            }
        }
        Ok((RatPoly::new(q), RatPoly { coeffs: r }))
    }

    /// Rational content and integer primitive part: `self = content·primitive`,
    /// primitive with coprime coefficients and positive leading coefficient.
    pub fn content_primitive(&self) -> Result<(BigRational, IntPoly)> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self.coeffs.iter().map(|c| (c * BigRational::from_integer(den.clone())).to_integer()).collect();
        let mut g = BigInt::zero();
        for c in &ints {
            g = g.gcd(c);
        }
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        let prim = IntPoly { coeffs: ints.iter().map(|c| c / &g).collect() };
        Ok((BigRational::new(g, den), prim))
    }

    /// Substitute `x = k·y + i`.
    pub fn subst_linear(&self, k: u64, i: i64) -> RatPoly {
        let lin = RatPoly::new(vec![
            BigRational::from_integer(BigInt::from(i)),
            BigRational::from_integer(BigInt::from(k)),
        ]);
        self.compose(&lin)
    }

    /// Substitute `x = g(y)`.
    pub fn compose(&self, g: &RatPoly) -> RatPoly {
        let mut acc = RatPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(g).add(&RatPoly::constant(c.clone()));
        }
        acc
    }

    /// Least common multiple of all coefficient denominators.
    pub fn lcm_denominators(&self) -> BigInt {
        let mut den = BigInt::one();
        for c in &self.coeffs {
            den = den.lcm(c.denom());
        }
        den
    }

    /// Converts to an integer polynomial when all coefficients are integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        if self.coeffs.iter().all(|c| c.is_integer()) {
            Some(IntPoly::new(self.coeffs.iter().map(|c| c.to_integer()).collect()))
        } else {
            None
        }
    }
}

/// Primitive gcd in `Q[x]` of two polynomials, not both zero: the result is
/// primitive over `Z` with positive leading coefficient and divides both
/// inputs exactly over `Q`.
pub fn euclid_gcd(f: &RatPoly, g: &RatPoly) -> Result<IntPoly> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    if f.is_zero() {
        return g.content_primitive().map(|cp| cp.1);
    }
    if g.is_zero() {
        return f.content_primitive().map(|cp| cp.1);
    }
    let mut a = f.clone();
    let mut b = g.clone();
    while !b.is_zero() {
        let (_, r) = a.divmod(&b)?;
        a = b;
        b = r;
    }
    a.content_primitive().map(|cp| cp.1)
}

/// Extended Euclid chain over `Q[x]`: returns `(d, s, t)` with `s·f + t·g = d`
/// and `d` a gcd of `f`, `g` (not normalized).
pub fn ext_gcd(f: &RatPoly, g: &RatPoly) -> Result<(RatPoly, RatPoly, RatPoly)> {
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut s0, mut s1) = (RatPoly::one(), RatPoly::zero());
    let (mut t0, mut t1) = (RatPoly::zero(), RatPoly::one());
    while !r1.is_zero() {
        let (q, r) = r0.divmod(&r1)?;
        (r0, r1) = (r1, r);
        (s0, s1) = (s1.clone(), s0.sub(&q.mul(&s1)));
        (t0, t1) = (t1.clone(), t0.sub(&q.mul(&t1)));
    }
    Ok((r0, s0, t0))
}

/// Bezout cofactors for coprime `f`, `g`: `a·f + b·g = 1` with `deg a < deg g`
/// and `deg b < deg f` whenever both degrees are at least 1, making the pair
/// unique. A constant input takes the cofactor `1/f` (resp. `1/g`).
pub fn ext_euclid(f: &RatPoly, g: &RatPoly) -> Result<(RatPoly, RatPoly)> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.degree() == Some(0) {
        let inv = BigRational::one() / f.coeff(0);
        return Ok((RatPoly::constant(inv), RatPoly::zero()));
    }
    if g.degree() == Some(0) {
        let inv = BigRational::one() / g.coeff(0);
        return Ok((RatPoly::zero(), RatPoly::constant(inv)));
    }
    let (d, s, t) = ext_gcd(f, g)?;
    if d.degree() != Some(0) {
        return Err(Error::NotCoprime);
    }
    let inv = BigRational::one() / d.coeff(0);
    let a = s.mul_scalar(&inv);
    let b = t.mul_scalar(&inv);
    // reduce a modulo g; the identity forces deg b < deg f
    let (q, a) = a.divmod(g)?;
    let b = b.add(&q.mul(f));
    debug_assert_eq!(a.mul(f).add(&b.mul(g)), RatPoly::one());
    Ok((a, b))
}
