//! Cyclotomic polynomials and the factor catalogs used to spell out
//! elementary divisors.
//!
//! The untwisted catalog holds `Phi_1 .. Phi_30`. The twisted catalogs hold
//! the factors that are integral in the Suzuki/Ree variable `q' = q/sqrt(p)`:
//! products like `Phi_1Phi_2 = q^2 - 1 = 2q'^2 - 1` and the primed halves of
//! `Phi_8`, `Phi_12`, `Phi_24`.

use super::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed};

/// The n-th cyclotomic polynomial, by dividing `x^n - 1` through `Phi_d` for
/// all proper divisors `d` of `n`. Supported range `1..=30`.
pub fn cyclotomic(n: u32) -> Result<IntPoly> {
    if n == 0 || n > 30 {
        return Err(Error::CyclotomicRange(n));
    }
    Ok(cyclotomic_unchecked(n))
}

fn cyclotomic_unchecked(n: u32) -> IntPoly {
    let mut f = IntPoly::monomial(BigInt::one(), n as usize).sub(&IntPoly::one());
    for d in 1..n {
        if n % d == 0 {
            f = f.exact_div(&cyclotomic_unchecked(d)).expect("cyclotomic division is exact");
        }
    }
    f
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CatalogKind {
    Untwisted,
    Twisted(u32),
}

/// A named list of polynomial factors for trial division.
#[derive(Clone, Debug)]
pub struct Catalog {
    kind: CatalogKind,
    entries: Vec<(String, IntPoly)>,
}

/// Result of trial division by a catalog: `poly = constant · prod(factors) · residual`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub constant: BigInt,
    pub factors: Vec<String>,
    pub residual: Option<IntPoly>,
}

impl Factorization {
    pub fn is_complete(&self) -> bool {
        self.residual.is_none()
    }
}

impl Catalog {
    pub fn untwisted() -> Catalog {
        let entries = (1..=30)
            .map(|n| (format!("Phi_{n}"), cyclotomic_unchecked(n)))
            .collect();
        Catalog { kind: CatalogKind::Untwisted, entries }
    }

    /// Catalog over `Z[q']` for characteristic `p` in `{2, 3}`.
    pub fn twisted(p: u32) -> Result<Catalog> {
        let entries: Vec<(&str, Vec<i64>)> = match p {
            2 => vec![
                ("Phi_1Phi_2", vec![-1, 0, 2]),
                ("Phi_4", vec![1, 0, 2]),
                ("Phi'_8", vec![1, 2, 2]),
                ("Phi''_8", vec![1, -2, 2]),
                ("Phi_8", vec![1, 0, 0, 0, 4]),
                ("Phi_12", vec![1, 0, -2, 0, 4]),
                ("Phi'_24", vec![1, 2, 2, 4, 4]),
                ("Phi''_24", vec![1, -2, 2, -4, 4]),
            ],
            3 => vec![
                ("Phi_1Phi_2", vec![-1, 0, 3]),
                ("Phi_4", vec![1, 0, 3]),
                ("Phi'_12", vec![1, -3, 3]),
                ("Phi''_12", vec![1, 3, 3]),
            ],
            _ => return Err(Error::BadTwistPrime(p)),
        };
        Ok(Catalog {
            kind: CatalogKind::Twisted(p),
            entries: entries
                .into_iter()
                .map(|(n, c)| (n.to_string(), IntPoly::from_i64(&c)))
                .collect(),
        })
    }

    pub fn kind(&self) -> CatalogKind {
        self.kind
    }

    pub fn get(&self, name: &str) -> Option<&IntPoly> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, p)| p)
    }

    /// Trial division of a nonzero polynomial. Entries of larger degree are
    /// tried first so that `Phi_8` wins over `Phi'_8 · Phi''_8` in the twisted
    /// catalogs. A nontrivial leftover is reported as residual, not an error.
    pub fn factor(&self, f: &IntPoly) -> Result<Factorization> {
        let (content, prim) = f.content_primitive()?;
        let mut order: Vec<&(String, IntPoly)> = self.entries.iter().collect();
        order.sort_by_key(|(name, p)| (std::cmp::Reverse(p.degree().unwrap_or(0)), name.clone()));
        let mut rem = prim;
        let mut factors: Vec<String> = Vec::new();
        'outer: while rem.degree().unwrap_or(0) > 0 {
            for (name, p) in &order {
                if p.degree() > rem.degree() {
                    continue;
                }
                if let Ok(q) = rem.exact_div(p) {
                    factors.push(name.clone());
                    rem = q;
                    continue 'outer;
                }
            }
            break;
        }
        factors.sort_by_key(|n| factor_order_key(n));
        let residual = if rem.degree().unwrap_or(0) > 0 {
            Some(rem)
        } else {
            debug_assert!(rem.coeff(0).abs().is_one());
            None
        };
        Ok(Factorization { constant: content, factors, residual })
    }
}

/// Sort key for factor names: `Phi_n` before `Phi'_n` before `Phi''_n`,
/// ascending in `n` (a product name like `Phi_1Phi_2` sorts by its first index).
pub fn factor_order_key(name: &str) -> (u32, u8) {
    let rest = name.strip_prefix("Phi").unwrap_or(name);
    let primes = rest.chars().take_while(|&c| c == '\'').count() as u8;
    let digits: String = rest[primes as usize..]
        .strip_prefix('_')
        .unwrap_or("")
        .chars()
        .take_while(|c| c.is_ascii_digit())
        .collect();
    (digits.parse().unwrap_or(0), primes)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclotomic_examples() {
        assert_eq!(cyclotomic(1).unwrap(), IntPoly::from_i64(&[-1, 1]));
        assert_eq!(cyclotomic(8).unwrap(), IntPoly::from_i64(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(6).unwrap(), IntPoly::from_i64(&[1, -1, 1]));
        assert!(cyclotomic(0).is_err());
        assert!(cyclotomic(31).is_err());
    }

    #[test]
    fn cyclotomic_product_is_xn_minus_1() {
        for n in 1..=30u32 {
            let mut prod = IntPoly::one();
            for d in 1..=n {
                if n % d == 0 {
                    prod = prod.mul(&cyclotomic(d).unwrap());
                }
            }
            let expect = IntPoly::monomial(BigInt::one(), n as usize).sub(&IntPoly::one());
            assert_eq!(prod, expect, "n = {n}");
        }
    }

    #[test]
    fn factor_untwisted() {
        let cat = Catalog::untwisted();
        let f = IntPoly::from_i64(&[-1, 0, 1]); // q^2 - 1
        let fac = cat.factor(&f).unwrap();
        assert_eq!(fac.constant, BigInt::from(1));
        assert_eq!(fac.factors, vec!["Phi_1", "Phi_2"]);
        assert!(fac.is_complete());

        let f = IntPoly::from_i64(&[1, 0, 0, 0, 1]); // q^4 + 1
        let fac = cat.factor(&f).unwrap();
        assert_eq!(fac.factors, vec!["Phi_8"]);

        // irreducible non-cyclotomic: residual reported
        let f = IntPoly::from_i64(&[-2, 0, 1]);
        let fac = cat.factor(&f).unwrap();
        assert!(fac.factors.is_empty());
        assert_eq!(fac.residual, Some(IntPoly::from_i64(&[-2, 0, 1])));
    }

    #[test]
    fn factor_twisted() {
        let cat = Catalog::twisted(2).unwrap();
        let f = IntPoly::from_i64(&[1, 2, 2]);
        let fac = cat.factor(&f).unwrap();
        assert_eq!(fac.factors, vec!["Phi'_8"]);
        // Phi_8 in q' must win over the product of its halves
        let f = IntPoly::from_i64(&[1, 0, 0, 0, 4]);
        let fac = cat.factor(&f).unwrap();
        assert_eq!(fac.factors, vec!["Phi_8"]);
        assert!(Catalog::twisted(5).is_err());
    }

    #[test]
    fn factor_reassembles_input() {
        let cat = Catalog::untwisted();
        let f = IntPoly::from_i64(&[6, 0, -6]); // -6 (q^2 - 1) = -6 Phi_1 Phi_2
        let fac = cat.factor(&f).unwrap();
        let mut prod = IntPoly::constant(fac.constant.clone());
        for name in &fac.factors {
            prod = prod.mul(cat.get(name).unwrap());
        }
        if let Some(r) = &fac.residual {
            prod = prod.mul(r);
        }
        assert_eq!(prod, f);
    }

    #[test]
    fn order_key() {
        assert!(factor_order_key("Phi_2") < factor_order_key("Phi_12"));
        assert!(factor_order_key("Phi_8") < factor_order_key("Phi'_8"));
        assert!(factor_order_key("Phi'_8") < factor_order_key("Phi''_8"));
        assert_eq!(factor_order_key("Phi_1Phi_2"), (1, 0));
    }
}
