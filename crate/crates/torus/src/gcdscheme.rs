//! Residue-class gcd schemes for values of integer polynomials.
//!
//! `build_scheme` computes, for `f, g ∈ Z[X]` not both zero, a modulus `m`,
//! the shared primitive part `h`, and for every residue `i mod m` a content
//! `c_i` with `gcd(f(z), g(z)) = c_i·|h(z)|` for all `z ≡ i`, together with
//! witness polynomials `a_i, b_i ∈ Q[X]` that take integer values on the
//! class and satisfy `a_i·(f/h) + b_i·(g/h) = c_i` identically.
//! `gcd_family` extends the content computation to arbitrary finite families,
//! which is what the minor pipeline consumes.

use crate::poly::{ext_euclid, ext_gcd, euclid_gcd, IntPoly, RatPoly};
use crate::{Error, Result, MODULUS_CAP};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// One residue class of a [`GcdScheme`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SchemeCase {
    pub content: BigInt,
    pub a: RatPoly,
    pub b: RatPoly,
}

/// Output of the residue-class gcd algorithm.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GcdScheme {
    pub modulus: u64,
    pub primitive: IntPoly,
    /// Reduced inputs `f/h`, `g/h`; kept for reports and self-checks.
    pub f_reduced: IntPoly,
    pub g_reduced: IntPoly,
    pub cases: Vec<SchemeCase>,
}

/// Family scheme: per-residue contents only, no witnesses.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiGcdScheme {
    pub modulus: u64,
    pub primitive: IntPoly,
    pub contents: Vec<u64>,
}

impl GcdScheme {
    /// `gcd(f(z), g(z))` according to the scheme: `c_{z mod m}·|h(z)|`.
    pub fn eval(&self, z: &BigInt) -> BigInt {
        let res = z.mod_floor(&BigInt::from(self.modulus));
        let idx: u64 = res.try_into().expect("residue fits u64");
        let c = &self.cases[idx as usize].content;
        c * self.primitive.eval(z).abs()
    }
}

impl MultiGcdScheme {
    pub fn eval(&self, z: &BigInt) -> BigInt {
        let res = z.mod_floor(&BigInt::from(self.modulus));
        let idx: u64 = res.try_into().expect("residue fits u64");
        BigInt::from(self.contents[idx as usize]) * self.primitive.eval(z).abs()
    }
}

pub fn eval_scheme(scheme: &GcdScheme, z: &BigInt) -> BigInt {
    scheme.eval(z)
}

/// Smallest `x` in `0..r` with `a - x·g/c ≡ 0 (mod r)` and `b + x·f/c ≡ 0 (mod r)`.
/// Requires `a·f + b·g = c·r` and `gcd(f, g) = c` with `c, r ≥ 1`.
pub fn find_xi(
    a: &BigInt,
    b: &BigInt,
    f: &BigInt,
    g: &BigInt,
    c: &BigInt,
    r: &BigInt,
) -> Result<BigInt> {
    if !c.is_positive() || !r.is_positive() || &(a * f + b * g) != &(c * r) || &f.gcd(g) != c {
        return Err(Error::BadCongruence);
    }
    if r.is_one() {
        return Ok(BigInt::zero());
    }
    // x·(g/c) ≡ a (mod r)  and  x·(f/c) ≡ -b (mod r)
    let s1 = solve_linear(&(g / c), a, r).ok_or(Error::BadCongruence)?;
    let s2 = solve_linear(&(f / c), &(-b), r).ok_or(Error::BadCongruence)?;
    crt(&s1, &s2).ok_or(Error::BadCongruence)
}

/// Solutions of `k·x ≡ v (mod n)` as a class `(s, n')` meaning `x ≡ s (mod n')`.
fn solve_linear(k: &BigInt, v: &BigInt, n: &BigInt) -> Option<(BigInt, BigInt)> {
    let kn = k.mod_floor(n);
    let g = kn.gcd(n);
    if !v.mod_floor(&g).is_zero() {
        return None;
    }
    let n2 = n / &g;
    if n2.is_one() {
        return Some((BigInt::zero(), BigInt::one()));
    }
    let k2 = (kn / &g).mod_floor(&n2);
    let v2 = (v / &g).mod_floor(&n2);
    let inv = modinv(&k2, &n2)?;
    Some(((inv * v2).mod_floor(&n2), n2))
}

fn modinv(a: &BigInt, n: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(n);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(n))
    } else {
        None
    }
}

/// Intersect two congruence classes; returns the smallest nonnegative member.
fn crt(c1: &(BigInt, BigInt), c2: &(BigInt, BigInt)) -> Option<BigInt> {
    let (a1, n1) = c1;
    let (a2, n2) = c2;
    let g = n1.gcd(n2);
    if !(a1 - a2).mod_floor(&g).is_zero() {
        return None;
    }
    let l = n1.lcm(n2);
    let n2g = n2 / &g;
    if n2g.is_one() {
        return Some(a1.mod_floor(&l));
    }
    let t = (((a2 - a1) / &g) * modinv(&((n1 / &g).mod_floor(&n2g)), &n2g)?).mod_floor(&n2g);
    Some((a1 + n1 * t).mod_floor(&l))
}

/// The full residue-class gcd algorithm.
pub fn build_scheme(f: &IntPoly, g: &IntPoly) -> Result<GcdScheme> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let h = euclid_gcd(&f.to_rat(), &g.to_rat())?;
    let f1 = if f.is_zero() { IntPoly::zero() } else { f.exact_div(&h)? };
    let g1 = if g.is_zero() { IntPoly::zero() } else { g.exact_div(&h)? };

    // One input zero: the other reduces to a constant content; the witness
    // is the sign unit, so that a·f1 + b·g1 = |c| holds identically.
    if f1.is_zero() || g1.is_zero() {
        let nz = if f1.is_zero() { &g1 } else { &f1 };
        debug_assert_eq!(nz.degree(), Some(0));
        let c = nz.coeff(0);
        let unit = RatPoly::constant(BigRational::from_integer(c.signum()));
        let (a, b) = if f1.is_zero() {
            (RatPoly::zero(), unit)
        } else {
            (unit, RatPoly::zero())
        };
        return Ok(GcdScheme {
            modulus: 1,
            primitive: h,
            f_reduced: f1,
            g_reduced: g1,
            cases: vec![SchemeCase { content: c.abs(), a, b }],
        });
    }

    let (at, bt) = ext_euclid(&f1.to_rat(), &g1.to_rat())?;
    let m_big = at.lcm_denominators().lcm(&bt.lcm_denominators());
    let m: u64 = (&m_big)
        .try_into()
        .map_err(|_| Error::ModulusTooLarge(u64::MAX))?;
    if m > MODULUS_CAP {
        return Err(Error::ModulusTooLarge(m));
    }
    let mr = BigRational::from_integer(m_big.clone());
    let a = at.mul_scalar(&mr).to_int().expect("m clears denominators");
    let b = bt.mul_scalar(&mr).to_int().expect("m clears denominators");

    let mut cases = Vec::with_capacity(m as usize);
    for i in 0..m {
        let zi = BigInt::from(i);
        let fi = f1.eval(&zi);
        let gi = g1.eval(&zi);
        let ci = fi.gcd(&gi);
        let ri = &m_big / &ci;
        let xi = find_xi(&a.eval(&zi), &b.eval(&zi), &fi, &gi, &ci, &ri)?;
        let xc = BigRational::new(xi, ci.clone());
        let rinv = BigRational::new(BigInt::one(), ri.clone());
        let ai = a.to_rat().sub(&g1.to_rat().mul_scalar(&xc)).mul_scalar(&rinv);
        let bi = b.to_rat().add(&f1.to_rat().mul_scalar(&xc)).mul_scalar(&rinv);
        cases.push(SchemeCase { content: ci, a: ai, b: bi });
    }
    let scheme = GcdScheme { modulus: m, primitive: h, f_reduced: f1, g_reduced: g1, cases };
    Ok(minimize_modulus(scheme))
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

/// Replace the modulus by the smallest divisor on which all case data agree.
pub fn minimize_modulus(scheme: GcdScheme) -> GcdScheme {
    let m = scheme.modulus;
    for d in divisors(m) {
        let ok = (0..m).all(|i| scheme.cases[i as usize] == scheme.cases[(i % d) as usize]);
        if ok {
            return GcdScheme {
                modulus: d,
                primitive: scheme.primitive,
                f_reduced: scheme.f_reduced,
                g_reduced: scheme.g_reduced,
                cases: scheme.cases[..d as usize].to_vec(),
            };
        }
    }
    scheme
}

/// Run `build_scheme` over unimodular transforms `(f + t·g, g)` and
/// `(f, g + t·f)` for `1 ≤ t ≤ tries` (both signs) and keep the scheme with
/// the smallest modulus. The value gcds are unchanged by such transforms.
pub fn shrink_via_unimodular(f: &IntPoly, g: &IntPoly, tries: u32) -> Result<GcdScheme> {
    let mut best = build_scheme(f, g)?;
    for t in 1..=i64::from(tries) {
        for s in [t, -t] {
            let sc = IntPoly::from_i64(&[s]);
            for (ff, gg) in [
                (f.add(&sc.mul(g)), g.clone()),
                (f.clone(), g.add(&sc.mul(f))),
            ] {
                if let Ok(cand) = build_scheme(&ff, &gg) {
                    if cand.modulus < best.modulus {
                        // witnesses are rebuilt for the original pair so the
                        // scheme keeps its contract in terms of f and g
                        let orig = rebuild_for(f, g, &cand);
                        if let Ok(orig) = orig {
                            if orig.modulus < best.modulus {
                                best = orig;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(best)
}

/// Rebuild witnesses for `(f, g)` on the case split of `donor` (same value
/// gcds, possibly smaller modulus). Falls back to an error if the donor's
/// modulus does not actually support constant case data for `(f, g)`.
fn rebuild_for(f: &IntPoly, g: &IntPoly, donor: &GcdScheme) -> Result<GcdScheme> {
    let h = euclid_gcd(&f.to_rat(), &g.to_rat())?;
    let f1 = f.exact_div(&h)?;
    let g1 = g.exact_div(&h)?;
    let m = donor.modulus;
    let m_big = BigInt::from(m);
    // any integer combination a·f1 + b·g1 = m suffices; reuse donor's witnesses
    // scaled back if they are expressed in the transformed pair. Simplest valid
    // route: the donor's contents must equal gcd(f1(i), g1(i)); recompute
    // witnesses with the Step 3 construction from a Bezout pair for (f1, g1)
    // whose modulus divides a multiple of m.
    let (at, bt) = ext_euclid(&f1.to_rat(), &g1.to_rat())?;
    let m0 = at.lcm_denominators().lcm(&bt.lcm_denominators());
    // scale the identity to modulus lcm(m0, m): witnesses stay integral on classes
    let mm = m0.lcm(&m_big);
    let mmu: u64 = (&mm).try_into().map_err(|_| Error::ModulusTooLarge(u64::MAX))?;
    if mmu > MODULUS_CAP {
        return Err(Error::ModulusTooLarge(mmu));
    }
    let mr = BigRational::from_integer(mm.clone());
    let a = at.mul_scalar(&mr).to_int().ok_or(Error::InexactDivision)?;
    let b = bt.mul_scalar(&mr).to_int().ok_or(Error::InexactDivision)?;
    let mut cases = Vec::with_capacity(m as usize);
    for i in 0..m {
        let zi = BigInt::from(i);
        let fi = f1.eval(&zi);
        let gi = g1.eval(&zi);
        let ci = fi.gcd(&gi);
        let ri = &mm / &ci;
        let xi = find_xi(&a.eval(&zi), &b.eval(&zi), &fi, &gi, &ci, &ri)?;
        let xc = BigRational::new(xi, ci.clone());
        let rinv = BigRational::new(BigInt::one(), ri.clone());
        let ai = a.to_rat().sub(&g1.to_rat().mul_scalar(&xc)).mul_scalar(&rinv);
        let bi = b.to_rat().add(&f1.to_rat().mul_scalar(&xc)).mul_scalar(&rinv);
        cases.push(SchemeCase { content: ci, a: ai, b: bi });
    }
    // verify contents and witness integrality really are m-periodic over the
    // larger modulus; if not, the donor modulus is rejected
    for i in 0..mmu {
        let zi = BigInt::from(i);
        let fi = f1.eval(&zi);
        let gi = g1.eval(&zi);
        let case = &cases[(i % m) as usize];
        if fi.gcd(&gi) != case.content
            || !case.a.eval(&zi).is_integer()
            || !case.b.eval(&zi).is_integer()
        {
            return Err(Error::Internal("donor modulus does not hold".into()));
        }
    }
    Ok(minimize_modulus(GcdScheme {
        modulus: m,
        primitive: h,
        f_reduced: f1,
        g_reduced: g1,
        cases,
    }))
}

/// Working modulus of a coprime pair: the denominator lcm of the normalized
/// Bezout cofactors; `None` when the pair is not coprime over `Q[X]`.
/// Constant pairs contribute their integer gcd.
fn pair_modulus(f: &IntPoly, g: &IntPoly) -> Result<Option<BigInt>> {
    if f.degree() == Some(0) && g.degree() == Some(0) {
        return Ok(Some(f.coeff(0).gcd(&g.coeff(0))));
    }
    let (d, s, t) = ext_gcd(&f.to_rat(), &g.to_rat())?;
    if d.degree() != Some(0) {
        return Ok(None);
    }
    let inv = BigRational::one() / d.coeff(0);
    let mut s = s.mul_scalar(&inv);
    let mut t = t.mul_scalar(&inv);
    if g.degree().unwrap_or(0) >= 1 {
        let (q, s2) = s.divmod(&g.to_rat())?;
        s = s2;
        t = t.add(&q.mul(&f.to_rat()));
    }
    Ok(Some(s.lcm_denominators().lcm(&t.lcm_denominators())))
}

/// Residue-class gcds of a whole family of polynomials (witnesses dropped).
///
/// The working modulus is the gcd of pairwise Bezout moduli over coprime
/// pairs of the reduced family; every family value gcd divides each of them,
/// so the minimized result does not depend on the choice. When no coprime
/// pair exists the Euclid chain over the family supplies the modulus.
pub fn gcd_family(polys: &[IntPoly]) -> Result<MultiGcdScheme> {
    let nonzero: Vec<&IntPoly> = polys.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return Err(Error::BothZero);
    }
    let mut h = nonzero[0].primitive_part()?;
    for p in &nonzero[1..] {
        if h.degree() == Some(0) && h.coeff(0).is_one() {
            break;
        }
        h = euclid_gcd(&h.to_rat(), &p.to_rat())?;
    }
    let reduced: Vec<IntPoly> = nonzero.iter().map(|p| p.exact_div(&h)).collect::<Result<_>>()?;

    let mut m_big = BigInt::zero();
    let mut pairs_used = 0usize;
    'outer: for i in 0..reduced.len() {
        for j in (i + 1)..reduced.len() {
            if let Some(pm) = pair_modulus(&reduced[i], &reduced[j])? {
                m_big = m_big.gcd(&pm);
                pairs_used += 1;
                if m_big.is_one() || pairs_used >= 40 {
                    break 'outer;
                }
            }
        }
    }
    if m_big.is_zero() {
        // no coprime pair: chain the extended Euclid over the family
        let mut d = reduced[0].to_rat();
        let mut witnesses: Vec<RatPoly> = vec![RatPoly::one()];
        let mut k = 1;
        while d.degree().unwrap_or(0) > 0 {
            if k >= reduced.len() {
                return Err(Error::Internal("family gcd did not reduce to a constant".into()));
            }
            let (d2, s, t) = ext_gcd(&d, &reduced[k].to_rat())?;
            for w in &mut witnesses {
                *w = w.mul(&s);
            }
            witnesses.push(t);
            d = d2;
            k += 1;
        }
        let inv = BigRational::one() / d.coeff(0);
        m_big = BigInt::one();
        for w in &witnesses {
            m_big = m_big.lcm(&w.mul_scalar(&inv).lcm_denominators());
        }
    }
    let m: u64 = (&m_big).try_into().map_err(|_| Error::ModulusTooLarge(u64::MAX))?;
    if m > MODULUS_CAP {
        return Err(Error::ModulusTooLarge(m));
    }
    let mut contents = Vec::with_capacity(m as usize);
    for i in 0..m {
        let mut c = m;
        for p in &reduced {
            c = gcd_u64(c, p.eval_mod(i, m));
            if c == 1 {
                break;
            }
        }
        contents.push(if c == 0 { m } else { c });
    }
    for d in divisors(m) {
        if (0..m).all(|i| contents[i as usize] == contents[(i % d) as usize]) {
            return Ok(MultiGcdScheme {
                modulus: d,
                primitive: h,
                contents: contents[..d as usize].to_vec(),
            });
        }
    }
    Ok(MultiGcdScheme { modulus: m, primitive: h, contents })
}

fn gcd_u64(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd_u64(b, a % b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ip(c: &[i64]) -> IntPoly {
        IntPoly::from_i64(c)
    }

    fn rp(coeffs: &[(i64, i64)]) -> RatPoly {
        RatPoly::new(
            coeffs
                .iter()
                .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
                .collect(),
        )
    }

    #[test]
    fn example_a() {
        let s = build_scheme(&ip(&[-1, 1]), &ip(&[1, 1])).unwrap();
        assert_eq!(s.modulus, 2);
        assert_eq!(s.primitive, IntPoly::one());
        assert_eq!(s.cases[0].content, BigInt::from(1));
        assert_eq!(s.cases[0].a, rp(&[(-1, 1), (-1, 2)])); // -X/2 - 1
        assert_eq!(s.cases[0].b, rp(&[(0, 1), (1, 2)])); // X/2
        assert_eq!(s.cases[1].content, BigInt::from(2));
        assert_eq!(s.cases[1].a, rp(&[(-1, 1)]));
        assert_eq!(s.cases[1].b, rp(&[(1, 1)]));
        assert_eq!(s.eval(&4.into()), BigInt::from(1));
        assert_eq!(s.eval(&BigInt::from(-3)), BigInt::from(2));
    }

    #[test]
    fn example_b() {
        let s = build_scheme(&ip(&[1, 1, 1]), &ip(&[2, 0, 2])).unwrap();
        assert_eq!(s.modulus, 2);
        assert_eq!(s.cases[0].content, BigInt::from(1));
        assert_eq!(s.cases[1].content, BigInt::from(1));
        assert_eq!(s.cases[0].a, rp(&[(-1, 1), (-1, 1), (-1, 1)])); // -X^2-X-1
        assert_eq!(s.cases[0].b, rp(&[(1, 1), (1, 1), (1, 2)])); // X^2/2+X+1
        assert_eq!(s.cases[1].a, rp(&[(0, 1), (-1, 1)])); // -X
        assert_eq!(s.cases[1].b, rp(&[(1, 2), (1, 2)])); // (X+1)/2
    }

    #[test]
    fn find_xi_examples() {
        let x = find_xi(
            &BigInt::from(-1),
            &BigInt::from(1),
            &BigInt::from(-1),
            &BigInt::from(1),
            &BigInt::from(1),
            &BigInt::from(2),
        )
        .unwrap();
        assert_eq!(x, BigInt::from(1));
        // r = 1 -> 0 (identity 7·1 + (-3)·2 = 1 = c·r)
        let x = find_xi(
            &BigInt::from(7),
            &BigInt::from(-3),
            &BigInt::from(1),
            &BigInt::from(2),
            &BigInt::from(1),
            &BigInt::from(1),
        )
        .unwrap();
        assert!(x.is_zero());
        // precondition violation
        assert!(find_xi(
            &BigInt::from(1),
            &BigInt::from(0),
            &BigInt::from(1),
            &BigInt::from(5),
            &BigInt::from(1),
            &BigInt::from(5),
        )
        .is_err());
    }

    #[test]
    fn degenerate_inputs() {
        // zero against nonzero
        let s = build_scheme(&IntPoly::zero(), &ip(&[6, 4])).unwrap();
        assert_eq!(s.modulus, 1);
        assert_eq!(s.eval(&5.into()), BigInt::from(26));
        assert!(build_scheme(&IntPoly::zero(), &IntPoly::zero()).is_err());
        // constant g
        let s = build_scheme(&ip(&[0, 1]), &ip(&[7])).unwrap();
        for z in -30i64..30 {
            let expect = BigInt::from(z).gcd(&BigInt::from(7));
            assert_eq!(s.eval(&z.into()), expect);
        }
        // f == g
        let s = build_scheme(&ip(&[6, 4]), &ip(&[6, 4])).unwrap();
        assert_eq!(s.modulus, 1);
        assert_eq!(s.eval(&1.into()), BigInt::from(10));
    }

    #[test]
    fn common_root_gives_zero() {
        // f and g share the root 2
        let f = ip(&[-2, 1]).mul(&ip(&[1, 1]));
        let g = ip(&[-2, 1]).mul(&ip(&[3, 1]));
        let s = build_scheme(&f, &g).unwrap();
        assert_eq!(s.eval(&2.into()), BigInt::zero());
    }

    #[test]
    fn minimize_to_one() {
        let s = build_scheme(&ip(&[0, 1]), &ip(&[1, 1])).unwrap();
        assert_eq!(s.modulus, 1);
    }

    #[test]
    fn shrink_examples() {
        let s = shrink_via_unimodular(&ip(&[-1, 1]), &ip(&[1, 1]), 3).unwrap();
        assert_eq!(s.modulus, 2);
        let s = shrink_via_unimodular(&ip(&[5, 3, 1]), &ip(&[1]), 2).unwrap();
        assert_eq!(s.modulus, 1);
    }

    #[test]
    fn family_examples() {
        // gcd(z-1, z+1, z) = 1 for all z
        let s = gcd_family(&[ip(&[-1, 1]), ip(&[1, 1]), ip(&[0, 1])]).unwrap();
        assert_eq!(s.modulus, 1);
        assert_eq!(s.primitive, IntPoly::one());
        assert_eq!(s.contents, vec![1]);
        for z in -100i64..=100 {
            let e: BigInt = BigInt::from(z - 1).gcd(&BigInt::from(z + 1)).gcd(&BigInt::from(z));
            assert_eq!(s.eval(&z.into()), e);
        }
        // common factor extraction
        let s = gcd_family(&[ip(&[0, 2]), ip(&[0, 4])]).unwrap();
        assert_eq!(s.primitive, ip(&[0, 1]));
        assert!(s.contents.iter().all(|&c| c == 2));
        // two-element family agrees with build_scheme
        let s = gcd_family(&[ip(&[-1, 1]), ip(&[1, 1])]).unwrap();
        assert_eq!(s.modulus, 2);
        assert_eq!(s.contents, vec![1, 2]);
        // zero members are dropped
        let s = gcd_family(&[IntPoly::zero(), ip(&[-1, 1]), ip(&[1, 1])]).unwrap();
        assert_eq!(s.modulus, 2);
        assert!(gcd_family(&[IntPoly::zero()]).is_err());
    }

    #[test]
    fn witness_integrality_small_sweep() {
        let f = ip(&[-1, 1]);
        let g = ip(&[1, 1]);
        let s = build_scheme(&f, &g).unwrap();
        for z in -50i64..=50 {
            let zi = BigInt::from(z);
            let case = &s.cases[(z.rem_euclid(s.modulus as i64)) as usize];
            let av = case.a.eval(&zi);
            let bv = case.b.eval(&zi);
            assert!(av.is_integer() && bv.is_integer());
            let lhs = av * BigRational::from_integer(f.eval(&zi))
                + bv * BigRational::from_integer(g.eval(&zi));
            let rhs = BigRational::from_integer(
                &case.content * s.primitive.eval(&zi),
            );
            assert_eq!(lhs, rhs);
        }
    }
}
