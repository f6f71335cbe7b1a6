//! Independent numeric verification: brute-force value gcds against schemes,
//! Smith-form checks of parametric divisors, quotient structure via an
//! adjoined center generator, and finite-order sanity checks.

use crate::gcdscheme::{build_scheme, divisors, GcdScheme};
use crate::parammatrix::{
    numeric_snf, param_elementary_divisors, quotient_divisor_scheme, snf_rectangular,
    DivisorScheme,
};
use crate::poly::{Catalog, IntPoly};
use crate::rootdata::{ClassRep, GroupType, RootDatum};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::sync::OnceLock;

pub const Q_LIMIT: u64 = 1 << 16;

/// All prime powers up to `Q_LIMIT`, ascending.
pub fn prime_powers() -> &'static [u64] {
    static PP: OnceLock<Vec<u64>> = OnceLock::new();
    PP.get_or_init(|| {
        let n = Q_LIMIT as usize;
        let mut sieve = vec![true; n + 1];
        let mut out = Vec::new();
        for p in 2..=n {
            if sieve[p] {
                let mut k = p * p;
                while k <= n {
                    sieve[k] = false;
                    k += p;
                }
                let mut q = p as u64;
                while q <= Q_LIMIT {
                    out.push(q);
                    q = q.saturating_mul(p as u64);
                }
            }
        }
        out.sort_unstable();
        out
    })
}

/// Admissible parameter values for a group type: prime powers, or powers of
/// the twist characteristic (`q' = p^m`, `m ≥ 1`) for the Suzuki/Ree types.
pub fn admissible_values(group: GroupType) -> Vec<u64> {
    match group.twist_prime() {
        Some(p) => {
            let mut out = Vec::new();
            let mut q = u64::from(p);
            while q <= Q_LIMIT {
                out.push(q);
                q *= u64::from(p);
            }
            out
        }
        None => prime_powers().to_vec(),
    }
}

/// Admissible values restricted to the center-quotient class `q ≡ q0 (mod z)`.
pub fn admissible_quotient_values(group: GroupType) -> Result<Vec<u64>> {
    let (q0, z) = group.center_quotient().ok_or(Error::NoCenterQuotient)?;
    Ok(admissible_values(group).into_iter().filter(|q| q % z == q0).collect())
}

/// Residues mod `m` that admissible values actually reach.
pub fn realizable_residues(group: GroupType, m: u64, quotient: bool) -> Result<Vec<u64>> {
    let vals = if quotient {
        admissible_quotient_values(group)?
    } else {
        admissible_values(group)
    };
    let mut res: Vec<u64> = vals.iter().map(|q| q % m).collect();
    res.sort_unstable();
    res.dedup();
    Ok(res)
}

/// The first `count` admissible values in the given residue classes mod `m`.
pub fn samples_in_class(
    group: GroupType,
    quotient: bool,
    m: u64,
    residues: &[u64],
    count: usize,
) -> Result<Vec<u64>> {
    let vals = if quotient {
        admissible_quotient_values(group)?
    } else {
        admissible_values(group)
    };
    Ok(vals.into_iter().filter(|q| residues.contains(&(q % m))).take(count).collect())
}

/// Outcome of an oracle run; empty `violations` means success.
#[derive(Clone, Debug, Default)]
pub struct Report {
    pub checks: u64,
    pub violations: Vec<String>,
    pub skipped: Vec<String>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    fn fail(&mut self, msg: String) {
        if self.violations.len() < 50 {
            self.violations.push(msg);
        }
    }

    pub fn merge(&mut self, other: Report) {
        self.checks += other.checks;
        self.violations.extend(other.violations);
        self.skipped.extend(other.skipped);
    }
}

/// Brute-force check of a gcd scheme over `-window..=window`: value gcds,
/// witness integrality, the Bezout identity, and periodicity.
pub fn check_scheme(f: &IntPoly, g: &IntPoly, scheme: &GcdScheme, window: i64) -> Report {
    let mut rep = Report::default();
    let m = scheme.modulus;
    // polynomial identity a_i (f/h) + b_i (g/h) = c_i per case
    for (i, case) in scheme.cases.iter().enumerate() {
        let lhs = case
            .a
            .mul(&scheme.f_reduced.to_rat())
            .add(&case.b.mul(&scheme.g_reduced.to_rat()));
        let rhs = IntPoly::constant(case.content.clone()).to_rat();
        rep.checks += 1;
        if lhs != rhs {
            rep.fail(format!("case {i}: polynomial Bezout identity fails"));
        }
    }
    for z in -window..=window {
        let zi = BigInt::from(z);
        let expect = f.eval(&zi).gcd(&g.eval(&zi));
        let got = scheme.eval(&zi);
        rep.checks += 1;
        if got != expect {
            rep.fail(format!("z={z}: scheme gives {got}, gcd is {expect}"));
            continue;
        }
        let idx = (z.rem_euclid(m as i64)) as usize;
        let case = &scheme.cases[idx];
        let av = case.a.eval(&zi);
        let bv = case.b.eval(&zi);
        if !av.is_integer() || !bv.is_integer() {
            rep.fail(format!("z={z}: witness values not integral"));
            continue;
        }
        let lhs = av * BigRational::from_integer(f.eval(&zi))
            + bv * BigRational::from_integer(g.eval(&zi));
        let rhs = BigRational::from_integer(&case.content * scheme.primitive.eval(&zi));
        if lhs != rhs {
            rep.fail(format!("z={z}: Bezout value identity fails"));
        }
        // periodicity of the class content: gcd(f,g)/|h| agrees at z and z+m
        let z2 = &zi + BigInt::from(m);
        let h1 = scheme.primitive.eval(&zi).abs();
        let h2 = scheme.primitive.eval(&z2).abs();
        if !h1.is_zero() && !h2.is_zero() {
            let c1 = f.eval(&zi).gcd(&g.eval(&zi)) / &h1;
            let c2 = f.eval(&z2).gcd(&g.eval(&z2)) / &h2;
            if c1 != c2 {
                rep.fail(format!("z={z}: class content not periodic mod {m}"));
            }
        }
    }
    rep
}

/// Scheme modulus minimality: every proper divisor of `m` must merge two
/// residues with different case data.
pub fn check_minimality(scheme: &GcdScheme) -> Report {
    let mut rep = Report::default();
    let m = scheme.modulus;
    for d in divisors(m) {
        if d == m {
            continue;
        }
        rep.checks += 1;
        let collapses =
            (0..m).all(|i| scheme.cases[i as usize] == scheme.cases[(i % d) as usize]);
        if collapses {
            rep.fail(format!("modulus {m} not minimal: divisor {d} suffices"));
        }
    }
    rep
}

/// Numeric check of one class at one admissible value: the Smith normal form
/// of `M(q0)` must equal the parametric prediction exactly.
pub fn check_torus_against(
    datum: &RootDatum,
    rep_class: &ClassRep,
    scheme: &DivisorScheme,
    q0: u64,
) -> Report {
    let mut rep = Report::default();
    let m = match datum.torus_matrix(&rep_class.word) {
        Ok(m) => m,
        Err(e) => {
            rep.fail(format!("{}: torus matrix: {e}", rep_class.name));
            return rep;
        }
    };
    let q = BigInt::from(q0);
    let num = m.eval(&q);
    let snf = match numeric_snf(&num) {
        Ok(s) => s,
        Err(e) => {
            rep.fail(format!("{}: snf: {e}", rep_class.name));
            return rep;
        }
    };
    let mut got: Vec<BigInt> = snf.nontrivial();
    got.sort();
    let mut predicted = match scheme.predicted_orders(&q) {
        Ok(p) => p,
        Err(e) => {
            rep.fail(format!("{} q={q0}: {e}", rep_class.name));
            return rep;
        }
    };
    predicted.sort();
    rep.checks += 1;
    if got != predicted {
        rep.fail(format!(
            "{} q={q0}: snf {:?} != predicted {:?}",
            rep_class.name, got, predicted
        ));
    }
    rep
}

/// Self-contained variant: builds the divisor scheme, then compares.
pub fn check_torus(datum: &RootDatum, rep_class: &ClassRep, q0: u64) -> Result<Report> {
    let catalog = match datum.group.twist_prime() {
        Some(p) => Catalog::twisted(p)?,
        None => Catalog::untwisted(),
    };
    let m = datum.torus_matrix(&rep_class.word)?;
    let scheme = param_elementary_divisors(&m, &catalog)?;
    Ok(check_torus_against(datum, rep_class, &scheme, q0))
}

/// Independent quotient check: adjoin the center generator to the relation
/// lattice of `M(q0)` and compare the Smith form with the parametric quotient
/// prediction; also checks `|T| / |T/Z| = |Z|`.
pub fn check_quotient(group: GroupType, rep_class: &ClassRep, q0: u64) -> Result<Report> {
    let (q_res, _) = group.center_quotient().ok_or(Error::NoCenterQuotient)?;
    let datum = RootDatum::new(group);
    let catalog = Catalog::untwisted();
    let mq = datum.torus_matrix(&rep_class.word)?;
    let (qscheme, _system) = quotient_divisor_scheme(&mq, datum.cartan_matrix(), q_res, &catalog)?;
    check_quotient_against(group, rep_class, &qscheme, q0)
}

/// Like [`check_quotient`] but verifying a caller-supplied quotient scheme.
pub fn check_quotient_against(
    group: GroupType,
    rep_class: &ClassRep,
    qscheme: &DivisorScheme,
    q0: u64,
) -> Result<Report> {
    let mut rep = Report::default();
    let (q_res, z) = group.center_quotient().ok_or(Error::NoCenterQuotient)?;
    if q0 % z != q_res {
        return Err(Error::Internal(format!("q0={q0} not = {q_res} mod {z}")));
    }
    let datum = RootDatum::new(group);
    let mq = datum.torus_matrix(&rep_class.word)?;
    let q = BigInt::from(q0);
    let num = mq.eval(&q);
    let r = num.len();
    // center generator of order z: (1/z)·(last row of L) with L·C·R in SNF
    let c_big: Vec<Vec<BigInt>> = datum
        .cartan_matrix()
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let csnf = numeric_snf(&c_big)?;
    if csnf.diagonal[r - 1] != BigInt::from(z) {
        return Err(Error::Internal("center order mismatch".into()));
    }
    let gen_row = &csnf.left[r - 1];
    // u0 = M(q0)·t0 with t0 = gen/z as a column vector; integrality is the
    // statement that the center lies in this torus
    let zb = BigInt::from(z);
    let mut u0 = Vec::with_capacity(r);
    for i in 0..r {
        let mut acc = BigInt::zero();
        for k in 0..r {
            acc += &num[i][k] * &gen_row[k];
        }
        if !acc.mod_floor(&zb).is_zero() {
            rep.fail(format!(
                "{} q={q0}: center generator not in the torus",
                rep_class.name
            ));
            return Ok(rep);
        }
        u0.push(acc / &zb);
    }
    // T ≅ Z^r / (column span of M); adjoin u0 as an extra column
    let mut stacked: Vec<Vec<BigInt>> = num.clone();
    for i in 0..r {
        stacked[i].push(u0[i].clone());
    }
    let (diag, _, _) = snf_rectangular(&stacked);
    let mut got: Vec<BigInt> = diag.into_iter().filter(|d| !d.is_one()).collect();
    got.sort();
    let mut predicted = qscheme.predicted_orders(&q)?;
    predicted.sort();
    rep.checks += 1;
    if got != predicted {
        rep.fail(format!(
            "{} q={q0}: quotient snf {:?} != predicted {:?}",
            rep_class.name, got, predicted
        ));
    }
    // order ratio |T| / |T/Z| = z
    let full = numeric_snf(&num)?;
    let mut t_ord = BigInt::one();
    for d in &full.diagonal {
        t_ord *= d;
    }
    let mut tz_ord = BigInt::one();
    for d in &predicted {
        tz_ord *= d;
    }
    rep.checks += 1;
    if t_ord.abs() != (&tz_ord * &zb).abs() {
        rep.fail(format!(
            "{} q={q0}: |T| = {t_ord} but z·|T/Z| = {}",
            rep_class.name,
            tz_ord * &zb
        ));
    }
    Ok(rep)
}

/// Multiplicative order of `w·F0`; errors beyond 360 (or when the twisted
/// monomial makes the order infinite).
pub fn check_order(datum: &RootDatum, rep_class: &ClassRep) -> Result<u32> {
    let w = datum.weyl_element(&rep_class.word)?;
    let f0 = datum.frobenius_f0();
    let a = mat_mul(&w, &f0);
    if det_abs(&a) != 1 {
        return Err(Error::Internal("w·F0 has no finite order (twisted scaling)".into()));
    }
    let mut p = a.clone();
    for k in 1..=360u32 {
        if is_ident(&p) {
            return Ok(k);
        }
        p = mat_mul(&p, &a);
    }
    Err(Error::Internal("order bound 360 exceeded".into()))
}

fn mat_mul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut c = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k] == 0 {
                continue;
            }
            for j in 0..n {
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    }
    c
}

fn is_ident(a: &[Vec<i64>]) -> bool {
    a.iter().enumerate().all(|(i, row)| {
        row.iter().enumerate().all(|(j, &x)| x == i64::from(i == j))
    })
}

fn det_abs(a: &[Vec<i64>]) -> i64 {
    let m: Vec<Vec<BigInt>> = a
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let (diag, _, _) = snf_rectangular(&m);
    let mut d = BigInt::one();
    for x in diag {
        d *= x;
    }
    let d: i64 = d.abs().try_into().unwrap_or(i64::MAX);
    d
}

// ---------------------------------------------------------------------------
// Random corpus
// ---------------------------------------------------------------------------

/// Deterministic random pair: degrees at most 6, coefficients at most 20 in
/// absolute value, never both zero. Pairs are built from small factors (with
/// an occasional shared factor, constant, zero, or equal pair) so that the
/// scheme modulus stays within the dense-storage cap.
pub fn random_pair(rng: &mut ChaCha8Rng) -> (IntPoly, IntPoly) {
    loop {
        let shape = rng.gen_range(0..10u32);
        let (f, g) = match shape {
            0 => (IntPoly::zero(), small_poly(rng, 3, 4)),
            1 => (small_poly(rng, 3, 4), IntPoly::zero()),
            2 => {
                let f = small_poly(rng, 3, 4);
                (f.clone(), f)
            }
            3 => (small_poly(rng, 2, 4), IntPoly::from_i64(&[rng.gen_range(1..=9i64)])),
            4..=6 => {
                // shared factor h of degree <= 2
                let h = small_poly(rng, 2, 2);
                (h.mul(&small_poly(rng, 2, 2)), h.mul(&small_poly(rng, 2, 2)))
            }
            _ => (small_poly(rng, 3, 2), small_poly(rng, 3, 2)),
        };
        if f.is_zero() && g.is_zero() {
            continue;
        }
        let bound = BigInt::from(20);
        let within = |p: &IntPoly| p.coeffs().iter().all(|c| c.abs() <= bound);
        if !within(&f) || !within(&g) || f.degree().unwrap_or(0) > 6 || g.degree().unwrap_or(0) > 6
        {
            continue;
        }
        return (f, g);
    }
}

fn small_poly(rng: &mut ChaCha8Rng, max_deg: usize, max_coeff: i64) -> IntPoly {
    let deg = rng.gen_range(0..=max_deg);
    let coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-max_coeff..=max_coeff)).collect();
    IntPoly::from_i64(&coeffs)
}

/// Property suite over `count` random pairs: value-gcd equality, witness
/// integrality, Bezout identities, shift periodicity, modulus minimality.
pub fn check_random_corpus(count: usize, seed: u64, window: i64) -> Report {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rep = Report::default();
    let mut built = 0usize;
    let mut resampled = 0usize;
    while built < count {
        let (f, g) = random_pair(&mut rng);
        let scheme = match build_scheme(&f, &g) {
            Ok(s) => s,
            Err(Error::ModulusTooLarge(_)) => {
                resampled += 1;
                if resampled > count * 3 {
                    rep.fail("too many modulus-cap resamples".to_string());
                    return rep;
                }
                continue;
            }
            Err(e) => {
                rep.fail(format!("build_scheme failed: {e}"));
                return rep;
            }
        };
        rep.merge(check_scheme(&f, &g, &scheme, window));
        rep.merge(check_minimality(&scheme));
        if !rep.is_ok() {
            rep.fail(format!("pair #{built} f={:?} g={:?}", f.coeffs(), g.coeffs()));
            return rep;
        }
        built += 1;
    }
    if resampled > 0 {
        rep.skipped.push(format!("{resampled} pairs resampled at the modulus cap"));
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootdata::{find_class, GroupType::*};

    #[test]
    fn prime_power_sampler() {
        let pp = prime_powers();
        assert_eq!(&pp[..8], &[2, 3, 4, 5, 7, 8, 9, 11]);
        // residue 0 mod 2 is reached only by powers of two
        let r = realizable_residues(G2, 2, false).unwrap();
        assert_eq!(r, vec![0, 1]);
        let r = realizable_residues(SuzB2, 2, false).unwrap();
        assert_eq!(r, vec![0]);
        let s = samples_in_class(G2, false, 2, &[1], 2).unwrap();
        assert_eq!(s, vec![3, 5]);
    }

    #[test]
    fn scheme_oracle_and_fault_injection() {
        let f = IntPoly::from_i64(&[-1, 1]);
        let g = IntPoly::from_i64(&[1, 1]);
        let scheme = build_scheme(&f, &g).unwrap();
        let rep = check_scheme(&f, &g, &scheme, 1000);
        assert!(rep.is_ok(), "{:?}", rep.violations);
        // corrupt a content: the oracle must notice
        let mut bad = scheme.clone();
        bad.cases[0].content = BigInt::from(2);
        let rep = check_scheme(&f, &g, &bad, 50);
        assert!(!rep.is_ok());
        assert!(rep.violations.iter().any(|v| v.contains("z=0")));
    }

    #[test]
    fn torus_check_g2_coxeter() {
        let datum = RootDatum::new(G2);
        let rep_class = find_class(G2, "G_2").unwrap();
        let rep = check_torus(&datum, &rep_class, 2).unwrap();
        assert!(rep.is_ok(), "{:?}", rep.violations);
    }

    #[test]
    fn suzuki_check() {
        let datum = RootDatum::new(SuzB2);
        let rep_class = find_class(SuzB2, "1").unwrap();
        // Phi''_8 at q' = 2 is 5; SNF of the 2x2 matrix gives (1, 5)
        let m = datum.torus_matrix(&rep_class.word).unwrap();
        let snf = numeric_snf(&m.eval(&BigInt::from(2))).unwrap();
        assert_eq!(snf.nontrivial(), vec![BigInt::from(5)]);
        let rep = check_torus(&datum, &rep_class, 2).unwrap();
        assert!(rep.is_ok(), "{:?}", rep.violations);
    }

    #[test]
    fn quotient_check_e7_a0() {
        let rep_class = find_class(E7, "A_0").unwrap();
        let rep = check_quotient(E7, &rep_class, 3).unwrap();
        assert!(rep.is_ok(), "{:?}", rep.violations);
    }

    #[test]
    fn order_checks() {
        let datum = RootDatum::new(G2);
        let id = ClassRep { name: "id".into(), word: vec![] };
        assert_eq!(check_order(&datum, &id).unwrap(), 1);
        let cox = ClassRep { name: "cox".into(), word: vec![1, 2] };
        assert_eq!(check_order(&datum, &cox).unwrap(), 6);
        let datum = RootDatum::new(TwE6);
        assert_eq!(check_order(&datum, &id).unwrap(), 2);
        let datum = RootDatum::new(SuzB2);
        assert!(check_order(&datum, &id).is_err());
    }

    #[test]
    fn corpus_smoke() {
        let rep = check_random_corpus(25, 7, 60);
        assert!(rep.is_ok(), "{:?}", rep.violations);
        assert!(rep.checks > 0);
    }

    #[test]
    fn class_orders_bounded() {
        // w·F0 has finite order at most 90 for every class of the
        // untwisted and diagram-twisted types
        for g in GroupType::all() {
            if g.twist_prime().is_some() {
                continue;
            }
            let datum = RootDatum::new(g);
            for class in crate::rootdata::class_data(g) {
                let ord = check_order(&datum, &class).unwrap();
                assert!(ord <= 90, "{:?} {}: order {ord}", g, class.name);
            }
        }
    }
}
