//! Matrices over `Z[q]`: minors, numeric Smith normal form with transforms,
//! parametric elementary divisors via per-residue-class minor gcds, and the
//! center-quotient systems.

use crate::gcdscheme::{divisors, gcd_family};
use crate::poly::{Catalog, IntPoly, RatPoly};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::HashMap;

/// Square matrix with `IntPoly` entries, row major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PolyMatrix {
    size: usize,
    entries: Vec<IntPoly>,
}

impl PolyMatrix {
    pub fn new(size: usize, entries: Vec<IntPoly>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::NotSquare);
        }
        Ok(PolyMatrix { size, entries })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn at(&self, i: usize, j: usize) -> &IntPoly {
        &self.entries[i * self.size + j]
    }

    pub fn eval(&self, q: &BigInt) -> Vec<Vec<BigInt>> {
        (0..self.size)
            .map(|i| (0..self.size).map(|j| self.at(i, j).eval(q)).collect())
            .collect()
    }

    /// All minor determinants of all sizes, memoized over (row set, column set)
    /// bit masks. Entries have degree at most 1 in the torus matrices, so the
    /// first-row cofactor expansion stays cheap up to rank 8.
    pub fn minor_table(&self) -> MinorTable {
        let r = self.size;
        let mut memo: HashMap<(u16, u16), IntPoly> = HashMap::new();
        memo.insert((0, 0), IntPoly::one());
        let masks_by_count = masks_grouped(r);
        for k in 1..=r {
            for &rows in &masks_by_count[k] {
                let i0 = rows.trailing_zeros() as usize;
                for &cols in &masks_by_count[k] {
                    let mut det = IntPoly::zero();
                    let mut sign = false;
                    for j in 0..r {
                        if cols & (1 << j) == 0 {
                            continue;
                        }
                        let e = self.at(i0, j);
                        if !e.is_zero() {
                            let sub = &memo[&(rows & !(1 << i0), cols & !(1 << j))];
                            let t = e.mul(sub);
                            det = if sign { det.sub(&t) } else { det.add(&t) };
                        }
                        sign = !sign;
                    }
                    memo.insert((rows, cols), det);
                }
            }
        }
        MinorTable { size: r, memo }
    }

    pub fn det(&self) -> IntPoly {
        let full = ((1u32 << self.size) - 1) as u16;
        self.minor_table().memo[&(full, full)].clone()
    }
}

/// Memoized minor determinants of a [`PolyMatrix`].
pub struct MinorTable {
    size: usize,
    memo: HashMap<(u16, u16), IntPoly>,
}

impl MinorTable {
    /// All `C(r,k)^2` minors of size `k`, lexicographic in (row set, column set).
    pub fn of_size(&self, k: usize) -> Vec<IntPoly> {
        let masks = masks_grouped(self.size);
        let mut out = Vec::new();
        for &rows in &masks[k] {
            for &cols in &masks[k] {
                out.push(self.memo[&(rows, cols)].clone());
            }
        }
        out
    }

    pub fn det(&self) -> &IntPoly {
        let full = ((1u32 << self.size) - 1) as u16;
        &self.memo[&(full, full)]
    }
}

/// Bit masks over `0..r` grouped by popcount, each group in ascending order
/// (which is lexicographic order of the index subsets).
fn masks_grouped(r: usize) -> Vec<Vec<u16>> {
    let mut by = vec![Vec::new(); r + 1];
    for m in 0u16..(1 << r) {
        by[m.count_ones() as usize].push(m);
    }
    by
}

/// `minors(M, k)` straight from the table.
pub fn minors(m: &PolyMatrix, k: usize) -> Result<Vec<IntPoly>> {
    if k == 0 || k > m.size() {
        return Err(Error::IndexRange(k));
    }
    Ok(m.minor_table().of_size(k))
}

/// One elementary divisor as a value function on a residue class.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Divisor {
    pub content: BigRational,
    /// Primitive polynomial part (product of the named factors and residual).
    pub prim: IntPoly,
    pub factors: Vec<String>,
    pub residual: Option<IntPoly>,
}

impl Divisor {
    pub fn is_trivial(&self) -> bool {
        self.content.is_one() && self.prim.degree() == Some(0)
    }

    /// Value at `q`; always a positive integer on the divisor's residue class.
    pub fn eval(&self, q: &BigInt) -> BigRational {
        &self.content * BigRational::from_integer(self.prim.eval(q).abs())
    }
}

/// Parametric elementary divisors of a torus matrix, per residue class.
#[derive(Clone, Debug)]
pub struct DivisorScheme {
    pub modulus: u64,
    /// `cases[residue]` lists `e_1 ... e_r`.
    pub cases: Vec<Vec<Divisor>>,
    /// `raw[residue][i]` is the determinantal divisor `D_{i+1}` as
    /// (content, primitive part).
    pub raw: Vec<Vec<(BigRational, IntPoly)>>,
    pub det: IntPoly,
}

impl DivisorScheme {
    pub fn case_for(&self, q: &BigInt) -> &Vec<Divisor> {
        let r = q.mod_floor(&BigInt::from(self.modulus));
        let idx: u64 = r.try_into().expect("residue fits");
        &self.cases[idx as usize]
    }

    /// Nontrivial divisor values at `q`, ascending (the divisibility chain).
    pub fn predicted_orders(&self, q: &BigInt) -> Result<Vec<BigInt>> {
        let mut out = Vec::new();
        for d in self.case_for(q) {
            let v = d.eval(q);
            if !v.is_integer() {
                return Err(Error::Internal(format!(
                    "divisor value {} not integral at q={}",
                    v, q
                )));
            }
            let v = v.to_integer();
            if !v.is_one() {
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Restrict to the given admissible residues and merge to the smallest
    /// modulus on which the admissible case data agree. Returns the merged
    /// modulus and, per surviving class, (residues mod d, divisors).
    pub fn restricted_cases(&self, admissible: &[u64]) -> (u64, Vec<(Vec<u64>, Vec<Divisor>)>) {
        let m = self.modulus;
        let adm: Vec<u64> = admissible.iter().copied().filter(|&r| r < m).collect();
        for d in divisors(m) {
            let mut groups: HashMap<u64, &Vec<Divisor>> = HashMap::new();
            let mut ok = true;
            for &i in &adm {
                let key = i % d;
                match groups.get(&key) {
                    Some(prev) if *prev != &self.cases[i as usize] => {
                        ok = false;
                        break;
                    }
                    Some(_) => {}
                    None => {
                        groups.insert(key, &self.cases[i as usize]);
                    }
                }
            }
            if ok {
                let mut keys: Vec<u64> = groups.keys().copied().collect();
                keys.sort_unstable();
                // group classes with identical divisor lists
                let mut merged: Vec<(Vec<u64>, Vec<Divisor>)> = Vec::new();
                for k in keys {
                    let divs = groups[&k].clone();
                    if let Some(hit) = merged.iter_mut().find(|(_, d2)| *d2 == divs) {
                        hit.0.push(k);
                    } else {
                        merged.push((vec![k], divs));
                    }
                }
                merged.sort_by_key(|(rs, _)| rs[0]);
                return (d, merged);
            }
        }
        unreachable!("d = m always satisfies the merge condition");
    }
}

/// Determinantal-divisor data for each minor size, aligned to a common
/// modulus and jointly minimized.
fn determinantal_data(m: &PolyMatrix) -> Result<(u64, Vec<(IntPoly, Vec<u64>)>)> {
    let table = m.minor_table();
    if table.det().is_zero() {
        return Err(Error::SingularMatrix);
    }
    let r = m.size();
    let mut per_size = Vec::with_capacity(r);
    for k in 1..=r {
        per_size.push(gcd_family(&table.of_size(k))?);
    }
    let mut m_all = 1u64;
    for s in &per_size {
        m_all = m_all.lcm(&s.modulus);
    }
    let mut aligned: Vec<(IntPoly, Vec<u64>)> = per_size
        .iter()
        .map(|s| {
            let cv: Vec<u64> = (0..m_all).map(|i| s.contents[(i % s.modulus) as usize]).collect();
            (s.primitive.clone(), cv)
        })
        .collect();
    for d in divisors(m_all) {
        let ok = aligned
            .iter()
            .all(|(_, cv)| (0..m_all).all(|i| cv[i as usize] == cv[(i % d) as usize]));
        if ok {
            for (_, cv) in &mut aligned {
                cv.truncate(d as usize);
            }
            m_all = d;
            break;
        }
    }
    Ok((m_all, aligned))
}

/// Elementary divisors of `M(q)` per congruence class of `q`, with the
/// primitive parts factored over the given catalog.
pub fn param_elementary_divisors(m: &PolyMatrix, catalog: &Catalog) -> Result<DivisorScheme> {
    let (modulus, aligned) = determinantal_data(m)?;
    let det = m.det();
    let mut cases = Vec::with_capacity(modulus as usize);
    let mut raw = Vec::with_capacity(modulus as usize);
    for res in 0..modulus {
        let mut divs = Vec::with_capacity(aligned.len());
        let mut rawrow = Vec::with_capacity(aligned.len());
        let mut prev_h = IntPoly::one();
        let mut prev_c = BigRational::one();
        for (h, cv) in &aligned {
            let c = BigRational::from_integer(BigInt::from(cv[res as usize]));
            let e_h = h.exact_div(&prev_h).map_err(|_| {
                Error::Internal("determinantal primitive parts do not divide".into())
            })?;
            let e_c = &c / &prev_c;
            let fac = catalog.factor(&e_h)?;
            debug_assert!(fac.constant.abs().is_one());
            divs.push(Divisor {
                content: e_c,
                prim: e_h,
                factors: fac.factors,
                residual: fac.residual,
            });
            rawrow.push((c.clone(), h.clone()));
            prev_h = h.clone();
            prev_c = c;
        }
        cases.push(divs);
        raw.push(rawrow);
    }
    Ok(DivisorScheme { modulus, cases, raw, det })
}

// ---------------------------------------------------------------------------
// Numeric Smith normal form
// ---------------------------------------------------------------------------

/// Smith normal form of a square integer matrix with unimodular transforms.
#[derive(Clone, Debug)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub left: Vec<Vec<BigInt>>,
    pub right: Vec<Vec<BigInt>>,
}

impl SnfResult {
    /// Diagonal entries different from 1 (and 0s at the end if singular).
    pub fn nontrivial(&self) -> Vec<BigInt> {
        self.diagonal.iter().filter(|d| !d.is_one()).cloned().collect()
    }
}

pub fn numeric_snf(m0: &[Vec<BigInt>]) -> Result<SnfResult> {
    let n = m0.len();
    if m0.iter().any(|r| r.len() != n) {
        return Err(Error::NotSquare);
    }
    let (d, l, r) = snf_rectangular(m0);
    Ok(SnfResult { diagonal: d, left: l, right: r })
}

/// Rectangular SNF used internally (oracle stacks an extra relation row).
/// Returns (diagonal of length min(n,m), L, R) with L·A·R diagonal,
/// L, R unimodular, diagonal nonnegative with the divisibility chain.
pub(crate) fn snf_rectangular(a0: &[Vec<BigInt>]) -> (Vec<BigInt>, Vec<Vec<BigInt>>, Vec<Vec<BigInt>>) {
    let n = a0.len();
    let m = if n == 0 { 0 } else { a0[0].len() };
    let mut a: Vec<Vec<BigInt>> = a0.to_vec();
    let mut l: Vec<Vec<BigInt>> = identity(n);
    let mut r: Vec<Vec<BigInt>> = identity(m);
    let dim = n.min(m);
    let mut t = 0;
    while t < dim {
        // smallest nonzero entry in the remaining block
        let mut best: Option<(usize, usize)> = None;
        for i in t..n {
            for j in t..m {
                if !a[i][j].is_zero()
                    && best.is_none_or(|(bi, bj)| a[i][j].abs() < a[bi][bj].abs())
                {
                    best = Some((i, j));
                }
            }
        }
        let Some((bi, bj)) = best else { break };
        a.swap(t, bi);
        l.swap(t, bi);
        swap_cols(&mut a, t, bj);
        swap_cols(&mut r, t, bj);
        if a[t][t].is_negative() {
            for x in &mut a[t] {
                *x = -&*x;
            }
            for x in &mut l[t] {
                *x = -&*x;
            }
        }
        let mut dirty = false;
        for i in t + 1..n {
            let q = a[i][t].div_floor(&a[t][t]);
            if !q.is_zero() {
                row_sub(&mut a, i, t, &q);
                row_sub(&mut l, i, t, &q);
            }
            if !a[i][t].is_zero() {
                dirty = true;
            }
        }
        for j in t + 1..m {
            let q = a[t][j].div_floor(&a[t][t]);
            if !q.is_zero() {
                col_sub(&mut a, j, t, &q);
                col_sub(&mut r, j, t, &q);
            }
            if !a[t][j].is_zero() {
                dirty = true;
            }
        }
        if dirty {
            continue;
        }
        // pivot must divide the rest of the block
        let mut viol = None;
        'scan: for i in t + 1..n {
            for j in t + 1..m {
                if !a[i][j].mod_floor(&a[t][t]).is_zero() {
                    viol = Some(i);
                    break 'scan;
                }
            }
        }
        if let Some(i) = viol {
            let one = BigInt::from(-1);
            row_sub(&mut a, t, i, &one); // row t += row i
            row_sub(&mut l, t, i, &one);
            continue;
        }
        t += 1;
    }
    let diag = (0..dim).map(|i| a[i][i].clone()).collect();
    (diag, l, r)
}

fn identity(n: usize) -> Vec<Vec<BigInt>> {
    (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect()
}

fn swap_cols(a: &mut [Vec<BigInt>], i: usize, j: usize) {
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// row i -= q * row t
fn row_sub(a: &mut [Vec<BigInt>], i: usize, t: usize, q: &BigInt) {
    let src = a[t].clone();
    for (x, s) in a[i].iter_mut().zip(src.iter()) {
        *x -= q * s;
    }
}

/// col j -= q * col t
fn col_sub(a: &mut [Vec<BigInt>], j: usize, t: usize, q: &BigInt) {
    for row in a.iter_mut() {
        let s = row[t].clone();
        row[j] -= q * s;
    }
}

// ---------------------------------------------------------------------------
// Center quotients
// ---------------------------------------------------------------------------

/// How the center quotient system was oriented; the crate's matrices act on
/// column vectors, so the validated primary form is `M·Lᵀ` with the last
/// column divided.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum QuotientOrientation {
    ColumnOfMLt,
    RowOfLM,
}

/// The quotient system over `Z[Y]` for `q = z·Y + q0`, obtained from the
/// Smith transforms of the Cartan matrix. `z` is the center order (the last
/// diagonal entry of the Smith form of `C`).
pub struct QuotientSystem {
    pub matrix: PolyMatrix,
    pub z: u64,
    pub q0: u64,
    pub orientation: QuotientOrientation,
}

/// Build the system of equations for `T/Z`: take Smith transforms
/// `L·C·R = D`, multiply `M(q)` by `Lᵀ` on the right, substitute
/// `q = z·Y + q0`, and divide the last column by `z = D[r-1][r-1]`.
/// If the division is not integral, the transposed orientation (last row of
/// `L·M`) is tried; failing both is an error carrying the offending entry.
pub fn center_quotient_system(
    mq: &PolyMatrix,
    cartan: &[Vec<i64>],
    q0: u64,
) -> Result<QuotientSystem> {
    let r = mq.size();
    let c_big: Vec<Vec<BigInt>> = cartan
        .iter()
        .map(|row| row.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let snf = numeric_snf(&c_big)?;
    let z_big = snf.diagonal[r - 1].clone();
    let z: u64 = (&z_big).try_into().map_err(|_| Error::Internal("center order".into()))?;
    for orientation in [QuotientOrientation::ColumnOfMLt, QuotientOrientation::RowOfLM] {
        match try_quotient(mq, &snf.left, z, q0, orientation) {
            Ok(matrix) => return Ok(QuotientSystem { matrix, z, q0, orientation }),
            Err(Error::CenterDivisibility(..)) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::CenterDivisibility(r - 1, r - 1))
}

fn try_quotient(
    mq: &PolyMatrix,
    l: &[Vec<BigInt>],
    z: u64,
    q0: u64,
    orientation: QuotientOrientation,
) -> Result<PolyMatrix> {
    let r = mq.size();
    let zb = BigInt::from(z);
    // N = M·Lᵀ (primary) or L·M (transposed convention)
    let prod = |i: usize, j: usize| -> IntPoly {
        let mut acc = IntPoly::zero();
        for k in 0..r {
            let term = match orientation {
                QuotientOrientation::ColumnOfMLt => mq.at(i, k).mul_scalar(&l[j][k]),
                QuotientOrientation::RowOfLM => mq.at(k, j).mul_scalar(&l[i][k]),
            };
            acc = acc.add(&term);
        }
        acc
    };
    let mut entries = Vec::with_capacity(r * r);
    for i in 0..r {
        for j in 0..r {
            // substitute q = z·Y + q0
            let e = prod(i, j).subst_linear(z, q0 as i64);
            let divide = match orientation {
                QuotientOrientation::ColumnOfMLt => j == r - 1,
                QuotientOrientation::RowOfLM => i == r - 1,
            };
            if divide {
                if e.coeffs().iter().any(|c| !c.mod_floor(&zb).is_zero()) {
                    return Err(Error::CenterDivisibility(i, j));
                }
                entries.push(IntPoly::new(e.coeffs().iter().map(|c| c / &zb).collect()));
            } else {
                entries.push(e);
            }
        }
    }
    PolyMatrix::new(r, entries)
}

/// Full quotient divisor scheme expressed back in the variable `q`:
/// residues run mod `z·m_Y` over the admissible class `q ≡ q0 (mod z)`,
/// contents become rationals (for example `1/2·Phi_1` for the split factor).
pub fn quotient_divisor_scheme(
    mq: &PolyMatrix,
    cartan: &[Vec<i64>],
    q0: u64,
    catalog: &Catalog,
) -> Result<(DivisorScheme, QuotientSystem)> {
    let system = center_quotient_system(mq, cartan, q0)?;
    let (m_y, aligned) = determinantal_data(&system.matrix)?;
    let z = system.z;
    let modulus = z * m_y;
    let det = mq.det();
    let mut cases: Vec<Vec<Divisor>> = vec![Vec::new(); modulus as usize];
    let mut raw: Vec<Vec<(BigRational, IntPoly)>> = vec![Vec::new(); modulus as usize];
    // re-express h(Y) with Y = (q - q0)/z
    let y_of_q = RatPoly::new(vec![
        BigRational::new(-BigInt::from(q0), BigInt::from(z)),
        BigRational::new(BigInt::one(), BigInt::from(z)),
    ]);
    for j_y in 0..m_y {
        let q_res = (z * j_y + q0) % modulus;
        let mut divs = Vec::new();
        let mut rawrow = Vec::new();
        let mut prev = (BigRational::one(), IntPoly::one());
        for (h, cv) in &aligned {
            let hq = h.to_rat().compose(&y_of_q);
            let (gamma, prim) = hq.content_primitive()?;
            debug_assert!(gamma.is_positive());
            let d_content = BigRational::from_integer(BigInt::from(cv[j_y as usize])) * &gamma;
            let e_c = &d_content / &prev.0;
            let e_h = prim.exact_div(&prev.1).map_err(|_| {
                Error::Internal("quotient determinantal parts do not divide".into())
            })?;
            let fac = catalog.factor(&e_h)?;
            divs.push(Divisor {
                content: e_c,
                prim: e_h,
                factors: fac.factors,
                residual: fac.residual,
            });
            rawrow.push((d_content.clone(), prim.clone()));
            prev = (d_content, prim);
        }
        cases[q_res as usize] = divs;
        raw[q_res as usize] = rawrow;
    }
    // inadmissible residues keep empty cases; they are never evaluated
    Ok((DivisorScheme { modulus, cases, raw, det }, system))
}
