//! Root data of the exceptional types, Weyl reflections on the coroot
//! lattice, Frobenius twists, and construction of the torus matrix
//! `M(q) = q·w·F0 − 1`.
//!
//! Conventions (pinned by reproducing the structure tables, see README):
//! reflection matrices act on column vectors in the simple-coroot basis,
//! `s_i` has row `i` equal to `δ_ij − c_ji`; a class word multiplies left to
//! right; the triality of the D4 datum is the cycle `1 → 4 → 2 → 1` fixing
//! node 3; the Suzuki/Ree monomial `F0` carries `√p^{+1}` on the short
//! simple coroots, so `q·F0 = q'·D` with `D[σ(j)][j] = p` for short `j`.

use crate::parammatrix::PolyMatrix;
use crate::poly::IntPoly;
use crate::{Error, Result};
use num_bigint::BigInt;

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum GroupType {
    G2,
    TriD4,
    F4,
    E6,
    TwE6,
    E7,
    E8,
    SuzB2,
    ReeG2,
    ReeF4,
}

pub use GroupType::*;

impl GroupType {
    pub fn all() -> [GroupType; 10] {
        [G2, TriD4, F4, E6, TwE6, E7, E8, SuzB2, ReeG2, ReeF4]
    }

    pub fn parse(s: &str) -> Result<GroupType> {
        match s {
            "G2" => Ok(G2),
            "3D4" => Ok(TriD4),
            "F4" => Ok(F4),
            "E6" => Ok(E6),
            "2E6" => Ok(TwE6),
            "E7" => Ok(E7),
            "E8" => Ok(E8),
            "2B2" => Ok(SuzB2),
            "2G2" => Ok(ReeG2),
            "2F4" => Ok(ReeF4),
            _ => Err(Error::UnknownType(s.to_string())),
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            G2 => "G2",
            TriD4 => "3D4",
            F4 => "F4",
            E6 => "E6",
            TwE6 => "2E6",
            E7 => "E7",
            E8 => "E8",
            SuzB2 => "2B2",
            ReeG2 => "2G2",
            ReeF4 => "2F4",
        }
    }

    /// Rank of the underlying root system (= size of the torus matrix).
    pub fn rank(&self) -> usize {
        match self {
            G2 | SuzB2 | ReeG2 => 2,
            TriD4 | F4 | ReeF4 => 4,
            E6 | TwE6 => 6,
            E7 => 7,
            E8 => 8,
        }
    }

    /// Characteristic of the Suzuki/Ree twist, if any.
    pub fn twist_prime(&self) -> Option<u32> {
        match self {
            SuzB2 | ReeF4 => Some(2),
            ReeG2 => Some(3),
            _ => None,
        }
    }

    /// `(q0, |Z|)` for the types whose simply-connected form has a center
    /// contained in every maximal torus: E6 at `q ≡ 1 (3)`, twisted E6 at
    /// `q ≡ 2 (3)`, E7 at `q ≡ 1 (2)`.
    pub fn center_quotient(&self) -> Option<(u64, u64)> {
        match self {
            E6 => Some((1, 3)),
            TwE6 => Some((2, 3)),
            E7 => Some((1, 2)),
            _ => None,
        }
    }
}

/// Cartan matrix, diagram twist and Suzuki/Ree data for one group type.
#[derive(Clone, Debug)]
pub struct RootDatum {
    pub group: GroupType,
    pub rank: usize,
    cartan: Vec<Vec<i64>>,
    /// Diagram permutation for twisted types (0-based, identity otherwise).
    perm: Vec<usize>,
    /// Suzuki/Ree: `q·F0 = q'·D` with this integer monomial matrix.
    suzuki_ree: Option<Vec<Vec<i64>>>,
}

/// Cartan matrix `c_ij = α_i^∨(α_j)` of the base system under the table
/// numbering (E-types: node 2 on the branch; G2 edge 1⇒2; F4 edge 2⇒3;
/// B2 edge 2⇒1; D4 star at node 3).
pub fn cartan(group: GroupType) -> Vec<Vec<i64>> {
    match group {
        SuzB2 => vec![vec![2, -2], vec![-1, 2]],
        G2 | ReeG2 => vec![vec![2, -1], vec![-3, 2]],
        TriD4 => vec![
            vec![2, 0, -1, 0],
            vec![0, 2, -1, 0],
            vec![-1, -1, 2, -1],
            vec![0, 0, -1, 2],
        ],
        F4 | ReeF4 => vec![
            vec![2, -1, 0, 0],
            vec![-1, 2, -1, 0],
            vec![0, -2, 2, -1],
            vec![0, 0, -1, 2],
        ],
        E6 | TwE6 | E7 | E8 => {
            let r = match group {
                E6 | TwE6 => 6,
                E7 => 7,
                _ => 8,
            };
            let mut edges = vec![(1usize, 3usize), (3, 4), (2, 4)];
            edges.extend((4..r).map(|k| (k, k + 1)));
            let mut c = vec![vec![0i64; r]; r];
            for (i, row) in c.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (a, b) in edges {
                c[a - 1][b - 1] = -1;
                c[b - 1][a - 1] = -1;
            }
            c
        }
    }
}

impl RootDatum {
    pub fn new(group: GroupType) -> RootDatum {
        let cartan = cartan(group);
        let rank = cartan.len();
        let perm = match group {
            TriD4 => vec![3, 0, 2, 1], // 1 → 4 → 2 → 1, node 3 fixed
            TwE6 => vec![5, 1, 4, 3, 2, 0],
            _ => (0..rank).collect(),
        };
        let suzuki_ree = group.twist_prime().map(|p| {
            let p = p as i64;
            // σ is the diagram flip; short simple coroots carry the factor p
            let (sigma, short): (Vec<usize>, Vec<bool>) = match group {
                SuzB2 => (vec![1, 0], vec![true, false]),
                ReeG2 => (vec![1, 0], vec![false, true]),
                ReeF4 => (vec![3, 2, 1, 0], vec![false, false, true, true]),
                _ => unreachable!(),
            };
            let mut d = vec![vec![0i64; rank]; rank];
            for j in 0..rank {
                d[sigma[j]][j] = if short[j] { p } else { 1 };
            }
            d
        });
        RootDatum { group, rank, cartan, perm, suzuki_ree }
    }

    pub fn cartan_matrix(&self) -> &Vec<Vec<i64>> {
        &self.cartan
    }

    /// Matrix of `s_i` on the coroot basis (column-vector action); `i` is
    /// 1-based as in the class words.
    pub fn simple_reflection(&self, i: usize) -> Result<Vec<Vec<i64>>> {
        if i == 0 || i > self.rank {
            return Err(Error::IndexRange(i));
        }
        let mut s = ident(self.rank);
        for j in 0..self.rank {
            s[i - 1][j] -= self.cartan[j][i - 1];
        }
        Ok(s)
    }

    /// Product of simple reflections, left to right as written.
    pub fn weyl_element(&self, word: &[usize]) -> Result<Vec<Vec<i64>>> {
        let mut w = ident(self.rank);
        for &i in word {
            w = matmul(&w, &self.simple_reflection(i)?);
        }
        Ok(w)
    }

    /// Finite part of the Frobenius action: identity, the diagram permutation
    /// matrix, or (Suzuki/Ree) the integer monomial matrix `D` with
    /// `q·F0 = q'·D`.
    pub fn frobenius_f0(&self) -> Vec<Vec<i64>> {
        if let Some(d) = &self.suzuki_ree {
            return d.clone();
        }
        let mut p = vec![vec![0i64; self.rank]; self.rank];
        for (j, &pj) in self.perm.iter().enumerate() {
            p[pj][j] = 1;
        }
        p
    }

    pub fn diagram_permutation(&self) -> &[usize] {
        &self.perm
    }

    /// Torus matrix for a class word: `q·(w·F0) − 1` over `Z[q]`, or
    /// `q'·(w·D) − 1` over `Z[q']` for the Suzuki/Ree types.
    pub fn torus_matrix(&self, word: &[usize]) -> Result<PolyMatrix> {
        let w = self.weyl_element(word)?;
        let a = matmul(&w, &self.frobenius_f0());
        let r = self.rank;
        let mut entries = Vec::with_capacity(r * r);
        for i in 0..r {
            for j in 0..r {
                let delta = i64::from(i == j);
                entries.push(IntPoly::new(vec![
                    BigInt::from(-delta),
                    BigInt::from(a[i][j]),
                ]));
            }
        }
        PolyMatrix::new(r, entries)
    }
}

fn ident(n: usize) -> Vec<Vec<i64>> {
    let mut m = vec![vec![0i64; n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 1;
    }
    m
}

fn matmul(a: &[Vec<i64>], b: &[Vec<i64>]) -> Vec<Vec<i64>> {
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

/// A named class representative with its reduced word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ClassRep {
    pub name: String,
    pub word: Vec<usize>,
}

impl ClassRep {
    pub fn word_string(&self) -> String {
        if self.word.is_empty() {
            "-".to_string()
        } else {
            self.word.iter().map(|d| d.to_string()).collect()
        }
    }
}

/// The class lists from the published tables, shipped as data files.
pub fn class_data(group: GroupType) -> Vec<ClassRep> {
    let data = match group {
        G2 => include_str!("../data/g2.tsv"),
        TriD4 => include_str!("../data/3d4.tsv"),
        F4 => include_str!("../data/f4.tsv"),
        E6 => include_str!("../data/e6.tsv"),
        TwE6 => include_str!("../data/2e6.tsv"),
        E7 => include_str!("../data/e7.tsv"),
        E8 => include_str!("../data/e8.tsv"),
        SuzB2 => include_str!("../data/2b2.tsv"),
        ReeG2 => include_str!("../data/2g2.tsv"),
        ReeF4 => include_str!("../data/2f4.tsv"),
    };
    data.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let (name, word) = line.split_once('\t').expect("name<TAB>word");
            let word = if word == "-" {
                vec![]
            } else {
                word.chars()
                    .map(|c| c.to_digit(10).expect("digit generator index") as usize)
                    .collect()
            };
            ClassRep { name: name.to_string(), word }
        })
        .collect()
}

/// Find one class by name.
pub fn find_class(group: GroupType, name: &str) -> Result<ClassRep> {
    class_data(group)
        .into_iter()
        .find(|c| c.name == name)
        .ok_or_else(|| Error::UnknownClass(name.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_determinants() {
        let det = |g: GroupType| {
            let c = cartan(g);
            let n = c.len();
            let mut m: Vec<Vec<f64>> = c.iter().map(|r| r.iter().map(|&x| x as f64).collect()).collect();
            let mut d = 1.0;
            for i in 0..n {
                let p = (i..n).find(|&k| m[k][i].abs() > 1e-9).unwrap();
                if p != i {
                    m.swap(i, p);
                    d = -d;
                }
                d *= m[i][i];
                for k in i + 1..n {
                    let f = m[k][i] / m[i][i];
                    for j in i..n {
                        m[k][j] -= f * m[i][j];
                    }
                }
            }
            d.round() as i64
        };
        assert_eq!(det(G2), 1);
        assert_eq!(det(F4), 1);
        assert_eq!(det(E8), 1);
        assert_eq!(det(E7), 2);
        assert_eq!(det(E6), 3);
        assert_eq!(det(SuzB2), 2);
        assert_eq!(det(TriD4), 4);
    }

    #[test]
    fn reflections_are_involutions_with_braid_orders() {
        for g in GroupType::all() {
            let d = RootDatum::new(g);
            if g.twist_prime().is_some() {
                continue;
            }
            let c = d.cartan_matrix().clone();
            for i in 1..=d.rank {
                let s = d.simple_reflection(i).unwrap();
                assert_eq!(matmul(&s, &s), ident(d.rank), "{g:?} s_{i}^2");
                for j in 1..=d.rank {
                    if i == j {
                        continue;
                    }
                    let prod = matmul(&s, &d.simple_reflection(j).unwrap());
                    let mij = match c[i - 1][j - 1] * c[j - 1][i - 1] {
                        0 => 2,
                        1 => 3,
                        2 => 4,
                        3 => 6,
                        other => panic!("bad cartan product {other}"),
                    };
                    let mut p = prod.clone();
                    let mut k = 1;
                    while p != ident(d.rank) {
                        p = matmul(&p, &prod);
                        k += 1;
                        assert!(k <= 6);
                    }
                    assert_eq!(k, mij, "{g:?} order of s_{i} s_{j}");
                }
            }
        }
    }

    #[test]
    fn coxeter_orders() {
        let d = RootDatum::new(G2);
        let w = d.weyl_element(&[1, 2]).unwrap();
        assert_eq!(order_of(&w), 6);
        let d = RootDatum::new(E8);
        let w = d.weyl_element(&[1, 2, 3, 4, 5, 6, 7, 8]).unwrap();
        assert_eq!(order_of(&w), 30);
    }

    fn order_of(m: &[Vec<i64>]) -> usize {
        let n = m.len();
        let mut p = m.to_vec();
        let mut k = 1;
        while p != ident(n) {
            p = matmul(&p, m);
            k += 1;
            assert!(k <= 400);
        }
        k
    }

    #[test]
    fn empty_word_is_identity() {
        let d = RootDatum::new(F4);
        assert_eq!(d.weyl_element(&[]).unwrap(), ident(4));
        assert!(d.weyl_element(&[5]).is_err());
    }

    #[test]
    fn torus_matrix_examples() {
        // G2, empty word: diag(q-1, q-1)
        let d = RootDatum::new(G2);
        let m = d.torus_matrix(&[]).unwrap();
        assert_eq!(m.at(0, 0), &IntPoly::from_i64(&[-1, 1]));
        assert_eq!(m.at(0, 1), &IntPoly::zero());
        // 2B2, empty word: det = ±(2r^2 - 1)
        let d = RootDatum::new(SuzB2);
        let m = d.torus_matrix(&[]).unwrap();
        let det = m.det();
        let pm = IntPoly::from_i64(&[-1, 0, 2]);
        assert!(det == pm || det == pm.neg());
    }

    #[test]
    fn twisted_e6_permutation() {
        let d = RootDatum::new(TwE6);
        assert_eq!(d.diagram_permutation(), &[5, 1, 4, 3, 2, 0]);
        // F0 C F0^{-1} = C (diagram automorphism preserves the Cartan matrix)
        let f0 = d.frobenius_f0();
        let c: Vec<Vec<i64>> = d.cartan_matrix().clone();
        let cf = matmul(&matmul(&f0, &c), &transpose(&f0));
        assert_eq!(cf, c);
    }

    fn transpose(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
        let n = m.len();
        (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
    }

    #[test]
    fn class_counts() {
        let expect = [
            (G2, 6),
            (TriD4, 7),
            (F4, 25),
            (E6, 25),
            (TwE6, 25),
            (E7, 60),
            (E8, 112),
            (SuzB2, 3),
            (ReeG2, 4),
            (ReeF4, 11),
        ];
        for (g, n) in expect {
            assert_eq!(class_data(g).len(), n, "{g:?}");
        }
        let g2 = class_data(G2);
        assert_eq!(g2[0].name, "A_0");
        assert!(g2[0].word.is_empty());
        assert_eq!(g2[5].word, vec![1, 2, 1, 2, 1, 2]);
    }
}
