//! Root systems of types A, B, C, D and G2 in integer coordinates, with the
//! dominance order and the smallness test on dominant coweights.
//!
//! Coordinates: A_n lives in the zero-sum sublattice of Z^{n+1}; B/C/D use
//! the standard basis of Z^n; G2 uses the basis of simple coroots, with the
//! pairing data hard-coded. Coweights of the simply connected group form
//! the coroot lattice, which is what `in_coweight_lattice` tests.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::field::big_rational_from as br;
use crate::linalg::gauss::coordinates_in_basis;
use num::rational::BigRational;
use num::traits::Signed;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LieType {
    A,
    B,
    C,
    D,
    G2,
}

impl std::fmt::Display for LieType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            LieType::A => write!(f, "A"),
            LieType::B => write!(f, "B"),
            LieType::C => write!(f, "C"),
            LieType::D => write!(f, "D"),
            LieType::G2 => write!(f, "G2"),
        }
    }
}

/// Integer coweight vector in the coordinate system of its root system.
pub type Coweight = Vec<i64>;

/// One root: the functional it induces on coweight coordinates, its coroot
/// as a coweight vector, and its length class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    pub functional: Vec<i64>,
    pub coroot: Vec<i64>,
    pub long: bool,
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    pub lie_type: LieType,
    pub rank: usize,
    /// Dimension of the coordinate space (rank + 1 for type A).
    pub coord_dim: usize,
    pub roots: Vec<Root>,
    /// Indices into `roots` of the simple roots.
    pub simple: Vec<usize>,
    pub positive_count: usize,
    pub weyl_order: u64,
}

fn unit(dim: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = sign;
    v
}

fn two_unit(dim: usize, i: usize, si: i64, j: usize, sj: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = si;
    v[j] = sj;
    v
}

impl RootSystem {
    pub fn new(lie_type: LieType, rank: usize) -> Result<RootSystem> {
        let ok = match lie_type {
            LieType::A => rank >= 1,
            LieType::B | LieType::C => rank >= 2,
            LieType::D => rank >= 3,
            LieType::G2 => rank == 2,
        };
        if !ok {
            return Err(Error::Unsupported(format!(
                "root system {lie_type}_{rank}"
            )));
        }
        let rs = match lie_type {
            LieType::A => Self::build_a(rank),
            LieType::B => Self::build_b(rank),
            LieType::C => Self::build_c(rank),
            LieType::D => Self::build_d(rank),
            LieType::G2 => Self::build_g2(),
        };
        rs.validate()?;
        Ok(rs)
    }

    fn build_a(n: usize) -> RootSystem {
        let dim = n + 1;
        let mut roots = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if i == j {
                    continue;
                }
                let v = two_unit(dim, i, 1, j, -1);
                roots.push(Root {
                    functional: v.clone(),
                    coroot: v,
                    long: false,
                });
            }
        }
        let simple = (0..n)
            .map(|i| {
                roots
                    .iter()
                    .position(|r| r.functional == two_unit(dim, i, 1, i + 1, -1))
                    .unwrap()
            })
            .collect();
        RootSystem {
            lie_type: LieType::A,
            rank: n,
            coord_dim: dim,
            roots,
            simple,
            positive_count: n * (n + 1) / 2,
            weyl_order: factorial(dim as u64),
        }
    }

    fn build_b(n: usize) -> RootSystem {
        let mut roots = Vec::new();
        // long: +-e_i +- e_j, coroot equal
        for i in 0..n {
            for j in (i + 1)..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let v = two_unit(n, i, si, j, sj);
                    roots.push(Root {
                        functional: v.clone(),
                        coroot: v,
                        long: true,
                    });
                }
            }
        }
        // short: +-e_i, coroot +-2e_i
        for i in 0..n {
            for s in [1, -1] {
                roots.push(Root {
                    functional: unit(n, i, s),
                    coroot: unit(n, i, 2 * s),
                    long: false,
                });
            }
        }
        let mut simple: Vec<usize> = (0..n - 1)
            .map(|i| {
                roots
                    .iter()
                    .position(|r| r.functional == two_unit(n, i, 1, i + 1, -1))
                    .unwrap()
            })
            .collect();
        simple.push(
            roots
                .iter()
                .position(|r| r.functional == unit(n, n - 1, 1))
                .unwrap(),
        );
        RootSystem {
            lie_type: LieType::B,
            rank: n,
            coord_dim: n,
            roots,
            simple,
            positive_count: n * n,
            weyl_order: (1u64 << n) * factorial(n as u64),
        }
    }

    fn build_c(n: usize) -> RootSystem {
        let mut roots = Vec::new();
        // short: +-e_i +- e_j
        for i in 0..n {
            for j in (i + 1)..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let v = two_unit(n, i, si, j, sj);
                    roots.push(Root {
                        functional: v.clone(),
                        coroot: v,
                        long: false,
                    });
                }
            }
        }
        // long: +-2e_i, coroot +-e_i
        for i in 0..n {
            for s in [1, -1] {
                roots.push(Root {
                    functional: unit(n, i, 2 * s),
                    coroot: unit(n, i, s),
                    long: true,
                });
            }
        }
        let mut simple: Vec<usize> = (0..n - 1)
            .map(|i| {
                roots
                    .iter()
                    .position(|r| r.functional == two_unit(n, i, 1, i + 1, -1))
                    .unwrap()
            })
            .collect();
        simple.push(
            roots
                .iter()
                .position(|r| r.functional == unit(n, n - 1, 2))
                .unwrap(),
        );
        RootSystem {
            lie_type: LieType::C,
            rank: n,
            coord_dim: n,
            roots,
            simple,
            positive_count: n * n,
            weyl_order: (1u64 << n) * factorial(n as u64),
        }
    }

    fn build_d(n: usize) -> RootSystem {
        let mut roots = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                    let v = two_unit(n, i, si, j, sj);
                    roots.push(Root {
                        functional: v.clone(),
                        coroot: v,
                        long: false,
                    });
                }
            }
        }
        let mut simple: Vec<usize> = (0..n - 1)
            .map(|i| {
                roots
                    .iter()
                    .position(|r| r.functional == two_unit(n, i, 1, i + 1, -1))
                    .unwrap()
            })
            .collect();
        simple.push(
            roots
                .iter()
                .position(|r| r.functional == two_unit(n, n - 2, 1, n - 1, 1))
                .unwrap(),
        );
        RootSystem {
            lie_type: LieType::D,
            rank: n,
            coord_dim: n,
            roots,
            simple,
            positive_count: n * (n - 1),
            weyl_order: (1u64 << (n - 1)) * factorial(n as u64),
        }
    }

    /// G2 in the simple-coroot basis. Root a*alpha_1 + b*alpha_2 induces the
    /// functional (2a-3b, -a+2b) on coroot coordinates; short coroots are
    /// (a, 3b), long coroots (a/3, b).
    fn build_g2() -> RootSystem {
        let data: [(i64, i64, bool); 6] = [
            (1, 0, false),
            (0, 1, true),
            (1, 1, false),
            (2, 1, false),
            (3, 1, true),
            (3, 2, true),
        ];
        let mut roots = Vec::new();
        for &(a, b, long) in &data {
            for s in [1i64, -1] {
                let functional = vec![s * (2 * a - 3 * b), s * (-a + 2 * b)];
                let coroot = if long {
                    vec![s * a / 3, s * b]
                } else {
                    vec![s * a, s * 3 * b]
                };
                roots.push(Root {
                    functional,
                    coroot,
                    long,
                });
            }
        }
        let simple = vec![
            roots
                .iter()
                .position(|r| r.functional == vec![2, -1])
                .unwrap(),
            roots
                .iter()
                .position(|r| r.functional == vec![-3, 2])
                .unwrap(),
        ];
        RootSystem {
            lie_type: LieType::G2,
            rank: 2,
            coord_dim: 2,
            roots,
            simple,
            positive_count: 6,
            weyl_order: 12,
        }
    }

    fn validate(&self) -> Result<()> {
        let expected = match self.lie_type {
            LieType::A => self.rank * (self.rank + 1),
            LieType::B | LieType::C => 2 * self.rank * self.rank,
            LieType::D => 2 * self.rank * (self.rank - 1),
            LieType::G2 => 12,
        };
        if self.roots.len() != expected {
            return Err(Error::Validation(format!(
                "root count {} != {expected}",
                self.roots.len()
            )));
        }
        if self.positive_count * 2 != self.roots.len() {
            return Err(Error::Validation("N != |roots|/2".into()));
        }
        for r in &self.roots {
            let neg: Vec<i64> = r.functional.iter().map(|x| -x).collect();
            if !self.roots.iter().any(|s| s.functional == neg) {
                return Err(Error::Validation("roots not closed under negation".into()));
            }
            // <coroot, root> = 2
            let p: i64 = r
                .functional
                .iter()
                .zip(r.coroot.iter())
                .map(|(a, b)| a * b)
                .sum();
            if p != 2 {
                return Err(Error::Validation("coroot pairing != 2".into()));
            }
        }
        for &s in &self.simple {
            if self.pairing(&self.roots[s].coroot, s) != 2 {
                return Err(Error::Validation("simple root normalization".into()));
            }
        }
        Ok(())
    }

    /// Pairing of a coweight with root number `idx`.
    pub fn pairing(&self, v: &[i64], idx: usize) -> i64 {
        self.roots[idx]
            .functional
            .iter()
            .zip(v.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Reflection of a coweight in root number `idx`.
    pub fn reflect(&self, v: &[i64], idx: usize) -> Coweight {
        let p = self.pairing(v, idx);
        v.iter()
            .zip(self.roots[idx].coroot.iter())
            .map(|(x, c)| x - p * c)
            .collect()
    }

    pub fn is_dominant(&self, v: &[i64]) -> bool {
        self.simple.iter().all(|&s| self.pairing(v, s) >= 0)
    }

    /// Membership in the coweight lattice of the simply connected group,
    /// i.e. the coroot lattice.
    pub fn in_coweight_lattice(&self, v: &[i64]) -> bool {
        if v.len() != self.coord_dim {
            return false;
        }
        match self.lie_type {
            LieType::A => v.iter().sum::<i64>() == 0,
            LieType::B | LieType::D => v.iter().sum::<i64>() % 2 == 0,
            LieType::C | LieType::G2 => true,
        }
    }

    /// The dominant representative of the W-orbit of `v`.
    pub fn dominant_rep(&self, v: &[i64]) -> Coweight {
        let mut w = v.to_vec();
        loop {
            let mut moved = false;
            for &s in &self.simple {
                if self.pairing(&w, s) < 0 {
                    w = self.reflect(&w, s);
                    moved = true;
                }
            }
            if !moved {
                return w;
            }
        }
    }

    /// Dominance order on dominant coweights: mu <= lambda iff lambda - mu
    /// is a nonnegative rational combination of simple coroots, solved
    /// exactly against the (independent) simple coroot basis.
    pub fn leq_dominance(&self, mu: &[i64], lambda: &[i64]) -> Result<bool> {
        if !self.is_dominant(mu) || !self.is_dominant(lambda) {
            return Err(Error::Malformed("leq_dominance needs dominant inputs".into()));
        }
        let basis: Vec<Vec<BigRational>> = self
            .simple
            .iter()
            .map(|&s| self.roots[s].coroot.iter().map(|&x| br(x)).collect())
            .collect();
        let diff: Vec<BigRational> = lambda
            .iter()
            .zip(mu.iter())
            .map(|(a, b)| br(a - b))
            .collect();
        match coordinates_in_basis(&basis, &diff) {
            None => Ok(false),
            Some(coeffs) => Ok(coeffs.iter().all(|c| !c.is_negative())),
        }
    }

    /// One representative doubled coroot per root-length orbit, taken dominant.
    pub fn doubled_coroot_reps(&self) -> Vec<Coweight> {
        let mut reps: Vec<Coweight> = Vec::new();
        for long in [false, true] {
            if let Some(r) = self.roots.iter().find(|r| r.long == long) {
                let doubled: Vec<i64> = r.coroot.iter().map(|x| 2 * x).collect();
                let dom = self.dominant_rep(&doubled);
                if !reps.contains(&dom) {
                    reps.push(dom);
                }
            }
        }
        reps
    }

    /// Smallness of a dominant coweight: no doubled coroot lies in the
    /// convex hull of the W-orbit, tested through the dominance order.
    pub fn is_small(&self, lambda: &[i64]) -> bool {
        assert!(self.is_dominant(lambda), "is_small needs a dominant input");
        self.doubled_coroot_reps()
            .iter()
            .all(|delta| !self.leq_dominance(delta, lambda).unwrap_or(false))
    }

    /// All small dominant coweights in the coweight lattice, sorted
    /// lexicographically. Finite because failure of smallness is upward
    /// closed in the dominance order and every coordinate of a small
    /// coweight is bounded by the doubled-coroot data.
    pub fn enumerate_small(&self) -> Vec<Coweight> {
        let bound = self.small_coordinate_bound();
        let mut out = Vec::new();
        let mut v = vec![0i64; self.coord_dim];
        self.enumerate_box(&mut v, 0, bound, &mut out);
        out.sort();
        out
    }

    fn small_coordinate_bound(&self) -> i64 {
        let mut b = 0i64;
        for delta in self.doubled_coroot_reps() {
            for x in &delta {
                b = b.max(x.abs());
            }
        }
        // Everything dominated by a doubled coroot bound stays within the
        // box; one extra step of slack keeps the boundary honest.
        b + self.coord_dim as i64
    }

    fn enumerate_box(&self, v: &mut Vec<i64>, pos: usize, bound: i64, out: &mut Vec<Coweight>) {
        if pos == v.len() {
            if self.is_dominant(v) && self.in_coweight_lattice(v) && self.is_small(v) {
                out.push(v.clone());
            }
            return;
        }
        for x in -bound..=bound {
            v[pos] = x;
            self.enumerate_box(v, pos + 1, bound, out);
        }
        v[pos] = 0;
    }

    /// Full W-orbit of a coweight (used by hull cross-checks and tests).
    pub fn orbit(&self, v: &[i64]) -> Vec<Coweight> {
        let mut seen = std::collections::BTreeSet::new();
        let mut queue = vec![v.to_vec()];
        seen.insert(v.to_vec());
        while let Some(w) = queue.pop() {
            for &s in &self.simple {
                let img = self.reflect(&w, s);
                if seen.insert(img.clone()) {
                    queue.push(img);
                }
            }
        }
        seen.into_iter().collect()
    }
}

pub fn factorial(n: u64) -> u64 {
    (1..=n).product()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_counts() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        assert_eq!(a2.roots.len(), 6);
        assert_eq!(a2.positive_count, 3);
        assert_eq!(a2.weyl_order, 6);

        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        assert_eq!(b2.roots.len(), 8);
        assert_eq!(b2.positive_count, 4);
        assert_eq!(b2.weyl_order, 8);

        let g2 = RootSystem::new(LieType::G2, 2).unwrap();
        assert_eq!(g2.roots.len(), 12);
        assert_eq!(g2.positive_count, 6);
        assert_eq!(g2.weyl_order, 12);
    }

    #[test]
    fn unsupported_ranks() {
        assert!(RootSystem::new(LieType::D, 2).is_err());
        assert!(RootSystem::new(LieType::B, 1).is_err());
    }

    #[test]
    fn dominant_reps() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        assert_eq!(a2.dominant_rep(&[-1, 0, 1]), vec![1, 0, -1]);
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        assert_eq!(b2.dominant_rep(&[0, -1]), vec![1, 0]);
        assert_eq!(b2.dominant_rep(&[0, 0]), vec![0, 0]);
    }

    #[test]
    fn dominance_examples() {
        let a2 = RootSystem::new(LieType::A, 2).unwrap();
        assert!(a2.leq_dominance(&[1, 0, -1], &[2, 0, -2]).unwrap());
        assert!(!a2.leq_dominance(&[2, 0, -2], &[1, 0, -1]).unwrap());
        assert!(a2.leq_dominance(&[1, 0, -1], &[1, 0, -1]).unwrap());
    }

    #[test]
    fn smallness_rank_one_and_c2() {
        let a1 = RootSystem::new(LieType::A, 1).unwrap();
        assert!(a1.is_small(&[1, -1]));
        assert!(!a1.is_small(&[2, -2]));
        assert!(a1.is_small(&[0, 0]));
        let c2 = RootSystem::new(LieType::C, 2).unwrap();
        assert!(c2.is_small(&[1, 1]));
    }

    #[test]
    fn enumerate_small_examples() {
        let c2 = RootSystem::new(LieType::C, 2).unwrap();
        assert_eq!(
            c2.enumerate_small(),
            vec![vec![0, 0], vec![1, 0], vec![1, 1]]
        );
        let a1 = RootSystem::new(LieType::A, 1).unwrap();
        assert_eq!(a1.enumerate_small(), vec![vec![0, 0], vec![1, -1]]);
        let b2 = RootSystem::new(LieType::B, 2).unwrap();
        let small = b2.enumerate_small();
        assert!(small.contains(&vec![2, 0]));
        assert!(small.contains(&vec![1, 1]));
    }

    #[test]
    fn g2_pairings() {
        let g2 = RootSystem::new(LieType::G2, 2).unwrap();
        // reflection in a simple root has order two on a sample vector
        for &s in &g2.simple {
            let v = vec![3, -2];
            assert_eq!(g2.reflect(&g2.reflect(&v, s), s), v);
        }
        // the highest long root's coroot is (1,2) in coroot coordinates
        let theta_check = g2
            .roots
            .iter()
            .find(|r| r.long && r.coroot == vec![1, 2])
            .is_some();
        assert!(theta_check);
    }
}
