//! Integer lattices and the stable-lattice closure used for modular
//! reduction of rational representations.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{Euclid, Signed, Zero};

use super::mat::QMat;
use crate::error::{Error, Result};

const MAX_CLOSURE_ITERATIONS: usize = 64;

/// A full-rank-or-less lattice in Z^dim, basis rows in Hermite normal form.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegerLattice {
    pub dim: usize,
    pub basis: Vec<Vec<BigInt>>,
}

/// Row-style Hermite normal form. Rows of the result are a canonical basis
/// of the row lattice of `rows`; zero rows are dropped.
pub fn hermite_normal_form(rows: &[Vec<BigInt>], dim: usize) -> Vec<Vec<BigInt>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let mut pivot_rows: Vec<Vec<BigInt>> = Vec::new();
    for col in 0..dim {
        // Reduce all rows against each other in this column by gcd steps.
        loop {
            let mut nonzero: Vec<usize> = (0..m.len()).filter(|&i| !m[i][col].is_zero()).collect();
            if nonzero.len() <= 1 {
                break;
            }
            nonzero.sort_by(|&a, &b| m[a][col].abs().cmp(&m[b][col].abs()));
            let small = nonzero[0];
            for &other in &nonzero[1..] {
                let q = &m[other][col] / &m[small][col];
                if q.is_zero() {
                    continue;
                }
                for c in 0..dim {
                    let t = &m[other][c] - &q * &m[small][c];
                    m[other][c] = t;
                }
            }
        }
        let idx = (0..m.len()).find(|&i| !m[i][col].is_zero());
        if let Some(i) = idx {
            let mut row = m.remove(i);
            if row[col].is_negative() {
                for x in row.iter_mut() {
                    *x = -x.clone();
                }
            }
            // Normalize earlier pivot rows against this one.
            for prev in pivot_rows.iter_mut() {
                if prev[col].is_zero() {
                    continue;
                }
                let q = prev[col].div_euclid(&row[col]);
                if !q.is_zero() {
                    for c in 0..dim {
                        let t = &prev[c] - &q * &row[c];
                        prev[c] = t;
                    }
                }
            }
            pivot_rows.push(row);
        }
        m.retain(|r| r.iter().any(|x| !x.is_zero()));
    }
    pivot_rows
}

impl IntegerLattice {
    pub fn from_rows(dim: usize, rows: Vec<Vec<BigInt>>) -> Self {
        IntegerLattice {
            dim,
            basis: hermite_normal_form(&rows, dim),
        }
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Membership of an integer vector via exact triangular reduction.
    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        for row in &self.basis {
            let pc = row.iter().position(|x| !x.is_zero()).unwrap();
            if v[pc].is_zero() {
                continue;
            }
            let q = v[pc].div_euclid(&row[pc]);
            let r = &v[pc] - &q * &row[pc];
            if !r.is_zero() {
                return false;
            }
            for c in 0..self.dim {
                let t = &v[c] - &q * &row[c];
                v[c] = t;
            }
        }
        v.iter().all(|x| x.is_zero())
    }

    pub fn basis_qmat(&self) -> QMat {
        QMat::from_rows(
            self.basis
                .iter()
                .map(|r| r.iter().map(|x| BigRational::from(x.clone())).collect())
                .collect(),
        )
    }
}

fn lcm_big(a: &BigInt, b: &BigInt) -> BigInt {
    if a.is_zero() || b.is_zero() {
        return BigInt::from(0);
    }
    (a * b / num::integer::gcd(a.clone(), b.clone())).abs()
}

fn denominator_lcm(vecs: &[Vec<BigRational>]) -> BigInt {
    let mut l = BigInt::from(1);
    for v in vecs {
        for q in v {
            l = lcm_big(&l, q.denom());
        }
    }
    l
}

/// Smallest generator-stable lattice containing the (rescaled) seeds.
///
/// Iterates "add images, Hermite-reduce" until the lattice stops growing.
/// The whole lattice is scaled by the common denominator of everything seen,
/// so the returned basis is integral; a global scale does not change the
/// induced matrices of the generators.
pub fn invariant_lattice(generators: &[QMat], seeds: &[Vec<BigRational>]) -> Result<IntegerLattice> {
    let dim = seeds
        .first()
        .map(|s| s.len())
        .ok_or_else(|| Error::Malformed("invariant_lattice needs at least one seed".into()))?;
    for g in generators {
        if g.rows != dim || g.cols != dim {
            return Err(Error::DimensionMismatch(format!(
                "generator {}x{} on dimension {dim}",
                g.rows, g.cols
            )));
        }
    }
    // Work with rational row spans scaled to integers lazily: track current
    // rational basis; stabilize; scale once at the end.
    let mut current: Vec<Vec<BigRational>> = seeds.to_vec();
    for iteration in 0..MAX_CLOSURE_ITERATIONS {
        let mut all: Vec<Vec<BigRational>> = current.clone();
        for g in generators {
            for v in &current {
                all.push(g.apply(v));
            }
        }
        let scale = denominator_lcm(&all);
        let scaled: Vec<Vec<BigInt>> = all
            .iter()
            .map(|v| {
                v.iter()
                    .map(|q| (q * BigRational::from(scale.clone())).to_integer())
                    .collect()
            })
            .collect();
        let hnf = hermite_normal_form(&scaled, dim);
        let next: Vec<Vec<BigRational>> = hnf
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| BigRational::new(x.clone(), scale.clone()))
                    .collect()
            })
            .collect();
        if next == current {
            let _ = iteration;
            // Final integral scaling of the stable rational lattice.
            let denom = denominator_lcm(&current);
            let rows: Vec<Vec<BigInt>> = current
                .iter()
                .map(|v| {
                    v.iter()
                        .map(|q| (q * BigRational::from(denom.clone())).to_integer())
                        .collect()
                })
                .collect();
            return Ok(IntegerLattice::from_rows(dim, rows));
        }
        current = next;
    }
    Err(Error::LatticeUnstable(MAX_CLOSURE_ITERATIONS))
}

/// Matrix of `g` in the lattice basis; errors if the lattice is not stable.
pub fn matrix_in_lattice_basis(g: &QMat, lattice: &IntegerLattice) -> Result<QMat> {
    let basis: Vec<Vec<BigRational>> = (0..lattice.rank())
        .map(|i| {
            lattice.basis[i]
                .iter()
                .map(|x| BigRational::from(x.clone()))
                .collect()
        })
        .collect();
    let mut rows = Vec::with_capacity(basis.len());
    for b in &basis {
        let img = g.apply(b);
        let coords = super::gauss::coordinates_in_basis(&basis, &img)
            .ok_or_else(|| Error::Validation("lattice not stable under generator".into()))?;
        rows.push(coords);
    }
    // Row i of the result holds coordinates of g(b_i); transpose to get the
    // action matrix on coordinate columns.
    Ok(QMat::from_rows(rows).transpose())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::big_rational_from as br;

    fn bi(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn hnf_canonicalizes() {
        let rows = vec![vec![bi(2), bi(4)], vec![bi(1), bi(3)]];
        let h = hermite_normal_form(&rows, 2);
        assert_eq!(h, vec![vec![bi(1), bi(1)], vec![bi(0), bi(2)]]);
    }

    #[test]
    fn permutation_generators_give_z2() {
        let swap = QMat::from_i64_rows(&[vec![0, 1], vec![1, 0]]);
        let id = QMat::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        let lat = invariant_lattice(&[swap, id], &[vec![br(1), br(0)]]).unwrap();
        assert_eq!(lat.rank(), 2);
        assert!(lat.contains(&[bi(0), bi(1)]));
        assert!(lat.contains(&[bi(1), bi(0)]));
    }

    #[test]
    fn denominator_clearing() {
        let id = QMat::from_i64_rows(&[vec![1, 0], vec![0, 1]]);
        let seed = vec![BigRational::new(bi(1), bi(2)), br(0)];
        let lat = invariant_lattice(&[id], &[seed]).unwrap();
        assert_eq!(lat.rank(), 1);
        assert_eq!(lat.basis[0], vec![bi(1), bi(0)]);
    }

    #[test]
    fn stability_under_generators() {
        // 2-dim standard representation of S_3 in a rational basis.
        let s = QMat::from_i64_rows(&[vec![-1, 1], vec![0, 1]]);
        let t = QMat::from_i64_rows(&[vec![1, 0], vec![1, -1]]);
        let lat = invariant_lattice(&[s.clone(), t.clone()], &[vec![br(1), br(0)]]).unwrap();
        assert_eq!(lat.rank(), 2);
        for g in [&s, &t] {
            for row in &lat.basis {
                let v: Vec<BigRational> =
                    row.iter().map(|x| BigRational::from(x.clone())).collect();
                let img = g.apply(&v);
                let int_img: Vec<BigInt> = img.iter().map(|q| q.to_integer()).collect();
                assert!(lat.contains(&int_img));
            }
        }
    }
}
