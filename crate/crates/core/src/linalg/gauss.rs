//! Exact elimination: reduced row echelon form, kernels, solving, and the
//! spin closure used everywhere a submodule has to be generated.
//!
//! Pivoting is deterministic (first nonzero column, first usable row) so the
//! returned bases are literal values tests can compare.

use super::field::Scalar;
use super::mat::{Mat, Matrix};
use crate::error::{Error, Result};

/// Result of `gauss`: rank, reduced echelon form and a kernel basis.
#[derive(Debug, Clone)]
pub struct GaussResult<T> {
    pub rank: usize,
    pub rref: Mat<T>,
    pub pivots: Vec<usize>,
    pub kernel_basis: Vec<Vec<T>>,
}

/// Row-reduce in place; returns pivot column indices.
pub fn rref_in_place<T: Scalar>(m: &mut Mat<T>) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let mut pivot_row = None;
        for r in row..m.rows {
            if !m.at(r, col).is_zero() {
                pivot_row = Some(r);
                break;
            }
        }
        let Some(pr) = pivot_row else { continue };
        if pr != row {
            for c in 0..m.cols {
                m.data.swap(row * m.cols + c, pr * m.cols + c);
            }
        }
        let inv = m.at(row, col).inv().expect("pivot invertible");
        for c in col..m.cols {
            let v = m.at(row, c).mul(&inv);
            *m.at_mut(row, c) = v;
        }
        for r in 0..m.rows {
            if r == row || m.at(r, col).is_zero() {
                continue;
            }
            let factor = m.at(r, col).clone();
            for c in col..m.cols {
                let v = m.at(r, c).sub(&factor.mul(m.at(row, c)));
                *m.at_mut(r, c) = v;
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn gauss_mat<T: Scalar>(m: &Mat<T>) -> GaussResult<T> {
    let mut rref = m.clone();
    let pivots = rref_in_place(&mut rref);
    let rank = pivots.len();
    let model = m.model();
    let mut kernel_basis = Vec::new();
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    for free in 0..m.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![model.zero_like(); m.cols];
        v[free] = model.one_like();
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = rref.at(r, free).neg();
        }
        kernel_basis.push(v);
    }
    GaussResult {
        rank,
        rref,
        pivots,
        kernel_basis,
    }
}

/// Public echelon entry point over the tagged matrix type.
pub fn gauss(m: &Matrix) -> Result<(usize, Matrix, Vec<Vec<crate::linalg::FieldValue>>)> {
    use crate::linalg::FieldValue;
    match m {
        Matrix::Rational(q) => {
            let g = gauss_mat(q);
            let kernel = g
                .kernel_basis
                .into_iter()
                .map(|v| v.into_iter().map(FieldValue::Rational).collect())
                .collect();
            Ok((g.rank, Matrix::Rational(g.rref), kernel))
        }
        Matrix::Fp(f) => {
            let g = gauss_mat(f);
            let kernel = g
                .kernel_basis
                .into_iter()
                .map(|v| {
                    v.into_iter()
                        .map(|e| FieldValue::Fp { value: e.value, ell: e.ell })
                        .collect()
                })
                .collect();
            Ok((g.rank, Matrix::Fp(g.rref), kernel))
        }
    }
}

/// Kernel of a matrix as a deterministic echelon-derived basis.
pub fn kernel<T: Scalar>(m: &Mat<T>) -> Vec<Vec<T>> {
    gauss_mat(m).kernel_basis
}

pub fn rank<T: Scalar>(m: &Mat<T>) -> usize {
    let mut c = m.clone();
    rref_in_place(&mut c).len()
}

/// An echelonized row space with fast membership reduction.
#[derive(Debug, Clone)]
pub struct RowSpace<T> {
    pub cols: usize,
    pub basis: Mat<T>,
    pub pivots: Vec<usize>,
}

impl<T: Scalar> RowSpace<T> {
    pub fn empty(cols: usize) -> Self {
        RowSpace {
            cols,
            basis: Mat {
                rows: 0,
                cols,
                data: Vec::new(),
            },
            pivots: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    /// Reduce `v` against the current basis; returns the residue.
    pub fn residue(&self, v: &[T]) -> Vec<T> {
        let mut v = v.to_vec();
        for (r, &pc) in self.pivots.iter().enumerate() {
            if v[pc].is_zero() {
                continue;
            }
            let factor = v[pc].clone();
            for c in 0..self.cols {
                let t = v[c].sub(&factor.mul(self.basis.at(r, c)));
                v[c] = t;
            }
        }
        v
    }

    /// Insert a vector; returns true if it enlarged the space.
    pub fn insert(&mut self, v: &[T]) -> bool {
        let mut res = self.residue(v);
        let Some(pc) = res.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = res[pc].inv().expect("field element");
        for x in res.iter_mut() {
            *x = x.mul(&inv);
        }
        // Back-substitute into existing rows to stay fully reduced.
        for r in 0..self.basis.rows {
            if self.basis.at(r, pc).is_zero() {
                continue;
            }
            let factor = self.basis.at(r, pc).clone();
            for c in 0..self.cols {
                let t = self.basis.at(r, c).sub(&factor.mul(&res[c]));
                *self.basis.at_mut(r, c) = t;
            }
        }
        // Keep rows sorted by pivot column.
        let insert_at = self
            .pivots
            .iter()
            .position(|&p| p > pc)
            .unwrap_or(self.pivots.len());
        self.pivots.insert(insert_at, pc);
        let mut data = Vec::with_capacity((self.basis.rows + 1) * self.cols);
        for r in 0..=self.basis.rows {
            if r == insert_at {
                data.extend(res.iter().cloned());
            }
            if r < self.basis.rows {
                data.extend(self.basis.row(r).iter().cloned());
            }
        }
        self.basis = Mat {
            rows: self.basis.rows + 1,
            cols: self.cols,
            data,
        };
        true
    }

    pub fn contains(&self, v: &[T]) -> bool {
        self.residue(v).iter().all(|x| x.is_zero())
    }

    pub fn basis_vectors(&self) -> Vec<Vec<T>> {
        (0..self.basis.rows).map(|r| self.basis.row(r).to_vec()).collect()
    }
}

/// Smallest subspace containing the seeds and closed under every operator.
/// The result is an echelonized basis, independent of seed order.
pub fn spin<T: Scalar>(seeds: &[Vec<T>], operators: &[Mat<T>]) -> Result<Vec<Vec<T>>> {
    let dim = seeds
        .first()
        .map(|s| s.len())
        .or_else(|| operators.first().map(|o| o.cols))
        .ok_or_else(|| Error::Malformed("spin with no seeds and no operators".into()))?;
    for op in operators {
        if op.rows != op.cols || op.cols != dim {
            return Err(Error::DimensionMismatch(format!(
                "operator {}x{} on dimension {dim}",
                op.rows, op.cols
            )));
        }
    }
    for s in seeds {
        if s.len() != dim {
            return Err(Error::DimensionMismatch(format!(
                "seed length {} on dimension {dim}",
                s.len()
            )));
        }
    }
    let mut space = RowSpace::empty(dim);
    let mut queue: Vec<Vec<T>> = Vec::new();
    for s in seeds {
        if space.insert(s) {
            queue.push(s.clone());
        }
    }
    while let Some(v) = queue.pop() {
        for op in operators {
            let img = op.apply(&v);
            if space.insert(&img) {
                queue.push(img);
            }
        }
    }
    Ok(space.basis_vectors())
}

/// Solve `A x = b` exactly. Returns one solution if consistent.
pub fn solve<T: Scalar>(a: &Mat<T>, b: &[T]) -> Option<Vec<T>> {
    assert_eq!(a.rows, b.len());
    let model = a.model();
    let mut aug = Mat::zero(a.rows, a.cols + 1, &model);
    for i in 0..a.rows {
        for j in 0..a.cols {
            *aug.at_mut(i, j) = a.at(i, j).clone();
        }
        *aug.at_mut(i, a.cols) = b[i].clone();
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.contains(&a.cols) {
        return None;
    }
    let mut x = vec![model.zero_like(); a.cols];
    for (r, &pc) in pivots.iter().enumerate() {
        x[pc] = aug.at(r, a.cols).clone();
    }
    Some(x)
}

/// Express each of `targets` in terms of `basis` rows (must be solvable).
pub fn coordinates_in_basis<T: Scalar>(basis: &[Vec<T>], target: &[T]) -> Option<Vec<T>> {
    if basis.is_empty() {
        return if target.iter().all(|x| x.is_zero()) {
            Some(Vec::new())
        } else {
            None
        };
    }
    let b = Mat::from_rows(basis.to_vec()).transpose();
    solve(&b, target)
}

pub fn invert<T: Scalar>(m: &Mat<T>) -> Option<Mat<T>> {
    assert_eq!(m.rows, m.cols);
    let n = m.rows;
    let model = m.model();
    let mut aug = Mat::zero(n, 2 * n, &model);
    for i in 0..n {
        for j in 0..n {
            *aug.at_mut(i, j) = m.at(i, j).clone();
        }
        *aug.at_mut(i, n + i) = model.one_like();
    }
    let pivots = rref_in_place(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    let mut inv = Mat::zero(n, n, &model);
    for i in 0..n {
        for j in 0..n {
            *inv.at_mut(i, j) = aug.at(i, n + j).clone();
        }
    }
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::field::{big_rational_from as br, FpElt};
    use crate::linalg::mat::{FMat, QMat};

    #[test]
    fn identity_full_rank() {
        let id = QMat::identity(3, &br(0));
        let g = gauss_mat(&id);
        assert_eq!(g.rank, 3);
        assert!(g.kernel_basis.is_empty());
    }

    #[test]
    fn zero_matrix_kernel() {
        let z = FMat::from_u64_rows(3, &[vec![0, 0], vec![0, 0]]);
        let g = gauss_mat(&z);
        assert_eq!(g.rank, 0);
        assert_eq!(g.kernel_basis.len(), 2);
    }

    #[test]
    fn proportional_rows() {
        let m = QMat::from_i64_rows(&[vec![1, 2], vec![2, 4]]);
        let g = gauss_mat(&m);
        assert_eq!(g.rank, 1);
        assert_eq!(g.kernel_basis.len(), 1);
        // kernel spanned by (-2, 1), i.e. (2, -1) up to scale
        let k = &g.kernel_basis[0];
        assert_eq!(m.apply(k), vec![br(0), br(0)]);
        assert_eq!(k[0], br(-2));
        assert_eq!(k[1], br(1));
    }

    #[test]
    fn spin_cyclic_shift_fills_space() {
        // cyclic shift on F_2^3
        let ell = 2;
        let shift = FMat::from_u64_rows(
            ell,
            &[vec![0, 0, 1], vec![1, 0, 0], vec![0, 1, 0]],
        );
        let e1 = vec![
            FpElt { value: 1, ell },
            FpElt { value: 0, ell },
            FpElt { value: 0, ell },
        ];
        let basis = spin(&[e1], &[shift]).unwrap();
        assert_eq!(basis.len(), 3);
    }

    #[test]
    fn spin_invariant_line() {
        // all 3x3 permutation matrices fix the diagonal line
        let perms: Vec<QMat> = permutations_3()
            .into_iter()
            .map(|p| {
                let mut rows = vec![vec![0i64; 3]; 3];
                for (i, &pi) in p.iter().enumerate() {
                    rows[pi][i] = 1;
                }
                QMat::from_i64_rows(&rows)
            })
            .collect();
        let seed = vec![br(1), br(1), br(1)];
        let basis = spin(&[seed], &perms).unwrap();
        assert_eq!(basis.len(), 1);
    }

    fn permutations_3() -> Vec<Vec<usize>> {
        vec![
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![1, 0, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![2, 1, 0],
        ]
    }

    #[test]
    fn spin_identity_single_seed() {
        let id = QMat::identity(3, &br(0));
        let e1 = vec![br(1), br(0), br(0)];
        let basis = spin(&[e1.clone()], &[id]).unwrap();
        assert_eq!(basis, vec![e1]);
    }

    #[test]
    fn solve_simple() {
        let a = QMat::from_i64_rows(&[vec![2, 0], vec![0, 4]]);
        let x = solve(&a, &[br(6), br(8)]).unwrap();
        assert_eq!(x, vec![br(3), br(2)]);
        let sing = QMat::from_i64_rows(&[vec![1, 1], vec![1, 1]]);
        assert!(solve(&sing, &[br(1), br(2)]).is_none());
    }

    #[test]
    fn invert_matches_identity() {
        let m = QMat::from_i64_rows(&[vec![1, 2], vec![3, 5]]);
        let inv = invert(&m).unwrap();
        assert_eq!(m.mul(&inv), QMat::identity(2, &br(0)));
    }
}
