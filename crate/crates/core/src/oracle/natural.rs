//! Natural modules of the dual groups with integral divided-power
//! operators: the defining module of SL_n, SO_{2n+1}, Sp_{2n} and the
//! seven-dimensional module of G2, each with a diagonal contravariant form
//! making raising and lowering operators adjoint. Structure is validated
//! at build time: weight shifts, commutators against the Cartan data,
//! Serre relations and form duality are all hard checks.

use crate::error::{Error, Result};
use crate::linalg::field::{FpElt, Scalar};
use crate::linalg::mat::FMat;
use crate::roots::LieType;

/// Divided powers of one simple-root pair on a module: `e[k-1]` is the
/// operator for exponent k, and similarly for `f`.
#[derive(Debug, Clone)]
pub struct SimplePair {
    pub e: Vec<FMat>,
    pub f: Vec<FMat>,
}

/// A module with weight-vector basis and integral Chevalley operators.
#[derive(Debug, Clone)]
pub struct WeightModule {
    pub ell: u64,
    pub dim: usize,
    /// Weight of each basis vector, in the dual group's coordinates.
    pub weights: Vec<Vec<i64>>,
    pub pairs: Vec<SimplePair>,
    /// Diagonal of the contravariant form.
    pub form: Vec<FpElt>,
}

/// Cartan data of the dual group in the oracle's weight coordinates.
#[derive(Debug, Clone)]
pub struct DualData {
    /// Simple roots of the dual group as weight vectors.
    pub simple_roots: Vec<Vec<i64>>,
    /// Coroot pairing functionals: `pairing[i]` dotted with a weight gives
    /// its value on the i-th simple coroot.
    pub pairing: Vec<Vec<i64>>,
}

impl DualData {
    pub fn pair(&self, weight: &[i64], i: usize) -> i64 {
        self.pairing[i]
            .iter()
            .zip(weight.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    /// Cartan integer a_ij = <alpha_j, coroot_i>.
    pub fn cartan(&self, i: usize, j: usize) -> i64 {
        self.pair(&self.simple_roots[j], i)
    }
}

/// The dual group's natural (or smallest faithful) module for a given type
/// of G, over F_ell.
pub fn natural_module(g_type: LieType, rank: usize, ell: u64) -> Result<(WeightModule, DualData)> {
    let (module, data) = match g_type {
        LieType::A => sl_natural(rank + 1, ell),
        LieType::C => so_odd_natural(rank, ell),
        LieType::B => sp_natural(rank, ell),
        LieType::G2 => {
            #[cfg(feature = "g2-oracle")]
            {
                g2_seven(ell)?
            }
            #[cfg(not(feature = "g2-oracle"))]
            {
                return Err(Error::Unsupported(
                    "the G2 oracle is behind the g2-oracle feature".into(),
                ));
            }
        }
        LieType::D => {
            return Err(Error::Unsupported(
                "no oracle for type D duals; the closed-form table covers them".into(),
            ))
        }
    };
    validate_module(&module, &data)?;
    Ok((module, data))
}

fn fp(v: i64, ell: u64) -> FpElt {
    FpElt::new(v, ell)
}

fn mat_from_entries(dim: usize, ell: u64, entries: &[(usize, usize, i64)]) -> FMat {
    let model = fp(0, ell);
    let mut m = FMat::zero(dim, dim, &model);
    for &(r, c, v) in entries {
        *m.at_mut(r, c) = fp(v, ell);
    }
    m
}

fn unit_weight(dim: usize, i: usize, sign: i64) -> Vec<i64> {
    let mut v = vec![0i64; dim];
    v[i] = sign;
    v
}

/// SL_n natural module: content-style weights in Z^n.
fn sl_natural(n: usize, ell: u64) -> (WeightModule, DualData) {
    let dim = n;
    let weights: Vec<Vec<i64>> = (0..n).map(|i| unit_weight(n, i, 1)).collect();
    let mut pairs = Vec::new();
    for i in 0..n - 1 {
        let e = mat_from_entries(dim, ell, &[(i, i + 1, 1)]);
        let f = mat_from_entries(dim, ell, &[(i + 1, i, 1)]);
        pairs.push(SimplePair { e: vec![e], f: vec![f] });
    }
    let form = vec![fp(1, ell); dim];
    let simple_roots = (0..n - 1)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect::<Vec<_>>();
    let pairing = simple_roots.clone();
    (
        WeightModule { ell, dim, weights, pairs, form },
        DualData { simple_roots, pairing },
    )
}

/// SO_{2n+1} natural module: basis v_1..v_n, v_0, v_{-n}..v_{-1}.
fn so_odd_natural(n: usize, ell: u64) -> (WeightModule, DualData) {
    let dim = 2 * n + 1;
    let pos = |i: usize| i; // v_{i+1}
    let zero = n;
    let neg = |i: usize| 2 * n - i; // v_{-(i+1)}
    let mut weights = vec![vec![0i64; n]; dim];
    for i in 0..n {
        weights[pos(i)] = unit_weight(n, i, 1);
        weights[neg(i)] = unit_weight(n, i, -1);
    }
    let mut pairs = Vec::new();
    for i in 0..n - 1 {
        let e = mat_from_entries(
            dim,
            ell,
            &[(pos(i), pos(i + 1), 1), (neg(i + 1), neg(i), -1)],
        );
        let f = mat_from_entries(
            dim,
            ell,
            &[(pos(i + 1), pos(i), 1), (neg(i), neg(i + 1), -1)],
        );
        pairs.push(SimplePair { e: vec![e], f: vec![f] });
    }
    // short root e_n: a three-step string v_{-n} -> v_0 -> v_n
    let e1 = mat_from_entries(dim, ell, &[(pos(n - 1), zero, 2), (zero, neg(n - 1), 1)]);
    let e2 = mat_from_entries(dim, ell, &[(pos(n - 1), neg(n - 1), 1)]);
    let f1 = mat_from_entries(dim, ell, &[(zero, pos(n - 1), 1), (neg(n - 1), zero, 2)]);
    let f2 = mat_from_entries(dim, ell, &[(neg(n - 1), pos(n - 1), 1)]);
    pairs.push(SimplePair { e: vec![e1, e2], f: vec![f1, f2] });
    let mut form = vec![fp(1, ell); dim];
    form[zero] = fp(2, ell);
    let mut simple_roots: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    simple_roots.push(unit_weight(n, n - 1, 1));
    let mut pairing: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    pairing.push(unit_weight(n, n - 1, 2));
    (
        WeightModule { ell, dim, weights, pairs, form },
        DualData { simple_roots, pairing },
    )
}

/// Sp_{2n} natural module: basis v_1..v_n, v_{-n}..v_{-1}.
fn sp_natural(n: usize, ell: u64) -> (WeightModule, DualData) {
    let dim = 2 * n;
    let pos = |i: usize| i;
    let neg = |i: usize| 2 * n - 1 - i;
    let mut weights = vec![vec![0i64; n]; dim];
    for i in 0..n {
        weights[pos(i)] = unit_weight(n, i, 1);
        weights[neg(i)] = unit_weight(n, i, -1);
    }
    let mut pairs = Vec::new();
    for i in 0..n - 1 {
        let e = mat_from_entries(
            dim,
            ell,
            &[(pos(i), pos(i + 1), 1), (neg(i + 1), neg(i), -1)],
        );
        let f = mat_from_entries(
            dim,
            ell,
            &[(pos(i + 1), pos(i), 1), (neg(i), neg(i + 1), -1)],
        );
        pairs.push(SimplePair { e: vec![e], f: vec![f] });
    }
    // long root 2e_n: v_{-n} -> v_n
    let e = mat_from_entries(dim, ell, &[(pos(n - 1), neg(n - 1), 1)]);
    let f = mat_from_entries(dim, ell, &[(neg(n - 1), pos(n - 1), 1)]);
    pairs.push(SimplePair { e: vec![e], f: vec![f] });
    let form = vec![fp(1, ell); dim];
    let mut simple_roots: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    simple_roots.push(unit_weight(n, n - 1, 2));
    let mut pairing: Vec<Vec<i64>> = (0..n - 1)
        .map(|i| {
            let mut v = vec![0i64; n];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect();
    pairing.push(unit_weight(n, n - 1, 1));
    (
        WeightModule { ell, dim, weights, pairs, form },
        DualData { simple_roots, pairing },
    )
}

/// The seven-dimensional G2 module in fundamental-weight coordinates of
/// the dual group (simple root 1 long, simple root 2 short). Sign choices
/// in the operator entries are searched over a small set and pinned by the
/// validation checks.
#[cfg(feature = "g2-oracle")]
fn g2_seven(ell: u64) -> Result<(WeightModule, DualData)> {
    // Weight chain from the highest weight (0,1) of the natural module.
    // alpha_1 = (2,-3), alpha_2 = (-1,2) in these coordinates.
    let weights: Vec<Vec<i64>> = vec![
        vec![0, 1],  // b0: highest
        vec![1, -1], // b1 = b0 - alpha_2
        vec![-1, 2], // b2 = b1 - alpha_1
        vec![0, 0],  // b3 = b2 - alpha_2
        vec![1, -2], // b4 = b3 - alpha_2
        vec![-1, 1], // b5 = b4 - alpha_1
        vec![0, -1], // b6 = b5 - alpha_2
    ];
    let simple_roots = vec![vec![2, -3], vec![-1, 2]];
    // Fundamental-weight coordinates: the coroot pairing reads them off.
    let pairing = vec![vec![1, 0], vec![0, 1]];
    let data = DualData { simple_roots, pairing };
    // alpha_1 strings: {b1 -> b2} and {b4 -> b5} (two-step strings).
    // alpha_2 strings: {b0 -> b1}, {b2 -> b3 -> b4} (V(2) string), {b5 -> b6}.
    let dim = 7;
    for mask in 0..32u32 {
        let s = |k: u32| if mask & (1 << k) != 0 { -1i64 } else { 1 };
        let e1 = mat_from_entries(dim, ell, &[(1, 2, s(0)), (4, 5, s(1))]);
        let f1 = mat_from_entries(dim, ell, &[(2, 1, s(0)), (5, 4, s(1))]);
        let e2 = mat_from_entries(
            dim,
            ell,
            &[(0, 1, s(2)), (2, 3, 2 * s(3)), (3, 4, s(3)), (5, 6, s(4))],
        );
        let f2 = mat_from_entries(
            dim,
            ell,
            &[(1, 0, s(2)), (3, 2, s(3)), (4, 3, 2 * s(3)), (6, 5, s(4))],
        );
        let e2_2 = mat_from_entries(dim, ell, &[(2, 4, 1)]);
        let f2_2 = mat_from_entries(dim, ell, &[(4, 2, 1)]);
        let mut form = vec![fp(1, ell); dim];
        form[3] = fp(2, ell);
        let module = WeightModule {
            ell,
            dim,
            weights: weights.clone(),
            pairs: vec![
                SimplePair { e: vec![e1], f: vec![f1] },
                SimplePair { e: vec![e2, e2_2], f: vec![f2, f2_2] },
            ],
            form,
        };
        if validate_module(&module, &data).is_ok() {
            return Ok((module, data));
        }
    }
    Err(Error::Validation(
        "no consistent sign assignment for the G2 module".into(),
    ))
}

/// Hard checks: weight shifts, commutators, Serre relations, form duality.
pub fn validate_module(m: &WeightModule, data: &DualData) -> Result<()> {
    let ell = m.ell;
    let model = fp(0, ell);
    // Weight shifts: operator entries connect weights differing by k*alpha.
    for (i, pair) in m.pairs.iter().enumerate() {
        for (kk, op) in pair.e.iter().enumerate() {
            let k = kk as i64 + 1;
            for r in 0..m.dim {
                for c in 0..m.dim {
                    if op.at(r, c).is_zero() {
                        continue;
                    }
                    let expect: Vec<i64> = m.weights[c]
                        .iter()
                        .zip(data.simple_roots[i].iter())
                        .map(|(w, a)| w + k * a)
                        .collect();
                    if m.weights[r] != expect {
                        return Err(Error::Validation(format!(
                            "raising operator {i} breaks the weight grading"
                        )));
                    }
                }
            }
        }
        for (kk, op) in pair.f.iter().enumerate() {
            let k = kk as i64 + 1;
            for r in 0..m.dim {
                for c in 0..m.dim {
                    if op.at(r, c).is_zero() {
                        continue;
                    }
                    let expect: Vec<i64> = m.weights[c]
                        .iter()
                        .zip(data.simple_roots[i].iter())
                        .map(|(w, a)| w - k * a)
                        .collect();
                    if m.weights[r] != expect {
                        return Err(Error::Validation(format!(
                            "lowering operator {i} breaks the weight grading"
                        )));
                    }
                }
            }
        }
    }
    // Commutators [e_i, f_j] = delta_ij h_i.
    for i in 0..m.pairs.len() {
        for j in 0..m.pairs.len() {
            let ei = &m.pairs[i].e[0];
            let fj = &m.pairs[j].f[0];
            let comm = ei.mul(fj).sub(&fj.mul(ei));
            let mut expect = FMat::zero(m.dim, m.dim, &model);
            if i == j {
                for b in 0..m.dim {
                    *expect.at_mut(b, b) = fp(data.pair(&m.weights[b], i), ell);
                }
            }
            if comm != expect {
                return Err(Error::Validation(format!(
                    "commutator [e{i}, f{j}] fails"
                )));
            }
        }
    }
    // Serre relations ad(e_i)^{1-a_ij}(e_j) = 0, via the binomial expansion.
    for i in 0..m.pairs.len() {
        for j in 0..m.pairs.len() {
            if i == j {
                continue;
            }
            let n = (1 - data.cartan(i, j)) as u64;
            let ei = &m.pairs[i].e[0];
            let ej = &m.pairs[j].e[0];
            let mut acc = FMat::zero(m.dim, m.dim, &model);
            let mut sign = 1i64;
            for k in 0..=n {
                let c = (binomial(n, k) as i64) * sign;
                let term = ei.pow(n - k).mul(ej).mul(&ei.pow(k)).scale(&fp(c, ell));
                acc = acc.add(&term);
                sign = -sign;
            }
            if !acc.is_zero_matrix() {
                return Err(Error::Validation(format!("Serre relation e{i}, e{j} fails")));
            }
        }
    }
    // Form duality: D e = f^T D for every divided power.
    let mut d = FMat::zero(m.dim, m.dim, &model);
    for b in 0..m.dim {
        *d.at_mut(b, b) = m.form[b];
    }
    for pair in &m.pairs {
        for (e, f) in pair.e.iter().zip(pair.f.iter()) {
            if d.mul(e) != f.transpose().mul(&d) {
                return Err(Error::Validation("form duality fails".into()));
            }
        }
    }
    // Divided powers are consistent in characteristic zero terms:
    // e^{(1)}^2 = 2 e^{(2)} wherever the second divided power is stored.
    for pair in &m.pairs {
        if pair.e.len() > 1 {
            let sq = pair.e[0].mul(&pair.e[0]);
            if sq != pair.e[1].scale(&fp(2, ell)) {
                return Err(Error::Validation("divided power square fails".into()));
            }
        }
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut num = 1u64;
    let mut den = 1u64;
    for i in 0..k {
        num *= n - i;
        den *= i + 1;
    }
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl3_validates() {
        for ell in [2, 3, 5, 7] {
            let (m, d) = natural_module(LieType::A, 2, ell).unwrap();
            assert_eq!(m.dim, 3);
            assert_eq!(d.simple_roots.len(), 2);
        }
    }

    #[test]
    fn so5_validates() {
        for ell in [3, 5, 7] {
            let (m, _) = natural_module(LieType::C, 2, ell).unwrap();
            assert_eq!(m.dim, 5);
            // second divided power present on the short-root pair
            assert_eq!(m.pairs[1].e.len(), 2);
        }
    }

    #[test]
    fn sp4_validates() {
        for ell in [2, 3, 5] {
            let (m, _) = natural_module(LieType::B, 2, ell).unwrap();
            assert_eq!(m.dim, 4);
        }
    }

    #[cfg(feature = "g2-oracle")]
    #[test]
    fn g2_validates() {
        for ell in [3, 5, 7] {
            let (m, d) = natural_module(LieType::G2, 2, ell).unwrap();
            assert_eq!(m.dim, 7);
            // Cartan matrix of the dual: a_12 = <alpha_2, coroot_1> = -3 or -1
            assert_eq!(d.cartan(0, 1), -1);
            assert_eq!(d.cartan(1, 0), -3);
        }
    }
}
