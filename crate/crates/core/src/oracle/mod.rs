//! Brute-force zero-weight oracle: realize the irreducible highest-weight
//! module of the dual group inside a tensor power of its natural module,
//! over the prime field itself. Divided powers act on tensors through the
//! coproduct, so small characteristics are handled exactly. The simple
//! quotient comes from the radical of the contravariant form, the Weyl
//! group acts on the zero weight space through the standard reflection
//! lifts, and the resulting module is identified against the named simples.

pub mod natural;

use crate::error::{Error, Result};
use crate::labels::ModSimpleLabel;
use crate::linalg::field::{FpElt, Scalar};
use crate::linalg::gauss::{coordinates_in_basis, gauss_mat, spin, RowSpace};
use crate::linalg::mat::FMat;
use crate::modular::meataxe::{split_or_certify, ActionSet};
use crate::modular::{identify_factors, modular_data, FpModuleRep, ModularData};
use crate::prng::Prng;
use crate::roots::LieType;
use crate::weyl::WeylGroup;

use natural::{natural_module, DualData, WeightModule};

pub const DEFAULT_AMBIENT_BOUND: usize = 4096;

/// Tensor-power ambient with divided-power operators for each simple pair.
pub struct ChevalleyRep {
    pub g_type: LieType,
    pub rank: usize,
    pub ell: u64,
    pub tensor_degree: usize,
    pub ambient_dim: usize,
    /// Weight of each ambient basis vector.
    pub weights: Vec<Vec<i64>>,
    /// raising[i][k-1] is the k-th divided power of the i-th raising
    /// operator on the ambient space; same for lowering.
    pub raising: Vec<Vec<FMat>>,
    pub lowering: Vec<Vec<FMat>>,
    /// Diagonal of the product contravariant form.
    pub form: Vec<FpElt>,
    pub dual: DualData,
}

fn fp(v: i64, ell: u64) -> FpElt {
    FpElt::new(v, ell)
}

/// Divided powers on a tensor power via the coproduct: the k-th power is
/// the sum over compositions of k across the factors.
fn tensor_divided_powers(
    base: &[FMat],
    dim: usize,
    m: usize,
    kmax: usize,
    ell: u64,
) -> Vec<FMat> {
    let model = fp(0, ell);
    let amb = dim.pow(m as u32);
    // per-factor operators indexed by exponent (0 = identity)
    let mut per_factor: Vec<FMat> = vec![FMat::identity(dim, &model)];
    per_factor.extend(base.iter().cloned());
    // ops[k] on j factors, built factor by factor
    let mut ops: Vec<FMat> = vec![FMat::identity(1, &model)];
    ops.resize(kmax + 1, FMat::zero(1, 1, &model));
    for k in 1..=kmax {
        ops[k] = FMat::zero(1, 1, &model);
    }
    for _ in 0..m {
        let prev = ops.clone();
        let prev_dim = prev[0].rows;
        let new_dim = prev_dim * dim;
        let mut next: Vec<FMat> = Vec::with_capacity(kmax + 1);
        for k in 0..=kmax {
            let mut acc = FMat::zero(new_dim, new_dim, &model);
            for j in 0..=k.min(per_factor.len() - 1) {
                if prev[k - j].is_zero_matrix() && k - j > 0 {
                    continue;
                }
                if per_factor[j].is_zero_matrix() && j > 0 {
                    continue;
                }
                acc = acc.add(&kron_f(&prev[k - j], &per_factor[j]));
            }
            next.push(acc);
        }
        ops = next;
    }
    debug_assert_eq!(ops[0].rows, amb);
    ops.remove(0);
    // Drop trailing zero powers.
    while ops.len() > 1 && ops.last().map_or(false, |m| m.is_zero_matrix()) {
        ops.pop();
    }
    ops
}

fn kron_f(a: &FMat, b: &FMat) -> FMat {
    let model = a
        .data
        .first()
        .cloned()
        .or_else(|| b.data.first().cloned())
        .expect("nonempty");
    let mut out = FMat::zero(a.rows * b.rows, a.cols * b.cols, &model.zero_like());
    for i in 0..a.rows {
        for j in 0..a.cols {
            if a.at(i, j).is_zero() {
                continue;
            }
            for k in 0..b.rows {
                for l in 0..b.cols {
                    if b.at(k, l).is_zero() {
                        continue;
                    }
                    *out.at_mut(i * b.rows + k, j * b.cols + l) = a.at(i, j).mul(b.at(k, l));
                }
            }
        }
    }
    out
}

/// Build the ambient tensor power with all divided-power operators.
pub fn build_chevalley(
    g_type: LieType,
    rank: usize,
    ell: u64,
    tensor_degree: usize,
    ambient_bound: usize,
) -> Result<ChevalleyRep> {
    let (module, dual) = natural_module(g_type, rank, ell)?;
    let ambient_dim = module.dim.pow(tensor_degree as u32);
    if ambient_dim > ambient_bound {
        return Err(Error::BoundExceeded(format!(
            "ambient dimension {ambient_dim} over bound {ambient_bound}"
        )));
    }
    // Ambient weights: sums over tuple positions.
    let coord_len = module.weights[0].len();
    let mut weights = Vec::with_capacity(ambient_dim);
    for idx in 0..ambient_dim {
        let mut rest = idx;
        let mut wt = vec![0i64; coord_len];
        for _ in 0..tensor_degree {
            let pos = rest % module.dim;
            rest /= module.dim;
            for (a, b) in wt.iter_mut().zip(module.weights[pos].iter()) {
                *a += b;
            }
        }
        weights.push(wt);
    }
    // Tuple index convention: the factor order in `tensor_divided_powers`
    // treats the last factor as the least significant digit; the weight sum
    // is order-free.
    let kmax = tensor_degree * 2;
    let mut raising = Vec::new();
    let mut lowering = Vec::new();
    for pair in &module.pairs {
        raising.push(tensor_divided_powers(&pair.e, module.dim, tensor_degree, kmax, ell));
        lowering.push(tensor_divided_powers(&pair.f, module.dim, tensor_degree, kmax, ell));
    }
    // Product form diagonal.
    let mut form = Vec::with_capacity(ambient_dim);
    for idx in 0..ambient_dim {
        let mut rest = idx;
        let mut v = fp(1, ell);
        for _ in 0..tensor_degree {
            let pos = rest % module.dim;
            rest /= module.dim;
            v = v.mul(&module.form[pos]);
        }
        form.push(v);
    }
    let rep = ChevalleyRep {
        g_type,
        rank,
        ell,
        tensor_degree,
        ambient_dim,
        weights,
        raising,
        lowering,
        form,
        dual,
    };
    rep.validate_weight_shifts(&module)?;
    Ok(rep)
}

impl ChevalleyRep {
    /// Every ambient operator must shift weights exactly.
    fn validate_weight_shifts(&self, module: &WeightModule) -> Result<()> {
        let _ = module;
        for (i, powers) in self.raising.iter().enumerate() {
            for (kk, op) in powers.iter().enumerate() {
                let k = kk as i64 + 1;
                for c in 0..self.ambient_dim {
                    for r in 0..self.ambient_dim {
                        if op.at(r, c).is_zero() {
                            continue;
                        }
                        let expect: Vec<i64> = self.weights[c]
                            .iter()
                            .zip(self.dual.simple_roots[i].iter())
                            .map(|(w, a)| w + k * a)
                            .collect();
                        if self.weights[r] != expect {
                            return Err(Error::Validation(
                                "ambient raising operator breaks the weight grading".into(),
                            ));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn all_operators(&self) -> Vec<FMat> {
        let mut ops = Vec::new();
        for powers in self.raising.iter().chain(self.lowering.iter()) {
            for op in powers {
                if !op.is_zero_matrix() {
                    ops.push(op.clone());
                }
            }
        }
        ops
    }

}

/// A highest-weight submodule of the ambient space with its basis.
pub struct HighestWeightModule {
    pub target: Vec<i64>,
    /// Echelonized homogeneous basis in ambient coordinates.
    pub basis: Vec<Vec<FpElt>>,
    /// Weight of each basis vector.
    pub basis_weights: Vec<Vec<i64>>,
}

/// Locate a highest-weight vector of the given weight with nonzero form
/// norm and spin it under all divided powers.
pub fn highest_weight_submodule(
    rep: &ChevalleyRep,
    target: &[i64],
) -> Result<HighestWeightModule> {
    let ell = rep.ell;
    let model = fp(0, ell);
    let coords: Vec<usize> = (0..rep.ambient_dim)
        .filter(|&i| rep.weights[i] == target)
        .collect();
    if coords.is_empty() {
        return Err(Error::Malformed(format!(
            "no ambient vectors of weight {target:?}; raise the tensor degree"
        )));
    }
    // Kernel of all raising powers restricted to the weight space.
    let mut rows: Vec<Vec<FpElt>> = Vec::new();
    for powers in &rep.raising {
        for op in powers {
            for r in 0..rep.ambient_dim {
                let row: Vec<FpElt> = coords.iter().map(|&c| *op.at(r, c)).collect();
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    let hw_basis = if rows.is_empty() {
        // no raising operator acts: the whole weight space is primitive
        (0..coords.len())
            .map(|i| {
                let mut v = vec![model.zero_like(); coords.len()];
                v[i] = model.one_like();
                v
            })
            .collect()
    } else {
        gauss_mat(&FMat::from_rows(rows)).kernel_basis
    };
    if hw_basis.is_empty() {
        return Err(Error::Malformed(format!(
            "no highest-weight vector of weight {target:?}; raise the tensor degree"
        )));
    }
    // Expand to ambient coordinates.
    let expand = |v: &[FpElt]| -> Vec<FpElt> {
        let mut out = vec![model.zero_like(); rep.ambient_dim];
        for (vi, &c) in v.iter().zip(coords.iter()) {
            out[c] = *vi;
        }
        out
    };
    let norm = |v: &[FpElt]| -> FpElt {
        let mut acc = model.zero_like();
        for (i, x) in v.iter().enumerate() {
            if !x.is_zero() {
                acc = acc.add(&x.mul(x).mul(&rep.form[i]));
            }
        }
        acc
    };
    // Pick a generator with nonzero norm: basis vectors, then pair sums,
    // then seeded random combinations.
    let mut candidates: Vec<Vec<FpElt>> = hw_basis.iter().map(|v| expand(v)).collect();
    let k = candidates.len();
    for i in 0..k {
        for j in (i + 1)..k {
            let sum: Vec<FpElt> = candidates[i]
                .iter()
                .zip(candidates[j].iter())
                .map(|(a, b)| a.add(b))
                .collect();
            candidates.push(sum);
        }
    }
    let mut rng = Prng::new(0xC0FFEE);
    for _ in 0..64 {
        let mut v = vec![model.zero_like(); rep.ambient_dim];
        for b in &candidates[0..k] {
            let c = fp(rng.below(ell) as i64, ell);
            for (x, y) in v.iter_mut().zip(b.iter()) {
                *x = x.add(&y.mul(&c));
            }
        }
        candidates.push(v);
    }
    let generator = candidates
        .into_iter()
        .filter(|v| v.iter().any(|x| !x.is_zero()))
        .find(|v| !norm(v).is_zero())
        .ok_or_else(|| {
            Error::Validation(format!(
                "every primitive vector of weight {target:?} is isotropic for the form"
            ))
        })?;
    let ops = rep.all_operators();
    let basis = spin(&[generator], &ops)?;
    let basis_weights: Vec<Vec<i64>> = basis
        .iter()
        .map(|v| weight_of(rep, v))
        .collect::<Result<Vec<_>>>()?;
    // The target weight space of the submodule must be a line.
    let target_count = basis_weights.iter().filter(|w| *w == target).count();
    if target_count != 1 {
        return Err(Error::Validation(
            "highest weight space of the spun module is not a line".into(),
        ));
    }
    Ok(HighestWeightModule {
        target: target.to_vec(),
        basis,
        basis_weights,
    })
}

/// The weight of a homogeneous vector; echelon bases of graded subspaces
/// are homogeneous, so mixing is a hard error.
fn weight_of(rep: &ChevalleyRep, v: &[FpElt]) -> Result<Vec<i64>> {
    let mut found: Option<Vec<i64>> = None;
    for (i, x) in v.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        match &found {
            None => found = Some(rep.weights[i].clone()),
            Some(w) if *w == rep.weights[i] => {}
            _ => return Err(Error::Validation("inhomogeneous basis vector".into())),
        }
    }
    found.ok_or_else(|| Error::Validation("zero vector has no weight".into()))
}

/// The simple quotient by the radical of the contravariant form, with its
/// weight grading; irreducibility is certified afterwards.
pub struct SimpleModule {
    pub dim: usize,
    /// Representatives of the quotient basis, in ambient coordinates.
    pub reps: Vec<Vec<FpElt>>,
    pub rep_weights: Vec<Vec<i64>>,
    /// Radical basis in ambient coordinates.
    pub radical: Vec<Vec<FpElt>>,
    /// Operators on the quotient, in the order of `all_operators`.
    pub operators: Vec<FMat>,
}

pub fn simple_quotient(rep: &ChevalleyRep, delta: &HighestWeightModule) -> Result<SimpleModule> {
    let ell = rep.ell;
    let model = fp(0, ell);
    let d = delta.basis.len();
    // Gram matrix of the diagonal ambient form on the basis.
    let mut gram = FMat::zero(d, d, &model);
    for a in 0..d {
        for b in 0..d {
            let mut acc = model.zero_like();
            for i in 0..rep.ambient_dim {
                let (x, y) = (&delta.basis[a][i], &delta.basis[b][i]);
                if !x.is_zero() && !y.is_zero() {
                    acc = acc.add(&x.mul(y).mul(&rep.form[i]));
                }
            }
            *gram.at_mut(a, b) = acc;
        }
    }
    if gram.is_zero_matrix() {
        return Err(Error::Validation(
            "contravariant form restricts to zero on the highest-weight module".into(),
        ));
    }
    // Radical coordinates -> ambient vectors.
    let rad_coords = gauss_mat(&gram).kernel_basis;
    let radical: Vec<Vec<FpElt>> = rad_coords
        .iter()
        .map(|c| {
            let mut v = vec![model.zero_like(); rep.ambient_dim];
            for (ci, x) in c.iter().enumerate() {
                if x.is_zero() {
                    continue;
                }
                for i in 0..rep.ambient_dim {
                    v[i] = v[i].add(&x.mul(&delta.basis[ci][i]));
                }
            }
            v
        })
        .collect();
    // Quotient representatives: basis vectors of delta that stay
    // independent modulo the radical.
    let mut space = RowSpace::empty(rep.ambient_dim);
    for r in &radical {
        space.insert(r);
    }
    let mut reps = Vec::new();
    let mut rep_weights = Vec::new();
    for (b, w) in delta.basis.iter().zip(delta.basis_weights.iter()) {
        if space.insert(b) {
            reps.push(b.clone());
            rep_weights.push(w.clone());
        }
    }
    let qdim = reps.len();
    // Operators on the quotient.
    let mut combined: Vec<Vec<FpElt>> = radical.clone();
    combined.extend(reps.iter().cloned());
    let ops = rep.all_operators();
    let mut operators = Vec::with_capacity(ops.len());
    for op in &ops {
        let mut rows = Vec::with_capacity(qdim);
        for r in &reps {
            let img = op.apply(r);
            let coords = coordinates_in_basis(&combined, &img)
                .ok_or_else(|| Error::Validation("quotient not operator-stable".into()))?;
            rows.push(coords[radical.len()..].to_vec());
        }
        operators.push(if qdim == 0 {
            FMat { rows: 0, cols: 0, data: vec![] }
        } else {
            FMat::from_rows(rows).transpose()
        });
    }
    if qdim == 0 {
        return Err(Error::Validation("simple quotient collapsed to zero".into()));
    }
    // Certify irreducibility over the divided-power operators.
    let set = ActionSet::new(ell, qdim, operators.clone());
    let mut rng = Prng::new(0x1C0DE);
    match split_or_certify(&set, &mut rng)? {
        None => {}
        Some(_) => {
            return Err(Error::Validation(
                "form quotient failed the irreducibility certificate".into(),
            ))
        }
    }
    Ok(SimpleModule {
        dim: qdim,
        reps,
        rep_weights,
        radical,
        operators,
    })
}

/// The Weyl group action on the zero weight space of a simple module.
pub struct ZeroWeightModule {
    pub dim: usize,
    pub rep: FpModuleRep,
}

/// Restrict the reflection lifts to the zero weight space and package the
/// result as a Weyl group module; the defining relations are hard checks.
pub fn zero_weight_w_module(
    rep: &ChevalleyRep,
    simple: &SimpleModule,
    w: &WeylGroup,
) -> Result<ZeroWeightModule> {
    let ell = rep.ell;
    let target = zero_weight_target(rep);
    let indices: Vec<usize> = simple
        .rep_weights
        .iter()
        .enumerate()
        .filter(|(_, wt)| **wt == target)
        .map(|(i, _)| i)
        .collect();
    let zdim = indices.len();
    let lifts = reflection_lifts(rep, simple, 1)?;
    let model = fp(0, ell);
    let mut gens = Vec::with_capacity(lifts.len());
    for n in &lifts {
        // Leakage check: the lift must preserve the zero weight space.
        for &c in &indices {
            for r in 0..simple.dim {
                if !n.at(r, c).is_zero() && !indices.contains(&r) {
                    return Err(Error::Validation(
                        "reflection lift leaks out of the zero weight space".into(),
                    ));
                }
            }
        }
        let mut m = FMat::zero(zdim, zdim, &model);
        for (a, &ra) in indices.iter().enumerate() {
            for (b, &cb) in indices.iter().enumerate() {
                *m.at_mut(a, b) = *n.at(ra, cb);
            }
        }
        gens.push(m);
    }
    let rep_w = FpModuleRep::new(w, ell, gens)?;
    Ok(ZeroWeightModule { dim: zdim, rep: rep_w })
}

/// The reflection lifts x_a(t) x_{-a}(-1/t...) specialised to t = +-1 on
/// the simple module; `t` must be +-1.
fn reflection_lifts(rep: &ChevalleyRep, simple: &SimpleModule, t: i64) -> Result<Vec<FMat>> {
    assert!(t == 1 || t == -1);
    let ell = rep.ell;
    let n_ops = rep.raising.len();
    // Operator list layout matches all_operators: raising blocks then
    // lowering blocks, skipping zero matrices.
    let mut idx_map: Vec<(bool, usize, usize)> = Vec::new();
    for (i, powers) in rep.raising.iter().enumerate() {
        for (k, op) in powers.iter().enumerate() {
            if !op.is_zero_matrix() {
                idx_map.push((true, i, k));
            }
        }
    }
    for (i, powers) in rep.lowering.iter().enumerate() {
        for (k, op) in powers.iter().enumerate() {
            if !op.is_zero_matrix() {
                idx_map.push((false, i, k));
            }
        }
    }
    let model = fp(0, ell);
    let mut lifts = Vec::with_capacity(n_ops);
    for i in 0..n_ops {
        let gather = |raise: bool, t: i64| -> FMat {
            let mut acc = FMat::identity(simple.dim, &model);
            let mut powers: Vec<(usize, &FMat)> = Vec::new();
            for (pos, &(r, ii, k)) in idx_map.iter().enumerate() {
                if r == raise && ii == i {
                    powers.push((k, &simple.operators[pos]));
                }
            }
            powers.sort_by_key(|(k, _)| *k);
            for (k, op) in powers {
                let tk = t.pow(k as u32 + 1);
                acc = acc.add(&op.scale(&fp(tk, ell)));
            }
            acc
        };
        let xa = gather(true, t);
        let xma = gather(false, -t);
        let lift = xa.mul(&xma).mul(&xa);
        lifts.push(lift);
    }
    Ok(lifts)
}

fn zero_weight_target(rep: &ChevalleyRep) -> Vec<i64> {
    match rep.g_type {
        LieType::A => {
            let n = rep.rank + 1;
            let per = (rep.tensor_degree / n) as i64;
            vec![per; n]
        }
        _ => vec![0i64; rep.weights[0].len()],
    }
}

/// Everything the oracle reports for one run.
#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub dim_weyl_surrogate: usize,
    pub dim_simple: usize,
    pub dim_zero_weight: usize,
    pub factors: Vec<(ModSimpleLabel, usize)>,
}

/// Tensor degree used for a dominant weight of the dual group.
fn tensor_degree_for(g_type: LieType, target: &[i64]) -> usize {
    match g_type {
        LieType::A | LieType::B | LieType::C => {
            target.iter().map(|&x| x.max(0) as usize).sum()
        }
        _ => 0,
    }
}

/// Run the full oracle chain for a small coweight of G.
///
/// Type A inputs are shifted to a partition weight; a full column of the
/// shifted partition is a determinant twist and is stripped before the
/// tensor space is built.
pub fn oracle_zero_weight(
    g_type: LieType,
    rank: usize,
    lambda: &[i64],
    ell: u64,
    seed: u64,
    ambient_bound: usize,
) -> Result<(OracleOutcome, ModularData)> {
    let w = WeylGroup::new(g_type, rank)?;
    let data = modular_data(&w, ell, seed)?;
    let outcome = oracle_zero_weight_with(&w, &data, g_type, rank, lambda, ell, seed, ambient_bound)?;
    Ok((outcome, data))
}

#[allow(clippy::too_many_arguments)]
pub fn oracle_zero_weight_with(
    w: &WeylGroup,
    data: &ModularData,
    g_type: LieType,
    rank: usize,
    lambda: &[i64],
    ell: u64,
    seed: u64,
    ambient_bound: usize,
) -> Result<OracleOutcome> {
    let rs = crate::roots::RootSystem::new(g_type, rank)?;
    if lambda.len() != rs.coord_dim {
        return Err(Error::Malformed(format!(
            "coweight length {} for coordinate dimension {}",
            lambda.len(),
            rs.coord_dim
        )));
    }
    if !rs.is_dominant(lambda) || !rs.in_coweight_lattice(lambda) {
        return Err(Error::Malformed(
            "oracle input must be a dominant coweight in the lattice".into(),
        ));
    }
    if !rs.is_small(lambda) {
        return Err(Error::Malformed(format!("coweight {lambda:?} is not small")));
    }
    // The dual-group weight and tensor degree.
    let (target, degree) = match g_type {
        LieType::A => {
            let n = rank + 1;
            if lambda[n - 1] < -1 {
                return Err(Error::Malformed(
                    "type A oracle runs on the shifted-partition domain".into(),
                ));
            }
            let hat: Vec<i64> = lambda.iter().map(|&x| x + 1).collect();
            let strip = hat[n - 1];
            let stripped: Vec<i64> = hat.iter().map(|&x| x - strip).collect();
            let degree: usize = stripped.iter().map(|&x| x as usize).sum();
            (stripped, degree)
        }
        LieType::B | LieType::C => {
            let degree = tensor_degree_for(g_type, lambda);
            (lambda.to_vec(), degree)
        }
        LieType::G2 => {
            // Convert coroot coordinates to the dual group's
            // fundamental-weight coordinates.
            let (a, b) = (lambda[0], lambda[1]);
            let fw = vec![2 * a - b, -3 * a + 2 * b];
            if fw.iter().any(|&x| x < 0) {
                return Err(Error::Malformed("not dominant on the dual side".into()));
            }
            // Smallest degree with a vector of this weight; searched below.
            (fw, 0)
        }
        LieType::D => {
            return Err(Error::Unsupported(
                "no oracle for type D; the closed-form table covers it".into(),
            ))
        }
    };
    let rep = if g_type == LieType::G2 {
        let mut found = None;
        for m in 0..=4usize {
            let candidate = build_chevalley(g_type, rank, ell, m, ambient_bound)?;
            if candidate.weights.iter().any(|w| *w == target) {
                found = Some(candidate);
                break;
            }
        }
        found.ok_or_else(|| {
            Error::BoundExceeded("no tensor degree within bounds reaches the weight".into())
        })?
    } else {
        build_chevalley(g_type, rank, ell, degree, ambient_bound)?
    };
    let delta = highest_weight_submodule(&rep, &target)?;
    let simple = simple_quotient(&rep, &delta)?;
    let zw = zero_weight_w_module(&rep, &simple, w)?;
    let factors = if zw.dim == 0 {
        Vec::new()
    } else {
        identify_factors(data, &zw.rep.action_set(), seed)?
    };
    Ok(OracleOutcome {
        dim_weyl_surrogate: delta.basis.len(),
        dim_simple: simple.dim,
        dim_zero_weight: zw.dim,
        factors,
    })
}

/// Alternative reflection lift used by the lift-independence check.
pub fn zero_weight_w_module_alt_lift(
    rep: &ChevalleyRep,
    simple: &SimpleModule,
    w: &WeylGroup,
) -> Result<ZeroWeightModule> {
    let ell = rep.ell;
    let target = zero_weight_target(rep);
    let indices: Vec<usize> = simple
        .rep_weights
        .iter()
        .enumerate()
        .filter(|(_, wt)| **wt == target)
        .map(|(i, _)| i)
        .collect();
    let zdim = indices.len();
    let lifts = reflection_lifts(rep, simple, -1)?;
    let model = fp(0, ell);
    let mut gens = Vec::with_capacity(lifts.len());
    for n in &lifts {
        let mut m = FMat::zero(zdim, zdim, &model);
        for (a, &ra) in indices.iter().enumerate() {
            for (b, &cb) in indices.iter().enumerate() {
                *m.at_mut(a, b) = *n.at(ra, cb);
            }
        }
        gens.push(m);
    }
    let rep_w = FpModuleRep::new(w, ell, gens)?;
    Ok(ZeroWeightModule { dim: zdim, rep: rep_w })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_symmetric_square() {
        // weight (2,0) in V tensor V over F_3: the three-dimensional simple
        let rep = build_chevalley(LieType::A, 1, 3, 2, 4096).unwrap();
        assert_eq!(rep.ambient_dim, 4);
        let delta = highest_weight_submodule(&rep, &[2, 0]).unwrap();
        assert_eq!(delta.basis.len(), 3);
        let simple = simple_quotient(&rep, &delta).unwrap();
        assert_eq!(simple.dim, 3);
    }

    #[test]
    fn sl2_symmetric_square_mod2() {
        let rep = build_chevalley(LieType::A, 1, 2, 2, 4096).unwrap();
        let delta = highest_weight_submodule(&rep, &[2, 0]).unwrap();
        assert_eq!(delta.basis.len(), 3);
        // radical is one-dimensional mod 2
        let simple = simple_quotient(&rep, &delta).unwrap();
        assert_eq!(simple.dim, 2);
        assert_eq!(simple.radical.len(), 1);
    }

    #[test]
    fn sl2_adjoint_zero_weight_is_sign() {
        let w = WeylGroup::new(LieType::A, 1).unwrap();
        for ell in [3u64, 5] {
            let rep = build_chevalley(LieType::A, 1, ell, 2, 4096).unwrap();
            let delta = highest_weight_submodule(&rep, &[2, 0]).unwrap();
            let simple = simple_quotient(&rep, &delta).unwrap();
            let zw = zero_weight_w_module(&rep, &simple, &w).unwrap();
            assert_eq!(zw.dim, 1);
            // the lift acts by -1
            assert_eq!(zw.rep.generators[0].at(0, 0).value, ell - 1);
            // alternative lift agrees on the zero weight space
            let alt = zero_weight_w_module_alt_lift(&rep, &simple, &w).unwrap();
            assert_eq!(alt.rep.generators, zw.rep.generators);
        }
    }

    #[test]
    fn sl3_octet() {
        // adjoint surrogate: weight (2,1,0) in V^3 over F_3
        let rep = build_chevalley(LieType::A, 2, 3, 3, 4096).unwrap();
        assert_eq!(rep.ambient_dim, 27);
        let delta = highest_weight_submodule(&rep, &[2, 1, 0]).unwrap();
        assert_eq!(delta.basis.len(), 8);
        let simple = simple_quotient(&rep, &delta).unwrap();
        assert_eq!(simple.dim, 7);
    }

    #[test]
    fn full_oracle_sl3_adjoint_mod3() {
        let (outcome, _) =
            oracle_zero_weight(LieType::A, 2, &[1, 0, -1], 3, 42, 4096).unwrap();
        assert_eq!(outcome.dim_weyl_surrogate, 8);
        assert_eq!(outcome.dim_simple, 7);
        assert_eq!(outcome.dim_zero_weight, 1);
        assert_eq!(outcome.factors.len(), 1);
        assert_eq!(outcome.factors[0].0.to_string(), "D^(2,1)");
    }

    #[test]
    fn full_oracle_sl2_natural_mod2() {
        let (outcome, _) =
            oracle_zero_weight(LieType::A, 1, &[1, -1], 2, 42, 4096).unwrap();
        assert_eq!(outcome.dim_zero_weight, 0);
        assert!(outcome.factors.is_empty());
    }

    #[test]
    fn full_oracle_zero_coweight() {
        let (outcome, _) =
            oracle_zero_weight(LieType::A, 2, &[0, 0, 0], 3, 42, 4096).unwrap();
        assert_eq!(outcome.dim_zero_weight, 1);
        assert_eq!(outcome.factors[0].0.to_string(), "D^(3)");
    }

    #[test]
    fn so5_adjoint() {
        // G of type C_2, lambda = (1,1): ten-dimensional adjoint mod 5
        let (outcome, _) =
            oracle_zero_weight(LieType::C, 2, &[1, 1], 5, 42, 4096).unwrap();
        assert_eq!(outcome.dim_weyl_surrogate, 10);
        assert_eq!(outcome.dim_simple, 10);
        assert_eq!(outcome.dim_zero_weight, 2);
        assert_eq!(outcome.factors.len(), 1);
        assert_eq!(outcome.factors[0].0.to_string(), "D^((1),(1))");
    }

    #[test]
    fn so5_natural() {
        let (outcome, _) =
            oracle_zero_weight(LieType::C, 2, &[1, 0], 3, 42, 4096).unwrap();
        assert_eq!(outcome.dim_zero_weight, 1);
        assert_eq!(outcome.factors[0].0.to_string(), "D^((),(2))");
    }
}
