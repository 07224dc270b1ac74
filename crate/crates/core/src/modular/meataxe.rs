//! Composition factors over a prime field: random algebra elements, kernel
//! splitting, and the standard two-sided spin certificate for
//! irreducibility (an irreducible factor of the minimal polynomial with a
//! one-dimensional eigenspace over its residue field certifies through spin
//! of the module and of its transpose).

use crate::error::{Error, Result};
use crate::linalg::field::{FpElt, Scalar};
use crate::linalg::fppoly::{factor, minimal_polynomial};
use crate::linalg::gauss::{coordinates_in_basis, gauss_mat, spin, RowSpace};
use crate::linalg::mat::FMat;
use crate::prng::Prng;

/// Retry budget per split attempt.
const RETRY_BUDGET: usize = 200;
/// Random words: products of at most this many operators.
const WORD_LEN_MAX: usize = 8;
/// Random elements: sums of at most this many words.
const SUMMANDS_MAX: usize = 4;

/// Matrices acting on F_ell^dim; any multiplicatively closed generating set.
#[derive(Debug, Clone)]
pub struct ActionSet {
    pub ell: u64,
    pub dim: usize,
    pub operators: Vec<FMat>,
}

impl ActionSet {
    pub fn new(ell: u64, dim: usize, operators: Vec<FMat>) -> ActionSet {
        debug_assert!(operators.iter().all(|m| m.rows == dim && m.cols == dim));
        ActionSet { ell, dim, operators }
    }

    fn zero(&self) -> FpElt {
        FpElt { value: 0, ell: self.ell }
    }

    fn random_element(&self, rng: &mut Prng) -> FMat {
        let model = self.zero();
        let mut acc = FMat::zero(self.dim, self.dim, &model);
        let summands = 1 + rng.below(SUMMANDS_MAX as u64) as usize;
        for _ in 0..summands {
            let len = 1 + rng.below(WORD_LEN_MAX as u64) as usize;
            let mut word = FMat::identity(self.dim, &model);
            for _ in 0..len {
                let pick = rng.below(self.operators.len() as u64) as usize;
                word = word.mul(&self.operators[pick]);
            }
            let coeff = FpElt {
                value: 1 + rng.below(self.ell - 1),
                ell: self.ell,
            };
            acc = acc.add(&word.scale(&coeff));
        }
        acc
    }

    fn transposed(&self) -> ActionSet {
        ActionSet {
            ell: self.ell,
            dim: self.dim,
            operators: self.operators.iter().map(|m| m.transpose()).collect(),
        }
    }

    /// Restrict every operator to an invariant subspace given by an
    /// echelonized basis.
    pub fn restrict(&self, basis: &[Vec<FpElt>]) -> ActionSet {
        let ops = self
            .operators
            .iter()
            .map(|g| {
                let mut rows = Vec::with_capacity(basis.len());
                for b in basis {
                    let img = g.apply(b);
                    rows.push(
                        coordinates_in_basis(basis, &img).expect("subspace not invariant"),
                    );
                }
                FMat::from_rows(rows).transpose()
            })
            .collect();
        ActionSet::new(self.ell, basis.len(), ops)
    }

    /// Quotient action on the complement of an invariant subspace.
    pub fn quotient(&self, basis: &[Vec<FpElt>]) -> ActionSet {
        let model = self.zero();
        let mut space = RowSpace::empty(self.dim);
        for b in basis {
            space.insert(b);
        }
        // Complete with unit vectors; their classes form a quotient basis.
        let mut reps: Vec<Vec<FpElt>> = Vec::new();
        for i in 0..self.dim {
            let mut e = vec![model.zero_like(); self.dim];
            e[i] = model.one_like();
            if space.insert(&e) {
                reps.push(e);
            }
        }
        let qdim = reps.len();
        // Reduce a vector to quotient coordinates: subtract the subspace
        // part by solving against (basis | reps).
        let mut full: Vec<Vec<FpElt>> = basis.to_vec();
        full.extend(reps.iter().cloned());
        let ops = self
            .operators
            .iter()
            .map(|g| {
                let mut rows = Vec::with_capacity(qdim);
                for r in &reps {
                    let img = g.apply(r);
                    let coords = coordinates_in_basis(&full, &img).expect("span");
                    rows.push(coords[basis.len()..].to_vec());
                }
                FMat::from_rows(rows).transpose()
            })
            .collect();
        ActionSet::new(self.ell, qdim, ops)
    }
}

/// Outcome of one irreducibility probe.
enum Probe {
    Irreducible,
    Submodule(Vec<Vec<FpElt>>),
    Inconclusive,
}

fn probe_with(z: &FMat, set: &ActionSet) -> Probe {
    let minpoly = minimal_polynomial(z);
    let factors = factor(&minpoly);
    for (f, _) in &factors {
        let fz = f.eval_matrix(z);
        let ker = gauss_mat(&fz).kernel_basis;
        if ker.is_empty() {
            continue;
        }
        // Any vector of any factor kernel may expose a submodule.
        let sub = spin(&[ker[0].clone()], &set.operators).expect("spin");
        if sub.len() < set.dim {
            return Probe::Submodule(sub);
        }
        // The certificate needs a factor whose kernel is one block.
        if ker.len() == f.degree() {
            // spin(v) = full space; check the transpose side.
            let tset = set.transposed();
            let fzt = fz.transpose();
            let tker = gauss_mat(&fzt).kernel_basis;
            let tspin = spin(&[tker[0].clone()], &tset.operators).expect("spin");
            if tspin.len() < set.dim {
                // A proper quotient exists; its pre-annihilator is a proper
                // submodule: take the orthogonal complement.
                let sub = orthogonal_complement(&tspin, set);
                return Probe::Submodule(sub);
            }
            return Probe::Irreducible;
        }
    }
    Probe::Inconclusive
}

/// {v : <v, w> = 0 for all w in the row space}, as an invariant subspace of
/// the original module when the rows span a transposed submodule.
fn orthogonal_complement(rows: &[Vec<FpElt>], set: &ActionSet) -> Vec<Vec<FpElt>> {
    let m = FMat::from_rows(rows.to_vec());
    let ker = gauss_mat(&m).kernel_basis;
    let _ = set;
    ker
}

/// Irreducibility with certificate, or an invariant proper subspace.
pub fn split_or_certify(set: &ActionSet, rng: &mut Prng) -> Result<Option<Vec<Vec<FpElt>>>> {
    if set.dim == 0 {
        return Err(Error::Malformed("zero module in meataxe".into()));
    }
    if set.dim == 1 {
        return Ok(None);
    }
    for _ in 0..RETRY_BUDGET {
        let z = set.random_element(rng);
        match probe_with(&z, set) {
            Probe::Irreducible => return Ok(None),
            Probe::Submodule(sub) => return Ok(Some(sub)),
            Probe::Inconclusive => continue,
        }
    }
    Err(Error::MeataxeStepLimit(RETRY_BUDGET))
}

/// A simple factor with its multiplicity.
#[derive(Debug, Clone)]
pub struct Factor {
    pub action: ActionSet,
    pub multiplicity: usize,
}

/// Composition factors with multiplicities, grouped by isomorphism.
pub fn composition_factors(set: &ActionSet, seed: u64) -> Result<Vec<Factor>> {
    let mut rng = Prng::new(seed);
    let mut simples: Vec<ActionSet> = Vec::new();
    let mut stack = vec![set.clone()];
    while let Some(current) = stack.pop() {
        if current.dim == 0 {
            continue;
        }
        match split_or_certify(&current, &mut rng)? {
            None => simples.push(current),
            Some(sub) => {
                stack.push(current.restrict(&sub));
                stack.push(current.quotient(&sub));
            }
        }
    }
    // Group by isomorphism.
    let mut grouped: Vec<Factor> = Vec::new();
    'outer: for s in simples {
        for g in grouped.iter_mut() {
            if g.action.dim == s.dim && is_isomorphic(&g.action, &s)? {
                g.multiplicity += 1;
                continue 'outer;
            }
        }
        grouped.push(Factor {
            action: s,
            multiplicity: 1,
        });
    }
    grouped.sort_by_key(|f| f.action.dim);
    let total: usize = grouped.iter().map(|f| f.action.dim * f.multiplicity).sum();
    if total != set.dim {
        return Err(Error::Validation(
            "composition factor dimensions do not add up".into(),
        ));
    }
    Ok(grouped)
}

/// Space of intertwiners X with X a_i = b_i X for matched operator lists.
pub fn hom_space(a: &ActionSet, b: &ActionSet) -> Result<Vec<FMat>> {
    if a.ell != b.ell {
        return Err(Error::Malformed("hom space across different primes".into()));
    }
    if a.operators.len() != b.operators.len() {
        return Err(Error::Malformed("operator lists of different lengths".into()));
    }
    let (da, db) = (a.dim, b.dim);
    let model = FpElt { value: 0, ell: a.ell };
    let mut rows = Vec::new();
    for (ga, gb) in a.operators.iter().zip(b.operators.iter()) {
        // X ga - gb X = 0, X is db x da.
        for i in 0..db {
            for j in 0..da {
                let mut row = vec![model.zero_like(); da * db];
                for k in 0..da {
                    row[i * da + k] = row[i * da + k].add(ga.at(k, j));
                }
                for k in 0..db {
                    row[k * da + j] = row[k * da + j].sub(gb.at(i, k));
                }
                rows.push(row);
            }
        }
    }
    let sys = FMat::from_rows(rows);
    let ker = gauss_mat(&sys).kernel_basis;
    Ok(ker
        .into_iter()
        .map(|v| {
            let mut m = FMat::zero(db, da, &model);
            for i in 0..db {
                for j in 0..da {
                    *m.at_mut(i, j) = v[i * da + j];
                }
            }
            m
        })
        .collect())
}

/// Isomorphism test: an invertible intertwiner exists. For simple modules
/// any nonzero hom is invertible; in general a few combinations of the hom
/// basis are probed deterministically.
pub fn is_isomorphic(a: &ActionSet, b: &ActionSet) -> Result<bool> {
    if a.dim != b.dim {
        return Ok(false);
    }
    let homs = hom_space(a, b)?;
    if homs.is_empty() {
        return Ok(false);
    }
    for h in &homs {
        if crate::linalg::gauss::invert(h).is_some() {
            return Ok(true);
        }
    }
    // Deterministic seeded combinations.
    let mut rng = Prng::new(0x5EED);
    let model = FpElt { value: 0, ell: a.ell };
    for _ in 0..64 {
        let mut m = FMat::zero(b.dim, a.dim, &model);
        for h in &homs {
            let c = FpElt {
                value: rng.below(a.ell),
                ell: a.ell,
            };
            m = m.add(&h.scale(&c));
        }
        if crate::linalg::gauss::invert(&m).is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Brute-force composition series for tiny modules: spins every nonzero
/// vector to find a minimal submodule, then recurses on the quotient.
/// Test oracle only; exponential in dim.
pub fn composition_series_bruteforce(set: &ActionSet) -> Vec<ActionSet> {
    let mut out = Vec::new();
    let mut current = set.clone();
    while current.dim > 0 {
        let minimal = minimal_submodule_bruteforce(&current);
        out.push(current.restrict(&minimal));
        current = current.quotient(&minimal);
    }
    out
}

fn minimal_submodule_bruteforce(set: &ActionSet) -> Vec<Vec<FpElt>> {
    assert!(
        (set.ell as f64).powi(set.dim as i32) < 2e6,
        "brute force oracle out of range"
    );
    let mut best: Option<Vec<Vec<FpElt>>> = None;
    let total = (set.ell as u64).pow(set.dim as u32);
    for code in 1..total {
        let mut v = Vec::with_capacity(set.dim);
        let mut c = code;
        for _ in 0..set.dim {
            v.push(FpElt {
                value: c % set.ell,
                ell: set.ell,
            });
            c /= set.ell;
        }
        let sub = spin(&[v], &set.operators).expect("spin");
        if best.as_ref().map_or(true, |b| sub.len() < b.len()) {
            best = Some(sub);
        }
    }
    best.expect("nonzero module has a minimal submodule")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_regular(ell: u64, n: u64) -> ActionSet {
        // regular representation of Z/n over F_ell
        let size = n as usize;
        let mut rows = vec![vec![0u64; size]; size];
        for i in 0..size {
            rows[(i + 1) % size][i] = 1;
        }
        ActionSet::new(ell, size, vec![FMat::from_u64_rows(ell, &rows)])
    }

    #[test]
    fn cyclic_group_factors() {
        // Z/3 over F_2: x^3-1 = (x-1)(x^2+x+1), one 1-dim and one 2-dim factor
        let set = cyclic_regular(2, 3);
        let factors = composition_factors(&set, 42).unwrap();
        let mut dims: Vec<usize> = factors
            .iter()
            .flat_map(|f| std::iter::repeat(f.action.dim).take(f.multiplicity))
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
    }

    #[test]
    fn unipotent_not_semisimple() {
        // Z/2 over F_2 regular module: uniserial with two trivial factors
        let set = cyclic_regular(2, 2);
        let factors = composition_factors(&set, 7).unwrap();
        assert_eq!(factors.len(), 1);
        assert_eq!(factors[0].action.dim, 1);
        assert_eq!(factors[0].multiplicity, 2);
    }

    #[test]
    fn seed_independent() {
        let set = cyclic_regular(3, 4);
        let mut outcomes = Vec::new();
        for seed in [1u64, 42, 1337] {
            let mut dims: Vec<(usize, usize)> = composition_factors(&set, seed)
                .unwrap()
                .iter()
                .map(|f| (f.action.dim, f.multiplicity))
                .collect();
            dims.sort_unstable();
            outcomes.push(dims);
        }
        assert_eq!(outcomes[0], outcomes[1]);
        assert_eq!(outcomes[1], outcomes[2]);
    }

    #[test]
    fn hom_space_schur() {
        // two inequivalent 1-dim modules of Z/2 over F_3
        let a = ActionSet::new(3, 1, vec![FMat::from_u64_rows(3, &[vec![1]])]);
        let b = ActionSet::new(3, 1, vec![FMat::from_u64_rows(3, &[vec![2]])]);
        assert!(!is_isomorphic(&a, &b).unwrap());
        assert!(is_isomorphic(&a, &a).unwrap());
    }

    #[test]
    fn bruteforce_matches_meataxe() {
        let set = cyclic_regular(2, 3);
        let series = composition_series_bruteforce(&set);
        let mut dims: Vec<usize> = series.iter().map(|s| s.dim).collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 2]);
    }
}
