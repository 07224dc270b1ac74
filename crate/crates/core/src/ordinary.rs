//! Explicit rational matrices for every ordinary irreducible.
//!
//! Type A uses the polytabloid model of the Specht module inside the
//! permutation module on tabloids. Hyperoctahedral modules are induced from
//! a two-block subgroup, the second block twisted by the sign-flip
//! character. Type D modules restrict from the hyperoctahedral group, with
//! degenerate pairs split along a commuting involution's eigenspaces. G2 is
//! hard-coded from the reflection representation.

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::labels::{G2Irr, IrrLabel};
use crate::linalg::field::big_rational_from as br;
use crate::linalg::gauss::{coordinates_in_basis, kernel};
use crate::linalg::mat::QMat;
use crate::partitions::{Bipartition, Partition};
use crate::weyl::{GroupId, WeylElem, WeylGroup};

/// A representation of a Weyl group by rational matrices on the generators.
#[derive(Debug, Clone)]
pub struct OrdinaryRep {
    pub group: GroupId,
    pub label: IrrLabel,
    pub dim: usize,
    pub generators: Vec<QMat>,
}

impl OrdinaryRep {
    /// Matrix of an arbitrary element, via a reduced word.
    pub fn element_matrix(&self, w: &WeylGroup, elem: &WeylElem) -> QMat {
        let mut acc = QMat::identity(self.dim, &br(0));
        for gi in w.word_of(elem) {
            acc = acc.mul(&self.generators[gi]);
        }
        acc
    }

    /// Traces on the class representatives, in class order.
    pub fn traces(&self, w: &WeylGroup) -> Vec<BigRational> {
        w.classes
            .iter()
            .map(|c| self.element_matrix(w, &c.representative).trace())
            .collect()
    }

    /// Check the defining relations on the generator matrices.
    pub fn validate_relations(&self, w: &WeylGroup) -> Result<()> {
        let id = QMat::identity(self.dim, &br(0));
        let k = self.generators.len();
        for i in 0..k {
            for j in i..k {
                let m = w.coxeter_m(i, j);
                let mut acc = id.clone();
                for _ in 0..m {
                    acc = acc.mul(&self.generators[i]).mul(&self.generators[j]);
                }
                if acc != id {
                    return Err(Error::Validation(format!(
                        "relation (s{i} s{j})^{m} fails for {}",
                        self.label
                    )));
                }
            }
        }
        Ok(())
    }

    /// Tensor with the sign character: negate every generator matrix.
    pub fn tensor_sign(&self) -> OrdinaryRep {
        let minus_one = br(-1);
        OrdinaryRep {
            group: self.group,
            label: self.label.clone(),
            dim: self.dim,
            generators: self.generators.iter().map(|g| g.scale(&minus_one)).collect(),
        }
    }
}

// ---------------------------------------------------------------------------
// Specht modules
// ---------------------------------------------------------------------------

/// Polytabloid model of S^lambda. Keeps the ambient tabloid data so the
/// integral bilinear form and arbitrary permutation actions are available.
pub struct SpechtModule {
    pub lam: Partition,
    pub n: usize,
    /// Row assignment of each entry for every tabloid, canonical form.
    tabloids: Vec<Vec<u8>>,
    tabloid_index: HashMap<Vec<u8>, usize>,
    /// Standard tableaux as row-lists.
    pub standard: Vec<Vec<Vec<u8>>>,
    /// Polytabloid coordinate vectors (integers) in the tabloid basis.
    pub basis: Vec<Vec<BigRational>>,
}

fn tabloid_key(rows: &[Vec<u8>], n: usize) -> Vec<u8> {
    let mut key = vec![0u8; n];
    for (ri, row) in rows.iter().enumerate() {
        for &e in row {
            key[e as usize] = ri as u8;
        }
    }
    key
}

impl SpechtModule {
    pub fn new(lam: &Partition) -> SpechtModule {
        let n = lam.size() as usize;
        let shape: Vec<usize> = lam.0.iter().map(|&x| x as usize).collect();
        // Enumerate all tabloids (assignments of {0..n-1} to rows with the
        // given row sizes).
        let mut tabloids = Vec::new();
        let mut assignment = vec![0u8; n];
        enumerate_assignments(&shape, 0, &mut vec![0; shape.len()], &mut assignment, &mut tabloids);
        let tabloid_index: HashMap<Vec<u8>, usize> = tabloids
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, t)| (t, i))
            .collect();
        let standard = standard_tableaux(&shape);
        let mut basis = Vec::with_capacity(standard.len());
        for t in &standard {
            basis.push(polytabloid(t, &tabloid_index, n));
        }
        SpechtModule {
            lam: lam.clone(),
            n,
            tabloids,
            tabloid_index,
            standard,
            basis,
        }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Action of a permutation (images p[i]) on the ambient tabloid space.
    fn permute_ambient(&self, v: &[BigRational], p: &[usize]) -> Vec<BigRational> {
        let mut out = vec![BigRational::zero(); v.len()];
        for (ti, t) in self.tabloids.iter().enumerate() {
            if v[ti].is_zero() {
                continue;
            }
            let mut moved = vec![0u8; self.n];
            for e in 0..self.n {
                moved[p[e]] = t[e];
            }
            let tj = self.tabloid_index[&moved];
            out[tj] = out[tj].clone() + v[ti].clone();
        }
        out
    }

    /// Matrix of a permutation on the standard polytabloid basis.
    pub fn perm_matrix(&self, p: &[usize]) -> QMat {
        let mut cols = Vec::with_capacity(self.dim());
        for b in &self.basis {
            let img = self.permute_ambient(b, p);
            let coords = coordinates_in_basis(&self.basis, &img)
                .expect("polytabloid image lies in the Specht module");
            cols.push(coords);
        }
        QMat::from_rows(cols).transpose()
    }

    /// Gram matrix of the integral bilinear form (tabloid basis orthonormal).
    pub fn gram(&self) -> QMat {
        let d = self.dim();
        let mut g = QMat::zero(d, d, &br(0));
        for i in 0..d {
            for j in 0..d {
                *g.at_mut(i, j) = crate::linalg::mat::dot(&self.basis[i], &self.basis[j]);
            }
        }
        g
    }
}

fn enumerate_assignments(
    shape: &[usize],
    entry: usize,
    used: &mut Vec<usize>,
    assignment: &mut Vec<u8>,
    out: &mut Vec<Vec<u8>>,
) {
    let n: usize = shape.iter().sum();
    if entry == n {
        out.push(assignment.clone());
        return;
    }
    for r in 0..shape.len() {
        if used[r] < shape[r] {
            used[r] += 1;
            assignment[entry] = r as u8;
            enumerate_assignments(shape, entry + 1, used, assignment, out);
            used[r] -= 1;
        }
    }
}

/// All standard Young tableaux of the given shape, entries 0-based.
pub fn standard_tableaux(shape: &[usize]) -> Vec<Vec<Vec<u8>>> {
    let n: usize = shape.iter().sum();
    let mut rows: Vec<Vec<u8>> = shape.iter().map(|_| Vec::new()).collect();
    let mut out = Vec::new();
    fn rec(shape: &[usize], rows: &mut Vec<Vec<u8>>, next: u8, n: usize, out: &mut Vec<Vec<Vec<u8>>>) {
        if next as usize == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            if rows[r].len() >= shape[r] {
                continue;
            }
            // rows must stay left-justified and columns increasing
            if r > 0 && rows[r - 1].len() <= rows[r].len() {
                continue;
            }
            rows[r].push(next);
            rec(shape, rows, next + 1, n, out);
            rows[r].pop();
        }
    }
    rec(shape, &mut rows, 0, n, &mut out);
    out
}

/// Polytabloid of a tableau: alternating sum over its column group.
fn polytabloid(t: &[Vec<u8>], tabloid_index: &HashMap<Vec<u8>, usize>, n: usize) -> Vec<BigRational> {
    let ncols = t.first().map_or(0, |r| r.len());
    let mut columns: Vec<Vec<u8>> = Vec::new();
    for c in 0..ncols {
        let col: Vec<u8> = t.iter().filter_map(|row| row.get(c).copied()).collect();
        columns.push(col);
    }
    let mut result = vec![BigRational::zero(); tabloid_index.len()];
    // Cartesian product over per-column permutations with signs.
    let col_perms: Vec<Vec<(Vec<u8>, i64)>> = columns
        .iter()
        .map(|col| signed_permutations(col))
        .collect();
    let mut idx = vec![0usize; col_perms.len()];
    loop {
        // Build the permuted tableau row assignment.
        let mut rows: Vec<Vec<u8>> = t.iter().map(|r| r.to_vec()).collect();
        let mut sign = 1i64;
        for (c, choice) in idx.iter().enumerate() {
            let (ref perm_col, s) = col_perms[c][*choice];
            sign *= s;
            for (r, &e) in perm_col.iter().enumerate() {
                rows[r][c] = e;
            }
        }
        let key = tabloid_key(&rows, n);
        let ti = tabloid_index[&key];
        result[ti] = result[ti].clone() + br(sign);
        // advance
        let mut c = 0;
        loop {
            if c == idx.len() {
                return result;
            }
            idx[c] += 1;
            if idx[c] < col_perms[c].len() {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
    }
}

/// All rearrangements of a list, each with the sign of the permutation of
/// positions producing it.
fn signed_permutations(items: &[u8]) -> Vec<(Vec<u8>, i64)> {
    let k = items.len();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = Vec::with_capacity(k);
    let mut used = vec![false; k];
    fn rec(
        items: &[u8],
        idx: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<(Vec<u8>, i64)>,
    ) {
        if idx.len() == items.len() {
            let arranged: Vec<u8> = idx.iter().map(|&i| items[i]).collect();
            out.push((arranged, crate::weyl::perm_sign(idx)));
            return;
        }
        for i in 0..items.len() {
            if !used[i] {
                used[i] = true;
                idx.push(i);
                rec(items, idx, used, out);
                idx.pop();
                used[i] = false;
            }
        }
    }
    rec(items, &mut idx, &mut used, &mut out);
    out
}

// ---------------------------------------------------------------------------
// Hyperoctahedral modules
// ---------------------------------------------------------------------------

/// Induced module data for chi^{(alpha,beta)}: cosets of the two-block
/// subgroup, inner Specht factors, the sign-flip twist on the second block.
pub struct InducedBC {
    pub n: usize,
    pub pair: Bipartition,
    pub cosets: Vec<Vec<usize>>, // sorted a-subsets of 0..n
    pub inner_alpha: SpechtModule,
    pub inner_beta: SpechtModule,
}

impl InducedBC {
    pub fn new(n: usize, pair: &Bipartition) -> InducedBC {
        let a = pair.alpha.size() as usize;
        let mut cosets = Vec::new();
        subsets(n, a, &mut Vec::new(), 0, &mut cosets);
        InducedBC {
            n,
            pair: pair.clone(),
            cosets,
            inner_alpha: SpechtModule::new(&pair.alpha),
            inner_beta: SpechtModule::new(&pair.beta),
        }
    }

    pub fn inner_dim(&self) -> usize {
        self.inner_alpha.dim() * self.inner_beta.dim()
    }

    pub fn dim(&self) -> usize {
        self.cosets.len() * self.inner_dim()
    }

    fn coset_rep(&self, idx: usize) -> WeylElem {
        let t = &self.cosets[idx];
        let a = t.len();
        let mut perm = vec![0u8; self.n];
        let complement: Vec<usize> = (0..self.n).filter(|x| !t.contains(x)).collect();
        for (i, &p) in t.iter().enumerate() {
            perm[i] = p as u8;
        }
        for (i, &p) in complement.iter().enumerate() {
            perm[a + i] = p as u8;
        }
        WeylElem::Signed {
            perm,
            neg: vec![false; self.n],
        }
    }

    fn coset_of(&self, w: &WeylElem) -> usize {
        let WeylElem::Signed { perm, .. } = w else {
            panic!("hyperoctahedral element expected")
        };
        let a = self.pair.alpha.size() as usize;
        let mut t: Vec<usize> = (0..a).map(|i| perm[i] as usize).collect();
        t.sort_unstable();
        self.cosets.iter().position(|c| *c == t).expect("coset")
    }

    /// Matrix of an arbitrary group element on the induced module.
    pub fn element_matrix(&self, w: &WeylElem) -> QMat {
        let a = self.pair.alpha.size() as usize;
        let b = self.n - a;
        let inner = self.inner_dim();
        let d = self.dim();
        let mut m = QMat::zero(d, d, &br(0));
        for j in 0..self.cosets.len() {
            let rj = self.coset_rep(j);
            let grj = w.compose(&rj);
            let jp = self.coset_of(&grj);
            let rjp = self.coset_rep(jp);
            let h = rjp.inverse().compose(&grj);
            let WeylElem::Signed { perm, neg } = &h else {
                unreachable!()
            };
            // h preserves the two blocks
            let u: Vec<usize> = (0..a).map(|i| perm[i] as usize).collect();
            let v: Vec<usize> = (a..self.n).map(|i| perm[i] as usize - a).collect();
            debug_assert!(u.iter().all(|&x| x < a));
            let delta: i64 = if (a..self.n).filter(|&i| neg[i]).count() % 2 == 0 {
                1
            } else {
                -1
            };
            let ma = self.inner_alpha.perm_matrix(&u);
            let mb = self.inner_beta.perm_matrix(&v).scale(&br(delta));
            let block = kronecker(&ma, &mb);
            let _ = b;
            for r in 0..inner {
                for c in 0..inner {
                    if block.at(r, c).is_zero() {
                        continue;
                    }
                    *m.at_mut(jp * inner + r, j * inner + c) = block.at(r, c).clone();
                }
            }
        }
        m
    }

    /// Gram matrix of the induced integral form: block diagonal with the
    /// product of the inner Specht forms in each coset.
    pub fn gram(&self) -> QMat {
        let ga = self.inner_alpha.gram();
        let gb = self.inner_beta.gram();
        let block = kronecker(&ga, &gb);
        let inner = self.inner_dim();
        let d = self.dim();
        let mut g = QMat::zero(d, d, &br(0));
        for j in 0..self.cosets.len() {
            for r in 0..inner {
                for c in 0..inner {
                    *g.at_mut(j * inner + r, j * inner + c) = block.at(r, c).clone();
                }
            }
        }
        g
    }
}

fn subsets(n: usize, k: usize, cur: &mut Vec<usize>, start: usize, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for x in start..n {
        cur.push(x);
        subsets(n, k, cur, x + 1, out);
        cur.pop();
    }
}

pub fn kronecker(a: &QMat, b: &QMat) -> QMat {
    let mut out = QMat::zero(a.rows * b.rows, a.cols * b.cols, &br(0));
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
                    *out.at_mut(i * b.rows + k, j * b.cols + l) =
                        a.at(i, j).clone() * b.at(k, l).clone();
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Assembly per label
// ---------------------------------------------------------------------------

/// Matrices of the ordinary irreducible with the given label, as generator
/// matrices for `w`. Traces match the character table row exactly; the
/// defining relations are validated at construction.
pub fn ordinary_matrices(w: &WeylGroup, label: &IrrLabel) -> Result<OrdinaryRep> {
    let label = label.clone().canonical();
    let rep = match (&label, w.group_id) {
        (IrrLabel::Sym(lam), GroupId::Sym(m)) => {
            if lam.size() as usize != m {
                return Err(Error::Malformed(format!("label {label} for S{m}")));
            }
            let sp = SpechtModule::new(lam);
            let gens = w
                .generators
                .iter()
                .map(|g| sp.perm_matrix(&g.underlying_perm()))
                .collect();
            OrdinaryRep {
                group: w.group_id,
                label: label.clone(),
                dim: sp.dim(),
                generators: gens,
            }
        }
        (IrrLabel::BC(pair), GroupId::BC(n)) => {
            if pair.size() as usize != n {
                return Err(Error::Malformed(format!("label {label} for rank {n}")));
            }
            let ind = InducedBC::new(n, pair);
            let gens = w.generators.iter().map(|g| ind.element_matrix(g)).collect();
            OrdinaryRep {
                group: w.group_id,
                label: label.clone(),
                dim: ind.dim(),
                generators: gens,
            }
        }
        (IrrLabel::DPair(a, b), GroupId::D(n)) => {
            if (a.size() + b.size()) as usize != n {
                return Err(Error::Malformed(format!("label {label} for rank {n}")));
            }
            let ind = InducedBC::new(n, &Bipartition::new(a.clone(), b.clone()));
            let gens = w.generators.iter().map(|g| ind.element_matrix(g)).collect();
            OrdinaryRep {
                group: w.group_id,
                label: label.clone(),
                dim: ind.dim(),
                generators: gens,
            }
        }
        (IrrLabel::DSplit(a, plus), GroupId::D(n)) => {
            if 2 * a.size() as usize != n {
                return Err(Error::Malformed(format!("label {label} for rank {n}")));
            }
            let (p, m) = d_split_modules(w, a)?;
            if *plus {
                p
            } else {
                m
            }
        }
        (IrrLabel::G2(which), GroupId::G2) => g2_rep(w, *which),
        _ => {
            return Err(Error::Malformed(format!(
                "label {label} does not belong to {}",
                w.group_id
            )))
        }
    };
    rep.validate_relations(w)?;
    Ok(rep)
}

/// The two summands of the restriction of chi^{(alpha,alpha)} to D_n,
/// split along the eigenspaces of a commuting involution. "+" is the
/// eigenspace of the larger eigenvalue of the first non-scalar commutant
/// basis element; this convention is internal to the library.
pub fn d_split_modules(w: &WeylGroup, alpha: &Partition) -> Result<(OrdinaryRep, OrdinaryRep)> {
    let GroupId::D(n) = w.group_id else {
        return Err(Error::Malformed("split modules need a type D group".into()));
    };
    let ind = InducedBC::new(n, &Bipartition::new(alpha.clone(), alpha.clone()));
    let gens: Vec<QMat> = w.generators.iter().map(|g| ind.element_matrix(g)).collect();
    let d = ind.dim();
    // Commutant: X with X g = g X for all generators.
    let mut rows: Vec<Vec<BigRational>> = Vec::new();
    for g in &gens {
        // (X g - g X) entry (i,j) as linear functional of X entries.
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![BigRational::zero(); d * d];
                for k in 0..d {
                    // X[i][k] g[k][j]
                    row[i * d + k] = row[i * d + k].clone() + g.at(k, j).clone();
                    // - g[i][k] X[k][j]
                    row[k * d + j] = row[k * d + j].clone() - g.at(i, k).clone();
                }
                rows.push(row);
            }
        }
    }
    let system = QMat::from_rows(rows);
    let comm = kernel(&system);
    let x = comm
        .iter()
        .map(|v| {
            let mut m = QMat::zero(d, d, &br(0));
            for i in 0..d {
                for j in 0..d {
                    *m.at_mut(i, j) = v[i * d + j].clone();
                }
            }
            m
        })
        .find(|m| !is_scalar(m))
        .ok_or_else(|| Error::Validation("restriction does not split".into()))?;
    // X satisfies a rational quadratic with distinct roots.
    let mp = rational_minpoly(&x);
    if mp.len() != 3 {
        return Err(Error::Validation(format!(
            "commutant element has minimal polynomial of degree {}",
            mp.len() - 1
        )));
    }
    let (c, b) = (mp[0].clone(), mp[1].clone());
    let disc = b.clone() * b.clone() - br(4) * c;
    let sq = rational_sqrt(&disc)
        .ok_or_else(|| Error::Validation("irrational eigenvalues in split".into()))?;
    let two = br(2);
    let mut e1 = (-b.clone() + sq.clone()) / two.clone();
    let mut e2 = (-b - sq) / two;
    if e1 < e2 {
        std::mem::swap(&mut e1, &mut e2);
    }
    let mut out = Vec::new();
    for (eig, plus) in [(e1, true), (e2, false)] {
        let mut shifted = x.clone();
        for i in 0..d {
            *shifted.at_mut(i, i) = shifted.at(i, i).clone() - eig.clone();
        }
        let eig_basis = kernel(&shifted);
        let sub_gens: Vec<QMat> = gens
            .iter()
            .map(|g| {
                let mut cols = Vec::new();
                for v in &eig_basis {
                    let img = g.apply(v);
                    cols.push(coordinates_in_basis(&eig_basis, &img).expect("invariant"));
                }
                QMat::from_rows(cols).transpose()
            })
            .collect();
        out.push(OrdinaryRep {
            group: w.group_id,
            label: IrrLabel::DSplit(alpha.clone(), plus),
            dim: eig_basis.len(),
            generators: sub_gens,
        });
    }
    let minus = out.pop().unwrap();
    let plus = out.pop().unwrap();
    Ok((plus, minus))
}

fn is_scalar(m: &QMat) -> bool {
    let d = m.rows;
    let c = m.at(0, 0).clone();
    for i in 0..d {
        for j in 0..d {
            let expect = if i == j { c.clone() } else { BigRational::zero() };
            if *m.at(i, j) != expect {
                return false;
            }
        }
    }
    true
}

/// Minimal polynomial over Q via Krylov dependence; monic coefficient list
/// low-to-high.
pub fn rational_minpoly(m: &QMat) -> Vec<BigRational> {
    let mut powers: Vec<QMat> = vec![QMat::identity(m.rows, &br(0))];
    loop {
        let next = powers.last().unwrap().mul(m);
        let rows: Vec<Vec<BigRational>> = powers.iter().map(|p| p.data.clone()).collect();
        if let Some(coords) = coordinates_in_basis(&rows, &next.data) {
            let mut coeffs: Vec<BigRational> = coords.iter().map(|c| -c.clone()).collect();
            coeffs.push(BigRational::one());
            return coeffs;
        }
        powers.push(next);
    }
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    let cand = BigRational::new(n, d);
    if cand.clone() * cand.clone() == *q {
        Some(cand)
    } else {
        None
    }
}

fn g2_rep(w: &WeylGroup, which: G2Irr) -> OrdinaryRep {
    let refl: Vec<QMat> = w
        .generators
        .iter()
        .map(|g| {
            let WeylElem::Mat2(m) = g else { unreachable!() };
            QMat::from_i64_rows(&[vec![m[0][0], m[0][1]], vec![m[1][0], m[1][1]]])
        })
        .collect();
    let lin = |v1: i64, v2: i64| -> Vec<QMat> {
        vec![
            QMat::from_i64_rows(&[vec![v1]]),
            QMat::from_i64_rows(&[vec![v2]]),
        ]
    };
    let (dim, generators) = match which {
        G2Irr::Triv => (1, lin(1, 1)),
        G2Irr::Sgn => (1, lin(-1, -1)),
        G2Irr::SgnShort => (1, lin(-1, 1)),
        G2Irr::SgnLong => (1, lin(1, -1)),
        G2Irr::Refl => (2, refl),
        G2Irr::ReflTwist => (
            2,
            refl.iter()
                .enumerate()
                .map(|(i, m)| if i == 0 { m.scale(&br(-1)) } else { m.clone() })
                .collect(),
        ),
    };
    OrdinaryRep {
        group: GroupId::G2,
        label: IrrLabel::G2(which),
        dim,
        generators,
    }
}

/// Gram matrix of the natural integral invariant form for labels that have
/// one in this model (symmetric and hyperoctahedral labels).
pub fn invariant_gram(w: &WeylGroup, label: &IrrLabel) -> Result<QMat> {
    match (label, w.group_id) {
        (IrrLabel::Sym(lam), GroupId::Sym(_)) => Ok(SpechtModule::new(lam).gram()),
        (IrrLabel::BC(pair), GroupId::BC(n)) => Ok(InducedBC::new(n, pair).gram()),
        _ => Err(Error::Unsupported(format!(
            "no stored integral form for {label}"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::LieType;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec())
    }

    #[test]
    fn specht_dims_s4() {
        let dims: Vec<usize> = crate::partitions::partitions_of(4)
            .iter()
            .map(|lam| SpechtModule::new(lam).dim())
            .collect();
        assert_eq!(dims, vec![1, 3, 2, 3, 1]);
    }

    #[test]
    fn specht_standard_rep_s3() {
        let w = WeylGroup::new(LieType::A, 2).unwrap();
        let rep = ordinary_matrices(&w, &IrrLabel::Sym(part(&[2, 1]))).unwrap();
        assert_eq!(rep.dim, 2);
        let traces = rep.traces(&w);
        assert_eq!(traces, vec![br(2), br(0), br(-1)]);
    }

    #[test]
    fn trivial_and_sign() {
        let w = WeylGroup::new(LieType::A, 3).unwrap();
        let triv = ordinary_matrices(&w, &IrrLabel::Sym(part(&[4]))).unwrap();
        assert_eq!(triv.dim, 1);
        assert!(triv.traces(&w).iter().all(|t| *t == br(1)));
        let sgn = ordinary_matrices(&w, &IrrLabel::Sym(part(&[1, 1, 1, 1]))).unwrap();
        let eps: Vec<BigRational> = w.sign_on_classes().iter().map(|&s| br(s)).collect();
        assert_eq!(sgn.traces(&w), eps);
    }

    #[test]
    fn bc_two_dim() {
        let w = WeylGroup::new(LieType::B, 2).unwrap();
        let pair = Bipartition::new(part(&[1]), part(&[1]));
        let rep = ordinary_matrices(&w, &IrrLabel::BC(pair)).unwrap();
        assert_eq!(rep.dim, 2);
        let tr = rep.traces(&w);
        // classes: ((1,1);()), ((1);(1)), ((2);()), (();(1,1)), (();(2))
        assert_eq!(tr[0], br(2));
        assert!(tr.contains(&br(-2)));
    }

    #[test]
    fn bc_dimension_formula() {
        // dim chi^{(a,b)} = binom(n,|a|) f^a f^b
        let w = WeylGroup::new(LieType::B, 3).unwrap();
        for pair in crate::partitions::bipartitions_of(3) {
            let rep = ordinary_matrices(&w, &IrrLabel::BC(pair.clone())).unwrap();
            let fa = SpechtModule::new(&pair.alpha).dim();
            let fb = SpechtModule::new(&pair.beta).dim();
            let binom = [1usize, 3, 3, 1][pair.alpha.size() as usize];
            assert_eq!(rep.dim, binom * fa * fb, "{pair}");
        }
    }

    #[test]
    fn g2_reps_valid() {
        let w = WeylGroup::new(LieType::G2, 2).unwrap();
        for g in crate::labels::G2_IRRS {
            let rep = ordinary_matrices(&w, &IrrLabel::G2(g)).unwrap();
            rep.validate_relations(&w).unwrap();
        }
    }

    #[test]
    fn d3_split_rejected_nondegenerate() {
        // D_3 has no degenerate pairs; splitting (2,1) with itself needs n=6.
        let w = WeylGroup::new(LieType::D, 3).unwrap();
        assert!(ordinary_matrices(&w, &IrrLabel::DSplit(part(&[2, 1]), true)).is_err());
    }

    #[test]
    fn d4_split_modules() {
        let w = WeylGroup::new(LieType::D, 4).unwrap();
        let (p, m) = d_split_modules(&w, &part(&[2])).unwrap();
        assert_eq!(p.dim + m.dim, 6);
        assert_eq!(p.dim, 3);
        p.validate_relations(&w).unwrap();
        m.validate_relations(&w).unwrap();
        // The two summands have different characters.
        assert_ne!(p.traces(&w), m.traces(&w));
    }

    #[test]
    fn specht_gram_integral_symmetric() {
        let sp = SpechtModule::new(&part(&[2, 1]));
        let g = sp.gram();
        assert_eq!(g, g.transpose());
        assert!(g.is_integral());
    }
}
