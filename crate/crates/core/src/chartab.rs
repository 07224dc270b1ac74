//! Ordinary character tables of the implemented Weyl groups, with the
//! class-function calculus and the sign twist on labels.
//!
//! Symmetric groups use the Murnaghan-Nakayama recursion; hyperoctahedral
//! groups its bipartition variant (each negative cycle twists the second
//! component by -1). Type D restricts from the hyperoctahedral table, with
//! degenerate pairs split through explicit module matrices. G2 is computed
//! by brute force over its twelve elements.

use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use crate::error::{Error, Result};
use crate::labels::{G2Irr, IrrLabel, G2_IRRS};
use crate::linalg::field::big_rational_from as br;
use crate::ordinary::{d_split_modules, ordinary_matrices};
use crate::partitions::{bipartitions_of, partitions_of, Bipartition, Partition};
use crate::roots::LieType;
use crate::weyl::{ClassLabel, GroupId, WeylGroup};

/// A rational-valued function on the conjugacy classes of one group.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassFunction {
    pub group: GroupId,
    pub values: Vec<BigRational>,
}

impl ClassFunction {
    pub fn pointwise_mul(&self, other: &ClassFunction) -> Result<ClassFunction> {
        if self.group != other.group {
            return Err(Error::Malformed("class functions on different groups".into()));
        }
        Ok(ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a * b)
                .collect(),
        })
    }

    pub fn add(&self, other: &ClassFunction) -> ClassFunction {
        assert_eq!(self.group, other.group);
        ClassFunction {
            group: self.group,
            values: self
                .values
                .iter()
                .zip(other.values.iter())
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn zero(group: GroupId, classes: usize) -> ClassFunction {
        ClassFunction {
            group,
            values: vec![BigRational::zero(); classes],
        }
    }
}

/// The square table of ordinary irreducible characters.
#[derive(Debug, Clone)]
pub struct CharacterTable {
    pub group: GroupId,
    pub labels: Vec<IrrLabel>,
    pub class_labels: Vec<ClassLabel>,
    pub class_sizes: Vec<usize>,
    pub rows: Vec<ClassFunction>,
    pub order: u64,
}

impl CharacterTable {
    pub fn row(&self, label: &IrrLabel) -> Result<&ClassFunction> {
        let canon = label.clone().canonical();
        self.labels
            .iter()
            .position(|l| *l == canon)
            .map(|i| &self.rows[i])
            .ok_or_else(|| Error::Malformed(format!("label {label} not in table")))
    }

    pub fn dimension(&self, label: &IrrLabel) -> Result<u64> {
        let r = self.row(label)?;
        let d = r.values[0].to_integer();
        Ok(u64::try_from(d).map_err(|_| Error::Validation("negative dimension".into()))?)
    }

    /// The sign character as a class function.
    pub fn sign_row(&self, w: &WeylGroup) -> ClassFunction {
        ClassFunction {
            group: self.group,
            values: w.sign_on_classes().iter().map(|&s| br(s)).collect(),
        }
    }

    /// The regular character: |W| on the identity class, 0 elsewhere.
    pub fn regular_character(&self) -> ClassFunction {
        let mut values = vec![BigRational::zero(); self.class_labels.len()];
        values[0] = br(self.order as i64);
        ClassFunction {
            group: self.group,
            values,
        }
    }

    /// Class-weighted inner product of class functions.
    pub fn inner_product(&self, f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
        if f.group != self.group || g.group != self.group {
            return Err(Error::Malformed("inner product across groups".into()));
        }
        let mut acc = BigRational::zero();
        for ((a, b), &size) in f.values.iter().zip(g.values.iter()).zip(self.class_sizes.iter()) {
            acc += a * b * br(size as i64);
        }
        Ok(acc / br(self.order as i64))
    }

    /// Decompose a character into irreducible labels with multiplicities.
    /// Rejects inputs that are not characters.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<(IrrLabel, u64)>> {
        let mut out = Vec::new();
        let mut reassembled = ClassFunction::zero(self.group, f.values.len());
        for (label, row) in self.labels.iter().zip(self.rows.iter()) {
            let m = self.inner_product(f, row)?;
            if m.is_zero() {
                continue;
            }
            if !m.is_integer() || m.is_negative() {
                return Err(Error::Malformed(format!(
                    "multiplicity {m} of {label} is not a nonnegative integer"
                )));
            }
            let mult = u64::try_from(m.to_integer()).unwrap();
            for _ in 0..mult {
                reassembled = reassembled.add(row);
            }
            out.push((label.clone(), mult));
        }
        if reassembled != *f {
            return Err(Error::Malformed(
                "input is not a character of this group".into(),
            ));
        }
        Ok(out)
    }

    fn validate(&self, w: &WeylGroup) -> Result<()> {
        let k = self.class_labels.len();
        if self.labels.len() != k {
            return Err(Error::Validation("table not square".into()));
        }
        // Row orthonormality.
        for (i, r) in self.rows.iter().enumerate() {
            for (j, s) in self.rows.iter().enumerate() {
                let ip = self.inner_product(r, s)?;
                let expect = if i == j { BigRational::one() } else { BigRational::zero() };
                if ip != expect {
                    return Err(Error::Validation(format!(
                        "rows {} and {} have inner product {ip}",
                        self.labels[i], self.labels[j]
                    )));
                }
            }
        }
        // Dimensions positive, sum of squares = |W|.
        let mut total = BigRational::zero();
        for r in &self.rows {
            let d = &r.values[0];
            if !d.is_integer() || !d.is_positive() {
                return Err(Error::Validation("bad dimension column".into()));
            }
            total += d * d;
        }
        if total != br(self.order as i64) {
            return Err(Error::Validation("sum of squared dimensions != |W|".into()));
        }
        // The sign character must be one of the rows.
        let eps = self.sign_row(w);
        if !self.rows.iter().any(|r| *r == eps) {
            return Err(Error::Validation("sign character missing".into()));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama recursions
// ---------------------------------------------------------------------------

/// Character of S_n: chi^lam on the class of cycle type rho.
pub fn mn_symmetric(lam: &Partition, rho: &Partition) -> i64 {
    fn rec(lam: &Partition, cycles: &[u32]) -> i64 {
        match cycles.split_first() {
            None => 1,
            Some((&k, rest)) => lam
                .rim_hook_removals(k)
                .into_iter()
                .map(|(sub, sign)| sign * rec(&sub, rest))
                .sum(),
        }
    }
    debug_assert_eq!(lam.size(), rho.size());
    rec(lam, &rho.0)
}

/// Character of the hyperoctahedral group: chi^{(alpha,beta)} on the class
/// with positive cycle type pi and negative cycle type nu. Removing a cycle
/// of length k strips a k-hook from either component; a negative cycle
/// counts beta-strips with an extra minus sign.
pub fn mn_hyperoctahedral(pair: &Bipartition, pi: &Partition, nu: &Partition) -> i64 {
    #[derive(Clone, Copy)]
    enum Cyc {
        Pos(u32),
        Neg(u32),
    }
    fn rec(alpha: &Partition, beta: &Partition, cycles: &[Cyc]) -> i64 {
        match cycles.split_first() {
            None => 1,
            Some((&c, rest)) => {
                let (k, beta_sign) = match c {
                    Cyc::Pos(k) => (k, 1),
                    Cyc::Neg(k) => (k, -1),
                };
                let mut total = 0;
                for (sub, sign) in alpha.rim_hook_removals(k) {
                    total += sign * rec(&sub, beta, rest);
                }
                for (sub, sign) in beta.rim_hook_removals(k) {
                    total += beta_sign * sign * rec(alpha, &sub, rest);
                }
                total
            }
        }
    }
    let mut cycles: Vec<Cyc> = Vec::new();
    for &k in &pi.0 {
        cycles.push(Cyc::Pos(k));
    }
    for &k in &nu.0 {
        cycles.push(Cyc::Neg(k));
    }
    rec(&pair.alpha, &pair.beta, &cycles)
}

// ---------------------------------------------------------------------------
// Table construction
// ---------------------------------------------------------------------------

fn build_table(w: &WeylGroup) -> Result<CharacterTable> {
    let class_labels: Vec<ClassLabel> = w.classes.iter().map(|c| c.label.clone()).collect();
    let class_sizes: Vec<usize> = w.classes.iter().map(|c| c.size).collect();
    let (labels, rows): (Vec<IrrLabel>, Vec<ClassFunction>) = match w.group_id {
        GroupId::Sym(m) => {
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for lam in partitions_of(m as u32) {
                let values = class_labels
                    .iter()
                    .map(|cl| {
                        let ClassLabel::Cycles(rho) = cl else { unreachable!() };
                        br(mn_symmetric(&lam, rho))
                    })
                    .collect();
                labels.push(IrrLabel::Sym(lam));
                rows.push(ClassFunction {
                    group: w.group_id,
                    values,
                });
            }
            (labels, rows)
        }
        GroupId::BC(n) => {
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for pair in bipartitions_of(n as u32) {
                let values = class_labels
                    .iter()
                    .map(|cl| {
                        let ClassLabel::SignedCycles(pi, nu) = cl else {
                            unreachable!()
                        };
                        br(mn_hyperoctahedral(&pair, pi, nu))
                    })
                    .collect();
                labels.push(IrrLabel::BC(pair));
                rows.push(ClassFunction {
                    group: w.group_id,
                    values,
                });
            }
            (labels, rows)
        }
        GroupId::D(n) => build_d_rows(w, n)?,
        GroupId::G2 => {
            let mut labels = Vec::new();
            let mut rows = Vec::new();
            for g in G2_IRRS {
                let rep = ordinary_matrices(w, &IrrLabel::G2(g))?;
                labels.push(IrrLabel::G2(g));
                rows.push(ClassFunction {
                    group: w.group_id,
                    values: rep.traces(w),
                });
            }
            (labels, rows)
        }
    };
    let table = CharacterTable {
        group: w.group_id,
        labels,
        class_labels,
        class_sizes,
        rows,
        order: w.order() as u64,
    };
    table.validate(w)?;
    Ok(table)
}

/// Rows of the D_n table: restrictions of hyperoctahedral characters for
/// unordered pairs, split characters from explicit modules for degenerate
/// pairs.
fn build_d_rows(w: &WeylGroup, n: usize) -> Result<(Vec<IrrLabel>, Vec<ClassFunction>)> {
    let mut labels = Vec::new();
    let mut rows = Vec::new();
    let mut seen: Vec<(Partition, Partition)> = Vec::new();
    for pair in bipartitions_of(n as u32) {
        if pair.alpha == pair.beta {
            continue;
        }
        let key = if (pair.alpha.size(), &pair.alpha.0) >= (pair.beta.size(), &pair.beta.0) {
            (pair.alpha.clone(), pair.beta.clone())
        } else {
            (pair.beta.clone(), pair.alpha.clone())
        };
        if seen.contains(&key) {
            continue;
        }
        seen.push(key.clone());
        // Value on a D_n class = hyperoctahedral value on the same signed
        // cycle type (split classes share their cycle type).
        let values = w
            .classes
            .iter()
            .map(|c| {
                let (pi, nu) = match &c.label {
                    ClassLabel::SignedCycles(pi, nu) => (pi.clone(), nu.clone()),
                    ClassLabel::SplitCycles(pi, _) => (pi.clone(), Partition::empty()),
                    _ => unreachable!(),
                };
                br(mn_hyperoctahedral(
                    &Bipartition::new(key.0.clone(), key.1.clone()),
                    &pi,
                    &nu,
                ))
            })
            .collect();
        labels.push(IrrLabel::DPair(key.0, key.1));
        rows.push(ClassFunction {
            group: w.group_id,
            values,
        });
    }
    if n % 2 == 0 {
        for alpha in partitions_of(n as u32 / 2) {
            let (plus, minus) = d_split_modules(w, &alpha)?;
            for rep in [plus, minus] {
                labels.push(rep.label.clone());
                rows.push(ClassFunction {
                    group: w.group_id,
                    values: rep.traces(w),
                });
            }
        }
    }
    Ok((labels, rows))
}

static TABLE_CACHE: OnceLock<Mutex<HashMap<GroupId, Arc<CharacterTable>>>> = OnceLock::new();

/// The character table of `w`, memoized per group.
pub fn character_table(w: &WeylGroup) -> Result<Arc<CharacterTable>> {
    let cache = TABLE_CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    {
        let guard = cache.lock().unwrap();
        if let Some(t) = guard.get(&w.group_id) {
            return Ok(Arc::clone(t));
        }
    }
    let table = Arc::new(build_table(w)?);
    let mut guard = cache.lock().unwrap();
    Ok(Arc::clone(guard.entry(w.group_id).or_insert(table)))
}

// ---------------------------------------------------------------------------
// Sign twist on labels
// ---------------------------------------------------------------------------

/// Label of the irreducible obtained by tensoring with the sign character.
/// Computed from closed forms, then checked pointwise against the table;
/// the check is the definition, the closed forms a shortcut.
pub fn tensor_sign_label(w: &WeylGroup, label: &IrrLabel) -> Result<IrrLabel> {
    let table = character_table(w)?;
    let candidate = match label.clone().canonical() {
        IrrLabel::Sym(lam) => IrrLabel::Sym(lam.transpose()),
        IrrLabel::BC(pair) => IrrLabel::BC(Bipartition::new(
            pair.beta.transpose(),
            pair.alpha.transpose(),
        )),
        IrrLabel::DPair(a, b) => IrrLabel::DPair(a.transpose(), b.transpose()).canonical(),
        IrrLabel::DSplit(a, _) => {
            // Transpose the component; which summand the twist hits is
            // decided by the character product below.
            IrrLabel::DSplit(a.transpose(), true)
        }
        IrrLabel::G2(g) => IrrLabel::G2(match g {
            G2Irr::Triv => G2Irr::Sgn,
            G2Irr::Sgn => G2Irr::Triv,
            G2Irr::SgnShort => G2Irr::SgnLong,
            G2Irr::SgnLong => G2Irr::SgnShort,
            G2Irr::Refl => G2Irr::Refl,
            G2Irr::ReflTwist => G2Irr::ReflTwist,
        }),
    };
    // Definition: the twisted character is the pointwise product with sign.
    let twisted = table.row(label)?.pointwise_mul(&table.sign_row(w))?;
    if *table.row(&candidate)? == twisted {
        return Ok(candidate);
    }
    // Closed form missed (the split +- case): find the matching row.
    for (l, r) in table.labels.iter().zip(table.rows.iter()) {
        if *r == twisted {
            return Ok(l.clone());
        }
    }
    Err(Error::Validation(format!(
        "sign twist of {label} matches no irreducible row"
    )))
}

/// G2 characters are needed in a fixed label order for exports and tests.
pub fn g2_labels() -> Vec<IrrLabel> {
    G2_IRRS.iter().map(|&g| IrrLabel::G2(g)).collect()
}

/// All ordinary labels of a group in table order.
pub fn irr_labels(w: &WeylGroup) -> Result<Vec<IrrLabel>> {
    Ok(character_table(w)?.labels.clone())
}

pub fn lie_type_of_group(g: GroupId) -> (LieType, usize) {
    match g {
        GroupId::Sym(m) => (LieType::A, m - 1),
        GroupId::BC(n) => (LieType::B, n),
        GroupId::D(n) => (LieType::D, n),
        GroupId::G2 => (LieType::G2, 2),
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
    fn s3_table() {
        let w = WeylGroup::new(LieType::A, 2).unwrap();
        let t = character_table(&w).unwrap();
        // trivial row is all ones
        let triv = t.row(&IrrLabel::Sym(part(&[3]))).unwrap();
        assert!(triv.values.iter().all(|v| *v == br(1)));
        // standard representation values on (1^3),(2,1),(3)
        let std = t.row(&IrrLabel::Sym(part(&[2, 1]))).unwrap();
        assert_eq!(std.values, vec![br(2), br(0), br(-1)]);
    }

    #[test]
    fn b2_table_dimensions() {
        let w = WeylGroup::new(LieType::B, 2).unwrap();
        let t = character_table(&w).unwrap();
        assert_eq!(t.labels.len(), 5);
        let mut dims: Vec<u64> = t
            .labels
            .iter()
            .map(|l| t.dimension(l).unwrap())
            .collect();
        dims.sort_unstable();
        assert_eq!(dims, vec![1, 1, 1, 1, 2]);
    }

    #[test]
    fn inner_products() {
        let w = WeylGroup::new(LieType::A, 2).unwrap();
        let t = character_table(&w).unwrap();
        let triv = t.row(&IrrLabel::Sym(part(&[3]))).unwrap().clone();
        let sgn = t.sign_row(&w);
        assert_eq!(t.inner_product(&triv, &sgn).unwrap(), br(0));
        let reg = t.regular_character();
        let std = t.row(&IrrLabel::Sym(part(&[2, 1]))).unwrap();
        assert_eq!(t.inner_product(&reg, std).unwrap(), br(2));
    }

    #[test]
    fn decompose_regular_s3() {
        let w = WeylGroup::new(LieType::A, 2).unwrap();
        let t = character_table(&w).unwrap();
        let reg = t.regular_character();
        let dec = t.decompose(&reg).unwrap();
        let lookup: HashMap<String, u64> =
            dec.iter().map(|(l, m)| (l.to_string(), *m)).collect();
        assert_eq!(lookup["S^(3)"], 1);
        assert_eq!(lookup["S^(2,1)"], 2);
        assert_eq!(lookup["S^(1,1,1)"], 1);
        // zero decomposes to nothing
        let zero = ClassFunction::zero(t.group, 3);
        assert!(t.decompose(&zero).unwrap().is_empty());
        // permutation character of S_3 on 3 points: values 3,1,0
        let perm = ClassFunction {
            group: t.group,
            values: vec![br(3), br(1), br(0)],
        };
        let dec = t.decompose(&perm).unwrap();
        assert_eq!(dec.len(), 2);
    }

    #[test]
    fn tensor_sign_examples() {
        let w = WeylGroup::new(LieType::A, 3).unwrap();
        let twist = tensor_sign_label(&w, &IrrLabel::Sym(part(&[4]))).unwrap();
        assert_eq!(twist, IrrLabel::Sym(part(&[1, 1, 1, 1])));

        let wb = WeylGroup::new(LieType::B, 2).unwrap();
        let onegone = IrrLabel::BC(Bipartition::new(part(&[1]), part(&[1])));
        assert_eq!(tensor_sign_label(&wb, &onegone).unwrap(), onegone);
        let two = IrrLabel::BC(Bipartition::new(part(&[2]), Partition::empty()));
        assert_eq!(
            tensor_sign_label(&wb, &two).unwrap(),
            IrrLabel::BC(Bipartition::new(Partition::empty(), part(&[1, 1])))
        );
    }

    #[test]
    fn tensor_sign_involution_everywhere() {
        for (t, r) in [
            (LieType::A, 3),
            (LieType::B, 3),
            (LieType::D, 4),
            (LieType::G2, 2),
        ] {
            let w = WeylGroup::new(t, r).unwrap();
            let table = character_table(&w).unwrap();
            for l in &table.labels {
                let tw = tensor_sign_label(&w, l).unwrap();
                let back = tensor_sign_label(&w, &tw).unwrap();
                assert_eq!(back, l.clone().canonical(), "{t:?} {l}");
            }
        }
    }

    #[test]
    fn module_traces_match_table_rows() {
        // The recursion and the explicit modules are independent routes.
        for (t, r) in [(LieType::A, 3), (LieType::B, 3)] {
            let w = WeylGroup::new(t, r).unwrap();
            let table = character_table(&w).unwrap();
            for l in &table.labels {
                let rep = ordinary_matrices(&w, l).unwrap();
                assert_eq!(rep.traces(&w), table.row(l).unwrap().values, "{t:?} {l}");
            }
        }
    }

    #[test]
    fn d3_and_d4_tables_validate() {
        for n in [3, 4] {
            let w = WeylGroup::new(LieType::D, n).unwrap();
            let t = character_table(&w).unwrap();
            assert_eq!(t.labels.len(), w.classes.len());
        }
    }

    #[test]
    fn g2_table() {
        let w = WeylGroup::new(LieType::G2, 2).unwrap();
        let t = character_table(&w).unwrap();
        assert_eq!(t.labels.len(), 6);
        let refl = t.row(&IrrLabel::G2(G2Irr::Refl)).unwrap();
        assert_eq!(refl.values[0], br(2));
    }
}
