//! Finite Weyl groups as explicit element sets: signed permutations for the
//! classical types, 2x2 integer matrices for G2. Conjugacy classes carry
//! cycle-type labels; lengths come from breadth-first search over the
//! generators, and the sign character is validated against them.

use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::roots::{LieType, RootSystem};

/// Default ceiling on |W|; rank 4 classical groups and G2 fit under it.
pub const DEFAULT_WEYL_BOUND: u64 = 400;

/// Identifies which abstract group a table or module belongs to. Types B
/// and C share their Weyl group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum GroupId {
    /// Symmetric group S_m (the Weyl group of A_{m-1}).
    Sym(usize),
    /// Hyperoctahedral group of rank n (types B_n and C_n).
    BC(usize),
    /// Even-signed permutations of rank n.
    D(usize),
    G2,
}

impl std::fmt::Display for GroupId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupId::Sym(m) => write!(f, "S{m}"),
            GroupId::BC(n) => write!(f, "W(BC{n})"),
            GroupId::D(n) => write!(f, "W(D{n})"),
            GroupId::G2 => write!(f, "W(G2)"),
        }
    }
}

impl GroupId {
    pub fn from_lie(lie_type: LieType, rank: usize) -> GroupId {
        match lie_type {
            LieType::A => GroupId::Sym(rank + 1),
            LieType::B | LieType::C => GroupId::BC(rank),
            LieType::D => GroupId::D(rank),
            LieType::G2 => GroupId::G2,
        }
    }
}

/// A Weyl group element: a signed permutation or a G2 matrix.
///
/// `perm[i] = j`, `sign[i]` means basis vector i maps to (+-) basis vector j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WeylElem {
    Signed { perm: Vec<u8>, neg: Vec<bool> },
    Mat2([[i64; 2]; 2]),
}

impl WeylElem {
    pub fn identity_signed(n: usize) -> WeylElem {
        WeylElem::Signed {
            perm: (0..n as u8).collect(),
            neg: vec![false; n],
        }
    }

    pub fn compose(&self, other: &WeylElem) -> WeylElem {
        match (self, other) {
            (
                WeylElem::Signed { perm: p1, neg: n1 },
                WeylElem::Signed { perm: p2, neg: n2 },
            ) => {
                // (self * other)(v) = self(other(v))
                let n = p1.len();
                let mut perm = vec![0u8; n];
                let mut neg = vec![false; n];
                for i in 0..n {
                    let j = p2[i] as usize;
                    perm[i] = p1[j];
                    neg[i] = n2[i] ^ n1[j];
                }
                WeylElem::Signed { perm, neg }
            }
            (WeylElem::Mat2(a), WeylElem::Mat2(b)) => {
                let mut c = [[0i64; 2]; 2];
                for i in 0..2 {
                    for j in 0..2 {
                        c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
                    }
                }
                WeylElem::Mat2(c)
            }
            _ => panic!("composing elements of different groups"),
        }
    }

    pub fn inverse(&self) -> WeylElem {
        match self {
            WeylElem::Signed { perm, neg } => {
                let n = perm.len();
                let mut iperm = vec![0u8; n];
                let mut ineg = vec![false; n];
                for i in 0..n {
                    let j = perm[i] as usize;
                    iperm[j] = i as u8;
                    ineg[j] = neg[i];
                }
                WeylElem::Signed { perm: iperm, neg: ineg }
            }
            WeylElem::Mat2(m) => {
                let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
                assert!(det == 1 || det == -1);
                let adj = [[m[1][1] * det, -m[0][1] * det], [-m[1][0] * det, m[0][0] * det]];
                WeylElem::Mat2(adj)
            }
        }
    }

    /// Action on an integer coordinate vector.
    pub fn apply(&self, v: &[i64]) -> Vec<i64> {
        match self {
            WeylElem::Signed { perm, neg } => {
                let mut out = vec![0i64; v.len()];
                for i in 0..v.len() {
                    let s = if neg[i] { -1 } else { 1 };
                    out[perm[i] as usize] = s * v[i];
                }
                out
            }
            WeylElem::Mat2(m) => {
                vec![
                    m[0][0] * v[0] + m[0][1] * v[1],
                    m[1][0] * v[0] + m[1][1] * v[1],
                ]
            }
        }
    }

    /// Underlying permutation, signs dropped.
    pub fn underlying_perm(&self) -> Vec<usize> {
        match self {
            WeylElem::Signed { perm, .. } => perm.iter().map(|&x| x as usize).collect(),
            WeylElem::Mat2(_) => panic!("no underlying permutation for G2 elements"),
        }
    }

    pub fn negative_count(&self) -> usize {
        match self {
            WeylElem::Signed { neg, .. } => neg.iter().filter(|&&b| b).count(),
            WeylElem::Mat2(_) => panic!("no signs for G2 elements"),
        }
    }

    /// Sign character value from the explicit form.
    pub fn sign_character(&self) -> i64 {
        match self {
            WeylElem::Signed { perm, neg } => {
                perm_sign(&perm.iter().map(|&x| x as usize).collect::<Vec<_>>())
                    * if neg.iter().filter(|&&b| b).count() % 2 == 0 {
                        1
                    } else {
                        -1
                    }
            }
            WeylElem::Mat2(m) => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        }
    }
}

pub fn perm_sign(p: &[usize]) -> i64 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1i64;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            i = p[i];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

/// Conjugacy class label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum ClassLabel {
    /// Cycle type of a permutation.
    Cycles(Partition),
    /// Positive and negative signed-cycle types.
    SignedCycles(Partition, Partition),
    /// A split class of D_n (all cycles positive and even); the sign is a
    /// convention internal to this library.
    SplitCycles(Partition, bool),
    /// Fixed names for the six G2 classes.
    G2(String),
}

impl std::fmt::Display for ClassLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ClassLabel::Cycles(p) => write!(f, "{p}"),
            ClassLabel::SignedCycles(p, n) => write!(f, "({p};{n})"),
            ClassLabel::SplitCycles(p, s) => {
                write!(f, "({p};+)[{}]", if *s { "+" } else { "-" })
            }
            ClassLabel::G2(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjClass {
    pub label: ClassLabel,
    pub representative: WeylElem,
    pub size: usize,
    /// Indices into `WeylGroup::elements`.
    pub members: Vec<usize>,
}

#[derive(Debug, Clone)]
pub struct WeylGroup {
    pub group_id: GroupId,
    pub lie_type: LieType,
    pub rank: usize,
    pub generators: Vec<WeylElem>,
    pub elements: Vec<WeylElem>,
    pub classes: Vec<ConjClass>,
    pub lengths: Vec<usize>,
    index: HashMap<WeylElem, usize>,
    /// BFS tree: for each non-identity element, (parent index, generator).
    parents: Vec<Option<(usize, usize)>>,
}

impl WeylGroup {
    pub fn new(lie_type: LieType, rank: usize) -> Result<WeylGroup> {
        Self::with_bound(lie_type, rank, DEFAULT_WEYL_BOUND)
    }

    pub fn with_bound(lie_type: LieType, rank: usize, bound: u64) -> Result<WeylGroup> {
        let rs = RootSystem::new(lie_type, rank)?;
        if rs.weyl_order > bound {
            return Err(Error::BoundExceeded(format!(
                "|W| = {} exceeds bound {bound}",
                rs.weyl_order
            )));
        }
        let generators = Self::simple_generators(lie_type, rank);
        let (elements, lengths, index, parents) = Self::enumerate(&generators, lie_type, rank);
        if elements.len() as u64 != rs.weyl_order {
            return Err(Error::Validation(format!(
                "enumerated {} elements, expected {}",
                elements.len(),
                rs.weyl_order
            )));
        }
        let classes = Self::conjugacy_classes(lie_type, rank, &elements, &index);
        let group = WeylGroup {
            group_id: GroupId::from_lie(lie_type, rank),
            lie_type,
            rank,
            generators,
            elements,
            classes,
            lengths,
            index,
            parents,
        };
        group.validate()?;
        Ok(group)
    }

    fn simple_generators(lie_type: LieType, rank: usize) -> Vec<WeylElem> {
        match lie_type {
            LieType::A => {
                let n = rank + 1;
                (0..rank)
                    .map(|i| {
                        let mut perm: Vec<u8> = (0..n as u8).collect();
                        perm.swap(i, i + 1);
                        WeylElem::Signed { perm, neg: vec![false; n] }
                    })
                    .collect()
            }
            LieType::B | LieType::C => {
                let n = rank;
                let mut gens: Vec<WeylElem> = (0..n - 1)
                    .map(|i| {
                        let mut perm: Vec<u8> = (0..n as u8).collect();
                        perm.swap(i, i + 1);
                        WeylElem::Signed { perm, neg: vec![false; n] }
                    })
                    .collect();
                let mut neg = vec![false; n];
                neg[n - 1] = true;
                gens.push(WeylElem::Signed { perm: (0..n as u8).collect(), neg });
                gens
            }
            LieType::D => {
                let n = rank;
                let mut gens: Vec<WeylElem> = (0..n - 1)
                    .map(|i| {
                        let mut perm: Vec<u8> = (0..n as u8).collect();
                        perm.swap(i, i + 1);
                        WeylElem::Signed { perm, neg: vec![false; n] }
                    })
                    .collect();
                // reflection in e_{n-1} + e_n: swap last two with both signs
                let mut perm: Vec<u8> = (0..n as u8).collect();
                perm.swap(n - 2, n - 1);
                let mut neg = vec![false; n];
                neg[n - 2] = true;
                neg[n - 1] = true;
                gens.push(WeylElem::Signed { perm, neg });
                gens
            }
            LieType::G2 => {
                // Reflections in the two simple roots on coroot coordinates.
                vec![
                    WeylElem::Mat2([[-1, 1], [0, 1]]),
                    WeylElem::Mat2([[1, 0], [3, -1]]),
                ]
            }
        }
    }

    #[allow(clippy::type_complexity)]
    fn enumerate(
        generators: &[WeylElem],
        lie_type: LieType,
        rank: usize,
    ) -> (
        Vec<WeylElem>,
        Vec<usize>,
        HashMap<WeylElem, usize>,
        Vec<Option<(usize, usize)>>,
    ) {
        let id = match lie_type {
            LieType::A => WeylElem::identity_signed(rank + 1),
            LieType::B | LieType::C | LieType::D => WeylElem::identity_signed(rank),
            LieType::G2 => WeylElem::Mat2([[1, 0], [0, 1]]),
        };
        let mut elements = vec![id.clone()];
        let mut lengths = vec![0usize];
        let mut parents: Vec<Option<(usize, usize)>> = vec![None];
        let mut index = HashMap::new();
        index.insert(id.clone(), 0usize);
        let mut queue = VecDeque::new();
        queue.push_back(0usize);
        while let Some(i) = queue.pop_front() {
            let w = elements[i].clone();
            let lw = lengths[i];
            for (gi, g) in generators.iter().enumerate() {
                let next = w.compose(g);
                if !index.contains_key(&next) {
                    let idx = elements.len();
                    elements.push(next.clone());
                    lengths.push(lw + 1);
                    parents.push(Some((i, gi)));
                    index.insert(next, idx);
                    queue.push_back(idx);
                }
            }
        }
        (elements, lengths, index, parents)
    }

    /// A reduced word (generator indices) for the element, from the BFS tree.
    /// The element equals the left-to-right product of the generators.
    pub fn word_of(&self, w: &WeylElem) -> Vec<usize> {
        let mut word = Vec::new();
        let mut i = self.index[w];
        while let Some((parent, gen)) = self.parents[i] {
            word.push(gen);
            i = parent;
        }
        word.reverse();
        word
    }

    /// Coxeter matrix entry m(s_i, s_j) for the generator pair.
    pub fn coxeter_m(&self, i: usize, j: usize) -> usize {
        if i == j {
            return 1;
        }
        let (a, b) = (i.min(j), i.max(j));
        let r = self.rank;
        match self.lie_type {
            LieType::A => {
                if b == a + 1 {
                    3
                } else {
                    2
                }
            }
            LieType::B | LieType::C => {
                if b == a + 1 {
                    if b == r - 1 {
                        4
                    } else {
                        3
                    }
                } else {
                    2
                }
            }
            LieType::D => {
                // generators 0..r-2 form a chain; generator r-1 attaches to r-3
                if b < r - 1 {
                    if b == a + 1 {
                        3
                    } else {
                        2
                    }
                } else if r >= 3 && a == r - 3 {
                    3
                } else {
                    2
                }
            }
            LieType::G2 => 6,
        }
    }

    fn signed_cycle_type(w: &WeylElem) -> (Partition, Partition) {
        let WeylElem::Signed { perm, neg } = w else {
            panic!("signed cycle type of a G2 element")
        };
        let n = perm.len();
        let mut seen = vec![false; n];
        let mut pos = Vec::new();
        let mut negs = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0u32;
            let mut parity = false;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                parity ^= neg[i];
                i = perm[i] as usize;
                len += 1;
            }
            if parity {
                negs.push(len);
            } else {
                pos.push(len);
            }
        }
        (Partition::new(pos), Partition::new(negs))
    }

    /// Canonical all-positive element with cycle type `pi`, used to anchor
    /// the "+" side of a split D_n class.
    fn canonical_positive(pi: &Partition, n: usize) -> WeylElem {
        let mut perm: Vec<u8> = (0..n as u8).collect();
        let mut start = 0usize;
        for &part in &pi.0 {
            let p = part as usize;
            for k in 0..p {
                perm[start + k] = (start + (k + 1) % p) as u8;
            }
            start += p;
        }
        WeylElem::Signed { perm, neg: vec![false; n] }
    }

    fn conjugacy_classes(
        lie_type: LieType,
        rank: usize,
        elements: &[WeylElem],
        index: &HashMap<WeylElem, usize>,
    ) -> Vec<ConjClass> {
        // Orbits under conjugation.
        let mut assigned = vec![usize::MAX; elements.len()];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for i in 0..elements.len() {
            if assigned[i] != usize::MAX {
                continue;
            }
            let orbit_id = orbits.len();
            let mut members = Vec::new();
            let mut queue = vec![i];
            assigned[i] = orbit_id;
            while let Some(j) = queue.pop() {
                members.push(j);
                for g in elements {
                    let conj = g.compose(&elements[j]).compose(&g.inverse());
                    let k = index[&conj];
                    if assigned[k] == usize::MAX {
                        assigned[k] = orbit_id;
                        queue.push(k);
                    }
                }
            }
            members.sort_unstable();
            orbits.push(members);
        }
        let mut classes: Vec<ConjClass> = orbits
            .into_iter()
            .map(|members| {
                let rep = elements[members[0]].clone();
                let label = Self::class_label(lie_type, rank, &rep, &members, elements, index);
                ConjClass {
                    label,
                    representative: rep,
                    size: members.len(),
                    members,
                }
            })
            .collect();
        classes.sort_by(|a, b| Self::class_order_key(&a.label).cmp(&Self::class_order_key(&b.label)));
        classes
    }

    fn class_label(
        lie_type: LieType,
        rank: usize,
        rep: &WeylElem,
        members: &[usize],
        elements: &[WeylElem],
        index: &HashMap<WeylElem, usize>,
    ) -> ClassLabel {
        match lie_type {
            LieType::A => ClassLabel::Cycles(Self::signed_cycle_type(rep).0),
            LieType::B | LieType::C => {
                let (p, n) = Self::signed_cycle_type(rep);
                ClassLabel::SignedCycles(p, n)
            }
            LieType::D => {
                let (p, n) = Self::signed_cycle_type(rep);
                let splits = n.is_empty() && p.0.iter().all(|&x| x % 2 == 0);
                if splits {
                    let anchor = Self::canonical_positive(&p, rank);
                    let anchor_idx = index[&anchor];
                    ClassLabel::SplitCycles(p, members.contains(&anchor_idx))
                } else {
                    ClassLabel::SignedCycles(p, n)
                }
            }
            LieType::G2 => {
                let order = {
                    let mut k = 1;
                    let mut w = rep.clone();
                    let id = WeylElem::Mat2([[1, 0], [0, 1]]);
                    while w != id {
                        w = w.compose(rep);
                        k += 1;
                    }
                    k
                };
                let det = rep.sign_character();
                let name = match (order, det, elements.len() / members.len().max(1)) {
                    (1, _, _) => "e",
                    (2, 1, _) => "w0",
                    (2, -1, _) => {
                        // Distinguish the two reflection classes by which
                        // simple reflection they contain.
                        let s1 = WeylElem::Mat2([[-1, 1], [0, 1]]);
                        if members.contains(&index[&s1]) {
                            "r_short"
                        } else {
                            "r_long"
                        }
                    }
                    (3, _, _) => "rot3",
                    (6, _, _) => "rot6",
                    _ => "unknown",
                };
                ClassLabel::G2(name.to_string())
            }
        }
    }

    /// Documented class order: ascending lexicographic on the cycle-type
    /// labels, negative part weighted last, which puts the identity class
    /// first in every type.
    fn class_order_key(label: &ClassLabel) -> (u32, Vec<u32>, Vec<u32>, u8, String) {
        match label {
            ClassLabel::Cycles(p) => (0, p.0.clone(), vec![], 0, String::new()),
            ClassLabel::SignedCycles(p, n) => {
                (n.size(), p.0.clone(), n.0.clone(), 0, String::new())
            }
            ClassLabel::SplitCycles(p, sign) => {
                (0, p.0.clone(), vec![], if *sign { 1 } else { 2 }, String::new())
            }
            ClassLabel::G2(name) => {
                let rank = match name.as_str() {
                    "e" => 0,
                    "r_short" => 1,
                    "r_long" => 2,
                    "rot6" => 3,
                    "rot3" => 4,
                    "w0" => 5,
                    _ => 6,
                };
                (rank, vec![], vec![], 0, name.clone())
            }
        }
    }

    fn validate(&self) -> Result<()> {
        let class_total: usize = self.classes.iter().map(|c| c.size).sum();
        if class_total != self.elements.len() {
            return Err(Error::Validation("classes do not partition the group".into()));
        }
        for (i, w) in self.elements.iter().enumerate() {
            let expected = if self.lengths[i] % 2 == 0 { 1 } else { -1 };
            if w.sign_character() != expected {
                return Err(Error::Validation(
                    "sign character disagrees with length parity".into(),
                ));
            }
        }
        // Identity class must come first for table conventions.
        if self.classes[0].representative != self.identity() {
            return Err(Error::Validation("identity class not first".into()));
        }
        Ok(())
    }

    pub fn identity(&self) -> WeylElem {
        self.elements[0].clone()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element_index(&self, w: &WeylElem) -> usize {
        self.index[w]
    }

    pub fn length(&self, w: &WeylElem) -> usize {
        self.lengths[self.index[w]]
    }

    /// Sign character on class representatives, in class order.
    pub fn sign_on_classes(&self) -> Vec<i64> {
        self.classes
            .iter()
            .map(|c| c.representative.sign_character())
            .collect()
    }

    pub fn class_of(&self, w: &WeylElem) -> usize {
        let i = self.index[w];
        self.classes
            .iter()
            .position(|c| c.members.binary_search(&i).is_ok())
            .expect("element in some class")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_classes() {
        let w = WeylGroup::new(LieType::A, 2).unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.classes.len(), 3);
        let labels: Vec<String> = w.classes.iter().map(|c| c.label.to_string()).collect();
        assert_eq!(labels, vec!["(1,1,1)", "(2,1)", "(3)"]);
        assert_eq!(w.sign_on_classes(), vec![1, -1, 1]);
    }

    #[test]
    fn b2_classes() {
        let w = WeylGroup::new(LieType::B, 2).unwrap();
        assert_eq!(w.order(), 8);
        assert_eq!(w.classes.len(), 5);
    }

    #[test]
    fn g2_classes() {
        let w = WeylGroup::new(LieType::G2, 2).unwrap();
        assert_eq!(w.order(), 12);
        assert_eq!(w.classes.len(), 6);
        assert_eq!(w.classes[0].label.to_string(), "e");
    }

    #[test]
    fn d4_classes_count() {
        let w = WeylGroup::new(LieType::D, 4).unwrap();
        assert_eq!(w.order(), 192);
        assert_eq!(w.classes.len(), 13);
        let split: Vec<_> = w
            .classes
            .iter()
            .filter(|c| matches!(c.label, ClassLabel::SplitCycles(..)))
            .collect();
        assert_eq!(split.len(), 4);
    }

    #[test]
    fn bound_respected() {
        assert!(WeylGroup::new(LieType::A, 5).is_err());
        assert!(WeylGroup::new(LieType::B, 5).is_err());
    }

    #[test]
    fn epsilon_is_homomorphism() {
        let w = WeylGroup::new(LieType::B, 2).unwrap();
        for a in &w.elements {
            for b in &w.elements {
                assert_eq!(
                    a.compose(b).sign_character(),
                    a.sign_character() * b.sign_character()
                );
            }
        }
    }

    #[test]
    fn generators_have_sign_minus_one() {
        for (t, r) in [
            (LieType::A, 3),
            (LieType::B, 3),
            (LieType::D, 3),
            (LieType::G2, 2),
        ] {
            let w = WeylGroup::new(t, r).unwrap();
            for g in &w.generators {
                assert_eq!(g.sign_character(), -1);
            }
        }
    }

    #[test]
    fn action_matches_root_system_reflections() {
        for (t, r) in [(LieType::B, 3), (LieType::D, 3), (LieType::G2, 2)] {
            let w = WeylGroup::new(t, r).unwrap();
            let rs = RootSystem::new(t, r).unwrap();
            let v: Vec<i64> = (0..rs.coord_dim as i64).map(|i| 2 * i - 1).collect();
            for (k, g) in w.generators.iter().enumerate() {
                assert_eq!(g.apply(&v), rs.reflect(&v, rs.simple[k]), "{t:?} gen {k}");
            }
        }
    }
}

#[cfg(test)]
mod word_tests {
    use super::*;

    #[test]
    fn words_reconstruct_elements() {
        for (t, r) in [(LieType::A, 3), (LieType::B, 2), (LieType::D, 3), (LieType::G2, 2)] {
            let w = WeylGroup::new(t, r).unwrap();
            for e in &w.elements {
                let word = w.word_of(e);
                let mut acc = w.identity();
                for gi in &word {
                    acc = acc.compose(&w.generators[*gi]);
                }
                assert_eq!(&acc, e);
                assert_eq!(word.len(), w.length(e));
            }
        }
    }

    #[test]
    fn coxeter_relations_hold() {
        for (t, r) in [(LieType::A, 2), (LieType::B, 3), (LieType::D, 4), (LieType::G2, 2)] {
            let w = WeylGroup::new(t, r).unwrap();
            let k = w.generators.len();
            for i in 0..k {
                for j in 0..k {
                    let m = w.coxeter_m(i, j);
                    let mut acc = w.identity();
                    for _ in 0..m {
                        acc = acc.compose(&w.generators[i]).compose(&w.generators[j]);
                    }
                    assert_eq!(acc, w.identity(), "{t:?} m({i},{j})");
                }
            }
        }
    }
}
