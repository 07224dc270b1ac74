//! Small-coweight records for the classical types: the closed-form rows of
//! the zero-weight-space table, the type-A shifted-partition formula, the
//! one-or-two-summand dichotomy, and the recorded exceptional-type data.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::labels::ModSimpleLabel;
use crate::partitions::{Bipartition, Partition};
use crate::roots::{Coweight, LieType, RootSystem};
use crate::springer::OrbitLabel;

/// One record: a small dominant coweight with its zero-weight-space labels.
#[derive(Debug, Clone, Serialize)]
pub struct SmallRepRecord {
    pub lie_type: LieType,
    pub rank: usize,
    pub lambda: Coweight,
    /// 1 when the covering map is an isomorphism onto one orbit, 2 for the
    /// two-to-one covering rows.
    pub dichotomy_case: u8,
    pub orbit: Option<OrbitLabel>,
    pub labels_prefilter: Vec<ModSimpleLabel>,
    pub labels: Vec<ModSimpleLabel>,
    pub notes: Vec<String>,
    pub citations: Vec<String>,
}

fn one_part(k: u32) -> Partition {
    if k == 0 {
        Partition::empty()
    } else {
        Partition::new(vec![k])
    }
}

fn bc_label(ell: u64, alpha: Partition, beta: Partition) -> ModSimpleLabel {
    ModSimpleLabel::BC {
        ell,
        pair: Bipartition::new(alpha, beta),
    }
}

fn d_label(ell: u64, alpha: Partition, beta: Partition) -> ModSimpleLabel {
    if alpha == beta {
        // Callers use the split constructor directly for the decorated row.
        ModSimpleLabel::DPair { ell, alpha, beta }
    } else if (beta.size(), &beta.0) > (alpha.size(), &alpha.0) {
        ModSimpleLabel::DPair { ell, alpha: beta, beta: alpha }
    } else {
        ModSimpleLabel::DPair { ell, alpha, beta }
    }
}

fn label_survives(label: &ModSimpleLabel, ell: u64) -> bool {
    match label {
        ModSimpleLabel::Sym { mu, .. } => mu.is_regular(ell),
        ModSimpleLabel::BC { pair, .. } => {
            pair.alpha.is_regular(ell) && pair.beta.is_regular(ell)
        }
        ModSimpleLabel::DPair { alpha, beta, .. } => {
            alpha.is_regular(ell) && beta.is_regular(ell)
        }
        ModSimpleLabel::DSplit { alpha, .. } => alpha.is_regular(ell),
        ModSimpleLabel::Opaque { .. } => true,
    }
}

const TABLE_CITE: &str = "classical-groups zero-weight table";
const BN_MISPRINT_NOTE: &str = "unit-vector row family recomputed from the smallness \
enumeration; a printed variant of the exponent (0^{2n-j}) is dimensionally inconsistent \
at rank n and is rejected in favor of 0^{n-2j}";
const B3_CAVEAT_NOTE: &str = "at ell = 3 and rank 3 the second summand label with \
component (1,1,1) names no simple module and is interpreted as zero";

/// The closed-form rows for one classical type and rank, instantiated at
/// the odd prime ell (or 0 for characteristic zero), then filtered by
/// componentwise regularity.
pub fn table1_rows(lie_type: LieType, rank: usize, ell: u64) -> Result<Vec<SmallRepRecord>> {
    if ell == 2 {
        return Err(Error::Unsupported(
            "the closed-form table assumes odd characteristic".into(),
        ));
    }
    if ell != 0 && !crate::linalg::field::is_prime(ell) {
        return Err(Error::Malformed(format!("{ell} is not prime")));
    }
    let n = rank;
    let mut rows: Vec<SmallRepRecord> = Vec::new();
    let push = |lambda: Coweight,
                    case: u8,
                    labels: Vec<ModSimpleLabel>,
                    extra_notes: Vec<String>,
                    rows: &mut Vec<SmallRepRecord>| {
        let filtered: Vec<ModSimpleLabel> = if ell == 0 {
            labels.clone()
        } else {
            labels.iter().filter(|l| label_survives(l, ell)).cloned().collect()
        };
        let mut notes = extra_notes;
        for l in &labels {
            if ell != 0 && !label_survives(l, ell) {
                if lie_type == LieType::B && n == 3 && ell == 3 {
                    notes.push(B3_CAVEAT_NOTE.to_string());
                } else {
                    notes.push(format!("label {l} has an irregular component at ell = {ell}"));
                }
            }
        }
        rows.push(SmallRepRecord {
            lie_type,
            rank: n,
            lambda,
            dichotomy_case: case,
            orbit: None,
            labels_prefilter: labels,
            labels: filtered,
            notes,
            citations: vec![TABLE_CITE.to_string()],
        });
    };
    match lie_type {
        LieType::B => {
            if n < 2 {
                return Err(Error::Unsupported("rank below two".into()));
            }
            // two-summand family: lambda = (2 1^{2j} 0^{n-2j-1})
            let mut j = 1;
            while 2 * j + 1 <= n {
                let mut lam = vec![2i64];
                lam.extend(vec![1i64; 2 * j]);
                lam.extend(vec![0i64; n - 2 * j - 1]);
                let a1 = Partition::new(vec![(n - j - 1) as u32, j as u32]);
                let a2 = Partition::new(vec![(n - j - 1) as u32, j as u32, 1]);
                push(
                    lam,
                    2,
                    vec![
                        bc_label(ell, a1, one_part(1)),
                        bc_label(ell, a2, Partition::empty()),
                    ],
                    vec![],
                    &mut rows,
                );
                j += 1;
            }
            // lambda = (2 0^{n-1})
            let mut lam = vec![2i64];
            lam.extend(vec![0i64; n - 1]);
            push(
                lam,
                1,
                vec![bc_label(ell, one_part((n - 1) as u32), one_part(1))],
                vec![],
                &mut rows,
            );
            // unit-vector family: lambda = (1^{2j} 0^{n-2j})
            for j in 0..=(n / 2) {
                let mut lam = vec![1i64; 2 * j];
                lam.extend(vec![0i64; n - 2 * j]);
                let alpha = Partition::new(vec![(n - j) as u32, j as u32]);
                push(
                    lam,
                    1,
                    vec![bc_label(ell, alpha, Partition::empty())],
                    vec![BN_MISPRINT_NOTE.to_string()],
                    &mut rows,
                );
            }
        }
        LieType::C => {
            if n < 2 {
                return Err(Error::Unsupported("rank below two".into()));
            }
            for j in 0..=n {
                let mut lam = vec![1i64; j];
                lam.extend(vec![0i64; n - j]);
                let label = if j % 2 == 0 {
                    bc_label(ell, one_part((n - j / 2) as u32), one_part((j / 2) as u32))
                } else {
                    bc_label(
                        ell,
                        one_part(((j - 1) / 2) as u32),
                        one_part((n - (j - 1) / 2) as u32),
                    )
                };
                push(lam, 1, vec![label], vec![], &mut rows);
            }
        }
        LieType::D => {
            if n < 3 {
                return Err(Error::Unsupported("rank below three".into()));
            }
            if n % 2 == 1 {
                // lambda = (2 1^{n-2} (+-1))
                for sign in [1i64, -1] {
                    let mut lam = vec![2i64];
                    lam.extend(vec![1i64; n - 2]);
                    lam.push(sign);
                    let h = ((n - 1) / 2) as u32;
                    push(
                        lam,
                        1,
                        vec![d_label(ell, Partition::new(vec![h, 1]), one_part(h))],
                        vec![],
                        &mut rows,
                    );
                }
            }
            // two-summand family: 1 <= j < (n-1)/2
            let mut j = 1;
            while 2 * j + 1 < n {
                let mut lam = vec![2i64];
                lam.extend(vec![1i64; 2 * j]);
                lam.extend(vec![0i64; n - 2 * j - 1]);
                push(
                    lam,
                    2,
                    vec![
                        d_label(ell, Partition::new(vec![(n - j - 1) as u32, 1]), one_part(j as u32)),
                        d_label(
                            ell,
                            one_part((n - j - 1) as u32),
                            Partition::new(vec![j as u32, 1]),
                        ),
                    ],
                    vec![],
                    &mut rows,
                );
                j += 1;
            }
            // lambda = (2 0^{n-1})
            let mut lam = vec![2i64];
            lam.extend(vec![0i64; n - 1]);
            push(
                lam,
                1,
                vec![d_label(
                    ell,
                    Partition::new(vec![(n - 1) as u32, 1]),
                    Partition::empty(),
                )],
                vec![],
                &mut rows,
            );
            if n % 2 == 0 {
                // lambda = (1^{n-1} (+-1)); the +- attachment is internal
                for (sign, plus) in [(1i64, true), (-1i64, false)] {
                    let mut lam = vec![1i64; n - 1];
                    lam.push(sign);
                    push(
                        lam,
                        1,
                        vec![ModSimpleLabel::DSplit {
                            ell,
                            alpha: one_part((n / 2) as u32),
                            plus,
                        }],
                        vec!["summand decoration is convention-internal".to_string()],
                        &mut rows,
                    );
                }
            }
            // unit-vector family: 0 <= j < n/2
            for j in 0..n.div_ceil(2) {
                if 2 * j >= n {
                    break;
                }
                let mut lam = vec![1i64; 2 * j];
                lam.extend(vec![0i64; n - 2 * j]);
                push(
                    lam,
                    1,
                    vec![d_label(ell, one_part((n - j) as u32), one_part(j as u32))],
                    vec![],
                    &mut rows,
                );
            }
        }
        LieType::A | LieType::G2 => {
            return Err(Error::Unsupported(
                "closed-form rows exist for types B, C and D".into(),
            ))
        }
    }
    rows.sort_by(|a, b| a.lambda.cmp(&b.lambda));
    // Cross-check the lambda column against the smallness enumeration.
    let rs = RootSystem::new(lie_type, rank)?;
    let mut expected = rs.enumerate_small();
    expected.sort();
    let mut got: Vec<Coweight> = rows.iter().map(|r| r.lambda.clone()).collect();
    got.sort();
    if expected != got {
        return Err(Error::Validation(format!(
            "table lambda column {got:?} differs from the smallness enumeration {expected:?}"
        )));
    }
    Ok(rows)
}

/// The zero weight space in type A: shift the small coweight to a partition
/// and transpose; defined exactly on the shifted-partition domain.
pub fn zero_weight_type_a(lambda: &[i64], ell: u64) -> Result<Option<ModSimpleLabel>> {
    let n = lambda.len();
    if n == 0 {
        return Err(Error::Malformed("empty coweight".into()));
    }
    let sum: i64 = lambda.iter().sum();
    let dominant = lambda.windows(2).all(|w| w[0] >= w[1]);
    if sum != 0 || !dominant || lambda[n - 1] < -1 {
        return Err(Error::Malformed(format!(
            "coweight {lambda:?} is outside the shifted-partition domain (dominant, zero sum, minimum entry >= -1)"
        )));
    }
    let hat = Partition::new(lambda.iter().map(|&x| (x + 1) as u32).collect());
    let transposed = hat.transpose();
    if transposed.is_regular(ell) {
        Ok(Some(ModSimpleLabel::Sym { ell, mu: transposed }))
    } else {
        Ok(None)
    }
}

/// The shifted partition of a small type-A coweight, and its orbit label.
pub fn type_a_orbit(lambda: &[i64]) -> Result<OrbitLabel> {
    let hat = Partition::new(lambda.iter().map(|&x| (x + 1) as u32).collect());
    Ok(OrbitLabel::A(hat))
}

/// Whether a type-A coweight is restricted at ell: all simple-root pairings
/// at most ell - 1.
pub fn is_restricted_type_a(lambda: &[i64], ell: u64) -> bool {
    lambda
        .windows(2)
        .all(|w| (w[0] - w[1]) as u64 <= ell - 1)
}

/// A recorded exceptional-type data point; values are served verbatim, no
/// computation behind them.
#[derive(Debug, Clone, Serialize)]
pub struct ExceptionalNote {
    pub group: String,
    pub lambda: String,
    pub dichotomy_case: u8,
    pub orbit: String,
    pub statement: String,
    pub values: Vec<(String, String)>,
    pub citation: String,
}

pub fn exceptional_notes() -> Vec<ExceptionalNote> {
    vec![
        ExceptionalNote {
            group: "G2".into(),
            lambda: "higher fundamental coweight".into(),
            dichotomy_case: 2,
            orbit: "subregular".into(),
            statement: "the nontrivial-local-system summand vanishes; the zero weight \
space is the single simple attached to the subregular orbit"
                .into(),
            values: vec![
                ("dim at ell = 3".into(), "1".into()),
                ("dim at ell > 3".into(), "2".into()),
            ],
            citation: "G2 subregular zero-weight note".into(),
        },
        ExceptionalNote {
            group: "E6".into(),
            lambda: "3 * first (or sixth) fundamental coweight".into(),
            dichotomy_case: 1,
            orbit: "2A2".into(),
            statement: "the attached simple vanishes at ell = 3, where the highest \
weight module is a Frobenius twist of a minuscule representation"
                .into(),
            values: vec![("dim at ell = 3".into(), "0".into())],
            citation: "E6 Frobenius-twist note".into(),
        },
        ExceptionalNote {
            group: "E7".into(),
            lambda: "third fundamental coweight".into(),
            dichotomy_case: 2,
            orbit: "unrecorded".into(),
            statement: "at ell = 2 the zero weight space has four distinct simple \
constituents, three with multiplicity two and one with multiplicity one"
                .into(),
            values: vec![("constituent multiplicities at ell = 2".into(), "2,2,2,1".into())],
            citation: "E7 small-rep note (ell=2)".into(),
        },
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c3_rows() {
        let rows = table1_rows(LieType::C, 3, 5).unwrap();
        assert_eq!(rows.len(), 4);
        let r110 = rows.iter().find(|r| r.lambda == vec![1, 1, 0]).unwrap();
        assert_eq!(r110.labels[0].to_string(), "D^((2),(1))");
        assert_eq!(r110.dichotomy_case, 1);
        let r100 = rows.iter().find(|r| r.lambda == vec![1, 0, 0]).unwrap();
        assert_eq!(r100.labels[0].to_string(), "D^((),(3))");
    }

    #[test]
    fn b3_caveat() {
        let rows = table1_rows(LieType::B, 3, 3).unwrap();
        let r = rows.iter().find(|r| r.lambda == vec![2, 1, 1]).unwrap();
        assert_eq!(r.dichotomy_case, 2);
        assert_eq!(r.labels_prefilter.len(), 2);
        assert_eq!(r.labels.len(), 1);
        assert_eq!(r.labels[0].to_string(), "D^((1,1),(1))");
        assert!(r.notes.iter().any(|n| n.contains("interpreted as zero")));
        // at ell = 5 nothing is filtered
        let rows5 = table1_rows(LieType::B, 3, 5).unwrap();
        let r5 = rows5.iter().find(|r| r.lambda == vec![2, 1, 1]).unwrap();
        assert_eq!(r5.labels.len(), 2);
    }

    #[test]
    fn d4_rows() {
        let rows = table1_rows(LieType::D, 4, 7).unwrap();
        assert_eq!(rows.len(), 6);
        let r2 = rows.iter().find(|r| r.lambda == vec![2, 0, 0, 0]).unwrap();
        assert_eq!(r2.labels[0].to_string(), "E^[(3,1),()]");
        let split: Vec<_> = rows
            .iter()
            .filter(|r| matches!(r.labels[0], ModSimpleLabel::DSplit { .. }))
            .collect();
        assert_eq!(split.len(), 2);
        let case2: Vec<_> = rows.iter().filter(|r| r.dichotomy_case == 2).collect();
        assert_eq!(case2.len(), 1);
        assert_eq!(case2[0].lambda, vec![2, 1, 1, 0]);
        assert_eq!(case2[0].labels_prefilter.len(), 2);
    }

    #[test]
    fn ell_two_rejected() {
        assert!(table1_rows(LieType::B, 3, 2).is_err());
    }

    #[test]
    fn zero_weight_type_a_examples() {
        let l = zero_weight_type_a(&[1, 0, -1], 3).unwrap().unwrap();
        assert_eq!(l.to_string(), "D^(2,1)");
        assert_eq!(zero_weight_type_a(&[1, -1], 2).unwrap(), None);
        let t = zero_weight_type_a(&[0, 0, 0], 5).unwrap().unwrap();
        assert_eq!(t.to_string(), "D^(3)");
        // outside the shifted-partition domain
        assert!(zero_weight_type_a(&[2, 0, -2], 3).is_err());
    }

    #[test]
    fn restricted_equals_regular_transpose() {
        // on the shifted-partition domain the two conditions agree
        for n in 2..=5u32 {
            for hat in crate::partitions::partitions_of(n) {
                let mut lam: Vec<i64> = (0..n as usize)
                    .map(|i| hat.part(i) as i64 - 1)
                    .collect();
                lam.sort_unstable_by(|a, b| b.cmp(a));
                for ell in [2u64, 3, 5, 7] {
                    let restricted = is_restricted_type_a(&lam, ell);
                    let regular = hat.transpose().is_regular(ell);
                    assert_eq!(restricted, regular, "{lam:?} at {ell}");
                }
            }
        }
    }

    #[test]
    fn notes_served() {
        let notes = exceptional_notes();
        assert_eq!(notes.len(), 3);
        assert_eq!(notes[0].values[0].1, "1");
        assert_eq!(notes[0].values[1].1, "2");
        assert_eq!(notes[1].values[0].1, "0");
        assert!(notes[2].values[0].1.contains("2,2,2,1"));
    }
}
