//! Names for irreducible modules: ordinary labels for each Weyl group
//! family and modular labels for the prime-field simples.

use serde::{Deserialize, Serialize};
use std::fmt;

use crate::partitions::{Bipartition, Partition};
use crate::weyl::GroupId;

/// The six irreducible characters of W(G2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize, PartialOrd, Ord)]
pub enum G2Irr {
    Triv,
    Sgn,
    /// Linear character with value -1 on short-root reflections only.
    SgnShort,
    /// Linear character with value -1 on long-root reflections only.
    SgnLong,
    /// The reflection representation.
    Refl,
    /// Reflection representation twisted by `SgnShort`.
    ReflTwist,
}

impl fmt::Display for G2Irr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            G2Irr::Triv => "triv",
            G2Irr::Sgn => "sgn",
            G2Irr::SgnShort => "sgn_s",
            G2Irr::SgnLong => "sgn_l",
            G2Irr::Refl => "refl",
            G2Irr::ReflTwist => "refl'",
        };
        write!(f, "{s}")
    }
}

pub const G2_IRRS: [G2Irr; 6] = [
    G2Irr::Triv,
    G2Irr::Sgn,
    G2Irr::SgnShort,
    G2Irr::SgnLong,
    G2Irr::Refl,
    G2Irr::ReflTwist,
];

/// Label of an ordinary irreducible module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IrrLabel {
    /// S^lambda for the symmetric group.
    Sym(Partition),
    /// chi^{(alpha,beta)} for the hyperoctahedral group.
    BC(Bipartition),
    /// E^{[alpha,beta]} with alpha != beta; stored in canonical order.
    DPair(Partition, Partition),
    /// E^{[alpha,alpha]+-}; the sign convention is internal.
    DSplit(Partition, bool),
    G2(G2Irr),
}

impl IrrLabel {
    /// Canonical form (orders the unordered D pair).
    pub fn canonical(self) -> IrrLabel {
        match self {
            IrrLabel::DPair(a, b) => {
                if (b.size(), &b.0) > (a.size(), &a.0) {
                    IrrLabel::DPair(b, a)
                } else {
                    IrrLabel::DPair(a, b)
                }
            }
            other => other,
        }
    }

    pub fn group(&self, n_hint: usize) -> GroupId {
        match self {
            IrrLabel::Sym(p) => GroupId::Sym(p.size() as usize),
            IrrLabel::BC(b) => GroupId::BC(b.size() as usize),
            IrrLabel::DPair(a, b) => GroupId::D((a.size() + b.size()) as usize),
            IrrLabel::DSplit(a, _) => GroupId::D(2 * a.size() as usize),
            IrrLabel::G2(_) => {
                let _ = n_hint;
                GroupId::G2
            }
        }
    }
}

impl fmt::Display for IrrLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IrrLabel::Sym(p) => write!(f, "S^{p}"),
            IrrLabel::BC(b) => write!(f, "X^{b}"),
            IrrLabel::DPair(a, b) => write!(f, "E^[{a},{b}]"),
            IrrLabel::DSplit(a, s) => {
                write!(f, "E^[{a},{a}]{}", if *s { "+" } else { "-" })
            }
            IrrLabel::G2(g) => write!(f, "phi_{g}"),
        }
    }
}

/// Label of a modular simple module.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ModSimpleLabel {
    /// D^mu, mu an l-regular partition (symmetric groups).
    Sym { ell: u64, mu: Partition },
    /// D^{(alpha,beta)}, both components l-regular (types B/C, l odd).
    BC { ell: u64, pair: Bipartition },
    /// E-labels for type D under the same regularity.
    DPair { ell: u64, alpha: Partition, beta: Partition },
    DSplit { ell: u64, alpha: Partition, plus: bool },
    /// Fallback naming when no bipartition-style label applies.
    Opaque { ell: u64, group: GroupId, index: usize, dim: usize },
}

impl fmt::Display for ModSimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ModSimpleLabel::Sym { mu, .. } => write!(f, "D^{mu}"),
            ModSimpleLabel::BC { pair, .. } => write!(f, "D^{pair}"),
            ModSimpleLabel::DPair { alpha, beta, .. } => write!(f, "E^[{alpha},{beta}]"),
            ModSimpleLabel::DSplit { alpha, plus, .. } => {
                write!(f, "E^[{alpha},{alpha}]{}", if *plus { "+" } else { "-" })
            }
            ModSimpleLabel::Opaque { index, dim, .. } => {
                write!(f, "simple#{index} (dim {dim})")
            }
        }
    }
}
