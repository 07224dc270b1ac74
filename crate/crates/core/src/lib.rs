//! Exact-arithmetic representation theory of finite Weyl groups: ordinary
//! and modular character machinery, coinvariant algebras as graded modules,
//! label-level Springer-style correspondences, small-coweight tables, and a
//! brute-force zero-weight-space oracle built from Chevalley generators.

pub mod error;
pub mod linalg;
pub mod partitions;
pub mod prng;
pub mod roots;
pub mod smallzero;
pub mod springer;

pub mod chartab;
pub mod coinv;
pub mod labels;
pub mod modular;
pub mod oracle;
pub mod ordinary;
pub mod weyl;

pub use error::{Error, Result};
