//! Exact-arithmetic A∞ algebras on finite graded bases.
//!
//! A structure is a family of multilinear maps `m_k : V^{⊗k} → V` of degree
//! `2 - k`. This crate checks the Stasheff identities two ways: directly on
//! `V`, and as `D² = 0` for the coderivation `D` on the tensor coalgebra
//! `T(↓V)` built from the primed maps `m'_k`. It ships a three-dimensional
//! example that exists at every arity, and the L∞ relations of its graded
//! symmetrization.
//!
//! ```
//! use ainfty::engine::{verify_structure, CheckMode};
//! use ainfty::example::paper_example;
//!
//! let report = verify_structure(&paper_example(), 4, CheckMode::Both).unwrap();
//! assert!(report.pass);
//! ```

pub mod cli;
pub mod engine;
pub mod error;
pub mod example;
pub mod format;
pub mod graded;
pub mod linfty;
pub mod report;
pub mod sign;

pub use error::{Error, Result};
