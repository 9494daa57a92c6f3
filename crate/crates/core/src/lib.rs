//! Exact-arithmetic analysis of symplectic representations of complex
//! reductive groups, viewed as combinatorial weight data.
//!
//! The crate builds root systems for all simple types plus central tori,
//! materializes weight systems of representations with Freudenthal's
//! recursion, runs Knop reduction to a terminal representation, decides
//! coisotropy and rank, evaluates the moment map symbolically on a Cartan
//! subspace, and classifies polarity against the embedded classification
//! tables A, B and S'. All arithmetic is exact: integer weight coordinates,
//! big-integer dimension formulas, and rational linear algebra.
//!
//! Entry points:
//! * [`algebra`] / [`roots`] — reductive algebras, root systems, Weyl orbits;
//! * [`weyl`] — Weyl group enumeration and normalizer quotients of subspaces;
//! * [`rep`] — weight multisets, irreducibles, duals, type-1/type-2
//!   components, saturation;
//! * [`reduction`] — the reduction algorithm, terminal decompositions,
//!   coisotropy and rank;
//! * [`analysis`] — moment images, strong orthogonality, orbit separation,
//!   rank condition, polarity verdicts;
//! * [`tables`] — the classification tables and the verification harness.

pub mod algebra;
pub mod analysis;
pub mod canonical;
pub mod error;
pub mod linalg;
pub mod reduction;
pub mod rep;
pub mod roots;
pub mod tables;
pub mod weyl;

pub use algebra::{Family, ReductiveAlgebra, SimpleFactor, Weight};
pub use error::{Error, Result};
pub use rep::{Component, ComponentKind, ComponentSpec, FsClass, RepSpec, WeightMultiset};
pub use roots::{build_root_system, Limits, Root, RootSystemData};
