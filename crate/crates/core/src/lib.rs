//! Exact computation of degrees, Frobenius-Schur types, principal-isotropy
//! data and cohomogeneity of orthogonal representations of compact connected
//! Lie groups.
//!
//! The crate is organized in layers:
//!
//! * [`linalg`] — exact rational linear algebra (dense and sparse), plus
//!   fraction-free and modular rank engines.
//! * [`liecore`] — combinatorics of the simple compact Lie algebras: Cartan
//!   data, the Weyl dimension formula, duality, Frobenius-Schur types and
//!   bounded-degree enumeration of irreducibles.
//! * [`repmodel`] — representations of products of simple groups with torus
//!   factors, type arithmetic for tensor products, real forms and
//!   realifications.
//! * [`numslice`] — the numeric oracle: explicit rational matrix realizations
//!   of Lie algebra actions, generic isotropy dimensions, cohomogeneity.
//! * [`cohomcalc`] — closed-form cohomogeneity formulas, degree bounds and the
//!   principal-isotropy lookup lemmas, with embedded data tables.
//! * [`classifier`] — the classification pipeline for a target cohomogeneity
//!   window together with table diffing.
//!
//! All arithmetic is exact; no floating point is used anywhere.

pub mod classifier;
pub mod cohomcalc;
pub mod liecore;
pub mod linalg;
pub mod numslice;
pub mod planner;
pub mod repmodel;
