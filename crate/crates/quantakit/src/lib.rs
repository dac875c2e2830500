//! quantakit: an exact calculus of quantaloid-enriched categories over
//! finite instances.
//!
//! The tower of structures, bottom to top:
//!
//! * [`lattice`] — finite complete lattices (sup-lattices), the hom
//!   objects everything else is built from;
//! * [`quantaloid`] — quantaloids: lattice-enriched categories with
//!   residuation (liftings and extensions) and adjoint calculus, plus
//!   a family of generators (`bool2`, locales as one-world relational
//!   bases, truncated tropical, opposites, seeded random bases);
//! * [`enriched`] — categories, functors and distributors enriched in
//!   a quantaloid, their composition calculus, graphs of functors,
//!   adjunctions, equivalences and skeletal quotients;
//! * [`completion`] — weighted (co)limits, (co)presheaf categories,
//!   Yoneda embeddings, pointwise Kan extensions, free cocompletion
//!   and (co)completeness checks;
//! * [`cauchy`] — Cauchy presheaves, convergence, the Cauchy
//!   completion, and Morita equivalence of enriched categories;
//! * [`matrixcalc`] — the matrix/bimodule view: matrices over a
//!   quantaloid, monads and bimodules, splitting of monads, direct
//!   sums, lax functors from finite shapes, lax transformations, and
//!   lax (co)limits inside the distributor quantaloid;
//! * [`corpus`] — a small named zoo of bases and categories used by
//!   the law suites and tests;
//! * [`laws`] — an executable registry of the algebraic laws the
//!   whole calculus satisfies, reported instance by instance.
//!
//! Every operation is exact: no floats, no tolerances. Where a value
//! is claimed, it is computed by table lookup and joins; where a law
//! is claimed, it is checked by finite quantification.

pub mod cauchy;
pub mod completion;
pub mod corpus;
pub mod enriched;
pub mod lattice;
pub mod laws;
pub mod matrixcalc;
pub mod quantaloid;

pub use cauchy::{cauchy_completion, is_cauchy_complete, morita_equivalent, CauchyWitness};
pub use completion::{weighted_colim, weighted_lim, Caps, PresheafCategory};
pub use matrixcalc::{LaxFunctor, QMatrix, Quantaloidal};
pub use enriched::{Distributor, QCategory, QFunctor, TypedSet};
pub use lattice::{Elt, Lattice};
pub use quantaloid::{QArrow, Quantaloid};
