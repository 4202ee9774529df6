//! Exact decomposition of canonical representations of Galois covers of
//! orbifold curves.
//!
//! Given a Galois cover `X -> Y` of compact Riemann orbifolds with group `G`,
//! the space of holomorphic differentials on `X` is a `G`-module, and the
//! multiplicity of each irreducible representation in it is given by an
//! orbifold Chevalley-Weil formula. This crate evaluates that formula in
//! exact cyclotomic arithmetic, with two independent routes to every number
//! it reports:
//!
//! * closed-form multiplicity expressions versus direct evaluation of the
//!   formula on character data, and
//! * character tables generated from known descriptions versus tables
//!   computed from scratch by the Dixon-Burnside algorithm.
//!
//! The specializations cover quotients of the modular group (principal
//! congruence covers `X(p) -> X(1)` for prime `p`) and Fermat curves
//! `x^N + y^N = z^N` as covers of the thrice-punctured line.
//!
//! Modules:
//! * [`exactmath`]: rationals, cyclotomic fields, matrices, characteristic
//!   polynomials.
//! * [`groupcore`]: finite group closure, conjugacy classes, Dixon-Burnside
//!   character tables, eigenvalue profiles.
//! * [`cwcore`]: the orbifold Chevalley-Weil formula over explicit profile
//!   data.
//! * [`modular`]: the specialization to quotients of `PSL(2, Z)`.
//! * [`psl2fp`]: character data and multiplicities for `PSL(2, F_p)`.
//! * [`fermat`]: character data and multiplicities for Fermat curves.
//! * [`fixtures`]: explicit matrix models checked against all of the above.

pub mod error;
mod numth;
pub mod exactmath;
pub mod groupcore;
pub mod cwcore;
pub mod modular;
pub mod psl2fp;
pub mod fermat;
pub mod fixtures;

pub use error::{Error, Result};
