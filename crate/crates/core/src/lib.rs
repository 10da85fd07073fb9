//! Exact computations for iterated additive and affine polynomials over
//! finite fields.
//!
//! The crate is `no_std` (it needs `alloc`). Everything is exact: field
//! elements are residues, counts are integers or big integers, and ratios are
//! rationals.
//!
//! Layout, bottom-up:
//!
//! - [`field`]: `F_q = F_p[x]/(g)` with packed elements, Frobenius and p-th roots.
//! - [`ext`]: large extensions `F_{q^s}` as `F_p`-vector spaces, with a verified
//!   embedding of `F_q` and the Frobenius matrix.
//! - [`poly`]: dense polynomials over `F_q`: gcd, Frobenius powers modulo `f`,
//!   squarefree decomposition, factorization and the order `ord(g)`.
//! - [`additive`]: the composition ring of additive polynomials `Σ a_i X^{p^i}`,
//!   twisted right division, linearized associates and affine shifts.
//! - [`linalg`]: matrices over `F_p` (bit-packed for `p = 2`), kernels, stable
//!   kernel/image decomposition and matrices of additive maps.
//! - [`splitting`]: splitting degrees `s_F(n)` by independent routes, the
//!   companion certificate and the closed formulas.
//! - [`dynamics`]: periodic-point counts and factor statistics of iterates.
#![no_std]

extern crate alloc;

pub mod additive;
pub mod arith;
pub mod dynamics;
mod error;
pub mod ext;
pub mod field;
mod gf2x;
pub mod linalg;
pub mod poly;
pub mod splitting;

pub use additive::{AdditivePoly, AffinePoly, Exceptional};
pub use dynamics::{FactorMethod, FactorStatsReport, PeriodicEntry, PeriodicReport};
pub use error::{Error, Result};
pub use ext::{ExtCtx, ExtElem};
pub use field::{FieldCtx, FqElem};
pub use linalg::{FittingPair, FpMatrix};
pub use poly::{DensePoly, Factorization};
pub use splitting::{
    CStatus, CompanionCertificate, Engine, EngineConfig, LinearizedFormula, Method,
    SplittingReport,
};
