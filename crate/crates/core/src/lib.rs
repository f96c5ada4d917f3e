//! Exact computations on highest weight crystals of finite type.
//!
//! The crate is organised bottom-up:
//!
//! * [`cartan`] builds finite-type Cartan data and enumerates positive roots.
//! * [`qpoly`] is dense integer polynomial arithmetic with cyclotomic
//!   reductions and exact evaluation at roots of unity.
//! * [`qdim`] computes q-dimensions of `B(Λ)` and their residues modulo
//!   `q^n - 1` in the orbit basis `(q^n - 1)/(q^{n/d} - 1)`.
//! * [`tableaux`] is the type A crystal of semistandard tableaux together
//!   with the Weyl group action, Bender-Knuth involutions and promotion.
//! * [`csp`] checks cyclic sieving phenomena on those crystals.
//!
//! All arithmetic is exact; big integers come from `num-bigint`.

pub mod cartan;
pub mod csp;
pub mod error;
pub mod partition;
pub mod qdim;
pub mod qpoly;
pub mod tableaux;

mod serde_big;

pub use cartan::{CartanDatum, CartanType, Family, PairingKind, Root, Weight};
pub use error::{Error, Result};
pub use qpoly::{Evaluation, IntPoly, OrbitDecomposition};
pub use partition::Partition;
pub use tableaux::{Action, OrbitCensus, Tableau};
pub use csp::CspReport;
