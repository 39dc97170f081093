//! Exact computations in the Kauffman bracket skein algebra of the torus.
//!
//! Multicurves on the torus are written `(a,b)`. Products are computed either
//! by the product-to-sum rule in the Chebyshev basis ([`skein::mul_t`]) or by
//! brute-force superposition and smoothing ([`oracle`]). The oriented algebra
//! lives in [`oriented`], and [`bracket`] evaluates planar link diagrams.
//!
//! The `examples/` directory has one runnable program per capability:
//!
//! - `product_to_sum`: products of curves, standard and Chebyshev bases
//! - `chebyshev_basis`: `T_n` and conversion between bases
//! - `oriented_algebra`: the quantum torus and `θ`
//! - `psi_isomorphism`: `ψ`, its inverse, and the homomorphism property
//! - `smoothing_oracle`: state sums and the per-state dump
//! - `hopf_bracket`: the bracket of planar diagrams
//! - `verify_sweep`: the exhaustive oracle comparison
//!
//! Run one with `cargo run --example hopf_bracket`.

pub mod bracket;
pub mod chebyshev;
pub mod cli;
pub mod error;
pub mod laurent;
pub mod oracle;
pub mod oriented;
pub mod skein;
mod text;
pub mod torus;
pub mod verify;

pub use error::{Error, Result};
pub use laurent::LaurentPoly;
pub use oriented::OrientedElement;
pub use skein::{Basis, SkeinElement};
pub use torus::{IntVec2, UnorientedClass};
