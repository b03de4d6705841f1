//! Computing with the facial structure of copositive and completely positive
//! cones over second-order (Lorentz) cones.
//!
//! The second-order cone `L^n = {x : x_1 >= ||x_{2:n}||}` induces two cones of
//! symmetric matrices:
//!
//! - the copositive cone `COP(L^n) = S_+^n + R_+ J_n`, the matrices `A` with
//!   `x' A x >= 0` for every `x` in `L^n`, and
//! - the completely positive cone `CP(L^n) = S_+^n ∩ {<A, J_n> >= 0}`, the
//!   sums of dyads `a a'` with `a` in `L^n`,
//!
//! where `J_n = diag(1, -1, ..., -1)`. Both admit a complete description of
//! their faces, and this crate makes that description executable:
//!
//! - [`cop`]: membership with eigenvalue witnesses, the four-family face
//!   taxonomy with dimensions and exposedness, exposing certificates,
//!   extreme-ray classification, longest chains, and distance-to-polyhedrality
//!   witnesses for `COP(L^n)`.
//! - [`cp`]: membership, balanced rank-one decompositions, atom
//!   decompositions into Lorentz-cone vectors, face descriptors with
//!   closed-form dimensions, certificates, and chain constructions for
//!   `CP(L^n)`.
//! - [`soc`]: geometry of `L^n` itself: point classification, the orthogonal
//!   three-way split, subspace-cone intersection classification, and
//!   constructive interior/boundary bases.
//! - [`linalg`]: the dense symmetric-matrix substrate (Jacobi
//!   eigendecomposition, orthonormalization, `svec`).
//! - [`casebook`]: executable reproductions of the counterexamples: the
//!   non-face symmetric product, exposed rays over polyhedral and Lorentz
//!   cones, and the vectorized-PSD boundary non-face.
//! - [`verify`]: the seeded property suites behind `conic-faces verify`.
//!
//! Every operation is a pure function of its inputs; values are immutable
//! after construction and safe to share across threads. See the crate
//! `examples/` directory for a runnable tour of each capability, and [`cli`]
//! for the JSON command-line front end.

pub mod casebook;
pub mod chain;
pub mod cli;
pub mod cop;
pub mod cp;
pub mod error;
pub mod linalg;
pub mod soc;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::{orthonormalize, rank_of, svec, svec_inverse, sym_eigen, tensor_square};
pub use linalg::{EigenResult, Subspace, SymMatrix};
pub use soc::{PointClass, SocVector, SubspaceConeClass};

/// Default relative tolerance used throughout when the caller does not
/// override it (`CONIC_FACES_TOL` in the CLI).
pub const DEFAULT_TOL: f64 = 1e-9;

/// The triangular number `T_d = d(d+1)/2`, the dimension of the space of
/// `d x d` symmetric matrices.
pub const fn triangular(d: usize) -> usize {
    d * (d + 1) / 2
}
