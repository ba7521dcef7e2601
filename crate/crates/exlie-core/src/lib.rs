#![no_std]
#![forbid(unsafe_code)]
#![warn(missing_docs)]
#![deny(clippy::float_arithmetic)]
// Structure-constant and elimination loops index several arrays in lockstep;
// plain index loops are clearer there than iterator chains.
#![allow(clippy::needless_range_loop)]

//! # Exact exceptional Lie theory
//!
//! This crate reconstructs, in exact rational arithmetic, the algebraic
//! machinery connecting the twelve non-compact real forms of the exceptional
//! simple Lie algebras to cubic Jordan algebras and Freudenthal triple
//! systems:
//!
//! * [`exact_arith`] — fraction-free linear algebra over `Q` (ranks,
//!   nullspaces, solving), the numeric substrate for everything else;
//! * [`composition_algebra`] — the Cayley–Dickson tower `R, C, H, O` and its
//!   split companions `C_s, H_s, O_s`;
//! * [`jordan_core`] — cubic Jordan algebras: `R`, spin factors
//!   `R ⊕ Γ_{m,n}`, Hermitian 3×3 algebras `J_3^A`, and the Lorentzian
//!   algebras `J_{1,2}^A`, built through the Freudenthal–Springer–Tits
//!   construction from a cubic norm with basepoint;
//! * [`fts`] — the Freudenthal triple system `F(J) = R ⊕ R ⊕ J ⊕ J` with its
//!   symplectic form, quartic invariant and triple product, plus the
//!   one-dimensional extension whose invariance algebra is quasi-conformal;
//! * [`symmetry_dims`] — exact dimensions of the derivation, structure,
//!   conformal and quasi-conformal algebras of a Jordan algebra, reproducing
//!   the exceptional magic-square row `aut ⊂ str ⊂ conf ⊂ qconf`;
//! * [`root_system`] — the root systems `E6, E7, E8, F4, G2` in exact
//!   coordinates, with subsystem classification and node-deletion gradings;
//! * [`real_form`] — Satake diagrams of the twelve non-compact exceptional
//!   real forms and their restricted root systems with multiplicities;
//! * [`parabolic`] — standard and maximal parabolic subalgebras `P_Θ` with
//!   Langlands data `(M_Θ, A_Θ, N_Θ)`, Levi classification and gradings;
//! * [`relations`] — parabolic relatedness between real forms (equality of
//!   complexified Levi factors of maximal parabolics) and the Jordan
//!   algebraic interpretation of the Lie algebras involved;
//! * [`registry`] — the frozen golden data: Satake diagrams, the 44
//!   maximal-parabolic rows, the magic-square dimension table, the fourteen
//!   relatedness classes and their Jordan roles.
//!
//! ## Design
//!
//! Every computation is exact: scalars are arbitrary-precision rationals
//! ([`exact_arith::Rat`]) and no floating point appears anywhere
//! (`clippy::float_arithmetic` is denied crate-wide). The crate is
//! `no_std` + `alloc`; all IO, serialization and the command-line interface
//! live in the companion `exlie` crate.
//!
//! The mathematical layers are deliberately redundant: Jordan products are
//! derived *twice* (from the cubic norm and from symmetrized matrix
//! multiplication) and compared; quartic linearizations are checked against
//! inclusion–exclusion polarization; Lie algebra dimensions computed from
//! Leibniz kernels are checked against root-system counts. The test suites
//! freeze every derived number so regressions are loud.

extern crate alloc;

pub mod composition_algebra;
pub mod exact_arith;
pub mod fts;
pub mod jordan_core;
pub mod parabolic;
pub mod real_form;
pub mod registry;
pub mod relations;
pub mod root_system;
pub mod symmetry_dims;
