//! Lie bi-algebra and Manin-triple structures of the non-commutative torus.
//!
//! The crate builds, for the rational torus at `PQ = ωQP` with `ω` a primitive
//! `N`-th root of unity, the splitting `gl_N = u_N ⊕ b_N` into anti-hermitian
//! and Borel subalgebras, verifies that the splitting is a Manin triple for
//! the pairing `⟨X,Y⟩ = Im Tr(XY)`, and extracts the associated Lie bi-algebra
//! structure constants.  The same machinery covers the classical (Poisson)
//! limit on Fourier series, the torus algebra at arbitrary real deformation
//! parameter, the Powers–Rieffel projection with its trace and Chern number,
//! and the Taft Hopf algebra together with its Galois objects.
//!
//! Everything that can be checked exactly is checked exactly: the scalar
//! backend [`scalar::CycloScalar`] does arbitrary-precision arithmetic in
//! cyclotomic fields, so pairings, structure constants and Hopf axioms are
//! verified with zero tolerance.  A complex floating-point backend
//! [`scalar::ApproxComplex`] covers large dimensions and irrational
//! parameters.

pub mod bialgebra;
pub mod classical_torus;
pub mod fixtures_sl;
pub mod matrix;
pub mod nc_torus;
pub mod rational_torus;
pub mod rieffel;
pub mod scalar;
pub mod taft;

pub use bialgebra::VerificationReport;
pub use scalar::{ApproxComplex, CycloScalar, Scalar};
