//! Exact computational algebra for the symmetry group `G ≅ S4 × S3` of the
//! 3×3 matrix multiplication tensor `⟨3,3,3⟩`.
//!
//! Everything here is exact: the coefficient field is the degree-4 cyclotomic
//! field `Q(ω)` with `ω⁴ = ω² − 1` (a primitive 12th root of unity), which
//! contains the rationals, `i = ω³` and the primitive cube root `ζ = ω⁴`.
//! There is no floating point anywhere in this crate.
//!
//! The main subsystems:
//!
//! * [`scalar`] — arbitrary-precision rationals and the cyclotomic field.
//! * [`linalg`] — reduced row echelon form, kernels and solving over any
//!   exact field.
//! * [`mat`], [`tensor`] — 3×3 matrices, decomposable tensors `x⊗y⊗z`, full
//!   tensors in `M⊗M⊗M`, and `⟨3,3,3⟩` itself.
//! * [`perm`], [`group`] — the group `G` as pairs of permutations, the signed
//!   permutation matrix representation of the `S4` factor, and the action of
//!   `G` on matrices and tensors.
//! * [`subgroup`] — the full subgroup lattice of `G`, conjugacy classes,
//!   normalizers, subdirect products, and the 43 named standard subgroups of
//!   order ≥ 8.
//! * [`semi`] — semiinvariant subspaces `M_λ` and characters for subgroups of
//!   the `S4` factor, plus structural invariance predicates.
//! * [`orbit`] — the 44-row catalog of `G`-orbits of decomposable tensors of
//!   length ≤ 18, stabilizer/orbit computation, per-row verification and the
//!   classifier.
//! * [`decomp`], [`poly`] — rank decompositions of `⟨3,3,3⟩`, invariance and
//!   orbit structure, feasible orbit-length profiles, and polynomial
//!   constraint systems for orbit-sum decompositions.
//! * [`json`] — the JSON wire formats used by the command line tool.

pub mod decomp;
pub mod error;
pub mod group;
pub mod json;
pub mod linalg;
pub mod mat;
pub mod orbit;
pub mod perm;
pub mod poly;
pub mod rng;
pub mod sample;
pub mod scalar;
pub mod semi;
pub mod subgroup;
pub mod tensor;

pub use error::Error;

/// Arbitrary-precision rational number, always stored reduced with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

/// The concrete coefficient field used throughout: `Q(ω)`, `ω⁴ = ω² − 1`.
pub type Scalar = scalar::Cyclotomic;

/// 3×3 matrix over the concrete scalar field.
pub type Mat = mat::Mat3<Scalar>;

/// Decomposable tensor `x ⊗ y ⊗ z` over the concrete scalar field.
pub type DecTensor = tensor::DecTensor<Scalar>;

/// Full (sparse) tensor in `M ⊗ M ⊗ M` over the concrete scalar field.
pub type FullTensor = tensor::FullTensor<Scalar>;
