//! Exact arithmetic in the group algebra F_d[𝔊] of the Promislow group,
//! and the parameterized family of nontrivial units that refutes the
//! Kaplansky unit conjecture in every prime characteristic d.
//!
//! 𝔊 = ⟨a, b | (a²)ᵇ = a⁻², (b²)ᵃ = b⁻²⟩ is torsion-free and contains the
//! free abelian subgroup 𝔥 = ⟨x, y, z⟩ (x = a², y = b², z = (ab)²) with
//! index 4. Everything here is built on that structure:
//!
//! * [`field`] — the prime field GF(d) for a runtime-chosen prime d.
//! * [`laurent`] — the sparse Laurent polynomial ring L_d(x, y, z) = F_d[𝔥],
//!   with substitution homomorphisms.
//! * [`matrix`] — exact 4×4 matrices over L_d, the generator matrices of
//!   the representation, and a division-free determinant and adjugate.
//! * [`group_ring`] — elements of F_d[𝔊] as coefficient quadruples on the
//!   cosets 1, a, b, c; the faithful embedding into the matrix ring and its
//!   inversion; an independent crossed-product multiplication.
//! * [`units`] — the family u(d, t, w, n), its base point u₀, inversion
//!   through the adjugate, and verification reports.
//! * [`endo`] — the z-power endomorphisms of 𝔊 and the factorization
//!   u = z^t·σ(u₀) of every family member through the base unit.
//! * [`det_check`] — the determinant argument (det = 1 on both the unit and
//!   its inverse) replayed through two specialization homomorphisms.
//!
//! All arithmetic is exact: coefficients live in GF(d), exponents are
//! overflow-checked 64-bit integers, and every identity is an equality of
//! canonical sparse representations — no floating point, no tolerance.
//!
//! ```
//! use promislow::{build_base_unit, invert_unit, verify_unit};
//!
//! // The base unit at d = 2: support of 21 group elements, determinant 1.
//! let u = build_base_unit(2, 1).unwrap();
//! let report = verify_unit(&u).unwrap();
//! assert!(report.is_unit && report.is_nontrivial);
//! assert_eq!(report.support, 21);
//!
//! // Its inverse is also supported on more than one group element, and the
//! // product collapses to 1 in both orders.
//! let v = invert_unit(&u).unwrap();
//! assert!(v.support_size() > 1);
//! assert!(u.mul_matrix(&v).unwrap().is_trivial_unit());
//! ```

pub mod det_check;
pub mod endo;
pub mod error;
pub mod field;
pub mod group_ring;
pub mod laurent;
pub mod matrix;
pub mod units;

pub use det_check::{
    check_determinants, check_determinants_prepared, h_at_z_one, specialize_xy_minus_one,
    specialize_z_one, DeterminantReport,
};
pub use endo::{apply_general, check_base_factorization, check_twist_relations, ZPowerEndo};
pub use error::{Error, Result};
pub use field::{FieldCtx, FieldElement};
pub use group_ring::{Coset, CosetAction, CosetTable, GroupRingElem};
pub use laurent::{ExpTriple, LaurentPoly, MonomialImage};
pub use matrix::{Generators, Mat4};
pub use units::{
    build_base_unit, build_h, build_unit, invert_unit, verify_unit, UnitParams, UnitReport,
};
