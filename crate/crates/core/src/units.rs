//! The parameterized family of nontrivial units u(d, t, w, n) in F_d[𝔊].
//!
//! For a prime d and integers t, w and n ≥ 1, write ζ = z^{1−2t} and
//!
//! ```text
//! h = (1 − ζ)^{d−2} · (1 + ζ^d + ζ^{2d} + ⋯ + ζ^{(n−1)d})
//! p = (1 + x)(1 + y)(z^t + z^{1−t}) h
//! q = z^w [(1 + x)(x⁻¹ + y⁻¹) + (1 + y⁻¹)(1 + z^{2t−1})] h
//! r = z^w [(1 + y⁻¹)(x + y) z^t + (1 + x)(z^t + z^{1−t})] h
//! s = z^{2t−1} + (4 + x + x⁻¹ + y + y⁻¹) h
//! ```
//!
//! Then u = p + q·a + r·b + s·c is a unit of the group algebra whose support
//! has more than one element, contradicting the unit conjecture for F_d[𝔊].
//! The base point u₀ = u(d, 0, 0, n) generates the whole family under the
//! z-power endomorphisms of the [`crate::endo`] module.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::group_ring::GroupRingElem;
use crate::laurent::{ExpTriple, LaurentPoly};

/// Parameters (d, t, w, n) selecting one member of the unit family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct UnitParams {
    ctx: FieldCtx,
    t: i64,
    w: i64,
    n: u32,
}

impl UnitParams {
    /// Validates d (must be prime) and the exponent arithmetic on t.
    ///
    /// # Panics
    /// If `n` is zero; the family is defined for n ≥ 1 only.
    pub fn new(d: i64, t: i64, w: i64, n: u32) -> Result<UnitParams> {
        let ctx = FieldCtx::new(d)?;
        assert!(n >= 1, "the unit family is defined for n >= 1");
        // All downstream exponents are bounded by |1 - 2t| and |w|; reject t
        // large enough for 1 - 2t to overflow here, once.
        let shift = t
            .checked_mul(2)
            .and_then(|tt| 1i64.checked_sub(tt))
            .ok_or(Error::ExponentOverflow)?;
        // 1 - 2t is odd (hence nonzero) for every integer t.
        debug_assert!(shift % 2 != 0);
        Ok(UnitParams { ctx, t, w, n })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    /// The field characteristic d.
    pub fn d(&self) -> u64 {
        self.ctx.modulus()
    }

    pub fn t(&self) -> i64 {
        self.t
    }

    pub fn w(&self) -> i64 {
        self.w
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The exponent 1 − 2t of the substitution z ↦ z^{1−2t}; overflow was
    /// ruled out at construction.
    pub fn z_shift(&self) -> i64 {
        1 - 2 * self.t
    }
}

fn mono(ctx: FieldCtx, i: i64, j: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(ctx.one(), ExpTriple::new(i, j, k)).expect("coefficient 1 is nonzero")
}

/// The scalar factor h = (1 − ζ)^{d−2} · (1 + ζ^d + ⋯ + ζ^{(n−1)d}) with
/// ζ = z^{1−2t}, built multiplicatively (no polynomial division).
pub fn build_h(params: &UnitParams) -> Result<LaurentPoly> {
    let ctx = params.ctx();
    let shift = params.z_shift();
    let zeta = LaurentPoly::z_pow(ctx, shift);
    let lead = LaurentPoly::one(ctx)
        .sub(&zeta)?
        .pow(params.d() as i64 - 2)?;
    let mut geom = LaurentPoly::zero(ctx);
    for m in 0..params.n() as i64 {
        let e = (params.d() as i64)
            .checked_mul(m)
            .and_then(|dm| dm.checked_mul(shift))
            .ok_or(Error::ExponentOverflow)?;
        geom = geom.add(&LaurentPoly::z_pow(ctx, e))?;
    }
    lead.mul(&geom)
}

/// The unit u(d, t, w, n) as a group-ring element (p, q, r, s).
pub fn build_unit(params: &UnitParams) -> Result<GroupRingElem> {
    let ctx = params.ctx();
    let h = build_h(params)?;

    let t = params.t();
    let one = LaurentPoly::one(ctx);
    let x = LaurentPoly::var_x(ctx);
    let y = LaurentPoly::var_y(ctx);
    let x_inv = mono(ctx, -1, 0, 0);
    let y_inv = mono(ctx, 0, -1, 0);

    // z^t, z^{1-t}, z^w, z^{2t-1}; 1 - t and -shift cannot overflow once
    // 1 - 2t was validated (shift is odd, so it is never i64::MIN).
    let z_t = LaurentPoly::z_pow(ctx, t);
    let z_1mt = LaurentPoly::z_pow(ctx, 1 - t);
    let z_w = LaurentPoly::z_pow(ctx, params.w());
    let z_2tm1 = LaurentPoly::z_pow(ctx, -params.z_shift());

    let one_plus_x = one.add(&x)?;
    let one_plus_y = one.add(&y)?;
    let one_plus_y_inv = one.add(&y_inv)?;
    let z_t_sym = z_t.add(&z_1mt)?;

    let p = one_plus_x.mul(&one_plus_y)?.mul(&z_t_sym)?.mul(&h)?;

    let q_bracket = one_plus_x
        .mul(&x_inv.add(&y_inv)?)?
        .add(&one_plus_y_inv.mul(&one.add(&z_2tm1)?)?)?;
    let q = z_w.mul(&q_bracket)?.mul(&h)?;

    let r_bracket = one_plus_y_inv
        .mul(&x.add(&y)?)?
        .mul(&z_t)?
        .add(&one_plus_x.mul(&z_t_sym)?)?;
    let r = z_w.mul(&r_bracket)?.mul(&h)?;

    let four = LaurentPoly::constant(ctx.from_int(4));
    let s_bracket = four.add(&x)?.add(&x_inv)?.add(&y)?.add(&y_inv)?;
    let s = z_2tm1.add(&s_bracket.mul(&h)?)?;

    GroupRingElem::new(p, q, r, s)
}

/// The base unit u₀ = u(d, 0, 0, n).
pub fn build_base_unit(d: i64, n: u32) -> Result<GroupRingElem> {
    build_unit(&UnitParams::new(d, 0, 0, n)?)
}

/// Inverts a group-ring element through the matrix representation: embed,
/// invert via the adjugate, and pull row 0 back with a membership check.
///
/// Fails with [`Error::NotAUnit`] when the determinant of the embedded
/// matrix is not a monomial; [`Error::NotInImage`] would signal an internal
/// inconsistency and cannot fire for genuine group-ring elements.
pub fn invert_unit(u: &GroupRingElem) -> Result<GroupRingElem> {
    GroupRingElem::extract(&u.embed()?.inverse()?)
}

/// Outcome of [`verify_unit`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitReport {
    /// Whether a two-sided inverse exists (checked by multiplying out both
    /// orders, not just by the determinant criterion).
    pub is_unit: bool,
    /// A unit whose support has more than one group element.
    pub is_nontrivial: bool,
    /// Determinant of the embedded matrix.
    pub det: LaurentPoly,
    /// Support size in 𝔊.
    pub support: usize,
}

/// Attempts inversion and reports unit-ness, nontriviality, determinant and
/// support size. Failure to invert is reported in the verdict; only
/// infrastructure errors (exponent overflow, mixed moduli) propagate.
pub fn verify_unit(u: &GroupRingElem) -> Result<UnitReport> {
    let det = u.embed()?.det()?;
    let support = u.support_size();
    let is_unit = match invert_unit(u) {
        Ok(inv) => {
            let one = GroupRingElem::one(u.ctx());
            u.mul_matrix(&inv)? == one && inv.mul_matrix(u)? == one
        }
        Err(Error::NotAUnit) | Err(Error::NotInvertible) => false,
        Err(e) => return Err(e),
    };
    Ok(UnitReport {
        is_unit,
        is_nontrivial: is_unit && support > 1,
        det,
        support,
    })
}
