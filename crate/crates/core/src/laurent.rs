//! The sparse Laurent polynomial ring L_d(x, y, z) over GF(d).
//!
//! A polynomial is a finite map from exponent triples to nonzero residues;
//! the zero polynomial is the empty map. Exponents are signed 64-bit and all
//! exponent arithmetic is overflow-checked: overflow is reported as an error,
//! never wrapped. The canonical term order for iteration and serialization is
//! lexicographic ascending on `(i, j, k)`.
//!
//! Substitutions are restricted to ring homomorphisms sending each variable
//! to a nonzero scalar multiple of a monomial ([`MonomialImage`]); that is
//! the only kind this crate needs.

use std::fmt;

use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::field::{FieldCtx, FieldElement};

/// Exponents of x, y, z in a single monomial.
///
/// The derived `Ord` is lexicographic on `(i, j, k)`, which is the crate-wide
/// canonical term order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExpTriple {
    pub i: i64,
    pub j: i64,
    pub k: i64,
}

impl ExpTriple {
    pub const ZERO: ExpTriple = ExpTriple { i: 0, j: 0, k: 0 };

    pub fn new(i: i64, j: i64, k: i64) -> ExpTriple {
        ExpTriple { i, j, k }
    }

    pub fn checked_add(self, rhs: ExpTriple) -> Result<ExpTriple> {
        Ok(ExpTriple {
            i: self.i.checked_add(rhs.i).ok_or(Error::ExponentOverflow)?,
            j: self.j.checked_add(rhs.j).ok_or(Error::ExponentOverflow)?,
            k: self.k.checked_add(rhs.k).ok_or(Error::ExponentOverflow)?,
        })
    }

    pub fn checked_scale(self, m: i64) -> Result<ExpTriple> {
        Ok(ExpTriple {
            i: self.i.checked_mul(m).ok_or(Error::ExponentOverflow)?,
            j: self.j.checked_mul(m).ok_or(Error::ExponentOverflow)?,
            k: self.k.checked_mul(m).ok_or(Error::ExponentOverflow)?,
        })
    }

    pub fn checked_neg(self) -> Result<ExpTriple> {
        self.checked_scale(-1)
    }
}

/// The image of one variable under a substitution homomorphism: a nonzero
/// scalar times a monomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MonomialImage {
    coeff: FieldElement,
    exps: ExpTriple,
}

impl MonomialImage {
    /// Fails if `coeff` is zero: the image of a variable must be a unit of
    /// the Laurent ring.
    pub fn new(coeff: FieldElement, exps: ExpTriple) -> Result<MonomialImage> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        Ok(MonomialImage { coeff, exps })
    }

    pub fn coeff(self) -> FieldElement {
        self.coeff
    }

    pub fn exps(self) -> ExpTriple {
        self.exps
    }

    /// x ↦ x.
    pub fn var_x(ctx: FieldCtx) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one(),
            exps: ExpTriple::new(1, 0, 0),
        }
    }

    /// y ↦ y.
    pub fn var_y(ctx: FieldCtx) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one(),
            exps: ExpTriple::new(0, 1, 0),
        }
    }

    /// z ↦ z.
    pub fn var_z(ctx: FieldCtx) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one(),
            exps: ExpTriple::new(0, 0, 1),
        }
    }

    /// The constant 1, as a substitution target.
    pub fn one(ctx: FieldCtx) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one(),
            exps: ExpTriple::ZERO,
        }
    }

    /// The constant −1.
    pub fn neg_one(ctx: FieldCtx) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one().neg(),
            exps: ExpTriple::ZERO,
        }
    }

    /// A bare power of a single variable, coefficient 1.
    pub fn monomial(ctx: FieldCtx, exps: ExpTriple) -> MonomialImage {
        MonomialImage {
            coeff: ctx.one(),
            exps,
        }
    }

    /// The identity substitution (x, y, z) ↦ (x, y, z).
    pub fn identity(ctx: FieldCtx) -> [MonomialImage; 3] {
        [Self::var_x(ctx), Self::var_y(ctx), Self::var_z(ctx)]
    }
}

/// A sparse Laurent polynomial in x, y, z over GF(d).
#[derive(Debug, Clone)]
pub struct LaurentPoly {
    ctx: FieldCtx,
    // Invariant: no stored value is zero; all values are canonical mod d.
    terms: FxHashMap<ExpTriple, u64>,
}

impl PartialEq for LaurentPoly {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for LaurentPoly {}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero(ctx: FieldCtx) -> LaurentPoly {
        LaurentPoly {
            ctx,
            terms: FxHashMap::default(),
        }
    }

    /// The constant polynomial 1.
    pub fn one(ctx: FieldCtx) -> LaurentPoly {
        Self::constant(ctx.one())
    }

    /// A constant polynomial; zero maps to the empty term map.
    pub fn constant(c: FieldElement) -> LaurentPoly {
        let mut terms = FxHashMap::default();
        if !c.is_zero() {
            terms.insert(ExpTriple::ZERO, c.value());
        }
        LaurentPoly {
            ctx: c.ctx(),
            terms,
        }
    }

    /// The single-term polynomial `coeff * x^i y^j z^k`. The coefficient
    /// must be nonzero.
    pub fn monomial(coeff: FieldElement, exps: ExpTriple) -> Result<LaurentPoly> {
        if coeff.is_zero() {
            return Err(Error::ZeroCoefficient);
        }
        let mut terms = FxHashMap::default();
        terms.insert(exps, coeff.value());
        Ok(LaurentPoly {
            ctx: coeff.ctx(),
            terms,
        })
    }

    /// The variable x.
    pub fn var_x(ctx: FieldCtx) -> LaurentPoly {
        Self::monomial(ctx.one(), ExpTriple::new(1, 0, 0)).expect("1 is nonzero")
    }

    /// The variable y.
    pub fn var_y(ctx: FieldCtx) -> LaurentPoly {
        Self::monomial(ctx.one(), ExpTriple::new(0, 1, 0)).expect("1 is nonzero")
    }

    /// The variable z.
    pub fn var_z(ctx: FieldCtx) -> LaurentPoly {
        Self::monomial(ctx.one(), ExpTriple::new(0, 0, 1)).expect("1 is nonzero")
    }

    /// z^k for any signed k.
    pub fn z_pow(ctx: FieldCtx, k: i64) -> LaurentPoly {
        Self::monomial(ctx.one(), ExpTriple::new(0, 0, k)).expect("1 is nonzero")
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.num_terms() == 1 && self.terms.get(&ExpTriple::ZERO) == Some(&(1 % self.ctx.modulus()))
    }

    /// Number of monomials with nonzero coefficient.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient of `x^i y^j z^k`; zero if the monomial is absent.
    pub fn coefficient(&self, exps: ExpTriple) -> FieldElement {
        let v = self.terms.get(&exps).copied().unwrap_or(0);
        FieldElement::from_raw(v, self.ctx)
    }

    /// Terms in the canonical order: lexicographic ascending on `(i, j, k)`.
    pub fn sorted_terms(&self) -> Vec<(ExpTriple, FieldElement)> {
        let mut v: Vec<_> = self
            .terms
            .iter()
            .map(|(&e, &c)| (e, FieldElement::from_raw(c, self.ctx)))
            .collect();
        v.sort_unstable_by_key(|&(e, _)| e);
        v
    }

    /// Equality that refuses to compare across different fields.
    pub fn eq_checked(&self, other: &LaurentPoly) -> Result<bool> {
        self.ctx.require_same(other.ctx)?;
        Ok(self.terms == other.terms)
    }

    pub(crate) fn raw_terms(&self) -> &FxHashMap<ExpTriple, u64> {
        &self.terms
    }

    pub(crate) fn insert_term(&mut self, exps: ExpTriple, value: u64) {
        if value == 0 {
            return;
        }
        let slot = self.terms.entry(exps).or_insert(0);
        *slot = self.ctx.add_raw(*slot, value);
        if *slot == 0 {
            self.terms.remove(&exps);
        }
    }

    pub fn add(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.insert_term(e, c);
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = self.clone();
        for (&e, &c) in &rhs.terms {
            out.insert_term(e, self.ctx.neg_raw(c));
        }
        Ok(out)
    }

    pub fn neg(&self) -> LaurentPoly {
        let terms = self
            .terms
            .iter()
            .map(|(&e, &c)| (e, self.ctx.neg_raw(c)))
            .collect();
        LaurentPoly {
            ctx: self.ctx,
            terms,
        }
    }

    /// Schoolbook sparse product.
    pub fn mul(&self, rhs: &LaurentPoly) -> Result<LaurentPoly> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = LaurentPoly::zero(self.ctx);
        out.terms.reserve(self.terms.len().max(rhs.terms.len()));
        for (&ea, &ca) in &self.terms {
            for (&eb, &cb) in &rhs.terms {
                let e = ea.checked_add(eb)?;
                out.insert_term(e, self.ctx.mul_raw(ca, cb));
            }
        }
        Ok(out)
    }

    /// `self^e` for signed `e`. Nonnegative powers work for any polynomial;
    /// negative powers require a single-term polynomial, whose inverse is
    /// again a monomial.
    pub fn pow(&self, e: i64) -> Result<LaurentPoly> {
        if e == 0 {
            return Ok(LaurentPoly::one(self.ctx));
        }
        if e < 0 {
            let (coeff, exps) = self.as_monomial_unit().ok_or(Error::NotInvertible)?;
            let c = coeff.pow(e)?;
            return LaurentPoly::monomial(c, exps.checked_scale(e)?);
        }
        let mut acc = LaurentPoly::one(self.ctx);
        let mut base = self.clone();
        let mut e = e as u64;
        loop {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e == 0 {
                break;
            }
            base = base.mul(&base)?;
        }
        Ok(acc)
    }

    /// Applies the ring homomorphism determined by the images of x, y, z.
    pub fn substitute(
        &self,
        img_x: MonomialImage,
        img_y: MonomialImage,
        img_z: MonomialImage,
    ) -> Result<LaurentPoly> {
        let mut out = LaurentPoly::zero(self.ctx);
        for (&e, &c) in &self.terms {
            let cx = img_x.coeff.pow(e.i)?;
            let cy = img_y.coeff.pow(e.j)?;
            let cz = img_z.coeff.pow(e.k)?;
            let coeff = self.ctx.mul_raw(
                self.ctx.mul_raw(c, cx.value()),
                self.ctx.mul_raw(cy.value(), cz.value()),
            );
            let exps = img_x
                .exps
                .checked_scale(e.i)?
                .checked_add(img_y.exps.checked_scale(e.j)?)?
                .checked_add(img_z.exps.checked_scale(e.k)?)?;
            out.insert_term(exps, coeff);
        }
        Ok(out)
    }

    /// If the polynomial is a single term `f * x^i y^j z^k`, returns
    /// `(f, (i, j, k))`; these are exactly the units of the Laurent ring.
    pub fn as_monomial_unit(&self) -> Option<(FieldElement, ExpTriple)> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&e, &c) = self.terms.iter().next().expect("one term");
        Some((FieldElement::from_raw(c, self.ctx), e))
    }
}

impl fmt::Display for LaurentPoly {
    /// Canonical text rendering: terms in lex-ascending order, `*` between
    /// factors, unit coefficients and zero exponents omitted. The zero
    /// polynomial renders as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            let mut factors: Vec<String> = Vec::new();
            if c.value() != 1 || e == ExpTriple::ZERO {
                factors.push(format!("{}", c.value()));
            }
            for (var, exp) in [("x", e.i), ("y", e.j), ("z", e.k)] {
                if exp == 1 {
                    factors.push(var.to_string());
                } else if exp != 0 {
                    factors.push(format!("{var}^{exp}"));
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}
