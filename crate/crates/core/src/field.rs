//! Arithmetic in the prime field GF(d) for a runtime-chosen prime d.
//!
//! The modulus lives in a [`FieldCtx`] carried by every element, so a single
//! binary can work in many characteristics at once. Elements always hold the
//! canonical representative in `[0, d)`, which keeps equality and
//! serialization stable.

use std::fmt;

use crate::error::{Error, Result};

/// The field GF(d), identified by its prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldCtx {
    d: u64,
}

impl FieldCtx {
    /// Builds the context for GF(d). Fails unless `d` is prime.
    ///
    /// Primality is checked by trial division; the moduli this crate is used
    /// with are small.
    pub fn new(d: i64) -> Result<FieldCtx> {
        if d < 2 {
            return Err(Error::NotPrime(d));
        }
        let m = d as u64;
        let mut f = 2u64;
        while f * f <= m {
            if m.is_multiple_of(f) {
                return Err(Error::NotPrime(d));
            }
            f += 1;
        }
        Ok(FieldCtx { d: m })
    }

    /// The modulus d.
    pub fn modulus(self) -> u64 {
        self.d
    }

    /// The additive identity.
    pub fn zero(self) -> FieldElement {
        FieldElement {
            value: 0,
            ctx: self,
        }
    }

    /// The multiplicative identity.
    pub fn one(self) -> FieldElement {
        FieldElement {
            value: 1 % self.d,
            ctx: self,
        }
    }

    /// Canonical residue of an arbitrary signed integer.
    pub fn from_int(self, n: i64) -> FieldElement {
        let d = self.d as i128;
        let v = ((n as i128 % d) + d) % d;
        FieldElement {
            value: v as u64,
            ctx: self,
        }
    }

    /// Checks that `other` is the same field, for binary operations.
    pub(crate) fn require_same(self, other: FieldCtx) -> Result<()> {
        if self.d == other.d {
            Ok(())
        } else {
            Err(Error::CtxMismatch {
                left: self.d,
                right: other.d,
            })
        }
    }

    // Raw residue arithmetic used on hot paths. Inputs and outputs are
    // canonical representatives.
    pub(crate) fn add_raw(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.d {
            s - self.d
        } else {
            s
        }
    }

    pub(crate) fn sub_raw(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.d - b
        }
    }

    pub(crate) fn mul_raw(self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.d as u128) as u64
    }

    pub(crate) fn neg_raw(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.d - a
        }
    }

    pub(crate) fn pow_raw(self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1 % self.d;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_raw(acc, base);
            }
            base = self.mul_raw(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse of a nonzero residue, by Fermat's little
    /// theorem. Must not be called with 0.
    pub(crate) fn inv_raw(self, a: u64) -> u64 {
        debug_assert!(a != 0, "inverse of zero");
        self.pow_raw(a, self.d - 2)
    }
}

/// An element of GF(d), stored as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    value: u64,
    ctx: FieldCtx,
}

// Arithmetic deliberately does not implement the std::ops traits: every
// binary operation must be able to report a context mismatch, so the
// methods return Result instead of panicking inside an operator.
#[allow(clippy::should_implement_trait)]
impl FieldElement {
    /// The canonical representative in `[0, d)`.
    pub fn value(self) -> u64 {
        self.value
    }

    pub fn ctx(self) -> FieldCtx {
        self.ctx
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    pub fn add(self, rhs: FieldElement) -> Result<FieldElement> {
        self.ctx.require_same(rhs.ctx)?;
        Ok(FieldElement {
            value: self.ctx.add_raw(self.value, rhs.value),
            ctx: self.ctx,
        })
    }

    pub fn sub(self, rhs: FieldElement) -> Result<FieldElement> {
        self.ctx.require_same(rhs.ctx)?;
        Ok(FieldElement {
            value: self.ctx.sub_raw(self.value, rhs.value),
            ctx: self.ctx,
        })
    }

    pub fn mul(self, rhs: FieldElement) -> Result<FieldElement> {
        self.ctx.require_same(rhs.ctx)?;
        Ok(FieldElement {
            value: self.ctx.mul_raw(self.value, rhs.value),
            ctx: self.ctx,
        })
    }

    pub fn neg(self) -> FieldElement {
        FieldElement {
            value: self.ctx.neg_raw(self.value),
            ctx: self.ctx,
        }
    }

    /// `self` raised to a signed power. A negative power of a nonzero element
    /// goes through the Fermat inverse; a negative power of zero is an error.
    pub fn pow(self, e: i64) -> Result<FieldElement> {
        let value = if e >= 0 {
            self.ctx.pow_raw(self.value, e as u64)
        } else {
            if self.value == 0 {
                return Err(Error::NotInvertible);
            }
            self.ctx
                .pow_raw(self.ctx.inv_raw(self.value), e.unsigned_abs())
        };
        Ok(FieldElement {
            value,
            ctx: self.ctx,
        })
    }

    pub(crate) fn from_raw(value: u64, ctx: FieldCtx) -> FieldElement {
        debug_assert!(value < ctx.modulus());
        FieldElement { value, ctx }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}
