//! Elements of the group algebra F_d[𝔊] of the torsion-free group
//! 𝔊 = ⟨a, b | (a²)ᵇ = a⁻², (b²)ᵃ = b⁻²⟩.
//!
//! 𝔊 has the free abelian normal subgroup 𝔥 = ⟨x, y, z⟩ of index 4, where
//! x = a², y = b², z = c² and c = ab. An element of F_d[𝔊] is stored as a
//! quadruple (p, q, r, s) of Laurent polynomials: the left coefficients on
//! the coset representatives 1, a, b, c.
//!
//! Right multiplication on the free left F_d[𝔥]-module with basis
//! (1, a, b, c) embeds F_d[𝔊] into M₄(L_d(x, y, z)); with that basis, row 0
//! of the matrix of `u` holds the quadruple of `u` itself, which is how
//! matrices are mapped back. Multiplication is available through two
//! independent routes — transported through the matrix ring, or directly as
//! a crossed product over the conjugation action and a twist table — and the
//! two are checked against each other in the test suite.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::laurent::{ExpTriple, LaurentPoly, MonomialImage};
use crate::matrix::{Generators, Mat4};

/// The four cosets of 𝔥 in 𝔊, named by their representatives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Coset {
    One,
    A,
    B,
    C,
}

impl Coset {
    pub const ALL: [Coset; 4] = [Coset::One, Coset::A, Coset::B, Coset::C];

    pub fn index(self) -> usize {
        match self {
            Coset::One => 0,
            Coset::A => 1,
            Coset::B => 2,
            Coset::C => 3,
        }
    }

    pub fn from_index(i: usize) -> Coset {
        Self::ALL[i]
    }

    pub fn label(self) -> &'static str {
        match self {
            Coset::One => "1",
            Coset::A => "a",
            Coset::B => "b",
            Coset::C => "c",
        }
    }
}

/// An element of F_d[𝔊]: left coefficients on the cosets 𝔥·1, 𝔥a, 𝔥b, 𝔥c.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupRingElem {
    ctx: FieldCtx,
    components: [LaurentPoly; 4],
}

impl GroupRingElem {
    /// Builds an element from its four components, which must share a field.
    pub fn new(
        p: LaurentPoly,
        q: LaurentPoly,
        r: LaurentPoly,
        s: LaurentPoly,
    ) -> Result<GroupRingElem> {
        let ctx = p.ctx();
        for c in [&q, &r, &s] {
            ctx.require_same(c.ctx())?;
        }
        Ok(GroupRingElem {
            ctx,
            components: [p, q, r, s],
        })
    }

    /// The zero element.
    pub fn zero(ctx: FieldCtx) -> GroupRingElem {
        GroupRingElem {
            ctx,
            components: std::array::from_fn(|_| LaurentPoly::zero(ctx)),
        }
    }

    /// The identity of the group ring.
    pub fn one(ctx: FieldCtx) -> GroupRingElem {
        let mut e = Self::zero(ctx);
        e.components[0] = LaurentPoly::one(ctx);
        e
    }

    /// `f · g` for a Laurent coefficient `f` and a coset representative `g`.
    pub fn from_coset(f: LaurentPoly, coset: Coset) -> GroupRingElem {
        let mut e = Self::zero(f.ctx());
        e.components[coset.index()] = f;
        e
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn component(&self, coset: Coset) -> &LaurentPoly {
        &self.components[coset.index()]
    }

    pub fn components(&self) -> &[LaurentPoly; 4] {
        &self.components
    }

    /// The matrix of right multiplication by this element on the basis
    /// (1, a, b, c): `D(p) + D(q)A + D(r)B + D(s)C`, with `D` the diagonal
    /// evaluation of a coefficient at (X, Y, Z).
    pub fn embed(&self) -> Result<Mat4> {
        let g = Generators::new(self.ctx);
        let mut acc = Mat4::from_laurent(&self.components[0])?;
        for (comp, gen) in [(1, &g.a), (2, &g.b), (3, &g.c)] {
            if self.components[comp].is_zero() {
                continue;
            }
            let d = Mat4::from_laurent(&self.components[comp])?;
            acc = acc.add(&d.mul(gen)?)?;
        }
        Ok(acc)
    }

    /// Reads the quadruple from row 0 of `m` and validates membership by
    /// re-embedding: any matrix outside the image of [`Self::embed`] is
    /// rejected with [`Error::NotInImage`].
    pub fn extract(m: &Mat4) -> Result<GroupRingElem> {
        let row = m.row(0);
        let candidate = GroupRingElem::new(
            row[0].clone(),
            row[1].clone(),
            row[2].clone(),
            row[3].clone(),
        )?;
        if candidate.embed()? != *m {
            return Err(Error::NotInImage);
        }
        Ok(candidate)
    }

    pub fn add(&self, rhs: &GroupRingElem) -> Result<GroupRingElem> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = Self::zero(self.ctx);
        for i in 0..4 {
            out.components[i] = self.components[i].add(&rhs.components[i])?;
        }
        Ok(out)
    }

    pub fn sub(&self, rhs: &GroupRingElem) -> Result<GroupRingElem> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = Self::zero(self.ctx);
        for i in 0..4 {
            out.components[i] = self.components[i].sub(&rhs.components[i])?;
        }
        Ok(out)
    }

    /// Product transported through the matrix representation. The image of
    /// the embedding is closed under products, so the result's row 0 can be
    /// read back without a membership check.
    pub fn mul_matrix(&self, rhs: &GroupRingElem) -> Result<GroupRingElem> {
        self.ctx.require_same(rhs.ctx)?;
        let m = self.embed()?.mul(&rhs.embed()?)?;
        let row = m.row(0);
        GroupRingElem::new(
            row[0].clone(),
            row[1].clone(),
            row[2].clone(),
            row[3].clone(),
        )
    }

    /// Product computed directly as a crossed product: distribute over the
    /// 16 coset pairs, twist the right coefficient by the conjugation action
    /// of the left representative, and land in the coset given by the table.
    pub fn mul_crossed(
        &self,
        rhs: &GroupRingElem,
        action: &CosetAction,
        table: &CosetTable,
    ) -> Result<GroupRingElem> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = Self::zero(self.ctx);
        for gi in Coset::ALL {
            let left = &self.components[gi.index()];
            if left.is_zero() {
                continue;
            }
            for gj in Coset::ALL {
                let right = &rhs.components[gj.index()];
                if right.is_zero() {
                    continue;
                }
                let twisted = action.apply(gi, right)?;
                let (shift, target) = table.product(gi, gj);
                let term = left
                    .mul(&twisted)?
                    .mul(&LaurentPoly::monomial(self.ctx.one(), shift)?)?;
                let slot = target.index();
                out.components[slot] = out.components[slot].add(&term)?;
            }
        }
        Ok(out)
    }

    /// Left multiplication by a scalar from F_d[𝔥]: every component is
    /// multiplied by `f` on the left, with no twist.
    pub fn scale_left(&self, f: &LaurentPoly) -> Result<GroupRingElem> {
        self.ctx.require_same(f.ctx())?;
        let mut out = Self::zero(self.ctx);
        for i in 0..4 {
            out.components[i] = f.mul(&self.components[i])?;
        }
        Ok(out)
    }

    /// Size of the support in 𝔊: the total number of monomials across the
    /// four components.
    pub fn support_size(&self) -> usize {
        self.components.iter().map(|c| c.num_terms()).sum()
    }

    /// A unit is trivial when it is a scalar multiple of a single group
    /// element, i.e. when the support has exactly one element.
    pub fn is_trivial_unit(&self) -> bool {
        self.support_size() == 1
    }
}

/// The conjugation action of the coset representatives on 𝔥, as
/// substitution images for (x, y, z):
///
/// * a: x ↦ x, y ↦ y⁻¹, z ↦ z⁻¹
/// * b: x ↦ x⁻¹, y ↦ y, z ↦ z⁻¹
/// * c: x ↦ x⁻¹, y ↦ y⁻¹, z ↦ z
#[derive(Debug, Clone)]
pub struct CosetAction {
    images: [[MonomialImage; 3]; 3],
}

impl CosetAction {
    pub fn new(ctx: FieldCtx) -> CosetAction {
        let var = |i, j, k| MonomialImage::monomial(ctx, ExpTriple::new(i, j, k));
        CosetAction {
            images: [
                [var(1, 0, 0), var(0, -1, 0), var(0, 0, -1)], // a
                [var(-1, 0, 0), var(0, 1, 0), var(0, 0, -1)], // b
                [var(-1, 0, 0), var(0, -1, 0), var(0, 0, 1)], // c
            ],
        }
    }

    /// The images (x, y, z) are sent to under conjugation by `rep`.
    pub fn images(&self, rep: Coset) -> Option<[MonomialImage; 3]> {
        match rep {
            Coset::One => None,
            _ => Some(self.images[rep.index() - 1]),
        }
    }

    /// Applies the action of `rep` to a coefficient.
    pub fn apply(&self, rep: Coset, p: &LaurentPoly) -> Result<LaurentPoly> {
        match self.images(rep) {
            None => Ok(p.clone()),
            Some([ix, iy, iz]) => p.substitute(ix, iy, iz),
        }
    }
}

/// Products of coset representatives: `rep_i · rep_j = twist · rep_k` with
/// the twist a group element of 𝔥 (a coefficient-1 monomial).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetTable {
    // twist exponents and target coset, indexed by (left, right)
    entries: [[(ExpTriple, Coset); 4]; 4],
}

impl CosetTable {
    /// Derives the table from the matrix representation: multiply the two
    /// representative matrices, pull the product back to a quadruple, and
    /// read off the unique nonzero component, which must be a coefficient-1
    /// monomial.
    pub fn derive(ctx: FieldCtx) -> Result<CosetTable> {
        let mut entries = [[(ExpTriple::ZERO, Coset::One); 4]; 4];
        for gi in Coset::ALL {
            for gj in Coset::ALL {
                let left = GroupRingElem::from_coset(LaurentPoly::one(ctx), gi);
                let right = GroupRingElem::from_coset(LaurentPoly::one(ctx), gj);
                let product = GroupRingElem::extract(&left.embed()?.mul(&right.embed()?)?)?;
                let mut found = None;
                for target in Coset::ALL {
                    let comp = product.component(target);
                    if comp.is_zero() {
                        continue;
                    }
                    assert!(found.is_none(), "coset product spread over several cosets");
                    let (coeff, exps) = comp
                        .as_monomial_unit()
                        .expect("coset twist must be a monomial");
                    assert_eq!(coeff.value(), 1, "coset twist must have coefficient 1");
                    found = Some((exps, target));
                }
                entries[gi.index()][gj.index()] =
                    found.expect("product of group elements cannot vanish");
            }
        }
        Ok(CosetTable { entries })
    }

    /// The twist exponents and target coset for `left · right`.
    pub fn product(&self, left: Coset, right: Coset) -> (ExpTriple, Coset) {
        self.entries[left.index()][right.index()]
    }
}
