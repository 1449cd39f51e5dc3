//! Exact 4×4 matrix algebra over the Laurent ring L_d(x, y, z).
//!
//! This carries the matrix representation of the group algebra: the
//! generator matrices A, B, C and the diagonal matrices X, Y, Z they square
//! and multiply to, plus a division-free determinant and adjugate. The
//! determinant is the signed sum over all 24 permutations of S₄ and the
//! adjugate is built from 3×3 cofactors, so everything stays inside the
//! commutative ring — no localization, no elimination.

use crate::error::{Error, Result};
use crate::field::FieldCtx;
use crate::laurent::{ExpTriple, LaurentPoly, MonomialImage};

/// A 4×4 matrix with Laurent polynomial entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat4 {
    ctx: FieldCtx,
    entries: [[LaurentPoly; 4]; 4],
}

/// The matrices of the group generators and of the generators of the
/// abelian subgroup: A, B, C = AB, X = A², Y = B², Z = C².
#[derive(Debug, Clone)]
pub struct Generators {
    pub a: Mat4,
    pub b: Mat4,
    pub c: Mat4,
    pub x: Mat4,
    pub y: Mat4,
    pub z: Mat4,
}

fn mono(ctx: FieldCtx, i: i64, j: i64, k: i64) -> LaurentPoly {
    LaurentPoly::monomial(ctx.one(), ExpTriple::new(i, j, k)).expect("1 is nonzero")
}

impl Mat4 {
    pub fn zero(ctx: FieldCtx) -> Mat4 {
        Mat4 {
            ctx,
            entries: std::array::from_fn(|_| std::array::from_fn(|_| LaurentPoly::zero(ctx))),
        }
    }

    pub fn identity(ctx: FieldCtx) -> Mat4 {
        let mut m = Mat4::zero(ctx);
        for i in 0..4 {
            m.entries[i][i] = LaurentPoly::one(ctx);
        }
        m
    }

    /// Builds a matrix from explicit entries, which must all share `ctx`.
    pub fn from_entries(ctx: FieldCtx, entries: [[LaurentPoly; 4]; 4]) -> Result<Mat4> {
        for row in &entries {
            for e in row {
                ctx.require_same(e.ctx())?;
            }
        }
        Ok(Mat4 { ctx, entries })
    }

    pub fn ctx(&self) -> FieldCtx {
        self.ctx
    }

    pub fn entry(&self, row: usize, col: usize) -> &LaurentPoly {
        &self.entries[row][col]
    }

    pub fn row(&self, row: usize) -> &[LaurentPoly; 4] {
        &self.entries[row]
    }

    pub fn add(&self, rhs: &Mat4) -> Result<Mat4> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = Mat4::zero(self.ctx);
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = self.entries[i][j].add(&rhs.entries[i][j])?;
            }
        }
        Ok(out)
    }

    pub fn mul(&self, rhs: &Mat4) -> Result<Mat4> {
        self.ctx.require_same(rhs.ctx)?;
        let mut out = Mat4::zero(self.ctx);
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = LaurentPoly::zero(self.ctx);
                for k in 0..4 {
                    let a = &self.entries[i][k];
                    let b = &rhs.entries[k][j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = acc.add(&a.mul(b)?)?;
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// Determinant: the signed sum over all 24 permutations of S₄, grouped
    /// into products of complementary 2×2 minors of the top and bottom row
    /// pairs (Laplace expansion along rows 0–1). The grouping evaluates the
    /// identical 24-term expansion but shares subproducts and lets
    /// cancellation happen inside each minor before the large cross
    /// products are formed, which matters on the dense inverse matrices.
    /// [`Mat4::det_permutation_sum`] is the ungrouped form; the test suite
    /// pins their equality.
    pub fn det(&self) -> Result<LaurentPoly> {
        // (columns of rows 0-1, complementary columns of rows 2-3, parity
        // of the permutation [j, k, c0, c1])
        type MinorPair = ((usize, usize), (usize, usize), bool);
        const PAIRS: [MinorPair; 6] = [
            ((0, 1), (2, 3), true),
            ((0, 2), (1, 3), false),
            ((0, 3), (1, 2), true),
            ((1, 2), (0, 3), true),
            ((1, 3), (0, 2), false),
            ((2, 3), (0, 1), true),
        ];
        let mut acc = LaurentPoly::zero(self.ctx);
        for ((j, k), (c0, c1), positive) in PAIRS {
            let top = self.minor2(0, 1, j, k)?;
            if top.is_zero() {
                continue;
            }
            let bottom = self.minor2(2, 3, c0, c1)?;
            if bottom.is_zero() {
                continue;
            }
            let prod = top.mul(&bottom)?;
            acc = if positive {
                acc.add(&prod)?
            } else {
                acc.sub(&prod)?
            };
        }
        Ok(acc)
    }

    /// The 2×2 minor on rows `r0 < r1` and columns `c0 < c1`.
    fn minor2(&self, r0: usize, r1: usize, c0: usize, c1: usize) -> Result<LaurentPoly> {
        let main = self.entries[r0][c0].mul(&self.entries[r1][c1])?;
        let anti = self.entries[r0][c1].mul(&self.entries[r1][c0])?;
        main.sub(&anti)
    }

    /// Determinant as the literal signed sum over all 24 permutations,
    /// with no term grouping; retained as the independent oracle for
    /// [`Mat4::det`].
    pub fn det_permutation_sum(&self) -> Result<LaurentPoly> {
        let mut acc = LaurentPoly::zero(self.ctx);
        for (perm, even) in permutations4() {
            let factors = [
                &self.entries[0][perm[0]],
                &self.entries[1][perm[1]],
                &self.entries[2][perm[2]],
                &self.entries[3][perm[3]],
            ];
            if factors.iter().any(|p| p.is_zero()) {
                continue;
            }
            let mut prod = factors[0].mul(factors[1])?;
            prod = prod.mul(factors[2])?;
            prod = prod.mul(factors[3])?;
            acc = if even {
                acc.add(&prod)?
            } else {
                acc.sub(&prod)?
            };
        }
        Ok(acc)
    }

    /// Classical adjugate: the transpose of the matrix of signed 3×3
    /// cofactors. Satisfies `M * adj(M) = adj(M) * M = det(M) * I`.
    pub fn adjugate(&self) -> Result<Mat4> {
        let mut out = Mat4::zero(self.ctx);
        for i in 0..4 {
            for j in 0..4 {
                let minor = self.minor3(i, j);
                let cof = det3(self.ctx, &minor)?;
                out.entries[j][i] = if (i + j) % 2 == 0 { cof } else { cof.neg() };
            }
        }
        Ok(out)
    }

    fn minor3(&self, skip_row: usize, skip_col: usize) -> [[&LaurentPoly; 3]; 3] {
        let rows: Vec<usize> = (0..4).filter(|&r| r != skip_row).collect();
        let cols: Vec<usize> = (0..4).filter(|&c| c != skip_col).collect();
        std::array::from_fn(|r| std::array::from_fn(|c| &self.entries[rows[r]][cols[c]]))
    }

    /// Entrywise substitution of the variables.
    pub fn substitute(
        &self,
        img_x: MonomialImage,
        img_y: MonomialImage,
        img_z: MonomialImage,
    ) -> Result<Mat4> {
        let mut out = Mat4::zero(self.ctx);
        for i in 0..4 {
            for j in 0..4 {
                out.entries[i][j] = self.entries[i][j].substitute(img_x, img_y, img_z)?;
            }
        }
        Ok(out)
    }

    /// Entrywise product with a scalar polynomial.
    pub fn scale(&self, p: &LaurentPoly) -> Result<Mat4> {
        self.ctx.require_same(p.ctx())?;
        let mut out = Mat4::zero(self.ctx);
        for i in 0..4 {
            for j in 0..4 {
                if !self.entries[i][j].is_zero() {
                    out.entries[i][j] = self.entries[i][j].mul(p)?;
                }
            }
        }
        Ok(out)
    }

    /// The image of `p` under the evaluation x ↦ X, y ↦ Y, z ↦ Z. Since X,
    /// Y, Z are diagonal the result is the diagonal matrix whose entries are
    /// `p` twisted by the conjugation action of each coset representative:
    /// `diag(p(x,y,z), p(x,y⁻¹,z⁻¹), p(x⁻¹,y,z⁻¹), p(x⁻¹,y⁻¹,z))`.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Mat4> {
        let ctx = p.ctx();
        let mut diag: [LaurentPoly; 4] = std::array::from_fn(|_| LaurentPoly::zero(ctx));
        for (&e, &c) in p.raw_terms() {
            let ni = e.i.checked_neg().ok_or(Error::ExponentOverflow)?;
            let nj = e.j.checked_neg().ok_or(Error::ExponentOverflow)?;
            let nk = e.k.checked_neg().ok_or(Error::ExponentOverflow)?;
            diag[0].insert_term(e, c);
            diag[1].insert_term(ExpTriple::new(e.i, nj, nk), c);
            diag[2].insert_term(ExpTriple::new(ni, e.j, nk), c);
            diag[3].insert_term(ExpTriple::new(ni, nj, e.k), c);
        }
        let mut out = Mat4::zero(ctx);
        for (i, d) in diag.into_iter().enumerate() {
            out.entries[i][i] = d;
        }
        Ok(out)
    }

    /// Inverse of a matrix whose determinant is a unit of the Laurent ring:
    /// `det⁻¹ * adj(M)`. Fails with [`Error::NotAUnit`] if the determinant
    /// is not a monomial.
    pub fn inverse(&self) -> Result<Mat4> {
        let det = self.det()?;
        if det.as_monomial_unit().is_none() {
            return Err(Error::NotAUnit);
        }
        let det_inv = det.pow(-1)?;
        self.adjugate()?.scale(&det_inv)
    }
}

/// 3×3 determinant by expansion along the first row.
fn det3(ctx: FieldCtx, m: &[[&LaurentPoly; 3]; 3]) -> Result<LaurentPoly> {
    let mut acc = LaurentPoly::zero(ctx);
    for (c, sign_pos) in [(0usize, true), (1, false), (2, true)] {
        if m[0][c].is_zero() {
            continue;
        }
        let (c1, c2) = match c {
            0 => (1, 2),
            1 => (0, 2),
            _ => (0, 1),
        };
        let minor = m[1][c1].mul(m[2][c2])?.sub(&m[1][c2].mul(m[2][c1])?)?;
        let term = m[0][c].mul(&minor)?;
        acc = if sign_pos {
            acc.add(&term)?
        } else {
            acc.sub(&term)?
        };
    }
    Ok(acc)
}

/// All 24 permutations of (0, 1, 2, 3) with their parity (`true` = even).
fn permutations4() -> Vec<([usize; 4], bool)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    for &v in &p {
                        seen[v] = true;
                    }
                    if seen != [true; 4] {
                        continue;
                    }
                    let mut inversions = 0;
                    for s in 0..4 {
                        for t in s + 1..4 {
                            if p[s] > p[t] {
                                inversions += 1;
                            }
                        }
                    }
                    out.push((p, inversions % 2 == 0));
                }
            }
        }
    }
    out
}

impl Generators {
    /// The generator matrices over GF(d):
    ///
    /// ```text
    /// A = [0 1 0 0; x 0 0 0; 0 0 0 x⁻¹yz⁻¹; 0 0 y⁻¹z 0]
    /// B = [0 0 1 0; 0 0 0 1; y 0 0 0; 0 y⁻¹ 0 0]
    /// C = AB
    /// X = A² = diag(x, x, x⁻¹, x⁻¹)
    /// Y = B² = diag(y, y⁻¹, y, y⁻¹)
    /// Z = C² = diag(z, z⁻¹, z⁻¹, z)
    /// ```
    pub fn new(ctx: FieldCtx) -> Generators {
        let mut a = Mat4::zero(ctx);
        a.entries[0][1] = LaurentPoly::one(ctx);
        a.entries[1][0] = mono(ctx, 1, 0, 0);
        a.entries[2][3] = mono(ctx, -1, 1, -1);
        a.entries[3][2] = mono(ctx, 0, -1, 1);

        let mut b = Mat4::zero(ctx);
        b.entries[0][2] = LaurentPoly::one(ctx);
        b.entries[1][3] = LaurentPoly::one(ctx);
        b.entries[2][0] = mono(ctx, 0, 1, 0);
        b.entries[3][1] = mono(ctx, 0, -1, 0);

        let mut c = Mat4::zero(ctx);
        c.entries[0][3] = LaurentPoly::one(ctx);
        c.entries[1][2] = mono(ctx, 1, 0, 0);
        c.entries[2][1] = mono(ctx, -1, 0, -1);
        c.entries[3][0] = mono(ctx, 0, 0, 1);

        let diag = |exps: [[i64; 3]; 4]| {
            let mut m = Mat4::zero(ctx);
            for (i, [ei, ej, ek]) in exps.into_iter().enumerate() {
                m.entries[i][i] = mono(ctx, ei, ej, ek);
            }
            m
        };
        let x = diag([[1, 0, 0], [1, 0, 0], [-1, 0, 0], [-1, 0, 0]]);
        let y = diag([[0, 1, 0], [0, -1, 0], [0, 1, 0], [0, -1, 0]]);
        let z = diag([[0, 0, 1], [0, 0, -1], [0, 0, -1], [0, 0, 1]]);

        Generators { a, b, c, x, y, z }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(d: i64) -> FieldCtx {
        FieldCtx::new(d).unwrap()
    }

    #[test]
    fn generator_products() {
        for d in [2, 3, 5] {
            let c = ctx(d);
            let g = Generators::new(c);
            assert_eq!(g.a.mul(&g.a).unwrap(), g.x, "A^2 = X at d = {d}");
            assert_eq!(g.b.mul(&g.b).unwrap(), g.y, "B^2 = Y at d = {d}");
            assert_eq!(g.a.mul(&g.b).unwrap(), g.c, "AB = C at d = {d}");
            assert_eq!(g.c.mul(&g.c).unwrap(), g.z, "C^2 = Z at d = {d}");
        }
    }

    #[test]
    fn identity_is_neutral() {
        let c = ctx(3);
        let g = Generators::new(c);
        let id = Mat4::identity(c);
        assert_eq!(g.a.mul(&id).unwrap(), g.a);
        assert_eq!(id.mul(&g.b).unwrap(), g.b);
    }

    #[test]
    fn generator_determinants() {
        let c = ctx(2);
        let g = Generators::new(c);
        assert!(g.a.det().unwrap().is_one());
        assert!(g.b.det().unwrap().is_one());
        assert!(g.c.det().unwrap().is_one());
        assert!(g.x.det().unwrap().is_one());
        assert!(Mat4::identity(c).det().unwrap().is_one());
    }

    #[test]
    fn grouped_determinant_matches_permutation_sum() {
        for d in [2i64, 3, 5] {
            let c = ctx(d);
            let g = Generators::new(c);
            let sum_ab = g.a.add(&g.b).unwrap();
            let mixed = g.a.mul(&g.b).unwrap().add(&g.x).unwrap().add(&g.z).unwrap();
            for m in [&g.a, &g.b, &g.c, &g.x, &g.y, &g.z, &sum_ab, &mixed] {
                assert_eq!(m.det().unwrap(), m.det_permutation_sum().unwrap());
            }
            assert_eq!(
                Mat4::zero(c).det().unwrap(),
                Mat4::zero(c).det_permutation_sum().unwrap()
            );
        }
    }

    #[test]
    fn adjugate_examples() {
        let c = ctx(5);
        let id = Mat4::identity(c);
        assert_eq!(id.adjugate().unwrap(), id);

        let g = Generators::new(c);
        // adj(A) * A = det(A) * I = I
        assert_eq!(g.a.adjugate().unwrap().mul(&g.a).unwrap(), id);

        // adj(diag(x,1,1,1)) = diag(1,x,x,x)
        let mut m = Mat4::identity(c);
        m.entries[0][0] = mono(c, 1, 0, 0);
        let adj = m.adjugate().unwrap();
        let mut expect = Mat4::zero(c);
        expect.entries[0][0] = LaurentPoly::one(c);
        for i in 1..4 {
            expect.entries[i][i] = mono(c, 1, 0, 0);
        }
        assert_eq!(adj, expect);
    }

    #[test]
    fn substitution_on_generators() {
        let c = ctx(3);
        let g = Generators::new(c);
        // z -> 1 sends Z to the identity
        let zbar =
            g.z.substitute(
                MonomialImage::var_x(c),
                MonomialImage::var_y(c),
                MonomialImage::one(c),
            )
            .unwrap();
        assert_eq!(zbar, Mat4::identity(c));

        // x,y -> -1 sends X to -I
        let xt =
            g.x.substitute(
                MonomialImage::neg_one(c),
                MonomialImage::neg_one(c),
                MonomialImage::var_z(c),
            )
            .unwrap();
        let neg_i = Mat4::from_laurent(&LaurentPoly::constant(c.from_int(-1))).unwrap();
        assert_eq!(xt, neg_i);

        // identity substitution fixes A
        let [ix, iy, iz] = MonomialImage::identity(c);
        assert_eq!(g.a.substitute(ix, iy, iz).unwrap(), g.a);
    }

    #[test]
    fn from_laurent_examples() {
        let c = ctx(2);
        let g = Generators::new(c);
        assert_eq!(Mat4::from_laurent(&LaurentPoly::var_x(c)).unwrap(), g.x);
        assert_eq!(Mat4::from_laurent(&LaurentPoly::var_y(c)).unwrap(), g.y);
        assert_eq!(Mat4::from_laurent(&LaurentPoly::var_z(c)).unwrap(), g.z);
        assert_eq!(
            Mat4::from_laurent(&LaurentPoly::one(c)).unwrap(),
            Mat4::identity(c)
        );
        // h = (1-z)^0 = 1 at d = 2
        let h = LaurentPoly::one(c)
            .sub(&LaurentPoly::var_z(c))
            .unwrap()
            .pow(0)
            .unwrap();
        assert_eq!(Mat4::from_laurent(&h).unwrap(), Mat4::identity(c));
    }

    #[test]
    fn defining_relations() {
        for d in [2, 5] {
            let c = ctx(d);
            let g = Generators::new(c);
            let xinv = g.x.inverse().unwrap();
            let yinv = g.y.inverse().unwrap();
            let zinv = g.z.inverse().unwrap();
            // conjugation: a fixes x, inverts y and z; b inverts x and z, fixes y
            assert_eq!(g.x.mul(&g.b).unwrap(), g.b.mul(&xinv).unwrap());
            assert_eq!(g.y.mul(&g.a).unwrap(), g.a.mul(&yinv).unwrap());
            assert_eq!(g.z.mul(&g.a).unwrap(), g.a.mul(&zinv).unwrap());
            assert_eq!(g.z.mul(&g.b).unwrap(), g.b.mul(&zinv).unwrap());
            assert_eq!(g.x.mul(&g.a).unwrap(), g.a.mul(&g.x).unwrap());
            assert_eq!(g.y.mul(&g.b).unwrap(), g.b.mul(&g.y).unwrap());
            // X, Y, Z pairwise commute
            assert_eq!(g.x.mul(&g.y).unwrap(), g.y.mul(&g.x).unwrap());
            assert_eq!(g.x.mul(&g.z).unwrap(), g.z.mul(&g.x).unwrap());
            assert_eq!(g.y.mul(&g.z).unwrap(), g.z.mul(&g.y).unwrap());
        }
    }

    #[test]
    fn permutation_table_is_complete() {
        let perms = permutations4();
        assert_eq!(perms.len(), 24);
        assert_eq!(perms.iter().filter(|(_, even)| *even).count(), 12);
    }

    #[test]
    fn inverse_requires_monomial_determinant() {
        let c = ctx(2);
        let mut m = Mat4::identity(c);
        m.entries[0][0] = LaurentPoly::one(c).add(&LaurentPoly::var_x(c)).unwrap();
        assert_eq!(m.inverse(), Err(Error::NotAUnit));
    }
}
