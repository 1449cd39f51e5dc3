//! The per-point verification bundle shared by `verify` and `sweep`.

use promislow::{
    build_unit, check_base_factorization, check_determinants_prepared, GroupRingElem, LaurentPoly,
    UnitParams,
};

/// Everything the CLI reports about one parameter point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointReport {
    /// The element times its computed inverse is 1 in both orders.
    pub is_unit: bool,
    /// The element is not a trivial unit (support larger than one term).
    pub is_nontrivial: bool,
    /// Number of group elements in the support.
    pub support: usize,
    /// det of the embedded element; must be the constant 1.
    pub det_u: LaurentPoly,
    /// det of the embedded inverse; `None` when inversion failed.
    pub det_u_inv: Option<LaurentPoly>,
    /// The z ↦ 1 specialization collapses as predicted with determinant 1.
    pub z_one_lemma: bool,
    /// The x, y ↦ −1 specialization collapses as predicted with determinant 1.
    pub xy_minus_one_lemma: bool,
    /// u equals z^t times the endomorphism image of the base unit.
    pub factorization: bool,
}

impl PointReport {
    /// True iff every verdict holds.
    pub fn passed(&self) -> bool {
        self.is_unit
            && self.is_nontrivial
            && self.det_u.is_one()
            && self.det_u_inv.as_ref().is_some_and(|d| d.is_one())
            && self.z_one_lemma
            && self.xy_minus_one_lemma
            && self.factorization
    }
}

/// Builds the unit at `params`, inverts it through the matrix embedding, and
/// runs every check. Infrastructure errors (overflow, context mismatch)
/// propagate; a failed verdict is reported, not raised.
pub fn run_point(params: &UnitParams) -> promislow::Result<PointReport> {
    let u = build_unit(params)?;
    let m = u.embed()?;
    let support = u.support_size();
    let is_nontrivial = !u.is_trivial_unit();
    let factorization = check_base_factorization(params)?;

    let m_inv = match m.inverse() {
        Ok(m_inv) => m_inv,
        Err(promislow::Error::NotAUnit) => {
            return Ok(PointReport {
                is_unit: false,
                is_nontrivial,
                support,
                det_u: m.det()?,
                det_u_inv: None,
                z_one_lemma: false,
                xy_minus_one_lemma: false,
                factorization,
            });
        }
        Err(e) => return Err(e),
    };

    let u_inv = GroupRingElem::extract(&m_inv)?;
    let one = GroupRingElem::one(params.ctx());
    let is_unit = u.mul_matrix(&u_inv)? == one && u_inv.mul_matrix(&u)? == one;
    let det = check_determinants_prepared(params, &u, &m, &m_inv)?;

    Ok(PointReport {
        is_unit,
        is_nontrivial,
        support,
        det_u: det.det_u,
        det_u_inv: Some(det.det_u_inv),
        z_one_lemma: det.z_one_lemma,
        xy_minus_one_lemma: det.xy_minus_one_lemma,
        factorization,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn base_point_passes_every_check() {
        let params = UnitParams::new(2, 0, 0, 1).unwrap();
        let report = run_point(&params).unwrap();
        assert!(report.passed());
        assert_eq!(report.support, 21);
        assert_eq!(report.det_u.to_string(), "1");
        assert_eq!(report.det_u_inv.as_ref().unwrap().to_string(), "1");
    }

    #[test]
    fn twisted_points_pass_every_check() {
        for (d, t, w, n) in [(3, 1, 1, 2), (7, -2, 3, 2), (2, 1, -1, 3)] {
            let params = UnitParams::new(d, t, w, n).unwrap();
            let report = run_point(&params).unwrap();
            assert!(report.passed(), "({d},{t},{w},{n}) should pass");
        }
    }
}
