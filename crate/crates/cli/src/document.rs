//! Bit-exact serialization of group-ring elements.
//!
//! The JSON document is diff-friendly and canonical: object keys in a fixed
//! order, each component a list of `[coefficient, [i, j, k]]` pairs sorted
//! strictly ascending in lexicographic order on the exponent triple, all
//! coefficients canonical representatives in [1, d). The text rendering is
//! four labeled lines, one per coset, with terms in the same order.

use anyhow::{bail, Context};
use promislow::{Coset, ExpTriple, GroupRingElem, LaurentPoly, UnitParams};
use serde::{Deserialize, Serialize};

/// One monomial: coefficient first, exponents of (x, y, z) second.
pub type Term = (u64, [i64; 3]);

/// A serialized unit together with the parameters that produced it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct UnitDocument {
    pub d: i64,
    pub t: i64,
    pub w: i64,
    pub n: u32,
    pub components: Components,
}

/// Term lists for the four cosets, keyed by representative.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Components {
    #[serde(rename = "1")]
    pub one: Vec<Term>,
    pub a: Vec<Term>,
    pub b: Vec<Term>,
    pub c: Vec<Term>,
}

impl UnitDocument {
    /// Serializes an element under the parameters it was built from (the
    /// parameters are carried as metadata; the components are the data).
    pub fn from_element(params: &UnitParams, elem: &GroupRingElem) -> UnitDocument {
        let comp = |coset: Coset| -> Vec<Term> {
            elem.component(coset)
                .sorted_terms()
                .into_iter()
                .map(|(e, c)| (c.value(), [e.i, e.j, e.k]))
                .collect()
        };
        UnitDocument {
            d: params.d() as i64,
            t: params.t(),
            w: params.w(),
            n: params.n(),
            components: Components {
                one: comp(Coset::One),
                a: comp(Coset::A),
                b: comp(Coset::B),
                c: comp(Coset::C),
            },
        }
    }

    /// Compact canonical JSON (no trailing newline).
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("a unit document always serializes")
    }

    /// Parses and validates a JSON document.
    pub fn from_json(input: &str) -> anyhow::Result<UnitDocument> {
        let doc: UnitDocument = serde_json::from_str(input).context("malformed JSON document")?;
        doc.validate()?;
        Ok(doc)
    }

    /// Checks the document invariants: d prime, n ≥ 1, coefficients in
    /// [1, d), exponent triples strictly ascending in lexicographic order.
    pub fn validate(&self) -> anyhow::Result<()> {
        if self.n < 1 {
            bail!("n must be at least 1 (got {})", self.n);
        }
        let params = UnitParams::new(self.d, self.t, self.w, self.n)
            .map_err(|e| anyhow::anyhow!("invalid parameters: {e}"))?;
        let d = params.d();
        for (label, terms) in self.labeled_components() {
            let mut prev: Option<ExpTriple> = None;
            for &(coeff, [i, j, k]) in terms {
                if coeff < 1 || coeff >= d {
                    bail!("component {label}: coefficient {coeff} outside [1, {d})");
                }
                let exps = ExpTriple::new(i, j, k);
                if let Some(p) = prev {
                    if p >= exps {
                        bail!("component {label}: exponent triples not strictly ascending");
                    }
                }
                prev = Some(exps);
            }
        }
        Ok(())
    }

    /// Rebuilds the parameters and the group-ring element.
    pub fn to_element(&self) -> anyhow::Result<(UnitParams, GroupRingElem)> {
        self.validate()?;
        let params = UnitParams::new(self.d, self.t, self.w, self.n)
            .map_err(|e| anyhow::anyhow!("invalid parameters: {e}"))?;
        let ctx = params.ctx();
        let build = |terms: &Vec<Term>| -> anyhow::Result<LaurentPoly> {
            let mut poly = LaurentPoly::zero(ctx);
            for &(coeff, [i, j, k]) in terms {
                let m = LaurentPoly::monomial(ctx.from_int(coeff as i64), ExpTriple::new(i, j, k))?;
                poly = poly.add(&m)?;
            }
            Ok(poly)
        };
        let elem = GroupRingElem::new(
            build(&self.components.one)?,
            build(&self.components.a)?,
            build(&self.components.b)?,
            build(&self.components.c)?,
        )?;
        Ok((params, elem))
    }

    fn labeled_components(&self) -> [(&'static str, &Vec<Term>); 4] {
        [
            ("1", &self.components.one),
            ("a", &self.components.a),
            ("b", &self.components.b),
            ("c", &self.components.c),
        ]
    }
}

/// Canonical text rendering: one labeled line per coset, terms in ascending
/// lexicographic order, trailing newline.
pub fn render_text(elem: &GroupRingElem) -> String {
    let mut out = String::new();
    for coset in Coset::ALL {
        out.push_str(coset.label());
        out.push_str(": ");
        out.push_str(&elem.component(coset).to_string());
        out.push('\n');
    }
    out
}
