//! The JSON instance file: every matrix is a list of `[row, col, "p/q"]`
//! triples sorted by (row, col), every vector a list of `[index, "p/q"]` pairs.

use std::io;

use serde::{Deserialize, Serialize};

use scalext_core::catalog::{InstanceDescriptor, Overrides, Perturbation};
use scalext_core::scalarext::{paired_yd_from_left, PairingIso};
use scalext_core::ydstruct::{LeftRightYD, RightLeftYD};
use scalext_core::{CoeffVector, ExactScalar, FinAlgebra, FinCoalgebra, FinHopf, LinMap};

#[derive(Debug, thiserror::Error)]
pub enum FormatError {
    #[error("parse error at {location}: {reason}")]
    Parse { location: String, reason: String },
    #[error("dimension mismatch at {location}: {reason}")]
    DimensionMismatch { location: String, reason: String },
    #[error("invalid structure at {location}: {source}")]
    Structure { location: String, source: scalext_core::Error },
    #[error(transparent)]
    Io(#[from] io::Error),
}

fn parse_err(location: &str, reason: impl Into<String>) -> FormatError {
    FormatError::Parse { location: location.into(), reason: reason.into() }
}

fn structure(location: &str) -> impl FnOnce(scalext_core::Error) -> FormatError + '_ {
    move |source| FormatError::Structure { location: location.into(), source }
}

pub type Triple = (usize, usize, String);
pub type Entry = (usize, String);

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraBlock {
    pub labels: Vec<String>,
    pub mult: Vec<Triple>,
    pub unit: Vec<Entry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HopfBlock {
    pub labels: Vec<String>,
    pub mult: Vec<Triple>,
    pub unit: Vec<Entry>,
    pub comult: Vec<Triple>,
    pub counit: Vec<Triple>,
    pub antipode: Vec<Triple>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct YdBlock {
    pub algebra: AlgebraBlock,
    pub action: Vec<Triple>,
    pub coaction: Vec<Triple>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OverridesBlock {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub antipode: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_action: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left_coaction: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_action: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_coaction: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<Triple>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PerturbationBlock {
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub suite: String,
    pub expected_failing: Vec<String>,
    pub overrides: OverridesBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub field: String,
    pub name: String,
    #[serde(default)]
    pub description: String,
    pub hopf: HopfBlock,
    pub left_yd: YdBlock,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right_yd: Option<YdBlock>,
    /// φ: L → R. Defaults to the identity, or to θ⁻¹ when only θ is given.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub phi: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theta: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<Vec<Triple>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub perturbations: Vec<PerturbationBlock>,
}

fn scalar(s: &str, location: &str) -> Result<ExactScalar, FormatError> {
    s.parse().map_err(|e: scalext_core::ParseScalarError| parse_err(location, e.to_string()))
}

fn render(c: &ExactScalar) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

/// `rows × cols` matrix; out-of-range indices are a dimension mismatch, repeated positions a parse error.
fn matrix(t: &[Triple], rows: usize, cols: usize, location: &str) -> Result<LinMap, FormatError> {
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::with_capacity(t.len());
    for (i, (r, c, v)) in t.iter().enumerate() {
        let loc = format!("{location}[{i}]");
        if *r >= rows || *c >= cols {
            return Err(FormatError::DimensionMismatch {
                location: loc,
                reason: format!("entry ({r}, {c}) outside a {rows}x{cols} matrix"),
            });
        }
        if !seen.insert((*r, *c)) {
            return Err(parse_err(&loc, format!("entry ({r}, {c}) given twice")));
        }
        out.push((*r, *c, scalar(v, &loc)?));
    }
    LinMap::from_triples(cols, rows, &out).map_err(structure(location))
}

fn vector(e: &[Entry], dim: usize, location: &str) -> Result<CoeffVector, FormatError> {
    let t: Vec<Triple> = e.iter().map(|(i, v)| (*i, 0, v.clone())).collect();
    Ok(matrix(&t, dim, 1, location)?.column(0).clone())
}

fn triples(f: &LinMap) -> Vec<Triple> {
    f.triples().into_iter().map(|(r, c, v)| (r, c, render(&v))).collect()
}

fn entries(v: &CoeffVector) -> Vec<Entry> {
    v.iter().map(|(i, c)| (i, render(c))).collect()
}

fn algebra(b: &AlgebraBlock, location: &str) -> Result<FinAlgebra, FormatError> {
    let m = b.labels.len();
    if m == 0 {
        return Err(parse_err(&format!("{location}.labels"), "empty basis"));
    }
    let mult = matrix(&b.mult, m, m * m, &format!("{location}.mult"))?;
    let unit = vector(&b.unit, m, &format!("{location}.unit"))?;
    FinAlgebra::new(b.labels.clone(), mult, unit).map_err(structure(location))
}

fn hopf(b: &HopfBlock) -> Result<FinHopf, FormatError> {
    let n = b.labels.len();
    if n == 0 {
        return Err(parse_err("hopf.labels", "empty basis"));
    }
    let alg = FinAlgebra::new(b.labels.clone(), matrix(&b.mult, n, n * n, "hopf.mult")?, vector(&b.unit, n, "hopf.unit")?).map_err(structure("hopf"))?;
    let coalg = FinCoalgebra::new(matrix(&b.comult, n * n, n, "hopf.comult")?, matrix(&b.counit, 1, n, "hopf.counit")?).map_err(structure("hopf"))?;
    FinHopf::new(alg, coalg, matrix(&b.antipode, n, n, "hopf.antipode")?).map_err(structure("hopf"))
}

fn left_yd(h: &FinHopf, b: &YdBlock) -> Result<LeftRightYD, FormatError> {
    let alg = algebra(&b.algebra, "left_yd.algebra")?;
    let (n, m) = (h.dim(), alg.dim());
    let action = matrix(&b.action, m, n * m, "left_yd.action")?;
    let coaction = matrix(&b.coaction, m * n, m, "left_yd.coaction")?;
    LeftRightYD::new(h.clone(), alg, action, coaction).map_err(structure("left_yd"))
}

fn right_yd(h: &FinHopf, b: &YdBlock) -> Result<RightLeftYD, FormatError> {
    let alg = algebra(&b.algebra, "right_yd.algebra")?;
    let (n, m) = (h.dim(), alg.dim());
    let action = matrix(&b.action, m, m * n, "right_yd.action")?;
    let coaction = matrix(&b.coaction, n * m, m, "right_yd.coaction")?;
    RightLeftYD::new(h.clone(), alg, action, coaction).map_err(structure("right_yd"))
}

fn yd_block(alg: &FinAlgebra, action: &LinMap, coaction: &LinMap) -> YdBlock {
    YdBlock {
        algebra: AlgebraBlock { labels: alg.labels().to_vec(), mult: triples(alg.mult()), unit: entries(alg.unit()) },
        action: triples(action),
        coaction: triples(coaction),
    }
}

fn overrides(b: &OverridesBlock, n: usize, m: usize, location: &str) -> Result<Overrides, FormatError> {
    let get = |x: &Option<Vec<Triple>>, rows: usize, cols: usize, field: &str| -> Result<Option<LinMap>, FormatError> {
        x.as_ref().map(|t| matrix(t, rows, cols, &format!("{location}.{field}"))).transpose()
    };
    Ok(Overrides {
        antipode: get(&b.antipode, n, n, "antipode")?,
        left_action: get(&b.left_action, m, n * m, "left_action")?,
        left_coaction: get(&b.left_coaction, m * n, m, "left_coaction")?,
        right_action: get(&b.right_action, m, m * n, "right_action")?,
        right_coaction: get(&b.right_coaction, n * m, m, "right_coaction")?,
        tau: get(&b.tau, m * n, m * n, "tau")?,
    })
}

fn overrides_block(o: &Overrides) -> OverridesBlock {
    let t = |x: &Option<LinMap>| x.as_ref().map(triples);
    OverridesBlock {
        antipode: t(&o.antipode),
        left_action: t(&o.left_action),
        left_coaction: t(&o.left_coaction),
        right_action: t(&o.right_action),
        right_coaction: t(&o.right_coaction),
        tau: t(&o.tau),
    }
}

impl InstanceFile {
    /// Structural validation only: syntax, indices, shapes. Axioms are left to the suites,
    /// except that a missing right block is derived from the left one and needs them.
    pub fn build(&self) -> Result<InstanceDescriptor, FormatError> {
        if self.field != "Q" {
            return Err(parse_err("field", format!("unsupported field {:?}", self.field)));
        }
        let h = hopf(&self.hopf)?;
        let left = left_yd(&h, &self.left_yd)?;
        let m = left.adim();
        let phi = match (&self.phi, &self.theta) {
            (Some(p), _) => matrix(p, m, m, "phi")?,
            (None, Some(t)) => {
                let theta = matrix(t, m, m, "theta")?;
                scalext_core::exactla::inverse(&theta).ok_or_else(|| parse_err("theta", "matrix is singular"))?
            }
            (None, None) => LinMap::identity(m),
        };
        let right = match &self.right_yd {
            Some(b) => {
                let r = right_yd(&h, b)?;
                if r.adim() != m {
                    return Err(FormatError::DimensionMismatch {
                        location: "right_yd.algebra".into(),
                        reason: format!("right algebra has dimension {}, left has {m}", r.adim()),
                    });
                }
                r
            }
            None => paired_yd_from_left(&left, &PairingIso::Phi(phi.clone())).map_err(structure("right_yd"))?,
        };
        let mut d = InstanceDescriptor::from_parts(&self.name, &self.description, left, right, phi);
        d.tau_override = self.tau.as_ref().map(|t| matrix(t, m * h.dim(), m * h.dim(), "tau")).transpose()?;
        for (i, p) in self.perturbations.iter().enumerate() {
            let loc = format!("perturbations[{i}]");
            d.perturbations.push(Perturbation {
                name: p.name.clone(),
                description: p.description.clone(),
                suite: p.suite.clone(),
                expected_failing: p.expected_failing.clone(),
                overrides: overrides(&p.overrides, h.dim(), m, &format!("{loc}.overrides"))?,
            });
        }
        Ok(d)
    }

    pub fn from_descriptor(d: &InstanceDescriptor) -> Self {
        let h = &d.hopf;
        let (l, r) = (&d.left_yd, &d.right_yd);
        InstanceFile {
            field: "Q".into(),
            name: d.name.clone(),
            description: d.description.clone(),
            hopf: HopfBlock {
                labels: h.labels().to_vec(),
                mult: triples(h.algebra().mult()),
                unit: entries(h.unit()),
                comult: triples(h.coalgebra().comult()),
                counit: triples(h.coalgebra().counit()),
                antipode: triples(h.antipode()),
            },
            left_yd: yd_block(&l.alg, &l.action, &l.coaction),
            right_yd: Some(yd_block(&r.alg, &r.action, &r.coaction)),
            phi: Some(triples(&d.phi)),
            theta: None,
            tau: d.tau_override.as_ref().map(triples),
            perturbations: d
                .perturbations
                .iter()
                .map(|p| PerturbationBlock {
                    name: p.name.clone(),
                    description: p.description.clone(),
                    suite: p.suite.clone(),
                    expected_failing: p.expected_failing.clone(),
                    overrides: overrides_block(&p.overrides),
                })
                .collect(),
        }
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceFile, FormatError> {
    serde_json::from_str(text).map_err(|e| parse_err(&format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

/// Parses and builds in one step.
pub fn load_instance(text: &str) -> Result<InstanceDescriptor, FormatError> {
    parse_instance(text)?.build()
}

pub fn export_instance(d: &InstanceDescriptor) -> String {
    crate::json::to_string(&InstanceFile::from_descriptor(d))
}
