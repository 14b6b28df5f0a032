//! JSON documents for relations and reports, and the complex literal syntax
//! used on the command line.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::RelError;
use crate::linalg::{CMat, CVec};
use crate::relation::{ClassificationReport, LinearRelation};
use crate::spectra::{self, SpectrumReport};
use crate::tolerance::ToleranceProfile;
use crate::C64;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("schema error: {0}")]
    Schema(String),
    #[error(transparent)]
    Relation(#[from] RelError),
}

impl From<serde_json::Error> for IoError {
    fn from(e: serde_json::Error) -> Self {
        IoError::Schema(e.to_string())
    }
}

/// `[re, im]`.
pub type ComplexDoc = [f64; 2];

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PairDoc {
    pub f: Vec<ComplexDoc>,
    pub g: Vec<ComplexDoc>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RelationDocument {
    pub ambient_dim: usize,
    pub spanning_pairs: Vec<PairDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<ToleranceProfile>,
}

fn to_vec(v: &[ComplexDoc]) -> CVec {
    CVec::from_iterator(v.len(), v.iter().map(|[re, im]| C64::new(*re, *im)))
}

fn from_vec(v: impl Iterator<Item = C64>) -> Vec<ComplexDoc> {
    v.map(|z| [z.re, z.im]).collect()
}

impl RelationDocument {
    pub fn validate(&self) -> Result<(), IoError> {
        if self.spanning_pairs.is_empty() {
            return Err(IoError::Schema("spanning_pairs: at least one pair is required".into()));
        }
        for (j, p) in self.spanning_pairs.iter().enumerate() {
            for (name, v) in [("f", &p.f), ("g", &p.g)] {
                if v.len() != self.ambient_dim {
                    return Err(IoError::Schema(format!(
                        "spanning_pairs[{j}].{name}: length {} differs from ambient_dim {}",
                        v.len(),
                        self.ambient_dim
                    )));
                }
                if v.iter().flatten().any(|x| !x.is_finite()) {
                    return Err(IoError::Schema(format!(
                        "spanning_pairs[{j}].{name}: non-finite entry"
                    )));
                }
            }
        }
        if let Some(t) = &self.tol {
            t.validate()?;
        }
        Ok(())
    }

    pub fn to_relation(&self, default_tol: ToleranceProfile) -> Result<LinearRelation, IoError> {
        self.validate()?;
        let pairs: Vec<(CVec, CVec)> = self
            .spanning_pairs
            .iter()
            .map(|p| (to_vec(&p.f), to_vec(&p.g)))
            .collect();
        Ok(LinearRelation::from_pairs(
            self.ambient_dim,
            &pairs,
            self.tol.unwrap_or(default_tol),
        )?)
    }

    /// One pair per orthonormal basis column.
    pub fn from_relation(t: &LinearRelation) -> Self {
        let f = t.f_block();
        let g = t.g_block();
        Self {
            ambient_dim: t.n(),
            spanning_pairs: (0..t.dim())
                .map(|j| PairDoc {
                    f: from_vec(f.column(j).iter().copied()),
                    g: from_vec(g.column(j).iter().copied()),
                })
                .collect(),
            tol: Some(*t.tol()),
        }
    }
}

pub fn parse_document(bytes: &[u8]) -> Result<RelationDocument, IoError> {
    let doc: RelationDocument = serde_json::from_slice(bytes)?;
    doc.validate()?;
    Ok(doc)
}

pub fn parse_relation(bytes: &[u8], default_tol: ToleranceProfile) -> Result<LinearRelation, IoError> {
    parse_document(bytes)?.to_relation(default_tol)
}

/// A complex matrix as a list of rows of `[re, im]` entries.
pub fn parse_matrix(bytes: &[u8]) -> Result<CMat, IoError> {
    let rows: Vec<Vec<ComplexDoc>> = serde_json::from_slice(bytes)?;
    let r = rows.len();
    let c = rows.first().map(|x| x.len()).unwrap_or(0);
    if let Some(i) = rows.iter().position(|x| x.len() != c) {
        return Err(IoError::Schema(format!("matrix row {i} has length {} instead of {c}", rows[i].len())));
    }
    if rows.iter().flatten().flatten().any(|x| !x.is_finite()) {
        return Err(IoError::Schema("matrix has a non-finite entry".into()));
    }
    Ok(CMat::from_fn(r, c, |i, j| C64::new(rows[i][j][0], rows[i][j][1])))
}

/// Parses `a`, `bi`, `a+bi`, `a-bi`, `i`, `-i` (whitespace ignored).
pub fn parse_complex(s: &str) -> Result<C64, IoError> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || IoError::Schema(format!("malformed complex literal {s:?}"));
    let num = |x: &str| -> Result<f64, IoError> {
        let v: f64 = x.parse().map_err(|_| bad())?;
        if v.is_finite() {
            Ok(v)
        } else {
            Err(bad())
        }
    };
    let unit = |x: &str| -> Result<f64, IoError> {
        match x {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => num(x),
        }
    };
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(C64::new(num(&t)?, 0.0));
    };
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    match split {
        Some(k) => Ok(C64::new(num(&body[..k])?, unit(&body[k..])?)),
        None => Ok(C64::new(0.0, unit(body)?)),
    }
}

pub fn parse_complex_list(s: &str) -> Result<Vec<C64>, IoError> {
    s.split(',').map(parse_complex).collect()
}

/// Rounds to 12 decimals and clears negative zero so reports are stable
/// across platforms.
pub fn stable(x: f64) -> f64 {
    let r = (x * 1e12).round() / 1e12;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn stable_c(z: C64) -> ComplexDoc {
    [stable(z.re), stable(z.im)]
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PartsDoc {
    pub dim: usize,
    pub dom: usize,
    pub ran: usize,
    pub ker: usize,
    pub mul: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ClassificationDoc {
    pub operator: bool,
    pub bounded: bool,
    pub symmetric: bool,
    pub selfadjoint: bool,
    pub dissipative: bool,
    pub maximal_dissipative: bool,
    pub positive: bool,
    pub contraction: bool,
    pub isometry: bool,
    pub unitary: bool,
}

impl From<&ClassificationReport> for ClassificationDoc {
    fn from(r: &ClassificationReport) -> Self {
        Self {
            operator: r.is_operator,
            bounded: r.is_bounded,
            symmetric: r.is_symmetric,
            selfadjoint: r.is_selfadjoint,
            dissipative: r.is_dissipative,
            maximal_dissipative: r.is_maximal_dissipative,
            positive: r.is_positive,
            contraction: r.is_contraction,
            isometry: r.is_isometry,
            unitary: r.is_unitary,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DeficiencyDoc {
    pub zeta: ComplexDoc,
    pub index: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EigenvalueDoc {
    pub value: ComplexDoc,
    pub geometric: usize,
    pub algebraic: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpectrumDoc {
    pub finite: Vec<EigenvalueDoc>,
    pub infinite_multiplicity: usize,
    pub infinite_algebraic: usize,
}

impl From<&SpectrumReport> for SpectrumDoc {
    fn from(r: &SpectrumReport) -> Self {
        Self {
            finite: r
                .finite_eigenvalues
                .iter()
                .map(|e| EigenvalueDoc {
                    value: stable_c(e.value),
                    geometric: e.geometric,
                    algebraic: e.algebraic,
                })
                .collect(),
            infinite_multiplicity: r.infinite_multiplicity,
            infinite_algebraic: r.infinite_algebraic,
        }
    }
}

/// Echo of the parameters an extension or model command was run with.
#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ParameterDoc {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub zeta: Option<ComplexDoc>,
    /// `"inf"` or `[re, im]`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tau: Option<serde_json::Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub w: Option<ComplexDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<Vec<Vec<ComplexDoc>>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ValidationDoc {
    pub check: String,
    pub value: f64,
    pub tolerance: f64,
    pub passed: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub command: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parameters: Option<ParameterDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parts: Option<PartsDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classification: Option<ClassificationDoc>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub deficiency: Vec<DeficiencyDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum: Option<SpectrumDoc>,
    /// Why the spectrum was not enumerated (non-square or singular pencil).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spectrum_note: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polynomial: Option<Vec<ComplexDoc>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub roots: Option<Vec<ComplexDoc>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub validation: Vec<ValidationDoc>,
    /// The relation a transforming command produced.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub relation: Option<RelationDocument>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            ..Self::default()
        }
    }

    /// Parts, classification, deficiency at ±i and the spectrum when the
    /// pencil is square and regular.
    pub fn analyze(command: &str, t: &LinearRelation) -> Self {
        let p = t.parts();
        let mut doc = Self::new(command);
        doc.parts = Some(PartsDoc {
            dim: t.dim(),
            dom: p.dom.dim(),
            ran: p.ran.dim(),
            ker: p.ker.dim(),
            mul: p.mul.dim(),
        });
        doc.classification = Some((&t.classify()).into());
        doc.deficiency = [C64::new(0.0, 1.0), C64::new(0.0, -1.0)]
            .into_iter()
            .map(|z| DeficiencyDoc {
                zeta: stable_c(z),
                index: t.deficiency_index(z),
            })
            .collect();
        doc.set_spectrum(t);
        doc
    }

    pub fn set_spectrum(&mut self, t: &LinearRelation) {
        match spectra::eigenvalues(t) {
            Ok(rep) => {
                self.spectrum = Some((&rep).into());
                self.spectrum_note = None;
            }
            Err(e) => {
                self.spectrum = None;
                self.spectrum_note = Some(e.to_string());
            }
        }
    }
}

pub fn matrix_doc(m: &CMat) -> Vec<Vec<ComplexDoc>> {
    (0..m.nrows())
        .map(|i| (0..m.ncols()).map(|j| stable_c(m[(i, j)])).collect())
        .collect()
}

/// Pretty-printed JSON with a trailing newline.
pub fn emit_report(report: &ReportDocument) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(report).expect("report serializes");
    out.push(b'\n');
    out
}

pub fn parse_report(bytes: &[u8]) -> Result<ReportDocument, IoError> {
    Ok(serde_json::from_slice(bytes)?)
}

pub fn emit_relation(doc: &RelationDocument) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(doc).expect("document serializes");
    out.push(b'\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::Sampler;

    #[test]
    fn complex_literals() {
        let c = |re, im| C64::new(re, im);
        assert_eq!(parse_complex("i").unwrap(), c(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("-1i").unwrap(), c(0.0, -1.0));
        assert_eq!(parse_complex("2-3i").unwrap(), c(2.0, -3.0));
        assert_eq!(parse_complex("1+i").unwrap(), c(1.0, 1.0));
        assert_eq!(parse_complex("-2.5").unwrap(), c(-2.5, 0.0));
        assert_eq!(parse_complex("1e-3+2E+1i").unwrap(), c(1e-3, 20.0));
        assert_eq!(parse_complex(" 0.5 - 0.25i ").unwrap(), c(0.5, -0.25));
        assert_eq!(parse_complex_list("-1i,-2i").unwrap(), vec![c(0.0, -1.0), c(0.0, -2.0)]);
        for bad in ["", "1+", "ii", "abc", "1+2j", "nan", "inf", "1++2i"] {
            assert!(matches!(parse_complex(bad), Err(IoError::Schema(_))), "{bad}");
        }
    }

    #[test]
    fn minimal_document() {
        let doc = br#"{"ambient_dim": 2, "spanning_pairs": [{"f": [[1,0],[0,0]], "g": [[1,0],[0,0]]}]}"#;
        let t = parse_relation(doc, ToleranceProfile::default()).unwrap();
        assert_eq!(t.dim(), 1);
        assert!(t.is_operator());
    }

    #[test]
    fn schema_violations() {
        let tol = ToleranceProfile::default();
        let unknown = br#"{"ambient_dim": 1, "spanning_pairs": [{"f": [[1,0]], "g": [[1,0]]}], "extra": 1}"#;
        assert!(matches!(parse_relation(unknown, tol), Err(IoError::Schema(_))));
        let short = br#"{"ambient_dim": 2, "spanning_pairs": [{"f": [[1,0]], "g": [[1,0],[0,0]]}]}"#;
        assert!(matches!(parse_relation(short, tol), Err(IoError::Schema(_))));
        let empty = br#"{"ambient_dim": 2, "spanning_pairs": []}"#;
        assert!(matches!(parse_relation(empty, tol), Err(IoError::Schema(_))));
        let literal = br#"{"ambient_dim": 1, "spanning_pairs": [{"f": [["1",0]], "g": [[1,0]]}]}"#;
        assert!(matches!(parse_relation(literal, tol), Err(IoError::Schema(_))));
        let badtol = br#"{"ambient_dim": 1, "spanning_pairs": [{"f": [[1,0]], "g": [[1,0]]}], "tol": {"rank_rel": -1, "psd_abs": 1e-10, "eq_tol": 1e-8}}"#;
        assert!(parse_relation(badtol, tol).is_err());
    }

    #[test]
    fn relation_round_trip() {
        let mut s = Sampler::seeded(1);
        for _ in 0..20 {
            let n = s.usize_in(1, 5);
            let dim = s.usize_in(1, 2 * n);
            let arg0 = s.usize_in(0, dim.min(n));
            let t = s.relation(n, dim, arg0);
            let doc = RelationDocument::from_relation(&t);
            let bytes = emit_relation(&doc);
            let back = parse_document(&bytes).unwrap();
            assert_eq!(back, doc);
            assert_eq!(emit_relation(&back), bytes);
            assert!(back.to_relation(ToleranceProfile::default()).unwrap().equals(&t).unwrap());
        }
    }

    #[test]
    fn report_round_trip() {
        let mut s = Sampler::seeded(2);
        for _ in 0..20 {
            let n = s.usize_in(1, 5);
            let arg0 = s.usize_in(1, 2 * n);
            let t = s.relation(n, arg0, 0);
            let mut rep = ReportDocument::analyze("analyze", &t);
            rep.relation = Some(RelationDocument::from_relation(&t.adjoint()));
            let bytes = emit_report(&rep);
            let back = parse_report(&bytes).unwrap();
            assert_eq!(back, rep);
            assert_eq!(emit_report(&back), bytes);
        }
    }

    #[test]
    fn stable_rounding() {
        assert_eq!(stable(-0.0).to_bits(), 0.0f64.to_bits());
        assert_eq!(stable(-1e-15).to_bits(), 0.0f64.to_bits());
        assert_eq!(stable(2f64.sqrt()), 1.414213562373);
    }

    #[test]
    fn matrix_files() {
        let m = parse_matrix(b"[[[1,0],[0,1]],[[0,0],[2,-1]]]").unwrap();
        assert_eq!(m.shape(), (2, 2));
        assert_eq!(m[(1, 1)], C64::new(2.0, -1.0));
        assert!(parse_matrix(b"[[[1,0]],[[0,0],[1,0]]]").is_err());
    }
}
