//! JSON documents for elements, points, lines, spectral frames, gauge
//! algebras and configurations.
//!
//! Octonions are arrays of 8 numbers and bioctonions arrays of 8 `[re, im]`
//! pairs. A Hermitian element is `{n, ground, diag, upper}` with the upper
//! triangle in row-major order `(1,2), (1,3), .., (n-1,n)`. Entries of the
//! division-algebra grounds may also be written with only their support
//! (1, 2 or 4 numbers for `R`, `C`, `H`).

use num_complex::Complex64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::division::{Bioctonion, Octonion};
use crate::error::{Error, Result};
use crate::jordan::{Ground, HermitianElement};
use crate::matrix_model::{GaugeAlgebra, GaugeConfiguration};
use crate::projective::{ProjectiveLine, ProjectivePoint};
use crate::spectral::SpectralFrame;

impl Serialize for Octonion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.0.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Octonion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Octonion(<[f64; 8]>::deserialize(d)?))
    }
}

impl Serialize for Bioctonion {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let pairs: [[f64; 2]; 8] = std::array::from_fn(|k| [self.re.0[k], self.im.0[k]]);
        pairs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Bioctonion {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let pairs = <[[f64; 2]; 8]>::deserialize(d)?;
        Ok(Bioctonion::from_coeffs(
            pairs.map(|[re, im]| Complex64::new(re, im)),
        ))
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum ScalarDoc {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
enum EntryDoc {
    Real(Vec<f64>),
    Complex(Vec<[f64; 2]>),
}

/// Wire form of a [`HermitianElement`].
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ElementDoc {
    n: usize,
    ground: Ground,
    diag: Vec<ScalarDoc>,
    upper: Vec<EntryDoc>,
}

impl From<&HermitianElement> for ElementDoc {
    fn from(x: &HermitianElement) -> Self {
        let complex = x.ground().has_complex_coefficients();
        ElementDoc {
            n: x.n(),
            ground: x.ground(),
            diag: x
                .diag()
                .iter()
                .map(|z| {
                    if complex {
                        ScalarDoc::Complex([z.re, z.im])
                    } else {
                        ScalarDoc::Real(z.re)
                    }
                })
                .collect(),
            upper: x
                .upper()
                .iter()
                .map(|e| {
                    if complex {
                        EntryDoc::Complex((0..8).map(|k| [e.re.0[k], e.im.0[k]]).collect())
                    } else {
                        EntryDoc::Real(e.re.0.to_vec())
                    }
                })
                .collect(),
        }
    }
}

impl TryFrom<ElementDoc> for HermitianElement {
    type Error = Error;

    fn try_from(doc: ElementDoc) -> Result<Self> {
        if doc.diag.len() != doc.n {
            return Err(Error::WrongLength {
                field: "diag",
                expected: doc.n,
                found: doc.diag.len(),
            });
        }
        let diag = doc
            .diag
            .iter()
            .map(|s| match *s {
                ScalarDoc::Real(x) => Complex64::new(x, 0.0),
                ScalarDoc::Complex([re, im]) => Complex64::new(re, im),
            })
            .collect();
        let units = doc.ground.units();
        let upper = doc
            .upper
            .iter()
            .map(|e| {
                let mut re = [0.0; 8];
                let mut im = [0.0; 8];
                match e {
                    EntryDoc::Real(v) => {
                        if v.len() != 8 && v.len() != units {
                            return Err(Error::WrongLength {
                                field: "upper entry",
                                expected: 8,
                                found: v.len(),
                            });
                        }
                        re[..v.len()].copy_from_slice(v);
                    }
                    EntryDoc::Complex(v) => {
                        if v.len() != 8 && v.len() != units {
                            return Err(Error::WrongLength {
                                field: "upper entry",
                                expected: 8,
                                found: v.len(),
                            });
                        }
                        for (k, [a, b]) in v.iter().enumerate() {
                            re[k] = *a;
                            im[k] = *b;
                        }
                    }
                }
                Ok(Bioctonion::new(Octonion(re), Octonion(im)))
            })
            .collect::<Result<_>>()?;
        HermitianElement::new(doc.ground, diag, upper)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProjectiveKind {
    Point,
    Line,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TaggedDoc {
    pub kind: ProjectiveKind,
    #[serde(flatten)]
    element: ElementDoc,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FrameDoc {
    pub eigenvalues: Vec<f64>,
    pub multiplicities: Vec<usize>,
    projections: Vec<ElementDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDoc {
    pub dim: usize,
    pub entries: Vec<(usize, usize, usize, f64)>,
}

fn default_coupling() -> f64 {
    1.0
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigurationDoc {
    #[serde(default = "default_coupling")]
    pub coupling: f64,
    elements: Vec<ElementDoc>,
}

pub fn element_to_value(x: &HermitianElement) -> Value {
    serde_json::to_value(ElementDoc::from(x)).expect("serializable")
}

pub fn point_to_value(p: &ProjectivePoint) -> Value {
    tagged_to_value(ProjectiveKind::Point, p.element())
}

pub fn line_to_value(l: &ProjectiveLine) -> Value {
    tagged_to_value(ProjectiveKind::Line, l.element())
}

fn tagged_to_value(kind: ProjectiveKind, x: &HermitianElement) -> Value {
    serde_json::to_value(TaggedDoc {
        kind,
        element: x.into(),
    })
    .expect("serializable")
}

pub fn frame_to_value(f: &SpectralFrame) -> Value {
    serde_json::to_value(FrameDoc {
        eigenvalues: f.eigenvalues.clone(),
        multiplicities: f.multiplicities.clone(),
        projections: f.projections.iter().map(ElementDoc::from).collect(),
    })
    .expect("serializable")
}

pub fn algebra_to_value(g: &GaugeAlgebra) -> Value {
    serde_json::to_value(AlgebraDoc {
        dim: g.dim(),
        entries: g.generators(),
    })
    .expect("serializable")
}

pub fn configuration_to_value(c: &GaugeConfiguration) -> Value {
    serde_json::to_value(ConfigurationDoc {
        coupling: c.coupling,
        elements: c.elements().iter().map(ElementDoc::from).collect(),
    })
    .expect("serializable")
}

pub fn parse_element(text: &str) -> Result<HermitianElement> {
    serde_json::from_str::<ElementDoc>(text)?.try_into()
}

pub fn parse_frame(text: &str) -> Result<SpectralFrame> {
    let doc: FrameDoc = serde_json::from_str(text)?;
    let n = doc.eigenvalues.len();
    if doc.multiplicities.len() != n || doc.projections.len() != n {
        return Err(Error::Invalid(
            "spectral frame needs equally many eigenvalues, multiplicities and projections".into(),
        ));
    }
    Ok(SpectralFrame {
        eigenvalues: doc.eigenvalues,
        multiplicities: doc.multiplicities,
        projections: doc
            .projections
            .into_iter()
            .map(HermitianElement::try_from)
            .collect::<Result<_>>()?,
    })
}

pub fn parse_algebra(text: &str) -> Result<GaugeAlgebra> {
    let doc: AlgebraDoc = serde_json::from_str(text)?;
    let g = GaugeAlgebra::from_generators(doc.dim, &doc.entries)?;
    Ok(g)
}

pub fn parse_configuration(text: &str) -> Result<GaugeConfiguration> {
    let doc: ConfigurationDoc = serde_json::from_str(text)?;
    let elements = doc
        .elements
        .into_iter()
        .map(HermitianElement::try_from)
        .collect::<Result<_>>()?;
    GaugeConfiguration::new(doc.coupling, elements)
}

/// A parsed document of any supported kind.
#[derive(Clone, Debug, PartialEq)]
pub enum Document {
    Element(HermitianElement),
    Point(ProjectivePoint),
    Line(ProjectiveLine),
    Configuration(GaugeConfiguration),
    Algebra(GaugeAlgebra),
}

/// Parses and validates a document, deciding its kind from its fields:
/// `kind` marks a point or line, `elements` a configuration, `entries` a
/// gauge algebra, anything else an element. Tagged points and lines are
/// checked against their projection invariants with `tol`.
pub fn parse_document(text: &str, tol: f64) -> Result<Document> {
    let value: Value = serde_json::from_str(text)?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Invalid("document must be a JSON object".into()))?;
    if obj.contains_key("kind") {
        let doc: TaggedDoc = serde_json::from_str(text)?;
        let x = HermitianElement::try_from(doc.element)?;
        return Ok(match doc.kind {
            ProjectiveKind::Point => {
                Document::Point(ProjectivePoint::new(x, tol).map_err(|e| tagged("point", e))?)
            }
            ProjectiveKind::Line => {
                Document::Line(ProjectiveLine::new(x, tol).map_err(|e| tagged("line", e))?)
            }
        });
    }
    if obj.contains_key("elements") {
        return Ok(Document::Configuration(parse_configuration(text)?));
    }
    if obj.contains_key("entries") {
        return Ok(Document::Algebra(parse_algebra(text)?));
    }
    Ok(Document::Element(parse_element(text)?))
}

fn tagged(kind: &str, e: Error) -> Error {
    Error::Invalid(format!(
        "document tagged as a {kind} fails its invariants: {e}"
    ))
}

impl Document {
    pub fn to_value(&self) -> Value {
        match self {
            Document::Element(x) => element_to_value(x),
            Document::Point(p) => point_to_value(p),
            Document::Line(l) => line_to_value(l),
            Document::Configuration(c) => configuration_to_value(c),
            Document::Algebra(g) => algebra_to_value(g),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Document::Element(_) => "element",
            Document::Point(_) => "point",
            Document::Line(_) => "line",
            Document::Configuration(_) => "configuration",
            Document::Algebra(_) => "algebra",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::projective::DEFAULT_TOLERANCE;

    #[test]
    fn octonion_formats() {
        let x = Octonion::unit(3).scale(2.0);
        assert_eq!(
            serde_json::to_string(&x).unwrap(),
            "[0.0,0.0,0.0,2.0,0.0,0.0,0.0,0.0]"
        );
        let z = Bioctonion::i() * Bioctonion::unit(1);
        let s = serde_json::to_string(&z).unwrap();
        assert!(s.starts_with("[[0.0,0.0],[0.0,1.0],"));
        assert_eq!(serde_json::from_str::<Bioctonion>(&s).unwrap(), z);
    }

    #[test]
    fn parse_diagonal_octonion_element() {
        let zeros = "[0,0,0,0,0,0,0,0]";
        let text =
            format!(r#"{{"n":3,"ground":"O","diag":[1,2,3],"upper":[{zeros},{zeros},{zeros}]}}"#);
        let x = parse_element(&text).unwrap();
        assert_eq!(
            x,
            HermitianElement::diagonal(Ground::Octonion, &[1.0, 2.0, 3.0])
        );
    }

    #[test]
    fn short_entries_for_small_grounds() {
        let text = r#"{"n":2,"ground":"C","diag":[1,2],"upper":[[0.5,-1]]}"#;
        let x = parse_element(text).unwrap();
        assert_eq!(x.entry(0, 1).re.0[1], -1.0);
        let bad = r#"{"n":2,"ground":"C","diag":[1,2],"upper":[[0.5,-1,3]]}"#;
        assert!(matches!(parse_element(bad), Err(Error::WrongLength { .. })));
        let outside = r#"{"n":2,"ground":"C","diag":[1,2],"upper":[[0,0,1,0,0,0,0,0]]}"#;
        assert!(matches!(
            parse_element(outside),
            Err(Error::OutsideGround { .. })
        ));
    }

    #[test]
    fn malformed_documents_carry_positions() {
        let err = parse_element("{\"n\":3,\n\"ground\":\"Q\"}").unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("line 2"), "{msg}");
    }

    #[test]
    fn tagged_point_with_trace_two_is_rejected() {
        let text = r#"{"kind":"point","n":3,"ground":"R","diag":[1,1,0],"upper":[[0],[0],[0]]}"#;
        let err = parse_document(text, DEFAULT_TOLERANCE)
            .unwrap_err()
            .to_string();
        assert!(err.contains("point") && err.contains("trace"), "{err}");
        let line = text.replace("\"point\"", "\"line\"");
        assert!(matches!(
            parse_document(&line, DEFAULT_TOLERANCE).unwrap(),
            Document::Line(_)
        ));
    }

    #[test]
    fn documents_dispatch_by_fields() {
        let alg = r#"{"dim":3,"entries":[[1,2,3,1.0]]}"#;
        assert!(matches!(
            parse_document(alg, 1e-10).unwrap(),
            Document::Algebra(_)
        ));
        let cfg = r#"{"coupling":2.0,"elements":[{"n":3,"ground":"R","diag":[1,0,0],"upper":[[0],[0],[0]]}]}"#;
        match parse_document(cfg, 1e-10).unwrap() {
            Document::Configuration(c) => assert_eq!(c.coupling, 2.0),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn bioctonion_element_roundtrip() {
        let x = HermitianElement::new(
            Ground::Bioctonion,
            vec![Complex64::new(1.0, -0.5), Complex64::new(0.0, 2.0)],
            vec![Bioctonion::i() * Bioctonion::unit(7) + Bioctonion::ONE],
        )
        .unwrap();
        let text = element_to_value(&x).to_string();
        assert_eq!(parse_element(&text).unwrap(), x);
    }
}
