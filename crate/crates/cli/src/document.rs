//! JSON description of a complex with its cycle, field and coordinates.

use std::collections::BTreeMap;
use std::path::Path;

use facering::arith::{seeded_rng, FieldDescriptor, FiniteField, Scalar};
use facering::ring::{generic_coords, CoordMatrix};
use facering::simplicial::{pseudomanifold_check, Chain, Face, SimplicialComplex};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, Result};
use crate::field::FieldChoice;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ComplexDocument {
    pub name: String,
    pub vertices: Vec<String>,
    pub facets: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cycle: Option<CycleSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    #[serde(default)]
    pub coordinates: CoordSpec,
}

/// `"fundamental"` or a map from comma-separated facet labels to integer
/// coefficients.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CycleSpec {
    Named(String),
    Explicit(BTreeMap<String, i64>),
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CoordRepr", into = "CoordRepr")]
pub enum CoordSpec {
    /// Uniform random entries seeded from the command line.
    #[default]
    Generic,
    GenericSeeded(u64),
    Symbolic,
    MomentCurve(Vec<i64>),
    Explicit {
        matrix: Vec<Vec<i64>>,
        reference: Option<Vec<i64>>,
    },
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum CoordRepr {
    Text(String),
    Matrix {
        matrix: Vec<Vec<i64>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        reference: Option<Vec<i64>>,
    },
}

impl TryFrom<CoordRepr> for CoordSpec {
    type Error = String;

    fn try_from(r: CoordRepr) -> std::result::Result<Self, String> {
        match r {
            CoordRepr::Matrix { matrix, reference } => Ok(CoordSpec::Explicit { matrix, reference }),
            CoordRepr::Text(s) => CoordSpec::parse(&s),
        }
    }
}

impl From<CoordSpec> for CoordRepr {
    fn from(c: CoordSpec) -> Self {
        match c {
            CoordSpec::Explicit { matrix, reference } => CoordRepr::Matrix { matrix, reference },
            other => CoordRepr::Text(other.to_string()),
        }
    }
}

impl CoordSpec {
    pub fn parse(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if s == "generic" {
            return Ok(CoordSpec::Generic);
        }
        if s == "symbolic" {
            return Ok(CoordSpec::Symbolic);
        }
        if let Some(seed) = s.strip_prefix("generic:") {
            return seed.trim().parse().map(CoordSpec::GenericSeeded).map_err(|_| format!("bad seed in {s:?}"));
        }
        if let Some(list) = s.strip_prefix("moment-curve:") {
            return parse_int_list(list).map(CoordSpec::MomentCurve);
        }
        Err(format!("unknown coordinate spec {s:?}; expected generic[:seed], symbolic, moment-curve:[t1,...] or a matrix"))
    }
}

impl std::fmt::Display for CoordSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CoordSpec::Generic => f.write_str("generic"),
            CoordSpec::GenericSeeded(s) => write!(f, "generic:{s}"),
            CoordSpec::Symbolic => f.write_str("symbolic"),
            CoordSpec::MomentCurve(ts) => {
                write!(f, "moment-curve:[{}]", ts.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            }
            CoordSpec::Explicit { .. } => f.write_str("explicit"),
        }
    }
}

/// `[1, 2, 3]` or `1,2,3`.
pub fn parse_int_list(s: &str) -> std::result::Result<Vec<i64>, String> {
    let inner = s.trim().trim_start_matches('[').trim_end_matches(']');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse::<i64>().map_err(|_| format!("bad integer {t:?}"))).collect()
}

/// A parsed and validated document.
#[derive(Clone, Debug)]
pub struct Input {
    pub path: String,
    pub doc: ComplexDocument,
    pub complex: SimplicialComplex,
}

impl ComplexDocument {
    pub fn from_json(path: &str, text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Parse { path: path.to_string(), line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn from_complex(name: &str, c: &SimplicialComplex) -> Self {
        ComplexDocument {
            name: name.to_string(),
            vertices: c.labels().to_vec(),
            facets: c.facets().iter().map(|f| c.face_labels(*f)).collect(),
            cycle: None,
            field: None,
            coordinates: CoordSpec::Generic,
        }
    }

    /// Facets sorted by vertex order, one per line of pretty JSON.
    pub fn to_canonical_json(&self) -> String {
        let mut doc = self.clone();
        let pos: BTreeMap<&str, usize> = self.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let key = |v: &String| pos.get(v.as_str()).copied().unwrap_or(usize::MAX);
        for f in &mut doc.facets {
            f.sort_by_key(key);
            f.dedup();
        }
        doc.facets.sort_by(|a, b| a.iter().map(key).cmp(b.iter().map(key)));
        doc.facets.dedup();
        serde_json::to_string_pretty(&doc).expect("documents serialize")
    }

    pub fn validate(self, path: &str) -> Result<Input> {
        let bad = |location: String, message: String| CliError::Document { path: path.to_string(), location, message };
        let mut seen = std::collections::HashSet::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if !seen.insert(v) {
                return Err(bad(format!("vertices[{i}]"), format!("duplicate label {v:?}")));
            }
        }
        if self.facets.is_empty() {
            return Err(bad("facets".into(), "no facets".into()));
        }
        for (i, f) in self.facets.iter().enumerate() {
            if f.is_empty() {
                return Err(bad(format!("facets[{i}]"), "empty facet".into()));
            }
            if let Some(v) = f.iter().find(|v| !seen.contains(v)) {
                return Err(bad(format!("facets[{i}]"), format!("label {v:?} is not a vertex")));
            }
        }
        if let Some(field) = &self.field {
            FieldChoice::from_descriptor(field).map_err(|e| bad("field".into(), e.to_string()))?;
        }
        let complex = SimplicialComplex::from_labeled(&self.vertices, &self.facets).map_err(|e| bad("facets".into(), e.to_string()))?;
        let (d, n) = (complex.top_size(), complex.universe());
        match &self.coordinates {
            CoordSpec::Explicit { matrix, reference } => {
                if matrix.len() != d || matrix.iter().any(|r| r.len() != n) {
                    return Err(bad("coordinates.matrix".into(), format!("expected {d} rows of {n} entries")));
                }
                if reference.as_ref().is_some_and(|r| r.len() != d) {
                    return Err(bad("coordinates.reference".into(), format!("expected {d} entries")));
                }
            }
            CoordSpec::MomentCurve(ts) if ts.len() != n => {
                return Err(bad("coordinates".into(), format!("{} moment-curve parameters for {n} vertices", ts.len())));
            }
            _ => {}
        }
        if let Some(CycleSpec::Named(s)) = &self.cycle {
            if s != "fundamental" {
                return Err(bad("cycle".into(), format!("unknown cycle {s:?}; use \"fundamental\" or a map")));
            }
        }
        Ok(Input { path: path.to_string(), doc: self, complex })
    }
}

impl Input {
    pub fn load(path: &Path) -> Result<Input> {
        let name = path.display().to_string();
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?;
        ComplexDocument::from_json(&name, &text)?.validate(&name)
    }

    pub fn from_complex(name: &str, c: &SimplicialComplex) -> Input {
        Input { path: name.to_string(), doc: ComplexDocument::from_complex(name, c), complex: c.clone() }
    }

    /// Field of the document, else the given default.
    pub fn field(&self, default: FieldChoice) -> Result<FieldChoice> {
        self.doc.field.as_ref().map_or(Ok(default), FieldChoice::from_descriptor)
    }

    pub fn is_symbolic(&self) -> bool {
        self.doc.coordinates == CoordSpec::Symbolic
    }

    /// The requested cycle; `None` when no fundamental class exists and none
    /// was given explicitly.
    pub fn cycle<S: Scalar>(&self) -> Result<Option<Chain<S>>> {
        let c = &self.complex;
        match &self.doc.cycle {
            None => Ok(pseudomanifold_check::<S>(c).fundamental_class),
            Some(CycleSpec::Named(_)) => pseudomanifold_check::<S>(c)
                .fundamental_class
                .map(Some)
                .ok_or_else(|| facering::Error::Domain(format!("no fundamental class over characteristic {}", S::characteristic())).into()),
            Some(CycleSpec::Explicit(map)) => {
                let mut terms = Vec::new();
                for (key, coeff) in map {
                    let labels: Vec<&str> = key.split(',').map(str::trim).collect();
                    terms.push((c.face_from_labels(&labels)?, S::from_i64(*coeff)));
                }
                let chain = Chain::from_terms(c.top_size(), terms.into_iter().filter(|(_, s)| !s.is_zero()))?;
                if !chain.terms().all(|(f, _)| c.facets().contains(&f)) {
                    return Err(facering::Error::Domain("cycle supported on a non-facet".into()).into());
                }
                if !chain.boundary().is_zero() {
                    return Err(facering::Error::Domain("the given chain is not a cycle".into()).into());
                }
                Ok(Some(chain))
            }
        }
    }

    /// Numeric coordinates; symbolic mode is handled by the caller.
    pub fn coords<F: FiniteField>(&self, seed: u64) -> Result<CoordMatrix<F>> {
        let (d, n) = (self.complex.top_size(), self.complex.universe());
        let reference = || {
            let mut rng = seeded_rng(seed, 7);
            (0..d).map(|_| F::random(&mut rng)).collect::<Vec<F>>()
        };
        Ok(match &self.doc.coordinates {
            CoordSpec::Generic => generic_coords(d, n, seed, 0),
            CoordSpec::GenericSeeded(s) => generic_coords(d, n, *s, 0),
            CoordSpec::MomentCurve(ts) => CoordMatrix::moment_curve(d, ts, reference())?,
            CoordSpec::Explicit { matrix, reference: r } => {
                let rows = matrix.iter().map(|row| row.iter().map(|&x| F::from_i64(x)).collect()).collect();
                let r = r.as_ref().map_or_else(reference, |r| r.iter().map(|&x| F::from_i64(x)).collect());
                CoordMatrix::explicit(rows, r)?
            }
            CoordSpec::Symbolic => return Err(facering::Error::Mode("symbolic coordinates requested where numbers are needed".into()).into()),
        })
    }
}

/// Subcomplex given as a document or as a bare list of facets.
pub fn load_subcomplex(path: &Path, ambient: &SimplicialComplex) -> Result<SimplicialComplex> {
    let name = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: name.clone(), source })?;
    parse_subcomplex(&name, &text, ambient)
}

pub fn parse_subcomplex(name: &str, text: &str, ambient: &SimplicialComplex) -> Result<SimplicialComplex> {
    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Sub {
        Doc { facets: Vec<Vec<String>> },
        Bare(Vec<Vec<String>>),
    }
    let sub: Sub = serde_json::from_str(text).map_err(|e| CliError::Parse {
        path: name.to_string(),
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let facets = match sub {
        Sub::Doc { facets } | Sub::Bare(facets) => facets,
    };
    let faces: Vec<Face> = facets.iter().map(|f| ambient.face_from_labels(f)).collect::<facering::Result<_>>()?;
    Ok(SimplicialComplex::new(ambient.labels().to_vec(), faces)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use facering::arith::{Mersenne61, F2};

    const OCTAHEDRON: &str = r#"{
        "name": "octahedron",
        "vertices": ["a", "b", "c", "d", "e", "f"],
        "facets": [["a","c","e"],["a","c","f"],["a","d","e"],["a","d","f"],["b","c","e"],["b","c","f"],["b","d","e"],["b","d","f"]]
    }"#;

    #[test]
    fn parses_and_validates() {
        let input = ComplexDocument::from_json("oct", OCTAHEDRON).unwrap().validate("oct").unwrap();
        assert_eq!(input.complex.facets().len(), 8);
        assert_eq!(input.doc.coordinates, CoordSpec::Generic);
        assert!(input.cycle::<Mersenne61>().unwrap().is_some());
        assert_eq!(input.coords::<Mersenne61>(3).unwrap().columns(), 6);
    }

    #[test]
    fn parse_errors_carry_locations() {
        let err = ComplexDocument::from_json("x", "{\n  \"name\": 3 }").unwrap_err();
        assert!(matches!(err, CliError::Parse { line: 2, .. }), "{err}");
        let bad = r#"{"name": "x", "vertices": ["a", "a"], "facets": [["a"]]}"#;
        let err = ComplexDocument::from_json("x", bad).unwrap().validate("x").unwrap_err();
        assert!(err.to_string().contains("vertices[1]"));
        let bad = r#"{"name": "x", "vertices": ["a"], "facets": [["a", "z"]]}"#;
        assert!(ComplexDocument::from_json("x", bad).unwrap().validate("x").unwrap_err().to_string().contains("facets[0]"));
        let bad = r#"{"name": "x", "vertices": ["a"], "facets": [["a"]], "colour": 1}"#;
        assert!(ComplexDocument::from_json("x", bad).is_err());
    }

    #[test]
    fn coordinate_specs_round_trip() {
        for spec in ["generic", "generic:17", "symbolic", "moment-curve:[1,2,3]"] {
            let c = CoordSpec::parse(spec).unwrap();
            assert_eq!(c.to_string(), spec);
            let json = serde_json::to_string(&c).unwrap();
            assert_eq!(serde_json::from_str::<CoordSpec>(&json).unwrap(), c);
        }
        assert!(CoordSpec::parse("random").is_err());
        let m: CoordSpec = serde_json::from_str(r#"{"matrix": [[1, 0], [0, 1]]}"#).unwrap();
        assert!(matches!(m, CoordSpec::Explicit { .. }));
    }

    #[test]
    fn explicit_matrix_shape_is_checked() {
        let doc = r#"{"name": "t", "vertices": ["1","2","3"], "facets": [["1","2"],["2","3"],["1","3"]],
                      "coordinates": {"matrix": [[1, 0, -1]]}}"#;
        assert!(ComplexDocument::from_json("t", doc).unwrap().validate("t").is_err());
        let doc = r#"{"name": "t", "vertices": ["1","2","3"], "facets": [["1","2"],["2","3"],["1","3"]],
                      "coordinates": {"matrix": [[1, 0, -1], [0, 1, -1]], "reference": [1, 2]}}"#;
        let input = ComplexDocument::from_json("t", doc).unwrap().validate("t").unwrap();
        assert_eq!(input.coords::<Mersenne61>(0).unwrap().get(1, 2), &Mersenne61::from_i64(-1));
    }

    #[test]
    fn explicit_cycles() {
        let doc = r#"{"name": "t", "vertices": ["1","2","3"], "facets": [["1","2"],["2","3"],["1","3"]],
                      "cycle": {"1,2": 1, "2,3": 1, "1,3": -1}}"#;
        let input = ComplexDocument::from_json("t", doc).unwrap().validate("t").unwrap();
        assert!(input.cycle::<Mersenne61>().unwrap().is_some());
        let doc = doc.replace("-1", "1");
        let input = ComplexDocument::from_json("t", &doc).unwrap().validate("t").unwrap();
        assert!(input.cycle::<Mersenne61>().is_err());
        assert!(input.cycle::<F2>().unwrap().is_some());
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = ComplexDocument::from_json("oct", OCTAHEDRON).unwrap();
        let mut b = a.clone();
        b.facets.reverse();
        for f in &mut b.facets {
            f.reverse();
        }
        assert_eq!(a.to_canonical_json(), b.to_canonical_json());
        let back = ComplexDocument::from_json("c", &a.to_canonical_json()).unwrap();
        assert_eq!(back.to_canonical_json(), a.to_canonical_json());
    }

    #[test]
    fn subcomplex_files() {
        let input = ComplexDocument::from_json("oct", OCTAHEDRON).unwrap().validate("oct").unwrap();
        let g = parse_subcomplex("g", r#"[["a","c","e"]]"#, &input.complex).unwrap();
        assert_eq!(g.facets().len(), 1);
        let g = parse_subcomplex("g", r#"{"facets": [["a","c"], ["b"]]}"#, &input.complex).unwrap();
        assert_eq!(g.facets().len(), 2);
        assert!(parse_subcomplex("g", r#"[["a","zz"]]"#, &input.complex).is_err());
    }
}
