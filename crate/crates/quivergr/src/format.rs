//! The JSON input document.
//!
//! ```json
//! {
//!   "metadata": { "name": "a21-ex3" },
//!   "quiver": {
//!     "vertices": ["1", "2", "3"],
//!     "arrows": [
//!       { "id": "a1", "from": "1", "to": "2" },
//!       { "id": "a2", "from": "2", "to": "3" },
//!       { "id": "a3", "from": "1", "to": "3" }
//!     ]
//!   },
//!   "representation": {
//!     "dims": { "1": 2, "2": 2, "3": 2 },
//!     "matrices": {
//!       "a1": [["1", "0"], ["0", "1"]],
//!       "a2": [["0", "1"], ["0", "0"]],
//!       "a3": [["1", "0"], ["0", "1"]]
//!     }
//!   }
//! }
//! ```
//!
//! Entries are exact rationals written as strings, `"n"` or `"n/m"`. The matrix of an
//! arrow `i → j` has `dims[j]` rows and `dims[i]` columns and acts on column vectors.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use quivergr_core::{DimVector, Matrix, Quiver, Rationals, Representation};
use serde::{Deserialize, Serialize};

use crate::CliError;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub metadata: Option<Metadata>,
    pub quiver: QuiverBlock,
    pub representation: RepresentationBlock,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Metadata {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub notes: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverBlock {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowEntry {
    pub id: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RepresentationBlock {
    pub dims: BTreeMap<String, usize>,
    pub matrices: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn parse_input(path: &Path) -> Result<(InputDocument, Representation<Rationals>), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_str(&text).map_err(|e| match e {
        CliError::Input(msg) => CliError::Input(format!("{}: {msg}", path.display())),
        other => other,
    })
}

pub fn parse_str(text: &str) -> Result<(InputDocument, Representation<Rationals>), CliError> {
    let doc: InputDocument =
        serde_json::from_str(text).map_err(|e| CliError::Input(e.to_string()))?;
    let rep = doc.to_representation()?;
    Ok((doc, rep))
}

impl InputDocument {
    pub fn to_representation(&self) -> Result<Representation<Rationals>, CliError> {
        let input = |e: quivergr_core::Error| CliError::Input(e.to_string());
        let quiver = Quiver::new(
            self.quiver.vertices.iter().cloned(),
            self.quiver
                .arrows
                .iter()
                .map(|a| (a.id.clone(), a.from.clone(), a.to.clone())),
        )
        .map_err(input)?;

        for key in self.representation.dims.keys() {
            if quiver.vertex_index(key).is_none() {
                return Err(CliError::Input(format!(
                    "representation.dims: unknown vertex {key:?}"
                )));
            }
        }
        let dims = quiver
            .vertices()
            .iter()
            .map(|v| {
                self.representation.dims.get(v).copied().ok_or_else(|| {
                    CliError::Input(format!("representation.dims: missing vertex {v:?}"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;

        for key in self.representation.matrices.keys() {
            if quiver.arrow_index(key).is_none() {
                return Err(CliError::Input(format!(
                    "representation.matrices: unknown arrow {key:?}"
                )));
            }
        }
        let mut maps = Vec::with_capacity(quiver.arrows().len());
        for arrow in quiver.arrows() {
            let (rows, cols) = (dims[arrow.target], dims[arrow.source]);
            let field = format!("representation.matrices.{}", arrow.id);
            let entries = self
                .representation
                .matrices
                .get(&arrow.id)
                .ok_or_else(|| CliError::Input(format!("{field}: missing matrix")))?;
            let shape_error = |found_rows: usize, found_cols: usize| {
                CliError::Input(
                    quivergr_core::Error::ShapeMismatch {
                        arrow: arrow.id.clone(),
                        expected_rows: rows,
                        expected_cols: cols,
                        rows: found_rows,
                        cols: found_cols,
                    }
                    .to_string(),
                )
            };
            if entries.len() != rows {
                let found_cols = entries.first().map_or(cols, Vec::len);
                return Err(shape_error(entries.len(), found_cols));
            }
            let mut data = Vec::with_capacity(rows * cols);
            for (r, row) in entries.iter().enumerate() {
                if row.len() != cols {
                    return Err(shape_error(rows, row.len()));
                }
                for (c, s) in row.iter().enumerate() {
                    let x = parse_rational(s).ok_or_else(|| {
                        CliError::Input(format!("{field}[{r}][{c}]: invalid rational {s:?}"))
                    })?;
                    data.push(x);
                }
            }
            maps.push(Matrix::new(rows, cols, data).map_err(input)?);
        }
        Representation::new(Arc::new(quiver), Rationals, DimVector(dims), maps).map_err(input)
    }

    pub fn from_representation(
        rep: &Representation<Rationals>,
        metadata: Option<Metadata>,
    ) -> Self {
        let q = rep.quiver();
        let quiver = QuiverBlock {
            vertices: q.vertices().to_vec(),
            arrows: q
                .arrows()
                .iter()
                .map(|a| ArrowEntry {
                    id: a.id.clone(),
                    from: q.vertices()[a.source].clone(),
                    to: q.vertices()[a.target].clone(),
                })
                .collect(),
        };
        let dims = q
            .vertices()
            .iter()
            .cloned()
            .zip(rep.dims().as_slice().iter().copied())
            .collect();
        let matrices = q
            .arrows()
            .iter()
            .zip(rep.maps())
            .map(|(a, m)| {
                let rows = m
                    .row_iter()
                    .map(|row| row.iter().map(format_rational).collect())
                    .collect();
                (a.id.clone(), rows)
            })
            .collect();
        InputDocument {
            metadata,
            quiver,
            representation: RepresentationBlock { dims, matrices },
        }
    }

    /// Compact JSON with sorted keys, the byte string the input digest is taken over.
    pub fn canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("documents serialize");
        serde_json::to_string(&value).expect("values serialize")
    }
}

pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(BigRational::new(num, den))
}

pub fn format_rational(x: &BigRational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const SQUARE: &str = r#"{
        "quiver": {
            "vertices": ["1", "2"],
            "arrows": [{"id": "a", "from": "1", "to": "2"}]
        },
        "representation": {
            "dims": {"1": 1, "2": 2},
            "matrices": {"a": [["1/2"], ["-3"]]}
        }
    }"#;

    fn expect_input_error(text: &str) -> String {
        match parse_str(text) {
            Err(CliError::Input(msg)) => msg,
            other => panic!("expected an input error, got {other:?}"),
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(
            parse_rational("3"),
            Some(BigRational::from_integer(3.into()))
        );
        assert_eq!(
            parse_rational("-2/4"),
            Some(BigRational::new((-1).into(), 2.into()))
        );
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
        assert_eq!(parse_rational("1.5"), None);
        let half = BigRational::new(1.into(), 2.into());
        assert_eq!(format_rational(&half), "1/2");
        assert_eq!(
            format_rational(&BigRational::from_integer((-7).into())),
            "-7"
        );
    }

    #[test]
    fn parses_a_small_document() {
        let (doc, rep) = parse_str(SQUARE).unwrap();
        assert_eq!(rep.dims(), &DimVector(vec![1, 2]));
        assert_eq!(
            rep.maps()[0].get(0, 0),
            &BigRational::new(1.into(), 2.into())
        );
        assert_eq!(InputDocument::from_representation(&rep, None), doc);
    }

    #[test]
    fn syntax_errors_carry_a_position() {
        let msg = expect_input_error("{\n  \"quiver\": [\n");
        assert!(msg.contains(" line ") && msg.contains(" column "), "{msg}");
    }

    #[test]
    fn unknown_fields_are_rejected() {
        let msg = expect_input_error(&SQUARE.replace("\"vertices\"", "\"vertexes\""));
        assert!(msg.contains("vertexes"), "{msg}");
    }

    #[test]
    fn wrong_row_count_names_the_arrow() {
        let msg = expect_input_error(&SQUARE.replace(r#"[["1/2"], ["-3"]]"#, r#"[["1/2"]]"#));
        assert!(msg.contains("arrow a"), "{msg}");
        assert!(msg.contains("expected a 2x1"), "{msg}");
    }

    #[test]
    fn wrong_column_count_names_the_arrow() {
        let msg = expect_input_error(&SQUARE.replace(r#"["-3"]"#, r#"["-3", "1"]"#));
        assert!(msg.contains("arrow a"), "{msg}");
    }

    #[test]
    fn cyclic_quivers_are_rejected() {
        let text = r#"{
            "quiver": {
                "vertices": ["1", "2"],
                "arrows": [{"id": "a", "from": "1", "to": "2"}, {"id": "b", "from": "2", "to": "1"}]
            },
            "representation": {"dims": {"1": 0, "2": 0}, "matrices": {"a": [], "b": []}}
        }"#;
        let msg = expect_input_error(text);
        assert!(msg.contains("cycle"), "{msg}");
    }

    #[test]
    fn bad_entries_are_located() {
        let msg = expect_input_error(&SQUARE.replace("-3", "3/0"));
        assert!(msg.contains("representation.matrices.a[1][0]"), "{msg}");
    }

    #[test]
    fn dims_must_match_vertices() {
        let msg = expect_input_error(&SQUARE.replace(r#""2": 2"#, r#""3": 2"#));
        assert!(msg.contains("unknown vertex"), "{msg}");
        let msg = expect_input_error(&SQUARE.replace(r#", "2": 2"#, ""));
        assert!(msg.contains("missing vertex"), "{msg}");
    }

    #[test]
    fn canonical_json_ignores_whitespace() {
        let (doc, _) = parse_str(SQUARE).unwrap();
        let (again, _) = parse_str(&doc.canonical_json()).unwrap();
        assert_eq!(doc.canonical_json(), again.canonical_json());
        assert!(!doc.canonical_json().contains('\n'));
    }
}
