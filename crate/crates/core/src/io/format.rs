//! The input document: a TOML file describing one spherical datum.
//!
//! ```toml
//! label = "SL(2)/N(T)"
//! p = 1
//! lattice = [[4]]          # generators of Ξ(X), in Ξ(G) coordinates
//! colors = [[2]]           # one row per color: values on the generators
//!
//! [root_datum.standard]
//! type = "A"
//! rank = 1
//! isogeny = "simply-connected"
//! central_torus_rank = 0
//! ```
//!
//! The root datum may instead be given as
//!
//! ```toml
//! [root_datum.explicit]
//! rank = 2
//! simple_roots = [[1, -1]]
//! simple_coroots = [[1, -1]]
//! label = "GL(2)"          # optional
//! ```
//!
//! Integers too large for 64 bits are written as decimal strings.

use std::fmt;
use std::ops::Range;

use serde::de::{self, Visitor};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;
use toml::Spanned;

use crate::root_data::{Isogeny, RootDatum, Series};
use crate::spherical::SphericalDatum;
use crate::{Int, IntMatrix};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    /// Malformed TOML, a missing or unknown key, or a value of the wrong
    /// type. The message carries the position.
    #[error("{0}")]
    Syntax(String),
    #[error("line {line}: `{key}`: {message}")]
    Invalid {
        key: String,
        line: usize,
        message: String,
    },
}

/// Integer literal: a TOML integer, or a decimal string for big values.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntLit(pub Int);

impl Serialize for IntLit {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match i64::try_from(&self.0) {
            Ok(v) => s.serialize_i64(v),
            Err(_) => s.serialize_str(&self.0.to_string()),
        }
    }
}

impl<'de> Deserialize<'de> for IntLit {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        struct IntVisitor;

        impl Visitor<'_> for IntVisitor {
            type Value = IntLit;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a decimal integer string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<IntLit, E> {
                Ok(IntLit(Int::from(v)))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<IntLit, E> {
                Ok(IntLit(Int::from(v)))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<IntLit, E> {
                v.trim()
                    .parse::<Int>()
                    .map(IntLit)
                    .map_err(|_| E::custom(format!("`{v}` is not an integer")))
            }
        }

        d.deserialize_any(IntVisitor)
    }
}

fn lits(values: &[Int]) -> Vec<IntLit> {
    values.iter().cloned().map(IntLit).collect()
}

fn unlit(values: &[IntLit]) -> Vec<Int> {
    values.iter().map(|v| v.0.clone()).collect()
}

/// Serializable form of a [`SphericalDatum`], field for field the file format.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub label: String,
    pub p: u64,
    pub lattice: Vec<Vec<IntLit>>,
    pub colors: Vec<Vec<IntLit>>,
    pub root_datum: RootDatumDocument,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
pub enum RootDatumDocument {
    Standard(StandardDocument),
    Explicit(ExplicitDocument),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StandardDocument {
    #[serde(rename = "type")]
    pub series: String,
    pub rank: usize,
    pub isogeny: String,
    #[serde(default)]
    pub central_torus_rank: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExplicitDocument {
    pub rank: usize,
    pub simple_roots: Vec<Vec<IntLit>>,
    pub simple_coroots: Vec<Vec<IntLit>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
}

impl InputDocument {
    pub fn from_datum(sd: &SphericalDatum) -> Self {
        let rd = sd.root_datum();
        let root_datum = match rd.standard_type() {
            Some(st) => RootDatumDocument::Standard(StandardDocument {
                series: st.series.to_string(),
                rank: st.rank,
                isogeny: st.isogeny.to_string(),
                central_torus_rank: st.central_torus_rank,
            }),
            None => RootDatumDocument::Explicit(ExplicitDocument {
                rank: rd.rank(),
                simple_roots: rd.simple_roots().row_vecs().iter().map(|r| lits(r)).collect(),
                simple_coroots: rd
                    .simple_coroots()
                    .row_vecs()
                    .iter()
                    .map(|r| lits(r))
                    .collect(),
                label: Some(rd.label().to_string()),
            }),
        };
        InputDocument {
            label: sd.label().to_string(),
            p: sd.char_exponent(),
            lattice: sd
                .lattice_embedding()
                .column_vecs()
                .iter()
                .map(|c| lits(c))
                .collect(),
            colors: sd.colors().row_vecs().iter().map(|r| lits(r)).collect(),
            root_datum,
        }
    }
}

// Parsing goes through a spanned mirror of the document so that semantic
// errors can point at a line.
#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    label: String,
    p: Spanned<u64>,
    lattice: Spanned<Vec<Vec<IntLit>>>,
    colors: Spanned<Vec<Vec<IntLit>>>,
    root_datum: Spanned<RawRootDatum>,
}

#[derive(Deserialize)]
#[serde(rename_all = "snake_case", deny_unknown_fields)]
enum RawRootDatum {
    Standard(RawStandard),
    Explicit(ExplicitDocument),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStandard {
    #[serde(rename = "type")]
    series: Spanned<String>,
    rank: usize,
    isogeny: Spanned<String>,
    #[serde(default)]
    central_torus_rank: usize,
}

struct Locator<'a> {
    text: &'a str,
}

impl Locator<'_> {
    fn line(&self, span: Range<usize>) -> usize {
        let end = span.start.min(self.text.len());
        self.text[..end].matches('\n').count() + 1
    }

    fn err(&self, key: &str, span: Range<usize>, message: impl Into<String>) -> ParseError {
        ParseError::Invalid {
            key: key.to_string(),
            line: self.line(span),
            message: message.into(),
        }
    }
}

fn rows_to_matrix(
    loc: &Locator<'_>,
    key: &str,
    span: Range<usize>,
    rows: &[Vec<IntLit>],
    width: usize,
    what: &str,
) -> Result<IntMatrix, ParseError> {
    for (i, row) in rows.iter().enumerate() {
        if row.len() != width {
            return Err(loc.err(
                key,
                span,
                format!(
                    "{what} {i} (0-based) has length {}, expected {width}",
                    row.len()
                ),
            ));
        }
    }
    IntMatrix::from_rows(width, rows.iter().map(|r| unlit(r)).collect())
        .map_err(|e| loc.err(key, span, e.to_string()))
}

/// Parses a document into a structurally valid datum.
pub fn parse(text: &str) -> Result<SphericalDatum, ParseError> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| ParseError::Syntax(e.to_string()))?;
    let loc = Locator { text };

    let rd_span = raw.root_datum.span();
    let root_datum = match raw.root_datum.into_inner() {
        RawRootDatum::Standard(st) => {
            let series: Series = st.series.get_ref().parse().map_err(|e: crate::root_data::RootDataError| {
                loc.err("root_datum.standard.type", st.series.span(), e.to_string())
            })?;
            let isogeny: Isogeny = st.isogeny.get_ref().parse().map_err(
                |e: crate::root_data::RootDataError| {
                    loc.err("root_datum.standard.isogeny", st.isogeny.span(), e.to_string())
                },
            )?;
            RootDatum::standard(series, st.rank, isogeny, st.central_torus_rank)
                .map_err(|e| loc.err("root_datum.standard", rd_span.clone(), e.to_string()))?
        }
        RawRootDatum::Explicit(ex) => {
            let roots = rows_to_matrix(
                &loc,
                "root_datum.explicit.simple_roots",
                rd_span.clone(),
                &ex.simple_roots,
                ex.rank,
                "simple root",
            )?;
            let coroots = rows_to_matrix(
                &loc,
                "root_datum.explicit.simple_coroots",
                rd_span.clone(),
                &ex.simple_coroots,
                ex.rank,
                "simple coroot",
            )?;
            let label = ex
                .label
                .unwrap_or_else(|| format!("explicit rank {} root datum", ex.rank));
            RootDatum::new(ex.rank, roots, coroots, label)
                .map_err(|e| loc.err("root_datum.explicit", rd_span.clone(), e.to_string()))?
        }
    };

    let d = root_datum.rank();
    let lattice_span = raw.lattice.span();
    let generators = rows_to_matrix(
        &loc,
        "lattice",
        lattice_span.clone(),
        raw.lattice.get_ref(),
        d,
        "lattice generator",
    )?;
    let embedding = generators.transpose();
    let r = embedding.cols();

    let colors_span = raw.colors.span();
    let colors = rows_to_matrix(
        &loc,
        "colors",
        colors_span.clone(),
        raw.colors.get_ref(),
        r,
        "color",
    )?;

    let p_span = raw.p.span();
    SphericalDatum::new(root_datum, embedding, colors, *raw.p.get_ref(), raw.label).map_err(
        |e| {
            use crate::spherical::SphericalError as E;
            match e {
                E::InvalidCharExponent(_) => loc.err("p", p_span, e.to_string()),
                E::RankDeficientEmbedding { .. } | E::EmbeddingRows { .. } => {
                    loc.err("lattice", lattice_span, e.to_string())
                }
                E::ColorLength { .. } => loc.err("colors", colors_span, e.to_string()),
                other => ParseError::Syntax(other.to_string()),
            }
        },
    )
}

/// Writes a datum in the input format; [`parse`] reads it back to an equal
/// datum.
pub fn serialize_datum(sd: &SphericalDatum) -> String {
    toml::to_string(&InputDocument::from_datum(sd)).expect("documents always serialize")
}
