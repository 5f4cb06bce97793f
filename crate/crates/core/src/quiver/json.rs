use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, Matrix, Q};
use crate::rootsys::{Space, Weight};

use super::{Arrow, QuiverRep, Vertex};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpaceJson {
    k: usize,
    n: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexJson {
    weight: Vec<i64>,
    dim: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowJson {
    from: usize,
    to: usize,
    #[serde(rename = "box")]
    boxp: [usize; 2],
    matrix: Vec<Vec<Cell>>,
}

/// A matrix entry: "p/q" on output; a rational string or an integer on
/// input.
#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Cell {
    Int(i64),
    Text(String),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepJson {
    space: SpaceJson,
    vertices: Vec<VertexJson>,
    arrows: Vec<ArrowJson>,
}

pub fn to_json(r: &QuiverRep) -> String {
    let doc = RepJson {
        space: SpaceJson { k: r.space().k, n: r.space().n },
        vertices: r.vertices().iter().map(|v| VertexJson { weight: v.weight.0.clone(), dim: v.dim }).collect(),
        arrows: r
            .arrows()
            .iter()
            .map(|a| ArrowJson {
                from: a.from,
                to: a.to,
                boxp: [a.boxp.0, a.boxp.1],
                matrix: a.matrix.to_rows().iter().map(|row| row.iter().map(|x| Cell::Text(fmt_q(x))).collect()).collect(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

fn parse_cell(c: &Cell) -> Result<Q> {
    match c {
        Cell::Int(i) => Ok(Q::from_integer((*i).into())),
        Cell::Text(t) => parse_q(t).map_err(Error::Parse),
    }
}

/// Parses and validates a representation. Vertices may appear in any
/// order; the result is canonical.
pub fn from_json(text: &str) -> Result<QuiverRep> {
    let doc: RepJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("representation JSON: {e}")))?;
    let space = Space::new(doc.space.k, doc.space.n)?;
    let mut vertices = Vec::with_capacity(doc.vertices.len());
    for v in doc.vertices {
        let weight = Weight(v.weight);
        space.check_rank(&weight)?;
        vertices.push(Vertex { weight, dim: v.dim });
    }
    let mut arrows = Vec::with_capacity(doc.arrows.len());
    for a in doc.arrows {
        let rows = a
            .matrix
            .iter()
            .map(|row| row.iter().map(parse_cell).collect::<Result<Vec<Q>>>())
            .collect::<Result<Vec<_>>>()?;
        let width = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != width) {
            return Err(Error::Shape("ragged arrow matrix".into()));
        }
        if rows.is_empty() || width == 0 {
            return Err(Error::Shape("empty arrow matrix".into()));
        }
        let matrix = Matrix::from_rows(rows);
        arrows.push(Arrow { from: a.from, to: a.to, boxp: (a.boxp[0], a.boxp[1]), matrix });
    }
    QuiverRep::new(space, vertices, arrows)
}
