//! Quadratic relations of Q_X for Grassmannians.
//!
//! For a source λ and a two-box target λ'' the relation system is a list of
//! linear equations in the length-two path products λ → λ' → λ''. Box pairs
//! are normalized so that p1 ≤ p2 and q1 ≤ q2.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};
use crate::rootsys::{Space, Weight};

use super::QuiverRep;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationCase {
    /// p1 < p2, q1 < q2, p̃ ≠ 1, q̃ ≠ 1.
    I1,
    /// p1 < p2, q1 < q2, p̃ = 1 ≠ q̃.
    I2,
    /// p1 < p2, q1 < q2, q̃ = 1 ≠ p̃.
    I3,
    /// p1 < p2, q1 < q2, p̃ = q̃ = 1.
    I4,
    /// p1 = p2, q1 < q2, q̃ ≠ 1.
    II1,
    /// p1 = p2, q1 < q2, q̃ = 1.
    II2,
    /// p1 < p2, q1 = q2, p̃ ≠ 1.
    II1T,
    /// p1 < p2, q1 = q2, p̃ = 1.
    II2T,
    /// The same box twice: no relation.
    Repeated,
}

impl fmt::Display for RelationCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            RelationCase::I1 => "i1",
            RelationCase::I2 => "i2",
            RelationCase::I3 => "i3",
            RelationCase::I4 => "i4",
            RelationCase::II1 => "ii1",
            RelationCase::II2 => "ii2",
            RelationCase::II1T => "ii1 transposed",
            RelationCase::II2T => "ii2 transposed",
            RelationCase::Repeated => "repeated box",
        };
        f.write_str(s)
    }
}

/// The path λ → mid → λ'' adding `first`, then `second`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PathRef {
    pub first: (usize, usize),
    pub second: (usize, usize),
    pub mid: Weight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Equation {
    pub terms: Vec<(Q, PathRef)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationEntry {
    pub source: Weight,
    pub target: Weight,
    /// Normalized ((p1, q1), (p2, q2)).
    pub boxes: ((usize, usize), (usize, usize)),
    pub case: RelationCase,
    pub p_tilde: Option<i64>,
    pub q_tilde: Option<i64>,
    pub equations: Vec<Equation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub source: Weight,
    pub target: Weight,
    pub case: RelationCase,
    pub equation: usize,
    pub residual: Matrix,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "relation violated at ({}, {}) [case {}, equation {}]",
            self.source,
            self.target,
            self.case,
            self.equation + 1
        )
    }
}

/// Adds boxes in rows `rows` (1-based) one at a time in the given order.
fn add_rows(parts: &[i64], rows: &[usize]) -> Option<Vec<i64>> {
    let mut v = parts.to_vec();
    for &r in rows {
        if r == 0 || r > v.len() || (r > 1 && v[r - 2] == v[r - 1]) {
            return None;
        }
        v[r - 1] += 1;
    }
    Some(v)
}

pub fn relation_system(
    s: &Space,
    w: &Weight,
    b1: (usize, usize),
    b2: (usize, usize),
) -> Result<RelationEntry> {
    let shape = s.weight_to_shape(w)?;
    let in_range = |(p, q): (usize, usize)| (1..=s.u_rank()).contains(&p) && (1..=s.q_rank()).contains(&q);
    if !in_range(b1) || !in_range(b2) {
        return Err(Error::Shape(format!("box pair out of range for {s}: {b1:?}, {b2:?}")));
    }
    let (p1, p2) = (b1.0.min(b2.0), b1.0.max(b2.0));
    let (q1, q2) = (b1.1.min(b2.1), b1.1.max(b2.1));
    let alpha: Vec<i64> = shape.alpha.padded(s.u_rank()).iter().map(|&x| x as i64).collect();
    let beta: Vec<i64> = shape.beta.padded(s.q_rank()).iter().map(|&x| x as i64).collect();
    if add_rows(&alpha, &[p1, p2]).is_none() || add_rows(&beta, &[q1, q2]).is_none() {
        return Err(Error::Domain(format!(
            "invalid double box addition ({p1},{q1}),({p2},{q2}) at {w}"
        )));
    }
    let xi = |b: (usize, usize)| s.omega1_at(b.0, b.1).weight;
    let target = w.add(&xi((p1, q1))).add(&xi((p2, q2)));
    let path = |first: (usize, usize), second: (usize, usize)| -> Option<PathRef> {
        let mid = w.add(&xi(first));
        s.in_d1(&mid).then_some(PathRef { first, second, mid })
    };
    let p_tilde = (p1 < p2).then(|| alpha[p1 - 1] - alpha[p2 - 1] + (p2 - p1) as i64);
    let q_tilde = (q1 < q2).then(|| beta[q1 - 1] - beta[q2 - 1] + (q2 - q1) as i64);

    let inv = |x: i64| Q::new(1.into(), x.into());
    let mut equations: Vec<Vec<(Q, Option<PathRef>)>> = Vec::new();
    let case = match (p_tilde, q_tilde) {
        (Some(pt), Some(qt)) => {
            let p11 = path((p1, q1), (p2, q2));
            let a = path((p1, q2), (p2, q1));
            let b = path((p2, q1), (p1, q2));
            let p22 = path((p2, q2), (p1, q1));
            match (pt == 1, qt == 1) {
                (false, false) => {
                    equations.push(vec![(inv(qt) - inv(pt), p11.clone()), (q(-1), a.clone()), (q(1), b.clone())]);
                    equations.push(vec![
                        (inv(pt * qt) - q(1), p11),
                        (-inv(pt), a),
                        (-inv(qt), b),
                        (q(1), p22),
                    ]);
                    RelationCase::I1
                }
                (true, false) => {
                    equations.push(vec![(inv(qt) - q(1), p11), (q(-1), a)]);
                    RelationCase::I2
                }
                (false, true) => {
                    equations.push(vec![(q(1) - inv(pt), p11), (q(1), b)]);
                    RelationCase::I3
                }
                (true, true) => RelationCase::I4,
            }
        }
        (None, Some(qt)) => {
            let a = path((p1, q1), (p1, q2));
            let b = path((p1, q2), (p1, q1));
            if qt == 1 {
                equations.push(vec![(q(1), a)]);
                RelationCase::II2
            } else {
                equations.push(vec![(Q::new((1 + qt).into(), qt.into()), a), (q(-1), b)]);
                RelationCase::II1
            }
        }
        (Some(pt), None) => {
            let a = path((p1, q1), (p2, q1));
            let b = path((p2, q1), (p1, q1));
            if pt == 1 {
                equations.push(vec![(q(1), a)]);
                RelationCase::II2T
            } else {
                equations.push(vec![(Q::new((1 + pt).into(), pt.into()), a), (q(-1), b)]);
                RelationCase::II1T
            }
        }
        (None, None) => RelationCase::Repeated,
    };
    let equations = equations
        .into_iter()
        .map(|terms| Equation {
            terms: terms
                .into_iter()
                .filter_map(|(c, p)| p.filter(|_| c != q(0)).map(|p| (c, p)))
                .collect(),
        })
        .filter(|e| !e.terms.is_empty())
        .collect();
    Ok(RelationEntry {
        source: w.clone(),
        target,
        boxes: ((p1, q1), (p2, q2)),
        case,
        p_tilde,
        q_tilde,
        equations,
    })
}

/// All relation entries whose source and target both lie in the support.
pub fn relation_entries(r: &QuiverRep) -> Vec<RelationEntry> {
    let s = r.space();
    let om = s.omega1();
    let mut out = Vec::new();
    for v in r.vertices() {
        let mut seen = BTreeSet::new();
        for a in 0..om.len() {
            for b in a..om.len() {
                let target = v.weight.add(&om[a].weight).add(&om[b].weight);
                if r.vertex_index(&target).is_none() || !seen.insert(target) {
                    continue;
                }
                let e = relation_system(s, &v.weight, (om[a].p, om[a].q), (om[b].p, om[b].q))
                    .expect("target in D_1 means a valid double addition");
                out.push(e);
            }
        }
    }
    out
}

/// Σ c · M(mid → λ'') M(λ → mid) over the equation's terms.
pub fn evaluate(r: &QuiverRep, entry: &RelationEntry, eq: &Equation) -> Matrix {
    let mut acc = Matrix::zeros(r.dim_at(&entry.target), r.dim_at(&entry.source));
    for (c, p) in &eq.terms {
        let prod = r.map_or_zero(&p.mid, &entry.target).mul(&r.map_or_zero(&entry.source, &p.mid));
        acc = acc.add(&prod.scale(c));
    }
    acc
}

pub fn check_relations(r: &QuiverRep) -> Vec<Violation> {
    let mut out = Vec::new();
    for entry in relation_entries(r) {
        for (i, eq) in entry.equations.iter().enumerate() {
            let res = evaluate(r, &entry, eq);
            if !res.is_zero() {
                out.push(Violation {
                    source: entry.source.clone(),
                    target: entry.target.clone(),
                    case: entry.case,
                    equation: i,
                    residual: res,
                });
            }
        }
    }
    out
}
