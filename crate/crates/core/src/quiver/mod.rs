//! The quiver Q_X and its finite-dimensional representations.
//!
//! Vertices are weights in D_1; an arrow λ → λ + ξ exists for every Ω¹
//! weight ξ keeping the target in D_1. A representation attaches a
//! multiplicity space to finitely many vertices and a matrix to arrows
//! between them; absent arrows are zero.

mod json;
mod ops;
pub mod random;
mod relations;

use std::collections::HashMap;

pub use json::{from_json, to_json};
pub use ops::{
    direct_sum, dual, quotient_arriving_at, rescale_factor, rescale_from_commutative, rescale_to_commutative,
    squares_commute, submodule_generated, Submodule,
};
pub use relations::{
    check_relations, relation_entries, relation_system, Equation, PathRef, RelationCase, RelationEntry,
    Violation,
};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rootsys::{Space, Weight};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub weight: Weight,
    pub dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub from: usize,
    pub to: usize,
    /// Box pair (p, q) of the Ω¹ weight `to − from`.
    pub boxp: (usize, usize),
    /// dim(to) × dim(from).
    pub matrix: Matrix,
}

#[derive(Clone, Debug)]
pub struct QuiverRep {
    space: Space,
    vertices: Vec<Vertex>,
    arrows: Vec<Arrow>,
    index: HashMap<Weight, usize>,
    arrow_index: HashMap<(usize, usize), usize>,
}

impl PartialEq for QuiverRep {
    fn eq(&self, other: &Self) -> bool {
        self.space == other.space && self.vertices == other.vertices && self.arrows == other.arrows
    }
}

impl Eq for QuiverRep {}

/// All arrows of Q_X leaving `w`: box pairs and targets.
pub fn arrows_from(s: &Space, w: &Weight) -> Result<Vec<((usize, usize), Weight)>> {
    s.require_d1(w)?;
    Ok(s.omega1()
        .into_iter()
        .filter_map(|o| {
            let t = w.add(&o.weight);
            s.in_d1(&t).then_some(((o.p, o.q), t))
        })
        .collect())
}

impl QuiverRep {
    /// Validates and puts the data in canonical order (vertices sorted by
    /// weight, arrows by endpoints).
    pub fn new(space: Space, vertices: Vec<Vertex>, arrows: Vec<Arrow>) -> Result<Self> {
        let mut order: Vec<usize> = (0..vertices.len()).collect();
        order.sort_by(|&a, &b| vertices[a].weight.cmp(&vertices[b].weight));
        let mut new_pos = vec![0; vertices.len()];
        for (pos, &old) in order.iter().enumerate() {
            new_pos[old] = pos;
        }
        let sorted: Vec<Vertex> = order.iter().map(|&i| vertices[i].clone()).collect();
        let mut index = HashMap::new();
        let mut component = None;
        for (i, v) in sorted.iter().enumerate() {
            space.require_d1(&v.weight)?;
            if v.dim == 0 {
                return Err(Error::Shape(format!("vertex {} has dimension 0", v.weight)));
            }
            if index.insert(v.weight.clone(), i).is_some() {
                return Err(Error::Shape(format!("duplicate vertex {}", v.weight)));
            }
            let c = space.component(&v.weight);
            if *component.get_or_insert(c) != c {
                return Err(Error::Domain(format!(
                    "vertex {} lies in a different connected component of the quiver",
                    v.weight
                )));
            }
        }
        let mut out_arrows = Vec::with_capacity(arrows.len());
        for a in arrows {
            if a.from >= sorted.len() || a.to >= sorted.len() {
                return Err(Error::Shape(format!("arrow index out of range: {} -> {}", a.from, a.to)));
            }
            let (from, to) = (new_pos[a.from], new_pos[a.to]);
            let diff = sorted[to].weight.sub(&sorted[from].weight);
            let boxp = space.box_of_difference(&diff).ok_or_else(|| {
                Error::Shape(format!(
                    "no arrow of the quiver from {} to {}",
                    sorted[from].weight, sorted[to].weight
                ))
            })?;
            if boxp != a.boxp {
                return Err(Error::Shape(format!(
                    "arrow {} -> {} has box pair {:?}, expected {:?}",
                    sorted[from].weight, sorted[to].weight, a.boxp, boxp
                )));
            }
            if a.matrix.rows() != sorted[to].dim || a.matrix.cols() != sorted[from].dim {
                return Err(Error::Shape(format!(
                    "arrow {} -> {} needs a {}x{} matrix, got {}x{}",
                    sorted[from].weight,
                    sorted[to].weight,
                    sorted[to].dim,
                    sorted[from].dim,
                    a.matrix.rows(),
                    a.matrix.cols()
                )));
            }
            out_arrows.push(Arrow { from, to, boxp, matrix: a.matrix });
        }
        out_arrows.sort_by_key(|a| (a.from, a.to));
        let mut arrow_index = HashMap::new();
        for (i, a) in out_arrows.iter().enumerate() {
            if arrow_index.insert((a.from, a.to), i).is_some() {
                return Err(Error::Shape(format!(
                    "duplicate arrow {} -> {}",
                    sorted[a.from].weight, sorted[a.to].weight
                )));
            }
        }
        Ok(QuiverRep { space, vertices: sorted, arrows: out_arrows, index, arrow_index })
    }

    /// Builds from weights directly; box pairs are inferred.
    pub fn from_parts(space: Space, vertices: Vec<(Weight, usize)>, arrows: Vec<(Weight, Weight, Matrix)>) -> Result<Self> {
        let idx: HashMap<Weight, usize> = vertices.iter().enumerate().map(|(i, (w, _))| (w.clone(), i)).collect();
        let mut arr = Vec::with_capacity(arrows.len());
        for (f, t, m) in arrows {
            let from = *idx.get(&f).ok_or_else(|| Error::Shape(format!("arrow source {f} is not a vertex")))?;
            let to = *idx.get(&t).ok_or_else(|| Error::Shape(format!("arrow target {t} is not a vertex")))?;
            let boxp = space
                .box_of_difference(&t.sub(&f))
                .ok_or_else(|| Error::Shape(format!("no arrow of the quiver from {f} to {t}")))?;
            arr.push(Arrow { from, to, boxp, matrix: m });
        }
        let verts = vertices.into_iter().map(|(weight, dim)| Vertex { weight, dim }).collect();
        QuiverRep::new(space, verts, arr)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_index(&self, w: &Weight) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn dim_at(&self, w: &Weight) -> usize {
        self.vertex_index(w).map_or(0, |i| self.vertices[i].dim)
    }

    pub fn total_dim(&self) -> usize {
        self.vertices.iter().map(|v| v.dim).sum()
    }

    pub fn arrow_between(&self, from: &Weight, to: &Weight) -> Option<&Arrow> {
        let f = self.vertex_index(from)?;
        let t = self.vertex_index(to)?;
        self.arrow_index.get(&(f, t)).map(|&i| &self.arrows[i])
    }

    /// The arrow matrix, or a zero matrix of the right size (possibly with
    /// zero rows or columns when an endpoint is absent).
    pub fn map_or_zero(&self, from: &Weight, to: &Weight) -> Matrix {
        match self.arrow_between(from, to) {
            Some(a) => a.matrix.clone(),
            None => Matrix::zeros(self.dim_at(to), self.dim_at(from)),
        }
    }

    /// Every arrow of Q_X with both endpoints in the support, as
    /// (from index, to index, box pair).
    pub fn arrow_slots(&self) -> Vec<(usize, usize, (usize, usize))> {
        let mut out = Vec::new();
        for (i, v) in self.vertices.iter().enumerate() {
            for (boxp, t) in arrows_from(&self.space, &v.weight).expect("vertices lie in D_1") {
                if let Some(j) = self.vertex_index(&t) {
                    out.push((i, j, boxp));
                }
            }
        }
        out
    }

    /// Same support and dimensions, arrows replaced.
    pub fn with_matrices(&self, arrows: Vec<(usize, usize, Matrix)>) -> Result<QuiverRep> {
        let arr = arrows
            .into_iter()
            .map(|(from, to, matrix)| {
                let d = self.vertices[to].weight.sub(&self.vertices[from].weight);
                let boxp = self
                    .space
                    .box_of_difference(&d)
                    .ok_or_else(|| Error::Shape("not an arrow of the quiver".into()))?;
                Ok(Arrow { from, to, boxp, matrix })
            })
            .collect::<Result<Vec<_>>>()?;
        QuiverRep::new(self.space, self.vertices.clone(), arr)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    #[test]
    fn arrows_from_examples() {
        let g13 = Space::new(1, 3).unwrap();
        assert_eq!(arrows_from(&g13, &w(&[5, 5, 5])).unwrap().len(), 4);
        let p2 = Space::projective(2).unwrap();
        assert_eq!(arrows_from(&p2, &w(&[0, 0])).unwrap(), vec![((1, 1), w(&[-2, 1]))]);
        let a = arrows_from(&g13, &w(&[0, 0, 0])).unwrap();
        assert_eq!(a.len(), 1);
        assert_eq!(a[0].0, (1, 1));
        assert!(arrows_from(&p2, &w(&[0, -1])).is_err());
    }

    #[test]
    fn construction_validates() {
        let p2 = Space::projective(2).unwrap();
        let ok = QuiverRep::from_parts(
            p2,
            vec![(w(&[0, 0]), 1), (w(&[-2, 1]), 1)],
            vec![(w(&[0, 0]), w(&[-2, 1]), Matrix::scalar(q(1)))],
        )
        .unwrap();
        assert_eq!(ok.vertices()[0].weight, w(&[-2, 1]));
        assert_eq!(ok.arrows()[0].from, 1);
        let bad_shape = QuiverRep::from_parts(
            p2,
            vec![(w(&[0, 0]), 1), (w(&[-2, 1]), 2)],
            vec![(w(&[0, 0]), w(&[-2, 1]), Matrix::scalar(q(1)))],
        );
        assert!(matches!(bad_shape, Err(Error::Shape(_))));
        let not_arrow = QuiverRep::from_parts(
            p2,
            vec![(w(&[0, 0]), 1), (w(&[-3, 0]), 1)],
            vec![(w(&[0, 0]), w(&[-3, 0]), Matrix::scalar(q(1)))],
        );
        assert!(not_arrow.is_err());
        let two_components = QuiverRep::from_parts(p2, vec![(w(&[0, 0]), 1), (w(&[1, 0]), 1)], vec![]);
        assert!(matches!(two_components, Err(Error::Domain(_))));
        let dup = QuiverRep::from_parts(p2, vec![(w(&[0, 0]), 1), (w(&[0, 0]), 1)], vec![]);
        assert!(dup.is_err());
    }

    #[test]
    fn component_label_constant_along_arrows() {
        use num_traits::ToPrimitive;
        for n in 2..=4usize {
            let s = Space::projective(n).unwrap();
            let label = |x: &Weight| {
                let v = s.slope(x).unwrap() * q(n as i64);
                assert!(v.is_integer());
                v.to_integer().to_i64().unwrap().rem_euclid(n as i64 + 1)
            };
            let mut pts = vec![Weight::zero(n)];
            for _ in 0..3 {
                let cur = pts.clone();
                for p in cur {
                    for (_, t) in arrows_from(&s, &p).unwrap() {
                        if !pts.contains(&t) {
                            pts.push(t);
                        }
                    }
                }
            }
            assert!(pts.len() > 3);
            for p in &pts {
                assert_eq!(s.component(p), 0);
                assert_eq!(label(p), 0);
            }
        }
    }
}
