//! Dual, direct sum, generated submodules, quotients, and the projective
//! rescaling to commutative squares.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{q, Matrix, Q};
use crate::rootsys::{Space, Weight};

use super::{arrows_from, Arrow, QuiverRep, Vertex};

/// Vertex weights dualized, arrows reversed with matrices −Mᵀ.
pub fn dual(r: &QuiverRep) -> QuiverRep {
    let s = *r.space();
    let verts: Vec<(Weight, usize)> = r.vertices().iter().map(|v| (s.dual_weight(&v.weight), v.dim)).collect();
    let arrows = r
        .arrows()
        .iter()
        .map(|a| (verts[a.to].0.clone(), verts[a.from].0.clone(), a.matrix.transpose().neg()))
        .collect();
    QuiverRep::from_parts(s, verts, arrows).expect("duality maps Q_X to itself")
}

pub fn direct_sum(a: &QuiverRep, b: &QuiverRep) -> Result<QuiverRep> {
    if a.space() != b.space() {
        return Err(Error::Shape(format!("direct sum over different spaces {} and {}", a.space(), b.space())));
    }
    let mut weights: Vec<Weight> = a.vertices().iter().chain(b.vertices()).map(|v| v.weight.clone()).collect();
    weights.sort();
    weights.dedup();
    let verts: Vec<(Weight, usize)> = weights.iter().map(|w| (w.clone(), a.dim_at(w) + b.dim_at(w))).collect();
    let mut pairs: Vec<(Weight, Weight)> = a
        .arrows()
        .iter()
        .map(|x| (a.vertices()[x.from].weight.clone(), a.vertices()[x.to].weight.clone()))
        .chain(b.arrows().iter().map(|x| (b.vertices()[x.from].weight.clone(), b.vertices()[x.to].weight.clone())))
        .collect();
    pairs.sort();
    pairs.dedup();
    let arrows = pairs
        .into_iter()
        .map(|(f, t)| {
            let mut m = Matrix::zeros(a.dim_at(&t) + b.dim_at(&t), a.dim_at(&f) + b.dim_at(&f));
            m.set_block(0, 0, &a.map_or_zero(&f, &t));
            m.set_block(a.dim_at(&t), a.dim_at(&f), &b.map_or_zero(&f, &t));
            (f, t, m)
        })
        .collect();
    QuiverRep::from_parts(*a.space(), verts, arrows)
}

/// A subrepresentation with the inclusion at each vertex (columns are basis
/// vectors in the ambient multiplicity space).
#[derive(Clone, Debug)]
pub struct Submodule {
    pub rep: QuiverRep,
    pub bases: BTreeMap<Weight, Matrix>,
}

fn column_basis(vectors: &[Vec<Q>], dim: usize) -> Matrix {
    if vectors.is_empty() {
        return Matrix::zeros(dim, 0);
    }
    Matrix::from_rows(vectors.to_vec()).row_basis().transpose()
}

/// Vertices in order of decreasing slope (arrows always go down).
fn by_slope_desc(r: &QuiverRep) -> Vec<usize> {
    let s = r.space();
    let mut idx: Vec<usize> = (0..r.vertices().len()).collect();
    idx.sort_by(|&a, &b| {
        s.slope_unchecked(&r.vertices()[b].weight)
            .cmp(&s.slope_unchecked(&r.vertices()[a].weight))
            .then(a.cmp(&b))
    });
    idx
}

/// The smallest subrepresentation containing the given vectors.
pub fn submodule_generated(r: &QuiverRep, spans: &[(Weight, Vec<Vec<Q>>)]) -> Result<Submodule> {
    let n = r.vertices().len();
    let mut gens: Vec<Vec<Vec<Q>>> = vec![Vec::new(); n];
    for (w, vs) in spans {
        let i = r
            .vertex_index(w)
            .ok_or_else(|| Error::Shape(format!("{w} is not a vertex of the representation")))?;
        let dim = r.vertices()[i].dim;
        for v in vs {
            if v.len() != dim {
                return Err(Error::Shape(format!(
                    "subspace vector of length {} exceeds or misses the dimension {dim} at {w}",
                    v.len()
                )));
            }
            gens[i].push(v.clone());
        }
    }
    let mut incoming: Vec<Vec<&Arrow>> = vec![Vec::new(); n];
    for a in r.arrows() {
        incoming[a.to].push(a);
    }
    let mut basis: Vec<Option<Matrix>> = vec![None; n];
    for i in by_slope_desc(r) {
        let mut vs = gens[i].clone();
        for a in &incoming[i] {
            let src = basis[a.from].as_ref().expect("sources have larger slope");
            let img = a.matrix.mul(src);
            vs.extend((0..img.cols()).map(|c| img.column(c)));
        }
        vs.retain(|v| v.iter().any(|x| !x.is_zero()));
        basis[i] = Some(column_basis(&vs, r.vertices()[i].dim));
    }
    let basis: Vec<Matrix> = basis.into_iter().map(|b| b.expect("all vertices visited")).collect();
    let mut verts = Vec::new();
    let mut bases = BTreeMap::new();
    for (i, v) in r.vertices().iter().enumerate() {
        if basis[i].cols() > 0 {
            verts.push((v.weight.clone(), basis[i].cols()));
            bases.insert(v.weight.clone(), basis[i].clone());
        }
    }
    let mut arrows = Vec::new();
    for a in r.arrows() {
        let (bf, bt) = (&basis[a.from], &basis[a.to]);
        if bf.cols() == 0 || bt.cols() == 0 {
            continue;
        }
        let x = bt
            .solve_matrix(&a.matrix.mul(bf))
            .ok_or_else(|| Error::Internal("generated subspace is not arrow-closed".into()))?;
        arrows.push((r.vertices()[a.from].weight.clone(), r.vertices()[a.to].weight.clone(), x));
    }
    Ok(Submodule { rep: QuiverRep::from_parts(*r.space(), verts, arrows)?, bases })
}

/// The quotient by the largest subrepresentation meeting V_{λ'} in zero:
/// at each vertex μ, vectors surviving some path to λ'.
pub fn quotient_arriving_at(r: &QuiverRep, target: &Weight) -> Result<QuiverRep> {
    let t = r
        .vertex_index(target)
        .ok_or_else(|| Error::Shape(format!("{target} is not a vertex of the representation")))?;
    let n = r.vertices().len();
    let mut outgoing: Vec<Vec<&Arrow>> = vec![Vec::new(); n];
    for a in r.arrows() {
        outgoing[a.from].push(a);
    }
    // proj[μ]: rows spanning the functionals v ↦ (path map μ → λ')(v).
    let mut proj: Vec<Option<Matrix>> = vec![None; n];
    let mut order = by_slope_desc(r);
    order.reverse();
    for i in order {
        let dim = r.vertices()[i].dim;
        let m = if i == t {
            Matrix::identity(dim)
        } else {
            let blocks: Vec<Matrix> = outgoing[i]
                .iter()
                .filter_map(|a| proj[a.to].as_ref().map(|p| p.mul(&a.matrix)))
                .collect();
            Matrix::vstack(&blocks, dim).row_basis()
        };
        proj[i] = Some(m);
    }
    let proj: Vec<Matrix> = proj.into_iter().map(|p| p.expect("all vertices visited")).collect();
    let mut verts = Vec::new();
    for (i, v) in r.vertices().iter().enumerate() {
        if proj[i].rows() > 0 {
            verts.push((v.weight.clone(), proj[i].rows()));
        }
    }
    let mut arrows = Vec::new();
    for a in r.arrows() {
        let (pf, pt) = (&proj[a.from], &proj[a.to]);
        if pf.rows() == 0 || pt.rows() == 0 {
            continue;
        }
        // X·pf = pt·M
        let xt = pf
            .transpose()
            .solve_matrix(&pt.mul(&a.matrix).transpose())
            .ok_or_else(|| Error::Internal("quotient map is not well defined".into()))?;
        arrows.push((r.vertices()[a.from].weight.clone(), r.vertices()[a.to].weight.clone(), xt.transpose()));
    }
    QuiverRep::from_parts(*r.space(), verts, arrows)
}

fn require_projective(s: &Space) -> Result<()> {
    if s.k != 0 {
        return Err(Error::Domain(format!("square rescaling is defined on P^n only, not {s}")));
    }
    Ok(())
}

/// The positive factor for the arrow leaving `from` with box (1, i):
/// Π_{j=2}^{i} (c_j + … + c_i + i − j + 1).
pub fn rescale_factor(s: &Space, from: &Weight, boxp: (usize, usize)) -> Result<Q> {
    require_projective(s)?;
    s.require_d1(from)?;
    let i = boxp.1;
    if boxp.0 != 1 || i == 0 || i > s.n {
        return Err(Error::Shape(format!("box pair {boxp:?} out of range for {s}")));
    }
    let c = from.coords();
    let mut h = q(1);
    for j in 2..=i {
        let sum: i64 = c[j - 1..i].iter().sum();
        h *= q(sum + (i - j + 1) as i64);
    }
    Ok(h)
}

fn rescaled(r: &QuiverRep, invert: bool) -> Result<QuiverRep> {
    require_projective(r.space())?;
    let arrows = r
        .arrows()
        .iter()
        .map(|a| {
            let h = rescale_factor(r.space(), &r.vertices()[a.from].weight, a.boxp)?;
            let f = if invert { h.recip() } else { h };
            Ok(Arrow { from: a.from, to: a.to, boxp: a.boxp, matrix: a.matrix.scale(&f) })
        })
        .collect::<Result<Vec<_>>>()?;
    QuiverRep::new(*r.space(), r.vertices().to_vec(), arrows)
}

/// Raw matrices to the normalization in which relations are commutative
/// squares.
pub fn rescale_to_commutative(r: &QuiverRep) -> Result<QuiverRep> {
    rescaled(r, false)
}

pub fn rescale_from_commutative(r: &QuiverRep) -> Result<QuiverRep> {
    rescaled(r, true)
}

/// On P^n: for every source and two distinct boxes, the paths through
/// vertices of Q_X agree (a single path must vanish).
pub fn squares_commute(r: &QuiverRep) -> Result<bool> {
    require_projective(r.space())?;
    let s = r.space();
    for v in r.vertices() {
        let steps = arrows_from(s, &v.weight)?;
        let mut targets: HashMap<Weight, Vec<Matrix>> = HashMap::new();
        let mut distinct: HashMap<Weight, bool> = HashMap::new();
        for (b1, mid) in &steps {
            for (b2, t) in arrows_from(s, mid)? {
                if r.vertex_index(&t).is_none() {
                    continue;
                }
                let m = r.map_or_zero(mid, &t).mul(&r.map_or_zero(&v.weight, mid));
                targets.entry(t.clone()).or_default().push(m);
                distinct.insert(t, *b1 != b2);
            }
        }
        for (t, paths) in targets {
            if !distinct[&t] {
                continue;
            }
            let ok = match paths.as_slice() {
                [one] => one.is_zero(),
                [a, b] => a == b,
                _ => return Err(Error::Internal(format!("unexpected path count to {t}"))),
            };
            if !ok {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

impl QuiverRep {
    pub fn vertex(&self, w: &Weight) -> Option<&Vertex> {
        self.vertex_index(w).map(|i| &self.vertices()[i])
    }
}
