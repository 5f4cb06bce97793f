//! Random representations for property tests and the acceptance suite.
//!
//! Admissible representations are built level by level: arrows leaving the
//! top slope level are random, and arrows leaving each later level are a
//! random point of the linear space cut out by the relations whose first
//! step is already fixed.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{ToPrimitive, Zero};
use rand::Rng;

use crate::linalg::{Matrix, Q};
use crate::rootsys::{Space, Weight};

use super::{arrows_from, relation_entries, QuiverRep};

#[derive(Clone, Debug)]
pub struct RandomSpec {
    /// Arrow steps explored from the base vertex.
    pub depth: usize,
    pub max_dim: usize,
    /// Probability of keeping each explored vertex other than the base.
    pub keep: f64,
    /// Bound on the base weight's coordinates.
    pub coord_max: i64,
}

impl Default for RandomSpec {
    fn default() -> Self {
        RandomSpec { depth: 3, max_dim: 2, keep: 0.85, coord_max: 2 }
    }
}

fn random_q<R: Rng>(rng: &mut R) -> Q {
    Q::new(rng.gen_range(-3i64..=3).into(), rng.gen_range(1i64..=3).into())
}

fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix {
    Matrix::from_rows((0..rows).map(|_| (0..cols).map(|_| random_q(rng)).collect()).collect())
}

/// A connected chunk of one component of Q_X with random dimensions.
pub fn random_support<R: Rng>(s: &Space, rng: &mut R, spec: &RandomSpec) -> Vec<(Weight, usize)> {
    let base = Weight(
        (0..s.n)
            .map(|i| {
                if i == s.k {
                    rng.gen_range(-spec.coord_max - 2..=spec.coord_max)
                } else {
                    rng.gen_range(0..=spec.coord_max)
                }
            })
            .collect(),
    );
    let mut seen = BTreeSet::from([base.clone()]);
    let mut frontier = vec![base.clone()];
    for _ in 0..spec.depth {
        let mut next = Vec::new();
        for w in &frontier {
            for (_, t) in arrows_from(s, w).expect("explored weights lie in D_1") {
                if seen.insert(t.clone()) {
                    next.push(t);
                }
            }
        }
        frontier = next;
    }
    let mut out = Vec::new();
    for w in seen {
        if w == base || rng.gen_bool(spec.keep) {
            out.push((w, rng.gen_range(1..=spec.max_dim)));
        }
    }
    out
}

/// Random matrices on every arrow slot, relations ignored.
pub fn random_rep<R: Rng>(s: &Space, rng: &mut R, spec: &RandomSpec) -> QuiverRep {
    let skeleton = QuiverRep::from_parts(*s, random_support(s, rng, spec), vec![]).expect("valid support");
    let arrows = skeleton
        .arrow_slots()
        .into_iter()
        .map(|(f, t, _)| {
            let m = random_matrix(rng, skeleton.vertices()[t].dim, skeleton.vertices()[f].dim);
            (f, t, m)
        })
        .collect();
    skeleton.with_matrices(arrows).expect("slots are arrows")
}

fn level(s: &Space, top: &Q, w: &Weight) -> usize {
    let l = (top - s.slope_unchecked(w)) / -s.omega1_slope();
    l.to_integer().to_usize().expect("levels are non-negative integers")
}

/// A random representation satisfying every relation.
pub fn random_admissible_rep<R: Rng>(s: &Space, rng: &mut R, spec: &RandomSpec) -> QuiverRep {
    let skeleton = QuiverRep::from_parts(*s, random_support(s, rng, spec), vec![]).expect("valid support");
    admissible_on(&skeleton, rng)
}

/// Fills the arrow slots of `skeleton` with a random admissible choice.
pub fn admissible_on<R: Rng>(skeleton: &QuiverRep, rng: &mut R) -> QuiverRep {
    let s = skeleton.space();
    let verts = skeleton.vertices();
    let top = verts.iter().map(|v| s.slope_unchecked(&v.weight)).max().unwrap_or_else(Q::zero);
    let lv: Vec<usize> = verts.iter().map(|v| level(s, &top, &v.weight)).collect();
    let slots = skeleton.arrow_slots();
    let entries = relation_entries(skeleton);
    let max_level = lv.iter().copied().max().unwrap_or(0);

    let mut fixed: HashMap<(usize, usize), Matrix> = HashMap::new();
    for l in 0..=max_level {
        let here: Vec<(usize, usize)> = slots.iter().filter(|(f, _, _)| lv[*f] == l).map(|&(f, t, _)| (f, t)).collect();
        if here.is_empty() {
            continue;
        }
        if l == 0 {
            for (f, t) in here {
                fixed.insert((f, t), random_matrix(rng, verts[t].dim, verts[f].dim));
            }
            continue;
        }
        // Unknown entries of every arrow leaving this level.
        let mut offset = BTreeMap::new();
        let mut nvars = 0;
        for &(f, t) in &here {
            offset.insert((f, t), nvars);
            nvars += verts[t].dim * verts[f].dim;
        }
        let mut rows: Vec<Vec<Q>> = Vec::new();
        for e in entries.iter() {
            let src = skeleton.vertex_index(&e.source).expect("support vertex");
            if lv[src] + 1 != l {
                continue;
            }
            let tgt = skeleton.vertex_index(&e.target).expect("support vertex");
            let (dt, ds) = (verts[tgt].dim, verts[src].dim);
            for eq in &e.equations {
                for i in 0..dt {
                    for j in 0..ds {
                        let mut row = vec![Q::zero(); nvars];
                        for (c, p) in &eq.terms {
                            let Some(mid) = skeleton.vertex_index(&p.mid) else { continue };
                            let (Some(first), Some(&off)) = (fixed.get(&(src, mid)), offset.get(&(mid, tgt))) else {
                                continue;
                            };
                            let dm = verts[mid].dim;
                            // (X · F)[i][j] = Σ_m X[i][m] F[m][j]
                            for m in 0..dm {
                                if !first[(m, j)].is_zero() {
                                    row[off + i * dm + m] += c * &first[(m, j)];
                                }
                            }
                        }
                        if row.iter().any(|x| !x.is_zero()) {
                            rows.push(row);
                        }
                    }
                }
            }
        }
        let solution: Vec<Q> = if rows.is_empty() {
            (0..nvars).map(|_| random_q(rng)).collect()
        } else {
            let basis = Matrix::from_rows(rows).nullspace();
            let mut x = vec![Q::zero(); nvars];
            for b in basis {
                let c = Q::from_integer(rng.gen_range(-2i64..=2).into());
                for (xi, bi) in x.iter_mut().zip(b) {
                    *xi += &c * bi;
                }
            }
            x
        };
        for (&(f, t), &off) in &offset {
            let (dt, df) = (verts[t].dim, verts[f].dim);
            let m = Matrix::from_rows((0..dt).map(|i| solution[off + i * df..off + (i + 1) * df].to_vec()).collect());
            fixed.insert((f, t), m);
        }
    }
    let arrows = slots
        .into_iter()
        .map(|(f, t, _)| {
            let m = fixed.remove(&(f, t)).expect("every slot assigned");
            (f, t, m)
        })
        .collect();
    skeleton.with_matrices(arrows).expect("slots are arrows")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::check_relations;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn admissible_reps_satisfy_relations() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for (k, n) in [(0, 2), (1, 3), (0, 3), (2, 4)] {
            let s = Space::new(k, n).unwrap();
            let mut nonzero = 0;
            for _ in 0..12 {
                let r = random_admissible_rep(&s, &mut rng, &RandomSpec::default());
                assert!(check_relations(&r).is_empty(), "{s}");
                nonzero += r.arrows().iter().filter(|a| !a.matrix.is_zero()).count();
            }
            assert!(nonzero > 0);
        }
    }

    #[test]
    fn unconstrained_reps_usually_violate() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let s = Space::projective(2).unwrap();
        let bad = (0..20)
            .filter(|_| !check_relations(&random_rep(&s, &mut rng, &RandomSpec::default())).is_empty())
            .count();
        assert!(bad > 0);
    }
}
