//! Cohomology of a homogeneous bundle from its quiver representation.
//!
//! Vertices are grouped by the Bott value ν of E_λ. Within a class the
//! degree-i vertices map to degree-(i+1) vertices along up-mirrors; each
//! block is the product of the arrows on the ξ-segment joining them, with
//! a ±1 sign. H^i(E) is the homology of the resulting complex.

use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use rayon::prelude::*;
use serde::Serialize;

use crate::bott::{bott_any, chamber_of, mirrors, BottOutcome, Direction};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quiver::{check_relations, QuiverRep};
use crate::rootsys::{module_dim, Space, Weight};

/// The vertices whose Bott value is (degree, ν).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradedPiece {
    pub nu: Weight,
    pub degree: usize,
    /// (vertex index, multiplicity).
    pub blocks: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub degree: usize,
    pub nu: Weight,
    pub multiplicity: usize,
    #[serde(serialize_with = "ser_big")]
    pub dim: BigUint,
}

fn ser_big<S: serde::Serializer>(x: &BigUint, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_string())
}

/// H^i as a multiset of irreducible modules, sorted by degree then ν.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub rows: Vec<TableRow>,
}

impl CohomologyTable {
    fn from_counts(counts: BTreeMap<(usize, Weight), usize>) -> Self {
        let rows = counts
            .into_iter()
            .filter(|(_, m)| *m > 0)
            .map(|((degree, nu), multiplicity)| {
                let dim = module_dim(&nu);
                TableRow { degree, nu, multiplicity, dim }
            })
            .collect();
        CohomologyTable { rows }
    }

    /// Σ_i (−1)^i dim H^i.
    pub fn euler_dim(&self) -> BigInt {
        self.rows
            .iter()
            .map(|r| {
                let d = BigInt::from(r.dim.clone()) * BigInt::from(r.multiplicity);
                if r.degree % 2 == 0 {
                    d
                } else {
                    -d
                }
            })
            .sum()
    }

    pub fn total_dim(&self, degree: usize) -> BigUint {
        self.rows
            .iter()
            .filter(|r| r.degree == degree)
            .map(|r| &r.dim * BigUint::from(r.multiplicity))
            .sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// Multiset union.
    pub fn merged(&self, other: &CohomologyTable) -> CohomologyTable {
        let mut counts = BTreeMap::new();
        for r in self.rows.iter().chain(&other.rows) {
            *counts.entry((r.degree, r.nu.clone())).or_insert(0) += r.multiplicity;
        }
        CohomologyTable::from_counts(counts)
    }

    pub fn to_text(&self) -> String {
        if self.rows.is_empty() {
            return "all cohomology vanishes\n".into();
        }
        let mut out = format!("{:>3}  {:<24} {:>5}  {}\n", "i", "nu", "mult", "dim V_nu");
        for r in &self.rows {
            out.push_str(&format!("{:>3}  {:<24} {:>5}  {}\n", r.degree, r.nu.to_string(), r.multiplicity, r.dim));
        }
        out
    }
}

/// Edge signs on the chamber graph of a space: one ±1 per up-mirror
/// between chambers, every square multiplying to −1.
#[derive(Clone, Debug)]
pub struct SignSystem {
    edges: HashMap<(u64, u64), usize>,
    values: Vec<bool>,
    kernel: Vec<Vec<bool>>,
}

fn mask(set: &std::collections::BTreeSet<usize>) -> u64 {
    set.iter().fold(0u64, |m, &r| m | (1 << r))
}

/// All k-element subsets of {0, …, n−1} as bit masks, in increasing order.
fn subsets(n: usize, k: usize) -> Vec<u64> {
    let mut out = Vec::new();
    if k == 0 || k > n {
        return out;
    }
    let mut m: u64 = (1 << k) - 1;
    while m < 1 << n {
        out.push(m);
        let c = m & m.wrapping_neg();
        let r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    out
}

fn up_moves(m: u64, n: usize) -> Vec<u64> {
    (0..n - 1)
        .filter(|&r| m & (1 << r) != 0 && m & (1 << (r + 1)) == 0)
        .map(|r| (m & !(1 << r)) | (1 << (r + 1)))
        .collect()
}

/// Solves A x = b over GF(2); returns a solution and a kernel basis.
fn solve_gf2(rows: &[Vec<bool>], rhs: &[bool], nvars: usize) -> Option<(Vec<bool>, Vec<Vec<bool>>)> {
    let mut a: Vec<(Vec<bool>, bool)> = rows.iter().cloned().zip(rhs.iter().copied()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..nvars {
        let Some(p) = (r..a.len()).find(|&i| a[i].0[c]) else { continue };
        a.swap(r, p);
        let pivot = a[r].clone();
        for (i, row) in a.iter_mut().enumerate() {
            if i != r && row.0[c] {
                for j in 0..nvars {
                    row.0[j] ^= pivot.0[j];
                }
                row.1 ^= pivot.1;
            }
        }
        pivots.push(c);
        r += 1;
    }
    if a[r..].iter().any(|row| row.1) {
        return None;
    }
    let mut x = vec![false; nvars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = a[i].1;
    }
    let kernel = (0..nvars)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![false; nvars];
            v[f] = true;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = a[i].0[f];
            }
            v
        })
        .collect();
    Some((x, kernel))
}

impl SignSystem {
    pub fn solve(s: &Space) -> Result<SignSystem> {
        let n = s.n + 1;
        if n > 63 {
            return Err(Error::Domain(format!("{s} is too large for the sign system")));
        }
        let mut edges = HashMap::new();
        for m in subsets(n, s.k + 1) {
            for t in up_moves(m, n) {
                let id = edges.len();
                edges.insert((m, t), id);
            }
        }
        let mut rows = Vec::new();
        for m in subsets(n, s.k + 1) {
            let mids = up_moves(m, n);
            for (i, a) in mids.iter().enumerate() {
                for b in &mids[i + 1..] {
                    let ta = up_moves(*a, n);
                    for t in up_moves(*b, n).into_iter().filter(|t| ta.contains(t)) {
                        let mut row = vec![false; edges.len()];
                        for e in [(m, *a), (*a, t), (m, *b), (*b, t)] {
                            row[edges[&e]] ^= true;
                        }
                        rows.push(row);
                    }
                }
            }
        }
        let rhs = vec![true; rows.len()];
        let (values, kernel) = solve_gf2(&rows, &rhs, edges.len())
            .ok_or_else(|| Error::Internal(format!("inconsistent sign system on {s}")))?;
        Ok(SignSystem { edges, values, kernel })
    }

    /// Number of independent gauge changes.
    pub fn gauge_dim(&self) -> usize {
        self.kernel.len()
    }

    /// Another solution: this one plus the i-th kernel vector.
    pub fn shifted(&self, i: usize) -> SignSystem {
        let mut out = self.clone();
        for (v, k) in out.values.iter_mut().zip(&self.kernel[i]) {
            *v ^= k;
        }
        out
    }

    /// Sign of the edge between two chambers (as rank sets).
    pub fn sign(&self, from: u64, to: u64) -> Option<i64> {
        self.edges.get(&(from, to)).map(|&i| if self.values[i] { -1 } else { 1 })
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }
}

/// One ν-class: vertices by degree and the maps c_i.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassComplex {
    pub nu: Weight,
    /// For each degree 0..=dim X, the (weight, multiplicity) blocks.
    pub blocks: Vec<Vec<(Weight, usize)>>,
    /// c_i from degree i to degree i+1.
    pub maps: Vec<Matrix>,
}

impl ClassComplex {
    fn dims(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.iter().map(|x| x.1).sum()).collect()
    }

    /// The first i with c_{i+1}·c_i ≠ 0.
    pub fn defect(&self) -> Option<usize> {
        (0..self.maps.len().saturating_sub(1)).find(|&i| !self.maps[i + 1].mul(&self.maps[i]).is_zero())
    }

    /// Homology multiplicities dim − rank c_i − rank c_{i−1}.
    pub fn homology(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(|m| m.rank()).collect();
        self.dims()
            .iter()
            .enumerate()
            .map(|(i, d)| {
                let out = ranks.get(i).copied().unwrap_or(0);
                let inc = if i == 0 { 0 } else { ranks.get(i - 1).copied().unwrap_or(0) };
                d - out - inc
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyComplex {
    pub classes: Vec<ClassComplex>,
}

impl CohomologyComplex {
    pub fn defect(&self) -> Option<(Weight, usize)> {
        self.classes.iter().find_map(|c| c.defect().map(|i| (c.nu.clone(), i)))
    }

    pub fn table(&self) -> CohomologyTable {
        let per: Vec<(Weight, Vec<usize>)> = self.classes.par_iter().map(|c| (c.nu.clone(), c.homology())).collect();
        let mut counts = BTreeMap::new();
        for (nu, h) in per {
            for (i, m) in h.into_iter().enumerate() {
                counts.insert((i, nu.clone()), m);
            }
        }
        CohomologyTable::from_counts(counts)
    }
}

fn require_valid(r: &QuiverRep) -> Result<()> {
    if let Some(v) = check_relations(r).first() {
        return Err(Error::Relations(v.to_string()));
    }
    Ok(())
}

fn pieces(r: &QuiverRep) -> Vec<GradedPiece> {
    let mut groups: BTreeMap<(usize, Weight), Vec<(usize, usize)>> = BTreeMap::new();
    for (i, v) in r.vertices().iter().enumerate() {
        if let BottOutcome::Value { degree, nu } = bott_any(&v.weight) {
            groups.entry((degree, nu)).or_default().push((i, v.dim));
        }
    }
    groups.into_iter().map(|((degree, nu), blocks)| GradedPiece { nu, degree, blocks }).collect()
}

/// H^*(gr E): Bott applied vertexwise.
pub fn graded_cohomology(r: &QuiverRep) -> Result<Vec<GradedPiece>> {
    require_valid(r)?;
    Ok(pieces(r))
}

pub fn graded_table(r: &QuiverRep) -> CohomologyTable {
    let mut counts = BTreeMap::new();
    for p in pieces(r) {
        let m: usize = p.blocks.iter().map(|b| b.1).sum();
        *counts.entry((p.degree, p.nu)).or_insert(0) += m;
    }
    CohomologyTable::from_counts(counts)
}

/// Product of the arrows λ → λ+ξ → … → λ+steps·ξ, or zero if a vertex or
/// arrow is missing.
fn segment(r: &QuiverRep, from: &Weight, xi: &Weight, steps: i64) -> Matrix {
    let mut acc = Matrix::identity(r.dim_at(from));
    let mut cur = from.clone();
    for _ in 0..steps {
        let next = cur.add(xi);
        match r.arrow_between(&cur, &next) {
            Some(a) => acc = a.matrix.mul(&acc),
            None => {
                let end = from.add(&xi.scale(steps));
                return Matrix::zeros(r.dim_at(&end), r.dim_at(from));
            }
        }
        cur = next;
    }
    acc
}

/// The complex with the given signs, keeping mirrors of at most
/// `max_steps` steps when given. No validity checks.
pub fn assemble(r: &QuiverRep, signs: &SignSystem, max_steps: Option<i64>) -> Result<CohomologyComplex> {
    let s = r.space();
    let top = s.dim();
    let om = s.omega1();
    let classes: Vec<GradedPiece> = pieces(r);
    let mut by_nu: BTreeMap<Weight, Vec<Vec<(Weight, usize)>>> = BTreeMap::new();
    for p in &classes {
        let slot = by_nu.entry(p.nu.clone()).or_insert_with(|| vec![Vec::new(); top + 1]);
        for &(i, d) in &p.blocks {
            slot[p.degree].push((r.vertices()[i].weight.clone(), d));
        }
    }
    let built: Vec<Result<ClassComplex>> = by_nu
        .into_par_iter()
        .map(|(nu, mut blocks)| {
            for b in blocks.iter_mut() {
                b.sort();
            }
            let mut maps = Vec::with_capacity(top);
            for i in 0..top {
                let (src, dst) = (&blocks[i], &blocks[i + 1]);
                let rows: usize = dst.iter().map(|b| b.1).sum();
                let cols: usize = src.iter().map(|b| b.1).sum();
                let mut c = Matrix::zeros(rows, cols);
                let mut col0 = 0;
                for (w, dw) in src {
                    let from = mask(&chamber_of(s, w).expect("regular weight"));
                    let up: Vec<_> = mirrors(s, w)?.into_iter().filter(|m| m.direction == Direction::Up).collect();
                    for (i, m) in up.iter().enumerate() {
                        if up[..i].iter().any(|p| p.target == m.target) {
                            return Err(Error::Domain(format!("{w} and {} are joined by more than one direction", m.target)));
                        }
                    }
                    for m in up {
                        if max_steps.is_some_and(|k| m.steps > k) {
                            continue;
                        }
                        let Some(pos) = dst.iter().position(|(t, _)| *t == m.target) else { continue };
                        let row0: usize = dst[..pos].iter().map(|b| b.1).sum();
                        let to = mask(&chamber_of(s, &m.target).expect("regular weight"));
                        let sign = signs.sign(from, to).ok_or_else(|| {
                            Error::Internal(format!("mirror {w} -> {} is not a chamber edge", m.target))
                        })?;
                        let block = segment(r, w, &om[m.xi_index].weight, m.steps);
                        let block = if sign < 0 { block.neg() } else { block };
                        c.add_block(row0, col0, &block);
                    }
                    col0 += dw;
                }
                maps.push(c);
            }
            Ok(ClassComplex { nu, blocks, maps })
        })
        .collect();
    Ok(CohomologyComplex { classes: built.into_iter().collect::<Result<Vec<_>>>()? })
}

pub fn build_complex(r: &QuiverRep) -> Result<CohomologyComplex> {
    build_complex_with(r, &SignSystem::solve(r.space())?)
}

pub fn build_complex_with(r: &QuiverRep, signs: &SignSystem) -> Result<CohomologyComplex> {
    require_valid(r)?;
    let c = assemble(r, signs, None)?;
    if let Some((nu, i)) = c.defect() {
        return Err(Error::Internal(format!("c_{} · c_{i} ≠ 0 in the class ν = {nu}", i + 1)));
    }
    Ok(c)
}

pub fn cohomology(r: &QuiverRep) -> Result<CohomologyTable> {
    Ok(build_complex(r)?.table())
}

pub fn cohomology_with(r: &QuiverRep, signs: &SignSystem) -> Result<CohomologyTable> {
    Ok(build_complex_with(r, signs)?.table())
}

/// The sequence keeping only mirrors of at most `n` steps.
#[derive(Clone, Debug)]
pub struct Truncated {
    pub steps: i64,
    pub complex: CohomologyComplex,
    pub is_complex: bool,
    /// Homology of the truncated sequence, when it is a complex.
    pub table: Option<CohomologyTable>,
    /// Set when 1 < n < the longest mirror in the support: the values are
    /// homology of a truncated sequence, with no claim of how they sit
    /// inside H^i(E).
    pub caveat: bool,
}

fn longest_mirror(r: &QuiverRep) -> Result<i64> {
    let mut best = 0;
    for v in r.vertices() {
        if bott_any(&v.weight) == BottOutcome::Singular {
            continue;
        }
        for m in mirrors(r.space(), &v.weight)? {
            if m.direction == Direction::Up && r.vertex_index(&m.target).is_some() {
                best = best.max(m.steps);
            }
        }
    }
    Ok(best)
}

pub fn truncated_complex(r: &QuiverRep, steps: i64) -> Result<Truncated> {
    if steps < 1 {
        return Err(Error::Domain("the truncation length must be at least 1".into()));
    }
    require_valid(r)?;
    let signs = SignSystem::solve(r.space())?;
    let complex = assemble(r, &signs, Some(steps))?;
    let defect = complex.defect();
    if let (Some((nu, i)), true) = (&defect, steps == 1) {
        return Err(Error::Internal(format!("c_{}[1] · c_{i}[1] ≠ 0 in the class ν = {nu}", i + 1)));
    }
    let longest = longest_mirror(r)?;
    if let (Some((nu, i)), true) = (&defect, steps >= longest) {
        return Err(Error::Internal(format!("c_{} · c_{i} ≠ 0 in the class ν = {nu}", i + 1)));
    }
    let is_complex = defect.is_none();
    let table = is_complex.then(|| complex.table());
    Ok(Truncated { steps, complex, is_complex, table, caveat: steps > 1 && steps < longest })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;
    use crate::quiver::rescale_from_commutative;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn s1(x: i64) -> Matrix {
        Matrix::scalar(q(x))
    }

    fn rows(t: &CohomologyTable) -> Vec<(usize, Weight, usize)> {
        t.rows.iter().map(|r| (r.degree, r.nu.clone(), r.multiplicity)).collect()
    }

    #[test]
    fn subsets_enumerated() {
        assert_eq!(subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(subsets(10, 3).len(), 120);
    }

    #[test]
    fn random_reps_give_complexes() {
        use crate::quiver::random::{random_admissible_rep, RandomSpec};
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for (k, n) in [(0, 2), (1, 3)] {
            let s = Space::new(k, n).unwrap();
            let signs = SignSystem::solve(&s).unwrap();
            for _ in 0..40 {
                let r = random_admissible_rep(&s, &mut rng, &RandomSpec::default());
                let c = assemble(&r, &signs, None).unwrap();
                assert_eq!(c.defect(), None, "{}", crate::quiver::to_json(&r));
            }
        }
    }

    #[test]
    fn gf2_solver() {
        let rows = vec![vec![true, true, false], vec![false, true, true]];
        let (x, k) = solve_gf2(&rows, &[true, false], 3).unwrap();
        assert!(x[0] ^ x[1]);
        assert!(!(x[1] ^ x[2]));
        assert_eq!(k.len(), 1);
        assert!(solve_gf2(&[vec![true], vec![true]], &[true, false], 1).is_none());
    }

    #[test]
    fn sign_systems_exist_and_squares_anticommute() {
        for (k, n) in [(0, 2), (0, 4), (1, 3), (1, 4), (2, 5), (2, 4)] {
            let s = Space::new(k, n).unwrap();
            let sys = SignSystem::solve(&s).unwrap();
            let nn = n + 1;
            for m in subsets(nn, k + 1) {
                let mids = up_moves(m, nn);
                for (i, a) in mids.iter().enumerate() {
                    for b in &mids[i + 1..] {
                        for t in up_moves(*a, nn).into_iter().filter(|t| up_moves(*b, nn).contains(t)) {
                            let p = sys.sign(m, *a).unwrap()
                                * sys.sign(*a, t).unwrap()
                                * sys.sign(m, *b).unwrap()
                                * sys.sign(*b, t).unwrap();
                            assert_eq!(p, -1);
                        }
                    }
                }
            }
            if k == 0 {
                assert_eq!(sys.edge_count(), n);
                assert!((0..sys.edge_count()).all(|i| !sys.values[i]));
            }
        }
    }

    #[test]
    fn explicit_sign_rule_is_a_solution() {
        // (−1)^(sum of the ranks below the moved one) also solves the
        // square equations.
        let s = Space::new(1, 4).unwrap();
        let nn = 5;
        let sys = SignSystem::solve(&s).unwrap();
        let explicit = |m: u64, t: u64| -> i64 {
            let moved = (m & !t).trailing_zeros();
            let below: u32 = (0..moved).filter(|r| m & (1 << r) != 0).sum();
            if below.is_multiple_of(2) {
                1
            } else {
                -1
            }
        };
        for m in subsets(nn, 2) {
            let mids = up_moves(m, nn);
            for (i, a) in mids.iter().enumerate() {
                for b in &mids[i + 1..] {
                    for t in up_moves(*a, nn).into_iter().filter(|t| up_moves(*b, nn).contains(t)) {
                        let p = explicit(m, *a) * explicit(*a, t) * explicit(m, *b) * explicit(*b, t);
                        assert_eq!(p, -1);
                    }
                }
            }
        }
        assert!(sys.gauge_dim() > 0);
    }

    #[test]
    fn euler_rep_graded() {
        for n in 2..=4 {
            let s = Space::projective(n).unwrap();
            let mut t = vec![0i64; n];
            t[0] = 1;
            t[n - 1] += 1;
            let r = QuiverRep::from_parts(s, vec![(w(&vec![0; n]), 1), (Weight(t.clone()), 1)], vec![]).unwrap();
            let g = graded_cohomology(&r).unwrap();
            assert_eq!(g.len(), 2);
            assert!(g.iter().all(|p| p.degree == 0));
            let nus: Vec<Weight> = g.iter().map(|p| p.nu.clone()).collect();
            assert!(nus.contains(&Weight(t)));
        }
        let p2 = Space::projective(2).unwrap();
        let single = QuiverRep::from_parts(p2, vec![(w(&[-1, 0]), 1)], vec![]).unwrap();
        assert!(graded_cohomology(&single).unwrap().is_empty());
    }

    #[test]
    fn dual_euler_cancels() {
        let p2 = Space::projective(2).unwrap();
        let r = QuiverRep::from_parts(
            p2,
            vec![(w(&[0, 0]), 1), (w(&[-2, 1]), 1)],
            vec![(w(&[0, 0]), w(&[-2, 1]), s1(5))],
        )
        .unwrap();
        let c = build_complex(&r).unwrap();
        assert_eq!(c.classes.len(), 1);
        assert_eq!(c.classes[0].maps[0], s1(5));
        assert!(cohomology(&r).unwrap().is_zero());
        let split = QuiverRep::from_parts(
            p2,
            vec![(w(&[0, 0]), 1), (w(&[-2, 1]), 1)],
            vec![(w(&[0, 0]), w(&[-2, 1]), s1(0))],
        )
        .unwrap();
        assert_eq!(cohomology(&split).unwrap(), graded_table(&split));
        assert_eq!(rows(&graded_table(&split)), vec![(0, w(&[0, 0]), 1), (1, w(&[0, 0]), 1)]);
    }

    #[test]
    fn two_step_chain() {
        let p2 = Space::projective(2).unwrap();
        let (a, b, c) = (w(&[1, 0]), w(&[-1, 1]), w(&[-3, 2]));
        let r = QuiverRep::from_parts(
            p2,
            vec![(a.clone(), 1), (b.clone(), 1), (c.clone(), 1)],
            vec![(a, b.clone(), s1(1)), (b, c, s1(1))],
        )
        .unwrap();
        let full = build_complex(&r).unwrap();
        assert_eq!(full.classes.len(), 1);
        assert_eq!(full.classes[0].maps[0], s1(1));
        assert!(cohomology(&r).unwrap().is_zero());
        let t1 = truncated_complex(&r, 1).unwrap();
        assert!(t1.complex.classes[0].maps[0].is_zero());
        assert!(!t1.caveat);
        assert_eq!(t1.table.unwrap(), graded_table(&r));
        let t2 = truncated_complex(&r, 2).unwrap();
        assert_eq!(t2.complex, full);
        assert!(truncated_complex(&r, 0).is_err());
    }

    #[test]
    fn grassmannian_wedge_example() {
        let g = Space::new(1, 3).unwrap();
        let (o1, om, om1) = (w(&[0, 1, 0]), w(&[1, -1, 1]), w(&[0, -1, 0]));
        let r = QuiverRep::from_parts(
            g,
            vec![(o1.clone(), 1), (om.clone(), 1), (om1.clone(), 1)],
            vec![(o1, om.clone(), s1(1)), (om, om1, s1(1))],
        )
        .unwrap();
        let t = cohomology(&r).unwrap();
        assert_eq!(rows(&t), vec![(0, w(&[0, 1, 0]), 1)]);
        assert_eq!(t.rows[0].dim, BigUint::from(6u32));
    }

    #[test]
    fn adjoint_bundle() {
        let p2 = Space::projective(2).unwrap();
        let (o, q1, qm2, s2) = (w(&[0, 0]), w(&[1, 1]), w(&[-2, 1]), w(&[-1, 2]));
        let comm = QuiverRep::from_parts(
            p2,
            vec![(o.clone(), 1), (q1.clone(), 1), (qm2.clone(), 1), (s2.clone(), 1)],
            vec![
                (q1.clone(), o.clone(), s1(1)),
                (o, qm2.clone(), s1(1)),
                (q1, s2.clone(), s1(1)),
                (s2, qm2, s1(1)),
            ],
        )
        .unwrap();
        let raw = rescale_from_commutative(&comm).unwrap();
        let t = cohomology(&raw).unwrap();
        assert_eq!(rows(&t), vec![(0, w(&[1, 1]), 1)]);
        assert_eq!(t.total_dim(0), BigUint::from(8u32));
        assert!(matches!(cohomology(&comm), Err(Error::Relations(_))));
    }
}
