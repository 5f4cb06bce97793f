//! Bott's algorithm, Bott chambers and their mirrors, Hasse path counts
//! and Cartan determinants.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::abs_det_i64;
use crate::rootsys::{from_eps, to_eps, EpsCoords, Space, Weight};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum BottOutcome {
    Singular,
    Value { degree: usize, nu: Weight },
}

impl BottOutcome {
    pub fn value(&self) -> Option<(usize, &Weight)> {
        match self {
            BottOutcome::Singular => None,
            BottOutcome::Value { degree, nu } => Some((*degree, nu)),
        }
    }
}

/// Number of pairs i < j with v[i] < v[j], by merge counting.
pub fn ascents(v: &[i64]) -> usize {
    fn sort_count(v: &mut [i64], buf: &mut Vec<i64>) -> usize {
        let n = v.len();
        if n < 2 {
            return 0;
        }
        let mid = n / 2;
        let mut count = sort_count(&mut v[..mid], buf) + sort_count(&mut v[mid..], buf);
        buf.clear();
        let (mut i, mut j) = (0, mid);
        while i < mid && j < n {
            if v[i] >= v[j] {
                buf.push(v[i]);
                i += 1;
            } else {
                count += mid - i;
                buf.push(v[j]);
                j += 1;
            }
        }
        buf.extend_from_slice(&v[i..mid]);
        buf.extend_from_slice(&v[j..n]);
        v.copy_from_slice(buf);
        count
    }
    let mut w = v.to_vec();
    sort_count(&mut w, &mut Vec::with_capacity(v.len()))
}

/// The algorithm on any integral weight: sort ε(w+g) descending.
pub fn bott_any(w: &Weight) -> BottOutcome {
    let g = Weight::rho(w.rank());
    let e = to_eps(&w.add(&g)).0;
    let mut sorted = e.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return BottOutcome::Singular;
    }
    let degree = ascents(&e);
    let nu = from_eps(&EpsCoords(sorted)).sub(&g);
    BottOutcome::Value { degree, nu }
}

/// H^*(E_w) for w ∈ D_1.
pub fn bott(s: &Space, w: &Weight) -> Result<BottOutcome> {
    s.require_d1(w)?;
    Ok(bott_any(w))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Direction {
    Up,
    Down,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mirror {
    pub target: Weight,
    pub xi_index: usize,
    pub steps: i64,
    pub direction: Direction,
}

/// Admissible mirrors of a regular weight across each Ω¹ direction.
pub fn mirrors(s: &Space, w: &Weight) -> Result<Vec<Mirror>> {
    s.require_d1(w)?;
    let g = Weight::rho(s.n);
    let e = to_eps(&w.add(&g)).0;
    if bott_any(w) == BottOutcome::Singular {
        return Err(Error::Domain(format!("weight {w} is Bott-singular; it has no mirrors")));
    }
    let before = ascents(&e);
    let mut out = Vec::new();
    for (idx, om) in s.omega1().iter().enumerate() {
        let (x, y) = (e[om.pos_u], e[om.pos_q]);
        let (lo, hi) = (x.min(y), x.max(y));
        let between = e
            .iter()
            .enumerate()
            .any(|(i, &v)| i != om.pos_u && i != om.pos_q && lo < v && v < hi);
        if between {
            continue;
        }
        let mut f = e.clone();
        f.swap(om.pos_u, om.pos_q);
        let after = ascents(&f);
        let direction = if after == before + 1 {
            Direction::Up
        } else if after + 1 == before {
            Direction::Down
        } else {
            return Err(Error::Internal(format!("mirror of {w} changed the degree by more than one")));
        };
        let target = from_eps(&EpsCoords(f)).sub(&g);
        out.push(Mirror { target, xi_index: idx, steps: hi - lo, direction });
    }
    Ok(out)
}

/// All weights λ with bott(λ) = (i, 0), sorted by degree, then by weight
/// in decreasing order.
pub fn chamber_vertices(s: &Space) -> Vec<(Weight, usize)> {
    let start = Weight::zero(s.n);
    let mut seen = BTreeMap::new();
    seen.insert(start.clone(), 0usize);
    let mut queue = VecDeque::from([start]);
    while let Some(w) = queue.pop_front() {
        let deg = seen[&w];
        if deg >= s.dim() {
            continue;
        }
        for m in mirrors(s, &w).expect("chamber vertices are regular and in D_1") {
            if m.direction == Direction::Up && !seen.contains_key(&m.target) {
                seen.insert(m.target.clone(), deg + 1);
                queue.push_back(m.target);
            }
        }
    }
    let mut v: Vec<(Weight, usize)> = seen.into_iter().collect();
    v.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| b.0.cmp(&a.0)));
    v
}

/// The Bott chamber of a regular weight, as the set of value ranks (0 =
/// largest entry of ε(w+g)) sitting in the first Levi block.
pub fn chamber_of(s: &Space, w: &Weight) -> Option<BTreeSet<usize>> {
    let e = to_eps(&w.add(&Weight::rho(s.n))).0;
    let mut order: Vec<usize> = (0..e.len()).collect();
    order.sort_by(|&a, &b| e[b].cmp(&e[a]));
    if order.windows(2).any(|p| e[p[0]] == e[p[1]]) {
        return None;
    }
    let mut rank_of = vec![0; e.len()];
    for (r, &pos) in order.iter().enumerate() {
        rank_of[pos] = r;
    }
    Some((0..=s.k).map(|pos| rank_of[pos]).collect())
}

/// Number of maximal paths in the chamber-adjacency graph.
pub fn hasse_degree(s: &Space) -> BigUint {
    let verts = chamber_vertices(s);
    let mut paths: BTreeMap<Weight, BigUint> = BTreeMap::new();
    paths.insert(Weight::zero(s.n), BigUint::one());
    let mut top = BigUint::zero();
    for (w, deg) in &verts {
        let here = paths.get(w).cloned().unwrap_or_default();
        if *deg == s.dim() {
            top += &here;
            continue;
        }
        for m in mirrors(s, w).expect("chamber vertex") {
            if m.direction == Direction::Up {
                *paths.entry(m.target).or_default() += &here;
            }
        }
    }
    top
}

/// |det| of a square integer matrix: the number of connected components
/// of the quiver for the corresponding Hermitian symmetric space.
pub fn components_count(cartan: &[Vec<i64>]) -> Result<BigInt> {
    if cartan.iter().any(|r| r.len() != cartan.len()) {
        return Err(Error::Shape("Cartan matrix must be square".into()));
    }
    Ok(abs_det_i64(cartan))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CartanType {
    A,
    B,
    C,
    D,
    E,
}

impl std::str::FromStr for CartanType {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(CartanType::A),
            "B" => Ok(CartanType::B),
            "C" => Ok(CartanType::C),
            "D" => Ok(CartanType::D),
            "E" => Ok(CartanType::E),
            other => Err(Error::Parse(format!("unknown Cartan type {other:?}"))),
        }
    }
}

/// Cartan matrix in Bourbaki numbering.
pub fn cartan_matrix(t: CartanType, rank: usize) -> Result<Vec<Vec<i64>>> {
    let bad = || Error::Domain(format!("no Cartan matrix of type {t:?}{rank}"));
    let min = match t {
        CartanType::A => 1,
        CartanType::B | CartanType::C => 2,
        CartanType::D => 3,
        CartanType::E => 6,
    };
    if rank < min || (t == CartanType::E && rank > 8) {
        return Err(bad());
    }
    let mut m = vec![vec![0i64; rank]; rank];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut link = |a: usize, b: usize| {
        m[a][b] = -1;
        m[b][a] = -1;
    };
    match t {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..rank - 1 {
                link(i, i + 1);
            }
        }
        CartanType::D => {
            for i in 0..rank - 2 {
                link(i, i + 1);
            }
            link(rank - 3, rank - 1);
        }
        CartanType::E => {
            link(0, 2);
            link(1, 3);
            for i in 2..rank - 1 {
                link(i, i + 1);
            }
        }
    }
    match t {
        CartanType::B => m[rank - 2][rank - 1] = -2,
        CartanType::C => m[rank - 1][rank - 2] = -2,
        _ => {}
    }
    Ok(m)
}
