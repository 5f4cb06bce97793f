//! Type-A weight lattice, the Grassmannian space data and the bundle shape
//! dictionary `S^α U ⊗ S^β Q*(t)` ↔ weight.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::Q;

/// Coefficients of the fundamental weights λ_1, …, λ_n of SL(n+1).
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

/// GL-style coordinates: e_i − e_{i+1} = c_i, last entry 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct EpsCoords(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// g = λ_1 + ⋯ + λ_n.
    pub fn rho(rank: usize) -> Self {
        Weight(vec![1; rank])
    }

    /// λ_i, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    /// α_i, 1-based: the i-th row of the Cartan matrix.
    pub fn simple_root(rank: usize, i: usize) -> Self {
        let mut w = Self::zero(rank);
        w.0[i - 1] = 2;
        if i >= 2 {
            w.0[i - 2] = -1;
        }
        if i < rank {
            w.0[i] = -1;
        }
        w
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn add(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, s: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * s).collect())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Parses a comma-separated integer list.
    pub fn parse(text: &str) -> Result<Weight> {
        let t = text.trim();
        if t.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        t.split(',')
            .map(|p| {
                p.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad weight coordinate {:?}", p.trim())))
            })
            .collect::<Result<Vec<_>>>()
            .map(Weight)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

pub fn to_eps(w: &Weight) -> EpsCoords {
    let n = w.rank();
    let mut e = vec![0i64; n + 1];
    for i in (0..n).rev() {
        e[i] = e[i + 1] + w.0[i];
    }
    EpsCoords(e)
}

/// Inverse of [`to_eps`]; any translate of `e` gives the same weight.
pub fn from_eps(e: &EpsCoords) -> Weight {
    Weight(e.0.windows(2).map(|p| p[0] - p[1]).collect())
}

/// The invariant form with (α, α) = 2: the dot product of centered
/// ε-coordinates.
pub fn killing(a: &Weight, b: &Weight) -> Result<Q> {
    if a.rank() != b.rank() {
        return Err(Error::Shape(format!("rank mismatch: {} vs {}", a.rank(), b.rank())));
    }
    let ea = to_eps(a).0;
    let eb = to_eps(b).0;
    let m = BigInt::from(ea.len() as i64);
    let dot: i64 = ea.iter().zip(&eb).map(|(x, y)| x * y).sum();
    let sa: i64 = ea.iter().sum();
    let sb: i64 = eb.iter().sum();
    Ok(Q::from_integer(BigInt::from(dot)) - Q::new(BigInt::from(sa) * BigInt::from(sb), m))
}

/// If `phi` is a root ε_p − ε_q, returns (p, q) as 0-based positions.
pub fn root_positions(phi: &Weight) -> Option<(usize, usize)> {
    let e = to_eps(phi).0;
    let len = e.len() as i64;
    let s: i64 = e.iter().sum();
    if s % len != 0 {
        return None;
    }
    let m = s / len;
    let mut plus = None;
    let mut minus = None;
    for (i, &x) in e.iter().enumerate() {
        match x - m {
            0 => {}
            1 if plus.is_none() => plus = Some(i),
            -1 if minus.is_none() => minus = Some(i),
            _ => return None,
        }
    }
    Some((plus?, minus?))
}

/// r_φ(w) = w − 2(w,φ)/(φ,φ)·φ; on ε-coordinates a transposition.
pub fn reflect(phi: &Weight, w: &Weight) -> Result<Weight> {
    if phi.rank() != w.rank() {
        return Err(Error::Shape("rank mismatch in reflection".into()));
    }
    let (p, q) = root_positions(phi).ok_or_else(|| Error::Domain(format!("{phi} is not a root")))?;
    let mut e = to_eps(w).0;
    e.swap(p, q);
    Ok(from_eps(&EpsCoords(e)))
}

/// dim S^a(C^m) = ∏_{i<j} (a_i − a_j + j − i)/(j − i).
pub fn weyl_dim(a: &[u32], m: usize) -> Result<BigUint> {
    let parts = a.iter().filter(|&&x| x > 0).count();
    if parts > m {
        return Err(Error::Shape(format!("partition {a:?} has more than {m} parts")));
    }
    let mut row = vec![0i64; m];
    for (i, &x) in a.iter().enumerate().take(m) {
        row[i] = x as i64;
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        for j in i + 1..m {
            num *= BigInt::from(row[i] - row[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    Ok((num / den).to_biguint().expect("dimension is positive"))
}

/// Dimension of the irreducible SL(n+1)-module with highest weight `nu`.
pub fn module_dim(nu: &Weight) -> BigUint {
    let e = to_eps(nu).0;
    let part: Vec<u32> = e.iter().map(|&x| x as u32).collect();
    weyl_dim(&part, e.len()).expect("eps coordinates fit")
}

/// A weakly decreasing sequence of nonnegative integers, trailing zeros
/// trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Shape(format!("partition {parts:?} is not weakly decreasing")));
        }
        let mut p = parts;
        while p.last() == Some(&0) {
            p.pop();
        }
        Ok(Partition(p))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Row length, 1-based row, zero beyond the last part.
    pub fn get(&self, row: usize) -> u32 {
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.0.clone();
        v.resize(m.max(v.len()), 0);
        v
    }

    /// Adds a box in `row` (1-based) if the result is a partition with at
    /// most `max_rows` rows.
    pub fn add_box(&self, row: usize, max_rows: usize) -> Option<Partition> {
        if row == 0 || row > max_rows {
            return None;
        }
        if row > 1 && self.get(row - 1) == self.get(row) {
            return None;
        }
        let mut v = self.padded(row);
        v[row - 1] += 1;
        Some(Partition::new(v).expect("box addition keeps the order"))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

/// X = Gr(P^k, P^n) = SL(n+1)/P(α_{k+1}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Space {
    pub k: usize,
    pub n: usize,
}

/// One weight of Ω¹ together with its box pair and ε-positions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Omega1 {
    pub p: usize,
    pub q: usize,
    pub weight: Weight,
    /// 0-based ε-position in the first block (ε_i, i = k+2−p).
    pub pos_u: usize,
    /// 0-based ε-position in the second block (ε_{j+1}, j = k+q).
    pub pos_q: usize,
}

impl Space {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if n == 0 || k >= n {
            return Err(Error::Shape(format!("invalid space Gr({k},{n}): need 0 ≤ k < n")));
        }
        Ok(Space { k, n })
    }

    pub fn projective(n: usize) -> Result<Self> {
        Self::new(0, n)
    }

    /// Parses `p:n` or `gr:k,n`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("bad space {text:?}; expected p:n or gr:k,n"));
        let t = text.trim();
        if let Some(rest) = t.strip_prefix("p:") {
            let n = rest.trim().parse().map_err(|_| bad())?;
            return Space::projective(n);
        }
        if let Some(rest) = t.strip_prefix("gr:") {
            let (k, n) = rest.split_once(',').ok_or_else(bad)?;
            let k = k.trim().parse().map_err(|_| bad())?;
            let n = n.trim().parse().map_err(|_| bad())?;
            return Space::new(k, n);
        }
        Err(bad())
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        (self.k + 1) * (self.n - self.k)
    }

    /// The crossed node k+1 (1-based).
    pub fn crossed(&self) -> usize {
        self.k + 1
    }

    pub fn u_rank(&self) -> usize {
        self.k + 1
    }

    pub fn q_rank(&self) -> usize {
        self.n - self.k
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.n {
            return Err(Error::Shape(format!("weight {w} has length {}, expected {}", w.rank(), self.n)));
        }
        Ok(())
    }

    /// c_i ≥ 0 for every i ≠ k+1.
    pub fn in_d1(&self, w: &Weight) -> bool {
        w.rank() == self.n && w.0.iter().enumerate().all(|(i, &c)| i == self.k || c >= 0)
    }

    pub fn require_d1(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if !self.in_d1(w) {
            return Err(Error::Domain(format!(
                "weight {w} is not in D_1 (coordinates off node {} must be ≥ 0)",
                self.k + 1
            )));
        }
        Ok(())
    }

    /// Ω¹ weights β_ij = ε_{j+1} − ε_i ordered by box pair (p, q).
    pub fn omega1(&self) -> Vec<Omega1> {
        let mut out = Vec::with_capacity(self.dim());
        for p in 1..=self.u_rank() {
            for q in 1..=self.q_rank() {
                out.push(self.omega1_at(p, q));
            }
        }
        out
    }

    pub fn omega1_at(&self, p: usize, q: usize) -> Omega1 {
        assert!((1..=self.u_rank()).contains(&p) && (1..=self.q_rank()).contains(&q));
        let pos_u = self.k + 1 - p;
        let pos_q = self.k + q;
        let mut e = vec![0i64; self.n + 1];
        e[pos_q] += 1;
        e[pos_u] -= 1;
        Omega1 { p, q, weight: from_eps(&EpsCoords(e)), pos_u, pos_q }
    }

    /// Index into [`Space::omega1`] of the box pair (p, q).
    pub fn omega1_index(&self, p: usize, q: usize) -> usize {
        (p - 1) * self.q_rank() + (q - 1)
    }

    pub fn box_of_difference(&self, d: &Weight) -> Option<(usize, usize)> {
        self.omega1().into_iter().find(|o| &o.weight == d).map(|o| (o.p, o.q))
    }

    /// Label of the connected component of the quiver containing `w`:
    /// the class of w in the weight lattice modulo the root lattice.
    pub fn component(&self, w: &Weight) -> i64 {
        let s: i64 = w.0.iter().enumerate().map(|(i, c)| (i as i64 + 1) * c).sum();
        s.rem_euclid(self.n as i64 + 1)
    }

    pub fn shape_to_weight(&self, b: &BundleShape) -> Result<Weight> {
        if b.alpha.len() > self.u_rank() || b.beta.len() > self.q_rank() {
            return Err(Error::Shape(format!("shape {b} has too many rows for Gr({},{})", self.k, self.n)));
        }
        let a = b.alpha.padded(self.u_rank());
        let bb = b.beta.padded(self.q_rank());
        let mut e = Vec::with_capacity(self.n + 1);
        for pos in 0..self.u_rank() {
            e.push(b.t - a[self.k - pos] as i64);
        }
        for x in bb {
            e.push(x as i64);
        }
        Ok(from_eps(&EpsCoords(e)))
    }

    pub fn weight_to_shape(&self, w: &Weight) -> Result<BundleShape> {
        self.require_d1(w)?;
        let e = to_eps(w).0;
        let t = e[0];
        let alpha: Vec<u32> = (1..=self.u_rank()).map(|p| (t - e[self.k + 1 - p]) as u32).collect();
        let beta: Vec<u32> = (1..=self.q_rank()).map(|q| e[self.k + q] as u32).collect();
        Ok(BundleShape { alpha: Partition::new(alpha)?, beta: Partition::new(beta)?, t })
    }

    /// μ(S^αU ⊗ S^βQ*(t)) = t − |α|/(k+1) − |β|/(n−k).
    pub fn slope(&self, w: &Weight) -> Result<Q> {
        self.require_d1(w)?;
        Ok(self.slope_unchecked(w))
    }

    /// The slope as a linear function, valid for any weight.
    pub fn slope_unchecked(&self, w: &Weight) -> Q {
        let e = to_eps(w).0;
        let s1: i64 = e[..=self.k].iter().sum();
        let s2: i64 = e[self.k + 1..].iter().sum();
        Q::new(BigInt::from(s1), BigInt::from(self.u_rank() as i64))
            - Q::new(BigInt::from(s2), BigInt::from(self.q_rank() as i64))
    }

    pub fn omega1_slope(&self) -> Q {
        Q::new(
            BigInt::from(-(self.n as i64 + 1)),
            BigInt::from((self.u_rank() * self.q_rank()) as i64),
        )
    }

    /// Rank of the irreducible bundle E_w.
    pub fn bundle_rank(&self, w: &Weight) -> Result<BigUint> {
        let s = self.weight_to_shape(w)?;
        Ok(weyl_dim(s.alpha.parts(), self.u_rank())? * weyl_dim(s.beta.parts(), self.q_rank())?)
    }

    /// Weight of E_w^*: negate ε-coordinates and reverse within each
    /// Levi block.
    pub fn dual_weight(&self, w: &Weight) -> Weight {
        let e = to_eps(w).0;
        let mut d: Vec<i64> = e[..=self.k].iter().rev().map(|x| -x).collect();
        d.extend(e[self.k + 1..].iter().rev().map(|x| -x));
        from_eps(&EpsCoords(d))
    }

    /// Twist by O(t).
    pub fn twist(&self, w: &Weight, t: i64) -> Weight {
        w.add(&Weight::fundamental(self.n, self.crossed()).scale(t))
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.k == 0 {
            write!(f, "P^{}", self.n)
        } else {
            write!(f, "Gr({},{})", self.k, self.n)
        }
    }
}

/// E = S^α U ⊗ S^β Q*(t).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BundleShape {
    pub alpha: Partition,
    pub beta: Partition,
    pub t: i64,
}

impl BundleShape {
    pub fn line(t: i64) -> Self {
        BundleShape { alpha: Partition::empty(), beta: Partition::empty(), t }
    }

    /// Absorbs full columns of α (det U = O(−1)) and β (det Q* = O(−1))
    /// into the twist.
    pub fn canonical(&self, s: &Space) -> Result<BundleShape> {
        if self.alpha.len() > s.u_rank() || self.beta.len() > s.q_rank() {
            return Err(Error::Shape(format!("shape {self} has too many rows for {s}")));
        }
        let ca = self.alpha.get(s.u_rank());
        let cb = self.beta.get(s.q_rank());
        let alpha = Partition::new(self.alpha.parts().iter().map(|x| x - ca).collect())?;
        let beta = Partition::new(self.beta.parts().iter().map(|x| x - cb).collect())?;
        Ok(BundleShape { alpha, beta, t: self.t - ca as i64 - cb as i64 })
    }
}

impl fmt::Display for BundleShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.alpha.is_empty() {
            parts.push(format!("S{}U", self.alpha));
        }
        if !self.beta.is_empty() {
            parts.push(format!("S{}Q*", self.beta));
        }
        if self.t != 0 || parts.is_empty() {
            parts.push(format!("O({})", self.t));
        }
        write!(f, "{}", parts.join(" "))
    }
}
