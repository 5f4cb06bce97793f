//! Slopes, characters, subrepresentation pairings, semistability and the
//! tangent dimension of the relation variety modulo gauge.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{fmt_q, parse_q, q, Matrix, Q};
use crate::quiver::{check_relations, relation_entries, relation_system, submodule_generated, QuiverRep};
use crate::rootsys::{Space, Weight};

/// σ_λ per vertex, in the representation's vertex order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub weights: Vec<Weight>,
    pub sigma: Vec<BigInt>,
    /// Factor applied to make every σ_λ integral.
    pub scale: BigInt,
}

fn c1(s: &Space, w: &Weight) -> Result<(BigInt, Q)> {
    let rk = BigInt::from(s.bundle_rank(w)?);
    let c = s.slope(w)? * Q::from_integer(rk.clone());
    Ok((rk, c))
}

/// μ(α)_λ = c_1(F) rk(E_λ) − rk(F) c_1(E_λ) for F = grE.
pub fn canonical_character(r: &QuiverRep) -> Result<Character> {
    let s = r.space();
    let data: Vec<(BigInt, Q)> = r.vertices().iter().map(|v| c1(s, &v.weight)).collect::<Result<_>>()?;
    let mut rk_f = BigInt::zero();
    let mut c1_f = Q::zero();
    for (v, (rk, c)) in r.vertices().iter().zip(&data) {
        rk_f += rk * BigInt::from(v.dim);
        c1_f += c * Q::from_integer(BigInt::from(v.dim));
    }
    let raw: Vec<Q> = data
        .iter()
        .map(|(rk, c)| &c1_f * Q::from_integer(rk.clone()) - Q::from_integer(rk_f.clone()) * c)
        .collect();
    let scale = raw.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let sigma = raw.iter().map(|x| (x * Q::from_integer(scale.clone())).to_integer()).collect();
    Ok(Character { weights: r.vertices().iter().map(|v| v.weight.clone()).collect(), sigma, scale })
}

impl Character {
    /// gcd of the entries (0 for the zero character).
    pub fn content(&self) -> BigInt {
        self.sigma.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub fn primitive(&self) -> Vec<BigInt> {
        let g = self.content();
        if g.is_zero() {
            return self.sigma.clone();
        }
        self.sigma.iter().map(|x| x / &g).collect()
    }

    pub fn value_at(&self, w: &Weight) -> BigInt {
        self.weights.iter().position(|x| x == w).map_or_else(BigInt::zero, |i| self.sigma[i].clone())
    }

    /// Σ σ_λ · subdim_λ.
    pub fn pairing(&self, subdims: &[usize]) -> Result<BigInt> {
        if subdims.len() != self.sigma.len() {
            return Err(Error::Shape(format!(
                "dimension vector of length {} for a character on {} vertices",
                subdims.len(),
                self.sigma.len()
            )));
        }
        Ok(self.sigma.iter().zip(subdims).map(|(s, &d)| s * BigInt::from(d)).sum())
    }

    /// The character restricted or extended to the vertices of `r`.
    pub fn on(&self, r: &QuiverRep) -> Character {
        Character {
            weights: r.vertices().iter().map(|v| v.weight.clone()).collect(),
            sigma: r.vertices().iter().map(|v| self.value_at(&v.weight)).collect(),
            scale: self.scale.clone(),
        }
    }
}

/// rk E′ · rk F · (μ(F) − μ(E′)) times the character's scale, where
/// grE′ has multiplicities `subdims`.
pub fn slope_gap(r: &QuiverRep, ch: &Character, subdims: &[usize]) -> Result<Q> {
    let s = r.space();
    let (mut rk_f, mut c1_f, mut rk_e, mut c1_e) = (Q::zero(), Q::zero(), Q::zero(), Q::zero());
    for (v, &d) in r.vertices().iter().zip(subdims) {
        let (rk, c) = c1(s, &v.weight)?;
        let rk = Q::from_integer(rk);
        rk_f += &rk * q(v.dim as i64);
        c1_f += &c * q(v.dim as i64);
        rk_e += &rk * q(d as i64);
        c1_e += c * q(d as i64);
    }
    Ok((rk_e * c1_f - rk_f * c1_e) * Q::from_integer(ch.scale.clone()))
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SigmaEntry {
    weight: Vec<i64>,
    value: i64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CharacterJson {
    sigma: Vec<SigmaEntry>,
    #[serde(default = "one")]
    scale: i64,
}

fn one() -> i64 {
    1
}

pub fn character_from_json(text: &str) -> Result<Character> {
    let doc: CharacterJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("character JSON: {e}")))?;
    if doc.scale <= 0 {
        return Err(Error::Shape("character scale must be positive".into()));
    }
    let mut entries: Vec<(Weight, BigInt)> =
        doc.sigma.into_iter().map(|e| (Weight(e.weight), BigInt::from(e.value))).collect();
    entries.sort();
    if entries.windows(2).any(|w| w[0].0 == w[1].0) {
        return Err(Error::Shape("character lists a vertex twice".into()));
    }
    let (weights, sigma) = entries.into_iter().unzip();
    Ok(Character { weights, sigma, scale: BigInt::from(doc.scale) })
}

pub fn character_to_json(ch: &Character) -> Result<String> {
    let conv = |x: &BigInt| {
        i64::try_from(x.clone()).map_err(|_| Error::Domain("character entry exceeds 64 bits".into()))
    };
    let doc = CharacterJson {
        sigma: ch
            .weights
            .iter()
            .zip(&ch.sigma)
            .map(|(w, s)| Ok(SigmaEntry { weight: w.0.clone(), value: conv(s)? }))
            .collect::<Result<_>>()?,
        scale: conv(&ch.scale)?,
    };
    Ok(serde_json::to_string_pretty(&doc).expect("serializable"))
}

/// Spanning sets of a candidate subrepresentation, per vertex weight.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Witness {
    pub spans: BTreeMap<Weight, Vec<Vec<Q>>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpanJson {
    weight: Vec<i64>,
    vectors: Vec<Vec<String>>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct WitnessJson {
    spans: Vec<SpanJson>,
}

impl Witness {
    pub fn from_json(text: &str) -> Result<Witness> {
        let doc: WitnessJson = serde_json::from_str(text).map_err(|e| Error::Parse(format!("witness JSON: {e}")))?;
        let mut spans = BTreeMap::new();
        for s in doc.spans {
            let vs = s
                .vectors
                .iter()
                .map(|v| v.iter().map(|x| parse_q(x).map_err(Error::Parse)).collect::<Result<Vec<Q>>>())
                .collect::<Result<Vec<_>>>()?;
            spans.entry(Weight(s.weight)).or_insert_with(Vec::new).extend(vs);
        }
        Ok(Witness { spans })
    }

    pub fn to_json(&self) -> String {
        let doc = WitnessJson {
            spans: self
                .spans
                .iter()
                .map(|(w, vs)| SpanJson {
                    weight: w.0.clone(),
                    vectors: vs.iter().map(|v| v.iter().map(fmt_q).collect()).collect(),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&doc).expect("serializable")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessReport {
    /// Closed under every arrow.
    pub invariant: bool,
    pub subdims: Vec<usize>,
    pub pairing: BigInt,
}

impl WitnessReport {
    pub fn destabilizing(&self) -> bool {
        self.invariant && self.pairing.is_negative()
    }
}

/// Row-reduced basis (rows) of the span of `vs` inside C^dim.
fn span_basis(vs: &[Vec<Q>], dim: usize) -> Matrix {
    if vs.is_empty() {
        return Matrix::zeros(0, dim);
    }
    Matrix::from_rows(vs.to_vec()).row_basis()
}

fn contains(basis: &Matrix, vs: &Matrix) -> bool {
    if vs.rows() == 0 {
        return true;
    }
    Matrix::vstack(&[basis.clone(), vs.clone()], basis.cols()).rank() == basis.rows()
}

fn witness_bases(r: &QuiverRep, w: &Witness) -> Result<Vec<Matrix>> {
    let mut gens: Vec<Vec<Vec<Q>>> = vec![Vec::new(); r.vertices().len()];
    for (wt, vs) in &w.spans {
        let i = r
            .vertex_index(wt)
            .ok_or_else(|| Error::Shape(format!("witness names {wt}, which is not a vertex")))?;
        let dim = r.vertices()[i].dim;
        for v in vs {
            if v.len() != dim {
                return Err(Error::Shape(format!("witness vector of length {} at {wt} of dimension {dim}", v.len())));
            }
        }
        gens[i].extend(vs.iter().cloned());
    }
    Ok(gens.iter().zip(r.vertices()).map(|(g, v)| span_basis(g, v.dim)).collect())
}

fn report_for(r: &QuiverRep, bases: &[Matrix], ch: &Character) -> Result<WitnessReport> {
    let invariant = r.arrows().iter().all(|a| {
        let img = a.matrix.mul(&bases[a.from].transpose()).transpose();
        contains(&bases[a.to], &img)
    });
    let subdims: Vec<usize> = bases.iter().map(|b| b.rows()).collect();
    let pairing = ch.on(r).pairing(&subdims)?;
    Ok(WitnessReport { invariant, subdims, pairing })
}

pub fn check_witness(r: &QuiverRep, w: &Witness, ch: &Character) -> Result<WitnessReport> {
    report_for(r, &witness_bases(r, w)?, ch)
}

/// An exact verdict together with a destabilizing dimension vector if one
/// exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub semistable: bool,
    /// Every proper nonzero subrepresentation has positive pairing; only
    /// decided for vertex-wise one-dimensional representations.
    pub stable: Option<bool>,
    pub destabilizer: Option<Vec<usize>>,
}

/// Interval summand [start, end] (positions along the segment) with its
/// multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
    pub multiplicity: usize,
}

/// Vertex indices ordered along a single ξ-segment λ, λ+ξ, ….
pub fn segment_order(r: &QuiverRep) -> Result<Vec<usize>> {
    let s = r.space();
    let mut idx: Vec<usize> = (0..r.vertices().len()).collect();
    idx.sort_by(|&a, &b| s.slope_unchecked(&r.vertices()[b].weight).cmp(&s.slope_unchecked(&r.vertices()[a].weight)));
    if idx.len() >= 2 {
        let w = |i: usize| &r.vertices()[idx[i]].weight;
        let step = w(1).sub(w(0));
        if s.box_of_difference(&step).is_none() {
            return Err(Error::Domain("support is not a ξ-segment".into()));
        }
        for i in 1..idx.len() {
            if w(i).sub(w(i - 1)) != step {
                return Err(Error::Domain("support is not a ξ-segment".into()));
            }
        }
    }
    Ok(idx)
}

/// Interval decomposition of a segment representation from composite ranks.
pub fn interval_decomposition(r: &QuiverRep) -> Result<Vec<Interval>> {
    let order = segment_order(r)?;
    let len = order.len();
    let maps: Vec<Matrix> = (0..len.saturating_sub(1))
        .map(|i| r.map_or_zero(&r.vertices()[order[i]].weight, &r.vertices()[order[i + 1]].weight))
        .collect();
    // rank[a][b] = rank of the composite a → b.
    let mut rank = vec![vec![0i64; len]; len];
    for a in 0..len {
        let mut m = Matrix::identity(r.vertices()[order[a]].dim);
        rank[a][a] = m.rows() as i64;
        for b in a + 1..len {
            m = maps[b - 1].mul(&m);
            rank[a][b] = m.rank() as i64;
        }
    }
    let get = |a: i64, b: i64| -> i64 {
        if a < 0 || b >= len as i64 || a > b {
            0
        } else {
            rank[a as usize][b as usize]
        }
    };
    let mut out = Vec::new();
    for a in 0..len as i64 {
        for b in a..len as i64 {
            let m = get(a, b) - get(a - 1, b) - get(a, b + 1) + get(a - 1, b + 1);
            if m < 0 {
                return Err(Error::Internal("negative interval multiplicity".into()));
            }
            if m > 0 {
                out.push(Interval { start: a as usize, end: b as usize, multiplicity: m as usize });
            }
        }
    }
    Ok(out)
}

/// Exact semistability for a representation supported on one segment:
/// subrepresentations of an interval are its terminal pieces.
pub fn path_semistable(r: &QuiverRep, ch: &Character) -> Result<Verdict> {
    let order = segment_order(r)?;
    let ch = ch.on(r);
    for iv in interval_decomposition(r)? {
        for c in iv.start..=iv.end {
            let mut dims = vec![0usize; order.len()];
            for p in c..=iv.end {
                dims[order[p]] = 1;
            }
            if ch.pairing(&dims)?.is_negative() {
                return Ok(Verdict { semistable: false, stable: None, destabilizer: Some(dims) });
            }
        }
    }
    Ok(Verdict { semistable: true, stable: None, destabilizer: None })
}

fn intersect(a: &Matrix, b: &Matrix) -> Matrix {
    let dim = a.cols();
    if a.rows() == 0 || b.rows() == 0 {
        return Matrix::zeros(0, dim);
    }
    let stacked = Matrix::vstack(&[a.clone(), b.neg()], dim).transpose();
    let vs: Vec<Vec<Q>> = stacked
        .nullspace()
        .into_iter()
        .map(|x| a.transpose().mul_vec(&x[..a.rows()]))
        .collect();
    span_basis(&vs, dim)
}

fn sum(a: &Matrix, b: &Matrix) -> Matrix {
    let vs: Vec<Vec<Q>> = a.to_rows().into_iter().chain(b.to_rows()).collect();
    span_basis(&vs, a.cols())
}

/// Closure of a set of subspaces under sums and intersections.
fn lattice(gens: Vec<Matrix>, dim: usize) -> Vec<Matrix> {
    let mut out: Vec<Matrix> = vec![Matrix::zeros(0, dim), Matrix::identity(dim)];
    let push = |m: Matrix, out: &mut Vec<Matrix>| {
        if !out.contains(&m) {
            out.push(m);
            true
        } else {
            false
        }
    };
    for g in gens {
        push(g, &mut out);
    }
    loop {
        let mut grew = false;
        let n = out.len();
        for i in 0..n {
            for j in i + 1..n {
                grew |= push(sum(&out[i], &out[j]), &mut out);
                grew |= push(intersect(&out[i], &out[j]), &mut out);
            }
        }
        if !grew {
            return out;
        }
    }
}

/// Exhaustive search over subrepresentations whose pieces lie in the
/// lattice generated by images and kernels of composites. Independent of
/// the interval decomposition.
pub fn exhaustive_segment_semistable(r: &QuiverRep, ch: &Character) -> Result<Verdict> {
    let order = segment_order(r)?;
    let len = order.len();
    let dim = |p: usize| r.vertices()[order[p]].dim;
    let map = |p: usize| r.map_or_zero(&r.vertices()[order[p]].weight, &r.vertices()[order[p + 1]].weight);
    let mut lats = Vec::with_capacity(len);
    for p in 0..len {
        let mut gens = Vec::new();
        for a in 0..p {
            let mut m = Matrix::identity(dim(a));
            for t in a..p {
                m = map(t).mul(&m);
            }
            gens.push(span_basis(&(0..m.cols()).map(|c| m.column(c)).collect::<Vec<_>>(), dim(p)));
        }
        let mut m = Matrix::identity(dim(p));
        for t in p..len.saturating_sub(1) {
            m = map(t).mul(&m);
            gens.push(span_basis(&m.nullspace(), dim(p)));
        }
        lats.push(lattice(gens, dim(p)));
    }
    let ch = ch.on(r);
    let mut choice = vec![0usize; len];
    let mut best: Option<(BigInt, Vec<usize>)> = None;
    loop {
        let mut bases = vec![Matrix::zeros(0, 0); len];
        for p in 0..len {
            bases[order[p]] = lats[p][choice[p]].clone();
        }
        let report = report_for(r, &bases, &ch)?;
        if report.invariant && best.as_ref().is_none_or(|(b, _)| report.pairing < *b) {
            best = Some((report.pairing.clone(), report.subdims.clone()));
        }
        let mut p = 0;
        loop {
            if p == len {
                let (min, dims) = best.expect("the zero subrepresentation is invariant");
                let semistable = !min.is_negative();
                return Ok(Verdict { semistable, stable: None, destabilizer: (!semistable).then_some(dims) });
            }
            choice[p] += 1;
            if choice[p] < lats[p].len() {
                break;
            }
            choice[p] = 0;
            p += 1;
        }
    }
}

/// Exact decision when every vertex is one-dimensional: subrepresentations
/// are vertex sets closed under nonzero arrows.
pub fn thin_semistable(r: &QuiverRep, ch: &Character) -> Result<Verdict> {
    let n = r.vertices().len();
    if r.vertices().iter().any(|v| v.dim != 1) {
        return Err(Error::Domain("not every vertex is one-dimensional".into()));
    }
    if n > 20 {
        return Err(Error::Domain(format!("{n} vertices exceed the subset search limit")));
    }
    let ch = ch.on(r);
    let mut semistable = true;
    let mut stable = true;
    let mut destabilizer = None;
    let full = (1u64 << n) - 1;
    for mask in 1..=full {
        let closed = r
            .arrows()
            .iter()
            .all(|a| a.matrix.is_zero() || mask >> a.from & 1 == 0 || mask >> a.to & 1 == 1);
        if !closed {
            continue;
        }
        let dims: Vec<usize> = (0..n).map(|i| (mask >> i & 1) as usize).collect();
        let p = ch.pairing(&dims)?;
        if p.is_negative() && semistable {
            semistable = false;
            destabilizer = Some(dims);
        }
        if mask != full && !p.is_positive() {
            stable = false;
        }
    }
    Ok(Verdict { semistable, stable: Some(semistable && stable), destabilizer })
}

/// Exact verdict where one is available: segment supports and thin
/// representations.
pub fn decide(r: &QuiverRep, ch: &Character) -> Result<Verdict> {
    if segment_order(r).is_ok() {
        let mut v = path_semistable(r, ch)?;
        if r.vertices().iter().all(|x| x.dim == 1) {
            v.stable = thin_semistable(r, ch)?.stable;
        }
        return Ok(v);
    }
    if r.vertices().iter().all(|x| x.dim == 1) {
        return thin_semistable(r, ch);
    }
    Err(Error::Domain(
        "semistability is only decided for segment supports and one-dimensional vertices; supply a witness".into(),
    ))
}

/// Tangent dimension of the relation variety modulo gauge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tangent {
    /// Solutions of the linearized relations over all arrow slots.
    pub kernel: usize,
    /// Σ dim(V_λ)².
    pub gauge: usize,
    pub endomorphisms: usize,
    pub dim: usize,
}

pub fn endomorphism_dim(r: &QuiverRep) -> usize {
    let verts = r.vertices();
    let mut off = Vec::with_capacity(verts.len());
    let mut n = 0;
    for v in verts {
        off.push(n);
        n += v.dim * v.dim;
    }
    let mut rows = Vec::new();
    for (f, t, _) in r.arrow_slots() {
        let m = r.map_or_zero(&verts[f].weight, &verts[t].weight);
        let (dt, df) = (verts[t].dim, verts[f].dim);
        // M φ_f − φ_t M = 0
        for i in 0..dt {
            for j in 0..df {
                let mut row = vec![Q::zero(); n];
                for k in 0..df {
                    row[off[f] + k * df + j] += &m[(i, k)];
                }
                for k in 0..dt {
                    row[off[t] + i * dt + k] -= &m[(k, j)];
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return n;
    }
    Matrix::from_rows(rows).nullity()
}

pub fn tangent_dim(r: &QuiverRep) -> Result<Tangent> {
    if let Some(v) = check_relations(r).first() {
        return Err(Error::Relations(v.to_string()));
    }
    let verts = r.vertices();
    let slots = r.arrow_slots();
    let mut off: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut n = 0;
    for &(f, t, _) in &slots {
        off.insert((f, t), n);
        n += verts[t].dim * verts[f].dim;
    }
    let mut rows = Vec::new();
    for e in relation_entries(r) {
        let src = r.vertex_index(&e.source).expect("support vertex");
        let tgt = r.vertex_index(&e.target).expect("support vertex");
        let (dt, ds) = (verts[tgt].dim, verts[src].dim);
        for eq in &e.equations {
            for i in 0..dt {
                for j in 0..ds {
                    let mut row = vec![Q::zero(); n];
                    for (c, p) in &eq.terms {
                        let Some(mid) = r.vertex_index(&p.mid) else { continue };
                        let dm = verts[mid].dim;
                        let a = r.map_or_zero(&e.source, &p.mid);
                        let b = r.map_or_zero(&p.mid, &e.target);
                        let (oa, ob) = (off[&(src, mid)], off[&(mid, tgt)]);
                        // c (δB · A + B · δA)[i][j]
                        for m in 0..dm {
                            row[ob + i * dm + m] += c * &a[(m, j)];
                            row[oa + m * ds + j] += c * &b[(i, m)];
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let kernel = if rows.is_empty() { n } else { Matrix::from_rows(rows).nullity() };
    let gauge: usize = verts.iter().map(|v| v.dim * v.dim).sum();
    let endomorphisms = endomorphism_dim(r);
    let orbit = gauge - endomorphisms;
    if orbit > kernel {
        return Err(Error::Internal(format!(
            "orbit dimension {orbit} exceeds the linearized kernel {kernel} (gauge {gauge}, endomorphisms {endomorphisms})"
        )));
    }
    Ok(Tangent { kernel, gauge, endomorphisms, dim: kernel - orbit })
}

/// Conjugates every arrow by invertible vertex maps: M ↦ g_t M g_f⁻¹.
pub fn base_change(r: &QuiverRep, g: &[Matrix]) -> Result<QuiverRep> {
    if g.len() != r.vertices().len() {
        return Err(Error::Shape("one matrix per vertex expected".into()));
    }
    let mut inv = Vec::with_capacity(g.len());
    for (m, v) in g.iter().zip(r.vertices()) {
        if m.rows() != v.dim || m.cols() != v.dim {
            return Err(Error::Shape(format!("base change at {} has the wrong size", v.weight)));
        }
        inv.push(m.inverse().ok_or_else(|| Error::Domain("base change is not invertible".into()))?);
    }
    let arrows = r.arrows().iter().map(|a| (a.from, a.to, g[a.to].mul(&a.matrix).mul(&inv[a.from]))).collect();
    r.with_matrices(arrows)
}

/// Vertices of the deformation family on P², in the order O, Q(1), Q(−2),
/// Sym²Q(−1), Sym³Q, Sym³Q(−3), Sym⁴Q(−2).
pub fn ex73_weights() -> [Weight; 7] {
    [
        Weight(vec![0, 0]),
        Weight(vec![1, 1]),
        Weight(vec![-2, 1]),
        Weight(vec![-1, 2]),
        Weight(vec![0, 3]),
        Weight(vec![-3, 3]),
        Weight(vec![-2, 4]),
    ]
}

pub const EX73_DIMS: [usize; 7] = [1, 1, 1, 2, 1, 1, 1];

/// The family with f1: Q(1) → Sym²Q(−1), f2: Sym³Q → Sym²Q(−1),
/// f3: Sym²Q(−1) → Sym³Q(−3), f4: Sym²Q(−1) → Q(−2). The maps Q(1) → O and
/// Sym³Q → Sym⁴Q(−2) are 1; the other two are solved from the relations.
pub fn ex73_rep(f1: [Q; 2], f2: [Q; 2], f3: [Q; 2], f4: [Q; 2]) -> Result<QuiverRep> {
    let s = Space::projective(2)?;
    let w = ex73_weights();
    let col = |f: &[Q; 2]| Matrix::from_rows(vec![vec![f[0].clone()], vec![f[1].clone()]]);
    let row = |f: &[Q; 2]| Matrix::from_rows(vec![vec![f[0].clone(), f[1].clone()]]);
    let (f1, f2, f3, f4) = (col(&f1), col(&f2), row(&f3), row(&f4));
    // Completing map x on src → mid2 → tgt with mid1 the known route.
    let complete = |src: &Weight, tgt: &Weight, mid_known: &Weight, known: &Matrix| -> Result<Q> {
        let b1 = s.box_of_difference(&mid_known.sub(src)).expect("arrow");
        let b2 = s.box_of_difference(&tgt.sub(mid_known)).expect("arrow");
        let e = relation_system(&s, src, b1, b2)?;
        let eq = e.equations.first().ok_or_else(|| Error::Internal("square without a relation".into()))?;
        let coeff = |via_known: bool| {
            eq.terms
                .iter()
                .find(|(_, p)| (p.mid == *mid_known) == via_known)
                .map(|(c, _)| c.clone())
                .unwrap_or_else(Q::zero)
        };
        let (ck, cx) = (coeff(true), coeff(false));
        if cx.is_zero() {
            return Err(Error::Internal("completing map is unconstrained".into()));
        }
        Ok(-(ck * &known[(0, 0)]) / cx)
    };
    let u = complete(&w[1], &w[2], &w[3], &f4.mul(&f1))?;
    let v = complete(&w[4], &w[5], &w[3], &f3.mul(&f2))?;
    let verts: Vec<(Weight, usize)> = w.iter().cloned().zip(EX73_DIMS).collect();
    let arrows = vec![
        (w[1].clone(), w[0].clone(), Matrix::scalar(q(1))),
        (w[0].clone(), w[2].clone(), Matrix::scalar(u)),
        (w[1].clone(), w[3].clone(), f1),
        (w[4].clone(), w[3].clone(), f2),
        (w[3].clone(), w[5].clone(), f3),
        (w[3].clone(), w[2].clone(), f4),
        (w[4].clone(), w[6].clone(), Matrix::scalar(q(1))),
        (w[6].clone(), w[5].clone(), Matrix::scalar(v)),
    ];
    let r = QuiverRep::from_parts(s, verts, arrows)?;
    if let Some(v) = check_relations(&r).first() {
        return Err(Error::Internal(format!("completed family violates a relation: {v}")));
    }
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Ex73Locus {
    /// f3 f2 = 0: the submodule generated at Sym³Q destabilizes.
    Unstable,
    SZero,
    SEqualT,
    TZero,
    Generic,
}

impl std::fmt::Display for Ex73Locus {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Ex73Locus::Unstable => "unstable",
            Ex73Locus::SZero => "S = 0",
            Ex73Locus::SEqualT => "S = T",
            Ex73Locus::TZero => "T = 0",
            Ex73Locus::Generic => "generic",
        })
    }
}

#[derive(Clone, Debug)]
pub struct Ex73Report {
    pub s: Q,
    pub t: Q,
    pub locus: Ex73Locus,
    /// Subspace coincidences in the middle C², as text.
    pub coincidences: Vec<String>,
    /// Pairing of the submodule generated at Sym³Q.
    pub sym3_pairing: BigInt,
    pub sym3_subdims: Vec<usize>,
}

pub fn ex73_invariants(r: &QuiverRep) -> Result<Ex73Report> {
    let w = ex73_weights();
    if r.space() != &Space::projective(2)? || r.vertices().len() != 7 {
        return Err(Error::Shape("support does not match the deformation family".into()));
    }
    for (x, d) in w.iter().zip(EX73_DIMS) {
        if r.dim_at(x) != d || r.vertex_index(x).is_none() {
            return Err(Error::Shape(format!("support does not match the deformation family at {x}")));
        }
    }
    let f1 = r.map_or_zero(&w[1], &w[3]);
    let f2 = r.map_or_zero(&w[4], &w[3]);
    let f3 = r.map_or_zero(&w[3], &w[5]);
    let f4 = r.map_or_zero(&w[3], &w[2]);
    let p = |a: &Matrix, b: &Matrix| a.mul(b)[(0, 0)].clone();
    let (f41, f32, f42, f31) = (p(&f4, &f1), p(&f3, &f2), p(&f4, &f2), p(&f3, &f1));
    let s = &f41 * &f32 * &f32;
    let t = &f42 * &f32 * &f31;
    let det2 = |a: &Matrix, b: &Matrix| (&a[(0, 0)] * &b[(0, 1)] - &a[(0, 1)] * &b[(0, 0)]).is_zero();
    let mut coincidences = Vec::new();
    if f41.is_zero() {
        coincidences.push("Im f1 = Ker f4".to_string());
    }
    if det2(&f1.transpose(), &f2.transpose()) {
        coincidences.push("Im f1 = Im f2".to_string());
    }
    if det2(&f3, &f4) {
        coincidences.push("Ker f3 = Ker f4".to_string());
    }
    if f31.is_zero() {
        coincidences.push("Im f1 = Ker f3".to_string());
    }
    if f42.is_zero() {
        coincidences.push("Im f2 = Ker f4".to_string());
    }
    if f32.is_zero() {
        coincidences.push("Im f2 = Ker f3".to_string());
    }
    let ch = canonical_character(r)?;
    let sub = submodule_generated(r, &[(w[4].clone(), vec![vec![q(1)]])])?;
    let sym3_subdims: Vec<usize> =
        r.vertices().iter().map(|v| sub.bases.get(&v.weight).map_or(0, |b| b.cols())).collect();
    let sym3_pairing = ch.pairing(&sym3_subdims)?;
    let locus = if sym3_pairing.is_negative() {
        Ex73Locus::Unstable
    } else if s.is_zero() {
        Ex73Locus::SZero
    } else if s == t {
        Ex73Locus::SEqualT
    } else if t.is_zero() {
        Ex73Locus::TZero
    } else {
        Ex73Locus::Generic
    };
    Ok(Ex73Report { s, t, locus, coincidences, sym3_pairing, sym3_subdims })
}
