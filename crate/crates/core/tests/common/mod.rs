#![allow(dead_code)]

use hvb::quiver::rescale_from_commutative;
use hvb::{Matrix, QuiverRep, Space, Weight, Q};

pub fn q(x: i64) -> Q {
    Q::from_integer(x.into())
}

pub fn w(v: &[i64]) -> Weight {
    Weight(v.to_vec())
}

pub fn s1(x: i64) -> Matrix {
    Matrix::scalar(q(x))
}

/// ε-coordinates of a weight of SL(n+1), last entry 0.
pub fn eps(a: &[i64]) -> Vec<i64> {
    let mut e = vec![0; a.len() + 1];
    for i in (0..a.len()).rev() {
        e[i] = e[i + 1] + a[i];
    }
    e
}

pub fn from_eps(e: &[i64]) -> Vec<i64> {
    e.windows(2).map(|p| p[0] - p[1]).collect()
}

/// Bott by sorting λ+ρ: `None` when singular, else (degree, ν).
pub fn bott_oracle(a: &[i64]) -> Option<(usize, Vec<i64>)> {
    let n = a.len() + 1;
    let v: Vec<i64> = eps(a).iter().enumerate().map(|(i, x)| x + (n - i) as i64).collect();
    let mut sorted = v.clone();
    sorted.sort_unstable_by(|x, y| y.cmp(x));
    if sorted.windows(2).any(|p| p[0] == p[1]) {
        return None;
    }
    let mut inversions = 0;
    for i in 0..n {
        for j in i + 1..n {
            if v[i] < v[j] {
                inversions += 1;
            }
        }
    }
    let nu = (0..n - 1).map(|i| sorted[i] - sorted[i + 1] - 1).collect();
    Some((inversions, nu))
}

/// dim of the SL(n+1)-module with highest weight ν (Weyl's formula).
pub fn weyl_dim_oracle(nu: &[i64]) -> u128 {
    let e = eps(nu);
    let n = e.len();
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..n {
        for j in i + 1..n {
            num *= (e[i] - e[j] + (j - i) as i64) as u128;
            den *= (j - i) as u128;
        }
    }
    num / den
}

/// Weight of E_λ^* ⊗ ω_X on Gr(P^k, P^n).
pub fn serre_partner(k: usize, a: &[i64]) -> Vec<i64> {
    let e = eps(a);
    let mut d: Vec<i64> = e[..=k].iter().rev().map(|x| -x).collect();
    d.extend(e[k + 1..].iter().rev().map(|x| -x));
    let mut out = from_eps(&d);
    out[k] -= a.len() as i64 + 1;
    out
}

/// Every D_1 weight with coordinates in [−b, b].
pub fn d1_box(s: &Space, b: i64) -> Vec<Weight> {
    let n = s.n;
    let width = (2 * b + 1) as usize;
    let mut out = Vec::new();
    for c in 0..width.pow(n as u32) {
        let v: Vec<i64> = (0..n).map(|i| (c / width.pow(i as u32) % width) as i64 - b).collect();
        let x = Weight(v);
        if s.in_d1(&x) {
            out.push(x);
        }
    }
    out
}

/// O → Ω¹ on P^n with the given scalar.
pub fn dual_euler(n: usize, arrow: i64) -> QuiverRep {
    let s = Space::projective(n).unwrap();
    let mut om = vec![0i64; n];
    om[0] = -2;
    if n > 1 {
        om[1] = 1;
    }
    QuiverRep::from_parts(s, vec![(Weight::zero(n), 1), (Weight(om.clone()), 1)], vec![(Weight::zero(n), Weight(om), s1(arrow))])
        .unwrap()
}

/// ∧²V on Gr(1,3): O(1) → Ω¹(1) → O(−1) with unit arrows.
pub fn wedge_gr13() -> QuiverRep {
    let g = Space::new(1, 3).unwrap();
    let (o1, om, om1) = (w(&[0, 1, 0]), w(&[1, -1, 1]), w(&[0, -1, 0]));
    QuiverRep::from_parts(g, vec![(o1.clone(), 1), (om.clone(), 1), (om1.clone(), 1)], vec![(o1, om.clone(), s1(1)), (om, om1, s1(1))])
        .unwrap()
}

/// ad V on P²: the commuting square with unit arrows, rescaled to satisfy
/// the relations.
pub fn adjoint_p2() -> QuiverRep {
    let p2 = Space::projective(2).unwrap();
    let (o, q1, qm2, s2) = (w(&[0, 0]), w(&[1, 1]), w(&[-2, 1]), w(&[-1, 2]));
    let comm = QuiverRep::from_parts(
        p2,
        vec![(o.clone(), 1), (q1.clone(), 1), (qm2.clone(), 1), (s2.clone(), 1)],
        vec![(q1.clone(), o.clone(), s1(1)), (o, qm2.clone(), s1(1)), (q1, s2.clone(), s1(1)), (s2, qm2, s1(1))],
    )
    .unwrap();
    rescale_from_commutative(&comm).unwrap()
}

/// {O, O(−2)} on P¹ joined by the given scalar.
pub fn p1_pair(arrow: i64) -> QuiverRep {
    let s = Space::projective(1).unwrap();
    QuiverRep::from_parts(s, vec![(w(&[0]), 1), (w(&[-2]), 1)], vec![(w(&[0]), w(&[-2]), s1(arrow))]).unwrap()
}

/// Q(1) → O on P² with a unit arrow.
pub fn euler_p2() -> QuiverRep {
    let s = Space::projective(2).unwrap();
    QuiverRep::from_parts(s, vec![(w(&[1, 1]), 1), (w(&[0, 0]), 1)], vec![(w(&[1, 1]), w(&[0, 0]), s1(1))]).unwrap()
}

pub fn pair(a: i64, b: i64) -> [Q; 2] {
    [q(a), q(b)]
}
