mod common;

use common::*;
use hvb::bott::{bott, bott_any, BottOutcome};
use hvb::cohomology::{cohomology, graded_table};
use hvb::expr::parse_bundle;
use hvb::quiver::random::{admissible_on, random_admissible_rep, RandomSpec};
use hvb::quiver::{check_relations, direct_sum, dual, rescale_from_commutative, rescale_to_commutative, squares_commute};
use hvb::rootsys::module_dim;
use hvb::stability::{base_change, canonical_character, check_witness, ex73_invariants, ex73_rep, tangent_dim, Witness};
use hvb::{BundleShape, Matrix, Partition, QuiverRep, Space, Weight, Q};
use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn space_strategy() -> impl Strategy<Value = Space> {
    (1usize..=5).prop_flat_map(|n| (0..n).prop_map(move |k| Space::new(k, n).unwrap()))
}

fn small_space() -> impl Strategy<Value = Space> {
    prop_oneof![
        Just(Space::projective(2).unwrap()),
        Just(Space::projective(3).unwrap()),
        Just(Space::new(1, 3).unwrap()),
    ]
}

fn random_rep(s: &Space, seed: u64) -> QuiverRep {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_admissible_rep(s, &mut rng, &RandomSpec::default())
}

fn rational() -> impl Strategy<Value = Q> {
    (-5i64..=5, 1i64..=4).prop_map(|(a, b)| Q::new(a.into(), b.into()))
}

fn nonzero_rational() -> impl Strategy<Value = Q> {
    rational().prop_filter("nonzero", |x| !x.is_zero())
}

/// L·D·U with unit triangular factors: always invertible.
fn invertible(n: usize) -> impl Strategy<Value = Matrix> {
    (
        prop::collection::vec(rational(), n * n),
        prop::collection::vec(rational(), n * n),
        prop::collection::vec(nonzero_rational(), n),
    )
        .prop_map(move |(l, u, d)| {
            let tri = |v: &[Q], lower: bool| {
                Matrix::from_rows(
                    (0..n)
                        .map(|i| {
                            (0..n)
                                .map(|j| match (i == j, (j < i) == lower) {
                                    (true, _) => Q::from_integer(1.into()),
                                    (false, true) => v[i * n + j].clone(),
                                    (false, false) => Q::zero(),
                                })
                                .collect()
                        })
                        .collect(),
                )
            };
            let diag = Matrix::from_rows(
                (0..n).map(|i| (0..n).map(|j| if i == j { d[i].clone() } else { Q::zero() }).collect()).collect(),
            );
            tri(&l, true).mul(&diag).mul(&tri(&u, false))
        })
}

fn ex73_generic_strategy() -> impl Strategy<Value = QuiverRep> {
    prop::collection::vec(-4i64..=4, 8).prop_filter_map("valid member of the family", |v| {
        let r = ex73_rep(pair(v[0], v[1]), pair(v[2], v[3]), pair(v[4], v[5]), pair(v[6], v[7])).ok()?;
        (tangent_dim(&r).ok()?.dim == 1).then_some(r)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn bott_agrees_with_sorting(a in prop::collection::vec(-6i64..=6, 1..=6)) {
        let got = bott_any(&Weight(a.clone()));
        match bott_oracle(&a) {
            None => prop_assert_eq!(got, BottOutcome::Singular),
            Some((d, nu)) => {
                prop_assert_eq!(&got, &BottOutcome::Value { degree: d, nu: Weight(nu.clone()) });
                prop_assert_eq!(module_dim(&Weight(nu.clone())), BigUint::from(weyl_dim_oracle(&nu)));
            }
        }
    }

    #[test]
    fn serre_duality_on_d1(s in space_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let a: Vec<i64> = (0..s.n)
            .map(|i| if i == s.k { rand::Rng::gen_range(&mut rng, -8..=8) } else { rand::Rng::gen_range(&mut rng, 0..=3) })
            .collect();
        let lam = Weight(a.clone());
        let partner = Weight(serre_partner(s.k, &a));
        prop_assert_eq!(&s.twist(&s.dual_weight(&lam), -(s.n as i64 + 1)), &partner);
        match (bott(&s, &lam).unwrap(), bott(&s, &partner).unwrap()) {
            (BottOutcome::Singular, BottOutcome::Singular) => {}
            (BottOutcome::Value { degree: d1, nu: n1 }, BottOutcome::Value { degree: d2, nu: n2 }) => {
                prop_assert_eq!(d1 + d2, s.dim());
                prop_assert_eq!(module_dim(&n1), module_dim(&n2));
            }
            other => prop_assert!(false, "one side singular: {:?}", other),
        }
    }

    #[test]
    fn dual_is_a_valid_involution(s in small_space(), seed in any::<u64>()) {
        let r = random_rep(&s, seed);
        let d = dual(&r);
        prop_assert!(check_relations(&d).is_empty());
        prop_assert_eq!(dual(&d), r);
    }

    #[test]
    fn euler_characteristic_and_additivity(s in small_space(), seed in any::<u64>()) {
        let a = random_rep(&s, seed);
        let b = admissible_on(&a, &mut ChaCha8Rng::seed_from_u64(seed ^ 0x5eed));
        let (ta, tb) = (cohomology(&a).unwrap(), cohomology(&b).unwrap());
        prop_assert_eq!(ta.euler_dim(), graded_table(&a).euler_dim());
        prop_assert_eq!(cohomology(&direct_sum(&a, &b).unwrap()).unwrap(), ta.merged(&tb));
    }

    #[test]
    fn character_kills_the_full_dimension_vector(s in small_space(), seed in any::<u64>()) {
        let r = random_rep(&s, seed);
        let ch = canonical_character(&r).unwrap();
        let full: Vec<usize> = r.vertices().iter().map(|v| v.dim).collect();
        prop_assert!(ch.pairing(&full).unwrap().is_zero());
    }

    #[test]
    fn rescaling_round_trips(n in 2usize..=3, seed in any::<u64>()) {
        let r = random_rep(&Space::projective(n).unwrap(), seed);
        let c = rescale_to_commutative(&r).unwrap();
        prop_assert!(squares_commute(&c).unwrap());
        prop_assert_eq!(&rescale_from_commutative(&c).unwrap(), &r);
    }

    #[test]
    fn witness_reports_ignore_rescaling(
        vertex in 0usize..7,
        v in prop::collection::vec(rational(), 2),
        scale in nonzero_rational(),
    ) {
        let r = ex73_rep(pair(1, 2), pair(3, -1), pair(2, 5), pair(-1, 4)).unwrap();
        let ch = canonical_character(&r).unwrap();
        let vx = &r.vertices()[vertex];
        let vec: Vec<Q> = v[..vx.dim].to_vec();
        prop_assume!(vec.iter().any(|x| !x.is_zero()));
        let mut w1 = Witness::default();
        w1.spans.insert(vx.weight.clone(), vec![vec.clone()]);
        let mut w2 = Witness::default();
        w2.spans.insert(vx.weight.clone(), vec![vec.iter().map(|x| x * &scale).collect()]);
        let (a, b) = (check_witness(&r, &w1, &ch).unwrap(), check_witness(&r, &w2, &ch).unwrap());
        prop_assert_eq!(a.invariant, b.invariant);
        prop_assert_eq!(a.subdims, b.subdims);
        prop_assert_eq!(a.pairing, b.pairing);
    }

    #[test]
    fn moduli_invariants_survive_base_change(
        r in ex73_generic_strategy(),
        g2 in invertible(2),
        scalars in prop::collection::vec(nonzero_rational(), 7),
    ) {
        let g: Vec<Matrix> = r
            .vertices()
            .iter()
            .zip(&scalars)
            .map(|(v, c)| if v.dim == 2 { g2.clone() } else { Matrix::scalar(c.clone()) })
            .collect();
        let c = base_change(&r, &g).unwrap();
        prop_assert!(check_relations(&c).is_empty());
        prop_assert_eq!(tangent_dim(&c).unwrap().dim, tangent_dim(&r).unwrap().dim);
        prop_assert_eq!(canonical_character(&c).unwrap(), canonical_character(&r).unwrap());
        let (a, b) = (ex73_invariants(&r).unwrap(), ex73_invariants(&c).unwrap());
        prop_assert_eq!(a.locus, b.locus);
        if !a.t.is_zero() {
            prop_assert_eq!(&a.s / &a.t, &b.s / &b.t);
        }
    }

    #[test]
    fn bundle_expressions_round_trip(
        s in space_strategy(),
        alpha in prop::collection::vec(0u32..4, 0..4),
        beta in prop::collection::vec(0u32..4, 0..4),
        t in -5i64..=5,
    ) {
        let sorted = |mut v: Vec<u32>| { v.sort_unstable_by(|x, y| y.cmp(x)); v };
        let mut alpha = sorted(alpha);
        let mut beta = sorted(beta);
        alpha.truncate(s.u_rank());
        beta.truncate(s.q_rank());
        let b = BundleShape { alpha: Partition::new(alpha).unwrap(), beta: Partition::new(beta).unwrap(), t }
            .canonical(&s)
            .unwrap();
        let text = b.to_string();
        prop_assert_eq!(&parse_bundle(&text, &s).unwrap(), &b);
        prop_assert_eq!(s.weight_to_shape(&s.shape_to_weight(&b).unwrap()).unwrap(), b);
    }
}
