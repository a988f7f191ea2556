mod common;

use common::{p, example_ideal};
use equitor::duality::{dual_generators, dual_generators_with_cap, primary_component};
use equitor::equivariant::{equivariant_tor, invariant_betti, MODULAR_WARNING};
use equitor::oracle::{orbit_ideal, tor_profile};
use equitor::stability::{base_gamma_table, nonvanishing_check};
use equitor::{EquivariantTor, FieldSpec, Multidegree, Partition, SymIdeal};
use proptest::prelude::*;

const QQ: FieldSpec = FieldSpec::RATIONALS;

fn small_ideal() -> impl Strategy<Value = SymIdeal> {
    (2usize..=4).prop_flat_map(|n| {
        prop::collection::vec(prop::collection::vec(0u32..=3, n), 1..=3).prop_filter_map(
            "needs a non-zero generator",
            move |raw| {
                let gens: Vec<Partition> =
                    raw.into_iter().filter(|g| g.iter().any(|&x| x > 0)).map(Partition::sorted_from).collect();
                (!gens.is_empty()).then(|| SymIdeal::new(n, gens).unwrap())
            },
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn multigraded_values_match_single_degrees(ideal in small_ideal(), seed in any::<u64>()) {
        let tor = equivariant_tor(&ideal, QQ).unwrap();
        let plain = orbit_ideal(&ideal).unwrap();
        for (i, mu, _) in tor.iter() {
            // an arbitrary rearrangement of μ
            let mut a = mu.parts().to_vec();
            let k = a.len();
            a.rotate_left((seed as usize) % k);
            let a = Multidegree::new(a);
            let direct = tor_profile(&plain, &a, QQ).unwrap().gamma(i) as u64;
            prop_assert_eq!(tor.multigraded_betti(i, &a).unwrap(), direct);
        }
    }

    #[test]
    fn dual_generators_decompose_the_ideal(ideal in small_ideal()) {
        let dual = dual_generators(&ideal).unwrap();
        let wider = dual_generators_with_cap(&ideal, ideal.max_entry() + 3).unwrap();
        prop_assert_eq!(&dual.all, &wider.all);
        let comps: Vec<SymIdeal> = dual.all.iter().map(|r| primary_component(r).unwrap()).collect();
        let bound = Partition::rectangle(ideal.n(), ideal.max_entry() + 1, ideal.n());
        for lambda in equitor::partition::partitions_below(&bound) {
            let inside = ideal.contains(&lambda).unwrap();
            let all = comps.iter().all(|q| q.contains(&lambda).unwrap());
            prop_assert_eq!(inside, all, "{}", lambda);
        }
    }

    #[test]
    fn one_step_propagation_is_nonvanishing(ideal in small_ideal()) {
        let base = base_gamma_table(&ideal, QQ).unwrap();
        let up = base.propagate(ideal.n() + 1).unwrap();
        prop_assert!(nonvanishing_check(&base, &up).unwrap());
    }

    #[test]
    fn tor_serializes_losslessly(ideal in small_ideal()) {
        let tor = equivariant_tor(&ideal, FieldSpec::prime(3).unwrap()).unwrap();
        let back: EquivariantTor = serde_json::from_str(&serde_json::to_string(&tor).unwrap()).unwrap();
        prop_assert_eq!(back, tor);
    }
}

#[test]
fn quotient_of_example() {
    let q = equivariant_tor(&example_ideal(), QQ).unwrap().quotient();
    assert_eq!(q.graded_betti().totals(), vec![1, 9, 12, 4]);
    assert_eq!(q.orbit_dim(3, &p(&[4, 4, 4])), 1);
    assert_eq!(q.quotient(), q);
}

#[test]
fn modular_invariant_part_carries_a_warning() {
    let ideal = SymIdeal::new(2, vec![p(&[1, 1])]).unwrap();
    let inv = invariant_betti(&ideal, FieldSpec::prime(2).unwrap()).unwrap();
    assert_eq!(inv.warning.as_deref(), Some(MODULAR_WARNING));
    assert!(invariant_betti(&ideal, QQ).unwrap().warning.is_none());
}

#[test]
fn small_complexes_are_field_independent() {
    // torsion in simplicial homology needs at least six vertices and every
    // Delta here has at most five, so the fields must agree
    for ideal in common::corpus_with(7, 20) {
        let a = equivariant_tor(&ideal, QQ).unwrap().graded_betti();
        let b = equivariant_tor(&ideal, FieldSpec::prime(2).unwrap()).unwrap().graded_betti();
        assert_eq!(a, b, "{ideal}");
    }
}
