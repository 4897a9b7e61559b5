use proptest::prelude::*;

use ringlat::closures::{seminormalization, t_closure};
use ringlat::combinatorics::{
    bell, enumerate_exal, enumerate_homal, partition_bijection, partitions, stirling2,
    LambdaMatrix,
};
use ringlat::lattice::intermediate_algebras_in_order;
use ringlat::module::FiniteModule;
use ringlat::ring::{idempotents, is_connected, make_gf, make_zmod, product, quotient};
use ringlat::{all_ideals, ideal_generated, intermediate_algebras, Extension, FiniteRing};

fn small_ring() -> impl Strategy<Value = FiniteRing> {
    prop_oneof![
        (2usize..=24).prop_map(|n| make_zmod(n).unwrap()),
        prop::sample::select(vec![(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1)])
            .prop_map(|(p, k)| make_gf(p, k).unwrap()),
        (2usize..=6, 2usize..=6)
            .prop_map(|(a, b)| product(&[make_zmod(a).unwrap(), make_zmod(b).unwrap()]).unwrap().ring),
    ]
}

/// Diagonals and quotient maps `R → R/I × R/J` of modest size.
fn small_extension() -> impl Strategy<Value = Extension> {
    prop_oneof![
        (2usize..=9, 2usize..=3).prop_filter_map("too big", |(n, k)| {
            (n.pow(k as u32) <= 256).then(|| Extension::diagonal(&make_zmod(n).unwrap(), k).unwrap())
        }),
        (4usize..=30, any::<u64>(), any::<u64>()).prop_filter_map("trivial", |(n, a, b)| {
            let r = make_zmod(n).unwrap();
            let ideals: Vec<_> = all_ideals(&r).unwrap().into_iter().filter(|i| !i.is_whole()).collect();
            let i = &ideals[a as usize % ideals.len()];
            let j = &ideals[b as usize % ideals.len()];
            if !i.intersection(j).is_zero() || i.index() * j.index() > 256 {
                return None;
            }
            let qi = quotient(&r, i).unwrap();
            let qj = quotient(&r, j).unwrap();
            let pr = product(&[qi.ring.clone(), qj.ring.clone()]).unwrap();
            Extension::new(pr.induced(&[qi.projection, qj.projection]).unwrap()).ok()
        }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn constructed_rings_satisfy_axioms(r in small_ring()) {
        prop_assert!(r.check_axioms().is_ok());
    }

    #[test]
    fn quotients_satisfy_axioms(n in 2usize..=40, g in 0usize..40) {
        let r = make_zmod(n).unwrap();
        let i = ideal_generated(&r, &[g % n]);
        if !i.is_whole() {
            let q = quotient(&r, &i).unwrap();
            prop_assert!(q.ring.check_axioms().is_ok());
            prop_assert_eq!(q.ring.order(), i.index());
        }
    }

    #[test]
    fn enumeration_ignores_candidate_order(ext in small_extension(), seed in any::<u64>()) {
        let base = intermediate_algebras(&ext).unwrap();
        let mut order: Vec<usize> = ext.top().elements().collect();
        // Fisher–Yates with a small LCG
        let mut s = seed | 1;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let shuffled = intermediate_algebras_in_order(&ext, &order).unwrap();
        prop_assert_eq!(base.nodes(), shuffled.nodes());
    }

    #[test]
    fn lattice_operations_are_consistent(ext in small_extension()) {
        let l = intermediate_algebras(&ext).unwrap();
        for i in 0..l.count() {
            prop_assert!(ext.is_subalgebra(l.node(i)));
            prop_assert!(l.irreducible_decomposition(i).is_some());
            for j in 0..l.count() {
                let m = l.meet(i, j);
                let u = l.join(i, j);
                prop_assert!(l.leq(m, i) && l.leq(m, j));
                prop_assert!(l.leq(i, u) && l.leq(j, u));
                prop_assert_eq!(l.meet(i, u), i);
                prop_assert_eq!(l.join(i, m), i);
            }
        }
        let chain = l.maximal_chain();
        prop_assert_eq!(chain.len(), l.length() + 1);
        prop_assert!(chain.windows(2).all(|w| l.covers(w[0], w[1])));
    }

    #[test]
    fn closures_are_idempotent(ext in small_extension()) {
        let sn = seminormalization(&ext);
        let tc = t_closure(&ext);
        prop_assert!(ext.image().is_subset(&sn) && sn.is_subset(&tc));
        prop_assert_eq!(seminormalization(&ext.over(&sn).unwrap()), sn.clone());
        prop_assert_eq!(t_closure(&ext.over(&tc).unwrap()), tc.clone());
        prop_assert!(ext.is_subalgebra(&sn) && ext.is_subalgebra(&tc));
    }

    #[test]
    fn module_lattices_are_graded(r in small_ring()) {
        prop_assume!(r.order() <= 36);
        let m = FiniteModule::regular(&r);
        let l = m.submodules().unwrap();
        prop_assert!(l.maximal_chains(10_000).graded);
        prop_assert_eq!(l.length(), m.module_length());
        prop_assert_eq!(l.count(), all_ideals(&r).unwrap().len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn bell_is_sum_of_stirling(n in 0usize..=12) {
        let total: u64 = (0..=n).map(|p| stirling2(n, p).unwrap()).sum();
        prop_assert_eq!(bell(n).unwrap(), total);
    }

    #[test]
    fn partitions_are_valid_and_distinct(n in 1usize..=7) {
        let ps = partitions(n).unwrap();
        let mut seen = std::collections::BTreeSet::new();
        for p in &ps {
            let mut pts: Vec<usize> = p.blocks().iter().flatten().copied().collect();
            pts.sort_unstable();
            prop_assert_eq!(pts, (0..n).collect::<Vec<_>>());
            prop_assert!(p.blocks().iter().all(|b| !b.is_empty()));
            prop_assert!(seen.insert(p.rgs()));
        }
    }

    #[test]
    fn lambda_matrices_round_trip(r in small_ring(), p in 1usize..=3, n in 1usize..=3) {
        prop_assume!(r.order() <= 12);
        for m in enumerate_homal(&r, p, n).unwrap() {
            prop_assert!(m.is_valid(&r));
            let back = LambdaMatrix::from_morphism(&r, p, &m.morphism_table(&r));
            prop_assert_eq!(back, m);
        }
    }

    #[test]
    fn connected_injective_maps_are_surjections(n_ring in 2usize..=27, p in 1usize..=3, n in 1usize..=4) {
        let r = make_zmod(n_ring).unwrap();
        prop_assume!(is_connected(&r));
        let injective = enumerate_exal(&r, p, n).unwrap();
        for m in enumerate_homal(&r, p, n).unwrap() {
            let cols = m.column_supports(&r).unwrap();
            let covers = cols.iter().all(|c| !c.is_empty());
            prop_assert_eq!(covers, injective.contains(&m));
        }
        prop_assert_eq!(idempotents(&r).len(), 2);
    }
}

#[test]
fn partition_map_is_a_bijection_for_small_fields() {
    for (p, k) in [(2u64, 1u32), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3)] {
        let f = make_gf(p, k).unwrap();
        for n in 2..=4 {
            if f.order().pow(n as u32) > 512 {
                continue;
            }
            assert!(partition_bijection(&f, n).unwrap().passed(), "{} n={n}", f.label());
        }
    }
}
