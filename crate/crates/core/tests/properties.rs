mod common;

use proptest::prelude::*;
use trhull::algebra::{multiplier_monoid, multiplier_space, AlgFile, FpAlgebra};
use trhull::census::enumerate_semigroups;
use trhull::coalgebra::{transpose_report, FpCoalgebra};
use trhull::degeneracy::{degeneracy_report, injectivity_checks};
use trhull::homsearch::find_homomorphisms;
use trhull::hull::push_forward;
use trhull::sgp::{parse_sgp, to_sgp};
use trhull::{hull, multipliers, FiniteSemigroup, SelfMap};

fn table(s: &FiniteSemigroup) -> common::Table {
    s.rows().map(<[usize]>::to_vec).collect()
}

/// A semigroup of order 1..=4 drawn from the labeled census.
fn semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    let all: Vec<FiniteSemigroup> = (1..=4).flat_map(|n| enumerate_semigroups(n, false).unwrap()).collect();
    proptest::sample::select(all)
}

fn small_semigroup() -> impl Strategy<Value = FiniteSemigroup> {
    let all: Vec<FiniteSemigroup> = (1..=3).flat_map(|n| enumerate_semigroups(n, false).unwrap()).collect();
    proptest::sample::select(all)
}

fn relabeling(s: FiniteSemigroup) -> impl Strategy<Value = (FiniteSemigroup, SelfMap)> {
    let n = s.order();
    Just((0..n).collect::<Vec<usize>>())
        .prop_shuffle()
        .prop_map(move |p| (s.clone(), SelfMap::new(p).unwrap()))
}

fn gf2_algebra() -> impl Strategy<Value = FpAlgebra> {
    let all: Vec<FpAlgebra> = (1..=2)
        .flat_map(|d| common::all_associative_algebras(2, d).into_iter().map(move |m| FpAlgebra::new(2, d, &m).unwrap()))
        .collect();
    proptest::sample::select(all)
}

proptest! {
    #[test]
    fn sgp_round_trip(s in semigroup()) {
        let text = to_sgp(&s);
        prop_assert_eq!(parse_sgp(&text).unwrap(), s.clone());
        let commented = format!("# a comment\n\n{}", text.replace('\n', "  \n"));
        prop_assert_eq!(parse_sgp(&commented).unwrap(), s);
    }

    #[test]
    fn opposite_is_an_involution_and_swaps_multipliers(s in semigroup()) {
        prop_assert_eq!(s.opposite().opposite(), s.clone());
        let mut swapped: Vec<_> = multipliers(&s).into_iter().map(|m| (m.right, m.left)).collect();
        swapped.sort();
        let op: Vec<_> = multipliers(&s.opposite()).into_iter().map(|m| (m.left, m.right)).collect();
        prop_assert_eq!(swapped, op);
    }

    #[test]
    fn hull_is_invariant_under_relabeling((s, sigma) in semigroup().prop_flat_map(relabeling)) {
        let t = s.transport(&sigma).unwrap();
        let hs = hull(&s).unwrap();
        let ht = hull(&t).unwrap();
        prop_assert_eq!(hs.len(), ht.len());
        prop_assert_eq!(hs.inner_count(), ht.inner_count());
        for m in hs.elements() {
            let (l, r) = push_forward(m, &sigma).unwrap();
            prop_assert!(ht.index_of(&l, &r).is_some());
        }
        prop_assert_eq!(degeneracy_report(&s).all(), degeneracy_report(&t).all());
    }

    #[test]
    fn degeneracy_matches_brute_force(s in semigroup()) {
        let t = table(&s);
        let d = degeneracy_report(&s);
        prop_assert_eq!(d.globally_idempotent, common::globally_idempotent(&t));
        prop_assert_eq!(d.left_nondeg, common::left_nondegenerate(&t));
        prop_assert_eq!(d.right_nondeg, common::right_nondegenerate(&t));
        prop_assert!(d.recheck(&s));
        let inj = injectivity_checks(&s);
        prop_assert!(inj.consistent);
    }

    #[test]
    fn hom_search_matches_brute_force(s in small_semigroup(), t in small_semigroup()) {
        let tt = table(&t);
        let fast = find_homomorphisms(&s, &t, false, &[], usize::MAX);
        prop_assert_eq!(fast, common::homomorphisms(&table(&s), t.order(), |a, b| tt[a][b]));
    }

    #[test]
    fn hull_matches_brute_force(s in small_semigroup()) {
        let mut fast: Vec<_> = hull(&s).unwrap().elements().iter()
            .map(|m| (m.left.images().to_vec(), m.right.images().to_vec())).collect();
        fast.sort();
        prop_assert_eq!(fast, common::hull_pairs(&table(&s)));
    }

    #[test]
    fn linear_multipliers_match_brute_force(a in gf2_algebra()) {
        let mut fast: Vec<_> = multiplier_space(&a).unwrap().pairs.iter().map(|h| (h.l.to_rows(), h.r.to_rows())).collect();
        fast.sort();
        prop_assert_eq!(fast, common::linear_multipliers(2, &a.mul_tensor()));
        let m = multiplier_monoid(&a).unwrap();
        prop_assert_eq!(m.star(m.identity(), 0), 0);
    }

    #[test]
    fn transpose_is_an_isomorphism_onto_dual_multipliers(a in gf2_algebra()) {
        let c = FpCoalgebra::dual_of(&a);
        let r = transpose_report(&c).unwrap();
        prop_assert!(r.is_isomorphism());
        // anti-isomorphism exactly when the monoid is commutative
        let m = multiplier_monoid(&a).unwrap();
        let commutative = (0..m.len()).all(|x| (0..m.len()).all(|y| m.star(x, y) == m.star(y, x)));
        prop_assert_eq!(r.is_anti_isomorphism(), commutative);
    }

    #[test]
    fn alg_file_round_trip(a in gf2_algebra()) {
        let file = AlgFile::from_algebra(&a);
        let text = serde_json::to_string(&file).unwrap();
        let back: AlgFile = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back.algebra().unwrap().unwrap(), a.clone());
        let co = FpCoalgebra::dual_of(&a).to_alg_file();
        let back: AlgFile = serde_json::from_str(&serde_json::to_string(&co).unwrap()).unwrap();
        prop_assert_eq!(back.coalgebra().unwrap().unwrap().dual_algebra(), a);
    }
}
