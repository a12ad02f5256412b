//! Monoid homomorphisms M -> TrHull(S) against translation non-degenerate
//! semigroup homomorphisms |M| -> TrHull(S).

use trhull::census::enumerate_semigroups;
use trhull::degeneracy::degeneracy_report;
use trhull::extension::check_adjunction;
use trhull::{hull, FiniteMonoid};

fn main() {
    let small: Vec<_> = (1..=3).flat_map(|n| enumerate_semigroups(n, true).unwrap()).collect();
    let monoids: Vec<FiniteMonoid> = small.iter().cloned().filter_map(FiniteMonoid::from_semigroup).collect();
    let targets: Vec<_> = small.iter().filter(|s| degeneracy_report(s).all()).collect();
    println!("{} monoids, {} globally idempotent non-degenerate targets", monoids.len(), targets.len());
    let (mut pairs, mut homs, mut held, mut most) = (0, 0, 0, 0);
    for m in &monoids {
        for s in &targets {
            let r = check_adjunction(m, &hull(s).unwrap()).unwrap();
            pairs += 1;
            homs += r.monoid_homs;
            held += usize::from(r.holds());
            most = most.max(r.monoid_homs);
        }
    }
    println!("{held} of {pairs} pairs (M, S) give a bijection, {homs} monoid homs in total, at most {most} for one pair");
}
