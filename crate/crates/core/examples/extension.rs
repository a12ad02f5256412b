//! Extending homomorphisms to hulls: f♯, TrHull(f) and f♭.

use trhull::extension::{extend_flat, extend_sharp, trhull_on_morphism, ExtensionOptions};
use trhull::{hull, FiniteMonoid, FiniteSemigroup};

fn main() {
    let opts = ExtensionOptions::default();

    // 𝔐 itself extends to the identity of the hull
    let v = FiniteSemigroup::v_semilattice();
    let hv = hull(&v).unwrap();
    let e = extend_sharp(&hv, &hv, hv.canonical_map(), &opts).unwrap();
    println!("𝔐♯ on the V-semilattice: {:?} (identity: {})", e.hom.map, e.hom.is_identity());
    println!("  {:?}", e.report);

    // the swap of the two atoms induces an automorphism of the hull
    let swap = [0, 2, 1];
    let t = trhull_on_morphism(&hv, &hv, &swap, &opts).unwrap();
    println!("TrHull(swap) = {:?}", t.hom.map);

    // f♭ into a monoid: the chain 0 < 1 is a monoid with identity 1
    let chain = FiniteMonoid::from_semigroup(FiniteSemigroup::chain(2)).unwrap();
    // atom a goes to the top, atom b to the bottom
    let f = [0, 1, 0];
    let flat = extend_flat(&hv, &chain, &f, &opts).unwrap();
    println!("f = {f:?}: f♭ = {:?}", flat.hom.map);

    // a degenerate map is refused with a witness
    let c = hull(&FiniteSemigroup::chain(2)).unwrap();
    match trhull_on_morphism(&c, &c, &[0, 0], &opts) {
        Ok(_) => println!("unexpected success"),
        Err(e) => println!("constant map: {e}"),
    }
}
