//! Degeneracy predicates and the injectivity of x ↦ 𝔏_x and x ↦ ℜ_x.

use trhull::degeneracy::{degeneracy_report, injectivity_checks, is_nondegenerate_map};
use trhull::FiniteSemigroup;

fn main() {
    for (name, s) in [
        ("left zero", FiniteSemigroup::left_zero(2)),
        ("right zero", FiniteSemigroup::right_zero(2)),
        ("null", FiniteSemigroup::null(2)),
        ("Z/3", FiniteSemigroup::cyclic_group(3)),
    ] {
        let d = degeneracy_report(&s);
        let inj = injectivity_checks(&s);
        println!(
            "{name:>10}: globally idempotent {}, left nondeg {} (𝔏 injective {}), right nondeg {} (ℜ injective {})",
            d.globally_idempotent, d.left_nondeg, inj.frak_l_injective, d.right_nondeg, inj.frak_r_injective
        );
        if let Some((y, z)) = d.witnesses.right {
            println!("{:>12}x{y} = x{z} for every x", "");
        }
    }

    // a constant map into the null semigroup spans nothing
    let t = FiniteSemigroup::null(2);
    let span = is_nondegenerate_map(&[0, 0], &t);
    println!("\nconstant map into null(2) non-degenerate: {} (missing {:?})", span.holds(), span.left_missing);
}
