//! Conc: Mult(A) -> TrHull(Conv(A)) and which algebras are concrete.

use trhull::algebra::{canonical_map_injectivity, concretization, FpAlgebra};

fn main() {
    for (name, a) in [
        ("GF(2) zero, d=1", FpAlgebra::zero(2, 1)),
        ("GF(3) zero, d=1", FpAlgebra::zero(3, 1)),
        ("GF(2) zero, d=2", FpAlgebra::zero(2, 2)),
        ("GF(3) field", FpAlgebra::prime_field(3)),
        ("GF(2) e0·e0 = e1", FpAlgebra::nilpotent2(2)),
        ("GF(2)² coordinatewise", FpAlgebra::diagonal(2, 2)),
        ("GF(2) upper triangular", FpAlgebra::upper_triangular2(2)),
    ] {
        let c = concretization(&a).unwrap();
        let r = &c.report;
        let k = canonical_map_injectivity(&a).unwrap();
        println!(
            "{name:>24}: {:>3} multipliers -> hull of {:>3}; injective {}, concrete {}; f ↦ (L_f, R_f) injective {}",
            r.multipliers, r.hull_size, r.injective, r.surjective, k.injective
        );
    }
}
