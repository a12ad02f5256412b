//! Comultipliers of coalgebras and how transposition relates them to the
//! multipliers of the dual algebra.

use trhull::algebra::FpAlgebra;
use trhull::coalgebra::{comultiplier_monoid, inner_comultiplier_report, transpose_report, FpCoalgebra};

fn main() {
    for (name, c) in [
        ("group-like, GF(3), d=2", FpCoalgebra::group_like(3, 2)),
        ("dual of the GF(2) field", FpCoalgebra::dual_of(&FpAlgebra::prime_field(2))),
        ("dual of e0·e0 = e1", FpCoalgebra::dual_of(&FpAlgebra::nilpotent2(2))),
        ("dual of upper triangular", FpCoalgebra::dual_of(&FpAlgebra::upper_triangular2(2))),
    ] {
        let m = comultiplier_monoid(&c).unwrap();
        let t = transpose_report(&c).unwrap();
        let inner = inner_comultiplier_report(&c, 4096).unwrap();
        println!(
            "{name:>26}: {:>3} comultipliers; transpose iso {}, anti-iso {}; 𝒞 homomorphism {}",
            m.len(),
            t.is_isomorphism(),
            t.is_anti_isomorphism(),
            inner.homomorphism
        );
        if let Some((a, b)) = t.anti_isomorphism_failure {
            println!("{:>28}T(a ⋆ b) ≠ T(b) ⋆ T(a) for a = {a}, b = {b}", "");
        }
    }
}
