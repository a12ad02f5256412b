//! Multiplier monoids of small algebras over GF(p).

use std::collections::HashSet;

use trhull::algebra::{inner_multiplier, multiplier_monoid, multiplier_space, FpAlgebra};

fn main() {
    for (name, a) in [
        ("GF(2), zero product, d=1", FpAlgebra::zero(2, 1)),
        ("GF(2), field", FpAlgebra::prime_field(2)),
        ("GF(2), e0·e0 = e1", FpAlgebra::nilpotent2(2)),
        ("GF(3)², coordinatewise", FpAlgebra::diagonal(3, 2)),
        ("GF(2), upper triangular", FpAlgebra::upper_triangular2(2)),
    ] {
        let space = multiplier_space(&a).unwrap();
        let m = multiplier_monoid(&a).unwrap();
        let n = a.carrier_size(usize::MAX).unwrap();
        let inner: HashSet<_> = (0..n).map(|i| inner_multiplier(&a, &a.vector(i))).collect();
        println!(
            "{name:>26}: nullspace of dimension {}, {} multipliers, {} inner, unit {:?}",
            space.basis.len(),
            m.len(),
            inner.len(),
            a.unit()
        );
    }

    let a = FpAlgebra::nilpotent2(2);
    println!("\nmultipliers of e0·e0 = e1 over GF(2):");
    for h in multiplier_monoid(&a).unwrap().pairs() {
        println!("  L = {:?}  R = {:?}", h.l.to_rows(), h.r.to_rows());
    }
}
