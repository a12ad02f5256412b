//! Hulls of a few small semigroups, with the ⋆ table of the left-zero band.

use trhull::{hull, FiniteSemigroup};

fn main() {
    let cases = [
        ("left zero of order 2", FiniteSemigroup::left_zero(2)),
        ("Z/2", FiniteSemigroup::cyclic_group(2)),
        ("null of order 2", FiniteSemigroup::null(2)),
        ("V-semilattice", FiniteSemigroup::v_semilattice()),
        ("chain of order 3", FiniteSemigroup::chain(3)),
    ];
    for (name, s) in &cases {
        let h = hull(s).expect("small hull");
        println!("{name:>22}: {} elements, {} inner, {} outer", h.len(), h.inner_count(), h.outer_count());
    }

    let h = hull(&cases[0].1).unwrap();
    println!("\nleft zero band, (L, R) pairs:");
    for (i, m) in h.elements().iter().enumerate() {
        let tag = if m.is_inner() { "inner" } else { "outer" };
        println!("  {i}: L = {:?}, R = {:?} ({tag})", m.left.images(), m.right.images());
    }
    println!("⋆ table (identity is {}):", h.identity());
    for a in 0..h.len() {
        let row: Vec<usize> = (0..h.len()).map(|b| h.star(a, b)).collect();
        println!("  {row:?}");
    }
}
