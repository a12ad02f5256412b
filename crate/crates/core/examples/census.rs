//! Census of all semigroups of order ≤ 4 with hull statistics.
//!
//! `cargo run --release --example census -- 4 census.csv` also writes the CSV.

use std::fs::File;

use trhull::census::{run_census, write_csv};

fn main() {
    let mut args = std::env::args().skip(1);
    let max: usize = args.next().map_or(3, |a| a.parse().expect("order"));
    let csv = args.next();
    for n in 1..=max {
        for reduce in [false, true] {
            let (records, s) = run_census(n, reduce).unwrap();
            let label = if reduce { "up to iso" } else { "labeled" };
            println!(
                "n = {n} {label:>9}: {:>5} total, {:>5} glob. idempotent, {:>4} non-degenerate, {:>4} both, {:>4} monoids, {:>5} with outer",
                s.total, s.globally_idempotent, s.nondegenerate, s.sem_nd, s.monoids, s.with_outer
            );
            if let (Some(path), false, true) = (&csv, reduce, n == max) {
                write_csv(&records, File::create(path).unwrap()).unwrap();
            }
        }
    }
}
