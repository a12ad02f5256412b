//! Runs the set-theoretic property suite on orders ≤ 3 and prints each check.

use trhull::verify::{run_set, Scope, VerifyConfig};

fn main() {
    let cfg = VerifyConfig { scope: Scope::Set, max_order: 3, ..Default::default() };
    for c in run_set(&cfg) {
        let mark = if c.pass { "ok  " } else { "FAIL" };
        println!("{mark} {:<48} {:>6} instances", c.id, c.instances);
    }
}
