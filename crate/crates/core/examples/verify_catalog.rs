//! Checks the catalog entries of small dimension against their expected
//! nullcones.
//!
//!     cargo run --release --example verify_catalog -- 30

use nullcone::catalog::{self, DEFAULT_MAX_RANK};
use nullcone::cli::{verify_entry, Status};
use nullcone::EnumOptions;

fn main() {
    let cap: u64 = std::env::args().nth(1).map_or(24, |c| c.parse().unwrap());
    let opts = EnumOptions { dim_cap: cap, ..EnumOptions::default() };
    let (mut pass, mut fail) = (0, 0);
    for e in catalog::entries(DEFAULT_MAX_RANK) {
        let row = verify_entry(&e, &opts).unwrap();
        match row.status {
            Status::Skipped => continue,
            Status::Pass => pass += 1,
            _ => fail += 1,
        }
        println!(
            "{:<6} {:<16} lists {:<6} dim {:>3}  nullcone {:>3}  components {}",
            format!("{:?}", row.status),
            row.entry,
            row.lists.join(","),
            row.dim_module,
            row.dim_nullcone.unwrap_or(0),
            row.num_components.unwrap_or(0)
        );
    }
    println!("\n{pass} passed, {fail} failed (dimension cap {cap})");
}
