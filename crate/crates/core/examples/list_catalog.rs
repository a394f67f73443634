//! Browse the built-in catalog: entries per list, duals, and entries that
//! appear in several lists.

use nullcone::catalog::{self, expected, lookup, multi_listed};
use nullcone::RootSystemType;

fn main() {
    let entries = catalog::entries(6);
    println!("{} entries up to rank 6\n", entries.len());
    for e in entries.iter().take(12) {
        let x = expected(e).unwrap();
        let dim = x.dim_nullcone.map_or("?".into(), |d| d.to_string());
        println!("{:<16} lists {:<5} dim {:>3}  expected nullcone {dim:>3}, {} component(s)", e.to_string(), e.lists_label(), e.dim_module().unwrap(), x.components);
    }
    println!("...\n\nin more than one list:");
    for e in multi_listed(6) {
        println!("  {e} ({})", e.lists_label());
    }
    let a4: RootSystemType = "A4".parse().unwrap();
    let dual = lookup(a4, &[0, 0, 1, 0]).unwrap();
    println!("\n(A4, w3) is found as {dual} via duality");
}
