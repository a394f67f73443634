//! Weights and multiplicities of an irreducible module.
//!
//!     cargo run --example weight_system -- G2 1,1

use nullcone::{weight_system, weyl_dim, RootDatum, RootSystemType};

fn main() {
    let mut args = std::env::args().skip(1);
    let ty: RootSystemType = args.next().unwrap_or_else(|| "B3".into()).parse().unwrap();
    let hw: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "1,0,1".into())
        .split(',')
        .map(|c| c.trim().parse().unwrap())
        .collect();
    let d = RootDatum::build(ty).unwrap();
    let lambda = d.weight(&hw).unwrap();
    let ws = weight_system(&d, &lambda, 5_000).unwrap();

    println!("{ty} with highest weight {hw:?}: Weyl dimension {}", weyl_dim(&d, &lambda).unwrap());
    println!("{} distinct weights, multiplicities sum to {}", ws.entries().len(), ws.dim());
    println!("W-stable: {}, weights sum to zero: {}", ws.is_weyl_stable(), ws.weighted_sum().is_zero());
    println!("\ndominant weights:");
    for (mu, m) in ws.entries() {
        if d.is_dominant(mu) {
            let fw: Vec<String> = d.fw_coords(mu).iter().map(ToString::to_string).collect();
            println!("  [{}]  multiplicity {m}", fw.join(", "));
        }
    }
}
