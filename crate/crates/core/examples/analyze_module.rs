//! Nullcone dimension and maximal components of one module, with every
//! stratum listed.
//!
//!     cargo run --release --example analyze_module -- D4 2,0,0,0

use nullcone::{analyze_module, EnumOptions, RootDatum, RootSystemType};

fn main() {
    let mut args = std::env::args().skip(1);
    let ty: RootSystemType = args.next().unwrap_or_else(|| "A3".into()).parse().unwrap();
    let hw: Vec<i64> = args
        .next()
        .unwrap_or_else(|| "0,2,0".into())
        .split(',')
        .map(|c| c.trim().parse().unwrap())
        .collect();
    let r = analyze_module(ty, &hw, &EnumOptions::default()).unwrap();
    let d = RootDatum::build(ty).unwrap();

    println!("{ty} {hw:?}: dim V = {}, dim N = {}, {} component(s) of maximal dimension", r.dim_module, r.dim_nullcone, r.num_components);
    println!("{} strata from {} candidates ({} tuples visited)\n", r.strata.len(), r.candidates_examined, r.subsets_visited);
    println!("{:<30} {:>8} {:>6} {:>6} {:>6}", "lambda (fundamental coords)", "|l|^2", "dim L", "G/P", "total");
    for s in &r.strata {
        let fw: Vec<String> = d.fw_coords(&s.candidate.lambda).iter().map(ToString::to_string).collect();
        let mark = if s.dim_total == r.dim_nullcone { " *" } else { "" };
        println!(
            "{:<30} {:>8} {:>6} {:>6} {:>6}{mark}",
            format!("[{}]", fw.join(", ")),
            s.candidate.norm2.to_string(),
            s.dim_l,
            s.dim_flag,
            s.dim_total
        );
    }
}
