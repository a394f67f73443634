//! The 70-dimensional module of SL8 on the fourth exterior power: the
//! nullcone has dimension 63 and two irreducible components, one for each
//! of two non-conjugate maximal strata. Takes about a minute in release mode.

use nullcone::{analyze_module, EnumOptions, RootDatum, RootSystemType, Series};

fn main() {
    let ty = RootSystemType::new(Series::A, 7).unwrap();
    let hw = [0, 0, 0, 1, 0, 0, 0];
    let t = std::time::Instant::now();
    let r = analyze_module(ty, &hw, &EnumOptions::default()).unwrap();
    let d = RootDatum::build(ty).unwrap();
    println!("dim V = {}, dim N = {}, components = {}", r.dim_module, r.dim_nullcone, r.num_components);
    for s in r.maximal_strata() {
        let fw: Vec<String> = d.fw_coords(&s.candidate.lambda).iter().map(ToString::to_string).collect();
        println!("  lambda = [{}]  dim L = {}  dim G/P = {}", fw.join(", "), s.dim_l, s.dim_flag);
    }
    println!("{} strata in {:.1?}", r.strata.len(), t.elapsed());
}
