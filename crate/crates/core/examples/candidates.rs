//! The two stages of the stratification: enumerate candidate directions,
//! then keep those whose Levi factor has a semistable vector.

use nullcone::strata::{enumerate_candidates, levi_semistable, optimality_filter, stratum_of};
use nullcone::{weight_system, EnumOptions, RootDatum, RootSystemType};

fn main() {
    let ty: RootSystemType = "A1".parse().unwrap();
    let d = RootDatum::build(ty).unwrap();
    // Binary sextics: weights -6, -4, ..., 6 in units of w1.
    let ws = weight_system(&d, &d.weight(&[6]).unwrap(), 100).unwrap();
    let opts = EnumOptions::default();
    let e = enumerate_candidates(&ws, &opts).unwrap();
    println!("{} candidates after {} tuples", e.candidates.len(), e.subsets_visited);
    for c in &e.candidates {
        let fw = &d.fw_coords(&c.lambda)[0];
        let hull = optimality_filter(&ws, c);
        let levi = levi_semistable(&ws, c, &opts).unwrap();
        let s = stratum_of(&ws, c);
        println!(
            "  lambda = {fw} w1: hull-optimal {hull:<5} Levi-semistable {levi:<5} stratum dim {}",
            s.dim_total
        );
    }
}
