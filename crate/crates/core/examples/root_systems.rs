//! Root datum of a Cartan type in the standard realisation.
//!
//!     cargo run --example root_systems -- F4

use nullcone::exactgeom::QVec;
use nullcone::{RootDatum, RootSystemType};

fn show(v: &QVec) -> String {
    let c: Vec<String> = v.coords().iter().map(ToString::to_string).collect();
    format!("({})", c.join(", "))
}

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "G2".into());
    let ty: RootSystemType = arg.parse().expect("a type such as A3, B4 or E6");
    let d = RootDatum::build(ty).expect("valid type");

    println!("{ty}: rank {}, ambient dimension {}", d.rank(), d.ambient_dim());
    println!("{} positive roots, rho = {}", d.positive_roots().len(), show(&d.rho()));
    println!("\nCartan matrix:");
    for row in d.cartan() {
        println!("  {}", row.iter().map(|c| format!("{c:>3}")).collect::<String>());
    }
    println!("\nsimple roots / fundamental weights:");
    for (a, w) in d.simple_roots().iter().zip(d.fundamental_weights()) {
        println!("  {:<28} {}", show(a), show(w));
    }
    let theta = d.positive_roots().iter().max_by_key(|r| d.fw_coords(r).iter().sum::<num_rational::BigRational>()).unwrap();
    let orbit = d.weyl_orbit(theta, 100_000).unwrap();
    println!("\nW-orbit of the highest root has {} elements", orbit.len());
}
