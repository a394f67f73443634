//! Exact nearest point to the origin in a convex hull, with its certificate.

use nullcone::exactgeom::{in_hull, min_norm_hull_point, satisfies_optimality, QVec};

fn main() {
    let pts: Vec<QVec> = [[3, 1, 2], [1, 4, -1], [2, -2, 5], [5, 3, 3], [-1, 2, 4]]
        .iter()
        .map(|p| QVec::from_ints(p))
        .collect();
    let hp = min_norm_hull_point(&pts).unwrap();
    let q = &hp.point;
    println!("min-norm point: {:?}", q.coords().iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("|q|^2 = {}", q.norm2());
    for (i, w) in &hp.weights {
        println!("  weight {w} on generator {i}");
    }
    println!("optimality <v - q, q> >= 0 for all v: {}", satisfies_optimality(q, &pts));
    println!("origin in hull: {}", in_hull(&QVec::zeros(3), &pts).unwrap());

    // Adding the antipode of a generator brings the origin into the hull.
    let mut with_origin = pts.clone();
    with_origin.push(pts[0].scale(&nullcone::exactgeom::int(-1)));
    let hp = min_norm_hull_point(&with_origin).unwrap();
    println!("after adding -v0: |q|^2 = {}", hp.point.norm2());
}
