//! Spherical, Euclidean and hyperbolic planar groups.

use reidemeister::coverings::{classify_planar_group, classify_triangle, BranchData};

fn main() {
    for (p, q, r) in [(2, 2, 5), (2, 3, 3), (2, 3, 4), (2, 3, 5), (2, 3, 6), (2, 4, 4), (3, 3, 3), (2, 3, 7)] {
        let c = classify_triangle(p, q, r).unwrap();
        println!(
            "({},{},{})  {:<10} chi={:<6} {}",
            p,
            q,
            r,
            c.geometry.to_string(),
            c.characteristic.to_string(),
            c.name.unwrap_or_default()
        );
    }

    let quad = classify_planar_group(&BranchData::new(vec![2, 2, 2], 2, 0, true)).unwrap();
    println!("(2,2,2,2)  {} {}", quad.geometry, quad.name.unwrap_or_default());
    let torus = classify_planar_group(&BranchData::new(vec![], 1, 1, true)).unwrap();
    println!("torus      {} {}", torus.geometry, torus.name.unwrap_or_default());
    let klein = classify_planar_group(&BranchData::new(vec![], 1, 2, false)).unwrap();
    println!("N2         {}", klein.geometry);
    let genus2 = classify_planar_group(&BranchData::new(vec![], 1, 2, true)).unwrap();
    println!("genus 2    {} chi={}", genus2.geometry, genus2.characteristic);
}
