//! Euler trails, spanning trees, permutation-voltage covers and Cayley
//! diagrams of 1-complexes.

use reidemeister::complexes::{
    build_cover, cayley_graph, connectivity_number, euler_trails, is_regular_cover, petersen_2_factorization,
    spanning_tree, Graph1, GraphNames, Voltage,
};
use reidemeister::perm::Perm;

fn main() {
    // the bridges of Königsberg
    let (k, names) = GraphNames::parse_graph(
        "point A\npoint B\npoint C\npoint D\nseg a A B\nseg b A B\nseg c A C\nseg d A C\nseg e A D\nseg f B D\nseg g C D\n",
    )
    .unwrap();
    let trails = euler_trails(&k).unwrap();
    println!("Königsberg needs {} trails", trails.len());
    println!("connectivity {}", connectivity_number(&k).unwrap());
    let tree = spanning_tree(&k).unwrap();
    let tree_names: Vec<&str> = tree.iter().map(|&s| names.segments[s].as_str()).collect();
    println!("tree {:?}", tree_names);

    // a 3-sheeted cover of the figure eight
    let wedge = Graph1::new(1, vec![(0, 0), (0, 0)]).unwrap();
    let v = Voltage {
        sheets: 3,
        perms: vec![Perm::parse_cycles(3, "(0 1)").unwrap(), Perm::parse_cycles(3, "(0 1 2)").unwrap()],
    };
    let (cover, _) = build_cover(&wedge, &[], &v).unwrap();
    println!(
        "cover: {} points, {} segments, {:?}",
        cover.n_points(),
        cover.n_segments(),
        is_regular_cover(&wedge, &[], &v).unwrap()
    );

    let s3 = cayley_graph(&[Perm::parse_cycles(3, "(0 1)").unwrap(), Perm::parse_cycles(3, "(0 1 2)").unwrap()])
        .unwrap();
    println!("Cayley diagram of S3: {} points", s3.order());

    // K5 is 4-regular
    let segs = (0..5).flat_map(|i| (i + 1..5).map(move |j| (i, j))).collect();
    let k5 = Graph1::new(5, segs).unwrap();
    for f in petersen_2_factorization(&k5).unwrap() {
        println!("2-factor {:?}", f);
    }
}
