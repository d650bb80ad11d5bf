//! Classification of closed surfaces, with the trace of moves, duals,
//! fundamental groups and intersection numbers.

use reidemeister::matrices::abelian_invariants;
use reidemeister::surfaces::{
    characteristic, classify, dual_of, fundamental_group, homology_class, intersection_number, polygon_complex,
    standard_word,
};
use reidemeister::Word;

fn main() {
    for w in ["a b A B", "a a b b", "a b c A B C", "a b A b", "a B c C b A"] {
        let (c, _) = polygon_complex(&w.parse().unwrap()).unwrap();
        let cl = classify(&c).unwrap();
        println!(
            "{:<12} c={:<3} chi={:<3} {:?} in {} moves",
            w,
            cl.characteristic,
            -cl.characteristic,
            cl.normal_form,
            cl.trace.len()
        );
    }

    // a hexagon with opposite sides glued is a torus
    let (hex, _) = polygon_complex(&"a b c A B C".parse().unwrap()).unwrap();
    let d = dual_of(&hex).unwrap();
    println!("dual: {} points, {} segments, {} faces", d.n_points(), d.n_segments(), d.n_faces());
    println!("c of the dual = {}", characteristic(&d));

    let pi1 = fundamental_group(&hex, 0).unwrap();
    println!("H1 = {}", abelian_invariants(&pi1));

    // the same loop in the standard generators of the torus
    let path: Word = "a b".parse().unwrap();
    let (nf, image) = standard_word(&hex, &path).unwrap();
    println!("{} becomes {} on {:?}", path, image, nf);

    let (torus, _) = polygon_complex(&"a b A B".parse().unwrap()).unwrap();
    let x = homology_class(&"a".parse().unwrap(), 2);
    let y = homology_class(&"b".parse().unwrap(), 2);
    println!("a . b = {} on {} faces", intersection_number(&x, &y).unwrap(), torus.n_faces());
}
