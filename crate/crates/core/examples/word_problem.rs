//! Dehn's algorithm and the cyclic-cover solver for surface groups.

use reidemeister::coverings::{cyclic_cover_is_identity, dehn_is_identity, dehn_reduce, non_orientable_is_identity};
use reidemeister::presentations::surface_relator;
use reidemeister::Word;

fn main() {
    let r = surface_relator(true, 2);
    println!("relator {}", r);
    for w in ["a b A B c d C D", "a b A B c d C", "c d C D a b A B", "b A B c d C D a", "a b A B"] {
        let w: Word = w.parse().unwrap();
        println!(
            "{:<18} dehn {:<5} cyclic {:<5} reduced to `{}`",
            w.to_string(),
            dehn_is_identity(&w, 2).unwrap(),
            cyclic_cover_is_identity(&w, 2).unwrap(),
            dehn_reduce(&w, 2).unwrap()
        );
    }

    // a conjugate of the relator, padded
    let x: Word = "a c".parse().unwrap();
    let w = x.concat(&r.pow(-1)).concat(&x.inverse());
    println!("{} is the identity: {}", w, dehn_is_identity(&w, 2).unwrap());

    for w in ["a a b b c c", "a a b b", "a b"] {
        let w: Word = w.parse().unwrap();
        println!("N3: {:<12} {}", w.to_string(), non_orientable_is_identity(&w, 3).unwrap());
    }
}
