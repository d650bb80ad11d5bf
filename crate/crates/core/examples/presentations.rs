//! Parsing a presentation, a witnessed Tietze move, and simplification.

use reidemeister::matrices::abelian_invariants;
use reidemeister::presentations::{simplify, tietze_apply, TietzeMove};
use reidemeister::Presentation;

fn main() {
    let (p, names) = Presentation::parse_text("gens: a b\nrel: a a B B B\n").unwrap();
    println!("{}", p.to_text(&names));
    println!("abelianized: {}", abelian_invariants(&p));

    // add c = a b, then simplify it away again
    let q = tietze_apply(&p, &TietzeMove::AddGenerator { definition: "a b".parse().unwrap() }).unwrap();
    println!("with c = ab: {} generators, {} relators", q.n_generators(), q.relators().len());
    let s = simplify(&q);
    println!(
        "simplified: {} generators, {} relators",
        s.presentation.n_generators(),
        s.presentation.relators().len()
    );
}
