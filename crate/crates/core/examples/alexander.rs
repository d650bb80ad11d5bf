//! The operator polynomial of the commutator subgroup of a knot group.

use reidemeister::Presentation;
use reidemeister::subgroups::commutator_operator_polynomial;

fn main() {
    for (name, text) in [
        ("trefoil", "gens: a b\nrel: a a B B B\n"),
        ("figure eight", "gens: x y\nrel: Y x y X y x Y X y X\n"),
        ("(2,5) torus knot", "gens: a b\nrel: a a B B B B B\n"),
    ] {
        let (p, _) = Presentation::parse_text(text).unwrap();
        match commutator_operator_polynomial(&p) {
            Ok(f) => println!("{:<16} {}", name, f),
            Err(e) => println!("{:<16} {}", name, e),
        }
    }
}
