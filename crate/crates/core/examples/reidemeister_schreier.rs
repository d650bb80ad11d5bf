//! Subgroup presentations by Reidemeister-Schreier, and congruence
//! subgroups of the modular group.

use reidemeister::perm::Perm;
use reidemeister::presentations::{simplify, GeneratorNames};
use reidemeister::Presentation;
use reidemeister::subgroups::{congruence_subgroup_report, coset_table_from_permutations, reidemeister_schreier};

fn main() {
    let (p, _) = Presentation::parse_text("gens: a b\nrel: a a B B B\n").unwrap();
    // an index-3 subgroup of the trefoil group
    let a = Perm::parse_cycles(3, "(1 2)").unwrap();
    let b = Perm::parse_cycles(3, "(0 1 2)").unwrap();
    let t = coset_table_from_permutations(&p, vec![a, b]).unwrap();
    let rs = reidemeister_schreier(&p, &t, None);
    let names = GeneratorNames::default_for(rs.presentation().n_generators());
    print!("{}", rs.presentation().to_text(&names));
    let s = simplify(rs.presentation());
    let names = GeneratorNames::default_for(s.presentation.n_generators());
    print!("simplified:\n{}", s.presentation.to_text(&names));

    for q in [2, 3, 5, 7, 11, 13] {
        let r = congruence_subgroup_report(q).unwrap();
        println!(
            "p={:<2} index={:<2} generators={} order2={} order3={} free={}",
            q, r.index, r.n_generators, r.order2, r.order3, r.free
        );
    }
}
