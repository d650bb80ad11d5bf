use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reidemeister::cli;
use reidemeister::complexes::{
    build_cover, cayley_graph, connectivity_number, euler_trails, is_spanning_tree, petersen_2_factorization,
    spanning_tree, spanning_tree_ordered, Graph1, Voltage,
};
use reidemeister::coverings::{
    branching_orders_of_subgroup, build_surface_cover, classify_planar_group, cyclic_cover_is_identity,
    dehn_is_identity, dehn_reduce, riemann_hurwitz_check, verify_order_formula, BranchData, Geometry,
    SurfaceCoverSpec,
};
use reidemeister::matrices::{abelian_invariants, laurent_gcd, smith_normal_form, IntMatrix, LaurentPoly};
use reidemeister::perm::{is_transitive, Perm};
use reidemeister::presentations::{
    surface_presentation, surface_relator, tietze_apply, ConjugateFactor, NielsenMove, Presentation, TietzeMove,
};
use reidemeister::subgroups::{
    coset_table_from_permutations, default_letter_order, modular_congruence_table, reidemeister_schreier,
    schreier_transversal_ordered, CosetTable,
};
use reidemeister::surfaces::{
    characteristic, classify, dual_of, fundamental_group_with_tree, intersection_number, normal_form_complex,
    validate_manifold, Extension, NormalForm, SurfaceComplex,
};
use reidemeister::words::{
    conjugate_in_free, normal_form_cyclic_product, CyclicOrders, Letter, Word,
};

fn word(n_gens: usize, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((0..n_gens, any::<bool>()), 0..=max_len)
        .prop_map(|v| v.into_iter().map(|(g, inv)| Letter::new(g, inv)).collect())
}

fn random_word(rng: &mut ChaCha8Rng, n_gens: usize, len: usize) -> Word {
    (0..len)
        .map(|_| Letter::new(rng.gen_range(0..n_gens), rng.gen_bool(0.5)))
        .collect()
}

fn random_perm(rng: &mut ChaCha8Rng, n: usize) -> Perm {
    let mut v: Vec<usize> = (0..n).collect();
    v.shuffle(rng);
    Perm::from_images(v).unwrap()
}

fn transitive_perms(rng: &mut ChaCha8Rng, n_gens: usize, k: usize) -> Vec<Perm> {
    loop {
        let perms: Vec<Perm> = (0..n_gens).map(|_| random_perm(rng, k)).collect();
        if is_transitive(&perms, k) {
            return perms;
        }
    }
}

fn random_connected_multigraph(rng: &mut ChaCha8Rng) -> Graph1 {
    let n = rng.gen_range(1..=7);
    let mut segs = Vec::new();
    for p in 1..n {
        segs.push((rng.gen_range(0..p), p));
    }
    for _ in 0..rng.gen_range(0..=8) {
        segs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    if segs.is_empty() {
        segs.push((0, 0));
    }
    Graph1::new(n, segs).unwrap()
}

fn nf_strategy() -> impl Strategy<Value = NormalForm> {
    prop_oneof![
        Just(NormalForm::Sphere),
        (1usize..=3).prop_map(NormalForm::Orientable),
        (1usize..=4).prop_map(NormalForm::NonOrientable),
    ]
}

fn extended(nf: NormalForm, rng: &mut ChaCha8Rng, steps: usize) -> SurfaceComplex {
    let mut c = normal_form_complex(nf);
    for _ in 0..steps {
        let e = match rng.gen_range(0..3) {
            0 => Extension::SubdivideSegment {
                segment: rng.gen_range(0..c.n_segments()),
            },
            1 => {
                let f = rng.gen_range(0..c.n_faces());
                let n = c.faces()[f].len();
                if n < 2 {
                    continue;
                }
                let i = rng.gen_range(0..n - 1);
                Extension::SplitFace {
                    face: f,
                    i,
                    j: rng.gen_range(i + 1..n),
                }
            }
            _ => Extension::Cone {
                face: rng.gen_range(0..c.n_faces()),
            },
        };
        c = e.apply(&c).unwrap();
    }
    c
}

fn det_abs_one(m: &IntMatrix) -> bool {
    m.determinant().abs().is_one()
}

proptest! {
    #![proptest_config(ProptestConfig {
        cases: 64,
        failure_persistence: None,
        ..ProptestConfig::default()
    })]

    // words

    #[test]
    fn cancellation_order_does_not_matter(w in word(3, 30), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut v: Vec<Letter> = w.letters().to_vec();
        loop {
            let spots: Vec<usize> = (0..v.len().saturating_sub(1))
                .filter(|&i| v[i] == v[i + 1].inverse())
                .collect();
            match spots.choose(&mut rng) {
                Some(&i) => {
                    v.drain(i..i + 2);
                }
                None => break,
            }
        }
        prop_assert_eq!(Word::from_letters(v), w.free_reduce());
    }

    #[test]
    fn reductions_are_idempotent(w in word(3, 30)) {
        let r = w.free_reduce();
        prop_assert_eq!(r.free_reduce(), r.clone());
        prop_assert!(r.is_reduced());
        let core = w.cyclic_core();
        prop_assert!(core.is_cyclically_reduced());
        prop_assert_eq!(core.cyclic_core(), core);
    }

    #[test]
    fn inverse_law(w in word(3, 30)) {
        prop_assert!(w.concat(&w.inverse()).free_reduce().is_empty());
        prop_assert!(w.inverse().concat(&w).free_reduce().is_empty());
        prop_assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn conjugacy_is_an_equivalence(w in word(2, 16), u in word(2, 8), v in word(2, 8)) {
        let w1 = u.concat(&w).concat(&u.inverse());
        let w2 = v.concat(&w1).concat(&v.inverse());
        prop_assert!(conjugate_in_free(&w, &w));
        prop_assert!(conjugate_in_free(&w, &w1));
        prop_assert!(conjugate_in_free(&w1, &w));
        prop_assert!(conjugate_in_free(&w, &w2));
    }

    #[test]
    fn cyclic_product_normal_form_is_a_homomorphism(u in word(2, 20), v in word(2, 20)) {
        let orders = CyclicOrders(vec![2, 3]);
        let nf = |w: &Word| normal_form_cyclic_product(w, &orders);
        let both = nf(&nf(&u).concat(&nf(&v)));
        prop_assert_eq!(both, nf(&u.concat(&v)));
        prop_assert_eq!(nf(&nf(&u)), nf(&u));
    }

    // presentations

    #[test]
    fn tietze_moves_keep_abelian_invariants(
        r1 in word(2, 8), r2 in word(2, 8), def in word(2, 6), conj in word(3, 5), inverse in any::<bool>(),
    ) {
        let p = Presentation::new(2, vec![r1, r2]).unwrap();
        let before = abelian_invariants(&p).to_string();
        let q = tietze_apply(&p, &TietzeMove::AddGenerator { definition: def }).unwrap();
        prop_assert_eq!(abelian_invariants(&q).to_string(), before.clone());
        let witness = vec![
            ConjugateFactor::new(conj, 0, inverse),
            ConjugateFactor::new(Word::empty(), 1, false),
        ];
        let relator = {
            let r0 = if inverse { q.relator(0).inverse() } else { q.relator(0).clone() };
            witness[0].conjugator.concat(&r0).concat(&witness[0].conjugator.inverse()).concat(q.relator(1)).free_reduce()
        };
        let r = tietze_apply(&q, &TietzeMove::AddRelator { relator, witness }).unwrap();
        prop_assert_eq!(abelian_invariants(&r).to_string(), before);
    }

    #[test]
    fn nielsen_moves_are_unimodular(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=4);
        let mut images: Vec<Word> = (0..n).map(Word::generator).collect();
        for _ in 0..rng.gen_range(1..=12) {
            let mv = match rng.gen_range(0..3) {
                0 => {
                    let mut p: Vec<usize> = (0..n).collect();
                    p.shuffle(&mut rng);
                    NielsenMove::Permute(p)
                }
                1 => NielsenMove::Invert(rng.gen_range(0..n)),
                _ => {
                    let a = rng.gen_range(0..n);
                    let b = (a + rng.gen_range(1..n)) % n;
                    NielsenMove::Replace { a, b, inverse: rng.gen_bool(0.5) }
                }
            };
            let step = mv.images(n).unwrap();
            images = step.iter().map(|w| w.substitute(&images).free_reduce()).collect();
        }
        let rows: Vec<Vec<i64>> = images.iter().map(|w| w.exponent_sums(n)).collect();
        prop_assert!(det_abs_one(&IntMatrix::from_i64_rows(n, n, &rows)));
    }

    #[test]
    fn surface_presentations_have_one_relator(orientable in any::<bool>(), genus in 1usize..=5) {
        let p = surface_presentation(orientable, genus).unwrap();
        prop_assert_eq!(p.relators().len(), 1);
        let r = p.relator(0);
        prop_assert_eq!(r, &surface_relator(orientable, genus));
        for g in 0..p.n_generators() {
            prop_assert_eq!(r.occurrences(g), 2);
        }
        let inv = abelian_invariants(&p);
        if orientable {
            prop_assert_eq!(inv.betti, 2 * genus);
            prop_assert!(inv.torsion_u64().is_empty());
        } else {
            prop_assert_eq!(inv.betti, genus - 1);
            prop_assert_eq!(inv.torsion_u64(), vec![2]);
        }
    }

    // matrices

    #[test]
    fn smith_form_is_a_divisor_chain(rows in 1usize..=4, cols in 1usize..=4, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let entries: Vec<Vec<i64>> = (0..rows)
            .map(|_| (0..cols).map(|_| rng.gen_range(-12..=12)).collect())
            .collect();
        let m = IntMatrix::from_i64_rows(rows, cols, &entries);
        let s = smith_normal_form(&m);
        prop_assert!(det_abs_one(&s.left));
        prop_assert!(det_abs_one(&s.right));
        let d = s.left.mul(&m).mul(&s.right);
        for i in 0..rows {
            for j in 0..cols {
                if i != j {
                    prop_assert!(d.get(i, j).is_zero());
                }
            }
        }
        let diag: Vec<BigInt> = (0..rows.min(cols)).map(|i| d.get(i, i).abs()).collect();
        prop_assert_eq!(s.rank, diag.iter().filter(|x| !x.is_zero()).count());
        prop_assert_eq!(&s.diagonal[..], &diag[..s.rank]);
        for w in diag.windows(2) {
            if !w[1].is_zero() {
                prop_assert!(!w[0].is_zero() && w[1].is_multiple_of(&w[0]));
            }
        }
    }

    #[test]
    fn laurent_gcd_divides_inputs(
        polys in prop::collection::vec((-3i64..=3, prop::collection::vec(-4i64..=4, 1..=4)), 1..=3),
        common in (-2i64..=2, prop::collection::vec(-3i64..=3, 1..=3)),
    ) {
        let c = LaurentPoly::from_coeffs(common.0, &common.1);
        let fs: Vec<LaurentPoly> = polys
            .iter()
            .map(|(low, cs)| &LaurentPoly::from_coeffs(*low, cs) * &c)
            .collect();
        if fs.iter().all(|f| f.is_zero()) {
            prop_assert!(laurent_gcd(&fs).is_err());
            return Ok(());
        }
        let g = laurent_gcd(&fs).unwrap();
        for f in &fs {
            prop_assert!(f.is_zero() || f.div_exact(&g).is_some(), "{} does not divide {}", g, f);
        }
        if !c.is_zero() {
            prop_assert!(g.div_exact(&c).is_some(), "{} does not divide {}", c, g);
        }
    }

    // subgroups

    #[test]
    fn schreier_rank_and_labels(n in 2usize..=3, k in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Presentation::free(n);
        let t = coset_table_from_permutations(&p, transitive_perms(&mut rng, n, k)).unwrap();
        let rw = reidemeister_schreier(&p, &t, None);
        prop_assert_eq!(rw.presentation().n_generators(), k * (n - 1) + 1);
        for c in 0..k {
            for g in 0..n {
                let label = rw.label_word(c, g);
                prop_assert_eq!(label.free_reduce().is_empty(), rw.is_trivial_label(c, g));
            }
        }
    }

    #[test]
    fn rewriting_is_a_homomorphism(k in 2usize..=5, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Presentation::free(2);
        let t = coset_table_from_permutations(&p, transitive_perms(&mut rng, 2, k)).unwrap();
        let rw = reidemeister_schreier(&p, &t, None);
        let in_subgroup = |rng: &mut ChaCha8Rng| loop {
            let len = rng.gen_range(0..12);
            let w = random_word(rng, 2, len);
            if t.act(0, &w) == 0 {
                return w;
            }
        };
        let u = in_subgroup(&mut rng);
        let v = in_subgroup(&mut rng);
        let ru = rw.rewrite(&u).unwrap();
        let rv = rw.rewrite(&v).unwrap();
        let ruv = rw.rewrite(&u.concat(&v)).unwrap();
        prop_assert_eq!(ruv.free_reduce(), ru.concat(&rv).free_reduce());
        prop_assert_eq!(rw.expand(&ru).free_reduce(), u.free_reduce());
    }

    #[test]
    fn transversal_order_does_not_change_the_subgroup(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Presentation::new(2, vec![Word::power_of(0, 3), Word::power_of(1, 2)]).unwrap();
        let t = modular_congruence_table(5).unwrap();
        let mut order = default_letter_order(2);
        order.shuffle(&mut rng);
        let base = reidemeister_schreier(&p, &t, None);
        let tr = schreier_transversal_ordered(&t, &order);
        prop_assert!(tr.is_prefix_closed());
        let other = reidemeister_schreier(&p, &t, Some(&tr));
        prop_assert_eq!(other.presentation().n_generators(), base.presentation().n_generators());
        prop_assert_eq!(
            abelian_invariants(other.presentation()).to_string(),
            abelian_invariants(base.presentation()).to_string()
        );
    }

    // complexes

    #[test]
    fn euler_trails_partition_the_segments(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_multigraph(&mut rng);
        let trails = euler_trails(&g).unwrap();
        let odd = (0..g.n_points()).filter(|&p| g.order(p) % 2 == 1).count();
        prop_assert_eq!(trails.len(), (odd / 2).max(1));
        let mut used: Vec<usize> = trails.iter().flat_map(|t| t.darts.iter().map(|d| d.seg)).collect();
        used.sort_unstable();
        prop_assert_eq!(used, (0..g.n_segments()).collect::<Vec<_>>());
    }

    #[test]
    fn connectivity_does_not_depend_on_the_tree(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_multigraph(&mut rng);
        let mut order: Vec<usize> = (0..g.n_segments()).collect();
        order.shuffle(&mut rng);
        let root = rng.gen_range(0..g.n_points());
        let tree = spanning_tree_ordered(&g, root, &order).unwrap();
        prop_assert!(is_spanning_tree(&g, &tree));
        prop_assert_eq!(g.n_segments() - tree.len(), connectivity_number(&g).unwrap());
        prop_assert_eq!(tree.len(), g.n_points() - 1);
    }

    #[test]
    fn lifted_loops_close_exactly_on_fixed_sheets(seed in any::<u64>(), sheets in 1usize..=4) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_connected_multigraph(&mut rng);
        let tree = spanning_tree(&g).unwrap();
        let perms = (0..g.n_segments())
            .map(|s| if tree.contains(&s) { Perm::identity(sheets) } else { random_perm(&mut rng, sheets) })
            .collect();
        let v = Voltage { sheets, perms };
        let (cover, proj) = build_cover(&g, &tree, &v).unwrap();
        // a random closed walk at a random point
        let start = rng.gen_range(0..g.n_points());
        let darts = g.darts_at();
        let mut p = start;
        let mut w = Word::empty();
        for _ in 0..rng.gen_range(0..10) {
            let d = *darts[p].choose(&mut rng).unwrap();
            w.push(d.letter());
            p = g.head(d);
        }
        let back = g.path_from_word(start, &w).unwrap().inverse(&g);
        for d in &back.darts {
            w.push(d.letter());
        }
        let path = g.path_from_word(start, &w).unwrap();
        prop_assert!(path.is_closed(&g));
        let sigma = v.along(&path);
        for sheet in 0..sheets {
            let lift = proj.lift_path(&g, &v, &path, sheet);
            cover.validate_path(&lift).unwrap();
            let closed = lift.is_closed(&cover);
            prop_assert_eq!(closed, sigma.apply(sheet) == sheet);
        }
    }

    #[test]
    fn cayley_traces_multiply(seed in any::<u64>(), w in word(2, 12)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(2..=5);
        let gens = vec![random_perm(&mut rng, n), random_perm(&mut rng, n)];
        let cg = cayley_graph(&gens).unwrap();
        let start = rng.gen_range(0..cg.order());
        let mut product = cg.elements[start].clone();
        for l in &w {
            let g = &gens[l.generator()];
            product = product.then(&if l.is_inverse() { g.inverse() } else { g.clone() });
        }
        prop_assert_eq!(Some(cg.trace(start, &w)), cg.point_of(&product));
        prop_assert_eq!(cg.graph.n_segments(), cg.order() * gens.len());
    }

    #[test]
    fn petersen_factors_are_two_regular(seed in any::<u64>(), r in 1usize..=3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let n = rng.gen_range(1..=8);
        let mut ends: Vec<usize> = (0..n).flat_map(|p| std::iter::repeat_n(p, 2 * r)).collect();
        ends.shuffle(&mut rng);
        let g = Graph1::new(n, ends.chunks(2).map(|c| (c[0], c[1])).collect()).unwrap();
        let factors = petersen_2_factorization(&g).unwrap();
        prop_assert_eq!(factors.len(), r);
        let mut all: Vec<usize> = factors.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..g.n_segments()).collect::<Vec<_>>());
        for f in &factors {
            let mut order = vec![0; n];
            for &s in f {
                let (a, b) = g.endpoints(s);
                order[a] += 1;
                order[b] += 1;
            }
            prop_assert!(order.iter().all(|&o| o == 2));
        }
    }

    // surfaces

    #[test]
    fn classification_survives_extensions(nf in nf_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let steps = rng.gen_range(0..=12);
        let c = extended(nf, &mut rng, steps);
        prop_assert_eq!(characteristic(&c), nf.characteristic());
        let cl = classify(&c).unwrap();
        prop_assert_eq!(cl.normal_form, nf);
        prop_assert!(cl.replay(&c));
        let again = classify(cl.result().unwrap_or(&c)).unwrap();
        prop_assert_eq!(again.normal_form, nf);
        let nf_again = classify(&normal_form_complex(nf)).unwrap();
        prop_assert_eq!(nf_again.normal_form, nf);
    }

    #[test]
    fn dual_is_an_involution(nf in nf_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let steps = rng.gen_range(0..=8);
        let c = extended(nf, &mut rng, steps);
        let d = dual_of(&c).unwrap();
        prop_assert_eq!(d.n_points(), c.n_faces());
        prop_assert_eq!(d.n_faces(), c.n_points());
        prop_assert_eq!(d.n_segments(), c.n_segments());
        validate_manifold(&d).unwrap();
        prop_assert_eq!(classify(&d).unwrap().normal_form, nf);
        let dd = dual_of(&d).unwrap();
        prop_assert_eq!(dd.n_points(), c.n_points());
        prop_assert_eq!(dd.n_faces(), c.n_faces());
        prop_assert_eq!(classify(&dd).unwrap().normal_form, nf);
    }

    #[test]
    fn fundamental_group_does_not_depend_on_the_tree(nf in nf_strategy(), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let steps = rng.gen_range(0..=8);
        let c = extended(nf, &mut rng, steps);
        let expected = match nf {
            NormalForm::Sphere => abelian_invariants(&Presentation::free(0)).to_string(),
            NormalForm::Orientable(g) => abelian_invariants(&surface_presentation(true, g).unwrap()).to_string(),
            NormalForm::NonOrientable(g) => abelian_invariants(&surface_presentation(false, g).unwrap()).to_string(),
        };
        let mut order: Vec<usize> = (0..c.n_segments()).collect();
        order.shuffle(&mut rng);
        let base = rng.gen_range(0..c.n_points());
        let tree = spanning_tree_ordered(c.graph(), base, &order).unwrap();
        let p = fundamental_group_with_tree(&c, base, &tree).unwrap();
        prop_assert_eq!(abelian_invariants(&p).to_string(), expected);
    }

    #[test]
    fn intersection_is_bilinear_and_alternating(
        v in prop::collection::vec(-5i64..=5, 6),
        v2 in prop::collection::vec(-5i64..=5, 6),
        w in prop::collection::vec(-5i64..=5, 6),
        a in -3i64..=3,
        b in -3i64..=3,
    ) {
        let i = |x: &[i64], y: &[i64]| intersection_number(x, y).unwrap();
        let comb: Vec<i64> = v.iter().zip(&v2).map(|(x, y)| a * x + b * y).collect();
        prop_assert_eq!(i(&comb, &w), a * i(&v, &w) + b * i(&v2, &w));
        prop_assert_eq!(i(&v, &w), -i(&w, &v));
        prop_assert_eq!(i(&v, &v), 0);
    }

    // coverings

    #[test]
    fn branched_covers_satisfy_the_order_formula(
        orientable in any::<bool>(), genus in 1usize..=2, sheets in 1usize..=5, seed in any::<u64>(),
    ) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let nf = if orientable { NormalForm::Orientable(genus) } else { NormalForm::NonOrientable(genus) };
        let base = normal_form_complex(nf);
        let perms = (0..base.n_segments()).map(|_| random_perm(&mut rng, sheets)).collect();
        let spec = SurfaceCoverSpec::new(base.clone(), sheets, perms).unwrap();
        let (cover, report) = build_surface_cover(&spec).unwrap();
        prop_assert!(verify_order_formula(&report));
        prop_assert!(riemann_hurwitz_check(&base, &cover, &report));
        for face in &report.faces {
            prop_assert_eq!(face.iter().map(|&(l, _)| l).sum::<usize>(), sheets);
        }
    }

    #[test]
    fn subgroup_branching_orders_divide_k(k in 1u64..=12, sheets in 1usize..=6, seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let p = Presentation::free(2);
        let t: CosetTable = coset_table_from_permutations(&p, transitive_perms(&mut rng, 2, sheets)).unwrap();
        let len = rng.gen_range(1..6);
        let relator = random_word(&mut rng, 2, len);
        match branching_orders_of_subgroup(&t, &relator, k) {
            Ok(orders) => {
                prop_assert_eq!(orders.iter().map(|&(l, _)| l as usize).sum::<usize>(), sheets);
                for (l, b) in orders {
                    prop_assert_eq!(k % l, 0);
                    prop_assert_eq!(b, k / l - 1);
                }
            }
            Err(_) => {
                let sigma = t.word_permutation(&relator);
                prop_assert!(sigma.cycles().iter().any(|c| k % c.len() as u64 != 0));
            }
        }
    }

    #[test]
    fn word_problem_solvers_agree(g in 2usize..=3, w in word(6, 24)) {
        let w = Word::from_letters(w.iter().copied().filter(|l| l.generator() < 2 * g).collect());
        prop_assert_eq!(dehn_is_identity(&w, g).unwrap(), cyclic_cover_is_identity(&w, g).unwrap());
    }

    #[test]
    fn dehn_never_lengthens(g in 2usize..=3, w in word(4, 30), seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let r = surface_relator(true, g);
        let mut x = w.clone();
        let at = rng.gen_range(0..=x.len());
        let mut v = x.letters().to_vec();
        let r = if rng.gen_bool(0.5) { r } else { r.inverse() };
        let rot = r.rotate_left(rng.gen_range(0..r.len()));
        v.splice(at..at, rot.iter().copied());
        x = Word::from_letters(v);
        let reduced = dehn_reduce(&x, g).unwrap();
        prop_assert!(reduced.len() <= x.free_reduce().len());
        prop_assert_eq!(dehn_is_identity(&x, g).unwrap(), dehn_is_identity(&w, g).unwrap());
    }

    #[test]
    fn planar_classification_is_total(
        orders in prop::collection::vec(2u64..=8, 0..=4),
        last in 1u64..=8,
        genus in 0usize..=2,
        orientable in any::<bool>(),
        infinite in any::<bool>(),
    ) {
        let genus = if orientable { genus } else { genus.max(1) };
        let mut b = BranchData::new(orders, last, genus, orientable);
        b.infinite = infinite;
        let class = classify_planar_group(&b).unwrap();
        let chi = class.characteristic;
        let expected = if chi > num_rational::Rational64::zero() {
            Geometry::Spherical
        } else if chi.is_zero() {
            Geometry::Euclidean
        } else {
            Geometry::Hyperbolic
        };
        prop_assert_eq!(class.geometry, expected);
    }

    // cli

    #[test]
    fn porcelain_output_is_sorted_and_stable(w in word(2, 10)) {
        let text = format!("a A {}", w);
        let args = ["reidemeister", "--porcelain", "reduce", text.as_str()];
        let run = || {
            let mut out = Vec::new();
            let mut err = Vec::new();
            let code = cli::run(args.iter().map(std::ffi::OsString::from), &mut std::io::empty(), &mut out, &mut err);
            (code, String::from_utf8(out).unwrap())
        };
        let (code, first) = run();
        prop_assert_eq!(code, 0);
        let keys: Vec<&str> = first.lines().map(|l| l.split_once('=').unwrap().0).collect();
        let mut sorted = keys.clone();
        sorted.sort_unstable();
        sorted.dedup();
        prop_assert_eq!(&keys, &sorted);
        prop_assert_eq!(run().1, first);
    }
}
