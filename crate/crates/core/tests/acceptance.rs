//! Acceptance criteria, one line of output per criterion. Runs without the
//! test harness so the lines always show.

use std::time::{Duration, Instant};

use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use reidemeister::complexes::{euler_trails, petersen_2_factorization, Graph1, GraphNames};
use reidemeister::coverings::{
    build_surface_cover, classify_planar_group, classify_triangle, cyclic_cover_is_identity, dehn_is_identity,
    riemann_hurwitz_check, verify_order_formula, BranchData, Geometry, SurfaceCoverSpec,
};
use reidemeister::matrices::{
    elementary_divisors_via_minors, laurent_elementary_divisors, smith_normal_form, IntMatrix, LaurentMatrix,
    LaurentPoly,
};
use reidemeister::perm::Perm;
use reidemeister::presentations::{surface_relator, Presentation};
use reidemeister::subgroups::{
    commutator_operator_polynomial, commutator_relation_row, congruence_subgroup_report,
    coset_table_from_permutations, reidemeister_schreier, schreier_transversal,
};
use reidemeister::surfaces::{
    characteristic, classify, normal_form_complex, polygon_complex, Extension, NormalForm, SurfaceComplex,
};
use reidemeister::words::{Letter, Word};

type Check = Result<(), String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Check {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Check {
    let t = start.elapsed();
    ensure(t < limit, || format!("{} took {:?}, limit {:?}", what, t, limit))
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

fn poly(w: &str) -> SurfaceComplex {
    polygon_complex(&w.parse().unwrap()).unwrap().0
}

fn congruence_table() -> Check {
    let start = Instant::now();
    for p in [2u64, 3, 5, 7, 11, 13] {
        let r = congruence_subgroup_report(p).map_err(|e| e.to_string())?;
        ensure(r.index as u64 == p + 1, || format!("p={} index {}", p, r.index))?;
        let want2 = match p {
            2 => 1,
            _ if p % 4 == 1 => 2,
            _ => 0,
        };
        let want3 = match p {
            3 => 1,
            _ if p % 3 == 1 => 2,
            _ => 0,
        };
        ensure(r.order2 == want2, || format!("p={} order-2 count {} want {}", p, r.order2, want2))?;
        ensure(r.order3 == want3, || format!("p={} order-3 count {} want {}", p, r.order3, want3))?;
        if p == 11 {
            ensure(r.free && r.presentation.n_generators() == 3, || {
                format!("p=11 free={} rank={}", r.free, r.presentation.n_generators())
            })?;
        }
    }
    within(start, Duration::from_secs(1), "congruence table")
}

fn elementary_divisors() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for _ in 0..500 {
        let (r, c) = (rng.gen_range(1..=5), rng.gen_range(1..=5));
        let rows: Vec<Vec<i64>> = (0..r).map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect()).collect();
        let m = IntMatrix::from_i64_rows(r, c, &rows);
        let s = smith_normal_form(&m);
        let (d, rank) = elementary_divisors_via_minors(&m).map_err(|e| e.to_string())?;
        ensure(s.diagonal == d && s.rank == rank, || format!("snf {:?} vs minors {:?} on {:?}", s.diagonal, d, rows))?;
        for w in s.diagonal.windows(2) {
            ensure((&w[1] % &w[0]).is_zero(), || format!("chain broken in {:?}", s.diagonal))?;
        }
        // unimodular fuzz: row and column additions, swaps and negations
        let mut fz = rows.clone();
        for _ in 0..20 {
            let t = rng.gen_range(0..4);
            let k = rng.gen_range(-2..=2);
            if t < 2 && r > 1 {
                let (i, j) = (rng.gen_range(0..r), rng.gen_range(0..r));
                if i != j {
                    if t == 0 {
                        let src = fz[j].clone();
                        for (x, y) in fz[i].iter_mut().zip(&src) {
                            *x += k * y;
                        }
                    } else {
                        fz.swap(i, j);
                    }
                }
            } else if t == 2 && c > 1 {
                let (i, j) = (rng.gen_range(0..c), rng.gen_range(0..c));
                if i != j {
                    for row in fz.iter_mut() {
                        row[i] += k * row[j];
                    }
                }
            } else {
                let i = rng.gen_range(0..r);
                for x in fz[i].iter_mut() {
                    *x = -*x;
                }
            }
        }
        let s2 = smith_normal_form(&IntMatrix::from_i64_rows(r, c, &fz));
        ensure(s2.diagonal == s.diagonal, || format!("unimodular change moved divisors of {:?}", rows))?;
    }
    within(start, Duration::from_secs(5), "elementary divisors")
}

fn operator_separation() -> Check {
    let f: LaurentPoly = "x^2 + 1".parse().unwrap();
    let m = LaurentMatrix::from_rows(vec![vec![f.clone()], vec![LaurentPoly::constant(2)]]).map_err(|e| e.to_string())?;
    let (d, _) = laurent_elementary_divisors(&m).map_err(|e| e.to_string())?;
    ensure(d == vec![LaurentPoly::one()], || format!("divisors {:?}", d))?;
    // S ↦ (1, 0) in (Z/2)^2 with x swapping coordinates satisfies both
    // relations, so S is not trivial.
    let x = vec![vec![0, 1], vec![1, 0]];
    let v = [1, 0];
    ensure(f.act_mod(&x, &x, &v, 2) == vec![0, 0], || "x^2 + 1 does not kill S".into())?;
    ensure(LaurentPoly::constant(2).act_mod(&x, &x, &v, 2) == vec![0, 0], || "2 does not kill S".into())?;
    ensure(v != [0, 0], || "image of S is zero".into())
}

fn alexander() -> Check {
    let p = Presentation::parse(2, &["a a B B B"]).map_err(|e| e.to_string())?;
    let f = commutator_operator_polynomial(&p).map_err(|e| e.to_string())?;
    let want: LaurentPoly = "x^2 - x + 1".parse().unwrap();
    ensure(f.associated(&want), || format!("f = {}", f))?;
    let row = commutator_relation_row(&p).map_err(|e| e.to_string())?;
    let (d, _) = laurent_elementary_divisors(&LaurentMatrix::from_rows(vec![row]).unwrap()).map_err(|e| e.to_string())?;
    ensure(d.len() == 1 && d[0].associated(&f), || format!("relation-matrix oracle gives {:?}", d))
}

fn surface_classification() -> Check {
    let start = Instant::now();
    ensure(characteristic(&normal_form_complex(NormalForm::Sphere)) == -2, || "sphere c".into())?;
    for g in 1..=5 {
        let c = characteristic(&normal_form_complex(NormalForm::Orientable(g)));
        ensure(c == 2 * g as i64 - 2, || format!("genus {} has c={}", g, c))?;
    }
    let forms = [
        NormalForm::Sphere,
        NormalForm::Orientable(1),
        NormalForm::Orientable(2),
        NormalForm::Orientable(3),
        NormalForm::NonOrientable(1),
        NormalForm::NonOrientable(2),
        NormalForm::NonOrientable(3),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for nf in forms {
        for _ in 0..200 {
            let mut c = normal_form_complex(nf);
            for _ in 0..rng.gen_range(1..=25) {
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
                c = e.apply(&c).map_err(|e| e.to_string())?;
            }
            let cl = classify(&c).map_err(|e| e.to_string())?;
            ensure(cl.normal_form == nf, || format!("{} classified as {}", nf, cl.normal_form))?;
            let c0 = characteristic(&c);
            for step in &cl.trace {
                ensure(characteristic(&step.after) == c0, || format!("{:?} changed c", step.mv))?;
            }
        }
    }
    within(start, Duration::from_secs(10), "classification fuzz")
}

fn word_problem() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for g in [2usize, 3] {
        let r = surface_relator(true, g);
        let both = |w: &Word| -> Result<(bool, bool), String> {
            Ok((
                dehn_is_identity(w, g).map_err(|e| e.to_string())?,
                cyclic_cover_is_identity(w, g).map_err(|e| e.to_string())?,
            ))
        };
        for base in [r.clone(), r.inverse()] {
            for i in 0..base.len() {
                let w = base.rotate_left(i);
                ensure(both(&w)? == (true, true), || format!("rotation {} not identity", w))?;
            }
        }
        for _ in 0..10_000 {
            let len = rng.gen_range(0..=12);
            let w = random_word(&mut rng, 2 * g, len);
            let (d, c) = both(&w)?;
            ensure(d == c, || format!("solvers disagree on {} (g={})", w, g))?;
            if w.exponent_sums(2 * g).iter().any(|&e| e != 0) {
                ensure(!d, || format!("{} has nonzero abelianization", w))?;
            }
        }
        for _ in 0..2_000 {
            let mut w = Word::empty();
            for _ in 0..rng.gen_range(1..=4) {
                let len = rng.gen_range(0..8);
                let c = random_word(&mut rng, 2 * g, len);
                let e = if rng.gen_bool(0.5) { r.clone() } else { r.inverse() };
                w = w.concat(&c).concat(&e).concat(&c.inverse());
            }
            ensure(both(&w)? == (true, true), || format!("product {} not identity", w))?;
        }
    }
    within(start, Duration::from_secs(60), "word problem")
}

fn branched_coverings() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for base_word in ["a b A B", "a b a B", "a b A B c d C D"] {
        let base = poly(base_word);
        for _ in 0..100 {
            let k = rng.gen_range(1..=6);
            let perms = (0..base.n_segments()).map(|_| random_perm(&mut rng, k)).collect();
            let spec = SurfaceCoverSpec::new(base.clone(), k, perms).map_err(|e| e.to_string())?;
            let (cover, report) = build_surface_cover(&spec).map_err(|e| e.to_string())?;
            for cycles in &report.faces {
                let total: usize = cycles.iter().map(|&(l, _)| l).sum();
                ensure(total == k, || format!("cycle lengths sum to {} over degree {}", total, k))?;
            }
            ensure(verify_order_formula(&report), || "order formula".into())?;
            ensure(riemann_hurwitz_check(&base, &cover, &report), || "Riemann-Hurwitz".into())?;
            if report.is_unbranched() {
                ensure(characteristic(&cover) == k as i64 * characteristic(&base), || "unbranched count".into())?;
            }
        }
    }
    Ok(())
}

fn planar_trichotomy() -> Check {
    let class = |b: BranchData| classify_planar_group(&b).map(|c| c.geometry).map_err(|e| e.to_string());
    for n in 2..=12 {
        ensure(class(BranchData::new(vec![n], n, 0, true))? == Geometry::Spherical, || format!("S^{}", n))?;
        ensure(class(BranchData::triangle(2, 2, n))? == Geometry::Spherical, || format!("dihedral {}", n))?;
    }
    for k in [3, 4, 5] {
        ensure(class(BranchData::triangle(2, 3, k))? == Geometry::Spherical, || format!("(2,3,{})", k))?;
    }
    let euclid = [
        BranchData::new(vec![], 1, 1, true),
        BranchData::triangle(2, 3, 6),
        BranchData::triangle(2, 4, 4),
        BranchData::new(vec![2, 2, 2], 2, 0, true),
    ];
    for b in euclid {
        ensure(class(b.clone())? == Geometry::Euclidean, || format!("{:?}", b))?;
    }
    let h = classify_triangle(2, 3, 7).map_err(|e| e.to_string())?;
    ensure(h.geometry == Geometry::Hyperbolic, || "(2,3,7)".into())?;
    for k in 7..20 {
        ensure(class(BranchData::triangle(2, 3, k))? == Geometry::Hyperbolic, || format!("(2,3,{})", k))?;
    }
    Ok(())
}

fn random_connected_multigraph(rng: &mut ChaCha8Rng) -> Graph1 {
    let n = rng.gen_range(1..=8);
    let mut segs = Vec::new();
    for p in 1..n {
        segs.push((rng.gen_range(0..p), p));
    }
    for _ in 0..rng.gen_range(0..=10) {
        segs.push((rng.gen_range(0..n), rng.gen_range(0..n)));
    }
    if segs.is_empty() {
        segs.push((0, 0));
    }
    Graph1::new(n, segs).unwrap()
}

fn random_regular(rng: &mut ChaCha8Rng, n: usize, r: usize) -> Graph1 {
    let mut ends: Vec<usize> = (0..n).flat_map(|p| std::iter::repeat_n(p, 2 * r)).collect();
    ends.shuffle(rng);
    let segs = ends.chunks(2).map(|c| (c[0], c[1])).collect();
    Graph1::new(n, segs).unwrap()
}

fn graph_layer() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..200 {
        let g = random_connected_multigraph(&mut rng);
        let trails = euler_trails(&g).map_err(|e| e.to_string())?;
        let odd = (0..g.n_points()).filter(|&p| g.order(p) % 2 == 1).count();
        ensure(trails.len() == (odd / 2).max(1), || format!("{} trails for {} odd points", trails.len(), odd))?;
        let mut used = vec![0; g.n_segments()];
        for t in &trails {
            g.validate_path(t).map_err(|e| e.to_string())?;
            for d in &t.darts {
                used[d.seg] += 1;
            }
        }
        ensure(used.iter().all(|&u| u == 1), || "a segment is not used exactly once".into())?;
    }
    let (k, _) = GraphNames::parse_graph(
        "point A\npoint B\npoint C\npoint D\nseg a A B\nseg b A B\nseg c A C\nseg d A C\nseg e A D\nseg f B D\nseg g C D\n",
    )
    .unwrap();
    ensure(euler_trails(&k).map_err(|e| e.to_string())?.len() == 2, || "Koenigsberg".into())?;
    for r in 1..=4 {
        for _ in 0..25 {
            let n = rng.gen_range(1..=9);
            let g = random_regular(&mut rng, n, r);
            let factors = petersen_2_factorization(&g).map_err(|e| e.to_string())?;
            ensure(factors.len() == r, || format!("{} factors for r={}", factors.len(), r))?;
            let mut seen = vec![0; g.n_segments()];
            for f in &factors {
                let mut deg = vec![0; n];
                for &s in f {
                    seen[s] += 1;
                    let (a, b) = g.endpoints(s);
                    deg[a] += 1;
                    deg[b] += 1;
                }
                ensure(deg.iter().all(|&d| d == 2), || format!("factor degrees {:?}", deg))?;
            }
            ensure(seen.iter().all(|&x| x == 1), || "factors do not partition".into())?;
        }
    }
    Ok(())
}

fn transitive_perms(rng: &mut ChaCha8Rng, n_gens: usize, degree: usize) -> Vec<Perm> {
    loop {
        let perms: Vec<Perm> = (0..n_gens).map(|_| random_perm(rng, degree)).collect();
        let mut seen = vec![false; degree];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(x) = stack.pop() {
            for p in &perms {
                for y in [p.apply(x), p.inverse().apply(x)] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        if seen.iter().all(|&s| s) {
            return perms;
        }
    }
}

fn rewriting_soundness() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for _ in 0..50 {
        let n = rng.gen_range(1..=3);
        let degree = rng.gen_range(1..=6);
        let p = Presentation::free(n);
        let t = coset_table_from_permutations(&p, transitive_perms(&mut rng, n, degree)).map_err(|e| e.to_string())?;
        let rw = reidemeister_schreier(&p, &t, None);
        let want = 1 + degree * (n - 1);
        ensure(rw.presentation().n_generators() == want, || {
            format!("rank {} for index {} over F{}", rw.presentation().n_generators(), degree, n)
        })?;
        let tr = schreier_transversal(&t);
        let stab = |rng: &mut ChaCha8Rng| {
            let len = rng.gen_range(0..10);
            let w = random_word(rng, n, len);
            let c = t.act(0, &w);
            w.concat(&tr.rep(c).inverse())
        };
        for _ in 0..500 {
            let (u, v) = (stab(&mut rng), stab(&mut rng));
            let ru = rw.rewrite(&u).map_err(|e| e.to_string())?;
            let rv = rw.rewrite(&v).map_err(|e| e.to_string())?;
            let ruv = rw.rewrite(&u.concat(&v)).map_err(|e| e.to_string())?;
            ensure(ruv.free_reduce() == ru.concat(&rv).free_reduce(), || format!("not a homomorphism on {} {}", u, v))?;
            let rred = rw.rewrite(&u.free_reduce()).map_err(|e| e.to_string())?;
            ensure(rred.free_reduce() == ru.free_reduce(), || format!("free reduction changes rewrite of {}", u))?;
            ensure(rw.expand(&ru).free_reduce() == u.free_reduce(), || format!("expand(rewrite({})) differs", u))?;
        }
    }
    Ok(())
}

type Criterion = (&'static str, fn() -> Check);

fn main() {
    let criteria: [Criterion; 10] = [
        ("congruence subgroups of the modular group", congruence_table),
        ("elementary divisors: Smith form against minors", elementary_divisors),
        ("operator group separation", operator_separation),
        ("trefoil operator polynomial", alexander),
        ("surface classification", surface_classification),
        ("surface word problem cross-check", word_problem),
        ("branched coverings", branched_coverings),
        ("planar trichotomy", planar_trichotomy),
        ("Euler trails and 2-factorizations", graph_layer),
        ("Reidemeister-Schreier soundness", rewriting_soundness),
    ];
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {:>2} PASS  {}", i + 1, name),
            Err(e) => {
                println!("criterion {:>2} FAIL  {}: {}", i + 1, name, e);
                failed.push(i + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {:?}", failed);
        std::process::exit(1);
    }
}
