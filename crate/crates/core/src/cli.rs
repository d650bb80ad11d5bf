//! Command-line front end.
//!
//! Every subcommand produces a [`Report`]: free text for people and a map of
//! `key=value` fields printed in sorted order under `--porcelain`. File
//! arguments name a path, or `-` for standard input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::complexes::{
    build_cover, cayley_graph, connectivity_number, euler_trails, fundamental_group_basis, is_regular_cover,
    parse_permutation_list, petersen_2_factorization, spanning_tree, spanning_tree_ordered, Graph1, GraphError,
    GraphNames, GraphPath,
};
use crate::coverings::{
    branching_orders_of_subgroup, build_surface_cover, classify_planar_group, cyclic_cover_is_identity,
    dehn_is_identity, dehn_reduce, non_orientable_is_identity, riemann_hurwitz_check, torus_is_identity,
    verify_order_formula, BranchData, CoveringError, SurfaceCoverSpec,
};
use crate::matrices::{
    abelian_invariants, laurent_elementary_divisors, smith_normal_form, IntMatrix, LaurentError, LaurentMatrix,
    MatrixError,
};
use crate::perm::{Perm, PermError};
use crate::presentations::{simplify, GeneratorNames, Presentation, PresentationParseError, StandardError};
use crate::subgroups::{
    commutator_operator_polynomial, congruence_subgroup_report, coset_table_from_permutations,
    reidemeister_schreier, SubgroupError,
};
use crate::surfaces::{
    characteristic, classify, dual_of, fundamental_group, homology_class, intersection_number, orientable,
    standard_word, validate_manifold, NormalForm, SurfaceComplex, SurfaceError, SurfaceNames,
};
use crate::words::{
    conjugate_in_cyclic_product, conjugate_in_free, normal_form_cyclic_product, normal_form_torus_type,
    CyclicOrders, CyclicProductError, TorusTypeError, Word, WordParseError,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot read {path}: {msg}")]
    Io { path: String, msg: String },
    #[error("{0}")]
    Input(String),
    #[error(transparent)]
    Word(#[from] WordParseError),
    #[error(transparent)]
    CyclicProduct(#[from] CyclicProductError),
    #[error(transparent)]
    TorusType(#[from] TorusTypeError),
    #[error(transparent)]
    Matrix(#[from] MatrixError),
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Presentation(#[from] PresentationParseError),
    #[error(transparent)]
    Standard(#[from] StandardError),
    #[error(transparent)]
    Subgroup(#[from] SubgroupError),
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Covering(#[from] CoveringError),
}

fn variant(debug: String) -> String {
    debug
        .split(['(', ' ', '{'])
        .next()
        .unwrap_or("")
        .to_string()
}

impl CliError {
    /// `Module::Variant`, e.g. `SurfaceError::Incidence`.
    pub fn name(&self) -> String {
        let (module, inner) = match self {
            CliError::Io { .. } => return "Io".into(),
            CliError::Input(_) => return "Input".into(),
            CliError::Word(e) => ("WordParseError", format!("{:?}", e)),
            CliError::CyclicProduct(e) => ("CyclicProductError", format!("{:?}", e)),
            CliError::TorusType(e) => ("TorusTypeError", format!("{:?}", e)),
            CliError::Matrix(e) => ("MatrixError", format!("{:?}", e)),
            CliError::Laurent(e) => ("LaurentError", format!("{:?}", e)),
            CliError::Presentation(e) => ("PresentationParseError", format!("{:?}", e)),
            CliError::Standard(e) => ("StandardError", format!("{:?}", e)),
            CliError::Subgroup(e) => ("SubgroupError", format!("{:?}", e)),
            CliError::Perm(e) => ("PermError", format!("{:?}", e)),
            CliError::Graph(e) => ("GraphError", format!("{:?}", e)),
            CliError::Surface(e) => ("SurfaceError", format!("{:?}", e)),
            CliError::Covering(e) => ("CoveringError", format!("{:?}", e)),
        };
        format!("{}::{}", module, variant(inner))
    }
}

#[derive(Parser, Debug)]
#[command(name = "reidemeister", version, about = "Combinatorial group theory and surface topology")]
pub struct Cli {
    /// Print sorted key=value lines.
    #[arg(long, global = true)]
    pub porcelain: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Solver {
    Dehn,
    Cyclic,
    Both,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Free reduction of a word.
    Reduce {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        /// Also cyclically reduce.
        #[arg(long)]
        cyclic: bool,
    },
    /// Conjugacy of two words, in the free group or a free product of cyclic groups.
    Conjugate {
        first: String,
        second: String,
        /// Generator orders, comma separated; 0 is infinite.
        #[arg(long, value_delimiter = ',')]
        orders: Vec<u64>,
    },
    /// Normal form in a free product of cyclic groups or a torus-type group.
    NfCyclic {
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        #[arg(long, value_delimiter = ',', conflicts_with = "torus")]
        orders: Vec<u64>,
        /// Exponents p,q of the relator a^p b^-q.
        #[arg(long, value_delimiter = ',', num_args = 1)]
        torus: Option<Vec<i64>>,
    },
    /// Smith normal form of an integer matrix file.
    Snf { input: String },
    /// Abelianization of a presentation file.
    Abelian { input: String },
    /// Elementary divisors of a Laurent-polynomial matrix file.
    LaurentEd { input: String },
    /// Reidemeister-Schreier presentation of the subgroup given by a coset action.
    Rs {
        presentation: String,
        /// Permutation list, one per generator.
        perms: String,
        #[arg(long)]
        simplify: bool,
    },
    /// Congruence subgroup of the modular group for a prime.
    Modular {
        #[arg(short)]
        p: u64,
    },
    /// Operator polynomial of the commutator subgroup of a one-relator group.
    Alexander { input: String },
    /// Minimal decomposition of a 1-complex into trails.
    Euler { input: String },
    /// Spanning tree, connectivity number and free basis of the fundamental group.
    Tree { input: String },
    /// Covering of a 1-complex from permutation voltages.
    CoverGraph {
        graph: String,
        voltage: String,
        /// Print the cover in graph format.
        #[arg(long)]
        emit: bool,
    },
    /// Cayley diagram of a permutation group.
    Cayley {
        input: String,
        #[arg(long)]
        emit: bool,
    },
    /// 2-factorization of a regular 1-complex of even order.
    Petersen { input: String },
    /// Checks the manifold conditions of a surface complex.
    ValidateSurface { input: String },
    /// Normal form of a closed surface.
    Classify {
        input: String,
        /// Print every elementary move.
        #[arg(long)]
        trace: bool,
    },
    /// Dual complex of a closed surface.
    Dual { input: String },
    /// Fundamental group of a surface complex.
    Pi1 {
        input: String,
        /// Base point name.
        #[arg(long)]
        base: Option<String>,
    },
    /// Intersection number of two closed paths on an orientable surface.
    Intersection { input: String, first: String, second: String },
    /// Branched covering of a surface from permutation voltages.
    CoverSurface {
        surface: String,
        voltage: String,
        #[arg(long)]
        emit: bool,
    },
    /// Branching orders of a subgroup along a relator.
    BranchOrders {
        presentation: String,
        perms: String,
        #[arg(long)]
        relator: String,
        #[arg(short)]
        k: u64,
    },
    /// Word problem in a closed surface group.
    Dehn {
        #[arg(short)]
        g: usize,
        #[arg(required = true, num_args = 1..)]
        word: Vec<String>,
        #[arg(long)]
        non_orientable: bool,
        #[arg(long, value_enum, default_value_t = Solver::Dehn)]
        solver: Solver,
    },
    /// Spherical, Euclidean or hyperbolic type of a planar group.
    PlanarClass {
        /// Branch orders; the last one may be 1.
        #[arg(required = true)]
        orders: Vec<u64>,
        #[arg(long, default_value_t = 0)]
        genus: usize,
        #[arg(long)]
        non_orientable: bool,
        /// The last branch point has infinite order.
        #[arg(long)]
        infinite: bool,
    },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub lines: Vec<String>,
    pub fields: BTreeMap<String, String>,
}

impl Report {
    fn line(&mut self, s: impl Into<String>) -> &mut Self {
        self.lines.push(s.into());
        self
    }

    fn field(&mut self, k: impl Into<String>, v: impl ToString) -> &mut Self {
        self.fields.insert(k.into(), v.to_string());
        self
    }

    pub fn render(&self, porcelain: bool) -> String {
        let mut out = String::new();
        if porcelain {
            for (k, v) in &self.fields {
                out.push_str(&format!("{}={}\n", k, v));
            }
        } else {
            for l in &self.lines {
                out.push_str(l);
                out.push('\n');
            }
        }
        out
    }
}

struct Input<'a> {
    stdin: &'a mut dyn Read,
    used: bool,
}

impl Input<'_> {
    fn file(&mut self, path: &str) -> Result<String, CliError> {
        if path == "-" {
            return self.stdin_text();
        }
        std::fs::read_to_string(path).map_err(|e| CliError::Io {
            path: path.to_string(),
            msg: e.to_string(),
        })
    }

    fn stdin_text(&mut self) -> Result<String, CliError> {
        if self.used {
            return Err(CliError::Input("standard input can be read only once".into()));
        }
        self.used = true;
        let mut s = String::new();
        self.stdin.read_to_string(&mut s).map_err(|e| CliError::Io {
            path: "-".into(),
            msg: e.to_string(),
        })?;
        Ok(s)
    }

    /// Inline text, or standard input for `-`.
    fn inline(&mut self, arg: &str) -> Result<String, CliError> {
        if arg == "-" {
            Ok(self.stdin_text()?.trim().to_string())
        } else {
            Ok(arg.to_string())
        }
    }

    fn word(&mut self, arg: &str) -> Result<Word, CliError> {
        Ok(self.inline(arg)?.parse()?)
    }

    fn words(&mut self, args: &[String]) -> Result<Word, CliError> {
        self.word(&args.join(" "))
    }
}

fn join<T: ToString>(xs: &[T], sep: &str) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn segment_names(names: &GraphNames) -> GeneratorNames {
    GeneratorNames::new(names.segments.clone()).expect("segment names are distinct")
}

fn path_text(names: &GraphNames, p: &GraphPath) -> String {
    let w = p.word();
    format!("{}: {}", names.points[p.start], segment_names(names).format_word(&w))
}

fn surface_summary(r: &mut Report, c: &SurfaceComplex) {
    let cc = characteristic(c);
    r.field("points", c.n_points())
        .field("segments", c.n_segments())
        .field("faces", c.n_faces())
        .field("c", cc)
        .field("chi", -cc);
}

fn identity_first_tree(g: &Graph1, perms: &[Perm]) -> Result<Vec<usize>, GraphError> {
    let mut order: Vec<usize> = (0..g.n_segments()).collect();
    order.sort_by_key(|&s| !perms[s].is_identity());
    spanning_tree_ordered(g, 0, &order)
}

fn parse_perm_file(text: &str) -> Result<Vec<Perm>, CliError> {
    Ok(parse_permutation_list(text)?.1)
}

pub fn execute(cmd: &Command, stdin: &mut dyn Read) -> Result<Report, CliError> {
    let mut input = Input { stdin, used: false };
    let mut r = Report::default();
    match cmd {
        Command::Reduce { word, cyclic } => {
            let w = input.words(word)?;
            let red = if *cyclic { w.cyclic_core() } else { w.free_reduce() };
            r.line(red.to_string()).field("word", &red).field("length", red.len());
        }
        Command::Conjugate { first, second, orders } => {
            let (a, b) = (input.word(first)?, input.word(second)?);
            let yes = if orders.is_empty() {
                conjugate_in_free(&a, &b)
            } else {
                conjugate_in_cyclic_product(&a, &b, &CyclicOrders::new(orders.clone()))?
            };
            r.line(if yes { "conjugate" } else { "not conjugate" }).field("conjugate", yes);
        }
        Command::NfCyclic { word, orders, torus } => {
            let w = input.words(word)?;
            let nf = match torus {
                Some(t) if t.len() == 2 => normal_form_torus_type(&w, t[0], t[1])?,
                Some(_) => return Err(CliError::Input("--torus takes two exponents p,q".into())),
                None => normal_form_cyclic_product(&w, &CyclicOrders::new(orders.clone())),
            };
            r.line(nf.to_string()).field("normal_form", &nf).field("length", nf.len());
        }
        Command::Snf { input: path } => {
            let m: IntMatrix = input.file(path)?.parse()?;
            let s = smith_normal_form(&m);
            let d = join(&s.diagonal, ",");
            r.line(format!("rank={} divisors={}", s.rank, d)).field("rank", s.rank).field("divisors", d);
        }
        Command::Abelian { input: path } => {
            let (p, _) = Presentation::parse_text(&input.file(path)?)?;
            let inv = abelian_invariants(&p);
            r.line(inv.to_string())
                .field("group", &inv)
                .field("betti", inv.betti)
                .field("torsion", join(&inv.torsion, ","));
        }
        Command::LaurentEd { input: path } => {
            let m: LaurentMatrix = input.file(path)?.parse()?;
            let (ds, rank) = laurent_elementary_divisors(&m)?;
            r.line(format!("rank={}", rank)).field("rank", rank);
            for (i, d) in ds.iter().enumerate() {
                r.line(format!("d{}={}", i + 1, d)).field(format!("d{}", i + 1), d);
            }
        }
        Command::Rs {
            presentation,
            perms,
            simplify: simp,
        } => {
            let (p, _) = Presentation::parse_text(&input.file(presentation)?)?;
            let images = parse_perm_file(&input.file(perms)?)?;
            let t = coset_table_from_permutations(&p, images)?;
            let rw = reidemeister_schreier(&p, &t, None);
            let sub = if *simp {
                simplify(rw.presentation()).presentation
            } else {
                rw.presentation().clone()
            };
            r.line(format!(
                "index={} generators={} relators={}",
                t.n_cosets(),
                sub.n_generators(),
                sub.relators().len()
            ));
            r.line(sub.to_string().trim_end().to_string());
            r.field("index", t.n_cosets())
                .field("generators", sub.n_generators())
                .field("relators", sub.relators().len())
                .field("abelianization", abelian_invariants(&sub));
            for (i, w) in sub.relators().iter().enumerate() {
                r.field(format!("relator.{}", i), w);
            }
        }
        Command::Modular { p } => {
            let rep = congruence_subgroup_report(*p)?;
            let rank = rep.presentation.n_generators();
            if rep.free {
                r.line(format!("index={} free rank={}", rep.index, rank));
            } else {
                r.line(format!(
                    "index={} generators={} order2={} order3={}",
                    rep.index, rank, rep.order2, rep.order3
                ));
            }
            r.field("p", rep.p)
                .field("index", rep.index)
                .field("free", rep.free)
                .field("rank", rank)
                .field("order2", rep.order2)
                .field("order3", rep.order3);
        }
        Command::Alexander { input: path } => {
            let (p, _) = Presentation::parse_text(&input.file(path)?)?;
            let f = commutator_operator_polynomial(&p)?.canonical();
            r.line(f.to_string()).field("f", &f);
        }
        Command::Euler { input: path } => {
            let (g, names) = GraphNames::parse_graph(&input.file(path)?)?;
            let trails = euler_trails(&g)?;
            r.line(format!("trails={}", trails.len())).field("trails", trails.len());
            for (i, t) in trails.iter().enumerate() {
                let s = path_text(&names, t);
                r.line(s.clone()).field(format!("trail.{}", i), s);
            }
        }
        Command::Tree { input: path } => {
            let (g, names) = GraphNames::parse_graph(&input.file(path)?)?;
            let tree = spanning_tree(&g)?;
            let a = connectivity_number(&g)?;
            let tree_names: Vec<&str> = tree.iter().map(|&s| names.segments[s].as_str()).collect();
            r.line(format!("tree: {}", tree_names.join(" ")))
                .line(format!("connectivity={}", a))
                .field("tree", tree_names.join(","))
                .field("connectivity", a);
            let basis = fundamental_group_basis(&g, 0, &tree)?;
            for (s, lp) in basis.cotree.iter().zip(&basis.loops) {
                let text = path_text(&names, lp);
                r.line(format!("loop {} = {}", names.segments[*s], text))
                    .field(format!("loop.{}", names.segments[*s]), text);
            }
        }
        Command::CoverGraph { graph, voltage, emit } => {
            let (g, names) = GraphNames::parse_graph(&input.file(graph)?)?;
            let v = names.parse_voltage(&g, &input.file(voltage)?)?;
            let tree = identity_first_tree(&g, &v.perms)?;
            let (cover, _) = build_cover(&g, &tree, &v)?;
            let regular = format!("{:?}", is_regular_cover(&g, &tree, &v)?).to_lowercase();
            r.line(format!(
                "sheets={} points={} segments={} connected={} regularity={}",
                v.sheets,
                cover.n_points(),
                cover.n_segments(),
                cover.is_connected(),
                regular
            ));
            if *emit {
                r.line(GraphNames::numbered(&cover).graph_to_text(&cover).trim_end().to_string());
            }
            r.field("sheets", v.sheets)
                .field("points", cover.n_points())
                .field("segments", cover.n_segments())
                .field("connected", cover.is_connected())
                .field("regularity", regular);
        }
        Command::Cayley { input: path, emit } => {
            let perms = parse_perm_file(&input.file(path)?)?;
            let cay = cayley_graph(&perms)?;
            let g = &cay.graph;
            r.line(format!("order={} segments={}", cay.elements.len(), g.n_segments()))
                .field("order", cay.elements.len())
                .field("segments", g.n_segments());
            if *emit {
                r.line(GraphNames::numbered(g).graph_to_text(g).trim_end().to_string());
            }
        }
        Command::Petersen { input: path } => {
            let (g, names) = GraphNames::parse_graph(&input.file(path)?)?;
            let factors = petersen_2_factorization(&g)?;
            r.line(format!("factors={}", factors.len())).field("factors", factors.len());
            for (i, f) in factors.iter().enumerate() {
                let segs: Vec<&str> = f.iter().map(|&s| names.segments[s].as_str()).collect();
                r.line(format!("factor {}: {}", i, segs.join(" ")))
                    .field(format!("factor.{}", i), segs.join(","));
            }
        }
        Command::ValidateSurface { input: path } => {
            let (c, _) = SurfaceNames::parse(&input.file(path)?)?;
            let cert = validate_manifold(&c)?;
            let o = orientable(&c, &cert);
            let cc = characteristic(&c);
            r.line(format!(
                "manifold points={} segments={} faces={} c={} chi={} orientable={}",
                c.n_points(),
                c.n_segments(),
                c.n_faces(),
                cc,
                -cc,
                o
            ));
            surface_summary(&mut r, &c);
            r.field("manifold", true).field("orientable", o);
        }
        Command::Classify { input: path, trace } => {
            let (c, _) = SurfaceNames::parse(&input.file(path)?)?;
            let cl = classify(&c)?;
            let nf = cl.normal_form;
            r.line(format!("{} chi={}", nf, -cl.characteristic));
            if *trace {
                for step in &cl.trace {
                    r.line(format!("{:?} -> c={}", step.mv, characteristic(&step.after)));
                }
            }
            r.field("form", match nf {
                NormalForm::Sphere => "sphere",
                NormalForm::Orientable(_) => "orientable",
                NormalForm::NonOrientable(_) => "non-orientable",
            })
            .field("genus", nf.genus())
            .field("orientable", cl.orientable)
            .field("c", cl.characteristic)
            .field("chi", -cl.characteristic)
            .field("moves", cl.trace.len());
        }
        Command::Dual { input: path } => {
            let (c, _) = SurfaceNames::parse(&input.file(path)?)?;
            let d = dual_of(&c)?;
            r.line(SurfaceNames::numbered(&d).to_text(&d).trim_end().to_string());
            surface_summary(&mut r, &d);
        }
        Command::Pi1 { input: path, base } => {
            let (c, names) = SurfaceNames::parse(&input.file(path)?)?;
            let b = match base {
                Some(n) => names
                    .graph
                    .point_index(n)
                    .ok_or_else(|| CliError::Input(format!("unknown point {}", n)))?,
                None => 0,
            };
            let p = fundamental_group(&c, b)?;
            let ab = abelian_invariants(&p);
            r.line(p.to_string().trim_end().to_string()).line(format!("abelianization={}", ab));
            r.field("generators", p.n_generators())
                .field("relators", p.relators().len())
                .field("abelianization", ab);
            for (i, w) in p.relators().iter().enumerate() {
                r.field(format!("relator.{}", i), w);
            }
        }
        Command::Intersection { input: path, first, second } => {
            let (c, names) = SurfaceNames::parse(&input.file(path)?)?;
            let seg = segment_names(&names.graph);
            let w1 = seg.parse_word(&input.inline(first)?)?;
            let w2 = seg.parse_word(&input.inline(second)?)?;
            let (nf, s1) = standard_word(&c, &w1)?;
            let (_, s2) = standard_word(&c, &w2)?;
            if !nf.is_orientable() {
                return Err(CliError::Input("intersection numbers need an orientable surface".into()));
            }
            let n = 2 * nf.genus();
            let (h1, h2) = (homology_class(&s1, n), homology_class(&s2, n));
            let i = intersection_number(&h1, &h2)?;
            r.line(format!("intersection={}", i))
                .field("intersection", i)
                .field("class.0", join(&h1, ","))
                .field("class.1", join(&h2, ","));
        }
        Command::CoverSurface { surface, voltage, emit } => {
            let (base, names) = SurfaceNames::parse(&input.file(surface)?)?;
            let v = names.graph.parse_voltage(base.graph(), &input.file(voltage)?)?;
            let spec = SurfaceCoverSpec::new(base.clone(), v.sheets, v.perms)?;
            let (cover, report) = build_surface_cover(&spec)?;
            let cc = characteristic(&cover);
            r.line(format!(
                "degree={} components={} branching={} c={} chi={}",
                report.degree,
                report.components,
                report.total_branching(),
                cc,
                -cc
            ));
            for (f, cycles) in report.faces.iter().enumerate() {
                let text = cycles.iter().map(|(l, b)| format!("{}:{}", l, b)).collect::<Vec<_>>().join(" ");
                r.line(format!("face {}: {}", names.faces[f], text))
                    .field(format!("face.{}", names.faces[f]), text);
            }
            if *emit {
                r.line(SurfaceNames::numbered(&cover).to_text(&cover).trim_end().to_string());
            }
            surface_summary(&mut r, &cover);
            r.field("degree", report.degree)
                .field("components", report.components)
                .field("branching", report.total_branching())
                .field("order_formula", verify_order_formula(&report))
                .field("riemann_hurwitz", riemann_hurwitz_check(&base, &cover, &report));
        }
        Command::BranchOrders {
            presentation,
            perms,
            relator,
            k,
        } => {
            let (p, gnames) = Presentation::parse_text(&input.file(presentation)?)?;
            let images = parse_perm_file(&input.file(perms)?)?;
            let t = coset_table_from_permutations(&p, images)?;
            let rel = gnames.parse_word(&input.inline(relator)?)?;
            let orders = branching_orders_of_subgroup(&t, &rel, *k)?;
            let text = orders.iter().map(|(l, m)| format!("{}:{}", l, m)).collect::<Vec<_>>().join(" ");
            let unbranched = orders.iter().all(|&(_, m)| m == 0);
            r.line(text.clone())
                .line(format!("unbranched={}", unbranched))
                .field("cycles", text)
                .field("unbranched", unbranched);
        }
        Command::Dehn {
            g,
            word,
            non_orientable,
            solver,
        } => {
            let w = input.words(word)?;
            let id = if *non_orientable {
                non_orientable_is_identity(&w, *g)?
            } else if *g == 1 {
                torus_is_identity(&w)?
            } else {
                let reduced = dehn_reduce(&w, *g)?;
                r.field("reduced", &reduced);
                let d = dehn_is_identity(&w, *g)?;
                match solver {
                    Solver::Dehn => d,
                    Solver::Cyclic => cyclic_cover_is_identity(&w, *g)?,
                    Solver::Both => {
                        let c = cyclic_cover_is_identity(&w, *g)?;
                        r.field("agree", c == d);
                        d && c
                    }
                }
            };
            r.line(if id { "identity" } else { "not identity" }).field("identity", id);
        }
        Command::PlanarClass {
            orders,
            genus,
            non_orientable,
            infinite,
        } => {
            let (last, rest) = orders.split_last().expect("clap requires one order");
            let mut b = BranchData::new(rest.to_vec(), *last, *genus, !non_orientable);
            b.infinite = *infinite;
            let pc = classify_planar_group(&b)?;
            let mut line = format!("{} chi={}", pc.geometry, pc.characteristic);
            if let Some(n) = &pc.name {
                line.push_str(&format!(" name={}", n));
                r.field("name", n);
            }
            r.line(line)
                .field("geometry", pc.geometry)
                .field("characteristic", pc.characteristic);
        }
    }
    Ok(r)
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code: 0 on success, 1 on a domain error, 2 on a usage error.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    match execute(&cli.command, stdin) {
        Ok(report) => {
            let _ = out.write_all(report.render(cli.porcelain).as_bytes());
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {}", e.name(), e);
            1
        }
    }
}
