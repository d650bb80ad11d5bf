//! Branched coverings of surfaces from permutation voltages, with the
//! Riemann-Hurwitz count.

use reidemeister::coverings::{build_surface_cover, riemann_hurwitz_check, verify_order_formula, SurfaceCoverSpec};
use reidemeister::perm::Perm;
use reidemeister::surfaces::{characteristic, classify, normal_form_complex, NormalForm};

fn show(name: &str, base: NormalForm, sheets: usize, cycles: &[&str]) {
    let base = normal_form_complex(base);
    let perms = cycles.iter().map(|c| Perm::parse_cycles(sheets, c).unwrap()).collect();
    let spec = SurfaceCoverSpec::new(base.clone(), sheets, perms).unwrap();
    let (cover, report) = build_surface_cover(&spec).unwrap();
    let form = if report.components == 1 {
        format!("{:?}", classify(&cover).unwrap().normal_form)
    } else {
        format!("{} components", report.components)
    };
    println!(
        "{:<22} degree {} branching {} c {} -> {}  {}  order formula {} riemann-hurwitz {}",
        name,
        report.degree,
        report.total_branching(),
        characteristic(&base),
        characteristic(&cover),
        form,
        verify_order_formula(&report),
        riemann_hurwitz_check(&base, &cover, &report)
    );
}

fn main() {
    show("torus, double", NormalForm::Orientable(1), 2, &["(0 1)", "()"]);
    show("projective plane", NormalForm::NonOrientable(1), 2, &["(0 1)"]);
    show("klein bottle", NormalForm::NonOrientable(2), 2, &["(0 1)", "(0 1)"]);
    show("torus, 3 sheets", NormalForm::Orientable(1), 3, &["(0 1)", "(1 2)"]);
    show("genus 2, 4 sheets", NormalForm::Orientable(2), 4, &["(0 1)", "(2 3)", "()", "(0 2)"]);
}
