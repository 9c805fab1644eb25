//! Independent routes to the same line sets must agree line by line.

use fano_lines::covering::{covering_lines, PlaneCurve};
use fano_lines::exact::Ring;
use fano_lines::line::Line3;
use fano_lines::plucker::{count_lines, CountOptions};
use fano_lines::skew::rams_family;
use fano_lines::{count_and_emit, parse_poly, BinaryForm, SeparableSurface, SurfaceForm};

const TOL: f64 = 1e-8;

fn binary(text: &str) -> BinaryForm {
    BinaryForm::from_poly(&parse_poly(text, &Ring::new(&["x", "y"])).unwrap()).unwrap()
}

fn emit(s: &SurfaceForm) -> Vec<Line3> {
    let opts = CountOptions {
        emit: true,
        ..CountOptions::default()
    };
    let r = count_lines(s, &opts).unwrap();
    let lines = r.lines.expect("emit requested");
    assert_eq!(lines.len(), r.total);
    lines
}

/// Every line of `a` has exactly one partner in `b`, and the sizes match.
fn assert_bijection(a: &[Line3], b: &[Line3]) {
    assert_eq!(a.len(), b.len());
    for (i, l) in a.iter().enumerate() {
        let hits = b.iter().filter(|m| l.same_as(m, 1e-6)).count();
        assert_eq!(hits, 1, "line {i} matched {hits} times");
    }
}

#[test]
fn separable_and_plucker_lines_coincide() {
    for (phi, psi, want) in [
        ("x^3+y^3", "x^3+y^3", 27),
        ("x(x^3-y^3)", "x(x^3-y^3)", 64),
        ("x^4+y^4", "x^4+2x^2y^2-3y^4", 16),
    ] {
        let s = SeparableSurface::new(binary(phi), binary(psi)).unwrap();
        let sep = count_and_emit(&s, TOL).unwrap();
        assert_eq!(sep.total, want, "{phi} / {psi}");
        let surface = s.to_surface();
        let via_plucker = emit(&surface);
        assert_bijection(&sep.lines(), &via_plucker);
        for l in &via_plucker {
            assert!(surface.line_residual(l) < TOL);
        }
    }
}

#[test]
fn covering_lines_match_plucker() {
    let curve = PlaneCurve::fermat(3).unwrap();
    let lines = covering_lines(&curve, TOL, 0).unwrap();
    assert_bijection(&lines, &emit(&curve.cover()));
}

#[test]
fn skew_family_is_a_subset_of_lines_on_the_surface() {
    let fam = rams_family(7).unwrap();
    for l in &fam.lines {
        assert!(fam.surface.contains_line(l, 1e-10));
        assert!(l.plucker_residual() < 1e-12);
    }
}
