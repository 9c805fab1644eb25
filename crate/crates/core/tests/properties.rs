use fano_lines::exact::Ring;
use fano_lines::line::Line3;
use fano_lines::p1::{PointP1, Projectivity};
use fano_lines::{bound_table, parse_poly, print_poly};
use proptest::prelude::*;

fn coeff() -> impl Strategy<Value = i64> {
    -20i64..=20
}

fn quartic_text() -> impl Strategy<Value = String> {
    // Coefficients of all degree-4 monomials in x, y, z.
    prop::collection::vec(coeff(), 15).prop_map(|cs| {
        let mut exps = Vec::new();
        for a in (0..=4u32).rev() {
            for b in (0..=4 - a).rev() {
                exps.push((a, b, 4 - a - b));
            }
        }
        let mut s = String::from("0");
        for (c, (a, b, e)) in cs.into_iter().zip(exps) {
            s.push_str(&format!(" + ({c})*x^{a}*y^{b}*z^{e}"));
        }
        s
    })
}

fn real4() -> impl Strategy<Value = [f64; 4]> {
    prop::array::uniform4(-10.0f64..10.0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn print_parse_round_trip(text in quartic_text()) {
        let ring = Ring::new(&["x", "y", "z"]);
        let p = parse_poly(&text, &ring).unwrap();
        let q = parse_poly(&print_poly(&p), &ring).unwrap();
        prop_assert_eq!(p, q);
    }

    #[test]
    fn plucker_relation_and_self_pairing(a in real4(), b in real4(), c in real4(), d in real4()) {
        if let (Ok(l), Ok(m)) = (Line3::from_real_points(a, b), Line3::from_real_points(c, d)) {
            prop_assert!(l.plucker_residual() < 1e-9);
            prop_assert!(l.meets(&l, 1e-8));
            let (lm, ml) = (l.pairing(&m), m.pairing(&l));
            prop_assert!((lm - ml).norm() < 1e-9);
        }
    }

    #[test]
    fn projectivity_inverse(m in prop::array::uniform4(-5.0f64..5.0), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let det = m[0] * m[3] - m[1] * m[2];
        prop_assume!(det.abs() > 1e-2);
        let g = Projectivity::from_real([[m[0], m[1]], [m[2], m[3]]]).unwrap();
        prop_assert!(g.compose(&g.inverse()).is_identity(1e-8));
        let p = PointP1::finite(re, im);
        prop_assert!(g.inverse().apply(&g.apply(&p)).chordal(&p) < 1e-8);
    }

    #[test]
    fn bound_ordering(d in 4u64..500) {
        let t = bound_table(d).unwrap();
        prop_assert!(t.separable_max <= t.uniform);
        prop_assert!(t.uniform <= t.segre);
        prop_assert_eq!(t.uniform, d + d * (t.per_line - (d - 1)));
    }
}
