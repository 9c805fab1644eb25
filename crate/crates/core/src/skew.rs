use num_complex::Complex64;
use rayon::prelude::*;

use crate::line::Line3;
use crate::surface::SurfaceForm;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SkewError {
    #[error("degree {0}: the disjoint family needs odd d >= 7 (gcd(d, d-2) = 1)")]
    Precondition(u32),
    #[error("degree {0} is below 3")]
    DegreeTooLow(u32),
}

/// A claimed family of pairwise disjoint lines on a surface.
#[derive(Clone, Debug)]
pub struct SkewFamily {
    pub surface: SurfaceForm,
    pub lines: Vec<Line3>,
    pub claimed_size: usize,
}

/// `x^(d-1) y + x y^(d-1) + z^(d-1) t + z t^(d-1)`.
pub fn rams_surface(d: u32) -> SurfaceForm {
    let e = d - 1;
    SurfaceForm::parse(&format!("x^{e}y + xy^{e} + z^{e}t + zt^{e}")).expect("well-formed surface")
}

fn root_of_unity(n: u32, k: u32) -> Complex64 {
    let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
    // One Newton step on z^n - 1.
    w - (w.powu(n) - 1.0) / (w.powu(n - 1) * n as f64)
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// The `d(d-2) + 4` disjoint lines on [`rams_surface`] for odd `d >= 7`.
pub fn rams_family(d: u32) -> Result<SkewFamily, SkewError> {
    if d < 7 || d % 2 == 0 {
        return Err(SkewError::Precondition(d));
    }
    let (zero, one) = (c(0.0), c(1.0));
    let mut lines = Vec::with_capacity((d * (d - 2) + 4) as usize);
    for l in 0..d - 2 {
        for s in 0..d {
            let eta = root_of_unity(d - 2, l) * root_of_unity(d, s);
            let a = [zero, one, zero, -eta.powu(d - 1)];
            let b = [-eta, zero, one, zero];
            lines.push(Line3::from_points(a, b).expect("independent points"));
        }
    }
    let eps = root_of_unity(d - 2, 1);
    // {x = 0, z + eps t = 0}, {y = 0, z + t = 0}, {z = 0, x + eps y = 0}, {t = 0, x + y = 0}
    let extra = [
        ([zero, one, zero, zero], [zero, zero, -eps, one]),
        ([one, zero, zero, zero], [zero, zero, -one, one]),
        ([zero, zero, zero, one], [-eps, one, zero, zero]),
        ([zero, zero, one, zero], [-one, one, zero, zero]),
    ];
    for (a, b) in extra {
        lines.push(Line3::from_points(a, b).expect("independent points"));
    }
    Ok(SkewFamily {
        surface: rams_surface(d),
        claimed_size: (d * (d - 2) + 4) as usize,
        lines,
    })
}

/// True when the two lines do not meet: the normalized Plücker pairing
/// exceeds `tol`.
pub fn lines_disjoint(a: &Line3, b: &Line3, tol: f64) -> bool {
    !a.meets(b, tol)
}

#[derive(Clone, Debug, PartialEq)]
pub enum SkewViolation {
    NotOnSurface { index: usize, residual: f64 },
    Meeting { first: usize, second: usize, pairing: f64 },
}

#[derive(Clone, Debug)]
pub struct SkewCheck {
    pub ok: bool,
    pub violation: Option<SkewViolation>,
    pub max_residual: f64,
    /// Smallest pairing magnitude over all pairs (infinite for fewer than two lines).
    pub min_pairing: f64,
}

/// Checks containment (residual `<= tol`) and pairwise disjointness
/// (pairing `> margin`), reporting the first violation in index order.
pub fn verify_skew_set(surface: &SurfaceForm, lines: &[Line3], tol: f64, margin: f64) -> SkewCheck {
    let residuals: Vec<f64> = lines.par_iter().map(|l| surface.line_residual(l)).collect();
    let max_residual = residuals.iter().copied().fold(0.0, f64::max);
    let mut violation = residuals
        .iter()
        .position(|&r| !(r <= tol))
        .map(|index| SkewViolation::NotOnSurface { index, residual: residuals[index] });

    let n = lines.len();
    let pairings: Vec<(usize, usize, f64)> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, lines[i].pairing(&lines[j]).norm()))
        .collect();
    let min_pairing = pairings.iter().map(|p| p.2).fold(f64::INFINITY, f64::min);
    if violation.is_none() {
        violation = pairings
            .iter()
            .find(|p| p.2 <= margin)
            .map(|&(first, second, pairing)| SkewViolation::Meeting { first, second, pairing });
    }
    SkewCheck {
        ok: violation.is_none(),
        violation,
        max_residual,
        min_pairing,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SkewBounds {
    pub d: u32,
    pub miyaoka: u64,
    pub rams_old: u64,
    pub family: u64,
    /// Known maximum of a disjoint family, where settled.
    pub known_max: Option<u64>,
}

pub fn skew_bounds(d: u32) -> Result<SkewBounds, SkewError> {
    if d < 3 {
        return Err(SkewError::DegreeTooLow(d));
    }
    let n = d as u64 * (d as u64 - 2);
    Ok(SkewBounds {
        d,
        miyaoka: 2 * n,
        rams_old: n + 2,
        family: n + 4,
        known_max: match d {
            3 => Some(6),
            4 => Some(16),
            _ => None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn real_line(a: [f64; 4], b: [f64; 4]) -> Line3 {
        Line3::from_real_points(a, b).unwrap()
    }

    #[test]
    fn coordinate_lines() {
        let zt = real_line([1.0, 0.0, 0.0, 0.0], [0.0, 1.0, 0.0, 0.0]);
        let xy = real_line([0.0, 0.0, 1.0, 0.0], [0.0, 0.0, 0.0, 1.0]);
        let yt = real_line([1.0, 0.0, 0.0, 0.0], [0.0, 0.0, 1.0, 0.0]);
        assert!(lines_disjoint(&zt, &xy, 1e-8));
        assert!(!lines_disjoint(&zt, &yt, 1e-8));
    }

    #[test]
    fn family_sizes_and_verification() {
        for (d, n) in [(7, 39), (9, 67)] {
            let fam = rams_family(d).unwrap();
            assert_eq!(fam.lines.len(), n);
            assert_eq!(fam.claimed_size, n);
            let check = verify_skew_set(&fam.surface, &fam.lines, 1e-10, 1e-6);
            assert!(check.ok, "{:?}", check.violation);
            assert!(check.max_residual < 1e-10);
            assert!(check.min_pairing > 1e-6);
        }
        for d in [3, 5, 8, 10] {
            assert_eq!(rams_family(d).unwrap_err(), SkewError::Precondition(d));
        }
    }

    #[test]
    fn two_family_lines_by_determinant() {
        // Lines meet iff their four spanning points are dependent.
        let fam = rams_family(7).unwrap();
        let (p, q) = (fam.lines[3].points(), fam.lines[11].points());
        let m = nalgebra::Matrix4::from_fn(|r, k| [p[0], p[1], q[0], q[1]][k][r]);
        assert!(m.determinant().norm() > 1e-3);
        assert!(lines_disjoint(&fam.lines[3], &fam.lines[11], 1e-8));
    }

    #[test]
    fn violation_is_reported() {
        let fam = rams_family(7).unwrap();
        let mut lines = fam.lines.clone();
        // {x = 0, z + t = 0} lies on the surface and meets {x = 0, z + eps t = 0}.
        lines[0] = real_line([0.0, 1.0, 0.0, 0.0], [0.0, 0.0, 1.0, -1.0]);
        let check = verify_skew_set(&fam.surface, &lines, 1e-10, 1e-6);
        assert!(!check.ok);
        let n = lines.len();
        assert_eq!(
            check.violation.map(|v| match v {
                SkewViolation::Meeting { first, second, .. } => (first, second),
                other => panic!("{other:?}"),
            }),
            Some((0, n - 4))
        );
        assert!(verify_skew_set(&fam.surface, &[], 1e-10, 1e-6).ok);
    }

    #[test]
    fn bounds_table() {
        let b = skew_bounds(7).unwrap();
        assert_eq!((b.miyaoka, b.family, b.rams_old), (70, 39, 37));
        assert_eq!(skew_bounds(4).unwrap().known_max, Some(16));
        assert_eq!(skew_bounds(3).unwrap().known_max, Some(6));
        assert_eq!(skew_bounds(5).unwrap().known_max, None);
        assert!(skew_bounds(2).is_err());
    }
}
