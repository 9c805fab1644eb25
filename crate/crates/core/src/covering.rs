//! Cyclic covers `t^d = f(x, y, z)` of the plane branched along a curve.
//!
//! Lines on the cover lie over tangents to the branch curve at total
//! inflection points, `d` lines per point. Inflection candidates are the
//! points of `C ∩ Hess(C)`, found through an exact resultant in a random
//! rational frame; each candidate is then tested directly.

use num_complex::Complex64;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{
    buchberger_with_budget, int, Budget, MonomialOrder, MultiPoly, PolyError, QuotientDimension,
    Rational, Ring, UniPoly,
};
use crate::expr::{parse_poly, ParseError};
use crate::line::Line3;
use crate::numeric::{aberth_refine, gauss_newton, poly_roots, rational_to_f64, FloatPoly};
use crate::surface::{line_residual_with, restrict_numeric, surface_ring, SurfaceForm};

pub const CURVE_VARS: [&str; 3] = ["x", "y", "z"];

/// Frames tried before giving up on a generic projection.
const FRAME_ATTEMPTS: usize = 12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CoveringError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("curve must live in the ring (x, y, z)")]
    WrongRing,
    #[error("curve equation is not homogeneous")]
    NotHomogeneous,
    #[error("curve degree {0} is below 3")]
    DegreeTooLow(u32),
    #[error("singular curve")]
    Singular,
    #[error("Hessian vanishes identically")]
    DegenerateHessian,
    #[error("ill-conditioned intersection: {0}")]
    IllConditioned(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// Plane curve `f(x, y, z) = 0` of degree at least 3.
#[derive(Clone, Debug, PartialEq)]
pub struct PlaneCurve {
    poly: MultiPoly,
    degree: u32,
}

pub fn curve_ring() -> Ring {
    Ring::new(&CURVE_VARS)
}

impl PlaneCurve {
    pub fn new(poly: MultiPoly) -> Result<Self, CoveringError> {
        if poly.ring().names() != CURVE_VARS {
            return Err(CoveringError::WrongRing);
        }
        if !poly.is_homogeneous() {
            return Err(CoveringError::NotHomogeneous);
        }
        let degree = poly.total_degree().unwrap_or(0);
        if degree < 3 {
            return Err(CoveringError::DegreeTooLow(degree));
        }
        Ok(PlaneCurve { poly, degree })
    }

    pub fn parse(text: &str) -> Result<Self, CoveringError> {
        Self::new(parse_poly(text, &curve_ring())?)
    }

    /// `x^d + y^d + z^d`.
    pub fn fermat(d: u32) -> Result<Self, CoveringError> {
        Self::parse(&format!("x^{d}+y^{d}+z^{d}"))
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Jacobian criterion: the partials have only the trivial common zero.
    pub fn is_smooth(&self, budget: Budget) -> Result<bool, PolyError> {
        let partials: Vec<MultiPoly> = (0..3).map(|v| self.poly.derivative(v)).collect();
        let (gb, _) = buchberger_with_budget(&partials, MonomialOrder::DegRevLex, budget)?;
        Ok(gb.quotient_dimension() != QuotientDimension::Infinite)
    }

    /// The surface `t^d - f(x, y, z)`.
    pub fn cover(&self) -> SurfaceForm {
        let ring = surface_ring();
        let f = self.poly.remap(&ring, &[0, 1, 2]);
        let t = MultiPoly::var(&ring, 3).pow(self.degree);
        SurfaceForm::new(&t - &f).expect("cover of a curve of degree >= 3 is a surface")
    }
}

/// Determinant of the matrix of second partials.
pub fn hessian(c: &PlaneCurve) -> MultiPoly {
    let f = &c.poly;
    let h: Vec<Vec<MultiPoly>> = (0..3)
        .map(|i| (0..3).map(|j| f.derivative(i).derivative(j)).collect())
        .collect();
    let minor = |a: usize, b: usize, p: usize, q: usize| &(&h[a][p] * &h[b][q]) - &(&h[a][q] * &h[b][p]);
    let t0 = &h[0][0] * &minor(1, 2, 1, 2);
    let t1 = &h[0][1] * &minor(1, 2, 0, 2);
    let t2 = &h[0][2] * &minor(1, 2, 0, 1);
    &(&t0 - &t1) + &t2
}

/// One point of `C ∩ Hess(C)`.
#[derive(Clone, Debug)]
pub struct Inflection {
    /// Unit-norm homogeneous coordinates.
    pub point: [Complex64; 3],
    /// Intersection multiplicity with the Hessian (from the squarefree
    /// decomposition of the resultant).
    pub hessian_multiplicity: usize,
    /// Largest coefficient of order `< d` of `f` on the tangent line,
    /// relative to the largest coefficient.
    pub defect: f64,
    pub total: bool,
}

#[derive(Clone, Debug)]
pub struct InflectionReport {
    pub degree: u32,
    pub candidates: Vec<Inflection>,
    pub beta: usize,
    /// Candidates whose coordinates could not be separated at tolerance.
    pub undetermined: usize,
    /// The `beta * d` lines on `t^d = f`.
    pub lines: Vec<Line3>,
    pub max_residual: f64,
}

fn random_frame(rng: &mut ChaCha8Rng) -> [[i64; 3]; 3] {
    loop {
        let g: [[i64; 3]; 3] = std::array::from_fn(|_| std::array::from_fn(|_| rng.random_range(-3..=3)));
        let det = g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1])
            - g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0])
            + g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
        if det != 0 {
            return g;
        }
    }
}

fn apply_frame(p: &MultiPoly, g: &[[i64; 3]; 3]) -> MultiPoly {
    let ring = p.ring().clone();
    let subs: Vec<MultiPoly> = (0..3)
        .map(|i| {
            (0..3).fold(MultiPoly::zero(&ring), |acc, j| {
                &acc + &MultiPoly::var(&ring, j).scale(&int(g[i][j]))
            })
        })
        .collect();
    p.substitute(&subs).expect("arity 3")
}

/// `p(x, y, 1)` as a polynomial in `y` with coefficients in `Q[x]`.
fn by_powers_of_y(p: &MultiPoly) -> Vec<UniPoly> {
    let dy = p.degree_in(1).unwrap_or(0) as usize;
    let dx = p.degree_in(0).unwrap_or(0) as usize;
    let mut out = vec![vec![Rational::zero(); dx + 1]; dy + 1];
    for (m, c) in p.terms() {
        out[m.exponent(1) as usize][m.exponent(0) as usize] += c;
    }
    out.into_iter().map(UniPoly::new).collect()
}

fn specialize(coeffs: &[UniPoly], x: &Rational) -> UniPoly {
    UniPoly::new(coeffs.iter().map(|c| c.eval(x)).collect())
}

/// `Res_y(a, b)` in `Q[x]`, by evaluation at `bound + 1` integers and
/// interpolation. Both inputs have constant leading coefficients in `y`.
fn resultant_in_x(a: &[UniPoly], b: &[UniPoly], bound: usize) -> UniPoly {
    let xs: Vec<Rational> = (0..=bound as i64).map(|k| int(if k % 2 == 0 { k / 2 } else { -(k + 1) / 2 })).collect();
    let ys: Vec<Rational> = xs
        .iter()
        .map(|x| specialize(a, x).resultant(&specialize(b, x)))
        .collect();
    UniPoly::interpolate(&xs, &ys)
}

/// Newton in `y` on `f(x0, y) = 0`; the caller rejects frames where this
/// root is multiple.
fn refine_y(f: &FloatPoly, x0: Complex64, mut y: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (fv, fg) = f.eval_grad(&[x0, y]);
        if fg[1] == Complex64::zero() {
            break;
        }
        let step = fv / fg[1];
        y -= step;
        if step.norm() <= 1e-16 * (1.0 + y.norm()) {
            break;
        }
    }
    y
}

/// `p(z) / p'(z)` evaluated exactly at the floating-point point `z`.
fn exact_ratio(p: &UniPoly, dp: &UniPoly, z: Complex64) -> Option<Complex64> {
    let re = Rational::from_float(z.re)?;
    let im = Rational::from_float(z.im)?;
    let (v, dv) = (eval_complex_exact(p, &re, &im), eval_complex_exact(dp, &re, &im));
    let den = &dv.0 * &dv.0 + &dv.1 * &dv.1;
    if den.is_zero() {
        return None;
    }
    let sr = (&v.0 * &dv.0 + &v.1 * &dv.1) / &den;
    let si = (&v.1 * &dv.0 - &v.0 * &dv.1) / &den;
    Some(Complex64::new(rational_to_f64(&sr), rational_to_f64(&si)))
}

fn eval_complex_exact(p: &UniPoly, re: &Rational, im: &Rational) -> (Rational, Rational) {
    let mut acc = (Rational::zero(), Rational::zero());
    for c in p.coeffs().iter().rev() {
        let r = &acc.0 * re - &acc.1 * im + c;
        let i = &acc.0 * im + &acc.1 * re;
        acc = (r, i);
    }
    acc
}

fn unit3(v: [Complex64; 3]) -> [Complex64; 3] {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / n)
}

fn cross(a: &[Complex64; 3], b: &[Complex64; 3]) -> [Complex64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Locate `C ∩ Hess(C)`, test each point for total inflection, and emit
/// the lines of the cover.
pub fn total_inflections(c: &PlaneCurve, tol: f64, seed: u64) -> Result<InflectionReport, CoveringError> {
    total_inflections_with_budget(c, tol, seed, Budget::default())
}

/// As [`total_inflections`], with an explicit budget for the smoothness check.
pub fn total_inflections_with_budget(
    c: &PlaneCurve,
    tol: f64,
    seed: u64,
    budget: Budget,
) -> Result<InflectionReport, CoveringError> {
    if !c.is_smooth(budget)? {
        return Err(CoveringError::Singular);
    }
    let h = hessian(c);
    if h.is_zero() {
        return Err(CoveringError::DegenerateHessian);
    }
    let d = c.degree as usize;
    let bound = d * 3 * (d - 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut last_err = String::new();
    // A projection that merges two intersection points lowers the number of
    // distinct resultant roots, so only frames attaining the maximum are used.
    let mut frames = Vec::new();
    for _ in 0..FRAME_ATTEMPTS {
        match prepare_frame(c, &h, random_frame(&mut rng), bound) {
            Ok(f) => frames.push(f),
            Err(msg) => last_err = msg,
        }
    }
    let best = frames.iter().map(|f| f.distinct).max().unwrap_or(0);
    for frame in frames.iter().filter(|f| f.distinct == best) {
        match in_frame(c, frame, tol) {
            Ok(report) => return Ok(report),
            Err(msg) => last_err = msg,
        }
    }
    Err(CoveringError::IllConditioned(last_err))
}

/// A chart in which `f` and `h` are monic in `y` and meet only at finite
/// points, with the exact squarefree decomposition of `Res_y(f, h)`.
struct Frame {
    g: [[i64; 3]; 3],
    fa: MultiPoly,
    ha: MultiPoly,
    fy: Vec<UniPoly>,
    factors: Vec<(UniPoly, usize)>,
    distinct: usize,
}

fn prepare_frame(c: &PlaneCurve, h: &MultiPoly, g: [[i64; 3]; 3], bound: usize) -> Result<Frame, String> {
    let d = c.degree as usize;
    let fg = apply_frame(&c.poly, &g);
    let hg = apply_frame(h, &g);
    let ring = fg.ring().clone();
    let one = MultiPoly::one(&ring);
    let x = MultiPoly::var(&ring, 0);
    let y = MultiPoly::var(&ring, 1);
    let affine = |p: &MultiPoly| p.substitute(&[x.clone(), y.clone(), one.clone()]).expect("arity 3");
    let (fa, ha) = (affine(&fg), affine(&hg));
    if fa.degree_in(1) != Some(d as u16) || ha.degree_in(1).map(|e| e as usize) != hg.total_degree().map(|e| e as usize) {
        return Err("frame not generic: leading coefficient in y vanishes".into());
    }
    let fy = by_powers_of_y(&fa);
    let hy = by_powers_of_y(&ha);
    if fy.last().and_then(|p| p.degree()) != Some(0) || hy.last().and_then(|p| p.degree()) != Some(0) {
        return Err("frame not generic: leading coefficient in y depends on x".into());
    }
    let res = resultant_in_x(&fy, &hy, bound);
    if res.degree() != Some(bound) {
        return Err("intersection points at infinity of the chart".into());
    }
    let factors: Vec<(UniPoly, usize)> = res
        .squarefree_decomposition()
        .into_iter()
        .filter(|(f, _)| f.degree().unwrap_or(0) > 0)
        .collect();
    let distinct = factors.iter().map(|(f, _)| f.degree().unwrap_or(0)).sum();
    Ok(Frame { g, fa, ha, fy, factors, distinct })
}

fn in_frame(c: &PlaneCurve, frame: &Frame, tol: f64) -> Result<InflectionReport, String> {
    let d = c.degree as usize;
    let Frame { g, fa, ha, fy, factors, .. } = frame;

    let ff = FloatPoly::from_multi(fa);
    let hf = FloatPoly::from_multi(ha);
    let f_hom = FloatPoly::from_multi(&c.poly);
    let cover = c.cover();
    let cover_f = FloatPoly::from_multi(cover.poly());
    let system = [ff.clone(), hf.clone()];
    let gf: [[f64; 3]; 3] = g.map(|r| r.map(|v| v as f64));

    let mut candidates = Vec::new();
    let mut undetermined = 0;
    let mut lines = Vec::new();
    let mut max_residual = 0.0f64;
    for (factor, mult) in factors {
        let mult = *mult;
        let fc: Vec<Complex64> = factor.to_f64().iter().map(|&v| Complex64::new(v, 0.0)).collect();
        let mut xs = poly_roots(&fc);
        let dfactor = factor.derivative();
        aberth_refine(&mut xs, |z| exact_ratio(&factor, &dfactor, z), 60);
        for (i, &x0) in xs.iter().enumerate() {
            if xs.iter().enumerate().any(|(j, &x1)| j != i && (x0 - x1).norm() <= 10.0 * tol * (1.0 + x0.norm())) {
                undetermined += 1;
                continue;
            }
            // y0: the root of f(x0, y) where the Hessian is smallest.
            let ycoef: Vec<Complex64> = fy
                .iter()
                .map(|p| {
                    let pc: Vec<Complex64> = p.to_f64().iter().map(|&v| Complex64::new(v, 0.0)).collect();
                    crate::numeric::horner(&pc, x0).0
                })
                .collect();
            let y0 = poly_roots(&ycoef)
                .into_iter()
                .min_by(|a, b| hf.relative_value(&[x0, *a]).total_cmp(&hf.relative_value(&[x0, *b])))
                .ok_or_else(|| "no y-root".to_string())?;
            let (xy, _) = if mult == 1 {
                gauss_newton(&system, &[x0, y0], 4)
            } else {
                (vec![x0, refine_y(&ff, x0, y0)], 0.0)
            };
            let (_, fg) = ff.eval_grad(&xy);
            if mult > 1 && fg[1].norm() <= 1e-3 * (fg[0].norm() + fg[1].norm()) {
                return Err("projection direction tangent to the curve".into());
            }
            // Back to the original frame: X = g (x, y, 1).
            let local = [xy[0], xy[1], Complex64::one()];
            let p = unit3(std::array::from_fn(|r| (0..3).map(|k| local[k] * gf[r][k]).sum()));
            let (_, grad) = f_hom.eval_grad(&p);
            let grad: [Complex64; 3] = [grad[0], grad[1], grad[2]];
            let q = unit3(cross(&grad, &p));
            let coeffs = restrict_numeric(&f_hom, d, &q, &p);
            let top = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
            let defect = coeffs[..d].iter().map(|z| z.norm()).fold(0.0, f64::max) / top;
            let total = defect <= tol && coeffs[d].norm() > tol * top;
            if total {
                let w = coeffs[d].powf(1.0 / d as f64);
                for k in 0..d {
                    let xi = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / d as f64);
                    let a = [p[0], p[1], p[2], Complex64::zero()];
                    let b = [q[0], q[1], q[2], xi * w];
                    let line = Line3::from_points(a, b).map_err(|e| e.to_string())?;
                    max_residual = max_residual.max(line_residual_with(&cover_f, d, &line));
                    lines.push(line);
                }
            }
            candidates.push(Inflection {
                point: p,
                hessian_multiplicity: mult,
                defect,
                total,
            });
        }
    }
    let beta = candidates.iter().filter(|c| c.total).count();
    assert!(beta <= 3 * d, "more than 3d total inflection points");
    crate::line::sort_lines(&mut lines);
    Ok(InflectionReport {
        degree: c.degree,
        candidates,
        beta,
        undetermined,
        lines,
        max_residual,
    })
}

/// Lines on `t^d = f`, each verified against the cover.
pub fn covering_lines(c: &PlaneCurve, tol: f64, seed: u64) -> Result<Vec<Line3>, CoveringError> {
    let report = total_inflections(c, tol, seed)?;
    if report.max_residual > tol {
        return Err(CoveringError::IllConditioned(format!(
            "emitted line residual {:.3e}",
            report.max_residual
        )));
    }
    Ok(report.lines)
}
