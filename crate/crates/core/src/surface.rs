use num_complex::Complex64;

use crate::exact::{MultiPoly, Rational, Ring};
use crate::expr::{parse_poly, ParseError};
use crate::line::Line3;
use crate::numeric::FloatPoly;

pub const SURFACE_VARS: [&str; 4] = ["x", "y", "z", "t"];

/// The coordinate ring `Q[x, y, z, t]` of projective 3-space.
pub fn surface_ring() -> Ring {
    Ring::new(&SURFACE_VARS)
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SurfaceError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("surface must live in the ring (x, y, z, t)")]
    WrongRing,
    #[error("surface equation is not homogeneous")]
    NotHomogeneous,
    #[error("surface degree {0} is below 3")]
    DegreeTooLow(u32),
}

/// A homogeneous form of degree at least 3 in `x, y, z, t`.
#[derive(Clone, Debug, PartialEq)]
pub struct SurfaceForm {
    poly: MultiPoly,
    degree: u32,
}

impl SurfaceForm {
    pub fn new(poly: MultiPoly) -> Result<Self, SurfaceError> {
        if poly.ring().names() != SURFACE_VARS {
            return Err(SurfaceError::WrongRing);
        }
        if !poly.is_homogeneous() {
            return Err(SurfaceError::NotHomogeneous);
        }
        let degree = poly.total_degree().unwrap_or(0);
        if degree < 3 {
            return Err(SurfaceError::DegreeTooLow(degree));
        }
        Ok(SurfaceForm { poly, degree })
    }

    pub fn parse(text: &str) -> Result<Self, SurfaceError> {
        Self::new(parse_poly(text, &surface_ring())?)
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Coefficients `c_0..c_d` of `F(u a + v b)` as a form in `(u, v)`;
    /// `c_i` multiplies `u^i v^(d-i)`.
    pub fn restrict(&self, a: &[Complex64; 4], b: &[Complex64; 4]) -> Vec<Complex64> {
        restrict_numeric(&FloatPoly::from_multi(&self.poly), self.degree as usize, a, b)
    }

    /// Exact restriction to the line through two rational points.
    pub fn restrict_exact(&self, a: &[Rational; 4], b: &[Rational; 4]) -> Vec<Rational> {
        let uv = Ring::new(&["u", "v"]);
        let u = MultiPoly::var(&uv, 0);
        let v = MultiPoly::var(&uv, 1);
        let subs: Vec<MultiPoly> = (0..4)
            .map(|i| &u.scale(&a[i]) + &v.scale(&b[i]))
            .collect();
        let g = self.poly.substitute(&subs).expect("arity fixed at 4");
        let d = self.degree as usize;
        let mut out = vec![Rational::from_integer(0.into()); d + 1];
        for (m, c) in g.terms() {
            out[m.exponent(0) as usize] = c.clone();
        }
        out
    }

    /// Whether `line` lies on the surface: all restriction coefficients are
    /// below `tol * ||F||_1` (points scaled to unit norm).
    pub fn contains_line(&self, line: &Line3, tol: f64) -> bool {
        self.line_residual(line) <= tol
    }

    /// Largest restriction coefficient relative to `||F||_1`.
    pub fn line_residual(&self, line: &Line3) -> f64 {
        let f = FloatPoly::from_multi(&self.poly);
        line_residual_with(&f, self.degree as usize, line)
    }

    pub fn contains_line_exact(&self, a: &[Rational; 4], b: &[Rational; 4]) -> bool {
        self.restrict_exact(a, b).iter().all(|c| c == &Rational::from_integer(0.into()))
    }
}

/// Dense homogeneous form of degree `d` with integer coefficients drawn
/// uniformly from `-9..=9` by a ChaCha8 stream.
pub fn random_homogeneous(ring: &Ring, d: u32, seed: u64) -> MultiPoly {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let n = ring.nvars();
    let mut terms = Vec::new();
    let mut exps = vec![0u16; n];
    fn walk(
        v: usize,
        left: u16,
        exps: &mut Vec<u16>,
        out: &mut Vec<(crate::exact::Monomial, Rational)>,
        rng: &mut rand_chacha::ChaCha8Rng,
    ) {
        if v + 1 == exps.len() {
            exps[v] = left;
            let c: i64 = rng.random_range(-9..=9);
            out.push((crate::exact::Monomial::from_exponents(exps), crate::exact::int(c)));
            return;
        }
        for e in (0..=left).rev() {
            exps[v] = e;
            walk(v + 1, left - e, exps, out, rng);
        }
    }
    walk(0, d as u16, &mut exps, &mut terms, &mut rng);
    MultiPoly::from_terms(ring, terms)
}

fn unit4(p: &[Complex64; 4]) -> [Complex64; 4] {
    let n = p.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    p.map(|z| z / n)
}

/// Residual of a line against a precompiled form of degree `d`.
pub fn line_residual_with(f: &FloatPoly, d: usize, line: &Line3) -> f64 {
    let [a, b] = line.points();
    let c = restrict_numeric(f, d, &unit4(a), &unit4(b));
    c.iter().map(|z| z.norm()).fold(0.0, f64::max) / f.norm1().max(f64::MIN_POSITIVE)
}

/// Coefficients of `f(u a + v b)` recovered by sampling on the unit circle
/// and an inverse DFT.
pub fn restrict_numeric(f: &FloatPoly, d: usize, a: &[Complex64], b: &[Complex64]) -> Vec<Complex64> {
    let n = d + 1;
    let samples: Vec<Complex64> = (0..n)
        .map(|k| {
            let s = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * k as f64 / n as f64);
            let p: Vec<Complex64> = a.iter().zip(b).map(|(x, y)| s * x + y).collect();
            f.eval(&p)
        })
        .collect();
    (0..n)
        .map(|i| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (k, g) in samples.iter().enumerate() {
                let w = Complex64::from_polar(
                    1.0,
                    -2.0 * std::f64::consts::PI * (i * k) as f64 / n as f64,
                );
                acc += g * w;
            }
            acc / n as f64
        })
        .collect()
}
