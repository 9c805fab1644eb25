//! Floating-point helpers: rational conversion and univariate root finding.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};

use crate::exact::{MultiPoly, Rational};

/// Nearest `f64` to a rational; saturates to ±inf for huge magnitudes.
pub fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        if q.numer().sign() == num_bigint::Sign::Minus {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

/// Evaluate `sum c[i] z^i` and its derivative.
pub fn horner(c: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots of `sum c[i] z^i` (coefficients low to high) by
/// Aberth–Ehrlich iteration, followed by a few Newton steps on each root.
/// Leading zero coefficients are dropped; roots at zero are returned exactly.
pub fn poly_roots(c: &[Complex64]) -> Vec<Complex64> {
    let mut hi = c.len();
    while hi > 0 && c[hi - 1] == Complex64::zero() {
        hi -= 1;
    }
    let mut lo = 0;
    while lo < hi && c[lo] == Complex64::zero() {
        lo += 1;
    }
    if hi == 0 {
        return Vec::new();
    }
    let mut roots = vec![Complex64::zero(); lo];
    let c = &c[lo..hi];
    let n = c.len() - 1;
    if n == 0 {
        return roots;
    }
    let lead = c[n];
    let monic: Vec<Complex64> = c.iter().map(|a| a / lead).collect();
    if n == 1 {
        roots.push(-monic[0]);
        return roots;
    }
    // Initial guesses on a circle of Fujiwara-bound radius.
    let radius = (0..n)
        .map(|i| monic[i].norm().powf(1.0 / (n - i) as f64))
        .fold(0.0f64, f64::max)
        .max(1e-3)
        * 1.1;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.4))
        .collect();
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (p, dp) = horner(&monic, z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d != Complex64::zero() {
                        s += d.inv();
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    for zi in z.iter_mut() {
        *zi = newton_polish(&monic, *zi, 3);
    }
    roots.extend(z);
    roots
}

/// Simultaneous Aberth sweeps on approximate roots `z`, with the Newton
/// ratio `p(z) / p'(z)` supplied by the caller (for instance evaluated in
/// exact arithmetic). Stops when the largest relative step is below 1e-15.
pub fn aberth_refine(z: &mut [Complex64], ratio: impl Fn(Complex64) -> Option<Complex64>, iters: usize) {
    let n = z.len();
    for _ in 0..iters {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let Some(w) = ratio(z[i]) else { continue };
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != i {
                    let d = z[i] - z[j];
                    if d != Complex64::zero() {
                        s += d.inv();
                    }
                }
            }
            let step = w / (Complex64::new(1.0, 0.0) - w * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
}

/// Up to `steps` Newton iterations, keeping the better of each pair.
pub fn newton_polish(c: &[Complex64], mut z: Complex64, steps: usize) -> Complex64 {
    for _ in 0..steps {
        let (p, dp) = horner(c, z);
        if dp == Complex64::zero() {
            break;
        }
        let next = z - p / dp;
        if !next.is_finite() || horner(c, next).0.norm() > p.norm() {
            break;
        }
        z = next;
    }
    z
}

/// Real roots of a real polynomial, low to high coefficients.
pub fn poly_roots_real(c: &[f64]) -> Vec<Complex64> {
    let cc: Vec<Complex64> = c.iter().map(|&x| Complex64::new(x, 0.0)).collect();
    poly_roots(&cc)
}

/// Polynomial with `f64` coefficients for fast repeated complex evaluation.
#[derive(Clone, Debug)]
pub struct FloatPoly {
    nvars: usize,
    terms: Vec<(Vec<u16>, f64)>,
    max_exp: Vec<u16>,
}

impl FloatPoly {
    pub fn from_multi(p: &MultiPoly) -> Self {
        let nvars = p.nvars();
        let terms: Vec<(Vec<u16>, f64)> = p
            .terms()
            .iter()
            .map(|(m, c)| (m.exponents().to_vec(), rational_to_f64(c)))
            .collect();
        let max_exp = (0..nvars)
            .map(|v| terms.iter().map(|t| t.0[v]).max().unwrap_or(0))
            .collect();
        FloatPoly {
            nvars,
            terms,
            max_exp,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn norm1(&self) -> f64 {
        self.terms.iter().map(|t| t.1.abs()).sum()
    }

    fn powers(&self, x: &[Complex64]) -> Vec<Vec<Complex64>> {
        (0..self.nvars)
            .map(|v| {
                let mut pw = Vec::with_capacity(self.max_exp[v] as usize + 1);
                pw.push(Complex64::new(1.0, 0.0));
                for k in 0..self.max_exp[v] as usize {
                    pw.push(pw[k] * x[v]);
                }
                pw
            })
            .collect()
    }

    pub fn eval(&self, x: &[Complex64]) -> Complex64 {
        let pw = self.powers(x);
        let mut acc = Complex64::zero();
        for (e, c) in &self.terms {
            let mut t = Complex64::new(*c, 0.0);
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= pw[v][k as usize];
                }
            }
            acc += t;
        }
        acc
    }

    /// `|p(x)|` divided by the same sum with every term replaced by its
    /// modulus; a floating-point evaluation is indistinguishable from zero
    /// when this is around machine epsilon.
    pub fn relative_value(&self, x: &[Complex64]) -> f64 {
        let ax: Vec<Complex64> = x.iter().map(|z| Complex64::new(z.norm(), 0.0)).collect();
        let pw = self.powers(&ax);
        let mut scale = 0.0;
        for (e, c) in &self.terms {
            let mut t = c.abs();
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= pw[v][k as usize].re;
                }
            }
            scale += t;
        }
        if scale == 0.0 {
            return 0.0;
        }
        self.eval(x).norm() / scale
    }

    /// Value and gradient at `x`.
    pub fn eval_grad(&self, x: &[Complex64]) -> (Complex64, Vec<Complex64>) {
        let pw = self.powers(x);
        let mut val = Complex64::zero();
        let mut grad = vec![Complex64::zero(); self.nvars];
        for (e, c) in &self.terms {
            let mut t = Complex64::new(*c, 0.0);
            for (v, &k) in e.iter().enumerate() {
                if k > 0 {
                    t *= pw[v][k as usize];
                }
            }
            val += t;
            for w in 0..self.nvars {
                let k = e[w];
                if k == 0 {
                    continue;
                }
                let mut g = Complex64::new(*c * k as f64, 0.0);
                for (v, &kv) in e.iter().enumerate() {
                    let p = if v == w { kv - 1 } else { kv };
                    if p > 0 {
                        g *= pw[v][p as usize];
                    }
                }
                grad[w] += g;
            }
        }
        (val, grad)
    }
}

/// Gauss–Newton refinement of an (over)determined system `f_i(x) = 0`.
/// Returns the refined point and its final max-residual.
pub fn gauss_newton(system: &[FloatPoly], x0: &[Complex64], iters: usize) -> (Vec<Complex64>, f64) {
    let n = x0.len();
    let m = system.len();
    let resid = |x: &[Complex64]| {
        system
            .iter()
            .map(|f| f.eval(x).norm() / f.norm1().max(1.0))
            .fold(0.0, f64::max)
    };
    let mut x = x0.to_vec();
    let mut r = resid(&x);
    if n == 0 {
        return (x, r);
    }
    for _ in 0..iters {
        let mut jac = DMatrix::<Complex64>::zeros(m, n);
        let mut rhs = DVector::<Complex64>::zeros(m);
        for (i, f) in system.iter().enumerate() {
            let (v, g) = f.eval_grad(&x);
            rhs[i] = -v;
            for j in 0..n {
                jac[(i, j)] = g[j];
            }
        }
        let Ok(step) = jac.svd(true, true).solve(&rhs, 1e-14) else {
            break;
        };
        let next: Vec<Complex64> = x.iter().zip(step.iter()).map(|(a, b)| a + b).collect();
        let rn = resid(&next);
        if !(rn < r) {
            break;
        }
        x = next;
        r = rn;
        if r < 1e-15 {
            break;
        }
    }
    (x, r)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::ratio;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rational_conversion() {
        assert_eq!(rational_to_f64(&ratio(1, 4)), 0.25);
        assert_eq!(rational_to_f64(&ratio(-3, 2)), -1.5);
        let big = Rational::from_integer(num_bigint::BigInt::from(10).pow(400u32));
        assert_eq!(rational_to_f64(&(big.clone().recip())), 0.0);
        assert_eq!(rational_to_f64(&big), f64::INFINITY);
    }

    #[test]
    fn roots_of_unity() {
        // z^8 + 14 z^4 + 1
        let mut coef = vec![c(0.0, 0.0); 9];
        coef[0] = c(1.0, 0.0);
        coef[4] = c(14.0, 0.0);
        coef[8] = c(1.0, 0.0);
        let r = poly_roots(&coef);
        assert_eq!(r.len(), 8);
        for z in &r {
            assert!(horner(&coef, *z).0.norm() < 1e-10, "{z}");
        }
        for i in 0..8 {
            for j in i + 1..8 {
                assert!((r[i] - r[j]).norm() > 1e-3);
            }
        }
    }

    #[test]
    fn zero_roots_and_degenerate_inputs() {
        let r = poly_roots(&[c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0)]);
        assert_eq!(r.len(), 3);
        assert_eq!(r[0], c(0.0, 0.0));
        assert_eq!(r[1], c(0.0, 0.0));
        assert!((r[2] - c(1.0, 0.0)).norm() < 1e-14);
        assert!(poly_roots(&[c(2.0, 0.0)]).is_empty());
        assert!(poly_roots(&[]).is_empty());
    }

    #[test]
    fn float_poly_gradient_matches_exact_derivative() {
        let r = crate::exact::Ring::new(&["x", "y"]);
        let p = crate::expr::parse_poly("x^3y - 2xy^2 + 5", &r).unwrap();
        let f = FloatPoly::from_multi(&p);
        let pt = [c(0.3, -1.2), c(2.0, 0.5)];
        let (v, g) = f.eval_grad(&pt);
        assert!((v - p.eval_complex(&pt)).norm() < 1e-12);
        for k in 0..2 {
            assert!((g[k] - p.derivative(k).eval_complex(&pt)).norm() < 1e-12);
        }
    }

    #[test]
    fn gauss_newton_converges_on_overdetermined_system() {
        let r = crate::exact::Ring::new(&["x", "y"]);
        let sys: Vec<FloatPoly> = ["x^2+y^2-5", "x-2y", "xy-2"]
            .iter()
            .map(|s| FloatPoly::from_multi(&crate::expr::parse_poly(s, &r).unwrap()))
            .collect();
        let (x, res) = gauss_newton(&sys, &[c(1.9, 0.01), c(1.05, -0.02)], 20);
        assert!(res < 1e-14);
        assert!((x[0] - c(2.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn clustered_real_roots() {
        // (x-1)(x-1.001)(x+2)(x-5)(x-0.5)
        let roots = [1.0, 1.001, -2.0, 5.0, 0.5];
        let mut coef = vec![c(1.0, 0.0)];
        for r in roots {
            let mut next = vec![c(0.0, 0.0); coef.len() + 1];
            for (i, a) in coef.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            coef = next;
        }
        let mut got: Vec<f64> = poly_roots(&coef).iter().map(|z| z.re).collect();
        got.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let mut want = roots.to_vec();
        want.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for (g, w) in got.iter().zip(want.iter()) {
            assert!((g - w).abs() < 1e-9, "{g} vs {w}");
        }
    }
}
