use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::poly::{MultiPoly, Ring};
use super::{PolyError, Rational};

/// Dense univariate polynomial over the rationals, coefficients low to high.
/// No trailing zeros are stored; the zero polynomial is the empty vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// View a polynomial in which only `var` occurs.
    pub fn from_multi(p: &MultiPoly, var: usize) -> Result<Self, PolyError> {
        let used = p.variables_used();
        if used.iter().any(|&v| v != var) {
            return Err(PolyError::NotUnivariate(
                used.iter().map(|&v| p.ring().name(v).to_string()).collect(),
            ));
        }
        let deg = p.degree_in(var).unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(var) as usize] = c.clone();
        }
        Ok(UniPoly::new(coeffs))
    }

    pub fn to_multi(&self, ring: &Ring, var: usize) -> MultiPoly {
        MultiPoly::from_terms(
            ring,
            self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| {
                (Monomial::var_power(ring.nvars(), var, i as u16), c.clone())
            }),
        )
    }

    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn monic(&self) -> UniPoly {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                UniPoly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, other: &UniPoly) -> UniPoly {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }

    /// Quotient and remainder of exact division.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lc = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (UniPoly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] / &lc;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(quot), UniPoly::new(rem))
    }

    /// Monic gcd, computed with a primitive remainder sequence over the
    /// integers to keep coefficient growth in check.
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let mut a = primitive_int(self);
        let mut b = primitive_int(other);
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while !b.is_empty() {
            let r = pseudo_rem(&a, &b);
            a = b;
            b = make_primitive(r);
        }
        if a.is_empty() {
            return UniPoly::zero();
        }
        UniPoly::new(a.into_iter().map(Rational::from_integer).collect()).monic()
    }

    pub fn is_squarefree(&self) -> bool {
        match self.degree() {
            None => false,
            Some(0) => true,
            Some(_) => self.gcd(&self.derivative()).degree() == Some(0),
        }
    }

    /// `p / gcd(p, p')`, monic.
    pub fn squarefree_part(&self) -> UniPoly {
        if self.degree().unwrap_or(0) == 0 {
            return self.monic();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0.monic()
    }

    /// Yun's algorithm: `[(f_1, 1), (f_2, 2), ...]` with `p = c * prod f_k^k`,
    /// each `f_k` monic, squarefree, pairwise coprime. Factors equal to 1 are
    /// omitted.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_rem(&a0).0;
        let mut c = df.div_rem(&a0).0;
        let mut d = c.sub(&b.derivative());
        let mut k = 1;
        loop {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), k));
            }
            b = b.div_rem(&a).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            c = d.div_rem(&a).0;
            d = c.sub(&b.derivative());
            k += 1;
        }
        out
    }

    pub fn sub(&self, other: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        UniPoly::new(
            (0..n)
                .map(|i| {
                    let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                    a - b
                })
                .collect(),
        )
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coeffs.iter().map(crate::numeric::rational_to_f64).collect()
    }

    /// Resultant via the Sylvester determinant (formal degrees = actual degrees).
    pub fn resultant(&self, other: &UniPoly) -> Rational {
        let (Some(m), Some(n)) = (self.degree(), other.degree()) else {
            return Rational::zero();
        };
        let size = m + n;
        if size == 0 {
            return Rational::one();
        }
        let mut rows = vec![vec![Rational::zero(); size]; size];
        // Coefficients high to low in each shifted row.
        for i in 0..n {
            for (j, c) in self.coeffs.iter().rev().enumerate() {
                rows[i][i + j] = c.clone();
            }
        }
        for i in 0..m {
            for (j, c) in other.coeffs.iter().rev().enumerate() {
                rows[n + i][i + j] = c.clone();
            }
        }
        determinant(rows)
    }

    /// Unique polynomial of degree `< xs.len()` through the given points
    /// (Newton divided differences).
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> UniPoly {
        assert_eq!(xs.len(), ys.len(), "interpolation needs matching abscissae and values");
        let n = xs.len();
        let mut dd = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                dd[i] = (&dd[i] - &dd[i - 1]) / (&xs[i] - &xs[i - level]);
            }
        }
        // Horner on the Newton basis.
        let mut acc = UniPoly::zero();
        for i in (0..n).rev() {
            let shifted = acc.mul(&UniPoly::new(vec![-xs[i].clone(), Rational::one()]));
            acc = shifted.sub(&UniPoly::new(vec![-dd[i].clone()]));
        }
        acc
    }
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant(mut a: Vec<Vec<Rational>>) -> Rational {
    let n = a.len();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..n {
                let v = &f * &a[col][c];
                a[r][c] -= v;
            }
        }
    }
    det
}

fn primitive_int(p: &UniPoly) -> Vec<BigInt> {
    let mut den = BigInt::one();
    for c in &p.coeffs {
        den = den.lcm(c.denom());
    }
    make_primitive(
        p.coeffs
            .iter()
            .map(|c| c.numer() * (&den / c.denom()))
            .collect(),
    )
}

fn make_primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
    let mut g = BigInt::zero();
    for c in &v {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if v.last().map(|c| c.is_negative()).unwrap_or(false) {
        g = -g;
    }
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    v
}

/// Pseudo-remainder of `a` by `b` (both nonzero, integer coefficients).
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lb = &b[db];
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        if lr.is_zero() {
            r.pop();
            continue;
        }
        let shift = r.len() - 1 - db;
        let g = lr.gcd(lb);
        let mul_r = lb / &g;
        let mul_b = &lr / &g;
        for c in r.iter_mut() {
            *c *= &mul_r;
        }
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &mul_b * bc;
        }
        r.pop();
        r = make_primitive(r);
    }
    while r.last().map(|c| c.is_zero()).unwrap_or(false) {
        r.pop();
    }
    r
}

/// True iff the univariate polynomial `p` has no repeated factor
/// (`gcd(p, p')` constant).
pub fn is_squarefree_univariate(p: &MultiPoly) -> Result<bool, PolyError> {
    if p.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let used = p.variables_used();
    let var = match used.as_slice() {
        [] => return Ok(true),
        [v] => *v,
        _ => {
            return Err(PolyError::NotUnivariate(
                used.iter().map(|&v| p.ring().name(v).to_string()).collect(),
            ))
        }
    };
    Ok(UniPoly::from_multi(p, var)?.is_squarefree())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::expr::parse_poly;

    fn up(s: &str) -> UniPoly {
        let r = Ring::new(&["x"]);
        UniPoly::from_multi(&parse_poly(s, &r).unwrap(), 0).unwrap()
    }

    /// Euclid over Q with plain rational remainders; independent of the
    /// primitive PRS used by `gcd`.
    fn naive_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    #[test]
    fn octic_eliminant_is_squarefree() {
        let r = Ring::new(&["h"]);
        let p = parse_poly("h^8+14h^4+1", &r).unwrap();
        assert!(is_squarefree_univariate(&p).unwrap());
        let f = UniPoly::from_multi(&p, 0).unwrap();
        assert_eq!(naive_gcd(&f, &f.derivative()).degree(), Some(0));
    }

    #[test]
    fn squarefree_examples() {
        let r = Ring::new(&["x", "y"]);
        assert!(!is_squarefree_univariate(&parse_poly("(x-1)^2", &r).unwrap()).unwrap());
        assert!(is_squarefree_univariate(&parse_poly("x", &r).unwrap()).unwrap());
        assert_eq!(
            is_squarefree_univariate(&MultiPoly::zero(&r)),
            Err(PolyError::ZeroPolynomial)
        );
        assert!(matches!(
            is_squarefree_univariate(&parse_poly("x+y", &r).unwrap()),
            Err(PolyError::NotUnivariate(_))
        ));
    }

    #[test]
    fn gcd_matches_naive_euclid() {
        let a = up("(x-1)^3(x+2)(3x^2+1)");
        let b = up("(x-1)(x+2)^2(x-5)");
        let g = a.gcd(&b);
        assert_eq!(g, naive_gcd(&a, &b));
        assert_eq!(g, up("x^2+x-2"));
    }

    #[test]
    fn yun_decomposition() {
        let p = up("7(x-1)^3(x+2)(x^2+1)^2");
        let dec = p.squarefree_decomposition();
        assert_eq!(
            dec,
            vec![(up("x+2"), 1), (up("x^2+1"), 2), (up("x-1"), 3)]
        );
        assert_eq!(p.squarefree_part(), up("(x-1)(x+2)(x^2+1)"));
        let (q, r) = p.div_rem(&up("x-1"));
        assert!(r.is_zero());
        assert_eq!(q.mul(&up("x-1")), p);
        assert_eq!(p.eval(&int(1)), int(0));
    }

    #[test]
    fn resultant_and_interpolation() {
        // Res(x^2 - 1, x - 2) = (2 - 1)(2 + 1) up to sign convention: 3.
        let a = UniPoly::new(vec![int(-1), int(0), int(1)]);
        let b = UniPoly::new(vec![int(-2), int(1)]);
        assert_eq!(a.resultant(&b), int(3));
        // Common root gives zero.
        let c = UniPoly::new(vec![int(1), int(1)]);
        assert!(a.resultant(&c).is_zero());
        let xs: Vec<Rational> = (0..5).map(int).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| x * x * x - int(2) * x + int(7)).collect();
        let p = UniPoly::interpolate(&xs, &ys);
        assert_eq!(p, UniPoly::new(vec![int(7), int(-2), int(0), int(1)]));
    }
}
