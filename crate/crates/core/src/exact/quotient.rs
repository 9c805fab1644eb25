use std::collections::HashMap;

use nalgebra::{DMatrix, Schur};
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::groebner::GroebnerBasis;
use super::monomial::Monomial;
use super::poly::MultiPoly;
use super::univariate::UniPoly;
use super::{PolyError, Rational};
use crate::numeric::rational_to_f64;

/// Sparse column: `(row, value)` pairs.
type Column = Vec<(usize, Rational)>;

/// The finite-dimensional algebra `Q[x]/I` of a zero-dimensional ideal,
/// with the standard monomials of a Gröbner basis as vector-space basis.
#[derive(Clone, Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    var_matrices: Vec<Vec<Column>>,
}

/// Per-variable eliminants and whether each is squarefree. If all are, the
/// ideal is radical and the quotient dimension counts distinct points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalCertificate {
    pub eliminant_degrees: Vec<usize>,
    pub squarefree: Vec<bool>,
}

impl RadicalCertificate {
    pub fn is_radical(&self) -> bool {
        self.squarefree.iter().all(|&s| s)
    }
}

impl QuotientRing {
    pub fn new(gb: GroebnerBasis) -> Result<Self, PolyError> {
        let basis = gb
            .standard_monomials()
            .ok_or(PolyError::NotZeroDimensional)?;
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut q = QuotientRing {
            gb,
            basis,
            index,
            var_matrices: Vec::new(),
        };
        q.var_matrices = (0..q.gb.ring().nvars())
            .map(|v| q.build_var_matrix(v))
            .collect();
        Ok(q)
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Coordinates of the normal form of `p` in the standard-monomial basis.
    pub fn coordinates(&self, p: &MultiPoly) -> Vec<Rational> {
        let nf = self.gb.reduce(p);
        let mut out = vec![Rational::zero(); self.basis.len()];
        for (m, c) in nf.terms() {
            out[self.index[m]] = c.clone();
        }
        out
    }

    fn build_var_matrix(&self, v: usize) -> Vec<Column> {
        let ring = self.gb.ring().clone();
        let mut cache: HashMap<Monomial, Column> = HashMap::new();
        self.basis
            .iter()
            .map(|b| {
                let mut m = b.clone();
                m.bump(v);
                if let Some(&j) = self.index.get(&m) {
                    return vec![(j, Rational::one())];
                }
                cache
                    .entry(m.clone())
                    .or_insert_with(|| {
                        let nf = self.gb.reduce(&MultiPoly::monomial(&ring, m, Rational::one()));
                        nf.terms()
                            .iter()
                            .map(|(t, c)| (self.index[t], c.clone()))
                            .collect()
                    })
                    .clone()
            })
            .collect()
    }

    /// Matrix of multiplication by variable `v`; column `j` holds the
    /// coordinates of `x_v * basis[j]`.
    pub fn variable_matrix(&self, v: usize) -> DMatrix<Rational> {
        let n = self.dimension();
        let mut m = DMatrix::from_element(n, n, Rational::zero());
        for (j, col) in self.var_matrices[v].iter().enumerate() {
            for (i, c) in col {
                m[(*i, j)] = c.clone();
            }
        }
        m
    }

    fn apply_linear(&self, form: &[Rational], x: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); x.len()];
        for (v, c) in form.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (j, xj) in x.iter().enumerate() {
                if xj.is_zero() {
                    continue;
                }
                let s = c * xj;
                for (i, a) in &self.var_matrices[v][j] {
                    out[*i] += &s * a;
                }
            }
        }
        out
    }

    /// Minimal polynomial of multiplication by the linear form
    /// `sum form[v] * x_v`, monic.
    pub fn minimal_polynomial_linear(&self, form: &[Rational]) -> UniPoly {
        let n = self.dimension();
        let one = self.index[&Monomial::one(self.gb.ring().nvars())];
        let mut v = vec![Rational::zero(); n];
        v[one] = Rational::one();
        // Echelon rows: (reduced vector, pivot, combination of Krylov vectors).
        let mut rows: Vec<(Vec<Rational>, usize, Vec<Rational>)> = Vec::new();
        for k in 0..=n {
            let mut r = v.clone();
            let mut comb = vec![Rational::zero(); k + 1];
            comb[k] = Rational::one();
            for (row, piv, c) in &rows {
                if r[*piv].is_zero() {
                    continue;
                }
                let f = &r[*piv] / &row[*piv];
                for (a, b) in r.iter_mut().zip(row.iter()) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
                for (a, b) in comb.iter_mut().zip(c.iter()) {
                    if !b.is_zero() {
                        *a -= &f * b;
                    }
                }
            }
            match r.iter().position(|c| !c.is_zero()) {
                None => return UniPoly::new(comb).monic(),
                Some(p) => rows.push((r, p, comb)),
            }
            v = self.apply_linear(form, &v);
        }
        unreachable!("Krylov sequence exceeded the dimension")
    }

    /// Generator of `I ∩ Q[x_v]`.
    pub fn eliminant(&self, v: usize) -> UniPoly {
        let mut form = vec![Rational::zero(); self.gb.ring().nvars()];
        form[v] = Rational::one();
        self.minimal_polynomial_linear(&form)
    }

    /// Seidenberg's criterion: radical iff every eliminant is squarefree.
    pub fn radical_certificate(&self) -> RadicalCertificate {
        let nv = self.gb.ring().nvars();
        let mut degs = Vec::with_capacity(nv);
        let mut sqf = Vec::with_capacity(nv);
        for v in 0..nv {
            let e = self.eliminant(v);
            degs.push(e.degree().unwrap_or(0));
            sqf.push(e.is_squarefree());
        }
        RadicalCertificate {
            eliminant_degrees: degs,
            squarefree: sqf,
        }
    }

    /// Approximate the points of a radical ideal from the eigenvectors of
    /// the transposed multiplication matrix of the linear form `form`.
    /// Each left eigenvector is proportional to the evaluation of the
    /// standard monomials at one point. Points come back unpolished; `None`
    /// when the eigenvalue iteration does not converge for this form.
    pub fn numeric_points(&self, form: &[f64]) -> Option<Vec<Vec<Complex64>>> {
        let n = self.dimension();
        let nv = self.gb.ring().nvars();
        if n == 0 {
            return Some(Vec::new());
        }
        let mats: Vec<DMatrix<f64>> = (0..nv)
            .map(|v| {
                let mut m = DMatrix::zeros(n, n);
                for (j, col) in self.var_matrices[v].iter().enumerate() {
                    for (i, c) in col {
                        m[(*i, j)] = rational_to_f64(c);
                    }
                }
                m
            })
            .collect();
        let mut ml = DMatrix::<f64>::zeros(n, n);
        for (v, m) in mats.iter().enumerate() {
            ml += m * form[v];
        }
        let mt = ml.transpose();
        let mtc = mt.map(|x| Complex64::new(x, 0.0));
        let scale = mtc.iter().map(|z| z.norm()).fold(1.0, f64::max);
        // A diagonal shift separates eigenvalues of equal modulus (such as
        // +-lambda), on which the shifted QR iteration can stall.
        let shift = scale * (0.31 + 0.17 * form.iter().sum::<f64>().fract());
        let shifted = &mt + DMatrix::<f64>::identity(n, n) * shift;
        let eig = Schur::try_new(shifted, f64::EPSILON, 200 * n.max(10))?
            .complex_eigenvalues()
            .map(|z| z - shift);
        let mut pts = Vec::with_capacity(n);
        for lam in eig.iter() {
            let w = inverse_iteration(&mtc, *lam, scale);
            let (jmax, _) = w
                .iter()
                .enumerate()
                .max_by(|a, b| a.1.norm().partial_cmp(&b.1.norm()).unwrap())
                .unwrap();
            let pt = mats
                .iter()
                .map(|m| {
                    let mut s = Complex64::zero();
                    for i in 0..n {
                        s += w[i] * m[(i, jmax)];
                    }
                    s / w[jmax]
                })
                .collect();
            pts.push(pt);
        }
        Some(pts)
    }
}

fn inverse_iteration(mt: &DMatrix<Complex64>, lam: Complex64, scale: f64) -> Vec<Complex64> {
    let n = mt.nrows();
    let shift = lam + Complex64::new(scale * 1e-10, scale * 1e-10);
    let a = mt - DMatrix::<Complex64>::identity(n, n) * shift;
    let lu = a.lu();
    let mut w = nalgebra::DVector::from_fn(n, |i, _| {
        Complex64::new(1.0 + (i as f64 * 0.754_877).sin(), (i as f64 * 0.569_840).cos())
    });
    for _ in 0..3 {
        match lu.solve(&w) {
            Some(next) => {
                let nrm = next.norm();
                if !nrm.is_finite() || nrm == 0.0 {
                    break;
                }
                w = next / Complex64::new(nrm, 0.0);
            }
            None => break,
        }
    }
    w.iter().copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{buchberger, int, MonomialOrder, Ring};
    use crate::expr::parse_poly;

    fn quotient(names: &[&str], gens: &[&str]) -> QuotientRing {
        let r = Ring::new(names);
        let gens: Vec<_> = gens.iter().map(|s| parse_poly(s, &r).unwrap()).collect();
        QuotientRing::new(buchberger(&gens, MonomialOrder::DegRevLex).unwrap()).unwrap()
    }

    #[test]
    fn circle_meets_line_in_two_points() {
        let q = quotient(&["x", "y"], &["x^2+y^2-5", "x-2y"]);
        assert_eq!(q.dimension(), 2);
        let cert = q.radical_certificate();
        assert!(cert.is_radical());
        let ex = q.eliminant(1);
        assert_eq!(ex.coeffs(), &[int(-1), int(0), int(1)]);
        let mut pts = q.numeric_points(&[1.0, 0.3]).unwrap();
        pts.sort_by(|a, b| a[0].re.partial_cmp(&b[0].re).unwrap());
        assert!((pts[0][0] - Complex64::new(-2.0, 0.0)).norm() < 1e-9);
        assert!((pts[1][1] - Complex64::new(1.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn double_point_is_not_radical() {
        let q = quotient(&["x", "y"], &["x^2", "y-x"]);
        assert_eq!(q.dimension(), 2);
        let cert = q.radical_certificate();
        assert!(!cert.is_radical());
        assert_eq!(cert.eliminant_degrees, vec![2, 2]);
    }

    #[test]
    fn multiplication_matrices_commute() {
        let q = quotient(&["x", "y"], &["x^3-y", "y^2-x-1"]);
        let (a, b) = (q.variable_matrix(0), q.variable_matrix(1));
        assert_eq!(&a * &b, &b * &a);
        assert!(q.radical_certificate().is_radical());
        assert_eq!(q.numeric_points(&[1.0, -0.7]).unwrap().len(), 6);
    }

    #[test]
    fn positive_dimensional_is_rejected() {
        let r = Ring::new(&["x", "y"]);
        let gb = buchberger(&[parse_poly("xy", &r).unwrap()], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(QuotientRing::new(gb).unwrap_err(), PolyError::NotZeroDimensional);
    }
}
