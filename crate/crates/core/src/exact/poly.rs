use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::{PolyError, Rational};
use crate::numeric::rational_to_f64;

/// Ordered list of variable names. Variables are addressed by index; names are
/// only used for parsing and printing.
#[derive(Clone)]
pub struct Ring {
    names: Arc<[String]>,
}

impl Ring {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Self {
        Ring {
            names: names.iter().map(|s| s.as_ref().to_string()).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, var: usize) -> &str {
        &self.names[var]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.names, &other.names) || self.names == other.names
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring{:?}", &self.names[..])
    }
}

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted descending in degree-reverse-lexicographic order with
/// no zero coefficients, so structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

const STORAGE_ORDER: MonomialOrder = MonomialOrder::DegRevLex;

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly {
            ring: ring.clone(),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((Monomial::one(ring.nvars()), c));
        }
        p
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn var(ring: &Ring, var: usize) -> Self {
        Self::monomial(ring, Monomial::var_power(ring.nvars(), var, 1), Rational::one())
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
        let mut p = Self::zero(ring);
        if !c.is_zero() {
            p.terms.push((m, c));
        }
        p
    }

    /// Build from arbitrary terms; duplicates are merged and zeros dropped.
    pub fn from_terms<I>(ring: &Ring, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(m.nvars(), ring.nvars(), "monomial arity does not match ring");
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms
            .windows(2)
            .all(|w| STORAGE_ORDER.cmp(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly {
            ring: ring.clone(),
            terms,
        }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// Terms in descending degrevlex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    /// Total degree; `None` stands for the degree of the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u16> {
        self.terms.iter().map(|(m, _)| m.exponent(var)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => {
                let d = m0.degree();
                self.terms.iter().all(|(m, _)| m.degree() == d)
            }
        }
    }

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(x, _)| STORAGE_ORDER.cmp(m, x))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Leading monomial and coefficient with respect to `order`.
    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&Monomial, &Rational)> {
        if order == STORAGE_ORDER {
            return self.terms.first().map(|(m, c)| (m, c));
        }
        self.terms
            .iter()
            .max_by(|a, b| order.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    /// Terms sorted descending in `order`.
    pub fn sorted_terms(&self, order: MonomialOrder) -> Vec<(Monomial, Rational)> {
        let mut t = self.terms.clone();
        if order != STORAGE_ORDER {
            t.sort_by(|a, b| order.cmp(&b.0, &a.0));
        }
        t
    }

    pub fn variables_used(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&v| self.terms.iter().any(|(m, _)| m.exponent(v) > 0))
            .collect()
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch {
                left: self.ring.names().to_vec(),
                right: other.ring.names().to_vec(),
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_ring(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ord = if i == self.terms.len() {
                Ordering::Less
            } else if j == other.terms.len() {
                Ordering::Greater
            } else {
                STORAGE_ORDER.cmp(&self.terms[i].0, &other.terms[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let (m, c) = &other.terms[j];
                    out.push((m.clone(), if negate { -c } else { c.clone() }));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &self.terms[i].1 - &other.terms[j].1
                    } else {
                        &self.terms[i].1 + &other.terms[j].1
                    };
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        MultiPoly::from_sorted_terms(&self.ring, out)
    }

    fn mul_unchecked(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| STORAGE_ORDER.cmp(&b.0, &a.0));
        MultiPoly::from_sorted_terms(&self.ring, terms)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        MultiPoly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(x, a)| (x.mul(m), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    /// Simultaneous substitution `x_i -> assignments[i]`. All assignments must
    /// live in one common target ring, which becomes the ring of the result.
    pub fn substitute(&self, assignments: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if assignments.len() != self.nvars() {
            return Err(PolyError::ArityMismatch {
                expected: self.nvars(),
                found: assignments.len(),
            });
        }
        let target = match assignments.first() {
            Some(a) => a.ring.clone(),
            None => return Ok(self.clone()),
        };
        for a in assignments {
            if a.ring != target {
                return Err(PolyError::RingMismatch {
                    left: target.names().to_vec(),
                    right: a.ring.names().to_vec(),
                });
            }
        }
        let mut powers: Vec<Vec<MultiPoly>> = assignments
            .iter()
            .map(|a| vec![MultiPoly::one(&target), a.clone()])
            .collect();
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            let mut term = MultiPoly::constant(&target, c.clone());
            for (v, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut powers[v];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul_unchecked(&cache[1]);
                    cache.push(next);
                }
                term = term.mul_unchecked(&cache[e as usize]);
            }
            for (tm, tc) in term.terms {
                *acc.entry(tm).or_insert_with(Rational::zero) += tc;
            }
        }
        Ok(MultiPoly::from_terms(&target, acc))
    }

    /// Re-express in another ring through a variable map: variable `i` of
    /// `self` becomes variable `map[i]` of `target`.
    pub fn remap(&self, target: &Ring, map: &[usize]) -> MultiPoly {
        assert_eq!(map.len(), self.nvars());
        MultiPoly::from_terms(
            target,
            self.terms
                .iter()
                .map(|(m, c)| (m.remap(target.nvars(), map), c.clone())),
        )
    }

    pub fn derivative(&self, var: usize) -> MultiPoly {
        let terms = self.terms.iter().filter_map(|(m, c)| {
            let e = m.exponent(var);
            if e == 0 {
                return None;
            }
            let mut m2 = m.clone();
            m2.set_exponent(var, e - 1);
            Some((m2, c * Rational::from_integer(BigInt::from(e))))
        });
        MultiPoly::from_terms(&self.ring, terms)
    }

    pub fn eval(&self, point: &[Rational]) -> Rational {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= num_traits::pow(point[v].clone(), e as usize);
                }
            }
            acc += t;
        }
        acc
    }

    pub fn eval_complex(&self, point: &[Complex64]) -> Complex64 {
        assert_eq!(point.len(), self.nvars());
        let mut acc = Complex64::zero();
        for (m, c) in &self.terms {
            let mut t = Complex64::new(rational_to_f64(c), 0.0);
            for (v, &e) in m.exponents().iter().enumerate() {
                if e > 0 {
                    t *= point[v].powu(e as u32);
                }
            }
            acc += t;
        }
        acc
    }

    /// Coefficients converted to `f64`, in storage order.
    pub fn float_terms(&self) -> Vec<(Monomial, f64)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.clone(), rational_to_f64(c)))
            .collect()
    }

    /// Sum of absolute values of the coefficients.
    pub fn norm1(&self) -> f64 {
        self.terms.iter().map(|(_, c)| rational_to_f64(c).abs()).sum()
    }

    /// Divide by the leading coefficient with respect to `order`.
    pub fn monic(&self, order: MonomialOrder) -> MultiPoly {
        match self.leading_term(order) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.scale(&inv)
            }
        }
    }

    /// Positive rational `c` with `self = c * p`, `p` having coprime integer
    /// coefficients and positive leading coefficient in storage order.
    pub fn content(&self) -> Rational {
        let mut num_gcd = BigInt::zero();
        let mut den_lcm = BigInt::one();
        for (_, c) in &self.terms {
            num_gcd = num_gcd.gcd(c.numer());
            den_lcm = den_lcm.lcm(c.denom());
        }
        if num_gcd.is_zero() {
            return Rational::one();
        }
        let mut c = Rational::new(num_gcd, den_lcm);
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        c
    }

    /// Primitive integer multiple (see [`MultiPoly::content`]).
    pub fn primitive(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.content().recip())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::expr::print_poly(self))
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_add(rhs).expect("ring mismatch in +")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_sub(rhs).expect("ring mismatch in -")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.try_mul(rhs).expect("ring mismatch in *")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}
