//! Line enumeration on an arbitrary surface through the six Plücker cells.
//!
//! Every line of P³ lies in exactly one cell, determined by the first
//! non-vanishing Plücker coordinate in the order `p12, p13, p14, p23, p24,
//! p34`. Each cell has an affine parametrization by the remaining free
//! coordinates, so lines on a surface `F = 0` in that cell are the solutions
//! of the `d + 1` equations obtained by restricting `F` to the parametrized
//! line. Counting those solutions exactly (Gröbner basis plus quotient
//! dimension) and summing over cells gives the number of lines.

use std::time::Duration;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::exact::{
    buchberger_with_budget, Budget, MonomialOrder, MultiPoly, PolyError, QuotientDimension,
    QuotientRing, Rational, Ring,
};
use crate::line::{sort_lines, Line3};
use crate::numeric::{gauss_newton, FloatPoly};
use crate::surface::SurfaceForm;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum PluckerError {
    #[error("surface is singular")]
    Singular,
    #[error("stratum {stratum} contains a positive-dimensional family of lines")]
    PositiveDimensional { stratum: u8 },
    #[error("stratum {stratum}: {source}")]
    Stratum {
        stratum: u8,
        #[source]
        source: PolyError,
    },
    #[error("smoothness check: {0}")]
    Smoothness(#[source] PolyError),
    #[error("stratum {0}: eigenvalue iteration did not converge for any random form")]
    Eigen(u8),
    #[error("stratum index {0} is outside 1..=6")]
    BadStratum(u8),
}

/// One affine cell of the Grassmannian. `params` are the free Plücker
/// coordinates; `columns` returns the two spanning points as linear
/// polynomials in those parameters.
#[derive(Clone, Copy, Debug)]
pub struct Stratum {
    pub index: u8,
    pub params: &'static [&'static str],
    /// Which Plücker coordinates are fixed to 0 and which to 1.
    pub description: &'static str,
}

pub const STRATA: [Stratum; 6] = [
    Stratum {
        index: 1,
        params: &["p23", "p24", "p13", "p14"],
        description: "p12=1",
    },
    Stratum {
        index: 2,
        params: &["p23", "p34", "p14"],
        description: "p12=0, p13=1",
    },
    Stratum {
        index: 3,
        params: &["p24", "p34"],
        description: "p12=p13=0, p14=1",
    },
    Stratum {
        index: 4,
        params: &["p34", "p24"],
        description: "p12=p13=p14=0, p23=1",
    },
    Stratum {
        index: 5,
        params: &["p34"],
        description: "p12=p13=p14=p23=0, p24=1",
    },
    Stratum {
        index: 6,
        params: &[],
        description: "p12=p13=p14=p23=p24=0, p34=1",
    },
];

/// Column entries of a stratum matrix: a constant or `±param[k]`.
#[derive(Clone, Copy)]
enum Entry {
    Zero,
    One,
    Param(usize),
    NegParam(usize),
}

fn stratum_columns(k: u8) -> [[Entry; 4]; 2] {
    use Entry::*;
    match k {
        1 => [[One, Zero, NegParam(0), NegParam(1)], [Zero, One, Param(2), Param(3)]],
        2 => [[One, Param(0), Zero, NegParam(1)], [Zero, Zero, One, Param(2)]],
        3 => [[One, Param(0), Param(1), Zero], [Zero, Zero, Zero, One]],
        4 => [[Zero, One, Zero, NegParam(0)], [Zero, Zero, One, Param(1)]],
        5 => [[Zero, One, Param(0), Zero], [Zero, Zero, Zero, One]],
        6 => [[Zero, Zero, One, Zero], [Zero, Zero, Zero, One]],
        _ => unreachable!(),
    }
}

fn entry_value(e: Entry, x: &[Complex64]) -> Complex64 {
    match e {
        Entry::Zero => Complex64::new(0.0, 0.0),
        Entry::One => Complex64::new(1.0, 0.0),
        Entry::Param(i) => x[i],
        Entry::NegParam(i) => -x[i],
    }
}

/// The line of stratum `k` with parameter values `x`.
pub fn stratum_line(k: u8, x: &[Complex64]) -> Line3 {
    let cols = stratum_columns(k);
    let a = cols[0].map(|e| entry_value(e, x));
    let b = cols[1].map(|e| entry_value(e, x));
    Line3::from_points(a, b).expect("stratum matrices have rank 2")
}

#[derive(Clone, Debug)]
pub struct StratumSystem {
    pub stratum: u8,
    pub ring: Ring,
    /// `equations[i]` is the coefficient of `u^i v^(d-i)`.
    pub equations: Vec<MultiPoly>,
}

pub fn build_stratum_system(s: &SurfaceForm, k: u8) -> Result<StratumSystem, PluckerError> {
    if !(1..=6).contains(&k) {
        return Err(PluckerError::BadStratum(k));
    }
    let params = STRATA[k as usize - 1].params;
    let mut names = vec!["u", "v"];
    names.extend_from_slice(params);
    let big = Ring::new(&names);
    let ring = Ring::new(params);
    let cols = stratum_columns(k);
    let lift = |e: Entry| match e {
        Entry::Zero => MultiPoly::zero(&big),
        Entry::One => MultiPoly::one(&big),
        Entry::Param(i) => MultiPoly::var(&big, i + 2),
        Entry::NegParam(i) => -MultiPoly::var(&big, i + 2),
    };
    let u = MultiPoly::var(&big, 0);
    let v = MultiPoly::var(&big, 1);
    let subs: Vec<MultiPoly> = (0..4)
        .map(|i| &(&u * &lift(cols[0][i])) + &(&v * &lift(cols[1][i])))
        .collect();
    let restricted = s.poly().substitute(&subs).expect("four substitutions");
    let d = s.degree() as usize;
    let mut buckets: Vec<Vec<(crate::exact::Monomial, Rational)>> = vec![Vec::new(); d + 1];
    let map: Vec<usize> = (0..params.len()).collect();
    for (m, c) in restricted.terms() {
        let i = m.exponent(0) as usize;
        let rest = crate::exact::Monomial::from_exponents(&m.exponents()[2..]);
        buckets[i].push((rest.remap(params.len(), &map), c.clone()));
    }
    let equations = buckets
        .into_iter()
        .map(|t| MultiPoly::from_terms(&ring, t))
        .collect();
    Ok(StratumSystem {
        stratum: k,
        ring,
        equations,
    })
}

#[derive(Clone, Debug)]
pub struct StratumCount {
    pub stratum: u8,
    /// Quotient dimension: the number of solutions counted with multiplicity.
    pub count: usize,
    /// Every eliminant is squarefree, so `count` is the number of distinct lines.
    pub certified_reduced: bool,
    pub eliminant_degrees: Vec<usize>,
    pub pairs_processed: u64,
    pub basis_size: usize,
    pub elapsed: Duration,
    quotient: Option<QuotientRing>,
}

impl StratumCount {
    pub fn quotient(&self) -> Option<&QuotientRing> {
        self.quotient.as_ref()
    }
}

pub fn count_stratum(sys: &StratumSystem, budget: Budget) -> Result<StratumCount, PluckerError> {
    let k = sys.stratum;
    let gens: Vec<MultiPoly> = sys.equations.iter().filter(|e| !e.is_zero()).cloned().collect();
    let trivial = |count: usize| StratumCount {
        stratum: k,
        count,
        certified_reduced: true,
        eliminant_degrees: Vec::new(),
        pairs_processed: 0,
        basis_size: 0,
        elapsed: Duration::ZERO,
        quotient: None,
    };
    if gens.is_empty() {
        return if sys.ring.nvars() == 0 {
            Ok(trivial(1))
        } else {
            Err(PluckerError::PositiveDimensional { stratum: k })
        };
    }
    let (gb, stats) = buchberger_with_budget(&gens, MonomialOrder::DegRevLex, budget)
        .map_err(|source| PluckerError::Stratum { stratum: k, source })?;
    let mut out = trivial(0);
    out.pairs_processed = stats.pairs_processed;
    out.basis_size = gb.generators().len();
    if gb.is_unit() {
        out.elapsed = stats.elapsed;
        return Ok(out);
    }
    match gb.quotient_dimension() {
        QuotientDimension::Infinite => Err(PluckerError::PositiveDimensional { stratum: k }),
        QuotientDimension::Finite(n) => {
            let q = QuotientRing::new(gb)
                .map_err(|source| PluckerError::Stratum { stratum: k, source })?;
            let cert = q.radical_certificate();
            out.count = n;
            out.certified_reduced = cert.is_radical();
            out.eliminant_degrees = cert.eliminant_degrees;
            out.elapsed = stats.elapsed;
            out.quotient = Some(q);
            Ok(out)
        }
    }
}

/// Numeric coordinates of the lines counted in one stratum. Points are read
/// off the eigenvectors of a random multiplication matrix and polished by
/// Gauss–Newton on the stratum equations.
pub fn stratum_lines(sys: &StratumSystem, count: &StratumCount, seed: u64) -> Result<Vec<Line3>, PluckerError> {
    let k = sys.stratum;
    if count.count == 0 {
        return Ok(Vec::new());
    }
    let Some(q) = count.quotient() else {
        // No parameters: the single fixed line of the cell.
        return Ok(vec![stratum_line(k, &[])]);
    };
    let nv = sys.ring.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (k as u64).wrapping_mul(0x9e37_79b9));
    let points = (0..8)
        .find_map(|_| {
            let form: Vec<f64> = (0..nv).map(|_| rng.random_range(0.5..1.5)).collect();
            q.numeric_points(&form)
        })
        .ok_or(PluckerError::Eigen(k))?;
    let system: Vec<FloatPoly> = sys
        .equations
        .iter()
        .filter(|e| !e.is_zero())
        .map(FloatPoly::from_multi)
        .collect();
    let mut lines: Vec<Line3> = points
        .into_iter()
        .map(|p| {
            let (x, _) = gauss_newton(&system, &p, 8);
            stratum_line(k, &x)
        })
        .collect();
    sort_lines(&mut lines);
    Ok(lines)
}

/// Jacobian criterion: the partial derivatives have only the origin as a
/// common zero iff their Gröbner basis has a pure power of each variable
/// among its leading monomials.
pub fn is_smooth(s: &SurfaceForm, budget: Budget) -> Result<bool, PolyError> {
    let partials: Vec<MultiPoly> = (0..4).map(|v| s.poly().derivative(v)).collect();
    if partials.iter().all(|p| p.is_zero()) {
        return Ok(false);
    }
    let (gb, _) = buchberger_with_budget(&partials, MonomialOrder::DegRevLex, budget)?;
    Ok(!matches!(gb.quotient_dimension(), QuotientDimension::Infinite))
}

#[derive(Clone, Debug)]
pub struct CountOptions {
    pub budget: Budget,
    pub check_smooth: bool,
    pub emit: bool,
    pub seed: u64,
}

impl Default for CountOptions {
    fn default() -> Self {
        CountOptions {
            budget: Budget::default(),
            check_smooth: true,
            emit: false,
            seed: 0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct LineCount {
    pub total: usize,
    /// Indexed by stratum, 1 first.
    pub strata: Vec<StratumCount>,
    pub certified_reduced: bool,
    pub lines: Option<Vec<Line3>>,
}

/// Count (and optionally emit) all lines on `s`. Strata are solved in
/// parallel, cheapest first; results are merged by stratum index.
pub fn count_lines(s: &SurfaceForm, opts: &CountOptions) -> Result<LineCount, PluckerError> {
    if opts.check_smooth && !is_smooth(s, opts.budget).map_err(PluckerError::Smoothness)? {
        return Err(PluckerError::Singular);
    }
    let results: Vec<Result<(StratumCount, Vec<Line3>), PluckerError>> = (1..=6u8)
        .rev()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|k| {
            let sys = build_stratum_system(s, k)?;
            let c = count_stratum(&sys, opts.budget)?;
            let lines = if opts.emit {
                stratum_lines(&sys, &c, opts.seed)?
            } else {
                Vec::new()
            };
            Ok((c, lines))
        })
        .collect();
    let mut strata = Vec::with_capacity(6);
    let mut lines = Vec::new();
    for r in results.into_iter().rev() {
        let (c, l) = r?;
        strata.push(c);
        lines.extend(l);
    }
    let total = strata.iter().map(|c| c.count).sum();
    let certified_reduced = strata.iter().all(|c| c.certified_reduced);
    Ok(LineCount {
        total,
        strata,
        certified_reduced,
        lines: opts.emit.then_some(lines),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse_poly;

    fn surf(s: &str) -> SurfaceForm {
        SurfaceForm::parse(s).unwrap()
    }

    #[test]
    fn stratum_minors_match_their_labels() {
        let x: Vec<Complex64> = [0.3, -1.7, 2.2, 0.9]
            .iter()
            .map(|&r| Complex64::new(r, 0.1))
            .collect();
        let expect = |k: u8| -> [Option<Complex64>; 6] {
            let one = Some(Complex64::new(1.0, 0.0));
            let zero = Some(Complex64::new(0.0, 0.0));
            match k {
                1 => [one, Some(x[2]), Some(x[3]), Some(x[0]), Some(x[1]), None],
                2 => [zero, one, Some(x[2]), Some(x[0]), None, Some(x[1])],
                3 => [zero, zero, one, None, Some(x[0]), Some(x[1])],
                4 => [zero, zero, zero, one, Some(x[1]), Some(x[0])],
                5 => [zero, zero, zero, zero, one, Some(x[0])],
                _ => [zero, zero, zero, zero, zero, one],
            }
        };
        for k in 1..=6u8 {
            let cols = stratum_columns(k);
            let a = cols[0].map(|e| entry_value(e, &x));
            let b = cols[1].map(|e| entry_value(e, &x));
            let minors: Vec<Complex64> = crate::line::PLUCKER_PAIRS
                .iter()
                .map(|&(i, j)| a[i] * b[j] - a[j] * b[i])
                .collect();
            for (m, e) in minors.iter().zip(expect(k).iter()) {
                if let Some(e) = e {
                    assert!((m - e).norm() < 1e-12, "stratum {k}: {m} vs {e}");
                }
            }
        }
    }

    #[test]
    fn equation_count_is_degree_plus_one() {
        let s = surf("x^3+y^3+z^3+t^3");
        for k in 1..=6 {
            let sys = build_stratum_system(&s, k).unwrap();
            assert_eq!(sys.equations.len(), 4);
        }
        let sys6 = build_stratum_system(&s, 6).unwrap();
        // F(0, 0, u, v) = u^3 + v^3
        assert!(sys6.equations[0].is_constant() && !sys6.equations[0].is_zero());
    }

    #[test]
    fn fermat_cubic_has_27_lines() {
        let s = surf("x^3+y^3+z^3+t^3");
        let opts = CountOptions {
            emit: true,
            ..Default::default()
        };
        let res = count_lines(&s, &opts).unwrap();
        assert_eq!(res.total, 27);
        assert!(res.certified_reduced);
        let lines = res.lines.unwrap();
        assert_eq!(lines.len(), 27);
        for l in &lines {
            assert!(s.line_residual(l) < 1e-10);
            assert!(l.plucker_residual() < 1e-10);
        }
        assert_eq!(crate::line::count_duplicates(&lines, 1e-6), 0);
    }

    #[test]
    fn count_invariant_under_coordinate_permutation() {
        let base = "x^3+2y^3-z^3+t^3 + xyz";
        let ring = crate::surface::surface_ring();
        let p = parse_poly(base, &ring).unwrap();
        let vars: Vec<MultiPoly> = [2usize, 0, 3, 1].iter().map(|&i| MultiPoly::var(&ring, i)).collect();
        let q = p.substitute(&vars).unwrap();
        let opts = CountOptions::default();
        let a = count_lines(&SurfaceForm::new(p).unwrap(), &opts).unwrap();
        let b = count_lines(&SurfaceForm::new(q).unwrap(), &opts).unwrap();
        assert_eq!(a.total, 27);
        assert_eq!(a.total, b.total);
    }

    #[test]
    fn smoothness() {
        assert!(is_smooth(&surf("x^4-y^4-z^4+t^4"), Budget::default()).unwrap());
        assert!(!is_smooth(&surf("x^2y^2-z^4+t^4"), Budget::default()).unwrap());
        let err = count_lines(&surf("x^2y^2-z^4+t^4"), &CountOptions::default()).unwrap_err();
        assert_eq!(err, PluckerError::Singular);
    }
}
