use std::sync::Arc;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{MultiPoly, Ring};
use super::{PolyError, Rational};

/// Limits for a single Buchberger run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of S-pairs that may be reduced.
    pub max_pair_reductions: u64,
    pub wall_clock: Option<Duration>,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_pair_reductions: 1_000_000,
            wall_clock: None,
        }
    }
}

impl Budget {
    pub fn pairs(max_pair_reductions: u64) -> Self {
        Budget {
            max_pair_reductions,
            wall_clock: None,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pairs_processed: u64,
    pub zero_reductions: u64,
    pub max_basis_size: usize,
    pub elapsed: Duration,
}

/// Number of standard monomials of a zero-dimensional ideal, or `Infinite`
/// when some variable has no pure power among the leading monomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QuotientDimension {
    Finite(usize),
    Infinite,
}

impl QuotientDimension {
    pub fn finite(self) -> Option<usize> {
        match self {
            QuotientDimension::Finite(n) => Some(n),
            QuotientDimension::Infinite => None,
        }
    }
}

/// Integer polynomial with terms sorted descending in the engine's order.
/// The leading coefficient is positive and the content is 1.
#[derive(Clone, Debug)]
pub(crate) struct IPoly {
    pub(crate) terms: Vec<(Monomial, BigInt)>,
    sugar: u32,
}

impl IPoly {
    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }

    /// Primitive integer form of `p` sorted for `order`, with the rational
    /// factor `c` such that `p = c * result`.
    fn from_poly(p: &MultiPoly, order: MonomialOrder) -> (IPoly, Rational) {
        let mut den = BigInt::one();
        for (_, c) in p.terms() {
            den = den.lcm(c.denom());
        }
        let mut terms: Vec<(Monomial, BigInt)> = p
            .sorted_terms(order)
            .into_iter()
            .map(|(m, c)| {
                let v = c.numer() * (&den / c.denom());
                (m, v)
            })
            .collect();
        let sugar = p.total_degree().unwrap_or(0);
        let mut g = BigInt::zero();
        for (_, c) in &terms {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        if terms.first().map(|t| t.1.is_negative()).unwrap_or(false) {
            g = -g;
        }
        if !g.is_zero() && !g.is_one() {
            for t in terms.iter_mut() {
                t.1 = &t.1 / &g;
            }
        }
        let factor = if g.is_zero() {
            Rational::one()
        } else {
            Rational::new(g, den)
        };
        (IPoly { terms, sugar }, factor)
    }

    fn to_monic(&self, ring: &Ring) -> MultiPoly {
        let lc = self.lc().clone();
        MultiPoly::from_terms(
            ring,
            self.terms
                .iter()
                .map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone()))),
        )
    }
}

fn content_of<'a, I: Iterator<Item = &'a BigInt>>(it: I) -> BigInt {
    let mut g = BigInt::zero();
    for c in it {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Reduce only until the leading term is irreducible.
    Top,
    /// Reduce every term.
    Full,
    /// Keep the leading term, reduce all others.
    Tail,
}

struct Reduced {
    /// Descending order.
    terms: Vec<(Monomial, BigInt)>,
    /// `scale * input ≡ terms` modulo the reducers.
    scale: Rational,
    sugar: u32,
}

/// Fraction-free multivariate division.
fn reduce_terms(
    terms: Vec<(Monomial, BigInt)>,
    mut sugar: u32,
    reducers: &[&IPoly],
    order: MonomialOrder,
    mode: Mode,
) -> Reduced {
    let mut rest = terms;
    rest.reverse();
    let mut done: Vec<(Monomial, BigInt)> = Vec::new();
    let mut scale = Rational::one();
    let mut steps = 0usize;
    if mode == Mode::Tail {
        if let Some(t) = rest.pop() {
            done.push(t);
        }
    }
    while let Some((m, _)) = rest.last() {
        let mut best: Option<(&IPoly, Monomial)> = None;
        for g in reducers {
            if let Some(q) = g.lm().quotient_of(m) {
                let better = match &best {
                    None => true,
                    Some((b, _)) => g.terms.len() < b.terms.len(),
                };
                if better {
                    best = Some((g, q));
                }
            }
        }
        let Some((g, q)) = best else {
            if mode == Mode::Top {
                break;
            }
            done.push(rest.pop().unwrap());
            continue;
        };
        let (_, c) = rest.pop().unwrap();
        let lc = g.lc();
        let gcd = c.gcd(lc);
        let a = &c / &gcd;
        let b = lc / &gcd;
        if !b.is_one() {
            for t in rest.iter_mut() {
                t.1 *= &b;
            }
            for t in done.iter_mut() {
                t.1 *= &b;
            }
            scale *= Rational::from_integer(b);
        }
        sugar = sugar.max(g.sugar + q.degree());
        rest = merge_sub_ascending(rest, &g.terms[1..], &q, &a, order);
        steps += 1;
        if steps % 4 == 0 {
            let k = content_of(rest.iter().chain(done.iter()).map(|t| &t.1));
            if !k.is_zero() && !k.is_one() {
                for t in rest.iter_mut().chain(done.iter_mut()) {
                    t.1 = &t.1 / &k;
                }
                scale /= Rational::from_integer(k);
            }
        }
    }
    rest.reverse();
    done.extend(rest);
    Reduced {
        terms: done,
        scale,
        sugar,
    }
}

/// `rest - a * q * tail`, where `rest` is ascending and `tail` descending.
fn merge_sub_ascending(
    rest: Vec<(Monomial, BigInt)>,
    tail: &[(Monomial, BigInt)],
    q: &Monomial,
    a: &BigInt,
    order: MonomialOrder,
) -> Vec<(Monomial, BigInt)> {
    let mut out = Vec::with_capacity(rest.len() + tail.len());
    let mut left = rest.into_iter().peekable();
    let mut right = tail.iter().rev().map(|(m, c)| (q.mul(m), c)).peekable();
    loop {
        let ord = match (left.peek(), right.peek()) {
            (None, None) => break,
            (Some(_), None) => std::cmp::Ordering::Less,
            (None, Some(_)) => std::cmp::Ordering::Greater,
            (Some(l), Some(r)) => order.cmp(&l.0, &r.0),
        };
        match ord {
            std::cmp::Ordering::Less => out.push(left.next().unwrap()),
            std::cmp::Ordering::Greater => {
                let (m, c) = right.next().unwrap();
                out.push((m, -(a * c)));
            }
            std::cmp::Ordering::Equal => {
                let (m, mut c) = left.next().unwrap();
                let (_, rc) = right.next().unwrap();
                c -= a * rc;
                if !c.is_zero() {
                    out.push((m, c));
                }
            }
        }
    }
    out
}

fn make_primitive(terms: &mut Vec<(Monomial, BigInt)>) {
    let mut g = content_of(terms.iter().map(|t| &t.1));
    if g.is_zero() {
        return;
    }
    if terms[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for t in terms.iter_mut() {
            t.1 = &t.1 / &g;
        }
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

struct Engine {
    order: MonomialOrder,
    polys: Vec<IPoly>,
    /// Indices of the current (minimal) basis.
    basis: Vec<usize>,
    pairs: Vec<Pair>,
}

impl Engine {
    fn make_pair(&self, i: usize, j: usize) -> Pair {
        let (fi, fj) = (&self.polys[i], &self.polys[j]);
        let lcm = fi.lm().lcm(fj.lm());
        let d = lcm.degree();
        let sugar = (fi.sugar + d - fi.lm().degree()).max(fj.sugar + d - fj.lm().degree());
        Pair { i, j, lcm, sugar }
    }

    /// Gebauer–Möller installation of a new basis element.
    fn update(&mut self, h: usize) {
        let h_lm = self.polys[h].lm().clone();
        let mut candidates: Vec<(usize, Monomial, bool)> = self
            .basis
            .iter()
            .map(|&g| {
                let lm = self.polys[g].lm();
                (g, h_lm.lcm(lm), h_lm.is_coprime(lm))
            })
            .collect();
        let mut kept: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, coprime)) = candidates.pop() {
            let dominated = !coprime
                && (candidates.iter().any(|(_, l2, _)| l2.divides(&l1))
                    || kept.iter().any(|(_, l2, _)| l2.divides(&l1)));
            if !dominated {
                kept.push((g1, l1, coprime));
            }
        }
        let polys = &self.polys;
        self.pairs.retain(|p| {
            if !h_lm.divides(&p.lcm) {
                return true;
            }
            let li = polys[p.i].lm().lcm(&h_lm);
            let lj = polys[p.j].lm().lcm(&h_lm);
            li == p.lcm || lj == p.lcm
        });
        kept.reverse();
        for (g, _, coprime) in kept {
            if !coprime {
                let pair = self.make_pair(g, h);
                self.pairs.push(pair);
            }
        }
        self.basis
            .retain(|&g| !h_lm.divides(polys[g].lm()));
        self.basis.push(h);
    }

    fn select_pair(&mut self) -> Option<Pair> {
        let idx = (0..self.pairs.len()).min_by(|&a, &b| {
            let (pa, pb) = (&self.pairs[a], &self.pairs[b]);
            pa.sugar
                .cmp(&pb.sugar)
                .then_with(|| self.order.cmp(&pa.lcm, &pb.lcm))
                .then_with(|| (pa.j, pa.i).cmp(&(pb.j, pb.i)))
        })?;
        Some(self.pairs.swap_remove(idx))
    }

    fn s_poly(&self, p: &Pair) -> (Vec<(Monomial, BigInt)>, u32) {
        let (fi, fj) = (&self.polys[p.i], &self.polys[p.j]);
        let qi = fi.lm().quotient_of(&p.lcm).unwrap();
        let qj = fj.lm().quotient_of(&p.lcm).unwrap();
        let g = fi.lc().gcd(fj.lc());
        let ci = fj.lc() / &g;
        let cj = fi.lc() / &g;
        let mut left: Vec<(Monomial, BigInt)> = fi.terms[1..]
            .iter()
            .rev()
            .map(|(m, c)| (qi.mul(m), c * &ci))
            .collect();
        if left.is_empty() && fj.terms.len() == 1 {
            return (Vec::new(), p.sugar);
        }
        left = merge_sub_ascending(left, &fj.terms[1..], &qj, &cj, self.order);
        left.reverse();
        (left, p.sugar)
    }

    fn reducers(&self) -> Vec<&IPoly> {
        self.basis.iter().map(|&i| &self.polys[i]).collect()
    }
}

/// Reduced Gröbner basis; generators are monic and sorted by leading
/// monomial, ascending.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    generators: Vec<MultiPoly>,
    internal: Arc<Vec<IPoly>>,
}

impl GroebnerBasis {
    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.internal.iter().map(|p| p.lm().clone()).collect()
    }

    /// True when the ideal is the whole ring (no common zeros).
    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_constant()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.internal.iter().any(|g| g.lm().divides(m))
    }

    /// Normal form of `p` with respect to this basis.
    pub fn reduce(&self, p: &MultiPoly) -> MultiPoly {
        let reducers: Vec<&IPoly> = self.internal.iter().collect();
        normal_form_internal(p, &reducers, self.order)
    }

    pub fn contains(&self, p: &MultiPoly) -> bool {
        self.reduce(p).is_zero()
    }

    /// Standard monomials in ascending order, or `None` if there are
    /// infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        let n = self.ring.nvars();
        let lms = self.leading_monomials();
        for v in 0..n {
            if !lms.iter().any(|m| matches!(m.pure_power(), Some((w, _)) if w == v)) {
                if !lms.iter().any(|m| m.is_one()) {
                    return None;
                }
            }
        }
        let mut out = Vec::new();
        let mut cur = Monomial::one(n);
        self.collect_standard(&lms, &mut cur, 0, &mut out);
        out.sort_by(|a, b| self.order.cmp(a, b));
        Some(out)
    }

    fn collect_standard(
        &self,
        lms: &[Monomial],
        cur: &mut Monomial,
        var: usize,
        out: &mut Vec<Monomial>,
    ) {
        if var == cur.nvars() {
            out.push(cur.clone());
            return;
        }
        let mut e = 0u16;
        loop {
            cur.set_exponent(var, e);
            if lms.iter().any(|m| m.divides(cur)) {
                break;
            }
            self.collect_standard(lms, cur, var + 1, out);
            e += 1;
        }
        cur.set_exponent(var, 0);
    }

    pub fn quotient_dimension(&self) -> QuotientDimension {
        match self.standard_monomials() {
            Some(v) => QuotientDimension::Finite(v.len()),
            None => QuotientDimension::Infinite,
        }
    }
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.generators == other.generators
    }
}

/// Number of standard monomials of `g`.
pub fn quotient_dimension(g: &GroebnerBasis) -> QuotientDimension {
    g.quotient_dimension()
}

fn normal_form_internal(p: &MultiPoly, reducers: &[&IPoly], order: MonomialOrder) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    let (ip, factor) = IPoly::from_poly(p, order);
    let red = reduce_terms(ip.terms, ip.sugar, reducers, order, Mode::Full);
    let k = factor / red.scale;
    MultiPoly::from_terms(
        p.ring(),
        red.terms
            .into_iter()
            .map(|(m, c)| (m, Rational::from_integer(c) * &k)),
    )
}

/// Remainder of multivariate division of `p` by `g` (unique when `g` is a
/// Gröbner basis for `order`).
pub fn normal_form(p: &MultiPoly, g: &[MultiPoly], order: MonomialOrder) -> MultiPoly {
    let internal: Vec<IPoly> = g
        .iter()
        .filter(|q| !q.is_zero())
        .map(|q| IPoly::from_poly(q, order).0)
        .collect();
    let refs: Vec<&IPoly> = internal.iter().collect();
    normal_form_internal(p, &refs, order)
}

/// S-polynomial `lcm/lt(f) * f - lcm/lt(g) * g` with rational leading terms.
pub fn s_polynomial(f: &MultiPoly, g: &MultiPoly, order: MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term(order).expect("zero polynomial");
    let (mg, cg) = g.leading_term(order).expect("zero polynomial");
    let l = mf.lcm(mg);
    let qf = mf.quotient_of(&l).unwrap();
    let qg = mg.quotient_of(&l).unwrap();
    &f.mul_monomial(&qf, &cf.recip()) - &g.mul_monomial(&qg, &cg.recip())
}

/// Reduced Gröbner basis with the default [`Budget`].
pub fn buchberger(gens: &[MultiPoly], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    buchberger_with_budget(gens, order, Budget::default()).map(|(g, _)| g)
}

/// Buchberger's algorithm with the normal selection strategy (sugar degree,
/// then lcm), Gebauer–Möller pair pruning and primitive integer
/// coefficients.
pub fn buchberger_with_budget(
    gens: &[MultiPoly],
    order: MonomialOrder,
    budget: Budget,
) -> Result<(GroebnerBasis, GroebnerStats), PolyError> {
    let start = Instant::now();
    let ring = match gens.first() {
        Some(g) => g.ring().clone(),
        None => return Err(PolyError::ZeroPolynomial),
    };
    for g in gens {
        if *g.ring() != ring {
            return Err(PolyError::RingMismatch {
                left: ring.names().to_vec(),
                right: g.ring().names().to_vec(),
            });
        }
    }
    let mut stats = GroebnerStats::default();
    let mut engine = Engine {
        order,
        polys: Vec::new(),
        basis: Vec::new(),
        pairs: Vec::new(),
    };

    let mut inputs: Vec<IPoly> = gens
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| IPoly::from_poly(g, order).0)
        .collect();
    inputs.sort_by(|a, b| order.cmp(a.lm(), b.lm()));

    let unit = |ring: &Ring, stats: GroebnerStats| {
        let one = IPoly {
            terms: vec![(Monomial::one(ring.nvars()), BigInt::one())],
            sugar: 0,
        };
        let gb = GroebnerBasis {
            ring: ring.clone(),
            order,
            generators: vec![MultiPoly::one(ring)],
            internal: Arc::new(vec![one]),
        };
        Ok((gb, stats))
    };

    for f in inputs {
        let reducers = engine.reducers();
        let red = reduce_terms(f.terms, f.sugar, &reducers, order, Mode::Full);
        let mut terms = red.terms;
        if terms.is_empty() {
            continue;
        }
        make_primitive(&mut terms);
        if terms[0].0.is_one() {
            stats.elapsed = start.elapsed();
            return unit(&ring, stats);
        }
        engine.polys.push(IPoly {
            terms,
            sugar: red.sugar,
        });
        let h = engine.polys.len() - 1;
        engine.update(h);
    }

    while let Some(pair) = engine.select_pair() {
        if stats.pairs_processed >= budget.max_pair_reductions
            || budget
                .wall_clock
                .map(|w| start.elapsed() > w)
                .unwrap_or(false)
        {
            return Err(PolyError::BudgetExceeded {
                pairs_processed: stats.pairs_processed,
                basis_size: engine.basis.len(),
                pairs_remaining: engine.pairs.len() + 1,
            });
        }
        stats.pairs_processed += 1;
        let (s, sugar) = engine.s_poly(&pair);
        if s.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        let reducers = engine.reducers();
        let red = reduce_terms(s, sugar, &reducers, order, Mode::Full);
        let mut terms = red.terms;
        if terms.is_empty() {
            stats.zero_reductions += 1;
            continue;
        }
        make_primitive(&mut terms);
        if terms[0].0.is_one() {
            stats.elapsed = start.elapsed();
            return unit(&ring, stats);
        }
        engine.polys.push(IPoly {
            terms,
            sugar: red.sugar,
        });
        let h = engine.polys.len() - 1;
        engine.update(h);
        stats.max_basis_size = stats.max_basis_size.max(engine.basis.len());
    }

    // Interreduce the minimal basis.
    let mut basis: Vec<IPoly> = engine
        .basis
        .iter()
        .map(|&i| engine.polys[i].clone())
        .collect();
    basis.sort_by(|a, b| order.cmp(a.lm(), b.lm()));
    let mut reduced: Vec<IPoly> = Vec::with_capacity(basis.len());
    for k in 0..basis.len() {
        let others: Vec<&IPoly> = basis
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != k)
            .map(|(_, p)| p)
            .collect();
        let red = reduce_terms(
            basis[k].terms.clone(),
            basis[k].sugar,
            &others,
            order,
            Mode::Tail,
        );
        let mut terms = red.terms;
        make_primitive(&mut terms);
        reduced.push(IPoly {
            terms,
            sugar: red.sugar,
        });
    }
    let generators = reduced.iter().map(|p| p.to_monic(&ring)).collect();
    stats.elapsed = start.elapsed();
    stats.max_basis_size = stats.max_basis_size.max(reduced.len());
    Ok((
        GroebnerBasis {
            ring,
            order,
            generators,
            internal: Arc::new(reduced),
        },
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;
    use crate::expr::parse_poly;

    fn ring(names: &[&str]) -> Ring {
        Ring::new(names)
    }

    fn p(r: &Ring, s: &str) -> MultiPoly {
        parse_poly(s, r).unwrap()
    }

    fn assert_groebner(g: &GroebnerBasis) {
        let gens = g.generators();
        for i in 0..gens.len() {
            for j in i + 1..gens.len() {
                let s = s_polynomial(&gens[i], &gens[j], g.order());
                assert!(g.reduce(&s).is_zero(), "S({i},{j}) does not reduce to 0");
            }
            let others: Vec<_> = gens
                .iter()
                .enumerate()
                .filter(|(k, _)| *k != i)
                .map(|(_, q)| q.clone())
                .collect();
            let lm = gens[i].leading_term(g.order()).unwrap().0.clone();
            for (m, _) in gens[i].terms() {
                assert!(
                    !others
                        .iter()
                        .any(|o| o.leading_term(g.order()).unwrap().0.divides(m)),
                    "generator {i} not reduced at {m:?} (lm {lm:?})"
                );
            }
        }
    }

    #[test]
    fn normal_form_examples() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::DegRevLex;
        assert!(normal_form(&p(&r, "x^2"), &[p(&r, "x")], o).is_zero());
        assert_eq!(
            normal_form(&p(&r, "x^2y+y"), &[p(&r, "x^2-1")], o),
            p(&r, "2y")
        );
        let h = ring(&["h"]);
        let f = p(&h, "h^8+14h^4+1");
        assert!(normal_form(&f, &[f.clone()], o).is_zero());
        // Non-monic divisor: remainder must still be exact.
        assert_eq!(
            normal_form(&p(&r, "x^2+y"), &[p(&r, "3x-1")], o),
            p(&r, "y+1/9")
        );
    }

    #[test]
    fn trivial_bases() {
        let r = ring(&["x", "y"]);
        let o = MonomialOrder::DegRevLex;
        let g = buchberger(&[p(&r, "x^2"), p(&r, "y^2")], o).unwrap();
        assert_eq!(g.generators().len(), 2);
        assert_eq!(g.quotient_dimension(), QuotientDimension::Finite(4));
        let g = buchberger(&[p(&r, "x-y"), p(&r, "x+y")], o).unwrap();
        let mut gens: Vec<String> = g.generators().iter().map(|q| q.to_string()).collect();
        gens.sort();
        assert_eq!(gens, vec!["x", "y"]);
        let g = buchberger(&[p(&r, "x")], o).unwrap();
        assert_eq!(g.quotient_dimension(), QuotientDimension::Infinite);
        let g = buchberger(&[p(&r, "x^2-1"), p(&r, "x-2")], o).unwrap();
        assert!(g.is_unit());
        assert_eq!(g.quotient_dimension(), QuotientDimension::Finite(0));
    }

    #[test]
    fn univariate_dimension_is_degree() {
        let h = ring(&["h"]);
        let g = buchberger(&[p(&h, "h^8+14h^4+1")], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(g.quotient_dimension(), QuotientDimension::Finite(8));
    }

    #[test]
    fn cyclic4_is_a_reduced_basis() {
        let r = ring(&["a", "b", "c", "d"]);
        let gens = [
            p(&r, "abcd-1"),
            p(&r, "abc+abd+acd+bcd"),
            p(&r, "ab+bc+ad+cd"),
            p(&r, "a+b+c+d"),
        ];
        for o in [MonomialOrder::DegRevLex, MonomialOrder::Lex, MonomialOrder::DegLex] {
            let g = buchberger(&gens, o).unwrap();
            assert_groebner(&g);
            // cyclic-4 has a one-dimensional component
            assert_eq!(g.quotient_dimension(), QuotientDimension::Infinite);
            for f in &gens {
                assert!(g.contains(f));
            }
        }
    }

    #[test]
    fn stratum_two_of_the_symmetric_octic() {
        // The simplified stratum system printed for the octic with 352 lines.
        let r = ring(&["b", "d", "h"]);
        let gens = [
            p(&r, "d"),
            p(&r, "b^4h^2-b^2h^4-b^2+h^2"),
            p(&r, "b^6-h^6+13b^2-13h^2"),
            p(&r, "h^8+14h^4+1"),
            p(&r, "b^2h^6+b^4+13b^2h^2+1"),
        ];
        let g = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        assert_groebner(&g);
        assert_eq!(g.quotient_dimension(), QuotientDimension::Finite(32));
    }

    #[test]
    fn deterministic_and_permutation_invariant() {
        let r = ring(&["x", "y", "z"]);
        let gens = vec![
            p(&r, "x^2+y^2+z^2-1"),
            p(&r, "x-y+2z"),
            p(&r, "xyz-1/3"),
        ];
        let o = MonomialOrder::DegRevLex;
        let g1 = buchberger(&gens, o).unwrap();
        let g2 = buchberger(&gens, o).unwrap();
        assert_eq!(g1, g2);
        let mut rev = gens.clone();
        rev.reverse();
        let scaled: Vec<_> = rev
            .iter()
            .enumerate()
            .map(|(i, q)| q.scale(&int(-(i as i64) - 2)))
            .collect();
        let g3 = buchberger(&scaled, o).unwrap();
        assert_eq!(g1, g3);
        assert_eq!(g1.quotient_dimension(), g3.quotient_dimension());
    }

    #[test]
    fn budget_exceeded_is_distinguishable() {
        let r = ring(&["a", "b", "c", "d"]);
        let gens = [
            p(&r, "abcd-1"),
            p(&r, "abc+abd+acd+bcd"),
            p(&r, "ab+bc+ad+cd"),
            p(&r, "a+b+c+d"),
        ];
        let err = buchberger_with_budget(&gens, MonomialOrder::DegRevLex, Budget::pairs(1))
            .unwrap_err();
        assert!(matches!(err, PolyError::BudgetExceeded { pairs_processed: 1, .. }));
    }
}
