//! Surfaces `phi(x, y) = psi(z, t)`.
//!
//! Lines come in two families. The `d²` grid lines join a zero of `phi` on
//! the line `z = t = 0` to a zero of `psi` on `x = y = 0`. Each projectivity
//! `M` carrying the zeros of `psi` onto those of `phi` gives `d` more lines
//! `(x, y) = c M (z, t)`, where `c^d` is the inverse of the scalar `phi∘M / psi`.

use num_complex::Complex64;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::exact::{int, ratio, MultiPoly, Rational, Ring};
use crate::line::{sort_lines, Line3};
use crate::numeric::FloatPoly;
use crate::p1::{
    classify_group, projectivities_between, roots_p1, BinaryForm, GroupTag, P1Error, Projectivity,
};
use crate::surface::{line_residual_with, surface_ring, SurfaceForm};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SeparableError {
    #[error(transparent)]
    P1(#[from] P1Error),
    #[error("degrees differ: phi has degree {phi}, psi has degree {psi}")]
    DegreeMismatch { phi: usize, psi: usize },
    #[error("degree {0} is below 3")]
    DegreeTooLow(usize),
    #[error("scalar mismatch: phi∘M is not proportional to psi (defect {defect:.3e})")]
    ScalarMismatch { defect: f64 },
    #[error("emitted line fails containment (residual {residual:.3e})")]
    Containment { residual: f64 },
    #[error("inadmissible (d, tag) = ({d}, {tag}): {reason}")]
    Inadmissible { d: usize, tag: GroupTag, reason: String },
    #[error("could not realize group {tag} in degree {d} after {attempts} attempts")]
    Unrealized { d: usize, tag: GroupTag, attempts: usize },
    #[error("surface is not of the form phi(x, y) - psi(z, t)")]
    NotSeparable,
}

/// `F = phi(x, y) - psi(z, t)`.
#[derive(Clone, Debug, PartialEq)]
pub struct SeparableSurface {
    phi: BinaryForm,
    psi: BinaryForm,
}

impl SeparableSurface {
    pub fn new(phi: BinaryForm, psi: BinaryForm) -> Result<Self, SeparableError> {
        if phi.degree() != psi.degree() {
            return Err(SeparableError::DegreeMismatch {
                phi: phi.degree(),
                psi: psi.degree(),
            });
        }
        if phi.degree() < 3 {
            return Err(SeparableError::DegreeTooLow(phi.degree()));
        }
        for f in [&phi, &psi] {
            if !f.has_simple_zeros() {
                return Err(P1Error::MultipleRoot { separation: 0.0 }.into());
            }
        }
        Ok(SeparableSurface { phi, psi })
    }

    pub fn symmetric(phi: BinaryForm) -> Result<Self, SeparableError> {
        Self::new(phi.clone(), phi)
    }

    /// Split a surface equation into `phi(x, y) - psi(z, t)`.
    pub fn from_surface(s: &SurfaceForm) -> Result<Self, SeparableError> {
        let d = s.degree() as usize;
        let mut phi = vec![int(0); d + 1];
        let mut psi = vec![int(0); d + 1];
        for (m, c) in s.poly().terms() {
            let e = m.exponents();
            if e[2] == 0 && e[3] == 0 {
                phi[e[0] as usize] = c.clone();
            } else if e[0] == 0 && e[1] == 0 {
                psi[e[2] as usize] = -c.clone();
            } else {
                return Err(SeparableError::NotSeparable);
            }
        }
        let phi = BinaryForm::new(phi).map_err(|_| SeparableError::NotSeparable)?;
        let psi = BinaryForm::new(psi).map_err(|_| SeparableError::NotSeparable)?;
        Self::new(phi, psi)
    }

    pub fn phi(&self) -> &BinaryForm {
        &self.phi
    }

    pub fn psi(&self) -> &BinaryForm {
        &self.psi
    }

    pub fn degree(&self) -> usize {
        self.phi.degree()
    }

    pub fn is_symmetric(&self) -> bool {
        self.phi == self.psi
    }

    pub fn to_surface(&self) -> SurfaceForm {
        let ring = surface_ring();
        let f = &self.phi.to_poly(&ring, 0, 1) - &self.psi.to_poly(&ring, 2, 3);
        SurfaceForm::new(f).expect("separable form of degree >= 3 is a valid surface")
    }
}

/// The `d` lines attached to one projectivity.
#[derive(Clone, Debug)]
pub struct RulingOrbit {
    pub projectivity: Projectivity,
    pub lambda: Complex64,
    pub lines: Vec<Line3>,
}

#[derive(Clone, Debug)]
pub struct LineReport {
    pub degree: usize,
    pub grid_lines: Vec<Line3>,
    pub rulings: Vec<RulingOrbit>,
    pub alpha: usize,
    pub total: usize,
    /// Isomorphism type of the projectivity group, when `phi = psi`.
    pub group: Option<GroupTag>,
    pub real_count: usize,
    /// False when `phi` has non-real zeros; the real count is then reported
    /// without the guarantee that all grid lines are real.
    pub real_zeros: bool,
    pub max_residual: f64,
}

impl LineReport {
    /// All lines, canonically sorted.
    pub fn lines(&self) -> Vec<Line3> {
        let mut all = self.grid_lines.clone();
        for r in &self.rulings {
            all.extend(r.lines.iter().cloned());
        }
        sort_lines(&mut all);
        all
    }
}

fn promote(p: [Complex64; 2]) -> [Complex64; 4] {
    [p[0], p[1], Complex64::zero(), Complex64::zero()]
}

/// Count and emit every line on the surface.
pub fn count_and_emit(s: &SeparableSurface, tol: f64) -> Result<LineReport, SeparableError> {
    let d = s.degree();
    let zphi = roots_p1(&s.phi, tol)?;
    let zpsi = roots_p1(&s.psi, tol)?;
    let f = FloatPoly::from_multi(s.to_surface().poly());

    let mut grid_lines = Vec::with_capacity(d * d);
    for p in zphi.points() {
        for q in zpsi.points() {
            let a = promote(p.homogeneous());
            let [z, t] = q.homogeneous();
            let b = [Complex64::zero(), Complex64::zero(), z, t];
            grid_lines.push(Line3::from_points(a, b).expect("grid points are independent"));
        }
    }
    sort_lines(&mut grid_lines);

    let maps = projectivities_between(&zpsi, &zphi, tol);
    let psi_c = s.psi.float_coeffs();
    let k = (0..=d)
        .max_by(|&i, &j| psi_c[i].norm().total_cmp(&psi_c[j].norm()))
        .expect("nonempty");
    let mut rulings = Vec::with_capacity(maps.len());
    for m in &maps {
        let g = s.phi.compose(m);
        let lambda = g[k] / psi_c[k];
        let scale = g.iter().map(|z| z.norm()).sum::<f64>();
        let defect = g
            .iter()
            .zip(psi_c.iter())
            .map(|(a, b)| (a - lambda * b).norm())
            .fold(0.0, f64::max)
            / scale;
        if !(defect <= tol) {
            return Err(SeparableError::ScalarMismatch { defect });
        }
        let [[al, be], [ga, de]] = m.entries();
        let root = lambda.inv().powf(1.0 / d as f64);
        let mut lines = Vec::with_capacity(d);
        for j in 0..d {
            let c = root * Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * j as f64 / d as f64);
            let a = [c * al, c * ga, Complex64::new(1.0, 0.0), Complex64::zero()];
            let b = [c * be, c * de, Complex64::zero(), Complex64::new(1.0, 0.0)];
            lines.push(Line3::from_points(a, b).expect("graph of a linear map has rank 2"));
        }
        sort_lines(&mut lines);
        rulings.push(RulingOrbit {
            projectivity: *m,
            lambda,
            lines,
        });
    }

    let mut max_residual = 0.0f64;
    let mut real_count = 0;
    for l in grid_lines.iter().chain(rulings.iter().flat_map(|r| r.lines.iter())) {
        max_residual = max_residual.max(line_residual_with(&f, d, l));
        if l.is_real(tol) {
            real_count += 1;
        }
    }
    if !(max_residual <= tol) {
        return Err(SeparableError::Containment {
            residual: max_residual,
        });
    }
    let group = if s.is_symmetric() {
        Some(classify_group(&maps, tol)?)
    } else {
        None
    };
    let alpha = maps.len();
    Ok(LineReport {
        degree: d,
        grid_lines,
        rulings,
        alpha,
        total: d * d + alpha * d,
        group,
        real_count,
        real_zeros: zphi.all_real(tol),
        max_residual,
    })
}

/// Largest line count among surfaces `phi(x, y) = psi(z, t)` of degree `d`.
pub fn maximal_count(d: usize) -> Result<usize, SeparableError> {
    if d < 3 {
        return Err(SeparableError::DegreeTooLow(d));
    }
    Ok(match d {
        4 => 64,
        6 => 180,
        8 => 256,
        12 => 864,
        20 => 1600,
        _ => 3 * d * d,
    })
}

/// Binary forms in `x, y` with exact arithmetic.
struct Forms {
    ring: Ring,
}

impl Forms {
    fn new() -> Self {
        Forms {
            ring: Ring::new(&["x", "y"]),
        }
    }

    /// `sum c x^i y^j` from `(c, i, j)` triples.
    fn from(&self, terms: &[(i64, u32, u32)]) -> MultiPoly {
        let x = MultiPoly::var(&self.ring, 0);
        let y = MultiPoly::var(&self.ring, 1);
        let mut acc = MultiPoly::zero(&self.ring);
        for &(c, i, j) in terms {
            acc = &acc + &(&x.pow(i) * &y.pow(j)).scale(&int(c));
        }
        acc
    }

    fn one(&self) -> MultiPoly {
        MultiPoly::one(&self.ring)
    }

    /// `x^a - l y^a`.
    fn binomial(&self, a: u32, l: &Rational) -> MultiPoly {
        let x = MultiPoly::var(&self.ring, 0);
        let y = MultiPoly::var(&self.ring, 1);
        &x.pow(a) - &y.pow(a).scale(l)
    }

    /// `A + c B`.
    fn pencil(&self, a: &MultiPoly, c: &Rational, b: &MultiPoly) -> MultiPoly {
        a + &b.scale(c)
    }
}

/// Generic rational parameter: `|l|` in `[1/2, 2]`, not `±1`, distinct from
/// the values in `avoid` and their inverses.
fn generic_param(rng: &mut ChaCha8Rng, avoid: &[Rational]) -> Rational {
    loop {
        let num: i64 = rng.random_range(2..=13);
        let den: i64 = rng.random_range(2..=13);
        let sign = if rng.random_bool(0.5) { 1 } else { -1 };
        let l = ratio(sign * num, den);
        let a = num as f64 / den as f64;
        if !(0.5..=2.0).contains(&a) || num == den {
            continue;
        }
        if avoid.iter().any(|v| *v == l || v.recip() == l) {
            continue;
        }
        return l;
    }
}

struct Decomposition {
    /// Multiplicities of the special orbit forms.
    counts: Vec<usize>,
    /// Number of generic orbits.
    generic: usize,
}

fn inadmissible(d: usize, tag: GroupTag, reason: &str) -> SeparableError {
    SeparableError::Inadmissible {
        d,
        tag,
        reason: reason.to_string(),
    }
}

/// Search `d = sum counts[i] * sizes[i] + generic * g` with `counts[i] <= caps[i]`,
/// preferring fewer generic orbits; `ok` filters special combinations.
fn decompose(
    d: usize,
    sizes: &[usize],
    caps: &[usize],
    g: usize,
    ok: impl Fn(&[usize], usize) -> bool,
) -> Option<Decomposition> {
    let mut all: Vec<Vec<usize>> = vec![Vec::new()];
    for &cap in caps {
        all = all
            .into_iter()
            .flat_map(|v| {
                (0..=cap).map(move |c| {
                    let mut w = v.clone();
                    w.push(c);
                    w
                })
            })
            .collect();
    }
    (0..=d / g).find_map(|generic| {
        all.iter()
            .find(|c| {
                c.iter().zip(sizes).map(|(c, s)| c * s).sum::<usize>() + generic * g == d && ok(c, generic)
            })
            .map(|c| Decomposition {
                counts: c.clone(),
                generic,
            })
    })
}

/// Construct a binary form of degree `d` whose projectivity group is `tag`.
/// Generic parameters are drawn from a ChaCha8 stream seeded by `seed`; the
/// group is recomputed and the draw repeated until it matches.
pub fn build_form(d: usize, tag: GroupTag, seed: u64) -> Result<BinaryForm, SeparableError> {
    const ATTEMPTS: usize = 32;
    if d < 3 {
        return Err(inadmissible(d, tag, "degree must be at least 3"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let forms = Forms::new();
    let recipe = Recipe::plan(d, tag)?;
    for _ in 0..ATTEMPTS {
        let poly = recipe.instantiate(&forms, &mut rng);
        let Ok(form) = BinaryForm::from_poly(&poly) else {
            continue;
        };
        if !form.has_simple_zeros() {
            continue;
        }
        if realized_group(&form).as_ref() == Ok(&tag) {
            return Ok(form);
        }
        if !recipe.randomized() {
            break;
        }
    }
    Err(SeparableError::Unrealized {
        d,
        tag,
        attempts: ATTEMPTS,
    })
}

fn realized_group(f: &BinaryForm) -> Result<GroupTag, SeparableError> {
    let tol = crate::p1::DEFAULT_TOL;
    let z = roots_p1(f, tol)?;
    let maps = projectivities_between(&z, &z, tol);
    Ok(classify_group(&maps, tol)?)
}

enum Recipe {
    Trivial(usize),
    Cyclic { k: u32, alpha: usize, beta: usize },
    Dihedral { k: u32, alpha: usize, beta: usize, gamma: usize },
    Polyhedral { tag: GroupTag, counts: Vec<usize>, generic: usize },
}

impl Recipe {
    fn plan(d: usize, tag: GroupTag) -> Result<Recipe, SeparableError> {
        match tag {
            GroupTag::Trivial => {
                if d < 5 {
                    return Err(inadmissible(d, tag, "four or fewer points always have nontrivial symmetry"));
                }
                Ok(Recipe::Trivial(d))
            }
            GroupTag::Cyclic(k) => {
                let k = k as usize;
                if k < 2 {
                    return Err(inadmissible(d, tag, "cyclic order must be at least 2"));
                }
                // d = alpha + beta k, alpha in {0, 1, 2}
                for alpha in 0..=2usize {
                    if d < alpha || (d - alpha) % k != 0 {
                        continue;
                    }
                    let beta = (d - alpha) / k;
                    let fits = match alpha {
                        0 | 2 => beta >= 3,
                        _ => beta >= 1 && d >= 5,
                    };
                    if fits {
                        return Ok(Recipe::Cyclic {
                            k: k as u32,
                            alpha,
                            beta,
                        });
                    }
                }
                Err(inadmissible(
                    d,
                    tag,
                    "need d = beta k (beta >= 3), d = 1 + beta k >= 5, or d = 2 + beta k (beta >= 3)",
                ))
            }
            GroupTag::Dihedral(k) => {
                let k = k as usize;
                if k < 2 {
                    return Err(inadmissible(d, tag, "dihedral order must be at least 2"));
                }
                // d = 2 alpha + beta k + 2 k gamma, alpha, beta in {0, 1}
                let found = decompose(d, &[2, k], &[1, 1], 2 * k, |c, gamma| {
                    let (alpha, beta) = (c[0], c[1]);
                    if gamma > 0 {
                        return true;
                    }
                    match (alpha, beta) {
                        (0, 1) => true,
                        (1, 1) => k != 2 && k != 4,
                        _ => false,
                    }
                });
                match found {
                    Some(dec) => Ok(Recipe::Dihedral {
                        k: k as u32,
                        alpha: dec.counts[0],
                        beta: dec.counts[1],
                        gamma: dec.generic,
                    }),
                    None => Err(inadmissible(
                        d,
                        tag,
                        "need d = 2 alpha + beta k + 2 k gamma with alpha, beta in {0,1}; k != 2, 4 when d = 2 + k",
                    )),
                }
            }
            GroupTag::Tetrahedral => {
                // d = 4 alpha + 6 beta + 12 gamma
                let found = decompose(d, &[4, 6], &[2, 1], 12, |c, gamma| gamma > 0 || c[0] == 1);
                found
                    .map(|dec| Recipe::Polyhedral {
                        tag,
                        counts: dec.counts,
                        generic: dec.generic,
                    })
                    .ok_or_else(|| {
                        inadmissible(
                            d,
                            tag,
                            "need d = 4 alpha + 6 beta + 12 gamma (alpha <= 2, beta <= 1) with exactly one 4-orbit when gamma = 0",
                        )
                    })
            }
            GroupTag::Octahedral => decompose(d, &[6, 8, 12], &[1, 1, 1], 24, |_, _| true)
                .map(|dec| Recipe::Polyhedral {
                    tag,
                    counts: dec.counts,
                    generic: dec.generic,
                })
                .ok_or_else(|| {
                    inadmissible(d, tag, "need d = 6 alpha + 8 beta + 12 gamma + 24 delta with alpha, beta, gamma in {0,1}")
                }),
            GroupTag::Icosahedral => decompose(d, &[12, 20, 30], &[1, 1, 1], 60, |_, _| true)
                .map(|dec| Recipe::Polyhedral {
                    tag,
                    counts: dec.counts,
                    generic: dec.generic,
                })
                .ok_or_else(|| {
                    inadmissible(d, tag, "need d = 12 alpha + 20 beta + 30 gamma + 60 delta with alpha, beta, gamma in {0,1}")
                }),
        }
    }

    fn randomized(&self) -> bool {
        match self {
            Recipe::Trivial(_) | Recipe::Cyclic { .. } => true,
            Recipe::Dihedral { gamma, .. } => *gamma > 0,
            Recipe::Polyhedral { generic, .. } => *generic > 0,
        }
    }

    fn instantiate(&self, f: &Forms, rng: &mut ChaCha8Rng) -> MultiPoly {
        let mut params: Vec<Rational> = Vec::new();
        let mut draw = |rng: &mut ChaCha8Rng| {
            let l = generic_param(rng, &params);
            params.push(l.clone());
            l
        };
        match self {
            Recipe::Trivial(d) => {
                let mut roots: Vec<Rational> = Vec::new();
                let mut acc = f.one();
                while roots.len() < *d {
                    let num: i64 = rng.random_range(-9..=9);
                    let den: i64 = rng.random_range(1..=4);
                    let r = ratio(num, den);
                    if !roots.contains(&r) {
                        acc = &acc * &f.binomial(1, &r);
                        roots.push(r);
                    }
                }
                acc
            }
            Recipe::Cyclic { k, alpha, beta } => {
                let mut acc = match alpha {
                    0 => f.one(),
                    1 => f.from(&[(1, 1, 0)]),
                    _ => f.from(&[(1, 1, 1)]),
                };
                for _ in 0..*beta {
                    let l = draw(rng);
                    acc = &acc * &f.binomial(*k, &l);
                }
                acc
            }
            Recipe::Dihedral { k, alpha, beta, gamma } => {
                let mut acc = if *alpha == 1 { f.from(&[(1, 1, 1)]) } else { f.one() };
                if *beta == 1 {
                    acc = &acc * &f.binomial(*k, &int(1));
                }
                for _ in 0..*gamma {
                    let l = draw(rng);
                    let s = &l + &l.recip();
                    let pair = &f.from(&[(1, 2 * k, 0), (1, 0, 2 * k)]) - &f.from(&[(1, *k, *k)]).scale(&s);
                    acc = &acc * &pair;
                }
                acc
            }
            Recipe::Polyhedral { tag, counts, generic } => {
                let (special, pencil) = polyhedral_forms(f, *tag);
                let mut acc = f.one();
                for (group, &c) in special.iter().zip(counts.iter()) {
                    for form in &group[..c] {
                        acc = &acc * form;
                    }
                }
                for _ in 0..*generic {
                    let c = draw(rng);
                    acc = &acc * &f.pencil(&pencil.0, &c, &pencil.1);
                }
                acc
            }
        }
    }
}

/// For each special orbit size, the distinct orbit forms of that size; and
/// the two generators of the pencil cutting out generic orbits.
fn polyhedral_forms(f: &Forms, tag: GroupTag) -> (Vec<Vec<MultiPoly>>, (MultiPoly, MultiPoly)) {
    match tag {
        GroupTag::Tetrahedral => {
            let phi = f.from(&[(1, 4, 0), (-1, 1, 3)]);
            let psi = f.from(&[(8, 3, 1), (1, 0, 4)]);
            let six = f.from(&[(8, 6, 0), (20, 3, 3), (-1, 0, 6)]);
            let pencil = (phi.pow(3), psi.pow(3));
            (vec![vec![phi, psi], vec![six]], pencil)
        }
        GroupTag::Octahedral => {
            let w = f.from(&[(1, 5, 1), (-1, 1, 5)]);
            let t8 = f.from(&[(1, 8, 0), (14, 4, 4), (1, 0, 8)]);
            let r12 = f.from(&[(1, 12, 0), (-33, 8, 4), (-33, 4, 8), (1, 0, 12)]);
            let pencil = (t8.pow(3), w.pow(4));
            (vec![vec![w], vec![t8], vec![r12]], pencil)
        }
        _ => {
            let f12 = f.from(&[(1, 11, 1), (11, 6, 6), (-1, 1, 11)]);
            let h20 = f.from(&[(-1, 20, 0), (-1, 0, 20), (228, 15, 5), (-228, 5, 15), (-494, 10, 10)]);
            let t30 = f.from(&[
                (1, 30, 0),
                (1, 0, 30),
                (522, 25, 5),
                (-522, 5, 25),
                (-10005, 20, 10),
                (-10005, 10, 20),
            ]);
            let pencil = (f12.pow(5), h20.pow(3));
            (vec![vec![f12], vec![h20], vec![t30]], pencil)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::p1::DEFAULT_TOL;

    fn form(c: &[i64]) -> BinaryForm {
        BinaryForm::from_ints(c).unwrap()
    }

    /// Coefficients of `sum c x^i y^(d-i)` from `(c, i)` pairs.
    fn sparse(d: usize, terms: &[(i64, usize)]) -> BinaryForm {
        let mut v = vec![0i64; d + 1];
        for &(c, i) in terms {
            v[i] = c;
        }
        form(&v)
    }

    #[test]
    fn fermat_cubic_has_27_lines() {
        let s = SeparableSurface::symmetric(sparse(3, &[(1, 3), (-1, 0)])).unwrap();
        let r = count_and_emit(&s, DEFAULT_TOL).unwrap();
        assert_eq!((r.alpha, r.total), (6, 27));
        assert_eq!(r.lines().len(), 27);
        assert_eq!(crate::line::count_duplicates(&r.lines(), 1e-6), 0);
        assert_eq!(r.group, Some(GroupTag::Dihedral(3)));
        assert_eq!(r.real_count, 3);
        assert!(!r.real_zeros);
    }

    #[test]
    fn tetrahedral_quartic_has_64_lines() {
        let s = SeparableSurface::symmetric(sparse(4, &[(1, 4), (-1, 1)])).unwrap();
        let r = count_and_emit(&s, DEFAULT_TOL).unwrap();
        assert_eq!((r.alpha, r.total), (12, 64));
        assert_eq!(r.group, Some(GroupTag::Tetrahedral));
        let lines = r.lines();
        let surf = s.to_surface();
        assert!(lines.iter().all(|l| surf.contains_line(l, 1e-10)));
        assert_eq!(crate::line::count_duplicates(&lines, 1e-6), 0);
    }

    #[test]
    fn mismatched_fermat_quartic() {
        // x^4 - y^4 against z^4 + z t^3 - 6 t^4: no projectivity.
        let s = SeparableSurface::new(sparse(4, &[(1, 4), (-1, 0)]), sparse(4, &[(1, 4), (1, 1), (-6, 0)])).unwrap();
        let r = count_and_emit(&s, DEFAULT_TOL).unwrap();
        assert_eq!((r.alpha, r.total), (0, 16));
        assert_eq!(r.group, None);
    }

    #[test]
    fn swapping_factors_keeps_counts() {
        let a = sparse(4, &[(1, 4), (-1, 0)]);
        let b = sparse(4, &[(1, 4), (-2, 0)]);
        let r1 = count_and_emit(&SeparableSurface::new(a.clone(), b.clone()).unwrap(), DEFAULT_TOL).unwrap();
        let r2 = count_and_emit(&SeparableSurface::new(b, a).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(r1.alpha, 8);
        assert_eq!(r1.total, r2.total);
    }

    #[test]
    fn real_lines() {
        // Three real zeros: every projectivity of the set is real.
        let s = SeparableSurface::symmetric(sparse(3, &[(1, 3), (-7, 1), (6, 0)])).unwrap();
        let r = count_and_emit(&s, DEFAULT_TOL).unwrap();
        assert!(r.real_zeros);
        assert_eq!(r.real_count, 15);
        // Quartic with four real zeros: identity contributes two real lines.
        let s = SeparableSurface::symmetric(sparse(4, &[(1, 4), (-5, 2), (4, 0)])).unwrap();
        let r = count_and_emit(&s, DEFAULT_TOL).unwrap();
        let id = r.rulings.iter().find(|o| o.projectivity.is_identity(1e-9)).unwrap();
        assert_eq!(id.lines.iter().filter(|l| l.is_real(DEFAULT_TOL)).count(), 2);
    }

    #[test]
    fn split_from_surface() {
        let surf = SurfaceForm::parse("x(x^3-y^3)-z(z^3-t^3)").unwrap();
        let s = SeparableSurface::from_surface(&surf).unwrap();
        assert!(s.is_symmetric());
        assert_eq!(s.to_surface(), surf);
        let mixed = SurfaceForm::parse("x^3+y^3+z^3+t^3+xzt").unwrap();
        assert_eq!(SeparableSurface::from_surface(&mixed), Err(SeparableError::NotSeparable));
    }

    #[test]
    fn maximal_counts() {
        assert_eq!(maximal_count(5), Ok(75));
        assert_eq!(maximal_count(8), Ok(256));
        assert_eq!(maximal_count(7), Ok(147));
        assert!(maximal_count(2).is_err());
    }

    #[test]
    fn klein_forms() {
        let o6 = build_form(6, GroupTag::Octahedral, 0).unwrap();
        assert_eq!(o6, sparse(6, &[(1, 5), (-1, 1)]));
        let i20 = build_form(20, GroupTag::Icosahedral, 0).unwrap();
        assert_eq!(
            i20,
            sparse(20, &[(-1, 20), (-1, 0), (228, 15), (-228, 5), (-494, 10)])
        );
        assert!(matches!(
            build_form(10, GroupTag::Octahedral, 0),
            Err(SeparableError::Inadmissible { .. })
        ));
    }

    #[test]
    fn built_forms_realize_their_group() {
        let cases = [
            (5, GroupTag::Trivial),
            (5, GroupTag::Cyclic(4)),
            (6, GroupTag::Cyclic(2)),
            (9, GroupTag::Cyclic(3)),
            (4, GroupTag::Dihedral(2)),
            (5, GroupTag::Dihedral(3)),
            (7, GroupTag::Dihedral(5)),
            (8, GroupTag::Dihedral(3)),
            (4, GroupTag::Tetrahedral),
            (10, GroupTag::Tetrahedral),
            (12, GroupTag::Tetrahedral),
            (8, GroupTag::Octahedral),
            (14, GroupTag::Octahedral),
            (12, GroupTag::Icosahedral),
        ];
        for (d, tag) in cases {
            let f = build_form(d, tag, 7).unwrap_or_else(|e| panic!("{d} {tag}: {e}"));
            assert_eq!(f.degree(), d);
            let r = count_and_emit(&SeparableSurface::symmetric(f).unwrap(), DEFAULT_TOL).unwrap();
            assert_eq!(r.group, Some(tag), "d = {d}");
            assert_eq!(r.alpha as u32, tag.order());
        }
    }

    #[test]
    fn inadmissible_pairs() {
        for (d, tag) in [
            (4, GroupTag::Trivial),
            (6, GroupTag::Tetrahedral),
            (8, GroupTag::Tetrahedral),
            (10, GroupTag::Octahedral),
            (14, GroupTag::Icosahedral),
            (6, GroupTag::Dihedral(4)),
            (4, GroupTag::Cyclic(2)),
        ] {
            assert!(
                matches!(build_form(d, tag, 0), Err(SeparableError::Inadmissible { .. })),
                "{d} {tag}"
            );
        }
    }
}
