//! Geometry of the projective line: zeros of binary forms, Möbius maps,
//! projectivities between finite point sets and their group structure.
//!
//! A point `[a : b]` is stored as `Finite(a / b)` or `Infinity`. Distances
//! are chordal: `|a0 b1 - a1 b0| / (|a| |b|)`, which lies in `[0, 1]`.

use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::exact::{int, MultiPoly, Rational, Ring, UniPoly};
use crate::numeric::{horner, poly_roots, rational_to_f64};

/// Default chordal tolerance.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Smallest admissible `|det|` of a normalized projectivity.
pub const MIN_DET: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum P1Error {
    #[error("binary form is identically zero")]
    ZeroForm,
    #[error("binary form has a multiple root (minimal separation {separation:.3e})")]
    MultipleRoot { separation: f64 },
    #[error("root refinement did not converge (residual {residual:.3e})")]
    NoConvergence { residual: f64 },
    #[error("degenerate triple: points are not pairwise distinct")]
    DegenerateTriple,
    #[error("matrix is singular (|det| = {0:.3e})")]
    Singular(f64),
    #[error("maps are not closed under composition and inverse")]
    NotAGroup,
    #[error("finite group of order {0} not recognized")]
    UnrecognizedOrder(usize),
    #[error("expected a homogeneous polynomial in two variables")]
    NotBinary,
}

/// `sum a_i x^i y^(d-i)` with rational coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct BinaryForm {
    coeffs: Vec<Rational>,
}

impl BinaryForm {
    /// `coeffs[i]` multiplies `x^i y^(d-i)`; `d = coeffs.len() - 1`.
    pub fn new(coeffs: Vec<Rational>) -> Result<Self, P1Error> {
        if coeffs.len() < 2 || coeffs.iter().all(|c| c.is_zero()) {
            return Err(P1Error::ZeroForm);
        }
        Ok(BinaryForm { coeffs })
    }

    pub fn from_ints(coeffs: &[i64]) -> Result<Self, P1Error> {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// Read a form from a homogeneous polynomial in a two-variable ring
    /// (first variable plays the role of `x`).
    pub fn from_poly(p: &MultiPoly) -> Result<Self, P1Error> {
        if p.nvars() != 2 || !p.is_homogeneous() {
            return Err(P1Error::NotBinary);
        }
        let d = p.total_degree().ok_or(P1Error::ZeroForm)? as usize;
        let mut coeffs = vec![int(0); d + 1];
        for (m, c) in p.terms() {
            coeffs[m.exponent(0) as usize] = c.clone();
        }
        Self::new(coeffs)
    }

    /// The form as a polynomial in variables `x_var`, `y_var` of `ring`.
    pub fn to_poly(&self, ring: &Ring, x_var: usize, y_var: usize) -> MultiPoly {
        let x = MultiPoly::var(ring, x_var);
        let y = MultiPoly::var(ring, y_var);
        let d = self.degree() as u32;
        let mut acc = MultiPoly::zero(ring);
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let term = &x.pow(i as u32) * &y.pow(d - i as u32);
                acc = &acc + &term.scale(c);
            }
        }
        acc
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn float_coeffs(&self) -> Vec<Complex64> {
        self.coeffs.iter().map(|c| Complex64::new(rational_to_f64(c), 0.0)).collect()
    }

    pub fn norm1(&self) -> f64 {
        self.coeffs.iter().map(|c| rational_to_f64(c).abs()).sum()
    }

    pub fn eval(&self, x: Complex64, y: Complex64) -> Complex64 {
        let d = self.degree();
        let mut acc = Complex64::zero();
        for (i, c) in self.coeffs.iter().enumerate() {
            acc += x.powu(i as u32) * y.powu((d - i) as u32) * rational_to_f64(c);
        }
        acc
    }

    /// Whether the zeros on P¹ are pairwise distinct, decided exactly.
    pub fn has_simple_zeros(&self) -> bool {
        let d = self.degree();
        // Zero at infinity has multiplicity d - deg_x.
        let top = self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0);
        if d - top >= 2 {
            return false;
        }
        UniPoly::new(self.coeffs.clone()).is_squarefree()
    }

    /// Coefficients of `f(a z + b t, c z + d t)` as a form in `(z, t)`;
    /// entry `i` multiplies `z^i t^(d-i)`.
    pub fn compose(&self, m: &Projectivity) -> Vec<Complex64> {
        let [[a, b], [c, dd]] = m.entries();
        let d = self.degree();
        // x = a z + b t, y = c z + d t as coefficient vectors in z (low to high).
        let xs = [b, a];
        let ys = [dd, c];
        let mut out = vec![Complex64::zero(); d + 1];
        for (i, coef) in self.coeffs.iter().enumerate() {
            if coef.is_zero() {
                continue;
            }
            let mut prod = vec![Complex64::new(rational_to_f64(coef), 0.0)];
            for _ in 0..i {
                prod = mul_linear(&prod, xs);
            }
            for _ in 0..d - i {
                prod = mul_linear(&prod, ys);
            }
            for (k, v) in prod.into_iter().enumerate() {
                out[k] += v;
            }
        }
        out
    }
}

fn mul_linear(p: &[Complex64], l: [Complex64; 2]) -> Vec<Complex64> {
    let mut out = vec![Complex64::zero(); p.len() + 1];
    for (k, v) in p.iter().enumerate() {
        out[k] += v * l[0];
        out[k + 1] += v * l[1];
    }
    out
}

impl fmt::Display for BinaryForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ring = Ring::new(&["x", "y"]);
        write!(f, "{}", crate::expr::print_poly(&self.to_poly(&ring, 0, 1)))
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PointP1 {
    Finite(Complex64),
    Infinity,
}

impl PointP1 {
    pub fn finite(re: f64, im: f64) -> Self {
        PointP1::Finite(Complex64::new(re, im))
    }

    /// Unit-norm homogeneous coordinates `[a : b]`.
    pub fn homogeneous(&self) -> [Complex64; 2] {
        match *self {
            PointP1::Infinity => [Complex64::one(), Complex64::zero()],
            PointP1::Finite(z) => {
                let n = (1.0 + z.norm_sqr()).sqrt();
                [z / n, Complex64::new(1.0 / n, 0.0)]
            }
        }
    }

    pub fn from_homogeneous(h: [Complex64; 2]) -> Self {
        if h[1].norm() <= 1e-300 || h[1].norm() <= 1e-15 * h[0].norm() {
            PointP1::Infinity
        } else {
            PointP1::Finite(h[0] / h[1])
        }
    }

    pub fn chordal(&self, other: &PointP1) -> f64 {
        let a = self.homogeneous();
        let b = other.homogeneous();
        (a[0] * b[1] - a[1] * b[0]).norm()
    }

    pub fn is_real(&self, tol: f64) -> bool {
        match self {
            PointP1::Infinity => true,
            PointP1::Finite(z) => z.im.abs() <= tol * (1.0 + z.norm_sqr()),
        }
    }
}

impl fmt::Display for PointP1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PointP1::Infinity => write!(f, "inf"),
            PointP1::Finite(z) => write!(f, "{z}"),
        }
    }
}

/// Finite set of points on P¹ with its minimal pairwise chordal distance.
#[derive(Clone, Debug)]
pub struct PointSetP1 {
    points: Vec<PointP1>,
    separation: f64,
}

impl PointSetP1 {
    pub fn new(points: Vec<PointP1>) -> Self {
        let mut separation = f64::INFINITY;
        for i in 0..points.len() {
            for j in i + 1..points.len() {
                separation = separation.min(points[i].chordal(&points[j]));
            }
        }
        PointSetP1 { points, separation }
    }

    pub fn points(&self) -> &[PointP1] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn separation(&self) -> f64 {
        self.separation
    }

    pub fn all_real(&self, tol: f64) -> bool {
        self.points.iter().all(|p| p.is_real(tol))
    }
}

/// Zeros of `f` on P¹, each refined by Newton iteration in the affine chart
/// where it has modulus at most 1.
pub fn roots_p1(f: &BinaryForm, tol: f64) -> Result<PointSetP1, P1Error> {
    let d = f.degree();
    let c = f.float_coeffs();
    let top = c.iter().rposition(|z| !z.is_zero()).ok_or(P1Error::ZeroForm)?;
    let rev: Vec<Complex64> = c.iter().rev().cloned().collect();
    let norm = f.norm1();
    let mut pts = Vec::with_capacity(d);
    for _ in top..d {
        pts.push(PointP1::Infinity);
    }
    let mut worst = 0.0f64;
    for r in poly_roots(&c[..=top]) {
        let p = if r.norm() <= 1.0 {
            let z = refine(&c, r);
            pts.push(PointP1::Finite(z));
            PointP1::Finite(z)
        } else {
            let s = refine(&rev, r.inv());
            let p = if s.is_zero() { PointP1::Infinity } else { PointP1::Finite(s.inv()) };
            pts.push(p);
            p
        };
        let [a, b] = p.homogeneous();
        worst = worst.max(f.eval(a, b).norm() / norm);
    }
    let set = PointSetP1::new(pts);
    if !f.has_simple_zeros() || set.separation <= 2.0 * tol {
        return Err(P1Error::MultipleRoot {
            separation: set.separation,
        });
    }
    if !(worst < tol) {
        return Err(P1Error::NoConvergence { residual: worst });
    }
    Ok(set)
}

fn refine(c: &[Complex64], mut z: Complex64) -> Complex64 {
    for _ in 0..8 {
        let (p, dp) = horner(c, z);
        if dp.is_zero() {
            break;
        }
        let next = z - p / dp;
        if !next.is_finite() || horner(c, next).0.norm() >= p.norm() {
            break;
        }
        z = next;
    }
    z
}

/// Element of PGL(2, C), stored with its largest-modulus entry equal to 1.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Projectivity {
    m: [[Complex64; 2]; 2],
}

impl Projectivity {
    pub fn new(m: [[Complex64; 2]; 2]) -> Result<Self, P1Error> {
        let flat = [m[0][0], m[0][1], m[1][0], m[1][1]];
        let mut k = 0;
        for i in 1..4 {
            if flat[i].norm() > flat[k].norm() * (1.0 + 1e-12) {
                k = i;
            }
        }
        let pivot = flat[k];
        if !pivot.is_finite() || pivot.is_zero() {
            return Err(P1Error::Singular(0.0));
        }
        let n = m.map(|row| row.map(|z| z / pivot));
        let det = (n[0][0] * n[1][1] - n[0][1] * n[1][0]).norm();
        if det < MIN_DET {
            return Err(P1Error::Singular(det));
        }
        Ok(Projectivity { m: n })
    }

    pub fn from_real(m: [[f64; 2]; 2]) -> Result<Self, P1Error> {
        Self::new(m.map(|r| r.map(|x| Complex64::new(x, 0.0))))
    }

    pub fn identity() -> Self {
        Projectivity {
            m: [[Complex64::one(), Complex64::zero()], [Complex64::zero(), Complex64::one()]],
        }
    }

    pub fn entries(&self) -> [[Complex64; 2]; 2] {
        self.m
    }

    pub fn det(&self) -> Complex64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    pub fn apply(&self, p: &PointP1) -> PointP1 {
        let [a, b] = p.homogeneous();
        PointP1::from_homogeneous([
            self.m[0][0] * a + self.m[0][1] * b,
            self.m[1][0] * a + self.m[1][1] * b,
        ])
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Projectivity) -> Projectivity {
        let (a, b) = (&self.m, &other.m);
        let m = [
            [a[0][0] * b[0][0] + a[0][1] * b[1][0], a[0][0] * b[0][1] + a[0][1] * b[1][1]],
            [a[1][0] * b[0][0] + a[1][1] * b[1][0], a[1][0] * b[0][1] + a[1][1] * b[1][1]],
        ];
        // A product of invertible maps stays invertible; skip the det guard.
        Self::new(m).unwrap_or(Projectivity { m })
    }

    pub fn inverse(&self) -> Projectivity {
        let m = &self.m;
        let inv = [[m[1][1], -m[0][1]], [-m[1][0], m[0][0]]];
        Self::new(inv).unwrap_or(Projectivity { m: inv })
    }

    /// Projective equality: the 2×2 minors of the pair of unit-normalized
    /// entry vectors are all below `tol`.
    pub fn same_as(&self, other: &Projectivity, tol: f64) -> bool {
        let p = unit4(&self.m);
        let q = unit4(&other.m);
        for i in 0..4 {
            for j in i + 1..4 {
                if (p[i] * q[j] - p[j] * q[i]).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    pub fn is_identity(&self, tol: f64) -> bool {
        self.same_as(&Projectivity::identity(), tol)
    }

    /// Whether the normalized matrix is real up to `tol`.
    pub fn is_real(&self, tol: f64) -> bool {
        self.m.iter().flatten().all(|z| z.im.abs() <= tol)
    }

    /// Smallest `k <= max` with `self^k = id`.
    pub fn order(&self, tol: f64, max: usize) -> Option<usize> {
        let mut acc = *self;
        for k in 1..=max {
            if acc.is_identity(tol) {
                return Some(k);
            }
            acc = acc.compose(self);
        }
        None
    }
}

fn unit4(m: &[[Complex64; 2]; 2]) -> [Complex64; 4] {
    let v = [m[0][0], m[0][1], m[1][0], m[1][1]];
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.map(|z| z / n)
}

impl fmt::Display for Projectivity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m = &self.m;
        write!(f, "[[{}, {}], [{}, {}]]", m[0][0], m[0][1], m[1][0], m[1][1])
    }
}

fn bracket(a: &[Complex64; 2], b: &[Complex64; 2]) -> Complex64 {
    a[0] * b[1] - a[1] * b[0]
}

/// Matrix sending `p1, p2, p3` to `0, 1, ∞`.
fn to_standard(p: &[PointP1; 3]) -> [[Complex64; 2]; 2] {
    let [h1, h2, h3] = p.map(|q| q.homogeneous());
    let k1 = bracket(&h2, &h3);
    let k3 = bracket(&h2, &h1);
    [[h1[1] * k1, -h1[0] * k1], [h3[1] * k3, -h3[0] * k3]]
}

/// The unique projectivity with `src[i] -> dst[i]`.
pub fn mobius_from_triples(src: &[PointP1; 3], dst: &[PointP1; 3]) -> Result<Projectivity, P1Error> {
    let distinct = |t: &[PointP1; 3]| {
        t[0].chordal(&t[1]) > 1e-12 && t[0].chordal(&t[2]) > 1e-12 && t[1].chordal(&t[2]) > 1e-12
    };
    if !distinct(src) || !distinct(dst) {
        return Err(P1Error::DegenerateTriple);
    }
    let a = to_standard(src);
    let b = to_standard(dst);
    let binv = [[b[1][1], -b[0][1]], [-b[1][0], b[0][0]]];
    let m = [
        [
            binv[0][0] * a[0][0] + binv[0][1] * a[1][0],
            binv[0][0] * a[0][1] + binv[0][1] * a[1][1],
        ],
        [
            binv[1][0] * a[0][0] + binv[1][1] * a[1][0],
            binv[1][0] * a[0][1] + binv[1][1] * a[1][1],
        ],
    ];
    Projectivity::new(m)
}

/// Does `sigma` map `src` bijectively onto `dst` within `tol`?
fn maps_onto(sigma: &Projectivity, src: &[PointP1], dst: &[PointP1], tol: f64) -> bool {
    let mut used = vec![false; dst.len()];
    for p in src {
        let q = sigma.apply(p);
        let mut best: Option<(usize, f64)> = None;
        for (j, r) in dst.iter().enumerate() {
            if used[j] {
                continue;
            }
            let dist = q.chordal(r);
            if best.map_or(true, |(_, b)| dist < b) {
                best = Some((j, dist));
            }
        }
        match best {
            Some((j, dist)) if dist <= tol => used[j] = true,
            _ => return false,
        }
    }
    true
}

/// Every projectivity carrying `src` onto `dst` as sets.
pub fn projectivities_between(src: &PointSetP1, dst: &PointSetP1, tol: f64) -> Vec<Projectivity> {
    let n = src.len();
    if n < 3 || dst.len() != n {
        return Vec::new();
    }
    let s = [src.points[0], src.points[1], src.points[2]];
    let found: Vec<Projectivity> = (0..n)
        .into_par_iter()
        .flat_map_iter(|i| {
            let mut local = Vec::new();
            for j in 0..n {
                for k in 0..n {
                    if i == j || j == k || i == k {
                        continue;
                    }
                    let t = [dst.points[i], dst.points[j], dst.points[k]];
                    if let Ok(sigma) = mobius_from_triples(&s, &t) {
                        if maps_onto(&sigma, &src.points, &dst.points, tol) {
                            local.push(sigma);
                        }
                    }
                }
            }
            local
        })
        .collect();
    let mut out: Vec<Projectivity> = Vec::new();
    for sigma in found {
        if !out.iter().any(|m| m.same_as(&sigma, group_tol(tol))) {
            out.push(sigma);
        }
    }
    out
}

fn group_tol(tol: f64) -> f64 {
    (tol * 100.0).max(1e-6)
}

/// Finite subgroups of PGL(2, C).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GroupTag {
    Trivial,
    Cyclic(u32),
    Dihedral(u32),
    Tetrahedral,
    Octahedral,
    Icosahedral,
}

impl GroupTag {
    pub fn order(&self) -> u32 {
        match *self {
            GroupTag::Trivial => 1,
            GroupTag::Cyclic(k) => k,
            GroupTag::Dihedral(k) => 2 * k,
            GroupTag::Tetrahedral => 12,
            GroupTag::Octahedral => 24,
            GroupTag::Icosahedral => 60,
        }
    }

    /// Parse `trivial`, `C<k>`, `D<k>`, `T`, `O`, `I` (case-insensitive).
    pub fn parse(s: &str) -> Option<GroupTag> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        match lower.as_str() {
            "trivial" | "1" => return Some(GroupTag::Trivial),
            "t" | "tetrahedral" => return Some(GroupTag::Tetrahedral),
            "o" | "octahedral" => return Some(GroupTag::Octahedral),
            "i" | "icosahedral" => return Some(GroupTag::Icosahedral),
            _ => {}
        }
        let (head, rest) = if let Some(k) = lower.strip_prefix("cyclic:") {
            ("c", k)
        } else if let Some(k) = lower.strip_prefix("dihedral:") {
            ("d", k)
        } else if lower.is_char_boundary(1) {
            lower.split_at(1)
        } else {
            return None;
        };
        let k: u32 = rest.parse().ok()?;
        match head {
            "c" if k >= 2 => Some(GroupTag::Cyclic(k)),
            "d" if k >= 2 => Some(GroupTag::Dihedral(k)),
            _ => None,
        }
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupTag::Trivial => write!(f, "trivial"),
            GroupTag::Cyclic(k) => write!(f, "C{k}"),
            GroupTag::Dihedral(k) => write!(f, "D{k}"),
            GroupTag::Tetrahedral => write!(f, "T"),
            GroupTag::Octahedral => write!(f, "O"),
            GroupTag::Icosahedral => write!(f, "I"),
        }
    }
}

/// Identify the isomorphism type of a finite group of projectivities.
pub fn classify_group(maps: &[Projectivity], tol: f64) -> Result<GroupTag, P1Error> {
    let gt = group_tol(tol);
    let n = maps.len();
    let index = |m: &Projectivity| maps.iter().position(|g| g.same_as(m, gt));
    if n == 0 || index(&Projectivity::identity()).is_none() {
        return Err(P1Error::NotAGroup);
    }
    for a in maps {
        if index(&a.inverse()).is_none() {
            return Err(P1Error::NotAGroup);
        }
        for b in maps {
            if index(&a.compose(b)).is_none() {
                return Err(P1Error::NotAGroup);
            }
        }
    }
    if n == 1 {
        return Ok(GroupTag::Trivial);
    }
    let orders: Vec<usize> = maps
        .iter()
        .map(|g| g.order(gt, n).ok_or(P1Error::NotAGroup))
        .collect::<Result<_, _>>()?;
    if orders.contains(&n) {
        return Ok(GroupTag::Cyclic(n as u32));
    }
    if n % 2 == 0 {
        let k = n / 2;
        for (ri, r) in maps.iter().enumerate() {
            if orders[ri] != k {
                continue;
            }
            let powers: Vec<Projectivity> = (0..k)
                .scan(Projectivity::identity(), |acc, _| {
                    let cur = *acc;
                    *acc = acc.compose(r);
                    Some(cur)
                })
                .collect();
            let rinv = r.inverse();
            let inverting = maps.iter().enumerate().any(|(si, s)| {
                orders[si] == 2
                    && !powers.iter().any(|p| p.same_as(s, gt))
                    && s.compose(r).compose(s).same_as(&rinv, gt)
            });
            if inverting {
                return Ok(GroupTag::Dihedral(k as u32));
            }
        }
    }
    match n {
        12 => Ok(GroupTag::Tetrahedral),
        24 => Ok(GroupTag::Octahedral),
        60 => Ok(GroupTag::Icosahedral),
        _ => Err(P1Error::UnrecognizedOrder(n)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fin(re: f64, im: f64) -> PointP1 {
        PointP1::finite(re, im)
    }

    fn omega() -> Complex64 {
        Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
    }

    fn contains(set: &PointSetP1, p: PointP1) -> bool {
        set.points().iter().any(|q| q.chordal(&p) < 1e-10)
    }

    #[test]
    fn roots_of_examples() {
        let f = BinaryForm::from_ints(&[-1, 0, 1]).unwrap();
        let r = roots_p1(&f, DEFAULT_TOL).unwrap();
        assert!(contains(&r, fin(1.0, 0.0)) && contains(&r, fin(-1.0, 0.0)));

        // x(x^3 - y^3): coefficients of x^i y^(4-i).
        let f = BinaryForm::from_ints(&[0, -1, 0, 0, 1]).unwrap();
        let r = roots_p1(&f, DEFAULT_TOL).unwrap();
        let w = omega();
        for p in [fin(0.0, 0.0), fin(1.0, 0.0), PointP1::Finite(w), PointP1::Finite(w * w)] {
            assert!(contains(&r, p), "{p}");
        }

        // xy(x^4 - y^4) = x^5 y - x y^5.
        let f = BinaryForm::from_ints(&[0, -1, 0, 0, 0, 1, 0]).unwrap();
        let r = roots_p1(&f, DEFAULT_TOL).unwrap();
        assert_eq!(r.len(), 6);
        for p in [fin(0.0, 0.0), PointP1::Infinity, fin(1.0, 0.0), fin(0.0, 1.0), fin(-1.0, 0.0), fin(0.0, -1.0)] {
            assert!(contains(&r, p), "{p}");
        }
    }

    #[test]
    fn multiple_roots_rejected() {
        // x^2 y^2 has double zeros at 0 and infinity.
        let f = BinaryForm::from_ints(&[0, 0, 1, 0, 0]).unwrap();
        assert!(matches!(roots_p1(&f, DEFAULT_TOL), Err(P1Error::MultipleRoot { .. })));
        // (x - y)^2 (x + y)
        let f = BinaryForm::from_ints(&[1, -1, -1, 1]).unwrap();
        assert!(matches!(roots_p1(&f, DEFAULT_TOL), Err(P1Error::MultipleRoot { .. })));
        assert!(matches!(BinaryForm::from_ints(&[0, 0]), Err(P1Error::ZeroForm)));
    }

    #[test]
    fn triples() {
        let zero = fin(0.0, 0.0);
        let one = fin(1.0, 0.0);
        let inf = PointP1::Infinity;
        let id = mobius_from_triples(&[zero, one, inf], &[zero, one, inf]).unwrap();
        assert!(id.is_identity(1e-14));
        let inv = mobius_from_triples(&[zero, one, inf], &[inf, one, zero]).unwrap();
        assert!(inv.same_as(&Projectivity::from_real([[0.0, 1.0], [1.0, 0.0]]).unwrap(), 1e-14));
        let i = Complex64::i();
        let rot = mobius_from_triples(
            &[one, fin(0.0, 1.0), fin(-1.0, 0.0)],
            &[fin(0.0, 1.0), fin(-1.0, 0.0), fin(0.0, -1.0)],
        )
        .unwrap();
        let want = Projectivity::new([[i, Complex64::zero()], [Complex64::zero(), Complex64::one()]]).unwrap();
        assert!(rot.same_as(&want, 1e-14));
        assert!(matches!(mobius_from_triples(&[zero, zero, one], &[zero, one, inf]), Err(P1Error::DegenerateTriple)));
    }

    #[test]
    fn interpolation_reproduces_targets() {
        let src = [fin(0.3, -1.0), fin(2.0, 0.5), PointP1::Infinity];
        let dst = [fin(-4.0, 0.0), fin(0.0, 0.0), fin(1.0, 1.0)];
        let m = mobius_from_triples(&src, &dst).unwrap();
        for (s, d) in src.iter().zip(dst.iter()) {
            assert!(m.apply(s).chordal(d) < 1e-12);
        }
        let back = m.inverse();
        for (s, d) in src.iter().zip(dst.iter()) {
            assert!(back.apply(d).chordal(s) < 1e-12);
        }
    }

    fn group_of(coeffs: &[i64]) -> (usize, GroupTag) {
        let f = BinaryForm::from_ints(coeffs).unwrap();
        let z = roots_p1(&f, DEFAULT_TOL).unwrap();
        let maps = projectivities_between(&z, &z, DEFAULT_TOL);
        let tag = classify_group(&maps, DEFAULT_TOL).unwrap();
        (maps.len(), tag)
    }

    #[test]
    fn symmetry_groups_of_classical_sets() {
        // x^4 - y^4: zeros {1, i, -1, -i}.
        assert_eq!(group_of(&[-1, 0, 0, 0, 1]), (8, GroupTag::Dihedral(4)));
        // x(x^3 - y^3): tetrahedral.
        assert_eq!(group_of(&[0, -1, 0, 0, 1]), (12, GroupTag::Tetrahedral));
        // x^8 + 14 x^4 y^4 + y^8: octahedral.
        assert_eq!(group_of(&[1, 0, 0, 0, 14, 0, 0, 0, 1]), (24, GroupTag::Octahedral));
        // x^3 - y^3: any three points have symmetry S3 = D3.
        assert_eq!(group_of(&[-1, 0, 0, 1]), (6, GroupTag::Dihedral(3)));
    }

    #[test]
    fn icosahedral_set() {
        // xy(x^10 + 11 x^5 y^5 - y^10)
        let mut c = vec![0i64; 13];
        c[11] = 1;
        c[6] = 11;
        c[1] = -1;
        assert_eq!(group_of(&c), (60, GroupTag::Icosahedral));
    }

    #[test]
    fn mismatched_sets_have_no_maps() {
        let a = roots_p1(&BinaryForm::from_ints(&[-1, 0, 0, 0, 1]).unwrap(), DEFAULT_TOL).unwrap();
        let b = roots_p1(&BinaryForm::from_ints(&[-2, 0, 0, 0, 1]).unwrap(), DEFAULT_TOL).unwrap();
        // z^4 - 2 t^4 has zeros on a circle of radius 2^(1/4): still a square,
        // so the two sets are projectively equivalent.
        assert_eq!(projectivities_between(&a, &b, DEFAULT_TOL).len(), 8);
        let c = roots_p1(&BinaryForm::from_ints(&[-6, 1, 0, 0, 1]).unwrap(), DEFAULT_TOL).unwrap();
        assert_eq!(projectivities_between(&a, &c, DEFAULT_TOL).len(), 0);
        assert_eq!(projectivities_between(&c, &a, DEFAULT_TOL).len(), 0);
    }

    #[test]
    fn classification_failures() {
        let half_turn = Projectivity::from_real([[-1.0, 0.0], [0.0, 1.0]]).unwrap();
        let quarter = Projectivity::new([[Complex64::i(), Complex64::zero()], [Complex64::zero(), Complex64::one()]]).unwrap();
        assert_eq!(classify_group(&[Projectivity::identity()], DEFAULT_TOL), Ok(GroupTag::Trivial));
        assert_eq!(
            classify_group(&[Projectivity::identity(), half_turn], DEFAULT_TOL),
            Ok(GroupTag::Cyclic(2))
        );
        assert_eq!(
            classify_group(&[Projectivity::identity(), quarter], DEFAULT_TOL),
            Err(P1Error::NotAGroup)
        );
    }

    #[test]
    fn tags_round_trip() {
        for t in [
            GroupTag::Trivial,
            GroupTag::Cyclic(5),
            GroupTag::Dihedral(3),
            GroupTag::Tetrahedral,
            GroupTag::Octahedral,
            GroupTag::Icosahedral,
        ] {
            assert_eq!(GroupTag::parse(&t.to_string()), Some(t));
        }
        assert_eq!(GroupTag::parse("C1"), None);
        assert_eq!(GroupTag::parse("cyclic:4"), Some(GroupTag::Cyclic(4)));
        assert_eq!(GroupTag::parse("Dihedral:3"), Some(GroupTag::Dihedral(3)));
        assert_eq!(GroupTag::parse(""), None);
        assert_eq!(GroupTag::parse("é5"), None);
    }

    #[test]
    fn composition_of_form_with_projectivity() {
        // f = x^2 - y^2 under (x, y) -> (y, x) becomes z^0 t^2 ... = t^2 - z^2.
        let f = BinaryForm::from_ints(&[-1, 0, 1]).unwrap();
        let swap = Projectivity::from_real([[0.0, 1.0], [1.0, 0.0]]).unwrap();
        let g = f.compose(&swap);
        assert!((g[0] - Complex64::one()).norm() < 1e-15);
        assert!((g[2] + Complex64::one()).norm() < 1e-15);
        assert!(g[1].norm() < 1e-15);
    }
}
