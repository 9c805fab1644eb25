use std::cmp::Ordering;

use num_complex::Complex64;

/// Index pairs of the Plücker coordinates, in the order
/// `p12, p13, p14, p23, p24, p34` (0-based).
pub const PLUCKER_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LineError {
    #[error("the two spanning points are linearly dependent")]
    RankDeficient,
    #[error("non-finite coordinate")]
    NonFinite,
}

/// A line in complex projective 3-space, spanned by two points.
///
/// `plucker` holds the 2-minors of the 4×2 basis matrix scaled so that the
/// entry of largest modulus is exactly 1.
#[derive(Clone, Debug)]
pub struct Line3 {
    basis: [[Complex64; 4]; 2],
    plucker: [Complex64; 6],
}

fn minors(a: &[Complex64; 4], b: &[Complex64; 4]) -> [Complex64; 6] {
    PLUCKER_PAIRS.map(|(i, j)| a[i] * b[j] - a[j] * b[i])
}

fn argmax_modulus(v: &[Complex64]) -> usize {
    let mut best = 0;
    for (i, z) in v.iter().enumerate() {
        // Strict comparison with a relative margin keeps ties on the first index.
        if z.norm() > v[best].norm() * (1.0 + 1e-12) {
            best = i;
        }
    }
    best
}

fn unit(v: &[Complex64]) -> Vec<Complex64> {
    let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
    v.iter().map(|z| z / n).collect()
}

impl Line3 {
    pub fn from_points(a: [Complex64; 4], b: [Complex64; 4]) -> Result<Line3, LineError> {
        if a.iter().chain(b.iter()).any(|z| !z.is_finite()) {
            return Err(LineError::NonFinite);
        }
        let scale = a.iter().map(|z| z.norm()).fold(0.0, f64::max)
            * b.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let p = minors(&a, &b);
        let k = argmax_modulus(&p);
        if scale == 0.0 || p[k].norm() <= 1e-13 * scale {
            return Err(LineError::RankDeficient);
        }
        let pivot = p[k];
        Ok(Line3 {
            basis: [a, b],
            plucker: p.map(|z| z / pivot),
        })
    }

    pub fn from_real_points(a: [f64; 4], b: [f64; 4]) -> Result<Line3, LineError> {
        Self::from_points(a.map(|x| Complex64::new(x, 0.0)), b.map(|x| Complex64::new(x, 0.0)))
    }

    /// The two spanning points (columns of the basis matrix).
    pub fn points(&self) -> &[[Complex64; 4]; 2] {
        &self.basis
    }

    pub fn plucker(&self) -> &[Complex64; 6] {
        &self.plucker
    }

    /// `|p12 p34 - p13 p24 + p14 p23|` for the normalized coordinates.
    pub fn plucker_residual(&self) -> f64 {
        let p = &self.plucker;
        (p[0] * p[5] - p[1] * p[4] + p[2] * p[3]).norm()
    }

    /// Bilinear incidence pairing on unit-normalized Plücker vectors; zero
    /// exactly when the two lines meet.
    pub fn pairing(&self, other: &Line3) -> Complex64 {
        let p = unit(&self.plucker);
        let q = unit(&other.plucker);
        p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[5] * q[0] - p[4] * q[1] + p[3] * q[2]
    }

    pub fn meets(&self, other: &Line3, tol: f64) -> bool {
        self.pairing(other).norm() <= tol
    }

    /// Same line up to tolerance: all 2×2 minors of the pair of unit Plücker
    /// vectors are small.
    pub fn same_as(&self, other: &Line3, tol: f64) -> bool {
        let p = unit(&self.plucker);
        let q = unit(&other.plucker);
        for i in 0..6 {
            for j in i + 1..6 {
                if (p[i] * q[j] - p[j] * q[i]).norm() > tol {
                    return false;
                }
            }
        }
        true
    }

    /// True when the normalized Plücker vector is real up to `tol`, i.e. the
    /// line is defined over the reals.
    pub fn is_real(&self, tol: f64) -> bool {
        self.plucker.iter().all(|z| z.im.abs() <= tol)
    }

    /// Deterministic total order used to sort line lists: lexicographic on
    /// the normalized Plücker vector rounded to 1e-9.
    pub fn cmp_canonical(&self, other: &Line3) -> Ordering {
        let key = |l: &Line3| {
            l.plucker
                .iter()
                .flat_map(|z| [round9(z.re), round9(z.im)])
                .collect::<Vec<f64>>()
        };
        let (a, b) = (key(self), key(other));
        for (x, y) in a.iter().zip(b.iter()) {
            match x.total_cmp(y) {
                Ordering::Equal => continue,
                o => return o,
            }
        }
        Ordering::Equal
    }
}

fn round9(x: f64) -> f64 {
    let r = (x * 1e9).round() / 1e9;
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

/// Sort lines canonically in place.
pub fn sort_lines(lines: &mut [Line3]) {
    lines.sort_by(|a, b| a.cmp_canonical(b));
}

/// Number of unordered pairs in `lines` that are not distinct up to `tol`.
pub fn count_duplicates(lines: &[Line3], tol: f64) -> usize {
    let mut dup = 0;
    for i in 0..lines.len() {
        for j in i + 1..lines.len() {
            if lines[i].same_as(&lines[j], tol) {
                dup += 1;
            }
        }
    }
    dup
}
