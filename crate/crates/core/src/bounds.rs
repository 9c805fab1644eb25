//! Closed-form upper bounds on the number of lines on a smooth surface of
//! degree `d`, and the lower bound from separable surfaces.

use crate::separable::maximal_count;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum BoundsError {
    #[error("degree {0} is below 3")]
    DegreeTooLow(u64),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundTable {
    pub d: u64,
    /// `(d-2)(11d-6)`
    pub segre: u64,
    /// `d(7d-12)`, valid under the coplanar-lines hypothesis.
    pub uniform: u64,
    /// `8d-14`: lines meeting a fixed line.
    pub per_line: u64,
    /// Most lines realized by a separable surface.
    pub separable_max: u64,
    /// Largest line count among known examples: the separable maximum, or
    /// the 352 lines on the octic `S8`.
    pub best_known: u64,
    /// `2d(d-2)`: disjoint lines.
    pub miyaoka: u64,
}

/// Line counts of explicit non-separable examples exceeding the separable maximum.
const RECORDS: [(u64, u64); 1] = [(8, 352)];

pub fn bound_table(d: u64) -> Result<BoundTable, BoundsError> {
    if d < 3 {
        return Err(BoundsError::DegreeTooLow(d));
    }
    let separable_max = maximal_count(d as usize).expect("d >= 3") as u64;
    let record = RECORDS.iter().find(|r| r.0 == d).map_or(0, |r| r.1);
    Ok(BoundTable {
        d,
        segre: (d - 2) * (11 * d - 6),
        uniform: d * (7 * d - 12),
        per_line: 8 * d - 14,
        separable_max,
        best_known: separable_max.max(record),
        miyaoka: 2 * d * (d - 2),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UniformDerivation {
    pub per_line: u64,
    pub off_plane_per_line: u64,
    pub total: u64,
}

/// Intermediate quantities of the uniform bound: each of `d` coplanar lines
/// meets at most `8d-14` lines, `d-1` of them in the plane.
pub fn uniform_bound_derivation(d: u64) -> Result<UniformDerivation, BoundsError> {
    if d < 3 {
        return Err(BoundsError::DegreeTooLow(d));
    }
    let per_line = 8 * d - 14;
    let off_plane_per_line = per_line - (d - 1);
    let total = d + d * off_plane_per_line;
    debug_assert_eq!(total, d * (7 * d - 12));
    Ok(UniformDerivation {
        per_line,
        off_plane_per_line,
        total,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn published_uniform_row() {
        let row = [(4, 64), (5, 115), (6, 180), (7, 259), (8, 352), (9, 459), (10, 580), (11, 715), (12, 864), (20, 2560)];
        for (d, v) in row {
            assert_eq!(bound_table(d).unwrap().uniform, v, "d = {d}");
            assert_eq!(uniform_bound_derivation(d).unwrap().total, v);
        }
    }

    #[test]
    fn spot_values() {
        let t8 = bound_table(8).unwrap();
        assert_eq!((t8.uniform, t8.segre), (352, 492));
        let t4 = bound_table(4).unwrap();
        assert_eq!((t4.uniform, t4.segre, t4.per_line), (64, 76, 18));
        assert_eq!(uniform_bound_derivation(3).unwrap().total, 27);
        assert_eq!(uniform_bound_derivation(4).unwrap().per_line, 18);
        assert!(bound_table(2).is_err());
    }

    #[test]
    fn orderings_and_equality_degrees() {
        for d in 4..=100 {
            let t = bound_table(d).unwrap();
            assert!(t.separable_max <= t.best_known && t.best_known <= t.uniform && t.uniform <= t.segre, "d = {d}");
            assert_eq!(t.best_known == t.uniform, [4, 6, 8, 12].contains(&d), "d = {d}");
            assert_eq!(t.separable_max == t.uniform, [4, 6, 12].contains(&d), "d = {d}");
            assert_eq!(bound_table(d).unwrap(), t);
        }
    }
}
