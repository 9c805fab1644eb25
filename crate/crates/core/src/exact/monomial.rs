use std::cmp::Ordering;
use std::fmt;

use smallvec::SmallVec;

/// Exponent vector of a monomial, one slot per ring variable.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: SmallVec<[u16; 6]>,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
        }
    }

    pub fn from_exponents(exps: &[u16]) -> Self {
        Monomial {
            exps: SmallVec::from_slice(exps),
        }
    }

    /// The monomial `x_var^power` in a ring with `nvars` variables.
    pub fn var_power(nvars: usize, var: usize, power: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[var] = power;
        m
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
                .collect(),
        }
    }

    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    #[inline]
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial {
            exps: other
                .exps
                .iter()
                .zip(self.exps.iter())
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this monomial is a power of a single variable, return `(var, power)`.
    pub fn pure_power(&self) -> Option<(usize, u16)> {
        let mut found = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }

    /// Multiply by a single variable in place.
    pub fn bump(&mut self, var: usize) {
        self.exps[var] += 1;
    }

    pub(crate) fn set_exponent(&mut self, var: usize, e: u16) {
        self.exps[var] = e;
    }

    /// Remap into a ring with a different variable count; `map[i]` gives the
    /// target slot of variable `i`.
    pub fn remap(&self, target_nvars: usize, map: &[usize]) -> Monomial {
        let mut m = Monomial::one(target_nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            m.exps[map[i]] += e;
        }
        m
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}

/// Term order on monomials. Variables are ordered by index, variable 0 largest.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    Lex,
    DegLex,
    #[default]
    DegRevLex,
}

impl MonomialOrder {
    #[inline]
    pub fn cmp(self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.exps.cmp(&b.exps),
            MonomialOrder::DegLex => a
                .degree()
                .cmp(&b.degree())
                .then_with(|| a.exps.cmp(&b.exps)),
            MonomialOrder::DegRevLex => a.degree().cmp(&b.degree()).then_with(|| {
                for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::DegLex => "deglex",
            MonomialOrder::DegRevLex => "degrevlex",
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u16]) -> Monomial {
        Monomial::from_exponents(e)
    }

    #[test]
    fn degrevlex_breaks_ties_on_last_variable() {
        let o = MonomialOrder::DegRevLex;
        // x^2 > xy > y^2 > xz > yz > z^2
        let chain = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in chain.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater, "{:?} {:?}", w[0], w[1]);
        }
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[2, 0, 0])), Ordering::Less);
    }

    #[test]
    fn lex_ignores_degree() {
        let o = MonomialOrder::Lex;
        assert_eq!(o.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Greater);
        assert_eq!(MonomialOrder::DegLex.cmp(&m(&[1, 0]), &m(&[0, 9])), Ordering::Less);
    }

    #[test]
    fn divisibility_and_lcm() {
        let a = m(&[2, 1, 0]);
        let b = m(&[3, 1, 4]);
        assert!(a.divides(&b));
        assert_eq!(a.quotient_of(&b), Some(m(&[1, 0, 4])));
        assert_eq!(b.quotient_of(&a), None);
        assert_eq!(a.lcm(&m(&[0, 2, 1])), m(&[2, 2, 1]));
        assert!(m(&[1, 0, 0]).is_coprime(&m(&[0, 3, 1])));
        assert_eq!(m(&[0, 5, 0]).pure_power(), Some((1, 5)));
        assert_eq!(m(&[1, 5, 0]).pure_power(), None);
    }
}
