//! Monomials and monomial orderings.
//!
//! Exponents are `u16` (degrees stay far below that at any scale this crate
//! targets) and the total degree is cached, since order comparisons dominate
//! the Gröbner engine's runtime. The variable order is fixed as
//! `x1 > x2 > ... > xn` for both supported orderings.

use crate::error::{Error, Result};
use alloc::vec::Vec;
use core::cmp::Ordering;
use smallvec::SmallVec;

/// Exponent vector with cached total degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    deg: u32,
    exps: SmallVec<[u16; 16]>,
}

impl Monomial {
    /// The constant monomial `1` in `n` variables.
    pub fn one(n: usize) -> Monomial {
        Monomial {
            deg: 0,
            exps: SmallVec::from_elem(0, n),
        }
    }

    /// The variable `x_j` (1-based index).
    pub fn variable(n: usize, j: usize) -> Monomial {
        assert!(j >= 1 && j <= n, "variable index {j} out of range 1..={n}");
        let mut exps = SmallVec::from_elem(0u16, n);
        exps[j - 1] = 1;
        Monomial { deg: 1, exps }
    }

    /// Monomial from an explicit exponent vector.
    pub fn from_exponents(exps: &[u16]) -> Monomial {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial {
            deg,
            exps: SmallVec::from_slice(exps),
        }
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn total_degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, j: usize) -> u16 {
        self.exps[j - 1]
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a + b)
            .collect();
        Monomial {
            deg: self.deg + other.deg,
            exps,
        }
    }

    /// Multiply by a single variable (1-based index).
    pub fn mul_variable(&self, j: usize) -> Monomial {
        let mut m = self.clone();
        m.exps[j - 1] += 1;
        m.deg += 1;
        m
    }

    /// Coordinatewise divisibility test: does `self` divide `other`?
    #[inline]
    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg
            && self
                .exps
                .iter()
                .zip(&other.exps)
                .all(|(&a, &b)| a <= b)
    }

    /// Exact quotient `self / other`, or `None` when not divisible.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if !other.divides(self) {
            return None;
        }
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a - b)
            .collect();
        Some(Monomial {
            deg: self.deg - other.deg,
            exps,
        })
    }

    /// Least common multiple.
    pub fn lcm(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps: SmallVec<[u16; 16]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let deg = exps.iter().map(|&e| e as u32).sum();
        Monomial { deg, exps }
    }

    /// True when the monomials share no variable.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(&a, &b)| a == 0 || b == 0)
    }

    /// True for a pure power `x_j^k` with `k >= 1`, returning `j` (1-based).
    pub fn pure_power_variable(&self) -> Option<usize> {
        let mut var = None;
        for (i, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                if var.is_some() {
                    return None;
                }
                var = Some(i + 1);
            }
        }
        var
    }
}

/// Monomial orderings with the variable order `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    /// Graded reverse lexicographic: compare total degrees first; on a tie
    /// the monomial with the smaller exponent on the last variable where
    /// they differ is the larger one.
    Grevlex,
    /// Lexicographic: the first differing exponent from `x1` decides.
    Lex,
}

impl MonomialOrder {
    /// Checked comparison; errors when the variable counts differ.
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        if a.exps.len() != b.exps.len() {
            return Err(Error::DimensionMismatch {
                expected: a.exps.len(),
                found: b.exps.len(),
            });
        }
        Ok(self.cmp_mons(a, b))
    }

    /// Comparison without the dimension check (hot path).
    #[inline]
    pub fn cmp_mons(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.exps.len(), b.exps.len());
        match self {
            MonomialOrder::Grevlex => match a.deg.cmp(&b.deg) {
                Ordering::Equal => {
                    for (ea, eb) in a.exps.iter().zip(&b.exps).rev() {
                        match ea.cmp(eb) {
                            Ordering::Equal => continue,
                            // Smaller exponent on the last differing
                            // variable means the larger monomial.
                            Ordering::Less => return Ordering::Greater,
                            Ordering::Greater => return Ordering::Less,
                        }
                    }
                    Ordering::Equal
                }
                other => other,
            },
            MonomialOrder::Lex => {
                for (ea, eb) in a.exps.iter().zip(&b.exps) {
                    match ea.cmp(eb) {
                        Ordering::Equal => continue,
                        other => return other,
                    }
                }
                Ordering::Equal
            }
        }
    }
}

/// All monomials of total degree exactly `d` in `n` variables, in
/// decreasing order for the given ordering.
pub fn monomials_of_degree(n: usize, d: u16, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, n);
    fill_degree(&mut out, &mut exps, 0, d);
    out.sort_unstable_by(|a, b| order.cmp_mons(b, a));
    out
}

/// All monomials of total degree at most `d`, in decreasing order.
pub fn monomials_up_to_degree(n: usize, d: u16, order: MonomialOrder) -> Vec<Monomial> {
    let mut out = Vec::new();
    for k in 0..=d {
        let mut exps: SmallVec<[u16; 16]> = SmallVec::from_elem(0, n);
        fill_degree(&mut out, &mut exps, 0, k);
    }
    out.sort_unstable_by(|a, b| order.cmp_mons(b, a));
    out
}

fn fill_degree(out: &mut Vec<Monomial>, exps: &mut SmallVec<[u16; 16]>, var: usize, left: u16) {
    if var + 1 == exps.len() {
        exps[var] = left;
        out.push(Monomial {
            deg: exps.iter().map(|&e| e as u32).sum(),
            exps: exps.clone(),
        });
        exps[var] = 0;
        return;
    }
    for e in 0..=left {
        exps[var] = e;
        fill_degree(out, exps, var + 1, left - e);
    }
    exps[var] = 0;
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn mon(exps: &[u16]) -> Monomial {
        Monomial::from_exponents(exps)
    }

    #[test]
    fn grevlex_definition_checks() {
        let o = MonomialOrder::Grevlex;
        // x1^2 vs x1*x2: equal degree, x1^2 has smaller exponent on x2.
        assert_eq!(o.cmp_mons(&mon(&[2, 0]), &mon(&[1, 1])), Ordering::Greater);
        // Degree decides first: x3^3 > x1*x2 in 3 variables.
        assert_eq!(
            o.cmp_mons(&mon(&[0, 0, 3]), &mon(&[1, 1, 0])),
            Ordering::Greater
        );
        // Classic: x1*x3 vs x2^2 in grevlex: last differing variable is x3,
        // where x2^2 has exponent 0 < 1, so x2^2 is larger.
        assert_eq!(
            o.cmp_mons(&mon(&[1, 0, 1]), &mon(&[0, 2, 0])),
            Ordering::Less
        );
    }

    #[test]
    fn lex_definition_checks() {
        let o = MonomialOrder::Lex;
        // x1 > x2^5 under lex.
        assert_eq!(o.cmp_mons(&mon(&[1, 0]), &mon(&[0, 5])), Ordering::Greater);
        assert_eq!(o.cmp_mons(&mon(&[1, 2]), &mon(&[1, 3])), Ordering::Less);
    }

    #[test]
    fn compare_rejects_dimension_mismatch() {
        let o = MonomialOrder::Grevlex;
        assert!(o.compare(&mon(&[1, 0]), &mon(&[1, 0, 0])).is_err());
        assert_eq!(
            o.compare(&mon(&[1, 0]), &mon(&[0, 1])).unwrap(),
            Ordering::Greater
        );
    }

    #[test]
    fn one_is_minimal_in_both_orders() {
        let one = Monomial::one(3);
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            for m in monomials_up_to_degree(3, 3, order) {
                if !m.is_one() {
                    assert_eq!(order.cmp_mons(&one, &m), Ordering::Less);
                }
            }
        }
    }

    #[test]
    fn divisibility_and_quotients() {
        let a = mon(&[2, 1, 0]);
        let b = mon(&[1, 0, 0]);
        assert!(b.divides(&a));
        assert!(!a.divides(&b));
        assert_eq!(a.div(&b).unwrap(), mon(&[1, 1, 0]));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&mon(&[0, 2, 1])), mon(&[2, 2, 1]));
        assert!(mon(&[1, 0, 0]).is_coprime(&mon(&[0, 2, 1])));
        assert!(!mon(&[1, 1, 0]).is_coprime(&mon(&[0, 2, 1])));
    }

    #[test]
    fn pure_power_detection() {
        assert_eq!(mon(&[0, 3, 0]).pure_power_variable(), Some(2));
        assert_eq!(mon(&[1, 0, 0]).pure_power_variable(), Some(1));
        assert_eq!(mon(&[1, 1, 0]).pure_power_variable(), None);
        assert_eq!(Monomial::one(3).pure_power_variable(), None);
    }

    #[test]
    fn degree_enumeration_counts() {
        // Stars and bars: binom(n-1+d, d) monomials of degree d.
        assert_eq!(
            monomials_of_degree(3, 4, MonomialOrder::Grevlex).len(),
            15
        );
        // Degree <= 2 in 2 vars: binom(4, 2) = 6.
        assert_eq!(
            monomials_up_to_degree(2, 2, MonomialOrder::Grevlex).len(),
            6
        );
    }

    #[test]
    fn enumeration_is_strictly_decreasing() {
        for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
            let ms = monomials_up_to_degree(4, 3, order);
            for w in ms.windows(2) {
                assert_eq!(order.cmp_mons(&w[0], &w[1]), Ordering::Greater);
            }
        }
    }

    proptest! {
        // Multiplicativity: a < b iff m*a < m*b, for both orders.
        #[test]
        fn order_is_multiplicative(
            a in proptest::collection::vec(0u16..5, 4),
            b in proptest::collection::vec(0u16..5, 4),
            m in proptest::collection::vec(0u16..5, 4),
        ) {
            let (a, b, m) = (mon(&a), mon(&b), mon(&m));
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                let before = order.cmp_mons(&a, &b);
                let after = order.cmp_mons(&a.mul(&m), &b.mul(&m));
                prop_assert_eq!(before, after);
            }
        }

        // In one variable both orders collapse to degree comparison.
        #[test]
        fn univariate_orders_agree(a in 0u16..30, b in 0u16..30) {
            let (ma, mb) = (mon(&[a]), mon(&[b]));
            let g = MonomialOrder::Grevlex.cmp_mons(&ma, &mb);
            let l = MonomialOrder::Lex.cmp_mons(&ma, &mb);
            prop_assert_eq!(g, l);
            prop_assert_eq!(g, a.cmp(&b));
        }

        // Total order: antisymmetry and transitivity on samples.
        #[test]
        fn order_is_consistent(
            a in proptest::collection::vec(0u16..4, 3),
            b in proptest::collection::vec(0u16..4, 3),
            c in proptest::collection::vec(0u16..4, 3),
        ) {
            let (a, b, c) = (mon(&a), mon(&b), mon(&c));
            for order in [MonomialOrder::Grevlex, MonomialOrder::Lex] {
                prop_assert_eq!(order.cmp_mons(&a, &b), order.cmp_mons(&b, &a).reverse());
                if order.cmp_mons(&a, &b) == Ordering::Less
                    && order.cmp_mons(&b, &c) == Ordering::Less
                {
                    prop_assert_eq!(order.cmp_mons(&a, &c), Ordering::Less);
                }
                prop_assert_eq!(order.cmp_mons(&a, &b) == Ordering::Equal, a == b);
            }
        }
    }
}
