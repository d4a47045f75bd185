//! Sparse multivariate polynomial arithmetic over `GF(q)`.
//!
//! A [`Polynomial`] carries its field, variable count and active monomial
//! order; terms are kept strictly decreasing in that order with no zero
//! coefficients, so the leading term is always the first entry.

mod monomial;

pub use monomial::{monomials_of_degree, monomials_up_to_degree, Monomial, MonomialOrder};

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeField};
use alloc::vec::Vec;
use core::cmp::Ordering;
use hashbrown::HashMap;

/// One term of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub monomial: Monomial,
    pub coeff: FieldElement,
}

/// Sparse polynomial over `GF(q)` with terms sorted strictly decreasing in
/// the active order. The zero polynomial is the empty term list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    field: PrimeField,
    n_vars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(field: PrimeField, n_vars: usize, order: MonomialOrder) -> Polynomial {
        Polynomial {
            field,
            n_vars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(
        field: PrimeField,
        n_vars: usize,
        order: MonomialOrder,
        c: FieldElement,
    ) -> Polynomial {
        let mut p = Polynomial::zero(field, n_vars, order);
        if !c.is_zero() {
            p.terms.push(Term {
                monomial: Monomial::one(n_vars),
                coeff: c,
            });
        }
        p
    }

    /// Builds a polynomial from arbitrary (monomial, coefficient) pairs:
    /// sorts, merges duplicates and drops zero coefficients.
    pub fn from_terms(
        field: PrimeField,
        n_vars: usize,
        order: MonomialOrder,
        terms: impl IntoIterator<Item = (Monomial, FieldElement)>,
    ) -> Polynomial {
        let mut list: Vec<Term> = terms
            .into_iter()
            .map(|(monomial, coeff)| {
                assert_eq!(monomial.num_vars(), n_vars, "monomial dimension mismatch");
                Term { monomial, coeff }
            })
            .collect();
        list.sort_unstable_by(|a, b| order.cmp_mons(&b.monomial, &a.monomial));
        let mut merged: Vec<Term> = Vec::with_capacity(list.len());
        for t in list {
            match merged.last_mut() {
                Some(last) if last.monomial == t.monomial => {
                    last.coeff = field.add(last.coeff, t.coeff);
                }
                _ => merged.push(t),
            }
        }
        merged.retain(|t| !t.coeff.is_zero());
        Polynomial {
            field,
            n_vars,
            order,
            terms: merged,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n_vars
    }

    #[inline]
    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    #[inline]
    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    /// Total degree; the zero polynomial has none.
    pub fn total_degree(&self) -> Result<u32> {
        self.terms
            .iter()
            .map(|t| t.monomial.total_degree())
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    /// True when all terms share one degree. Vacuously true for zero.
    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.monomial.total_degree();
                self.terms.iter().all(|t| t.monomial.total_degree() == d)
            }
        }
    }

    fn assert_compatible(&self, other: &Polynomial) {
        assert_eq!(self.field, other.field, "field contexts differ");
        assert_eq!(self.n_vars, other.n_vars, "variable counts differ");
        assert_eq!(self.order, other.order, "monomial orders differ");
    }

    /// Sum, by merging the two sorted term lists.
    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (a, b) = (&self.terms[i], &other.terms[j]);
            match self.order.cmp_mons(&a.monomial, &b.monomial) {
                Ordering::Greater => {
                    terms.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.field.add(a.coeff, b.coeff);
                    if !c.is_zero() {
                        terms.push(Term {
                            monomial: a.monomial.clone(),
                            coeff: c,
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial {
            field: self.field,
            n_vars: self.n_vars,
            order: self.order,
            terms,
        }
    }

    pub fn neg(&self) -> Polynomial {
        let mut p = self.clone();
        for t in &mut p.terms {
            t.coeff = self.field.neg(t.coeff);
        }
        p
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    /// Scalar multiple; scaling by zero yields the zero polynomial.
    pub fn scale(&self, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.n_vars, self.order);
        }
        let mut p = self.clone();
        for t in &mut p.terms {
            t.coeff = self.field.mul(t.coeff, c);
        }
        p
    }

    /// Multiple by `c * m`. Sortedness is preserved because monomial orders
    /// are multiplicative.
    pub fn mul_term(&self, m: &Monomial, c: FieldElement) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.field, self.n_vars, self.order);
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Term {
                monomial: t.monomial.mul(m),
                coeff: self.field.mul(t.coeff, c),
            })
            .collect();
        Polynomial {
            field: self.field,
            n_vars: self.n_vars,
            order: self.order,
            terms,
        }
    }

    /// Product, accumulating cross terms in a hash map before re-sorting.
    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.assert_compatible(other);
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() + other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let m = a.monomial.mul(&b.monomial);
                let c = self.field.mul(a.coeff, b.coeff);
                let entry = acc.entry(m).or_insert(FieldElement::ZERO);
                *entry = self.field.add(*entry, c);
            }
        }
        Polynomial::from_terms(self.field, self.n_vars, self.order, acc)
    }

    /// Formal partial derivative with respect to `x_j` (1-based).
    pub fn partial_derivative(&self, j: usize) -> Polynomial {
        assert!(j >= 1 && j <= self.n_vars, "variable index out of range");
        let field = self.field;
        let terms = self.terms.iter().filter_map(|t| {
            let e = t.monomial.exponent(j);
            if e == 0 {
                return None;
            }
            let coeff = field.mul(t.coeff, field.element(e as u64));
            if coeff.is_zero() {
                return None; // characteristic divides the exponent
            }
            let mut exps = t.monomial.exponents().to_vec();
            exps[j - 1] -= 1;
            Some((Monomial::from_exponents(&exps), coeff))
        });
        // Dividing one variable's exponent preserves relative order within
        // the filtered terms for grevlex and lex alike, but re-sorting is
        // cheap and keeps this obviously correct.
        Polynomial::from_terms(field, self.n_vars, self.order, terms.collect::<Vec<_>>())
    }

    /// Evaluation at a point of `GF(q)^n`.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<FieldElement> {
        if point.len() != self.n_vars {
            return Err(Error::DimensionMismatch {
                expected: self.n_vars,
                found: point.len(),
            });
        }
        let f = self.field;
        let mut acc = f.zero();
        for t in &self.terms {
            let mut v = t.coeff;
            for (j, &e) in t.monomial.exponents().iter().enumerate() {
                if e > 0 {
                    v = f.mul(v, f.pow(point[j], e as u64));
                }
            }
            acc = f.add(acc, v);
        }
        Ok(acc)
    }

    /// Substitutes constants for the trailing variables `x_{k+1}, ..., x_n`,
    /// returning a polynomial in the first `k` variables.
    pub fn specialize_suffix(&self, values: &[FieldElement]) -> Polynomial {
        assert!(values.len() <= self.n_vars);
        let k = self.n_vars - values.len();
        let f = self.field;
        let terms: Vec<(Monomial, FieldElement)> = self
            .terms
            .iter()
            .map(|t| {
                let exps = t.monomial.exponents();
                let mut c = t.coeff;
                for (&v, &e) in values.iter().zip(&exps[k..]) {
                    if e > 0 {
                        c = f.mul(c, f.pow(v, e as u64));
                    }
                }
                (Monomial::from_exponents(&exps[..k]), c)
            })
            .collect();
        Polynomial::from_terms(f, k, self.order, terms)
    }

    /// The homogeneous component of highest degree.
    pub fn top_component(&self) -> Result<Polynomial> {
        let d = self.total_degree()?;
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.monomial.total_degree() == d)
            .cloned()
            .collect();
        Ok(Polynomial {
            field: self.field,
            n_vars: self.n_vars,
            order: self.order,
            terms,
        })
    }

    /// Same polynomial re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        if order == self.order {
            return self.clone();
        }
        let mut p = self.clone();
        p.order = order;
        p.terms
            .sort_unstable_by(|a, b| order.cmp_mons(&b.monomial, &a.monomial));
        p
    }

    /// Divides by the leading coefficient. No-op on zero.
    pub fn make_monic(&self) -> Polynomial {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => {
                let inv = self
                    .field
                    .inv(lt.coeff)
                    .expect("leading coefficient is nonzero");
                self.scale(inv)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critsys::SplitMix64;
    use proptest::prelude::*;

    fn field() -> PrimeField {
        PrimeField::new(65521).unwrap()
    }

    fn poly(f: PrimeField, n: usize, terms: &[(i64, &[u16])]) -> Polynomial {
        Polynomial::from_terms(
            f,
            n,
            MonomialOrder::Grevlex,
            terms
                .iter()
                .map(|&(c, exps)| (Monomial::from_exponents(exps), f.element_from_i64(c))),
        )
    }

    fn random_poly(f: PrimeField, n: usize, max_deg: u16, rng: &mut SplitMix64) -> Polynomial {
        let monomials = monomials_up_to_degree(n, max_deg, MonomialOrder::Grevlex);
        Polynomial::from_terms(
            f,
            n,
            MonomialOrder::Grevlex,
            monomials
                .into_iter()
                .map(|m| (m, f.element(rng.next_u64()))),
        )
    }

    #[test]
    fn add_identity_and_cancellation() {
        let f = field();
        let p = poly(f, 2, &[(3, &[2, 0]), (1, &[0, 1])]);
        let zero = Polynomial::zero(f, 2, MonomialOrder::Grevlex);
        assert_eq!(p.add(&zero), p);
        assert!(p.add(&p.neg()).is_zero());
        assert!(p.scale(f.zero()).is_zero());
    }

    #[test]
    fn product_difference_of_squares() {
        let f = field();
        let sum = poly(f, 2, &[(1, &[1, 0]), (1, &[0, 1])]);
        let diff = poly(f, 2, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let expect = poly(f, 2, &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(sum.mul(&diff), expect);
    }

    #[test]
    fn derivative_power_rule_and_characteristic() {
        let f = field();
        // d/dx2 (x1^2 + x2^2) = 2 x2
        let p = poly(f, 2, &[(1, &[2, 0]), (1, &[0, 2])]);
        assert_eq!(p.partial_derivative(2), poly(f, 2, &[(2, &[0, 1])]));
        // Constants differentiate to zero.
        let c = poly(f, 2, &[(7, &[0, 0])]);
        assert!(c.partial_derivative(1).is_zero());
        // Characteristic effect: d/dx (x^3) = 0 over GF(3).
        let f3 = PrimeField::new(3).unwrap();
        let cube = poly(f3, 1, &[(1, &[3])]);
        assert!(cube.partial_derivative(1).is_zero());
    }

    #[test]
    fn degree_and_homogeneity() {
        let f = field();
        let h = poly(f, 2, &[(1, &[2, 0]), (1, &[0, 2])]);
        assert_eq!(h.total_degree().unwrap(), 2);
        assert!(h.is_homogeneous());
        let a = poly(f, 2, &[(1, &[2, 0]), (1, &[0, 1])]);
        assert_eq!(a.total_degree().unwrap(), 2);
        assert!(!a.is_homogeneous());
        let m = poly(f, 3, &[(1, &[1, 1, 1])]);
        assert_eq!(m.total_degree().unwrap(), 3);
        assert!(m.is_homogeneous());
        let zero = Polynomial::zero(f, 2, MonomialOrder::Grevlex);
        assert_eq!(zero.total_degree(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn evaluation_examples() {
        let f = field();
        // x1^2 + x2^2 - 1 at (1, 0)
        let circle = poly(f, 2, &[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])]);
        let pt = [f.one(), f.zero()];
        assert_eq!(circle.evaluate(&pt).unwrap().value(), 0);
        // x1*x2 at (2,3) over GF(7)
        let f7 = PrimeField::new(7).unwrap();
        let xy = poly(f7, 2, &[(1, &[1, 1])]);
        assert_eq!(
            xy.evaluate(&[f7.element(2), f7.element(3)]).unwrap().value(),
            6
        );
        // constants evaluate to themselves
        let c = poly(f, 2, &[(42, &[0, 0])]);
        assert_eq!(c.evaluate(&pt).unwrap().value(), 42);
        // dimension mismatch is an error
        assert!(circle.evaluate(&[f.one()]).is_err());
    }

    #[test]
    fn top_component_and_specialize() {
        let f = field();
        let p = poly(f, 2, &[(1, &[2, 0]), (1, &[0, 1]), (3, &[0, 0])]);
        assert_eq!(p.top_component().unwrap(), poly(f, 2, &[(1, &[2, 0])]));
        let q = poly(f, 2, &[(1, &[1, 1]), (1, &[1, 0]), (1, &[0, 1])]);
        assert_eq!(q.top_component().unwrap(), poly(f, 2, &[(1, &[1, 1])]));
        // x1*x2 + x1 + x2 with x2 = 3 becomes 4*x1 + 3
        let s = q.specialize_suffix(&[f.element(3)]);
        assert_eq!(s, poly(f, 1, &[(4, &[1]), (3, &[0])]));
    }

    #[test]
    fn with_order_reorders_terms() {
        let f = field();
        // x2^5 dominates in grevlex, x1 dominates in lex.
        let p = poly(f, 2, &[(1, &[1, 0]), (1, &[0, 5])]);
        assert_eq!(p.leading_monomial().unwrap().exponents(), &[0, 5]);
        let l = p.with_order(MonomialOrder::Lex);
        assert_eq!(l.leading_monomial().unwrap().exponents(), &[1, 0]);
    }

    #[test]
    fn euler_relation_on_random_homogeneous_polynomials() {
        // sum_j x_j * df/dx_j = d * f for homogeneous f of degree d < q.
        let f = field();
        let mut rng = SplitMix64::new(77);
        for n in 2..=4usize {
            for d in 1..=5u16 {
                let p = Polynomial::from_terms(
                    f,
                    n,
                    MonomialOrder::Grevlex,
                    monomials_of_degree(n, d, MonomialOrder::Grevlex)
                        .into_iter()
                        .map(|m| (m, f.element(rng.next_u64()))),
                );
                let mut sum = Polynomial::zero(f, n, MonomialOrder::Grevlex);
                for j in 1..=n {
                    sum = sum.add(
                        &p.partial_derivative(j)
                            .mul_term(&Monomial::variable(n, j), f.one()),
                    );
                }
                assert_eq!(sum, p.scale(f.element(d as u64)));
            }
        }
    }

    #[test]
    fn mul_degree_additivity_random() {
        let f = field();
        let mut rng = SplitMix64::new(123);
        for _ in 0..30 {
            let a = random_poly(f, 3, 3, &mut rng);
            let b = random_poly(f, 3, 2, &mut rng);
            if a.is_zero() || b.is_zero() {
                continue;
            }
            let prod = a.mul(&b);
            assert_eq!(
                prod.total_degree().unwrap(),
                a.total_degree().unwrap() + b.total_degree().unwrap()
            );
        }
    }

    proptest! {
        #[test]
        fn terms_stay_canonical(
            coeffs in proptest::collection::vec((0u64..65521, proptest::collection::vec(0u16..4, 3)), 0..20)
        ) {
            let f = field();
            let p = Polynomial::from_terms(
                f,
                3,
                MonomialOrder::Grevlex,
                coeffs
                    .into_iter()
                    .map(|(c, e)| (Monomial::from_exponents(&e), f.element(c))),
            );
            // strictly decreasing, no zero coefficients
            for t in p.terms() {
                prop_assert!(!t.coeff.is_zero());
            }
            for w in p.terms().windows(2) {
                prop_assert_eq!(
                    MonomialOrder::Grevlex.cmp_mons(&w[0].monomial, &w[1].monomial),
                    Ordering::Greater
                );
            }
        }
    }
}
