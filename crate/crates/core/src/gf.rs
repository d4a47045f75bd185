//! Arithmetic in the prime field `GF(q)`.
//!
//! The modulus is a runtime parameter carried by [`PrimeField`]; elements
//! are bare canonical residues and do not know their field. Every ring
//! operation reduces immediately, so an element value is always in `[0, q)`.

use crate::error::{Error, Result};

/// An element of `GF(q)`, stored as the least nonnegative residue.
///
/// The modulus lives in the ambient [`PrimeField`], not in the element;
/// mixing elements of different fields is the caller's bug and is caught
/// only where a field context is present.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldElement(u64);

impl FieldElement {
    /// The zero element (valid in every field).
    pub const ZERO: FieldElement = FieldElement(0);
    /// The one element (valid in every field with q > 1).
    pub const ONE: FieldElement = FieldElement(1);

    /// Canonical residue in `[0, q)`.
    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

/// Field context for `GF(q)` with `q` an odd prime below `2^31`.
///
/// Immutable after construction; all operations are pure, so a single
/// context may be shared freely across threads.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PrimeField {
    q: u64,
}

impl PrimeField {
    /// Builds the field, validating primality by trial division.
    ///
    /// `q` must be an odd prime; `q < 2^31` keeps every product of two
    /// residues inside `u64`.
    pub fn new(q: u64) -> Result<PrimeField> {
        if q < 3 || q >= (1 << 31) || !is_prime(q) {
            return Err(Error::NotPrime(q));
        }
        Ok(PrimeField { q })
    }

    /// The modulus.
    #[inline]
    pub fn modulus(&self) -> u64 {
        self.q
    }

    /// Element from an arbitrary unsigned integer, reduced mod q.
    #[inline]
    pub fn element(&self, v: u64) -> FieldElement {
        FieldElement(v % self.q)
    }

    /// Element from a signed integer, mapped to its canonical residue.
    #[inline]
    pub fn element_from_i64(&self, v: i64) -> FieldElement {
        let r = v.rem_euclid(self.q as i64);
        FieldElement(r as u64)
    }

    #[inline]
    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    #[inline]
    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let s = a.0 + b.0;
        FieldElement(if s >= self.q { s - self.q } else { s })
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(if a.0 >= b.0 {
            a.0 - b.0
        } else {
            a.0 + self.q - b.0
        })
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(if a.0 == 0 { 0 } else { self.q - a.0 })
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        // q < 2^31, so the product fits in u64.
        FieldElement(a.0 * b.0 % self.q)
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    ///
    /// Errors with [`Error::DivisionByZero`] on the zero element.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.q as i64, a.0 as i64);
        let (mut t0, mut t1) = (0i64, 1i64);
        while r1 != 0 {
            let quot = r0 / r1;
            (r0, r1) = (r1, r0 - quot * r1);
            (t0, t1) = (t1, t0 - quot * t1);
        }
        debug_assert_eq!(r0, 1, "modulus is prime, gcd must be 1");
        Ok(self.element_from_i64(t0))
    }

    /// `a / b`; errors when `b` is zero.
    #[inline]
    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e` by binary exponentiation.
    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    if q % 2 == 0 {
        return q == 2;
    }
    let mut d = 3u64;
    while d * d <= q {
        if q % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::critsys::SplitMix64;

    fn gf(q: u64) -> PrimeField {
        PrimeField::new(q).unwrap()
    }

    #[test]
    fn construction_rejects_non_primes() {
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(2).is_err()); // even
        assert!(PrimeField::new(65520).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(1 << 32).is_err());
        assert!(PrimeField::new(65521).is_ok());
        assert!(PrimeField::new(7).is_ok());
    }

    #[test]
    fn add_examples() {
        let f = gf(65521);
        let x = f.element(12345);
        assert_eq!(f.add(f.zero(), x), x);
        assert_eq!(f.add(f.element(65520), f.one()).value(), 0);
        let f7 = gf(7);
        assert_eq!(f7.add(f7.element(5), f7.element(4)).value(), 2);
    }

    #[test]
    fn mul_and_neg_examples() {
        let f = gf(65521);
        let x = f.element(54321);
        assert_eq!(f.mul(f.one(), x), x);
        // 256 * 256 = 65536 = 65521 + 15
        assert_eq!(f.mul(f.element(256), f.element(256)).value(), 15);
        assert_eq!(f.neg(f.zero()).value(), 0);
        assert_eq!(f.neg(f.element(1)).value(), 65520);
    }

    #[test]
    fn inv_examples() {
        let f = gf(65521);
        assert_eq!(f.inv(f.one()).unwrap().value(), 1);
        // 2 * 32761 = 65522 = q + 1
        assert_eq!(f.inv(f.element(2)).unwrap().value(), 32761);
        let f7 = gf(7);
        assert_eq!(f7.inv(f7.element(3)).unwrap().value(), 5);
        assert_eq!(f.inv(f.zero()), Err(Error::DivisionByZero));
    }

    #[test]
    fn field_axioms_random_triples() {
        // Associativity, commutativity, distributivity and inverses over
        // 10^4 pseudo-random triples in GF(65521) and GF(7).
        for q in [65521u64, 7] {
            let f = gf(q);
            let mut rng = SplitMix64::new(0xfeed ^ q);
            for _ in 0..10_000 {
                let a = f.element(rng.next_u64());
                let b = f.element(rng.next_u64());
                let c = f.element(rng.next_u64());
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)).value(), 0);
                assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
                if !a.is_zero() {
                    assert_eq!(f.mul(f.inv(a).unwrap(), a).value(), 1);
                }
            }
        }
    }

    #[test]
    fn inverse_of_every_nonzero_element_small_field() {
        let f = gf(101);
        for v in 1..101 {
            let a = f.element(v);
            assert_eq!(f.mul(f.inv(a).unwrap(), a).value(), 1);
        }
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let f = gf(65521);
        let a = f.element(9999);
        let mut acc = f.one();
        for e in 0..20u64 {
            assert_eq!(f.pow(a, e), acc);
            acc = f.mul(acc, a);
        }
        // Fermat: a^(q-1) = 1
        assert_eq!(f.pow(a, 65520).value(), 1);
    }
}
