//! Gröbner bases over `GF(q)` by degree-stepped Macaulay-matrix reduction,
//! with the zero-dimensionality test, staircase extraction, and the Hilbert
//! series of the leading-monomial ideal.

mod engine;

use crate::critsys::PolySystem;
use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::hilbert::{binomial, PowerSeries};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use alloc::vec::Vec;
use num_bigint::BigInt;

/// A reduced Gröbner basis: monic elements, pairwise indivisible leading
/// monomials, every tail fully reduced, sorted by increasing leading
/// monomial. Carries the highest degree of any Macaulay block the engine
/// reduced, and the staircase when the ideal is zero-dimensional.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: PrimeField,
    n_vars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    max_step_degree: u32,
    staircase: Option<Vec<Monomial>>,
}

/// Computes the reduced Gröbner basis of the ideal generated by `system`
/// for the given order.
///
/// Termination is Buchberger-criterion closure: the loop ends when every
/// pending S-pair has been reduced or pruned. An optional `degree_cap`
/// turns runaway computations into an explicit error instead of an
/// open-ended run.
pub fn groebner_basis(
    system: &PolySystem,
    order: MonomialOrder,
    degree_cap: Option<u32>,
) -> Result<GroebnerBasis> {
    if system.generators().is_empty() {
        return Err(Error::InvalidShape("empty generating set".into()));
    }
    let mut eng = engine::Engine::new(
        system.field(),
        system.num_vars(),
        order,
        system.generators(),
    )?;
    eng.run(degree_cap)?;
    let max_step_degree = eng.max_step_degree;
    let basis = eng.finish();
    let mut gb = GroebnerBasis {
        field: system.field(),
        n_vars: system.num_vars(),
        order,
        basis,
        max_step_degree,
        staircase: None,
    };
    if gb.lm_ideal_is_zero_dimensional() {
        gb.staircase = Some(gb.enumerate_staircase());
    }
    Ok(gb)
}

impl GroebnerBasis {
    /// Assembles a basis from polynomials already known to be a reduced
    /// Gröbner basis (used by the change-of-ordering algorithm, which
    /// produces the lex basis directly).
    pub(crate) fn from_reduced_parts(
        field: PrimeField,
        n_vars: usize,
        order: MonomialOrder,
        mut basis: Vec<Polynomial>,
        max_step_degree: u32,
    ) -> GroebnerBasis {
        basis.sort_unstable_by(|a, b| {
            order.cmp_mons(
                a.leading_monomial().expect("nonzero"),
                b.leading_monomial().expect("nonzero"),
            )
        });
        let mut gb = GroebnerBasis {
            field,
            n_vars,
            order,
            basis,
            max_step_degree,
            staircase: None,
        };
        if gb.lm_ideal_is_zero_dimensional() {
            gb.staircase = Some(gb.enumerate_staircase());
        }
        gb
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
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    /// Highest degree of any Macaulay block reduced during computation.
    #[inline]
    pub fn max_step_degree(&self) -> u32 {
        self.max_step_degree
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.basis
            .iter()
            .map(|g| g.leading_monomial().expect("nonzero"))
    }

    /// True iff for every variable some leading monomial is a pure power
    /// (the unit ideal counts: the variety is empty).
    pub fn is_zero_dimensional(&self) -> bool {
        self.staircase.is_some()
    }

    fn lm_ideal_is_zero_dimensional(&self) -> bool {
        if self.leading_monomials().any(|m| m.is_one()) {
            return true;
        }
        'vars: for j in 1..=self.n_vars {
            for lm in self.leading_monomials() {
                if lm.pure_power_variable() == Some(j) {
                    continue 'vars;
                }
            }
            return false;
        }
        true
    }

    /// The standard monomials (monomials outside the leading-monomial
    /// ideal) sorted increasing in this basis's order; their count is the
    /// degree of the ideal.
    pub fn staircase(&self) -> Result<&[Monomial]> {
        self.staircase
            .as_deref()
            .ok_or(Error::NotZeroDimensional)
    }

    /// Degree of the ideal: the staircase cardinality.
    pub fn degree(&self) -> Result<usize> {
        Ok(self.staircase()?.len())
    }

    fn enumerate_staircase(&self) -> Vec<Monomial> {
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        if lms.iter().any(|m| m.is_one()) {
            return Vec::new();
        }
        let mut caps = alloc::vec![u16::MAX; self.n_vars];
        for lm in &lms {
            if let Some(j) = lm.pure_power_variable() {
                caps[j - 1] = caps[j - 1].min(lm.exponent(j));
            }
        }
        let mut exps = alloc::vec![0u16; self.n_vars];
        let mut out = Vec::new();
        fn dfs(
            j: usize,
            n: usize,
            caps: &[u16],
            lms: &[&Monomial],
            exps: &mut Vec<u16>,
            out: &mut Vec<Monomial>,
        ) {
            for e in 0..=caps[j] {
                exps[j] = e;
                let partial = Monomial::from_exponents(exps);
                // Raising e keeps divisibility, so the whole tail prunes.
                if lms.iter().any(|lm| lm.divides(&partial)) {
                    break;
                }
                if j + 1 == n {
                    out.push(partial);
                } else {
                    dfs(j + 1, n, caps, lms, exps, out);
                }
            }
            exps[j] = 0;
        }
        dfs(0, self.n_vars, &caps, &lms, &mut exps, &mut out);
        out.sort_unstable_by(|a, b| self.order.cmp_mons(a, b));
        out
    }

    /// Remainder of multivariate division by the basis: no term of the
    /// result is divisible by any leading monomial, and the result is zero
    /// exactly for ideal members.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let f = f.with_order(self.order);
        let divisors: Vec<&Polynomial> = self.basis.iter().collect();
        engine::reduce_full(&f, &divisors)
    }

    /// Hilbert series of `K[X]/<LM(G)>` as a truncated series, computed
    /// combinatorially from the minimal generators of the leading-monomial
    /// ideal by variable splitting. For homogeneous generators and a degree
    /// ordering this is the Hilbert series of the ideal itself.
    pub fn hilbert_series_from_lm(&self, truncation: usize) -> PowerSeries {
        let gens: Vec<Monomial> = self.leading_monomials().cloned().collect();
        hs_monomial_quotient(self.n_vars, gens, truncation)
    }
}

/// The S-polynomial of a pair, normalized so both leading terms cancel.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Polynomial {
    let field = f.field();
    let (flt, glt) = (
        f.leading_term().expect("nonzero"),
        g.leading_term().expect("nonzero"),
    );
    let lcm = flt.monomial.lcm(&glt.monomial);
    let uf = lcm.div(&flt.monomial).expect("divides");
    let ug = lcm.div(&glt.monomial).expect("divides");
    let cf = field.inv(flt.coeff).expect("nonzero");
    let cg = field.inv(glt.coeff).expect("nonzero");
    f.mul_term(&uf, cf).sub(&g.mul_term(&ug, cg))
}

/// Hilbert series of `K[x_1..x_n] / <gens>` for a monomial ideal, by the
/// standard pivot-variable recursion
/// `HS(I) = HS(I + <x>) + t HS(I : x)`.
fn hs_monomial_quotient(n: usize, gens: Vec<Monomial>, truncation: usize) -> PowerSeries {
    // Minimal generators only.
    let mut minimal: Vec<Monomial> = Vec::new();
    let mut sorted = gens;
    sorted.sort_unstable_by_key(|m| m.total_degree());
    for g in sorted {
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    if minimal.iter().any(|m| m.is_one()) {
        return PowerSeries::zero(truncation);
    }
    if minimal.is_empty() {
        return free_module_series(n, truncation);
    }

    // Base case: pairwise-coprime pure powers multiply out directly.
    if minimal.iter().all(|m| m.pure_power_variable().is_some()) {
        let mut acc = free_module_series(n, truncation);
        for m in &minimal {
            acc = acc.mul(&PowerSeries::one_minus_t_pow(
                m.total_degree() as usize,
                truncation,
            ));
        }
        return acc;
    }

    // Pivot: the variable hitting the most non-pure-power generators.
    let mut counts = alloc::vec![0usize; n];
    for m in &minimal {
        if m.pure_power_variable().is_none() {
            for j in 0..n {
                if m.exponents()[j] > 0 {
                    counts[j] += 1;
                }
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by(|a, b| a.1.cmp(b.1).then(b.0.cmp(&a.0)))
        .map(|(j, _)| j)
        .expect("nonempty");

    // I + <x_pivot>
    let mut plus: Vec<Monomial> = minimal
        .iter()
        .filter(|m| m.exponents()[pivot] == 0)
        .cloned()
        .collect();
    plus.push(Monomial::variable(n, pivot + 1));
    let plus_series = hs_monomial_quotient(n, plus, truncation);

    // I : x_pivot
    let colon: Vec<Monomial> = minimal
        .iter()
        .map(|m| {
            if m.exponents()[pivot] > 0 {
                let mut e = m.exponents().to_vec();
                e[pivot] -= 1;
                Monomial::from_exponents(&e)
            } else {
                m.clone()
            }
        })
        .collect();
    let colon_series = hs_monomial_quotient(n, colon, truncation);

    plus_series.add(&colon_series.mul_t_power(1))
}

/// Hilbert series of the free polynomial ring: `1 / (1 - t)^n`.
fn free_module_series(n: usize, truncation: usize) -> PowerSeries {
    let coeffs: Vec<BigInt> = (0..truncation)
        .map(|d| BigInt::from(binomial((n as u64 - 1) + d as u64, d as u64)))
        .collect();
    PowerSeries::from_bigint_coeffs(coeffs)
}
