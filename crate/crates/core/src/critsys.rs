//! Random dense systems, truncated Jacobians, maximal minors, and assembly
//! of the critical-point system.
//!
//! For a family `F = (f_1, ..., f_p)` the critical-point system consists of
//! the generators of `F` followed by all maximal minors of the Jacobian of
//! `F` with its first `i` columns removed (here `i = 1`): the projection to
//! the first coordinate is critical exactly where `F` vanishes and that
//! truncated Jacobian drops rank.

use crate::error::{Error, Result};
use crate::gf::{FieldElement, PrimeField};
use crate::poly::{monomials_of_degree, monomials_up_to_degree, Monomial, MonomialOrder, Polynomial};
use alloc::format;
use alloc::vec::Vec;
use hashbrown::HashMap;

/// Seedable 64-bit generator used for reproducible system generation.
///
/// This is the splitmix64 generator: the state advances by the additive
/// constant `0x9E3779B97F4A7C15` and the output is the finalizer
/// `z ^= z >> 30; z *= 0xBF58476D1CE4E5B9; z ^= z >> 27;
/// z *= 0x94D049BB133111EB; z ^= z >> 31` applied to the new state.
/// Identical seeds produce identical streams on every platform.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> SplitMix64 {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[0, bound)` by rejection sampling, so the
    /// distribution is exactly uniform rather than modulo-biased.
    pub fn uniform_below(&mut self, bound: u64) -> u64 {
        debug_assert!(bound > 0);
        let zone = bound * (u64::MAX / bound);
        loop {
            let v = self.next_u64();
            if v < zone {
                return v % bound;
            }
        }
    }
}

/// Generation parameters recorded with a system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemMeta {
    /// Number of input polynomials.
    pub p: usize,
    /// Common total degree of the input polynomials.
    pub degree: u16,
    /// Seed, when the system came from the generator.
    pub seed: Option<u64>,
    /// True when every generator is homogeneous.
    pub homogeneous: bool,
}

/// A list of ideal generators over a common field and variable set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolySystem {
    field: PrimeField,
    n_vars: usize,
    generators: Vec<Polynomial>,
    meta: SystemMeta,
}

impl PolySystem {
    /// Wraps explicit generators. The metadata records the generator count
    /// and maximal degree; the seed is absent.
    pub fn new(field: PrimeField, n_vars: usize, generators: Vec<Polynomial>) -> PolySystem {
        let degree = generators
            .iter()
            .filter_map(|g| g.total_degree().ok())
            .max()
            .unwrap_or(0) as u16;
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        let meta = SystemMeta {
            p: generators.len(),
            degree,
            seed: None,
            homogeneous,
        };
        PolySystem {
            field,
            n_vars,
            generators,
            meta,
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
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    #[inline]
    pub fn meta(&self) -> &SystemMeta {
        &self.meta
    }
}

/// Rectangular matrix of polynomials over one field and variable set.
#[derive(Clone, Debug)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> PolyMatrix {
        assert_eq!(rows * cols, entries.len(), "matrix shape mismatch");
        PolyMatrix {
            rows,
            cols,
            entries,
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i * self.cols + j]
    }

    /// Evaluates every entry at a point, row-major.
    pub fn evaluate(&self, point: &[FieldElement]) -> Result<Vec<FieldElement>> {
        self.entries.iter().map(|e| e.evaluate(point)).collect()
    }
}

/// Draws a dense random system of `p` polynomials of degree exactly `D`.
///
/// Coefficients are i.i.d. uniform over `GF(q)`, drawn in decreasing grevlex
/// order of the monomials (all monomials of degree `<= D` in the affine
/// case, `= D` in the homogeneous case). A polynomial whose degree-`D` part
/// comes out zero is redrawn in full, so the stated degree always holds.
/// The stream is seeded from `(seed, q, n, p, D, homogeneous)`, making the
/// output deterministic in those parameters alone.
pub fn gen_random_system(
    field: PrimeField,
    n: usize,
    p: usize,
    degree: u16,
    seed: u64,
    homogeneous: bool,
) -> Result<PolySystem> {
    if p < 1 || p > n {
        return Err(Error::InvalidShape(format!(
            "need 1 <= p <= n, got p={p}, n={n}"
        )));
    }
    if degree < 2 {
        return Err(Error::InvalidShape(format!("need D >= 2, got D={degree}")));
    }
    let mut rng = SplitMix64::new(seed);
    for salt in [
        field.modulus(),
        n as u64,
        p as u64,
        degree as u64,
        homogeneous as u64,
    ] {
        let mixed = rng.next_u64() ^ salt;
        rng = SplitMix64::new(mixed);
    }

    let q = field.modulus();
    let monomials = if homogeneous {
        monomials_of_degree(n, degree, MonomialOrder::Grevlex)
    } else {
        monomials_up_to_degree(n, degree, MonomialOrder::Grevlex)
    };
    let mut generators = Vec::with_capacity(p);
    for _ in 0..p {
        loop {
            let terms: Vec<(Monomial, FieldElement)> = monomials
                .iter()
                .map(|m| (m.clone(), field.element(rng.uniform_below(q))))
                .collect();
            let top_nonzero = terms
                .iter()
                .any(|(m, c)| m.total_degree() == degree as u32 && !c.is_zero());
            if top_nonzero {
                generators.push(Polynomial::from_terms(
                    field,
                    n,
                    MonomialOrder::Grevlex,
                    terms,
                ));
                break;
            }
        }
    }
    Ok(PolySystem {
        field,
        n_vars: n,
        generators,
        meta: SystemMeta {
            p,
            degree,
            seed: Some(seed),
            homogeneous,
        },
    })
}

/// Jacobian of the system with its first `i` columns removed: the entry
/// `(k, j)` is the derivative of `f_k` with respect to `x_{i+j}`.
pub fn truncated_jacobian(system: &PolySystem, i: usize) -> PolyMatrix {
    assert!(i < system.n_vars, "cannot remove all {} columns", i);
    let p = system.generators.len();
    let cols = system.n_vars - i;
    let mut entries = Vec::with_capacity(p * cols);
    for f in &system.generators {
        for j in 1..=cols {
            entries.push(f.partial_derivative(i + j));
        }
    }
    PolyMatrix::new(p, cols, entries)
}

/// All `binom(m, p)` maximal minors of a `p x m` polynomial matrix, in
/// lexicographic order of the column index sets.
///
/// Minors are computed by dynamic programming over column subsets: layer
/// `k` holds the `k x k` minors of the first `k` rows for every `k`-subset
/// of columns, each obtained by Laplace expansion along row `k` against
/// layer `k - 1`. Sub-minors are shared across the whole layer, which is
/// what makes the `binom(m, p)` top-layer minors affordable.
pub fn maximal_minors(matrix: &PolyMatrix) -> Result<Vec<Polynomial>> {
    let (p, m) = (matrix.rows(), matrix.cols());
    if p > m {
        return Err(Error::MinorShape { rows: p, cols: m });
    }
    if p == 0 {
        return Ok(Vec::new());
    }
    assert!(m <= 64, "column count above 64 is not supported");

    // Layer k - 1: bitmask of a (k-1)-subset of columns -> minor.
    let mut prev: HashMap<u64, Polynomial> = HashMap::new();
    prev.insert(0u64, {
        let one = matrix.entry(0, 0).field();
        Polynomial::constant(
            one,
            matrix.entry(0, 0).num_vars(),
            matrix.entry(0, 0).order(),
            one.one(),
        )
    });
    for k in 1..=p {
        let mut layer: HashMap<u64, Polynomial> = HashMap::new();
        for subset in subsets_lex(m, k) {
            let mask = subset.iter().fold(0u64, |acc, &j| acc | (1 << j));
            let field = matrix.entry(0, 0).field();
            let mut acc = Polynomial::zero(
                field,
                matrix.entry(0, 0).num_vars(),
                matrix.entry(0, 0).order(),
            );
            // Laplace expansion along row k (0-based k-1).
            for (t, &j) in subset.iter().enumerate() {
                let sub = &prev[&(mask & !(1 << j))];
                let term = matrix.entry(k - 1, j).mul(sub);
                // sign (-1)^{(k-1) + t}
                if (k - 1 + t) % 2 == 0 {
                    acc = acc.add(&term);
                } else {
                    acc = acc.sub(&term);
                }
            }
            layer.insert(mask, acc);
        }
        prev = layer;
    }

    Ok(subsets_lex(m, p)
        .into_iter()
        .map(|subset| {
            let mask = subset.iter().fold(0u64, |acc, &j| acc | (1 << j));
            prev.remove(&mask).expect("minor computed")
        })
        .collect())
}

/// All `k`-subsets of `{0, ..., m-1}` in lexicographic order.
fn subsets_lex(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // advance to next combination
        let mut i = k;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] != i + m - k {
                break;
            }
            if i == 0 {
                return out;
            }
        }
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// Assembles the critical-point system: the generators of `F` followed by
/// the maximal minors of its Jacobian truncated by the first column.
///
/// Requires `p <= n - 1`; with `p = n` the truncated Jacobian is wider than
/// it is tall and the minor computation reports the shape error.
pub fn build_critical_system(system: &PolySystem) -> Result<PolySystem> {
    let p = system.generators.len();
    if p == 0 || p > system.n_vars {
        return Err(Error::InvalidShape(format!(
            "need 1 <= p <= n, got p={p}, n={}",
            system.n_vars
        )));
    }
    let jac = truncated_jacobian(system, 1);
    let minors = maximal_minors(&jac)?;
    let mut generators = system.generators.clone();
    generators.extend(minors);
    let homogeneous = generators.iter().all(|g| g.is_homogeneous());
    Ok(PolySystem {
        field: system.field,
        n_vars: system.n_vars,
        generators,
        meta: SystemMeta {
            p,
            degree: system.meta.degree,
            seed: system.meta.seed,
            homogeneous,
        },
    })
}

/// Replaces every generator by its homogeneous component of highest degree.
pub fn top_components(system: &PolySystem) -> Result<PolySystem> {
    let mut generators = Vec::with_capacity(system.generators.len());
    for (index, g) in system.generators.iter().enumerate() {
        if g.is_zero() {
            return Err(Error::ZeroGenerator { index });
        }
        generators.push(g.top_component()?);
    }
    Ok(PolySystem {
        field: system.field,
        n_vars: system.n_vars,
        generators,
        meta: SystemMeta {
            homogeneous: true,
            ..system.meta.clone()
        },
    })
}

/// The maximal minors of the `p x m` matrix whose entries are `p * m`
/// distinct fresh variables, row-major: the entry `(i, j)` is the variable
/// with index `(i - 1) * m + j` (1-based).
///
/// This is the determinantal ideal used as the Gröbner oracle for the
/// closed-form determinantal Hilbert series.
pub fn variable_matrix_minors(field: PrimeField, p: usize, m: usize) -> Result<PolySystem> {
    if p < 1 || p > m {
        return Err(Error::MinorShape { rows: p, cols: m });
    }
    let n_vars = p * m;
    let entries: Vec<Polynomial> = (0..p)
        .flat_map(|i| {
            (0..m).map(move |j| {
                Polynomial::from_terms(
                    field,
                    n_vars,
                    MonomialOrder::Grevlex,
                    [(Monomial::variable(n_vars, i * m + j + 1), field.one())],
                )
            })
        })
        .collect();
    let matrix = PolyMatrix::new(p, m, entries);
    let minors = maximal_minors(&matrix)?;
    Ok(PolySystem {
        field,
        n_vars,
        generators: minors,
        meta: SystemMeta {
            p,
            degree: p as u16,
            seed: None,
            homogeneous: true,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

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

    fn binomial(n: u64, k: u64) -> u64 {
        if k > n {
            return 0;
        }
        let mut acc = 1u64;
        for i in 0..k.min(n - k) {
            acc = acc * (n - i) / (i + 1);
        }
        acc
    }

    #[test]
    fn splitmix_reference_stream() {
        // First outputs for seed 0 of the reference splitmix64.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220A8397B1DCDAF);
        assert_eq!(rng.next_u64(), 0x6E789E6AA1B965F4);
        assert_eq!(rng.next_u64(), 0x06C45D188009454F);
    }

    #[test]
    fn uniform_below_stays_in_range() {
        let mut rng = SplitMix64::new(42);
        for _ in 0..10_000 {
            assert!(rng.uniform_below(65521) < 65521);
        }
    }

    #[test]
    fn generation_shape_and_determinism() {
        let f = field();
        // (n=2, p=1, D=2, affine): binom(4,2) = 6 coefficient slots.
        let s = gen_random_system(f, 2, 1, 2, 0, false).unwrap();
        assert_eq!(s.generators().len(), 1);
        assert!(s.generators()[0].terms().len() <= 6);
        assert_eq!(s.generators()[0].total_degree().unwrap(), 2);

        // (n=3, p=1, D=2, homogeneous): 6 degree-2 slots.
        let h = gen_random_system(f, 3, 1, 2, 0, true).unwrap();
        assert!(h.generators()[0].is_homogeneous());
        assert!(h.generators()[0].terms().len() <= 6);

        // identical parameters -> identical systems
        let a = gen_random_system(f, 4, 2, 3, 7, false).unwrap();
        let b = gen_random_system(f, 4, 2, 3, 7, false).unwrap();
        assert_eq!(a, b);
        // different seed -> different system (overwhelmingly)
        let c = gen_random_system(f, 4, 2, 3, 8, false).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn generation_rejects_bad_shapes() {
        let f = field();
        assert!(gen_random_system(f, 2, 3, 2, 0, false).is_err()); // p > n
        assert!(gen_random_system(f, 2, 0, 2, 0, false).is_err());
        assert!(gen_random_system(f, 2, 1, 1, 0, false).is_err()); // D < 2
    }

    #[test]
    fn jacobian_examples() {
        let f = field();
        // F = (x1^2 + x2^2), i=1 -> 1x1 matrix [2 x2]
        let s = PolySystem::new(f, 2, vec![poly(f, 2, &[(1, &[2, 0]), (1, &[0, 2])])]);
        let j1 = truncated_jacobian(&s, 1);
        assert_eq!((j1.rows(), j1.cols()), (1, 1));
        assert_eq!(*j1.entry(0, 0), poly(f, 2, &[(2, &[0, 1])]));
        // i=0 -> [2x1, 2x2]
        let j0 = truncated_jacobian(&s, 0);
        assert_eq!((j0.rows(), j0.cols()), (1, 2));
        assert_eq!(*j0.entry(0, 0), poly(f, 2, &[(2, &[1, 0])]));
        assert_eq!(*j0.entry(0, 1), poly(f, 2, &[(2, &[0, 1])]));
        // differentiation drops degree
        for k in 0..j0.cols() {
            assert!(j0.entry(0, k).total_degree().unwrap() <= 1);
        }
    }

    #[test]
    fn minors_of_small_matrices() {
        let f = field();
        // 1 x m: the entries themselves.
        let row = PolyMatrix::new(
            1,
            3,
            vec![
                poly(f, 3, &[(1, &[1, 0, 0])]),
                poly(f, 3, &[(2, &[0, 1, 0])]),
                poly(f, 3, &[(3, &[0, 0, 1])]),
            ],
        );
        let minors = maximal_minors(&row).unwrap();
        assert_eq!(minors.len(), 3);
        assert_eq!(minors[0], poly(f, 3, &[(1, &[1, 0, 0])]));

        // 2x2 [[x1, x2], [x3, x4]] -> x1 x4 - x2 x3
        let m = PolyMatrix::new(
            2,
            2,
            (1..=4)
                .map(|j| {
                    Polynomial::from_terms(
                        f,
                        4,
                        MonomialOrder::Grevlex,
                        [(Monomial::variable(4, j), f.one())],
                    )
                })
                .collect(),
        );
        let dets = maximal_minors(&m).unwrap();
        assert_eq!(dets.len(), 1);
        assert_eq!(
            dets[0],
            poly(f, 4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])])
        );

        // 2x3 -> 3 minors
        let wide = PolyMatrix::new(
            2,
            3,
            (1..=6)
                .map(|j| {
                    Polynomial::from_terms(
                        f,
                        6,
                        MonomialOrder::Grevlex,
                        [(Monomial::variable(6, j), f.one())],
                    )
                })
                .collect(),
        );
        assert_eq!(maximal_minors(&wide).unwrap().len(), 3);

        // p > m is an error
        let tall = PolyMatrix::new(
            2,
            1,
            vec![poly(f, 1, &[(1, &[1])]), poly(f, 1, &[(2, &[1])])],
        );
        assert!(maximal_minors(&tall).is_err());
    }

    /// Laplace expansion along the first row, no memoization. Test oracle.
    fn det_laplace(matrix: &PolyMatrix, rows: &[usize], cols: &[usize]) -> Polynomial {
        let f = matrix.entry(0, 0).field();
        let n = matrix.entry(0, 0).num_vars();
        let order = matrix.entry(0, 0).order();
        if rows.is_empty() {
            return Polynomial::constant(f, n, order, f.one());
        }
        let mut acc = Polynomial::zero(f, n, order);
        for (t, &j) in cols.iter().enumerate() {
            let sub_rows = &rows[1..];
            let sub_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
            let sub = det_laplace(matrix, sub_rows, &sub_cols);
            let term = matrix.entry(rows[0], j).mul(&sub);
            if t % 2 == 0 {
                acc = acc.add(&term);
            } else {
                acc = acc.sub(&term);
            }
        }
        acc
    }

    /// Fraction-free (Bareiss) determinant over the polynomial ring.
    /// Second, independent test oracle; divisions are exact by construction.
    fn det_bareiss(matrix: &PolyMatrix, cols: &[usize]) -> Polynomial {
        let k = cols.len();
        let f = matrix.entry(0, 0).field();
        let n = matrix.entry(0, 0).num_vars();
        let order = matrix.entry(0, 0).order();
        let mut a: Vec<Vec<Polynomial>> = (0..k)
            .map(|i| cols.iter().map(|&j| matrix.entry(i, j).clone()).collect())
            .collect();
        let mut prev_pivot = Polynomial::constant(f, n, order, f.one());
        for r in 0..k {
            if a[r][r].is_zero() {
                let swap = (r + 1..k).find(|&s| !a[s][r].is_zero());
                match swap {
                    Some(s) => {
                        a.swap(r, s);
                        // a row swap flips the determinant sign; negating
                        // one row flips it back
                        for e in a[r].iter_mut() {
                            *e = e.neg();
                        }
                    }
                    None => return Polynomial::zero(f, n, order),
                }
            }
            for i in r + 1..k {
                for j in r + 1..k {
                    let num = a[i][j].mul(&a[r][r]).sub(&a[i][r].mul(&a[r][j]));
                    a[i][j] = exact_div(&num, &prev_pivot);
                }
            }
            prev_pivot = a[r][r].clone();
        }
        a[k - 1][k - 1].clone()
    }

    /// Exact single-divisor polynomial division; panics on a remainder.
    fn exact_div(num: &Polynomial, den: &Polynomial) -> Polynomial {
        let f = num.field();
        let mut rest = num.clone();
        let mut quot = Polynomial::zero(f, num.num_vars(), num.order());
        let dlt = den.leading_term().expect("nonzero divisor");
        while let Some(lt) = rest.leading_term() {
            let m = lt
                .monomial
                .div(&dlt.monomial)
                .expect("exact division in Bareiss");
            let c = f.div(lt.coeff, dlt.coeff).unwrap();
            let piece = den.mul_term(&m, c);
            quot = quot.add(&Polynomial::from_terms(
                f,
                num.num_vars(),
                num.order(),
                [(m, c)],
            ));
            rest = rest.sub(&piece);
        }
        quot
    }

    #[test]
    fn dp_minors_match_laplace_and_bareiss_oracles() {
        let f = field();
        let mut rng = SplitMix64::new(2024);
        for (p, m) in [(1usize, 3usize), (2, 3), (2, 4), (3, 4), (3, 5)] {
            let n_vars = 3;
            let entries: Vec<Polynomial> = (0..p * m)
                .map(|_| {
                    Polynomial::from_terms(
                        f,
                        n_vars,
                        MonomialOrder::Grevlex,
                        monomials_up_to_degree(n_vars, 1, MonomialOrder::Grevlex)
                            .into_iter()
                            .map(|mon| (mon, f.element(rng.next_u64()))),
                    )
                })
                .collect();
            let matrix = PolyMatrix::new(p, m, entries);
            let dp = maximal_minors(&matrix).unwrap();
            let rows: Vec<usize> = (0..p).collect();
            for (minor, cols) in dp.iter().zip(subsets_lex(m, p)) {
                assert_eq!(*minor, det_laplace(&matrix, &rows, &cols));
                assert_eq!(*minor, det_bareiss(&matrix, &cols));
            }
        }
    }

    #[test]
    fn critical_system_counts_and_hand_example() {
        let f = field();
        // (n=9, p=4): 4 + binom(8,4) = 74 generators.
        let s = gen_random_system(f, 9, 4, 2, 0, false).unwrap();
        let crit = build_critical_system(&s).unwrap();
        assert_eq!(crit.generators().len() as u64, 4 + binomial(8, 4));

        // circle: F = (x1^2 + x2^2 - 1) -> {x1^2 + x2^2 - 1, 2 x2}
        let circle = PolySystem::new(
            f,
            2,
            vec![poly(f, 2, &[(1, &[2, 0]), (1, &[0, 2]), (-1, &[0, 0])])],
        );
        let crit = build_critical_system(&circle).unwrap();
        assert_eq!(crit.generators().len(), 2);
        assert_eq!(crit.generators()[1], poly(f, 2, &[(2, &[0, 1])]));

        // p = n propagates the minor shape error
        let square = gen_random_system(f, 2, 2, 2, 0, false).unwrap();
        assert!(matches!(
            build_critical_system(&square),
            Err(Error::MinorShape { .. })
        ));
    }

    #[test]
    fn generator_count_formula_across_shapes() {
        let f = field();
        for (n, p) in [(3usize, 1usize), (4, 2), (5, 2), (5, 3), (6, 4)] {
            let s = gen_random_system(f, n, p, 2, 1, false).unwrap();
            let crit = build_critical_system(&s).unwrap();
            assert_eq!(
                crit.generators().len() as u64,
                p as u64 + binomial(n as u64 - 1, p as u64)
            );
        }
    }

    #[test]
    fn homogeneous_minors_have_degree_p_times_d_minus_1() {
        let f = field();
        for (n, p, d) in [(4usize, 2usize, 2u16), (5, 2, 3), (4, 3, 2)] {
            let s = gen_random_system(f, n, p, d, 3, true).unwrap();
            let crit = build_critical_system(&s).unwrap();
            for minor in &crit.generators()[p..] {
                if !minor.is_zero() {
                    assert!(minor.is_homogeneous());
                    assert_eq!(
                        minor.total_degree().unwrap(),
                        p as u32 * (d as u32 - 1)
                    );
                }
            }
        }
    }

    #[test]
    fn top_components_examples() {
        let f = field();
        let s = PolySystem::new(
            f,
            2,
            vec![
                poly(f, 2, &[(1, &[2, 0]), (1, &[0, 1]), (3, &[0, 0])]),
                poly(f, 2, &[(1, &[1, 1]), (1, &[1, 0]), (1, &[0, 1])]),
            ],
        );
        let top = top_components(&s).unwrap();
        assert_eq!(top.generators()[0], poly(f, 2, &[(1, &[2, 0])]));
        assert_eq!(top.generators()[1], poly(f, 2, &[(1, &[1, 1])]));
        assert!(top.meta().homogeneous);
        // idempotent on homogeneous input
        let again = top_components(&top).unwrap();
        assert_eq!(again.generators(), top.generators());
        // zero generator is an error
        let bad = PolySystem::new(f, 2, vec![Polynomial::zero(f, 2, MonomialOrder::Grevlex)]);
        assert!(matches!(
            top_components(&bad),
            Err(Error::ZeroGenerator { index: 0 })
        ));
    }

    #[test]
    fn variable_matrix_examples() {
        let f = field();
        // (1, m): the m variables themselves.
        let v = variable_matrix_minors(f, 1, 3).unwrap();
        assert_eq!(v.generators().len(), 3);
        assert_eq!(v.num_vars(), 3);
        // (2, 2): u11 u22 - u12 u21.
        let d = variable_matrix_minors(f, 2, 2).unwrap();
        assert_eq!(d.generators().len(), 1);
        assert_eq!(
            d.generators()[0],
            poly(f, 4, &[(1, &[1, 0, 0, 1]), (-1, &[0, 1, 1, 0])])
        );
        // (2, 3): 3 quadratic minors.
        let w = variable_matrix_minors(f, 2, 3).unwrap();
        assert_eq!(w.generators().len(), 3);
        for g in w.generators() {
            assert_eq!(g.total_degree().unwrap(), 2);
            assert!(g.is_homogeneous());
        }
    }
}
