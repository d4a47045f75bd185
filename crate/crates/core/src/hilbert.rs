//! Integer power series and the closed-form quantities attached to
//! critical-point ideals: the binomial matrix `A(t)`, the unmixed Hilbert
//! series, the determinantal Hilbert series, degree-of-regularity and
//! degree formulas, and the complexity evaluators.
//!
//! Everything here is exact integer arithmetic (coefficients are `BigInt`);
//! this module is the independent oracle against the mod-q Gröbner engine,
//! so it deliberately shares no arithmetic with it.

use crate::error::{Error, Result};
use alloc::vec;
use alloc::vec::Vec;
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

/// Dense integer power series truncated at an exclusive degree bound.
///
/// `coefficients()[d]` is the degree-`d` coefficient; exactly
/// `truncation()` coefficients are stored. Binary operations track the
/// minimum truncation of their operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<BigInt>,
}

impl PowerSeries {
    /// The zero series with `truncation` known coefficients.
    pub fn zero(truncation: usize) -> PowerSeries {
        PowerSeries {
            coeffs: vec![BigInt::zero(); truncation],
        }
    }

    /// The constant series 1.
    pub fn one(truncation: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(truncation);
        if truncation > 0 {
            s.coeffs[0] = BigInt::one();
        }
        s
    }

    /// Series from explicit low-order coefficients, padded to `truncation`.
    pub fn from_coeffs(coeffs: &[i64], truncation: usize) -> PowerSeries {
        let mut s = PowerSeries::zero(truncation);
        for (d, &c) in coeffs.iter().enumerate().take(truncation) {
            s.coeffs[d] = BigInt::from(c);
        }
        s
    }

    /// Series owning the given coefficient vector.
    pub fn from_bigint_coeffs(coeffs: Vec<BigInt>) -> PowerSeries {
        PowerSeries { coeffs }
    }

    /// Multiplication by `t^k`: shifts coefficients up, dropping overflow
    /// past the truncation.
    pub fn mul_t_power(&self, k: usize) -> PowerSeries {
        let t = self.coeffs.len();
        let mut out = PowerSeries::zero(t);
        for d in k..t {
            out.coeffs[d] = self.coeffs[d - k].clone();
        }
        out
    }

    /// The polynomial `1 - t^k`.
    pub fn one_minus_t_pow(k: usize, truncation: usize) -> PowerSeries {
        let mut s = PowerSeries::one(truncation);
        if k < truncation {
            s.coeffs[k] = -BigInt::one();
        }
        s
    }

    #[inline]
    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    #[inline]
    pub fn coefficients(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `t^d`; requesting past the truncation is an error.
    pub fn coefficient(&self, d: usize) -> Result<&BigInt> {
        self.coeffs.get(d).ok_or(Error::TruncationExceeded {
            requested: d,
            truncation: self.coeffs.len(),
        })
    }

    /// Index of the last nonzero coefficient, if any.
    pub fn last_nonzero(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Index of the first nonzero coefficient (the valuation), if any.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Sum of all stored coefficients: the value at `t = 1` when the series
    /// is a polynomial supported below the truncation.
    pub fn evaluate_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn add(&self, other: &PowerSeries) -> PowerSeries {
        let t = self.coeffs.len().min(other.coeffs.len());
        PowerSeries {
            coeffs: (0..t).map(|d| &self.coeffs[d] + &other.coeffs[d]).collect(),
        }
    }

    pub fn sub(&self, other: &PowerSeries) -> PowerSeries {
        let t = self.coeffs.len().min(other.coeffs.len());
        PowerSeries {
            coeffs: (0..t).map(|d| &self.coeffs[d] - &other.coeffs[d]).collect(),
        }
    }

    /// Truncated Cauchy product.
    pub fn mul(&self, other: &PowerSeries) -> PowerSeries {
        let t = self.coeffs.len().min(other.coeffs.len());
        let mut out = vec![BigInt::zero(); t];
        // Convolve only the nonzero supports.
        let a_hi = self.last_nonzero().map_or(0, |d| d + 1).min(t);
        let b_hi = other.last_nonzero().map_or(0, |d| d + 1).min(t);
        for i in 0..a_hi {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..b_hi.min(t - i) {
                if !other.coeffs[j].is_zero() {
                    out[i + j] += &self.coeffs[i] * &other.coeffs[j];
                }
            }
        }
        PowerSeries { coeffs: out }
    }

    pub fn pow(&self, e: usize) -> PowerSeries {
        let mut acc = PowerSeries::one(self.coeffs.len());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Substitutes `t -> t^e`, spreading coefficients.
    pub fn substitute_t_power(&self, e: usize, truncation: usize) -> PowerSeries {
        assert!(e >= 1);
        let mut out = PowerSeries::zero(truncation);
        for (d, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let nd = d * e;
                if nd < truncation {
                    out.coeffs[nd] = c.clone();
                }
            }
        }
        out
    }

    /// Exact division. The divisor may have positive valuation `v`, in
    /// which case the dividend must vanish below degree `v` and the result
    /// loses `v` coefficients of truncation. Any remainder at any step is
    /// an [`Error::InexactDivision`] — that signals a formula bug, not a
    /// rounding concern.
    pub fn divide_exact(&self, other: &PowerSeries) -> Result<PowerSeries> {
        let v = match other.valuation() {
            Some(v) => v,
            None => return Err(Error::DivisionByZero),
        };
        for d in 0..v.min(self.coeffs.len()) {
            if !self.coeffs[d].is_zero() {
                return Err(Error::InexactDivision { degree: d });
            }
        }
        let t = self.coeffs.len().min(other.coeffs.len());
        if t < v {
            return Ok(PowerSeries::zero(0));
        }
        let t = t - v;
        let lead = &other.coeffs[v];
        let mut q = vec![BigInt::zero(); t];
        for k in 0..t {
            let mut acc = self.coeffs[k + v].clone();
            for i in 0..k {
                if !q[i].is_zero() {
                    acc -= &q[i] * &other.coeffs[k - i + v];
                }
            }
            let (quot, rem) = num_integer_div_rem(&acc, lead);
            if !rem.is_zero() {
                return Err(Error::InexactDivision { degree: k });
            }
            q[k] = quot;
        }
        Ok(PowerSeries { coeffs: q })
    }

    /// Re-truncates, or zero-pads when the series is known to be a
    /// polynomial supported below its current truncation.
    fn resized(&self, truncation: usize) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(truncation, BigInt::zero());
        PowerSeries { coeffs }
    }
}

fn num_integer_div_rem(a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
    let q = a / b;
    let r = a - &q * b;
    (q, r)
}

/// Square matrix of power series (entries are polynomials in practice).
#[derive(Clone, Debug)]
pub struct SeriesMatrix {
    size: usize,
    entries: Vec<PowerSeries>,
}

impl SeriesMatrix {
    pub fn new(size: usize, entries: Vec<PowerSeries>) -> SeriesMatrix {
        assert_eq!(entries.len(), size * size);
        SeriesMatrix { size, entries }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn entry(&self, i: usize, j: usize) -> &PowerSeries {
        &self.entries[i * self.size + j]
    }
}

/// The `(p-1) x (p-1)` matrix whose `(i, j)` entry (1-based) is
/// `sum_k binom(p-i, k) binom(n-1-j, k) t^{e k}`.
///
/// `e = 1` gives the matrix attached to the determinantal ideal of a
/// variable matrix; `e = D - 1` weights it for derivative entries of
/// degree `D - 1`. For `p = 1` the matrix is empty.
pub fn matrix_a(n: usize, p: usize, e: usize, truncation: usize) -> SeriesMatrix {
    assert!(p >= 1 && p <= n && e >= 1);
    let size = p - 1;
    let mut entries = Vec::with_capacity(size * size);
    for i in 1..=size {
        for j in 1..=size {
            let kmax = (p - i).min(n - 1 - j);
            let mut s = PowerSeries::zero(truncation);
            for k in 0..=kmax {
                let c = binomial((p - i) as u64, k as u64) * binomial((n - 1 - j) as u64, k as u64);
                if k * e < truncation {
                    s.coeffs[k * e] = BigInt::from(c);
                }
            }
            entries.push(s);
        }
    }
    SeriesMatrix::new(size, entries)
}

/// Determinant of a series matrix: cofactor expansion for size at most 6,
/// fraction-free Bareiss elimination above that. The empty matrix has
/// determinant 1.
pub fn det_series(m: &SeriesMatrix, truncation: usize) -> Result<PowerSeries> {
    if m.size == 0 {
        return Ok(PowerSeries::one(truncation));
    }
    let det = if m.size <= 6 {
        det_cofactor(m, &(0..m.size).collect::<Vec<_>>(), truncation)
    } else {
        det_bareiss(m, truncation)?
    };
    Ok(det)
}

fn det_cofactor(m: &SeriesMatrix, cols: &[usize], truncation: usize) -> PowerSeries {
    let row = m.size - cols.len();
    if cols.len() == 1 {
        return m.entry(row, cols[0]).resized(truncation);
    }
    let mut acc = PowerSeries::zero(truncation);
    for (t, &j) in cols.iter().enumerate() {
        let sub_cols: Vec<usize> = cols.iter().copied().filter(|&c| c != j).collect();
        let sub = det_cofactor(m, &sub_cols, truncation);
        let term = m.entry(row, j).resized(truncation).mul(&sub);
        acc = if t % 2 == 0 {
            acc.add(&term)
        } else {
            acc.sub(&term)
        };
    }
    acc
}

fn det_bareiss(m: &SeriesMatrix, truncation: usize) -> Result<PowerSeries> {
    let k = m.size;
    let mut a: Vec<Vec<PowerSeries>> = (0..k)
        .map(|i| (0..k).map(|j| m.entry(i, j).resized(truncation)).collect())
        .collect();
    let mut prev = PowerSeries::one(truncation);
    let mut sign_flip = false;
    for r in 0..k {
        if a[r][r].valuation().is_none() {
            let swap = (r + 1..k).find(|&s| a[s][r].valuation().is_some());
            match swap {
                Some(s) => {
                    a.swap(r, s);
                    sign_flip = !sign_flip;
                }
                None => return Ok(PowerSeries::zero(truncation)),
            }
        }
        for i in r + 1..k {
            for j in r + 1..k {
                let num = a[i][j].mul(&a[r][r]).sub(&a[i][r].mul(&a[r][j]));
                a[i][j] = num.divide_exact(&prev)?.resized(truncation);
            }
        }
        prev = a[r][r].clone();
    }
    let mut det = a[k - 1][k - 1].clone();
    if sign_flip {
        det = PowerSeries::zero(truncation).sub(&det);
    }
    Ok(det)
}

/// Degree of regularity formula `D (p-1) + (D-2) n + 2`.
pub fn dreg_formula(n: u64, p: u64, d: u64) -> u64 {
    d * (p - 1) + (d - 2) * n + 2
}

/// Generic count of critical points, `binom(n-1, p-1) D^p (D-1)^{n-p}`,
/// as an exact integer.
pub fn deg_formula(n: u64, p: u64, d: u64) -> BigUint {
    binomial(n - 1, p - 1)
        * num_traits::pow(BigUint::from(d), p as usize)
        * num_traits::pow(BigUint::from(d - 1), (n - p) as usize)
}

/// Exact binomial coefficient.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// Hilbert series of the homogeneous critical-point ideal:
/// `det(A(t^{D-1})) / t^{(D-1) binom(p-1, 2)}
///  * (1 - t^D)^p (1 - t^{D-1})^{n-p} / (1 - t)^n`.
///
/// The result is verified to be a polynomial (a trailing window of zero
/// coefficients inside the working truncation); a nonzero tail or any
/// remainder in the exact divisions reports [`Error::InexactDivision`].
pub fn hs_unmixed(n: usize, p: usize, d: usize, truncation: usize) -> Result<PowerSeries> {
    assert!(p >= 1 && p <= n && d >= 2);
    let e = d - 1;
    let shift = e * (p - 1) * p.saturating_sub(2) / 2; // e * binom(p-1, 2)
    let dreg = dreg_formula(n as u64, p as u64, d as u64) as usize;
    // Every intermediate here is a genuine polynomial; the working
    // truncation must exceed all their degrees.
    let work = (dreg + n * d + shift + 4).max(truncation);

    // det commutes with the substitution t -> t^{D-1}, and A(t) is much
    // smaller than A(t^{D-1}).
    let a = matrix_a(n, p, 1, work);
    let det = det_series(&a, work)?.substitute_t_power(e, work);

    let mut numerator = det
        .mul(&PowerSeries::one_minus_t_pow(d, work).pow(p))
        .mul(&PowerSeries::one_minus_t_pow(e, work).pow(n - p));
    let mut t_shift = PowerSeries::zero(work);
    t_shift.coeffs[shift] = BigInt::one();
    numerator = numerator.divide_exact(&t_shift)?;
    let series = numerator.divide_exact(&PowerSeries::one_minus_t_pow(1, work).pow(n))?;

    // Polynomial check: the quotient must terminate well inside the
    // working window.
    let degree = series.last_nonzero().unwrap_or(0);
    if degree + 2 >= series.truncation() {
        return Err(Error::InexactDivision { degree });
    }
    Ok(series.resized(truncation))
}

/// Hilbert series of the determinantal ideal of a `p x m` variable matrix:
/// `det A(t) / (t^{binom(p-1, 2)} (1 - t)^{(m+1)(p-1)})`, an infinite
/// series truncated at `truncation`.
pub fn hs_determinantal(p: usize, m: usize, truncation: usize) -> Result<PowerSeries> {
    assert!(p >= 1 && p <= m);
    let n = m + 1;
    let shift = (p - 1) * p.saturating_sub(2) / 2; // binom(p-1, 2)
    let work = truncation + shift + p * p + 2;
    let a = matrix_a(n, p, 1, work);
    let det = det_series(&a, work)?;
    let mut t_shift = PowerSeries::zero(work);
    t_shift.coeffs[shift] = BigInt::one();
    let series = det
        .divide_exact(&t_shift)?
        .divide_exact(&PowerSeries::one_minus_t_pow(1, work).pow(n * (p - 1)))?;
    Ok(series.resized(truncation))
}

/// Determinant of the integer matrix `A(1)`; equals `binom(n-1, p-1)` by
/// the Harris–Tu identity, which the callers assert.
pub fn det_a_at_one(n: usize, p: usize) -> BigInt {
    assert!(p >= 1 && p <= n);
    let size = p - 1;
    if size == 0 {
        return BigInt::one();
    }
    // Vandermonde collapses each entry to a single binomial.
    let mut a: Vec<Vec<BigInt>> = (1..=size)
        .map(|i| {
            (1..=size)
                .map(|j| {
                    BigInt::from(binomial(
                        (p - i + n - 1 - j) as u64,
                        (p - i) as u64,
                    ))
                })
                .collect()
        })
        .collect();
    // Integer Bareiss elimination.
    let mut prev = BigInt::one();
    let mut sign = BigInt::one();
    for r in 0..size {
        if a[r][r].is_zero() {
            let swap = (r + 1..size).find(|&s| !a[s][r].is_zero());
            match swap {
                Some(s) => {
                    a.swap(r, s);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in r + 1..size {
            for j in r + 1..size {
                let num = &a[i][j] * &a[r][r] - &a[i][r] * &a[r][j];
                a[i][j] = num / &prev;
            }
        }
        prev = a[r][r].clone();
    }
    sign * a[size - 1][size - 1].clone()
}

/// The two summands of the arithmetic complexity bound for computing a lex
/// basis of a critical-point ideal.
#[derive(Clone, Debug)]
pub struct ComplexityBound {
    /// log10 of `binom(n + dreg, dreg)^omega` (matrix-arithmetic summand).
    pub grevlex_log10: f64,
    /// log10 of `n binom(n-1, p-1)^3 D^{3p} (D-1)^{3(n-p)}` (change of
    /// ordering summand).
    pub fglm_log10: f64,
    /// Exact `binom(n + dreg, dreg)` when it is small enough to print.
    pub grevlex_binomial: Option<BigUint>,
    /// Exact second summand when it is small enough to print.
    pub fglm_exact: Option<BigUint>,
}

/// Bit-size cutoff for reporting exact integers alongside the float view.
const EXACT_REPORT_BITS: u64 = 4096;

/// Evaluates both summands of the complexity bound via log-gamma, with the
/// exact integers attached when they fit a printable size.
pub fn complexity_bound(n: u64, p: u64, d: u64, omega: f64) -> ComplexityBound {
    assert!((2.0..=3.0).contains(&omega));
    let dreg = dreg_formula(n, p, d);
    let ln10 = core::f64::consts::LN_10;
    let grevlex_ln = ln_binomial(n + dreg, dreg) * omega;
    let fglm_ln = ln_u64(n)
        + 3.0 * ln_binomial(n - 1, p - 1)
        + 3.0 * p as f64 * ln_u64(d)
        + 3.0 * (n - p) as f64 * ln_u64(d - 1);

    let grevlex_binomial = if grevlex_ln / omega / core::f64::consts::LN_2
        < EXACT_REPORT_BITS as f64
    {
        Some(binomial(n + dreg, dreg))
    } else {
        None
    };
    let fglm_exact = if fglm_ln / core::f64::consts::LN_2 < EXACT_REPORT_BITS as f64 {
        Some(
            BigUint::from(n)
                * num_traits::pow(binomial(n - 1, p - 1), 3)
                * num_traits::pow(BigUint::from(d), 3 * p as usize)
                * num_traits::pow(BigUint::from(d - 1), 3 * (n - p) as usize),
        )
    } else {
        None
    };
    ComplexityBound {
        grevlex_log10: grevlex_ln / ln10,
        fglm_log10: fglm_ln / ln10,
        grevlex_binomial,
        fglm_exact,
    }
}

/// The ratio `log binom(n + dreg, n) / log DEG`, evaluated via log-gamma
/// so that parameter ranges far past integer overflow are exact enough to
/// print to two decimals.
pub fn complexity_ratio(n: u64, p: u64, d: u64) -> f64 {
    let dreg = dreg_formula(n, p, d);
    let num = ln_binomial(n + dreg, n);
    let den = ln_binomial(n - 1, p - 1) + p as f64 * ln_u64(d) + (n - p) as f64 * ln_u64(d - 1);
    num / den
}

fn ln_u64(v: u64) -> f64 {
    if v <= 1 {
        0.0
    } else {
        libm::log(v as f64)
    }
}

/// `ln binom(a, b)` via the log-gamma function.
pub fn ln_binomial(a: u64, b: u64) -> f64 {
    if b > a {
        return f64::NEG_INFINITY;
    }
    if b == 0 || b == a {
        return 0.0;
    }
    libm::lgamma((a + 1) as f64) - libm::lgamma((b + 1) as f64) - libm::lgamma((a - b + 1) as f64)
}

/// Exact check used by callers: the `BigInt` is nonnegative and equals the
/// given `BigUint`.
pub fn bigint_eq_biguint(a: &BigInt, b: &BigUint) -> bool {
    !a.is_negative() && a.magnitude() == b
}
