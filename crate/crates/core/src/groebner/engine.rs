//! Degree-stepped Macaulay-matrix engine.
//!
//! Work proceeds degree by degree (normal selection): at each degree the
//! pending S-pair multiples and the input generators of that degree become
//! rows of a Macaulay block, symbolic preprocessing adds one reducer row
//! per reducible monomial, and a structured row echelon over `GF(q)` (sparse
//! pivot rows, dense accumulator) reduces the block. Row order, pivot
//! choice and pair bookkeeping all follow fixed rules, so a computation is
//! bit-reproducible.

use crate::error::{Error, Result};
use crate::gf::PrimeField;
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use hashbrown::{HashMap, HashSet};

struct BasisElem {
    poly: Polynomial,
    lm: Monomial,
    redundant: bool,
}

pub(super) struct Engine {
    field: PrimeField,
    n_vars: usize,
    order: MonomialOrder,
    basis: Vec<BasisElem>,
    /// Pending S-pairs keyed by (lcm degree, i, j); the value is the lcm.
    pairs: BTreeMap<(u32, u32, u32), Monomial>,
    /// Index pairs currently pending, for the done-tracking chain check.
    pending: HashSet<(u32, u32)>,
    /// Input generators not yet absorbed, keyed by (degree, input index).
    inputs: BTreeMap<(u32, u32), Polynomial>,
    pub(super) max_step_degree: u32,
}

impl Engine {
    pub(super) fn new(
        field: PrimeField,
        n_vars: usize,
        order: MonomialOrder,
        generators: &[Polynomial],
    ) -> Result<Engine> {
        let mut inputs = BTreeMap::new();
        for (idx, g) in generators.iter().enumerate() {
            if g.is_zero() {
                return Err(Error::ZeroGenerator { index: idx });
            }
            let g = g.with_order(order);
            let deg = g.total_degree().expect("nonzero");
            inputs.insert((deg, idx as u32), g);
        }
        Ok(Engine {
            field,
            n_vars,
            order,
            basis: Vec::new(),
            pairs: BTreeMap::new(),
            pending: HashSet::new(),
            inputs,
            max_step_degree: 0,
        })
    }

    /// Runs the main loop until no pairs or inputs remain.
    pub(super) fn run(&mut self, degree_cap: Option<u32>) -> Result<()> {
        loop {
            let pair_deg = self.pairs.keys().next().map(|k| k.0);
            let input_deg = self.inputs.keys().next().map(|k| k.0);
            let degree = match (pair_deg, input_deg) {
                (None, None) => break,
                (a, b) => a.unwrap_or(u32::MAX).min(b.unwrap_or(u32::MAX)),
            };
            if let Some(cap) = degree_cap {
                if degree > cap {
                    return Err(Error::DegreeCapExceeded { degree, cap });
                }
            }
            self.step(degree);
        }
        Ok(())
    }

    /// Processes one degree: selects work, builds the block, reduces it,
    /// and feeds new elements back into the pair bookkeeping.
    fn step(&mut self, degree: u32) {
        let input_keys: Vec<(u32, u32)> = self
            .inputs
            .range((degree, 0)..(degree + 1, 0))
            .map(|(k, _)| *k)
            .collect();
        let input_rows: Vec<Polynomial> = input_keys
            .iter()
            .map(|k| self.inputs.remove(k).expect("present"))
            .collect();

        // Pending pairs of this degree, then the pop-time chain criterion.
        let pair_keys: Vec<(u32, u32, u32)> = self
            .pairs
            .range((degree, 0, 0)..(degree + 1, 0, 0))
            .map(|(k, _)| *k)
            .collect();
        let mut pair_rows: Vec<(u32, Monomial)> = Vec::new();
        let mut row_seen: HashSet<(u32, Monomial)> = HashSet::new();
        for key in pair_keys {
            let lcm = self.pairs.remove(&key).expect("present");
            let (_, i, j) = key;
            self.pending.remove(&(i, j));
            if self.chain_prunable(i, j, &lcm) {
                continue;
            }
            for idx in [i, j] {
                let mult = lcm
                    .div(&self.basis[idx as usize].lm)
                    .expect("lcm is a multiple of both leading monomials");
                if row_seen.insert((idx, mult.clone())) {
                    pair_rows.push((idx, mult));
                }
            }
        }

        if input_rows.is_empty() && pair_rows.is_empty() {
            return;
        }
        #[cfg(feature = "trace-steps")]
        {
            std::eprintln!(
                "step degree {degree}: {} input rows, {} pair rows; basis {}",
                input_rows.len(),
                pair_rows.len(),
                self.basis.len()
            );
            for (idx, mult) in &pair_rows {
                std::eprintln!(
                    "  row: g{idx} lm {:?} * {:?}",
                    self.basis[*idx as usize].lm.exponents(),
                    mult.exponents()
                );
            }
        }
        self.max_step_degree = self.max_step_degree.max(degree);

        let new_polys = self.reduce_block(&input_rows, &pair_rows);
        for poly in new_polys {
            self.add_basis_element(poly);
        }
    }

    /// Buchberger chain criterion at pop time. The pair is skipped when a
    /// third element divides the lcm and either (a) both sub-lcms are
    /// strictly smaller — those pairs sit strictly earlier in pop order —
    /// or (b) neither sub-pair is still pending, i.e. both were already
    /// processed or discharged by the update criteria. Citations always
    /// point strictly earlier in pop order, so the pruning is well-founded.
    fn chain_prunable(&self, i: u32, j: u32, lcm: &Monomial) -> bool {
        for (k, elem) in self.basis.iter().enumerate() {
            let k = k as u32;
            if k == i || k == j || !elem.lm.divides(lcm) {
                continue;
            }
            let lcm_ik = self.basis[i as usize].lm.lcm(&elem.lm);
            let lcm_jk = self.basis[j as usize].lm.lcm(&elem.lm);
            if lcm_ik != *lcm && lcm_jk != *lcm {
                return true;
            }
            if !self.pending.contains(&key_of(i, k)) && !self.pending.contains(&key_of(j, k)) {
                return true;
            }
        }
        false
    }

    /// Gebauer-Möller update on arrival of a new basis element.
    fn add_basis_element(&mut self, poly: Polynomial) {
        let lm_t = poly.leading_monomial().expect("nonzero").clone();
        let t = self.basis.len() as u32;

        // Prune old pairs whose lcm the newcomer divides through strictly
        // smaller lcms on both sides.
        {
            let basis = &self.basis;
            let pending = &mut self.pending;
            self.pairs.retain(|&(_, i, j), lcm_ij| {
                if !lm_t.divides(lcm_ij) {
                    return true;
                }
                let lcm_it = basis[i as usize].lm.lcm(&lm_t);
                let lcm_jt = basis[j as usize].lm.lcm(&lm_t);
                if lcm_it == *lcm_ij || lcm_jt == *lcm_ij {
                    true
                } else {
                    pending.remove(&(i, j));
                    false
                }
            });
        }

        // Candidate pairs (i, t), all existing indices.
        let cands: Vec<(u32, Monomial)> = (0..t)
            .map(|i| (i, self.basis[i as usize].lm.lcm(&lm_t)))
            .collect();

        // M criterion: drop a candidate when another candidate lcm
        // properly divides its lcm.
        let filtered: Vec<&(u32, Monomial)> = cands
            .iter()
            .filter(|(_, lcm_i)| {
                !cands
                    .iter()
                    .any(|(_, lcm_j)| lcm_j != lcm_i && lcm_j.divides(lcm_i))
            })
            .collect();

        // F + B criteria: one representative per lcm class; a class
        // containing a coprime pair is discharged entirely.
        let mut classes: HashMap<&Monomial, Vec<u32>> = HashMap::new();
        for (i, lcm_i) in filtered {
            classes.entry(lcm_i).or_default().push(*i);
        }
        for (lcm_i, members) in classes {
            let coprime = members
                .iter()
                .any(|&i| self.basis[i as usize].lm.is_coprime(&lm_t));
            if coprime {
                continue;
            }
            let i = *members.iter().min().expect("nonempty");
            self.pairs
                .insert((lcm_i.total_degree(), i, t), lcm_i.clone());
            self.pending.insert((i, t));
        }

        // Redundancy marking for minimality bookkeeping.
        for elem in &mut self.basis {
            if !elem.redundant && lm_t.divides(&elem.lm) {
                elem.redundant = true;
            }
        }

        self.basis.push(BasisElem {
            poly,
            lm: lm_t,
            redundant: false,
        });
    }

    /// Builds and reduces the Macaulay block for one degree step, returning
    /// the reduced rows whose leading monomials are new to the ideal of
    /// leading monomials.
    fn reduce_block(&self, input_rows: &[Polynomial], pair_rows: &[(u32, Monomial)]) -> Vec<Polynomial> {
        let q = self.field.modulus();

        // -- symbolic preprocessing ----------------------------------------
        // A monomial is done once it heads a row or has a reducer row.
        let mut done: HashSet<Monomial> = HashSet::new();
        let mut todo: Vec<Monomial> = Vec::new();
        let mut reducers: Vec<(u32, Monomial)> = Vec::new(); // (basis idx, multiplier)

        for (idx, mult) in pair_rows {
            let poly = &self.basis[*idx as usize].poly;
            done.insert(poly.leading_monomial().expect("nonzero").mul(mult));
            note_row_monomials(poly, Some(mult), true, &mut todo);
        }
        for poly in input_rows {
            // Input leading monomials may themselves be reducible, so they
            // are queued like any other monomial.
            note_row_monomials(poly, None, false, &mut todo);
        }

        while let Some(m) = todo.pop() {
            if !done.insert(m.clone()) {
                continue;
            }
            if let Some(ridx) = self.find_reducer(&m) {
                let elem = &self.basis[ridx as usize];
                let mult = m.div(&elem.lm).expect("reducer divides");
                note_row_monomials(&elem.poly, Some(&mult), true, &mut todo);
                reducers.push((ridx, mult));
            }
        }

        // -- column layout ---------------------------------------------------
        let mut columns: Vec<Monomial> = done.into_iter().collect();
        columns.sort_unstable_by(|a, b| self.order.cmp_mons(b, a));
        let col_of: HashMap<Monomial, u32> = columns
            .iter()
            .enumerate()
            .map(|(c, m)| (m.clone(), c as u32))
            .collect();
        let ncols = columns.len();

        // -- pivot rows from reducers ------------------------------------------
        // Sparse (column, coefficient) rows; monic because basis elements
        // are monic and multipliers carry coefficient 1.
        let mut pivot_rows: Vec<Vec<(u32, u32)>> = Vec::with_capacity(reducers.len());
        let mut pivot_of_col: Vec<u32> = alloc::vec![u32::MAX; ncols];
        for (ridx, mult) in &reducers {
            let poly = &self.basis[*ridx as usize].poly;
            let row = sparse_row(poly, Some(mult), &col_of);
            let lead_col = row[0].0 as usize;
            debug_assert_eq!(pivot_of_col[lead_col], u32::MAX);
            pivot_of_col[lead_col] = pivot_rows.len() as u32;
            pivot_rows.push(row);
        }

        // -- reduce the remaining rows -----------------------------------------
        let lazy = q < (1 << 16);
        let mut buffer: Vec<u64> = alloc::vec![0; ncols];
        let mut new_polys: Vec<Polynomial> = Vec::new();

        let mut reduce_one = |row: Vec<(u32, u32)>,
                              pivot_rows: &mut Vec<Vec<(u32, u32)>>,
                              pivot_of_col: &mut Vec<u32>,
                              buffer: &mut Vec<u64>|
         -> Option<Vec<(u32, u32)>> {
            buffer.iter_mut().for_each(|v| *v = 0);
            let start = row[0].0 as usize;
            for &(c, co) in &row {
                buffer[c as usize] = co as u64;
            }
            let mut survivors: Vec<u32> = Vec::new();
            for c in start..ncols {
                let v = buffer[c] % q;
                if v == 0 {
                    continue;
                }
                let p = pivot_of_col[c];
                if p == u32::MAX {
                    buffer[c] = v;
                    survivors.push(c as u32);
                    continue;
                }
                let f = q - v;
                let prow = &pivot_rows[p as usize];
                if lazy {
                    for &(c2, co2) in &prow[1..] {
                        buffer[c2 as usize] += f * co2 as u64;
                    }
                } else {
                    for &(c2, co2) in &prow[1..] {
                        buffer[c2 as usize] = (buffer[c2 as usize] + f * co2 as u64) % q;
                    }
                }
                buffer[c] = 0;
            }
            let lead = *survivors.first()?;
            let inv = self
                .field
                .inv(self.field.element(buffer[lead as usize]))
                .expect("nonzero pivot")
                .value();
            let out: Vec<(u32, u32)> = survivors
                .iter()
                .map(|&c| (c, (buffer[c as usize] * inv % q) as u32))
                .collect();
            pivot_of_col[lead as usize] = pivot_rows.len() as u32;
            pivot_rows.push(out.clone());
            Some(out)
        };

        // Input rows first (input order), then pair rows (pair order).
        let mut handle = |out: Option<Vec<(u32, u32)>>, new_polys: &mut Vec<Polynomial>| {
            if let Some(out) = out {
                let lm = &columns[out[0].0 as usize];
                // A surviving lcm-column pivot is just a shifted copy of a
                // basis element; only genuinely new leading monomials
                // become basis candidates.
                if self.find_reducer(lm).is_none() {
                    new_polys.push(self.row_to_poly(&out, &columns));
                }
            }
        };
        for poly in input_rows {
            let row = sparse_row(poly, None, &col_of);
            let out = reduce_one(row, &mut pivot_rows, &mut pivot_of_col, &mut buffer);
            handle(out, &mut new_polys);
        }
        for (idx, mult) in pair_rows {
            let poly = &self.basis[*idx as usize].poly;
            let row = sparse_row(poly, Some(mult), &col_of);
            let out = reduce_one(row, &mut pivot_rows, &mut pivot_of_col, &mut buffer);
            handle(out, &mut new_polys);
        }
        new_polys
    }

    /// Deterministic reducer choice: the smallest live basis index whose
    /// leading monomial divides `m` (live suffices: a redundant leading
    /// monomial dividing `m` implies a live one does).
    fn find_reducer(&self, m: &Monomial) -> Option<u32> {
        self.basis
            .iter()
            .enumerate()
            .find(|(_, e)| !e.redundant && e.lm.divides(m))
            .map(|(i, _)| i as u32)
    }

    fn row_to_poly(&self, row: &[(u32, u32)], columns: &[Monomial]) -> Polynomial {
        Polynomial::from_terms(
            self.field,
            self.n_vars,
            self.order,
            row.iter()
                .map(|&(c, co)| (columns[c as usize].clone(), self.field.element(co as u64))),
        )
    }

    /// Final minimal, inter-reduced, monic basis sorted by increasing
    /// leading monomial.
    pub(super) fn finish(self) -> Vec<Polynomial> {
        let order = self.order;
        let mut by_lm: Vec<(Monomial, usize)> = self
            .basis
            .iter()
            .enumerate()
            .map(|(i, e)| (e.lm.clone(), i))
            .collect();
        by_lm.sort_unstable_by(|a, b| order.cmp_mons(&a.0, &b.0));
        let mut kept: Vec<usize> = Vec::new();
        let mut kept_lms: Vec<Monomial> = Vec::new();
        for (lm, i) in by_lm {
            if !kept_lms.iter().any(|k| k.divides(&lm)) {
                kept_lms.push(lm);
                kept.push(i);
            }
        }
        let minimal: Vec<Polynomial> = kept.iter().map(|&i| self.basis[i].poly.clone()).collect();
        let mut reduced = Vec::with_capacity(minimal.len());
        for (k, g) in minimal.iter().enumerate() {
            let others: Vec<&Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, h)| h)
                .collect();
            reduced.push(reduce_full(g, &others));
        }
        reduced
    }
}

fn key_of(a: u32, b: u32) -> (u32, u32) {
    (a.min(b), a.max(b))
}

fn note_row_monomials(
    poly: &Polynomial,
    mult: Option<&Monomial>,
    skip_lead: bool,
    todo: &mut Vec<Monomial>,
) {
    for (k, term) in poly.terms().iter().enumerate() {
        if skip_lead && k == 0 {
            continue;
        }
        todo.push(match mult {
            Some(u) => term.monomial.mul(u),
            None => term.monomial.clone(),
        });
    }
}

fn sparse_row(
    poly: &Polynomial,
    mult: Option<&Monomial>,
    col_of: &HashMap<Monomial, u32>,
) -> Vec<(u32, u32)> {
    let mut row: Vec<(u32, u32)> = poly
        .terms()
        .iter()
        .map(|t| {
            let m = match mult {
                Some(u) => t.monomial.mul(u),
                None => t.monomial.clone(),
            };
            (col_of[&m], t.coeff.value() as u32)
        })
        .collect();
    row.sort_unstable_by_key(|&(c, _)| c);
    row
}

/// Complete multivariate division: no term of the result is divisible by
/// any divisor's leading monomial. Maximal irreducible prefixes move to
/// the output in one step, so reductions cost per rewrite, not per term.
pub(super) fn reduce_full(f: &Polynomial, divisors: &[&Polynomial]) -> Polynomial {
    let field = f.field();
    let mut work = f.clone();
    let mut out: Vec<(Monomial, crate::gf::FieldElement)> = Vec::new();
    loop {
        let mut rewrite = None;
        for (k, t) in work.terms().iter().enumerate() {
            if let Some(g) = divisors
                .iter()
                .find(|g| g.leading_monomial().expect("nonzero").divides(&t.monomial))
            {
                rewrite = Some((k, *g, t.monomial.clone(), t.coeff));
                break;
            }
        }
        match rewrite {
            None => {
                out.extend(work.terms().iter().map(|t| (t.monomial.clone(), t.coeff)));
                break;
            }
            Some((k, g, lm, lc)) => {
                out.extend(
                    work.terms()[..k]
                        .iter()
                        .map(|t| (t.monomial.clone(), t.coeff)),
                );
                let glt = g.leading_term().expect("nonzero divisor");
                let mult = lm.div(&glt.monomial).expect("divides");
                let c = field.div(lc, glt.coeff).expect("nonzero");
                let tail = Polynomial::from_terms(
                    field,
                    f.num_vars(),
                    f.order(),
                    work.terms()[k..].iter().map(|t| (t.monomial.clone(), t.coeff)),
                );
                work = tail.sub(&g.mul_term(&mult, c));
            }
        }
    }
    Polynomial::from_terms(field, f.num_vars(), f.order(), out)
}
