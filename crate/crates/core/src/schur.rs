//! Recombination of traces into the resultant.
//!
//! With `S(λ) = Σ_v T_v λ^v`, the multi-Schur values `P_k` are the Taylor
//! coefficients of `exp(-S(λ))`, and the resultant is `(-1)^d P_d` at the
//! degree vector `d`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{Coefficient, PolySystem};
use crate::error::{Error, Result};
use crate::traces::{build_trace_table, IndexBox, TraceIndex, TraceTable};

/// Degrees `d_i = (Π_j r_j) / r_i` of the resultant in the coefficients of
/// each `f_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeVector {
    entries: Vec<u32>,
}

impl DegreeVector {
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    pub fn total(&self) -> u64 {
        self.entries.iter().map(|&d| d as u64).sum()
    }

    /// Cells in the trace table, `Π (d_i + 1)`, saturating.
    pub fn table_size(&self) -> u64 {
        self.entries
            .iter()
            .fold(1u64, |acc, &d| acc.saturating_mul(d as u64 + 1))
    }

    pub fn as_index(&self) -> TraceIndex {
        TraceIndex::new(self.entries.clone())
    }
}

pub fn degree_vector(system: &PolySystem) -> DegreeVector {
    degree_vector_of(&system.degrees())
}

pub fn degree_vector_of(degrees: &[u32]) -> DegreeVector {
    let entries = (0..degrees.len())
        .map(|i| {
            degrees
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, &r)| r)
                .product()
        })
        .collect();
    DegreeVector { entries }
}

/// The values `P_v` for every `v` up to a bound; `P_0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchurTable(TraceTable);

impl SchurTable {
    pub fn get(&self, k: &[u32]) -> Option<&Coefficient> {
        self.0.get(k)
    }

    pub fn bound(&self) -> &TraceIndex {
        self.0.bound()
    }

    pub fn as_table(&self) -> &TraceTable {
        &self.0
    }
}

/// `P_k` by explicit summation over ordered partitions of `k` into non-zero
/// vectors:
///
/// `P_k = Σ_m (-1)^m / m! Σ_{v_1+...+v_m = k} T_{v_1} ... T_{v_m}`.
///
/// The number of partitions grows very fast; intended for small `k`.
pub fn schur_direct(table: &TraceTable, k: &TraceIndex) -> Result<Coefficient> {
    if k.is_zero() {
        return Ok(Coefficient::one());
    }
    if !k.le(table.bound()) {
        return Err(Error::MissingEntry(k.as_slice().to_vec()));
    }
    // sums[m] accumulates Σ over partitions with m parts.
    let mut sums: Vec<Coefficient> = vec![Coefficient::zero(); k.total() as usize + 1];
    let mut parts: Vec<TraceIndex> = Vec::new();
    partitions(table, k.as_slice().to_vec(), &mut parts, &mut sums)?;
    let mut total = Coefficient::zero();
    let mut factorial = BigInt::one();
    for (m, s) in sums.iter().enumerate().skip(1) {
        factorial *= m;
        let term = s.div_int(&factorial);
        if m % 2 == 1 {
            total -= &term;
        } else {
            total += &term;
        }
    }
    Ok(total)
}

fn partitions(
    table: &TraceTable,
    remaining: Vec<u32>,
    parts: &mut Vec<TraceIndex>,
    sums: &mut [Coefficient],
) -> Result<()> {
    if remaining.iter().all(|&r| r == 0) {
        let mut prod = Coefficient::one();
        for v in parts.iter() {
            prod = &prod * table.try_get(v.as_slice())?;
        }
        sums[parts.len()] += &prod;
        return Ok(());
    }
    let layout = IndexBox::new(TraceIndex::new(remaining.clone()));
    for v in layout.indices().skip(1) {
        let rest: Vec<u32> = remaining.iter().zip(v.as_slice()).map(|(a, b)| a - b).collect();
        parts.push(v);
        partitions(table, rest, parts, sums)?;
        parts.pop();
    }
    Ok(())
}

/// All `P_v` with `v <= bound` from the first-index recurrence
///
/// `k_j P_k = -Σ_{0 < v <= k} v_j T_v P_{k-v}`,
///
/// `j` the first position where `k` is non-zero, evaluated in graded order.
///
/// When every `g_v = v! T_v` is an integer (the case for integer input) the
/// recurrence runs on `Q_k = k! P_k`, which is then integral as well:
///
/// `Q_k = -Σ C(k_j - 1, v_j - 1) Π_{i≠j} C(k_i, v_i) g_v Q_{k-v}`.
pub fn schur_recurrence(table: &TraceTable, bound: &TraceIndex) -> Result<SchurTable> {
    if !bound.le(table.bound()) {
        return Err(Error::MissingEntry(bound.as_slice().to_vec()));
    }
    let layout = IndexBox::new(bound.clone());
    let traces: Vec<(TraceIndex, usize, &Coefficient)> = table
        .nonzero()
        .into_iter()
        .filter(|(v, _)| v.le(bound))
        .map(|(v, t)| {
            let delta = layout.offset(v.as_slice()).unwrap();
            (v, delta, t)
        })
        .collect();
    let factorials = factorials(bound.as_slice().iter().copied().max().unwrap_or(0));
    let index_factorial =
        |k: &[u32]| k.iter().fold(BigInt::one(), |acc, &x| acc * &factorials[x as usize]);
    let scaled: Option<Vec<BigInt>> = traces
        .iter()
        .map(|(v, _, t)| {
            let g = t.as_rational()? * BigRational::from_integer(index_factorial(v.as_slice()));
            g.is_integer().then(|| g.to_integer())
        })
        .collect();
    let values = match scaled {
        Some(g) => {
            let steps: Vec<_> = traces.iter().zip(&g).map(|((v, d, _), g)| (v, *d, g)).collect();
            let q = scaled_recurrence(&layout, &steps);
            layout
                .indices()
                .zip(q)
                .map(|(k, q)| {
                    Coefficient::from(BigRational::new(q, index_factorial(k.as_slice())))
                })
                .collect()
        }
        None => rational_recurrence(&layout, &traces),
    };
    Ok(SchurTable(TraceTable::from_values(layout, values)))
}

fn factorials(max: u32) -> Vec<BigInt> {
    let mut out = vec![BigInt::one()];
    for i in 1..=max {
        let next = out.last().unwrap() * i;
        out.push(next);
    }
    out
}

/// Pascal's triangle up to row `max`.
fn binomials(max: u32) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::one()]];
    for n in 1..=max as usize {
        let prev = &rows[n - 1];
        let mut row = vec![BigInt::one(); n + 1];
        for k in 1..n {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

fn pivot_and_offset(layout: &IndexBox, k: &TraceIndex) -> (usize, usize) {
    let ks = k.as_slice();
    (ks.iter().position(|&x| x > 0).unwrap(), layout.offset(ks).unwrap())
}

fn below(v: &[u32], k: &[u32], pivot: usize) -> bool {
    v[pivot] > 0 && v.iter().zip(k).all(|(a, b)| a <= b)
}

fn scaled_recurrence(layout: &IndexBox, steps: &[(&TraceIndex, usize, &BigInt)]) -> Vec<BigInt> {
    let binom = binomials(layout.bound().as_slice().iter().copied().max().unwrap_or(0));
    let mut values = vec![BigInt::zero(); layout.size()];
    values[0] = BigInt::one();
    for k in layout.graded_indices().into_iter().skip(1) {
        let (pivot, off) = pivot_and_offset(layout, &k);
        let ks = k.as_slice();
        let mut acc = BigInt::zero();
        for (v, delta, g) in steps {
            let vs = v.as_slice();
            if !below(vs, ks, pivot) {
                continue;
            }
            let prev = &values[off - delta];
            if prev.is_zero() {
                continue;
            }
            let mut weight = binom[ks[pivot] as usize - 1][vs[pivot] as usize - 1].clone();
            for (i, (&a, &b)) in ks.iter().zip(vs).enumerate() {
                if i != pivot && b > 0 {
                    weight *= &binom[a as usize][b as usize];
                }
            }
            acc += weight * *g * prev;
        }
        values[off] = -acc;
    }
    values
}

fn rational_recurrence(
    layout: &IndexBox,
    traces: &[(TraceIndex, usize, &Coefficient)],
) -> Vec<Coefficient> {
    let n = layout.bound().len();
    // `v_j T_v` for every `j`.
    let weighted: Vec<Vec<Coefficient>> = traces
        .iter()
        .map(|(v, _, t)| (0..n).map(|j| t.scale_int(&BigInt::from(v.as_slice()[j]))).collect())
        .collect();
    let mut values = vec![Coefficient::zero(); layout.size()];
    values[0] = Coefficient::one();
    for k in layout.graded_indices().into_iter().skip(1) {
        let (pivot, off) = pivot_and_offset(layout, &k);
        let ks = k.as_slice();
        let mut acc = Coefficient::zero();
        for ((v, delta, _), w) in traces.iter().zip(&weighted) {
            if !below(v.as_slice(), ks, pivot) {
                continue;
            }
            let prev = &values[off - delta];
            if !prev.is_zero() {
                acc += &(&w[pivot] * prev);
            }
        }
        values[off] = -acc.div_int(&BigInt::from(ks[pivot]));
    }
    values
}

fn check_nondegenerate(system: &PolySystem) -> Result<()> {
    if let Some(i) = system.polys().iter().position(|p| p.is_zero()) {
        return Err(Error::InvalidSystem(format!("f{} is the zero polynomial", i + 1)));
    }
    Ok(())
}

fn signed(value: Coefficient, total: u64) -> Coefficient {
    if total % 2 == 1 {
        -value
    } else {
        value
    }
}

/// Resultant of the system, `(-1)^d P_d`, via the trace table and the
/// first-index recurrence.
pub fn resultant(system: &PolySystem) -> Result<Coefficient> {
    check_nondegenerate(system)?;
    let d = degree_vector(system);
    let table = build_trace_table(system)?;
    resultant_from_table(&table, &d)
}

pub fn resultant_from_table(table: &TraceTable, d: &DegreeVector) -> Result<Coefficient> {
    let bound = d.as_index();
    let schur = schur_recurrence(table, &bound)?;
    let p = schur.get(bound.as_slice()).cloned().unwrap();
    Ok(signed(p, d.total()))
}

/// Resultant through the ordered-partition sum
/// `Σ_m (-1)^{m+d}/m! Σ T_{v_1}...T_{v_m}`. Exponential in `d`.
pub fn resultant_by_partitions(system: &PolySystem) -> Result<Coefficient> {
    check_nondegenerate(system)?;
    let d = degree_vector(system);
    let table = build_trace_table(system)?;
    let p = schur_direct(&table, &d.as_index())?;
    Ok(signed(p, d.total()))
}
