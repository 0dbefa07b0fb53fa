use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use super::index::{IndexBox, TraceIndex};
use super::minor::{integer_determinant, minor_weight};
use super::table::TraceTable;
use super::transport::{enumerate_transportation, TransportationMatrix};
use crate::algebra::{Coefficient, PolySystem, PowerTable};
use crate::error::{Error, Result};

/// Terms of one power `g^k` with an exponent lookup for the forced last row.
#[derive(Debug)]
struct SparsePower {
    terms: Vec<(Vec<u32>, Coefficient)>,
    lookup: HashMap<Vec<u32>, usize>,
}

impl SparsePower {
    fn get(&self, e: &[u32]) -> Option<&Coefficient> {
        self.lookup.get(e).map(|&i| &self.terms[i].1)
    }
}

/// The system with every `f_i`, `i` outside `support`, deleted and the
/// matching variables set to zero.
#[derive(Debug)]
struct Subsystem {
    degrees: Vec<u32>,
    /// `Π r_i` over the deleted indices.
    multiplier: BigInt,
    /// `powers[i][k]` is the restricted `f_{support[i]}^k`.
    powers: Vec<Vec<SparsePower>>,
}

impl Subsystem {
    fn targets(&self, k: &[u32]) -> Vec<u64> {
        self.degrees.iter().zip(k).map(|(&r, &k)| r as u64 * k as u64).collect()
    }

    fn weight(&self, rows: &[&[u32]], k: &[u32]) -> BigInt {
        let m = rows.len();
        let minor = (1..m)
            .map(|i| {
                (1..m)
                    .map(|j| {
                        let diag = if i == j { self.degrees[i] as i128 * k[i] as i128 } else { 0 };
                        diag - rows[i][j] as i128
                    })
                    .collect()
            })
            .collect();
        integer_determinant(minor)
    }

    /// Depth-first walk over one monomial of `g_i^{k_i}` per row, pruning on
    /// column sums. The row with the largest support is never enumerated: it
    /// is forced by the column targets and looked up directly.
    fn walk(&self, k: &[u32], visit: &mut Visitor<'_>) {
        let m = k.len();
        let rows: Vec<&SparsePower> = (0..m).map(|i| &self.powers[i][k[i] as usize]).collect();
        if rows.iter().any(|r| r.terms.is_empty()) {
            return;
        }
        let forced = (0..m).max_by_key(|&i| rows[i].terms.len()).unwrap();
        let mut walk = Walk {
            order: (0..m).filter(|&i| i != forced).collect(),
            forced,
            targets: self.targets(k),
            rows,
            cols: vec![0; m],
            picks: vec![0; m],
        };
        walk.descend(0, visit);
    }

    fn trace_positive(&self, k: &[u32]) -> Coefficient {
        let mut by_weight: HashMap<BigInt, Coefficient> = HashMap::new();
        self.walk(k, &mut |exps, coefs| {
            let w = self.weight(exps, k);
            if w.is_zero() {
                return;
            }
            let mut prod = coefs[0].clone();
            for c in &coefs[1..] {
                prod = &prod * c;
            }
            by_weight
                .entry(w)
                .and_modify(|acc| *acc += &prod)
                .or_insert(prod);
        });
        let mut total = Coefficient::zero();
        for (w, sum) in by_weight {
            total += &sum.scale_int(&w);
        }
        let denom: BigInt = k.iter().map(|&v| BigInt::from(v)).product();
        total.div_int(&denom)
    }

    fn trace_positive_enumerated(&self, k: &[u32]) -> Coefficient {
        let targets = self.targets(k);
        let mats = enumerate_transportation(&targets, &targets).expect("square margins");
        let mut total = Coefficient::zero();
        for mat in &mats {
            let w = minor_weight(mat, &self.degrees, k);
            if w.is_zero() {
                continue;
            }
            let mut prod = Coefficient::one();
            for (i, &ki) in k.iter().enumerate() {
                match self.powers[i][ki as usize].get(mat.row(i)) {
                    Some(c) => prod = &prod * c,
                    None => {
                        prod = Coefficient::zero();
                        break;
                    }
                }
            }
            if !prod.is_zero() {
                total += &prod.scale_int(&w);
            }
        }
        let denom: BigInt = k.iter().map(|&v| BigInt::from(v)).product();
        total.div_int(&denom)
    }
}

/// Receives the chosen exponent rows and their coefficients.
type Visitor<'v> = dyn FnMut(&[&[u32]], &[&Coefficient]) + 'v;

struct Walk<'a> {
    order: Vec<usize>,
    forced: usize,
    targets: Vec<u64>,
    rows: Vec<&'a SparsePower>,
    cols: Vec<u64>,
    picks: Vec<usize>,
}

impl Walk<'_> {
    fn descend(&mut self, depth: usize, visit: &mut Visitor<'_>) {
        if depth == self.order.len() {
            let needed: Vec<u32> =
                self.targets.iter().zip(&self.cols).map(|(t, c)| (t - c) as u32).collect();
            if let Some(&idx) = self.rows[self.forced].lookup.get(&needed) {
                self.picks[self.forced] = idx;
                let picked: Vec<&(Vec<u32>, Coefficient)> =
                    self.picks.iter().zip(&self.rows).map(|(&p, r)| &r.terms[p]).collect();
                let exps: Vec<&[u32]> = picked.iter().map(|t| t.0.as_slice()).collect();
                let coefs: Vec<&Coefficient> = picked.iter().map(|t| &t.1).collect();
                visit(&exps, &coefs);
            }
            return;
        }
        let row = self.order[depth];
        let rows = self.rows.clone();
        for (t, (e, _)) in rows[row].terms.iter().enumerate() {
            let fits = e
                .iter()
                .zip(&self.cols)
                .zip(&self.targets)
                .all(|((&x, &c), &tg)| c + x as u64 <= tg);
            if !fits {
                continue;
            }
            for (c, &x) in self.cols.iter_mut().zip(e) {
                *c += x as u64;
            }
            self.picks[row] = t;
            self.descend(depth + 1, visit);
            for (c, &x) in self.cols.iter_mut().zip(e) {
                *c -= x as u64;
            }
        }
    }
}

/// Shared state for evaluating traces of one system: power tables of every
/// `f_i` up to the requested bound, and lazily built restricted subsystems
/// keyed by the surviving index set.
#[derive(Debug)]
pub struct TraceEngine {
    n: usize,
    degrees: Vec<u32>,
    bound: TraceIndex,
    powers: Vec<PowerTable>,
    subsystems: Mutex<HashMap<Vec<usize>, Arc<Subsystem>>>,
}

impl TraceEngine {
    /// Builds power tables `f_i^0 ..= f_i^{bound_i}` up front.
    pub fn new(system: &PolySystem, bound: TraceIndex) -> Result<Self> {
        if bound.len() != system.n() {
            return Err(Error::InvalidSystem(format!(
                "trace bound has length {}, system has {} polynomials",
                bound.len(),
                system.n()
            )));
        }
        let powers = system
            .polys()
            .iter()
            .zip(bound.as_slice())
            .map(|(p, &k)| PowerTable::new(p.clone(), k))
            .collect();
        Ok(TraceEngine {
            n: system.n(),
            degrees: system.degrees(),
            bound,
            powers,
            subsystems: Mutex::new(HashMap::new()),
        })
    }

    pub fn bound(&self) -> &TraceIndex {
        &self.bound
    }

    fn subsystem(&self, support: &[usize]) -> Arc<Subsystem> {
        if let Some(s) = self.subsystems.lock().unwrap().get(support) {
            return Arc::clone(s);
        }
        let zeroed: Vec<usize> = (0..self.n).filter(|i| !support.contains(i)).collect();
        let multiplier = zeroed.iter().map(|&i| BigInt::from(self.degrees[i])).product();
        let powers = support
            .iter()
            .map(|&i| {
                let table = &self.powers[i];
                (0..=table.max_exponent())
                    .map(|k| {
                        let p = table.get(k).restrict_zero(&zeroed);
                        let terms: Vec<(Vec<u32>, Coefficient)> = p
                            .terms()
                            .map(|(e, c)| (e.as_slice().to_vec(), c.clone()))
                            .collect();
                        let lookup =
                            terms.iter().enumerate().map(|(i, (e, _))| (e.clone(), i)).collect();
                        SparsePower { terms, lookup }
                    })
                    .collect()
            })
            .collect();
        let sub = Arc::new(Subsystem {
            degrees: support.iter().map(|&i| self.degrees[i]).collect(),
            multiplier,
            powers,
        });
        let mut cache = self.subsystems.lock().unwrap();
        Arc::clone(cache.entry(support.to_vec()).or_insert(sub))
    }

    fn check(&self, k: &TraceIndex) -> Result<()> {
        if k.le(&self.bound) {
            Ok(())
        } else {
            Err(Error::MissingEntry(k.as_slice().to_vec()))
        }
    }

    /// `T_k` for `k` with every entry positive, via the pruned monomial walk.
    pub fn trace_positive(&self, k: &TraceIndex) -> Result<Coefficient> {
        self.check(k)?;
        if k.as_slice().contains(&0) {
            return Err(Error::InvalidSystem(format!("index {k} has a zero entry")));
        }
        let all: Vec<usize> = (0..self.n).collect();
        Ok(self.subsystem(&all).trace_positive(k.as_slice()))
    }

    /// `T_k` for `k` with every entry positive, by summing over every
    /// transportation matrix with the required margins.
    pub fn trace_positive_enumerated(&self, k: &TraceIndex) -> Result<Coefficient> {
        self.check(k)?;
        if k.as_slice().contains(&0) {
            return Err(Error::InvalidSystem(format!("index {k} has a zero entry")));
        }
        let all: Vec<usize> = (0..self.n).collect();
        Ok(self.subsystem(&all).trace_positive_enumerated(k.as_slice()))
    }

    /// Matrices reached by the pruned walk for a positive index, rows in
    /// system order.
    pub fn visited_matrices(&self, k: &TraceIndex) -> Result<Vec<TransportationMatrix>> {
        self.check(k)?;
        let all: Vec<usize> = (0..self.n).collect();
        let mut out = Vec::new();
        self.subsystem(&all).walk(k.as_slice(), &mut |exps, _| {
            let rows: Vec<Vec<u32>> = exps.iter().map(|e| e.to_vec()).collect();
            out.push(TransportationMatrix::from_rows(&rows));
        });
        Ok(out)
    }

    /// `T_k` for any `k <= bound`. Zero entries of `k` delete the matching
    /// polynomials, set the matching variables to zero, and contribute a
    /// factor `r_i` each. `T_0 = 0`.
    pub fn trace(&self, k: &TraceIndex) -> Result<Coefficient> {
        self.check(k)?;
        let support = k.support();
        if support.is_empty() {
            return Ok(Coefficient::zero());
        }
        let sub = self.subsystem(&support);
        let local: Vec<u32> = support.iter().map(|&i| k.as_slice()[i]).collect();
        let t = sub.trace_positive(&local);
        Ok(if sub.multiplier.is_one() { t } else { t.scale_int(&sub.multiplier) })
    }

    /// Every `T_v` with `v <= bound`, evaluated in parallel on the ambient
    /// rayon pool.
    pub fn table(&self) -> TraceTable {
        let layout = IndexBox::new(self.bound.clone());
        // Warm the subsystem cache sequentially so workers only read it.
        let mut supports: Vec<Vec<usize>> = layout.indices().map(|k| k.support()).collect();
        supports.sort();
        supports.dedup();
        for s in supports.iter().filter(|s| !s.is_empty()) {
            self.subsystem(s);
        }
        let values: Vec<Coefficient> = (0..layout.size())
            .into_par_iter()
            .map(|o| self.trace(&layout.index_at(o)).expect("index inside bound"))
            .collect();
        TraceTable::from_values(layout, values)
    }
}

/// Trace table of `system` over `0 <= v <= bound`.
pub fn build_trace_table_with_bound(system: &PolySystem, bound: TraceIndex) -> Result<TraceTable> {
    Ok(TraceEngine::new(system, bound)?.table())
}
