//! Bounded depth-first lattice point enumeration.
//!
//! Variables are assigned in natural order `x_1, ..., x_{m-1}`. Before a
//! variable is branched on, every row that mentions it is turned into an
//! interval for it: the already-assigned part of the row is a constant and
//! the unassigned tail is replaced by its extreme value over the variable
//! bounds. The interval is therefore a superset of the feasible values and
//! is exact at the last variable, so every leaf is a solution and dead
//! subtrees are cut as soon as a row can no longer be satisfied.

use rayon::prelude::*;

use super::system::{LinearSystem, Relation};
use crate::arith::{ceil_div, floor_div};
use crate::error::{Error, Result};

/// Finite per-variable bounds `(lo_i, hi_i)` of a cut system.
///
/// Bounds come from single-variable rows (`x_i >= 1`, `m x_i + i <= F + m`,
/// the pinned `x_{k*}`) and, under a genus cut, from
/// `x_i <= g - sum_{j != i} lo_j`.
pub fn variable_bounds(sys: &LinearSystem) -> Result<Vec<(i64, i64)>> {
    let n = sys.dimension();
    let mut lo: Vec<Option<i64>> = vec![None; n];
    let mut hi: Vec<Option<i64>> = vec![None; n];
    let tighten_lo = |slot: &mut Option<i64>, v: i64| *slot = Some(slot.map_or(v, |s| s.max(v)));
    let tighten_hi = |slot: &mut Option<i64>, v: i64| *slot = Some(slot.map_or(v, |s| s.min(v)));

    for c in sys.constraints() {
        let Some((i, a)) = c.single_variable() else {
            continue;
        };
        let b = c.rhs();
        // a * x REL b
        let (floor_q, ceil_q) = if a > 0 {
            (floor_div(b, a), ceil_div(b, a))
        } else {
            (floor_div(-b, -a), ceil_div(-b, -a))
        };
        let (ge, le) = match (c.relation(), a > 0) {
            (Relation::Eq, _) => (true, true),
            (Relation::Ge, true) | (Relation::Le, false) => (true, false),
            (Relation::Le, true) | (Relation::Ge, false) => (false, true),
        };
        if ge {
            tighten_lo(&mut lo[i], ceil_q);
        }
        if le {
            tighten_hi(&mut hi[i], floor_q);
        }
    }

    // sum rows with positive coefficients (the genus cut)
    for c in sys.constraints() {
        if c.relation() != Relation::Eq || c.coeffs().iter().any(|&a| a <= 0) {
            continue;
        }
        if lo.iter().any(Option::is_none) {
            break;
        }
        let lo_sum: i64 = c
            .coeffs()
            .iter()
            .zip(&lo)
            .map(|(a, l)| a * l.expect("checked"))
            .sum();
        for i in 0..n {
            let a = c.coeffs()[i];
            let others = lo_sum - a * lo[i].expect("checked");
            tighten_hi(&mut hi[i], floor_div(c.rhs() - others, a));
        }
    }

    lo.into_iter()
        .zip(hi)
        .map(|(l, h)| match (l, h) {
            (Some(l), Some(h)) => Ok((l, h)),
            _ => Err(Error::Unbounded),
        })
        .collect()
}

struct Row {
    coeffs: Vec<i64>,
    rhs: i64,
    relation: Relation,
    /// `tail_min[d]` / `tail_max[d]`: extreme values of `sum_{i >= d} c_i x_i`.
    tail_min: Vec<i64>,
    tail_max: Vec<i64>,
}

/// A system compiled for search.
struct Search {
    n: usize,
    bounds: Vec<(i64, i64)>,
    rows: Vec<Row>,
    /// rows with a nonzero coefficient on each variable
    touching: Vec<Vec<usize>>,
}

impl Search {
    fn new(sys: &LinearSystem) -> Result<Self> {
        let bounds = variable_bounds(sys)?;
        let n = sys.dimension();
        let rows: Vec<Row> = sys
            .constraints()
            .iter()
            .map(|c| {
                let mut tail_min = vec![0; n + 1];
                let mut tail_max = vec![0; n + 1];
                for d in (0..n).rev() {
                    let a = c.coeffs()[d];
                    let (l, h) = bounds[d];
                    tail_min[d] = tail_min[d + 1] + (a * l).min(a * h);
                    tail_max[d] = tail_max[d + 1] + (a * l).max(a * h);
                }
                Row {
                    coeffs: c.coeffs().to_vec(),
                    rhs: c.rhs(),
                    relation: c.relation(),
                    tail_min,
                    tail_max,
                }
            })
            .collect();
        let touching = (0..n)
            .map(|d| {
                rows.iter()
                    .enumerate()
                    .filter(|(_, r)| r.coeffs[d] != 0)
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok(Search {
            n,
            bounds,
            rows,
            touching,
        })
    }

    /// Values of `x_d` compatible with every row, given the partial row sums
    /// of the variables before `d`.
    fn domain(&self, d: usize, partial: &[i64]) -> (i64, i64) {
        let (mut lo, mut hi) = self.bounds[d];
        for &r in &self.touching[d] {
            let row = &self.rows[r];
            let a = row.coeffs[d];
            let base = partial[r];
            let (need_ge, need_le) = match row.relation {
                Relation::Ge => (true, false),
                Relation::Le => (false, true),
                Relation::Eq => (true, true),
            };
            if need_ge {
                // a x >= rhs - base - tail_max
                let t = row.rhs - base - row.tail_max[d + 1];
                if a > 0 {
                    lo = lo.max(ceil_div(t, a));
                } else {
                    hi = hi.min(floor_div(-t, -a));
                }
            }
            if need_le {
                // a x <= rhs - base - tail_min
                let t = row.rhs - base - row.tail_min[d + 1];
                if a > 0 {
                    hi = hi.min(floor_div(t, a));
                } else {
                    lo = lo.max(ceil_div(-t, -a));
                }
            }
            if lo > hi {
                break;
            }
        }
        (lo, hi)
    }

    fn extend(&self, d: usize, partial: &[i64], value: i64, out: &mut [i64]) {
        for (r, row) in self.rows.iter().enumerate() {
            out[r] = partial[r] + row.coeffs[d] * value;
        }
    }

    fn count_below(&self, d: usize, partial: &[i64], scratch: &mut [Vec<i64>]) -> Result<u64> {
        let (lo, hi) = self.domain(d, partial);
        if lo > hi {
            return Ok(0);
        }
        if d + 1 == self.n {
            return Ok((hi - lo + 1) as u64);
        }
        let (head, tail) = scratch.split_at_mut(1);
        let next = &mut head[0];
        let mut total: u64 = 0;
        for v in lo..=hi {
            self.extend(d, partial, v, next);
            let sub = self.count_below(d + 1, next, tail)?;
            total = total
                .checked_add(sub)
                .ok_or(Error::Overflow("lattice point count"))?;
        }
        Ok(total)
    }
}

/// Lattice points of a bounded system in lexicographic order.
pub struct LatticePoints {
    search: Search,
    point: Vec<i64>,
    hi: Vec<i64>,
    /// `partial[d]`: row sums over `x_0..x_{d-1}`
    partial: Vec<Vec<i64>>,
    len: usize,
    started: bool,
    done: bool,
}

impl LatticePoints {
    fn assign(&mut self, d: usize, value: i64) {
        self.point[d] = value;
        let (before, after) = self.partial.split_at_mut(d + 1);
        self.search.extend(d, &before[d], value, &mut after[0]);
    }

    /// Moves the deepest assigned variable to its next value, popping
    /// exhausted levels.
    fn bump(&mut self) -> bool {
        while self.len > 0 {
            let d = self.len - 1;
            if self.point[d] < self.hi[d] {
                let v = self.point[d] + 1;
                self.assign(d, v);
                return true;
            }
            self.len -= 1;
        }
        false
    }

    fn fill(&mut self) -> bool {
        while self.len < self.search.n {
            let d = self.len;
            let (lo, hi) = self.search.domain(d, &self.partial[d]);
            if lo <= hi {
                self.hi[d] = hi;
                self.assign(d, lo);
                self.len += 1;
            } else if !self.bump() {
                return false;
            }
        }
        true
    }
}

impl Iterator for LatticePoints {
    type Item = Vec<i64>;

    fn next(&mut self) -> Option<Vec<i64>> {
        if self.done {
            return None;
        }
        let advanced = if self.started {
            self.bump()
        } else {
            self.started = true;
            true
        };
        if !advanced || !self.fill() {
            self.done = true;
            return None;
        }
        Some(self.point.clone())
    }
}

/// Streams the lattice points of a bounded system, each exactly once, in
/// lexicographic order.
pub fn enumerate_lattice_points(sys: &LinearSystem) -> Result<LatticePoints> {
    let search = Search::new(sys)?;
    let n = search.n;
    let rows = search.rows.len();
    Ok(LatticePoints {
        search,
        point: vec![0; n],
        hi: vec![0; n],
        partial: vec![vec![0; rows]; n + 1],
        len: 0,
        started: false,
        done: false,
    })
}

/// Number of lattice points of a bounded system. The range of `x_1` is split
/// across worker threads.
pub fn count_lattice_points(sys: &LinearSystem) -> Result<u64> {
    let search = Search::new(sys)?;
    let rows = search.rows.len();
    let root = vec![0; rows];
    let (lo, hi) = search.domain(0, &root);
    if lo > hi {
        return Ok(0);
    }
    if search.n == 1 {
        return Ok((hi - lo + 1) as u64);
    }
    let partials: Vec<u64> = (lo..=hi)
        .into_par_iter()
        .map(|v| {
            let mut scratch = vec![vec![0; rows]; search.n];
            let (first, rest) = scratch.split_at_mut(1);
            search.extend(0, &root, v, &mut first[0]);
            search.count_below(1, &first[0], rest)
        })
        .collect::<Result<_>>()?;
    partials.into_iter().try_fold(0u64, |acc, c| {
        acc.checked_add(c).ok_or(Error::Overflow("lattice point count"))
    })
}
