//! Submodules of `Z_q^N` in reduced Howell form.
//!
//! Every finite `Z_{p^s}`-submodule has a unique basis in echelon form whose
//! pivots are powers `p^v`, whose entries above each pivot are reduced into
//! `[0, p^v)`, and which satisfies the Howell property: any element vanishing
//! on the first `c` coordinates is a combination of the rows with pivot
//! column `>= c`. This makes the basis a canonical key for the module,
//! reduction against it a canonical normal form for cosets, and
//! `sum_i c_i row_i` with `0 <= c_i < p^{s - v_i}` a bijective enumeration.

use crate::ring::RingParams;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Submodule {
    ring: RingParams,
    dim: usize,
    rows: Vec<Vec<u64>>,
    /// `(column, valuation)` per row.
    pivots: Vec<(usize, u32)>,
}

impl Submodule {
    pub fn zero(ring: RingParams, dim: usize) -> Self {
        Submodule {
            ring,
            dim,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// The `Z_q`-span of `gens`.
    pub fn span<I>(ring: RingParams, dim: usize, gens: I) -> Self
    where
        I: IntoIterator<Item = Vec<u64>>,
    {
        let mut pool: Vec<Vec<u64>> = gens
            .into_iter()
            .map(|mut g| {
                assert_eq!(g.len(), dim, "generator of wrong length");
                g.iter_mut().for_each(|c| *c %= ring.q());
                g
            })
            .filter(|g| g.iter().any(|&c| c != 0))
            .collect();
        let mut rows = Vec::new();
        let mut pivots = Vec::new();
        for col in 0..dim {
            let best = pool
                .iter()
                .enumerate()
                .filter(|(_, r)| r[col] != 0)
                .min_by_key(|(_, r)| ring.zq_valuation(r[col]))
                .map(|(i, _)| i);
            let Some(idx) = best else { continue };
            let mut pivot = pool.swap_remove(idx);
            let v = ring.zq_valuation(pivot[col]);
            let pv = ring.p_pow(v);
            let unit = ring.zq_inv(pivot[col] / pv).expect("unit part");
            scale_row(ring, &mut pivot, unit);
            debug_assert_eq!(pivot[col], pv);
            for row in pool.iter_mut() {
                if row[col] != 0 {
                    let k = row[col] / pv;
                    axpy(ring, row, ring.zq_neg(k), &pivot);
                }
            }
            if v > 0 {
                let mut extra = pivot.clone();
                scale_row(ring, &mut extra, ring.p_pow(ring.s() - v));
                pool.push(extra);
            }
            pool.retain(|r| r.iter().any(|&c| c != 0));
            rows.push(pivot);
            pivots.push((col, v));
        }
        // Reduce entries above each pivot into [0, p^v).
        for (j, &(col, v)) in pivots.iter().enumerate() {
            let pv = ring.p_pow(v);
            let (head, tail) = rows.split_at_mut(j);
            let pivot_row = &tail[0];
            for row in head.iter_mut() {
                let k = row[col] / pv;
                if k != 0 {
                    axpy(ring, row, ring.zq_neg(k), pivot_row);
                }
            }
        }
        Submodule {
            ring,
            dim,
            rows,
            pivots,
        }
    }

    pub fn ring(&self) -> RingParams {
        self.ring
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[(usize, u32)] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    /// `log_p |M|`.
    pub fn log_size(&self) -> u64 {
        self.pivots
            .iter()
            .map(|&(_, v)| (self.ring.s() - v) as u64)
            .sum()
    }

    /// `log_p` of the part of `M` generated by rows whose pivot lies in
    /// `columns`; with `columns = 0..c` this is the size of the projection of
    /// `M` onto the first `c` coordinates.
    pub fn log_size_pivots_in(&self, columns: std::ops::Range<usize>) -> u64 {
        self.pivots
            .iter()
            .filter(|(c, _)| columns.contains(c))
            .map(|&(_, v)| (self.ring.s() - v) as u64)
            .sum()
    }

    /// `|M|` if it fits in a `u64`.
    pub fn size(&self) -> Option<u64> {
        u32::try_from(self.log_size())
            .ok()
            .and_then(|e| self.ring.p().checked_pow(e))
    }

    /// Number of values each basis coefficient ranges over: `p^{s - v}`.
    pub fn radices(&self) -> Vec<u64> {
        self.pivots
            .iter()
            .map(|&(_, v)| self.ring.p_pow(self.ring.s() - v))
            .collect()
    }

    /// Canonical representative of `v + M`.
    pub fn reduce(&self, v: &[u64]) -> Vec<u64> {
        assert_eq!(v.len(), self.dim);
        let ring = self.ring;
        let mut w: Vec<u64> = v.iter().map(|&c| c % ring.q()).collect();
        for (row, &(col, val)) in self.rows.iter().zip(&self.pivots) {
            let k = w[col] / ring.p_pow(val);
            if k != 0 {
                axpy(ring, &mut w, ring.zq_neg(k), row);
            }
        }
        w
    }

    pub fn contains(&self, v: &[u64]) -> bool {
        self.reduce(v).iter().all(|&c| c == 0)
    }

    pub fn contains_module(&self, other: &Submodule) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }

    /// `sum_i digits[i] * row_i`.
    pub fn combine(&self, digits: &[u64]) -> Vec<u64> {
        let mut w = vec![0u64; self.dim];
        for (row, &d) in self.rows.iter().zip(digits) {
            if d != 0 {
                axpy(self.ring, &mut w, d, row);
            }
        }
        w
    }

    /// All elements, in mixed-radix order of the basis coefficients (the
    /// first basis row varies fastest).
    pub fn elements(&self) -> Elements<'_> {
        Elements {
            module: self,
            radices: self.radices(),
            digits: vec![0; self.rows.len()],
            current: vec![0; self.dim],
            done: false,
        }
    }
}

fn scale_row(ring: RingParams, row: &mut [u64], c: u64) {
    for x in row.iter_mut() {
        *x = ring.zq_mul(*x, c);
    }
}

/// `y += a * x`.
fn axpy(ring: RingParams, y: &mut [u64], a: u64, x: &[u64]) {
    for (yi, &xi) in y.iter_mut().zip(x) {
        *yi = (*yi + a * xi) % ring.q();
    }
}

/// Odometer over all elements of a [`Submodule`].
pub struct Elements<'a> {
    module: &'a Submodule,
    radices: Vec<u64>,
    digits: Vec<u64>,
    current: Vec<u64>,
    done: bool,
}

impl Iterator for Elements<'_> {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        if self.done {
            return None;
        }
        let out = self.current.clone();
        let ring = self.module.ring;
        self.done = true;
        for i in 0..self.digits.len() {
            let row = &self.module.rows[i];
            if self.digits[i] + 1 < self.radices[i] {
                self.digits[i] += 1;
                axpy(ring, &mut self.current, 1, row);
                self.done = false;
                break;
            }
            // wrap digit i back to zero
            let back = ring.zq_neg(self.digits[i] % ring.q());
            axpy(ring, &mut self.current, back, row);
            self.digits[i] = 0;
        }
        Some(out)
    }
}
