//! GF(2) linear algebra on bit-packed rows, used by the symmetry finder.
//!
//! Elimination uses leftmost-pivot, lowest-row-first deterministic pivoting
//! so that generator sets are reproducible.

/// Matrix over GF(2); row bit i is column i, columns 0..width.
#[derive(Clone, Debug, PartialEq)]
pub struct Gf2Matrix {
    pub width: usize,
    pub rows: Vec<u128>,
}

impl Gf2Matrix {
    pub fn new(width: usize, rows: Vec<u128>) -> Self {
        assert!(width <= 128);
        Gf2Matrix { width, rows }
    }

    /// Reduced row echelon form in place; returns the pivot columns in
    /// ascending order.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.width {
            let bit = 1u128 << col;
            let Some(pivot_row) = (rank..self.rows.len()).find(|&r| self.rows[r] & bit != 0)
            else {
                continue;
            };
            self.rows.swap(rank, pivot_row);
            for r in 0..self.rows.len() {
                if r != rank && self.rows[r] & bit != 0 {
                    self.rows[r] ^= self.rows[rank];
                }
            }
            pivots.push(col);
            rank += 1;
        }
        self.rows.truncate(rank);
        pivots
    }

    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        m.rref();
        m.rows.len()
    }

    /// Basis of the null space { v : M v = 0 }, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<u128> {
        let mut m = self.clone();
        let pivots = m.rref();
        let is_pivot = |c: usize| pivots.binary_search(&c).is_ok();
        let mut basis = Vec::new();
        for free in 0..self.width {
            if is_pivot(free) {
                continue;
            }
            let mut v = 1u128 << free;
            for (row_idx, &p) in pivots.iter().enumerate() {
                if m.rows[row_idx] & (1u128 << free) != 0 {
                    v |= 1u128 << p;
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Row-space equality through canonical RREF.
    pub fn row_space_eq(&self, other: &Gf2Matrix) -> bool {
        if self.width != other.width {
            return false;
        }
        let mut a = self.clone();
        let mut b = other.clone();
        a.rref();
        b.rref();
        a.rows == b.rows
    }

    /// Whether v lies in the row space.
    pub fn contains(&self, v: u128) -> bool {
        let mut m = self.clone();
        m.rref();
        let mut v = v;
        for row in &m.rows {
            let lead = row.trailing_zeros();
            if v & (1u128 << lead) != 0 {
                v ^= row;
            }
        }
        v == 0
    }
}
