//! Exact Gauss-Jordan elimination over GF(p).

use crate::exactalg::PrimeModulus;

/// Rows inserted one at a time and kept in echelon form: every stored row
/// has a leading 1 at its pivot column and zeros at the pivot columns of all
/// rows stored before it.
#[derive(Clone, Debug)]
pub struct Echelon {
    p: PrimeModulus,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(p: PrimeModulus, cols: usize) -> Self {
        Self { p, cols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full_rank(&self) -> bool {
        self.rank() == self.cols
    }

    /// Reduces `row` against the stored rows in place.
    pub fn reduce(&self, row: &mut [u64]) {
        let p = self.p;
        for (stored, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            for (x, &s) in row.iter_mut().zip(stored).skip(pc) {
                if s != 0 {
                    *x = p.sub(*x, p.mul(c, s));
                }
            }
        }
    }

    /// Adds `row` to the span; returns whether the rank grew.
    pub fn insert(&mut self, mut row: Vec<u64>) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        self.reduce(&mut row);
        let Some(pc) = row.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = self.p.inv(row[pc]).expect("nonzero");
        for x in row.iter_mut().skip(pc) {
            *x = self.p.mul(*x, inv);
        }
        self.rows.push(row);
        self.pivots.push(pc);
        true
    }

    pub fn contains(&self, row: &[u64]) -> bool {
        let mut r = row.to_vec();
        self.reduce(&mut r);
        r.iter().all(|&x| x == 0)
    }

    /// Reduced row-echelon form: rows sorted by pivot, each pivot column
    /// zero outside its own row.
    pub fn into_rref(mut self) -> Rref {
        let p = self.p;
        for i in (0..self.rows.len()).rev() {
            let pc = self.pivots[i];
            let (before, rest) = self.rows.split_at_mut(i);
            let pivot_row = &rest[0];
            for row in before.iter_mut() {
                let c = row[pc];
                if c == 0 {
                    continue;
                }
                for (x, &s) in row.iter_mut().zip(pivot_row.iter()).skip(pc) {
                    if s != 0 {
                        *x = p.sub(*x, p.mul(c, s));
                    }
                }
            }
        }
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| self.pivots[i]);
        let pivots = order.iter().map(|&i| self.pivots[i]).collect();
        let mut rows: Vec<Option<Vec<u64>>> = self.rows.into_iter().map(Some).collect();
        let rows = order.iter().map(|&i| rows[i].take().expect("each row once")).collect();
        Rref { p, cols: self.cols, rows, pivots }
    }
}

#[derive(Clone, Debug)]
pub struct Rref {
    p: PrimeModulus,
    cols: usize,
    rows: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Rref {
    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.cols];
        for &pc in &self.pivots {
            is_pivot[pc] = true;
        }
        (0..self.cols).filter(|&c| !is_pivot[c]).collect()
    }

    /// One basis vector per free column, in free-column order: 1 at the free
    /// column, `-rref[r][free]` at each pivot column.
    pub fn nullspace_basis(&self) -> Vec<Vec<u64>> {
        self.free_columns()
            .into_iter()
            .map(|fc| {
                let mut v = vec![0; self.cols];
                v[fc] = 1;
                for (row, &pc) in self.rows.iter().zip(&self.pivots) {
                    v[pc] = self.p.neg(row[fc]);
                }
                v
            })
            .collect()
    }
}
