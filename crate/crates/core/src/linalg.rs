//! Dense Gaussian elimination over GF(p).

use crate::arith::Prime;

/// A dense matrix over GF(p) with a fixed column count.
#[derive(Debug, Clone)]
pub struct ModMatrix {
    p: Prime,
    ncols: usize,
    rows: Vec<Vec<u64>>,
}

impl ModMatrix {
    pub fn new(p: Prime, ncols: usize) -> Self {
        ModMatrix { p, ncols, rows: Vec::new() }
    }

    pub fn from_rows(p: Prime, ncols: usize, rows: impl IntoIterator<Item = Vec<u64>>) -> Self {
        let mut m = ModMatrix::new(p, ncols);
        for r in rows {
            m.push_row(r);
        }
        m
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u64>] {
        &self.rows
    }

    /// Appends a row, reducing entries mod p. All-zero rows are kept so row
    /// indices stay aligned with their labels.
    pub fn push_row(&mut self, mut row: Vec<u64>) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        let q = self.p.get();
        for x in &mut row {
            *x %= q;
        }
        self.rows.push(row);
    }

    /// Reduced row echelon form; returns the nonzero rows and their pivot columns.
    pub fn rref(&self) -> (Vec<Vec<u64>>, Vec<usize>) {
        let p = self.p;
        let mut a: Vec<Vec<u64>> = self.rows.iter().filter(|r| r.iter().any(|&x| x != 0)).cloned().collect();
        let mut pivots = Vec::new();
        let mut prow = 0;
        for col in 0..self.ncols {
            if prow >= a.len() {
                break;
            }
            let Some(found) = (prow..a.len()).find(|&r| a[r][col] != 0) else {
                continue;
            };
            a.swap(prow, found);
            let inv = p.inv(a[prow][col]);
            for x in &mut a[prow] {
                *x = p.mul(*x, inv);
            }
            for r in 0..a.len() {
                if r == prow || a[r][col] == 0 {
                    continue;
                }
                let f = a[r][col];
                for c in 0..self.ncols {
                    let sub = p.mul(f, a[prow][c]);
                    a[r][c] = p.sub(a[r][c], sub);
                }
            }
            pivots.push(col);
            prow += 1;
        }
        a.truncate(prow);
        (a, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the right kernel `{v : A v = 0}`, one vector per free column
    /// with a 1 in that column, in increasing free-column order.
    pub fn nullspace(&self) -> Vec<Vec<u64>> {
        let (a, pivots) = self.rref();
        let p = self.p;
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![0u64; self.ncols];
                v[fc] = 1;
                for (row, &pc) in a.iter().zip(&pivots) {
                    v[pc] = p.neg(row[fc]);
                }
                v
            })
            .collect()
    }

    pub fn mul_vec(&self, v: &[u64]) -> Vec<u64> {
        self.rows
            .iter()
            .map(|row| row.iter().zip(v).fold(0, |acc, (&x, &y)| self.p.add(acc, self.p.mul(x, y))))
            .collect()
    }
}

/// Whether two families of vectors span the same subspace of GF(p)^n.
pub fn same_span(a: &[Vec<u64>], b: &[Vec<u64>], ncols: usize, p: Prime) -> bool {
    let ra = ModMatrix::from_rows(p, ncols, a.iter().cloned()).rank();
    let rb = ModMatrix::from_rows(p, ncols, b.iter().cloned()).rank();
    let rab = ModMatrix::from_rows(p, ncols, a.iter().chain(b).cloned()).rank();
    ra == rb && rb == rab
}

/// Whether `u` is a nonzero scalar multiple of `v` over GF(p).
pub fn proportional(u: &[u64], v: &[u64], p: Prime) -> bool {
    if u.len() != v.len() || u.iter().all(|&x| x % p.get() == 0) || v.iter().all(|&x| x % p.get() == 0) {
        return false;
    }
    ModMatrix::from_rows(p, u.len(), [u.to_vec(), v.to_vec()]).rank() == 1
}
