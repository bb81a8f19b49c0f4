use super::echelon::{integer_row, EchelonBasis};
use super::rational::Rational;

/// Density below which a matrix is stored sparsely.
pub const SPARSE_DENSITY: f64 = 0.25;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Storage {
    Dense(Vec<Vec<Rational>>),
    Sparse(Vec<Vec<(usize, Rational)>>),
}

/// Exact rational matrix. Storage is chosen from the fill ratio at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    rows: usize,
    cols: usize,
    storage: Storage,
}

impl RatMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RatMatrix {
            rows,
            cols,
            storage: Storage::Sparse(vec![Vec::new(); rows]),
        }
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| vec![(i, Rational::one())]).collect();
        Self::from_sparse_rows(n, rows)
    }

    /// Build from dense rows. Panics on ragged input.
    pub fn from_dense(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols), "ragged matrix");
        let sparse: Vec<Vec<(usize, Rational)>> = rows
            .into_iter()
            .map(|r| {
                r.into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect()
            })
            .collect();
        Self::from_sparse_rows(cols, sparse)
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let dense = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from(v)).collect())
            .collect();
        Self::from_dense(cols, dense)
    }

    /// Build from sparse rows `(column, value)`. Zero values are dropped,
    /// entries are sorted, duplicate columns are summed.
    pub fn from_sparse_rows(cols: usize, rows: Vec<Vec<(usize, Rational)>>) -> Self {
        let rows_n = rows.len();
        let mut clean = Vec::with_capacity(rows_n);
        let mut nnz = 0usize;
        for mut r in rows {
            r.sort_by_key(|(c, _)| *c);
            let mut merged: Vec<(usize, Rational)> = Vec::with_capacity(r.len());
            for (c, v) in r {
                assert!(c < cols, "column {c} out of bounds ({cols})");
                match merged.last_mut() {
                    Some((lc, lv)) if *lc == c => *lv += &v,
                    _ => merged.push((c, v)),
                }
            }
            merged.retain(|(_, v)| !v.is_zero());
            nnz += merged.len();
            clean.push(merged);
        }
        let cells = rows_n * cols;
        let dense = cells > 0 && (nnz as f64) >= SPARSE_DENSITY * cells as f64;
        let storage = if dense {
            Storage::Dense(
                clean
                    .into_iter()
                    .map(|r| {
                        let mut d = vec![Rational::zero(); cols];
                        for (c, v) in r {
                            d[c] = v;
                        }
                        d
                    })
                    .collect(),
            )
        } else {
            Storage::Sparse(clean)
        };
        RatMatrix {
            rows: rows_n,
            cols,
            storage,
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_sparse(&self) -> bool {
        matches!(self.storage, Storage::Sparse(_))
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of bounds");
        match &self.storage {
            Storage::Dense(d) => d[i][j].clone(),
            Storage::Sparse(s) => s[i]
                .binary_search_by_key(&j, |(c, _)| *c)
                .map(|k| s[i][k].1.clone())
                .unwrap_or_else(|_| Rational::zero()),
        }
    }

    /// Nonzero entries of row `i` in column order.
    pub fn row_entries(&self, i: usize) -> Vec<(usize, Rational)> {
        match &self.storage {
            Storage::Dense(d) => d[i]
                .iter()
                .enumerate()
                .filter(|(_, v)| !v.is_zero())
                .map(|(c, v)| (c, v.clone()))
                .collect(),
            Storage::Sparse(s) => s[i].clone(),
        }
    }

    pub fn dense_row(&self, i: usize) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.cols];
        for (c, v) in self.row_entries(i) {
            out[c] = v;
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut rows = vec![Vec::new(); self.cols];
        for i in 0..self.rows {
            for (c, v) in self.row_entries(i) {
                rows[c].push((i, v));
            }
        }
        Self::from_sparse_rows(self.rows, rows)
    }

    pub fn scale_row(&self, i: usize, factor: &Rational) -> Self {
        assert!(!factor.is_zero(), "row scaling by zero");
        let rows = (0..self.rows)
            .map(|k| {
                let r = self.row_entries(k);
                if k == i {
                    r.into_iter().map(|(c, v)| (c, &v * factor)).collect()
                } else {
                    r
                }
            })
            .collect();
        Self::from_sparse_rows(self.cols, rows)
    }

    pub fn permute_rows(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.rows);
        let rows = perm.iter().map(|&k| self.row_entries(k)).collect();
        Self::from_sparse_rows(self.cols, rows)
    }

    /// Echelon basis of the row space.
    pub fn row_echelon(&self) -> EchelonBasis {
        let mut e = EchelonBasis::new(self.cols);
        for i in 0..self.rows {
            e.insert(integer_row(&self.row_entries(i)));
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.row_echelon().rank()
    }

    pub fn kernel_dim(&self) -> usize {
        self.cols - self.rank()
    }

    /// Whether `row` lies in the row space.
    pub fn row_space_contains(&self, row: &[(usize, Rational)]) -> bool {
        self.row_echelon().contains_rational(row)
    }

    /// Reduced row echelon form over the rationals together with the pivot columns.
    pub fn rref(&self) -> (Vec<Vec<Rational>>, Vec<usize>) {
        let mut a: Vec<Vec<Rational>> = (0..self.rows).map(|i| self.dense_row(i)).collect();
        let mut pivots = Vec::new();
        let mut pr = 0;
        for col in 0..self.cols {
            if pr == a.len() {
                break;
            }
            let Some(found) = (pr..a.len()).find(|&r| !a[r][col].is_zero()) else {
                continue;
            };
            a.swap(pr, found);
            let inv = a[pr][col].recip();
            for v in a[pr].iter_mut().skip(col) {
                *v *= &inv;
            }
            let pivot_row = a[pr].clone();
            for (r, row) in a.iter_mut().enumerate() {
                if r == pr || row[col].is_zero() {
                    continue;
                }
                let f = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                    if !p.is_zero() {
                        *v -= &(&f * p);
                    }
                }
            }
            pivots.push(col);
            pr += 1;
        }
        a.truncate(pivots.len());
        (a, pivots)
    }

    /// Basis of the right null space `{v : A v = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![Rational::zero(); self.cols];
                v[free] = Rational::one();
                for (k, &p) in pivots.iter().enumerate() {
                    v[p] = -&r[k][free];
                }
                v
            })
            .collect()
    }
}

/// Basis of the intersection of the row spaces of `a` and `b`.
pub fn intersect_row_spaces(a: &RatMatrix, b: &RatMatrix) -> RatMatrix {
    assert_eq!(a.ncols(), b.ncols(), "column counts differ");
    let ncols = a.ncols();
    let (ka, kb) = (a.nrows(), b.nrows());
    // Columns of the stacked system are the rows of a and of b; a kernel
    // vector (alpha, beta) gives alpha·A = -beta·B.
    let mut stacked = vec![Vec::new(); ncols];
    for i in 0..ka {
        for (c, v) in a.row_entries(i) {
            stacked[c].push((i, v));
        }
    }
    for i in 0..kb {
        for (c, v) in b.row_entries(i) {
            stacked[c].push((ka + i, v));
        }
    }
    let system = RatMatrix::from_sparse_rows(ka + kb, stacked);
    let mut basis = EchelonBasis::new(ncols);
    let mut rows = Vec::new();
    for k in system.nullspace() {
        let mut acc = vec![Rational::zero(); ncols];
        for (i, alpha) in k.iter().enumerate().take(ka) {
            if alpha.is_zero() {
                continue;
            }
            for (c, v) in a.row_entries(i) {
                acc[c] += &(alpha * &v);
            }
        }
        let row: Vec<(usize, Rational)> = acc.into_iter().enumerate().filter(|(_, v)| !v.is_zero()).collect();
        if basis.insert_rational(&row) {
            rows.push(row);
        }
    }
    RatMatrix::from_sparse_rows(ncols, rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_examples() {
        assert_eq!(RatMatrix::identity(3).rank(), 3);
        assert_eq!(RatMatrix::zeros(4, 7).rank(), 0);
        assert_eq!(RatMatrix::from_i64(&[vec![1, 2], vec![2, 4], vec![3, 6]]).rank(), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(RatMatrix::identity(3).kernel_dim(), 0);
        assert_eq!(RatMatrix::zeros(2, 5).kernel_dim(), 5);
        assert_eq!(RatMatrix::from_i64(&[vec![1, 1, 0], vec![0, 1, 1]]).kernel_dim(), 1);
    }

    #[test]
    fn storage_selection() {
        assert!(RatMatrix::zeros(3, 3).is_sparse());
        assert!(!RatMatrix::from_i64(&[vec![1, 2], vec![3, 4]]).is_sparse());
        let mut rows = vec![vec![0i64; 10]; 10];
        rows[0][0] = 1;
        assert!(RatMatrix::from_i64(&rows).is_sparse());
    }

    #[test]
    fn nullspace_annihilates() {
        let m = RatMatrix::from_i64(&[vec![1, 2, 3, 4], vec![2, 4, 7, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for i in 0..m.nrows() {
                let dot = m
                    .row_entries(i)
                    .iter()
                    .fold(Rational::zero(), |acc, (c, x)| acc + x * &v[*c]);
                assert!(dot.is_zero());
            }
        }
    }

    #[test]
    fn membership() {
        let m = RatMatrix::from_i64(&[vec![1, 0, 1], vec![0, 1, 1]]);
        assert!(m.row_space_contains(&[(0, Rational::from(2)), (1, Rational::from(3)), (2, Rational::from(5))]));
        assert!(!m.row_space_contains(&[(2, Rational::from(1))]));
    }

    #[test]
    fn intersection_of_planes() {
        let a = RatMatrix::from_i64(&[vec![1, 0, 0], vec![0, 1, 0]]);
        let b = RatMatrix::from_i64(&[vec![0, 1, 0], vec![0, 0, 1]]);
        let i = intersect_row_spaces(&a, &b);
        assert_eq!(i.rank(), 1);
        assert!(i.row_space_contains(&[(1, Rational::one())]));
        let c = RatMatrix::from_i64(&[vec![1, 1, 1]]);
        assert_eq!(intersect_row_spaces(&a, &c).nrows(), 0);
    }

    #[test]
    fn get_and_transpose() {
        let m = RatMatrix::from_i64(&[vec![1, 0, 5], vec![0, 0, 0]]);
        let t = m.transpose();
        assert_eq!(t.nrows(), 3);
        assert_eq!(t.get(2, 0), Rational::from(5));
        assert_eq!(t.get(1, 1), Rational::zero());
    }
}
