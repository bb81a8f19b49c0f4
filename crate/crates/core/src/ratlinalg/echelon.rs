//! Incremental row echelon form over the integers.
//!
//! Rows are kept primitive (content one, positive leading coefficient) and
//! only the leading entry of an incoming row is eliminated, so the stored
//! basis is in echelon form but not reduced. Eliminating `w` against a pivot
//! row `p` with leading coefficients `wc`, `pc` computes
//! `(pc/g)·w − (wc/g)·p` with `g = gcd(wc, pc)`, which is exact and keeps
//! growth modest once content is divided out.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::rational::{common_denominator, Rational};

/// Sparse integer row: strictly increasing column indices, nonzero values.
pub type IntRow = Vec<(usize, BigInt)>;

#[derive(Clone, Debug)]
pub struct EchelonBasis {
    ncols: usize,
    pivots: Vec<Option<IntRow>>,
    rank: usize,
}

impl EchelonBasis {
    pub fn new(ncols: usize) -> Self {
        EchelonBasis {
            ncols,
            pivots: vec![None; ncols],
            rank: 0,
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Insert a row; returns `true` when it was independent of the rows seen so far.
    pub fn insert(&mut self, row: IntRow) -> bool {
        let reduced = self.reduce(row);
        match reduced.first() {
            None => false,
            Some(&(lead, _)) => {
                self.pivots[lead] = Some(reduced);
                self.rank += 1;
                true
            }
        }
    }

    pub fn insert_rational(&mut self, row: &[(usize, Rational)]) -> bool {
        self.insert(integer_row(row))
    }

    /// Row-space membership test; the basis is left untouched.
    pub fn contains(&self, row: IntRow) -> bool {
        self.reduce(row).is_empty()
    }

    pub fn contains_rational(&self, row: &[(usize, Rational)]) -> bool {
        self.contains(integer_row(row))
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        self.pivots
            .iter()
            .enumerate()
            .filter_map(|(c, p)| p.as_ref().map(|_| c))
            .collect()
    }

    /// Stored pivot rows ordered by leading column.
    pub fn rows(&self) -> impl Iterator<Item = &IntRow> {
        self.pivots.iter().filter_map(|p| p.as_ref())
    }

    fn reduce(&self, mut w: IntRow) -> IntRow {
        w.retain(|(_, v)| !v.is_zero());
        debug_assert!(w.windows(2).all(|p| p[0].0 < p[1].0));
        while let Some(&(lead, _)) = w.first() {
            assert!(lead < self.ncols, "column {lead} out of range");
            match &self.pivots[lead] {
                Some(p) => {
                    w = eliminate(&w, p);
                    make_primitive(&mut w);
                }
                None => break,
            }
        }
        make_primitive(&mut w);
        w
    }
}

/// Scale a rational sparse row to a primitive integer row.
pub fn integer_row(row: &[(usize, Rational)]) -> IntRow {
    let den = common_denominator(row.iter().map(|(_, v)| v));
    let mut out: IntRow = row
        .iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(c, v)| (*c, v.numer() * (&den / v.denom())))
        .collect();
    out.sort_by_key(|(c, _)| *c);
    make_primitive(&mut out);
    out
}

fn eliminate(w: &IntRow, p: &IntRow) -> IntRow {
    let wc = &w[0].1;
    let pc = &p[0].1;
    let g = wc.gcd(pc);
    let a = pc / &g;
    let b = wc / &g;
    let a_is_one = a.is_one();
    let mut out = Vec::with_capacity(w.len() + p.len());
    let (mut i, mut j) = (1, 1);
    while i < w.len() || j < p.len() {
        let ci = w.get(i).map(|e| e.0).unwrap_or(usize::MAX);
        let cj = p.get(j).map(|e| e.0).unwrap_or(usize::MAX);
        if ci < cj {
            let v = if a_is_one { w[i].1.clone() } else { &a * &w[i].1 };
            out.push((ci, v));
            i += 1;
        } else if cj < ci {
            out.push((cj, -(&b * &p[j].1)));
            j += 1;
        } else {
            let v = if a_is_one {
                &w[i].1 - &b * &p[j].1
            } else {
                &a * &w[i].1 - &b * &p[j].1
            };
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

fn make_primitive(w: &mut IntRow) {
    if w.is_empty() {
        return;
    }
    let mut g = BigInt::zero();
    for (_, v) in w.iter() {
        g = g.gcd(v);
        if g.is_one() {
            break;
        }
    }
    if w[0].1.is_negative() {
        g = -g;
    }
    if !g.is_one() {
        for (_, v) in w.iter_mut() {
            *v = &*v / &g;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(vals: &[i64]) -> IntRow {
        vals.iter()
            .enumerate()
            .filter(|(_, v)| **v != 0)
            .map(|(c, v)| (c, BigInt::from(*v)))
            .collect()
    }

    #[test]
    fn detects_dependence() {
        let mut e = EchelonBasis::new(3);
        assert!(e.insert(row(&[1, 2, 3])));
        assert!(e.insert(row(&[0, 1, 1])));
        assert!(!e.insert(row(&[2, 5, 7])));
        assert!(e.contains(row(&[3, 7, 10])));
        assert!(!e.contains(row(&[0, 0, 1])));
        assert_eq!(e.rank(), 2);
        assert_eq!(e.pivot_columns(), vec![0, 1]);
    }

    #[test]
    fn rows_are_primitive() {
        let mut e = EchelonBasis::new(2);
        e.insert(row(&[-4, 6]));
        let stored: Vec<_> = e.rows().cloned().collect();
        assert_eq!(stored, vec![row(&[2, -3])]);
    }

    #[test]
    fn rational_rows() {
        let mut e = EchelonBasis::new(2);
        let half = Rational::new(1, 2);
        assert!(e.insert_rational(&[(0, half.clone()), (1, Rational::new(1, 3))]));
        assert!(e.contains_rational(&[(0, Rational::from(3)), (1, Rational::from(2))]));
    }
}
