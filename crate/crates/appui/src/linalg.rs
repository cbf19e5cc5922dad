//! Exact rational row spaces in canonical reduced row-echelon form.
//!
//! A [`RatMatrix`] stores the row space of a set of vectors, canonicalized by
//! Gauss–Jordan elimination.  Because the representation is canonical,
//! structural equality coincides with equality of spans, which lets
//! higher-level subspace types derive `PartialEq`/`Eq`.

use num_traits::Zero;

use crate::Rat;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatMatrix {
    cols: usize,
    /// Rows in reduced row-echelon form: each leading entry is 1, is the only
    /// nonzero entry in its column, and pivot columns strictly increase.
    rows: Vec<Vec<Rat>>,
}

impl RatMatrix {
    /// The zero subspace of `ℚ^cols`.
    pub fn zero(cols: usize) -> Self {
        RatMatrix { cols, rows: Vec::new() }
    }

    /// The full space `ℚ^cols`.
    pub fn identity(cols: usize) -> Self {
        let rows = (0..cols)
            .map(|i| {
                let mut r = vec![Rat::zero(); cols];
                r[i] = Rat::from_integer(1);
                r
            })
            .collect();
        RatMatrix { cols, rows }
    }

    /// Span of the given rows.
    pub fn from_rows(cols: usize, rows: impl IntoIterator<Item = Vec<Rat>>) -> Self {
        let mut m = RatMatrix::zero(cols);
        for r in rows {
            m.insert_row(r);
        }
        m
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.cols
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    /// Reduces `row` against the basis; if a nonzero remainder survives it is
    /// inserted and the form is re-canonicalized.  Returns whether the rank
    /// grew.
    pub fn insert_row(&mut self, mut row: Vec<Rat>) -> bool {
        assert_eq!(row.len(), self.cols);
        for basis in &self.rows {
            let p = pivot(basis).expect("stored rows are nonzero");
            if !row[p].is_zero() {
                let f = row[p];
                for (x, b) in row.iter_mut().zip(basis) {
                    *x -= f * *b;
                }
            }
        }
        let p = match pivot(&row) {
            Some(p) => p,
            None => return false,
        };
        let lead = row[p];
        for x in row.iter_mut() {
            *x /= lead;
        }
        // Eliminate the new pivot column from existing rows, then keep rows
        // ordered by pivot.
        for basis in &mut self.rows {
            if !basis[p].is_zero() {
                let f = basis[p];
                for (b, x) in basis.iter_mut().zip(&row) {
                    *b -= f * *x;
                }
            }
        }
        let at = self
            .rows
            .partition_point(|r| pivot(r).unwrap() < p);
        self.rows.insert(at, row);
        true
    }

    /// Whether `row` lies in the span.
    pub fn contains_row(&self, row: &[Rat]) -> bool {
        assert_eq!(row.len(), self.cols);
        let mut row = row.to_vec();
        for basis in &self.rows {
            let p = pivot(basis).unwrap();
            if !row[p].is_zero() {
                let f = row[p];
                for (x, b) in row.iter_mut().zip(basis) {
                    *x -= f * *b;
                }
            }
        }
        row.iter().all(Zero::is_zero)
    }

    /// Whether `other`'s span is contained in this span.
    pub fn contains(&self, other: &RatMatrix) -> bool {
        other.rows.iter().all(|r| self.contains_row(r))
    }

    /// Sum of the two row spaces.
    pub fn sum(&self, other: &RatMatrix) -> RatMatrix {
        assert_eq!(self.cols, other.cols);
        let mut m = self.clone();
        for r in &other.rows {
            m.insert_row(r.clone());
        }
        m
    }
}

fn pivot(row: &[Rat]) -> Option<usize> {
    row.iter().position(|x| !x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| Rat::from_integer(x)).collect()
    }

    #[test]
    fn canonical_form_is_order_independent() {
        let a = RatMatrix::from_rows(3, [r(&[1, 2, 3]), r(&[0, 1, 1])]);
        let b = RatMatrix::from_rows(3, [r(&[0, 2, 2]), r(&[2, 4, 6]), r(&[1, 3, 4])]);
        assert_eq!(a, b);
        assert_eq!(a.rank(), 2);
    }

    #[test]
    fn membership_and_containment() {
        let m = RatMatrix::from_rows(3, [r(&[1, 0, 1]), r(&[0, 1, -1])]);
        assert!(m.contains_row(&r(&[2, 3, -1])));
        assert!(!m.contains_row(&r(&[0, 0, 1])));
        let sub = RatMatrix::from_rows(3, [r(&[1, 1, 0])]);
        assert!(m.contains(&sub));
        assert!(!sub.contains(&m));
        assert!(m.contains(&RatMatrix::zero(3)));
    }

    #[test]
    fn sum_and_full() {
        let a = RatMatrix::from_rows(2, [r(&[1, 1])]);
        let b = RatMatrix::from_rows(2, [r(&[1, -1])]);
        let s = a.sum(&b);
        assert!(s.is_full());
        assert_eq!(s, RatMatrix::identity(2));
    }

    #[test]
    fn rational_pivots() {
        let m = RatMatrix::from_rows(
            2,
            [vec![Rat::new(1, 2), Rat::new(1, 3)]],
        );
        assert_eq!(m.rows()[0], vec![Rat::from_integer(1), Rat::new(2, 3)]);
        assert!(m.contains_row(&[Rat::new(3, 2), Rat::from_integer(1)]));
    }
}
