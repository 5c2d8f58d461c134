//! Exact linear algebra over the field with three elements.
//!
//! Scalars are stored as integers 0/1/2 and all arithmetic is modulo 3
//! (so −1 ≡ 2). Matrices are row-major and immutable in spirit: every
//! operation returns a fresh value and never mutates its input.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A scalar in GF(3), always one of 0, 1, 2.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
#[repr(transparent)]
pub struct Gf3(u8);

impl Gf3 {
    pub const ZERO: Gf3 = Gf3(0);
    pub const ONE: Gf3 = Gf3(1);
    pub const TWO: Gf3 = Gf3(2);

    /// Reduces an arbitrary unsigned value modulo 3.
    pub fn new(value: u8) -> Gf3 {
        Gf3(value % 3)
    }

    /// Reduces an arbitrary signed value modulo 3 (so −1 becomes 2).
    pub fn from_signed(value: i64) -> Gf3 {
        Gf3(value.rem_euclid(3) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inverse(self) -> Option<Gf3> {
        match self.0 {
            0 => None,
            // 1·1 = 1 and 2·2 = 4 ≡ 1, so every nonzero scalar is its own
            // inverse.
            v => Some(Gf3(v)),
        }
    }
}

impl std::ops::Add for Gf3 {
    type Output = Gf3;
    fn add(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 + rhs.0) % 3)
    }
}

impl std::ops::Sub for Gf3 {
    type Output = Gf3;
    fn sub(self, rhs: Gf3) -> Gf3 {
        Gf3((3 + self.0 - rhs.0) % 3)
    }
}

impl std::ops::Mul for Gf3 {
    type Output = Gf3;
    fn mul(self, rhs: Gf3) -> Gf3 {
        Gf3((self.0 * rhs.0) % 3)
    }
}

impl std::ops::Neg for Gf3 {
    type Output = Gf3;
    fn neg(self) -> Gf3 {
        Gf3((3 - self.0) % 3)
    }
}

impl std::ops::AddAssign for Gf3 {
    fn add_assign(&mut self, rhs: Gf3) {
        *self = *self + rhs;
    }
}

impl fmt::Display for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Gf3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A vector over GF(3).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf3Vector(Vec<Gf3>);

impl Gf3Vector {
    pub fn zeros(len: usize) -> Gf3Vector {
        Gf3Vector(vec![Gf3::ZERO; len])
    }

    pub fn from_entries<I: IntoIterator<Item = Gf3>>(entries: I) -> Gf3Vector {
        Gf3Vector(entries.into_iter().collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[Gf3] {
        &self.0
    }

    pub fn get(&self, i: usize) -> Gf3 {
        self.0[i]
    }

    pub fn set(&mut self, i: usize, v: Gf3) {
        self.0[i] = v;
    }

    /// Number of nonzero entries.
    pub fn weight(&self) -> usize {
        self.0.iter().filter(|e| !e.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|e| e.is_zero())
    }

    /// Adds `scalar · other` into `self`.
    pub fn add_scaled_assign(&mut self, other: &Gf3Vector, scalar: Gf3) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        for (a, &b) in self.0.iter_mut().zip(&other.0) {
            *a += scalar * b;
        }
        Ok(())
    }

    pub fn negated(&self) -> Gf3Vector {
        Gf3Vector(self.0.iter().map(|&e| -e).collect())
    }
}

/// Dot product Σ uᵢvᵢ in GF(3). Fails on a length mismatch.
pub fn inner_product(u: &Gf3Vector, v: &Gf3Vector) -> Result<Gf3> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let mut acc = Gf3::ZERO;
    for (&a, &b) in u.entries().iter().zip(v.entries()) {
        acc += a * b;
    }
    Ok(acc)
}

/// A dense row-major matrix over GF(3).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Gf3Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<Gf3>,
}

impl Gf3Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Gf3Matrix {
        Gf3Matrix {
            rows,
            cols,
            entries: vec![Gf3::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Gf3::ONE);
        }
        m
    }

    /// Builds a matrix from integer rows; entries are reduced modulo 3.
    /// All rows must have the same length.
    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Gf3Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::LengthMismatch {
                    left: cols,
                    right: row.len(),
                });
            }
            entries.extend(row.iter().map(|&v| Gf3::from_signed(v)));
        }
        Ok(Gf3Matrix {
            rows: rows.len(),
            cols,
            entries,
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Gf3) -> Gf3Matrix {
        let mut m = Gf3Matrix::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Gf3 {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Gf3) {
        debug_assert!(r < self.rows && c < self.cols);
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Gf3] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vector(&self, r: usize) -> Gf3Vector {
        Gf3Vector::from_entries(self.row(r).iter().copied())
    }

    pub fn column_vector(&self, c: usize) -> Gf3Vector {
        Gf3Vector::from_entries((0..self.rows).map(|r| self.get(r, c)))
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[Gf3]> {
        self.entries.chunks_exact(self.cols.max(1)).take(self.rows)
    }

    pub fn transpose(&self) -> Gf3Matrix {
        Gf3Matrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r))
    }

    pub fn negated(&self) -> Gf3Matrix {
        Gf3Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|&e| -e).collect(),
        }
    }

    /// Matrix product; fails unless `self.cols == other.rows`.
    pub fn multiply(&self, other: &Gf3Matrix) -> Result<Gf3Matrix> {
        if self.cols != other.rows {
            return Err(Error::ColumnMismatch {
                left: self.cols,
                right: other.rows,
            });
        }
        let mut out = Gf3Matrix::zeros(self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    let cur = out.get(r, c);
                    out.set(r, c, cur + a * other.get(k, c));
                }
            }
        }
        Ok(out)
    }

    /// Applies the matrix to a column vector; fails unless lengths agree.
    pub fn apply(&self, v: &Gf3Vector) -> Result<Gf3Vector> {
        if self.cols != v.len() {
            return Err(Error::LengthMismatch {
                left: self.cols,
                right: v.len(),
            });
        }
        let mut out = Gf3Vector::zeros(self.rows);
        for r in 0..self.rows {
            let mut acc = Gf3::ZERO;
            for (c, &e) in self.row(r).iter().enumerate() {
                acc += e * v.get(c);
            }
            out.set(r, acc);
        }
        Ok(out)
    }

    /// The submatrix keeping only the given columns, in the given order.
    pub fn column_submatrix(&self, cols: &[usize]) -> Gf3Matrix {
        Gf3Matrix::from_fn(self.rows, cols.len(), |r, c| self.get(r, cols[c]))
    }

    /// Rank by exact Gaussian elimination; the input is not modified.
    pub fn rank(&self) -> usize {
        self.rref().0
    }

    /// Canonical reduced row-echelon form.
    ///
    /// Pivot selection is leftmost column first, topmost available row,
    /// with elimination above and below each pivot, so two matrices have
    /// the same row space exactly when their forms coincide (after
    /// discarding zero rows). Returns `(rank, rref)`.
    pub fn rref(&self) -> (usize, Gf3Matrix) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for col in 0..m.cols {
            // Find the topmost row at or below pivot_row with a nonzero
            // entry in this column.
            let Some(src) = (pivot_row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(pivot_row, src);
            // Scale the pivot row so the pivot is 1.
            let inv = m.get(pivot_row, col).inverse().expect("pivot is nonzero");
            if inv != Gf3::ONE {
                for c in 0..m.cols {
                    let v = m.get(pivot_row, c);
                    m.set(pivot_row, c, v * inv);
                }
            }
            // Eliminate the column everywhere else.
            for r in 0..m.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = m.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in 0..m.cols {
                    let v = m.get(r, c) - factor * m.get(pivot_row, c);
                    m.set(r, c, v);
                }
            }
            pivot_row += 1;
            if pivot_row == m.rows {
                break;
            }
        }
        (pivot_row, m)
    }

    /// The nonzero rows of the reduced row-echelon form: a canonical basis
    /// of the row space.
    pub fn row_space_basis(&self) -> Gf3Matrix {
        let (rank, rref) = self.rref();
        let mut basis = Gf3Matrix::zeros(rank, self.cols);
        for r in 0..rank {
            for c in 0..self.cols {
                basis.set(r, c, rref.get(r, c));
            }
        }
        basis
    }

    /// True iff both matrices span the same row space. Fails unless the
    /// column counts agree.
    pub fn row_space_equal(&self, other: &Gf3Matrix) -> Result<bool> {
        if self.cols != other.cols {
            return Err(Error::ColumnMismatch {
                left: self.cols,
                right: other.cols,
            });
        }
        Ok(self.row_space_basis() == other.row_space_basis())
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let (va, vb) = (self.get(a, c), self.get(b, c));
            self.set(a, c, vb);
            self.set(b, c, va);
        }
    }

    /// Stable text form: a `"rows cols"` header line, then one line per
    /// row with entries separated by single spaces. Every line is
    /// newline-terminated.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let line: Vec<String> = self.row(r).iter().map(|e| e.to_string()).collect();
            out.push_str(&line.join(" "));
            out.push('\n');
        }
        out
    }

    /// Parses the `to_text` format.
    pub fn parse_text(s: &str) -> Result<Gf3Matrix> {
        let mut lines = s.lines();
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        if dims.len() != 2 {
            return Err(Error::Parse(format!(
                "expected \"rows cols\" header, got {header:?}"
            )));
        }
        let rows: usize = dims[0]
            .parse()
            .map_err(|_| Error::Parse(format!("bad row count {:?}", dims[0])))?;
        let cols: usize = dims[1]
            .parse()
            .map_err(|_| Error::Parse(format!("bad column count {:?}", dims[1])))?;
        let mut m = Gf3Matrix::zeros(rows, cols);
        for r in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {} of {rows}", r + 1)))?;
            let mut count = 0;
            for (c, tok) in line.split_whitespace().enumerate() {
                let v: u8 = tok
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad entry {tok:?} in row {}", r + 1)))?;
                if v > 2 {
                    return Err(Error::Parse(format!(
                        "entry {v} out of range in row {}",
                        r + 1
                    )));
                }
                if c >= cols {
                    return Err(Error::Parse(format!("row {} has too many entries", r + 1)));
                }
                m.set(r, c, Gf3(v));
                count += 1;
            }
            if count != cols {
                return Err(Error::Parse(format!(
                    "row {} has {count} entries, expected {cols}",
                    r + 1
                )));
            }
        }
        if lines.any(|l| !l.trim().is_empty()) {
            return Err(Error::Parse("trailing content after matrix rows".into()));
        }
        Ok(m)
    }
}

/// Serialized shape shared by the JSON import/export:
/// `{"rows": R, "cols": C, "entries": [[...], ...]}`.
#[derive(Serialize, Deserialize)]
struct MatrixRepr {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u8>>,
}

impl Serialize for Gf3Matrix {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        let repr = MatrixRepr {
            rows: self.rows,
            cols: self.cols,
            entries: self
                .iter_rows()
                .map(|row| row.iter().map(|e| e.value()).collect())
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Gf3Matrix {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Gf3Matrix, D::Error> {
        use serde::de::Error as _;
        let repr = MatrixRepr::deserialize(deserializer)?;
        if repr.entries.len() != repr.rows {
            return Err(D::Error::custom(format!(
                "matrix declares {} rows but has {}",
                repr.rows,
                repr.entries.len()
            )));
        }
        let rows: Vec<Vec<i64>> = repr
            .entries
            .iter()
            .map(|row| row.iter().map(|&v| i64::from(v)).collect())
            .collect();
        for row in &repr.entries {
            if row.len() != repr.cols {
                return Err(D::Error::custom(format!(
                    "matrix declares {} cols but a row has {}",
                    repr.cols,
                    row.len()
                )));
            }
            if row.iter().any(|&v| v > 2) {
                return Err(D::Error::custom("matrix entry out of range"));
            }
        }
        Gf3Matrix::from_rows(&rows).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_arithmetic() {
        assert_eq!(Gf3::ONE + Gf3::TWO, Gf3::ZERO);
        assert_eq!(Gf3::TWO * Gf3::TWO, Gf3::ONE);
        assert_eq!(-Gf3::ONE, Gf3::TWO);
        assert_eq!(Gf3::ZERO - Gf3::ONE, Gf3::TWO);
        assert_eq!(Gf3::from_signed(-1), Gf3::TWO);
        assert_eq!(Gf3::from_signed(5), Gf3::TWO);
        assert_eq!(Gf3::ZERO.inverse(), None);
        assert_eq!(Gf3::TWO.inverse(), Some(Gf3::TWO));
    }

    #[test]
    fn inner_product_basics() {
        let u = Gf3Vector::from_entries([Gf3::ONE, Gf3::TWO, Gf3::ZERO]);
        let v = Gf3Vector::from_entries([Gf3::TWO, Gf3::TWO, Gf3::ONE]);
        // 1·2 + 2·2 + 0·1 = 2 + 4 = 6 ≡ 0.
        assert_eq!(inner_product(&u, &v).unwrap(), Gf3::ZERO);
        let w = Gf3Vector::zeros(2);
        assert!(matches!(
            inner_product(&u, &w),
            Err(Error::LengthMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn identity_rank() {
        assert_eq!(Gf3Matrix::identity(6).rank(), 6);
        assert_eq!(Gf3Matrix::zeros(0, 5).rank(), 0);
        assert_eq!(Gf3Matrix::zeros(4, 4).rank(), 0);
    }

    #[test]
    fn rank_matches_transpose_rank() {
        let m =
            Gf3Matrix::from_rows(&[vec![1, 2, 0, 1], vec![2, 1, 0, 2], vec![0, 0, 1, 1]]).unwrap();
        assert_eq!(m.rank(), m.transpose().rank());
        assert_eq!(m.rank(), 2 + 1 - 1); // rows 1,2 dependent (r2 = 2·r1)
    }

    #[test]
    fn rref_is_canonical_under_row_permutation_and_scaling() {
        let a = Gf3Matrix::from_rows(&[vec![1, 2, 0], vec![0, 1, 1]]).unwrap();
        let b = Gf3Matrix::from_rows(&[vec![0, 2, 2], vec![2, 1, 0]]).unwrap();
        assert!(a.row_space_equal(&b).unwrap());
        assert!(a.row_space_equal(&a.negated()).unwrap());
        let c = Gf3Matrix::from_rows(&[vec![1, 0, 0], vec![0, 1, 0]]).unwrap();
        assert!(!a.row_space_equal(&c).unwrap());
        let short = Gf3Matrix::zeros(1, 2);
        assert!(matches!(
            a.row_space_equal(&short),
            Err(Error::ColumnMismatch { left: 3, right: 2 })
        ));
    }

    #[test]
    fn multiply_and_apply() {
        let a = Gf3Matrix::from_rows(&[vec![1, 2], vec![0, 1]]).unwrap();
        let b = Gf3Matrix::from_rows(&[vec![1, 0], vec![1, 1]]).unwrap();
        let ab = a.multiply(&b).unwrap();
        assert_eq!(ab, Gf3Matrix::from_rows(&[vec![0, 2], vec![1, 1]]).unwrap());
        let v = Gf3Vector::from_entries([Gf3::ONE, Gf3::ONE]);
        assert_eq!(
            a.apply(&v).unwrap(),
            Gf3Vector::from_entries([Gf3::ZERO, Gf3::ONE])
        );
        assert!(a.multiply(&Gf3Matrix::zeros(3, 3)).is_err());
    }

    #[test]
    fn column_submatrix_selects_in_order() {
        let m = Gf3Matrix::from_rows(&[vec![0, 1, 2], vec![2, 1, 0]]).unwrap();
        let s = m.column_submatrix(&[2, 0]);
        assert_eq!(s, Gf3Matrix::from_rows(&[vec![2, 0], vec![0, 2]]).unwrap());
    }

    #[test]
    fn text_round_trip() {
        let m = Gf3Matrix::from_rows(&[vec![0, 1, 2], vec![2, 2, 2]]).unwrap();
        let text = m.to_text();
        assert_eq!(text, "2 3\n0 1 2\n2 2 2\n");
        assert_eq!(Gf3Matrix::parse_text(&text).unwrap(), m);
        assert!(Gf3Matrix::parse_text("2 3\n0 1\n2 2 2\n").is_err());
        assert!(Gf3Matrix::parse_text("2 3\n0 1 3\n2 2 2\n").is_err());
        assert!(Gf3Matrix::parse_text("").is_err());
    }

    #[test]
    fn json_round_trip() {
        let m = Gf3Matrix::from_rows(&[vec![0, 1], vec![2, 0]]).unwrap();
        let json = serde_json::to_string(&m).unwrap();
        assert_eq!(json, r#"{"rows":2,"cols":2,"entries":[[0,1],[2,0]]}"#);
        let back: Gf3Matrix = serde_json::from_str(&json).unwrap();
        assert_eq!(back, m);
        let bad: std::result::Result<Gf3Matrix, _> =
            serde_json::from_str(r#"{"rows":2,"cols":2,"entries":[[0,1]]}"#);
        assert!(bad.is_err());
    }
}
