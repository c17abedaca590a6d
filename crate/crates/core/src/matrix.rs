//! Dense quaternion matrices: product, power, conjugate transpose, rank over
//! the division ring, matrix index, and row/column space membership tests.

use std::fmt;

use crate::error::{Error, Result};
use crate::quaternion::{Quaternion, Rational};

/// Dense row-major matrix of exact quaternions. Value type: every operation
/// returns a fresh matrix and leaves its inputs untouched.
#[derive(Clone, PartialEq, Eq)]
pub struct QMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Quaternion>,
}

impl QMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        QMatrix {
            rows,
            cols,
            data: vec![Quaternion::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = QMatrix::zeros(n, n);
        for d in 0..n {
            m.set(d, d, Quaternion::one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Quaternion>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Internal("ragged row list".into()));
        }
        Ok(QMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Quaternion) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in 0..cols {
                data.push(f(r, c));
            }
        }
        QMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Quaternion {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Quaternion) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> Vec<Quaternion> {
        (0..self.cols).map(|c| self.get(r, c).clone()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Quaternion> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Quaternion::is_zero)
    }

    pub fn conj_transpose(&self) -> QMatrix {
        QMatrix::from_fn(self.cols, self.rows, |r, c| self.get(c, r).conj())
    }

    pub fn is_hermitian(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        (0..self.rows).all(|r| (r..self.cols).all(|c| *self.get(r, c) == self.get(c, r).conj()))
    }

    pub fn add(&self, rhs: &QMatrix) -> Result<QMatrix> {
        self.check_same_shape("add", rhs)?;
        Ok(QMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) + rhs.get(r, c)
        }))
    }

    pub fn sub(&self, rhs: &QMatrix) -> Result<QMatrix> {
        self.check_same_shape("sub", rhs)?;
        Ok(QMatrix::from_fn(self.rows, self.cols, |r, c| {
            self.get(r, c) - rhs.get(r, c)
        }))
    }

    pub fn neg(&self) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |r, c| -self.get(r, c))
    }

    /// Right scalar multiple M·q (entries multiplied by q on the right).
    pub fn scale_right(&self, q: &Quaternion) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |r, c| self.get(r, c) * q)
    }

    pub fn scale_rational(&self, r: &Rational) -> QMatrix {
        QMatrix::from_fn(self.rows, self.cols, |rr, cc| self.get(rr, cc).scale(r))
    }

    /// Matrix product with the left factor's entries on the left of every
    /// scalar product (order matters over a noncommutative ring).
    pub fn mul(&self, rhs: &QMatrix) -> Result<QMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(QMatrix::from_fn(self.rows, rhs.cols, |r, c| {
            let mut acc = Quaternion::zero();
            for t in 0..self.cols {
                acc += &(self.get(r, t) * rhs.get(t, c));
            }
            acc
        }))
    }

    pub fn pow(&self, p: usize) -> Result<QMatrix> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                op: "pow",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = QMatrix::identity(self.rows);
        for _ in 0..p {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Rank over the division ring: Gaussian elimination using only left row
    /// operations (left division by the pivot), counting pivot rows.
    pub fn rank(&self) -> usize {
        self.row_echelon().1
    }

    /// Returns (echelon form, rank). Pivot is the first nonzero entry in
    /// column order; rows are rescaled by the pivot's left inverse.
    fn row_echelon(&self) -> (QMatrix, usize) {
        let mut m = self.clone();
        let mut pivot_row = 0;
        for c in 0..m.cols {
            if pivot_row == m.rows {
                break;
            }
            let Some(p) = (pivot_row..m.rows).find(|&r| !m.get(r, c).is_zero()) else {
                continue;
            };
            m.swap_rows(p, pivot_row);
            let inv = m.get(pivot_row, c).inv().expect("pivot is nonzero");
            for cc in c..m.cols {
                let v = &inv * m.get(pivot_row, cc);
                m.set(pivot_row, cc, v);
            }
            for r in pivot_row + 1..m.rows {
                if m.get(r, c).is_zero() {
                    continue;
                }
                let factor = m.get(r, c).clone();
                for cc in c..m.cols {
                    let v = m.get(r, cc) - &(&factor * m.get(pivot_row, cc));
                    m.set(r, cc, v);
                }
            }
            pivot_row += 1;
        }
        (m, pivot_row)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            let tmp = self.get(a, c).clone();
            let v = self.get(b, c).clone();
            self.set(a, c, v);
            self.set(b, c, tmp);
        }
    }

    /// A vector x with Mx = 0 and x ≠ 0, if the right null space is nontrivial.
    /// Found by back-substitution from the echelon form.
    pub fn right_null_vector(&self) -> Option<Vec<Quaternion>> {
        let (ech, rank) = self.row_echelon();
        if rank == self.cols {
            return None;
        }
        // Locate pivot columns, pick the first free column, solve upwards.
        let mut pivot_cols = Vec::new();
        let mut col = 0;
        for r in 0..rank {
            while col < self.cols && ech.get(r, col).is_zero() {
                col += 1;
            }
            pivot_cols.push(col);
        }
        let free = (0..self.cols).find(|c| !pivot_cols.contains(c))?;
        let mut x = vec![Quaternion::zero(); self.cols];
        x[free] = Quaternion::one();
        for (r, &pc) in pivot_cols.iter().enumerate().rev() {
            // pivot entry is 1 after rescaling
            let mut acc = Quaternion::zero();
            for (c, xc) in x.iter().enumerate().skip(pc + 1) {
                acc += &(ech.get(r, c) * xc);
            }
            x[pc] = -acc;
        }
        Some(x)
    }

    /// Smallest k with rank(M^{k+1}) = rank(M^k); 0 exactly when M is
    /// invertible, and 1 for the zero matrix.
    pub fn matrix_index(&self) -> Result<usize> {
        if !self.is_square() {
            return Err(Error::NonSquare {
                op: "matrix_index",
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(0);
        }
        let mut prev_rank = self.rank();
        if prev_rank == n {
            return Ok(0);
        }
        let mut power = self.clone();
        for k in 1..=n {
            power = power.mul(self)?;
            let r = power.rank();
            if r == prev_rank {
                return Ok(k);
            }
            prev_rank = r;
        }
        // Ranks strictly decrease until they stabilize, within n steps.
        Err(Error::Internal("matrix index failed to stabilize".into()))
    }

    /// True iff every column of `d` is a right combination M·x,
    /// tested as rank([M | d]) = rank(M).
    pub fn in_right_column_space(&self, d: &QMatrix) -> Result<bool> {
        if self.rows != d.rows {
            return Err(Error::DimensionMismatch {
                op: "in_right_column_space",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: d.rows,
                rhs_cols: d.cols,
            });
        }
        Ok(self.hstack(d).rank() == self.rank())
    }

    /// True iff every row of `d` is a left combination x·M,
    /// tested as rank([M over d]) = rank(M).
    pub fn in_left_row_space(&self, d: &QMatrix) -> Result<bool> {
        if self.cols != d.cols {
            return Err(Error::DimensionMismatch {
                op: "in_left_row_space",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: d.rows,
                rhs_cols: d.cols,
            });
        }
        Ok(self.vstack(d).rank() == self.rank())
    }

    pub fn hstack(&self, rhs: &QMatrix) -> QMatrix {
        debug_assert_eq!(self.rows, rhs.rows);
        QMatrix::from_fn(self.rows, self.cols + rhs.cols, |r, c| {
            if c < self.cols {
                self.get(r, c).clone()
            } else {
                rhs.get(r, c - self.cols).clone()
            }
        })
    }

    pub fn vstack(&self, below: &QMatrix) -> QMatrix {
        debug_assert_eq!(self.cols, below.cols);
        QMatrix::from_fn(self.rows + below.rows, self.cols, |r, c| {
            if r < self.rows {
                self.get(r, c).clone()
            } else {
                below.get(r - self.rows, c).clone()
            }
        })
    }

    pub fn replace_column(&self, j: usize, b: &[Quaternion]) -> Result<QMatrix> {
        if j >= self.cols {
            return Err(Error::IndexOutOfRange {
                op: "replace_column",
                index: j,
                size: self.cols,
            });
        }
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch {
                op: "replace_column",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: b.len(),
                rhs_cols: 1,
            });
        }
        let mut m = self.clone();
        for (r, v) in b.iter().enumerate() {
            m.set(r, j, v.clone());
        }
        Ok(m)
    }

    pub fn replace_row(&self, i: usize, b: &[Quaternion]) -> Result<QMatrix> {
        if i >= self.rows {
            return Err(Error::IndexOutOfRange {
                op: "replace_row",
                index: i,
                size: self.rows,
            });
        }
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch {
                op: "replace_row",
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: 1,
                rhs_cols: b.len(),
            });
        }
        let mut m = self.clone();
        for (c, v) in b.iter().enumerate() {
            m.set(i, c, v.clone());
        }
        Ok(m)
    }

    /// Submatrix selected by (0-based, strictly increasing) row and column
    /// index sets.
    pub fn submatrix(&self, row_idx: &[usize], col_idx: &[usize]) -> QMatrix {
        QMatrix::from_fn(row_idx.len(), col_idx.len(), |r, c| {
            self.get(row_idx[r], col_idx[c]).clone()
        })
    }

    fn check_same_shape(&self, op: &'static str, rhs: &QMatrix) -> Result<()> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::DimensionMismatch {
                op,
                lhs_rows: self.rows,
                lhs_cols: self.cols,
                rhs_rows: rhs.rows,
                rhs_cols: rhs.cols,
            });
        }
        Ok(())
    }

    /// All entries real (zero i, j, k parts).
    pub fn is_real(&self) -> bool {
        self.data.iter().all(Quaternion::is_real)
    }

    /// All entries in the complex subfield span{1, i}.
    pub fn is_complex(&self) -> bool {
        self.data.iter().all(Quaternion::is_complex)
    }
}

impl fmt::Debug for QMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "QMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        write!(f, "]")
    }
}

// ---- text format ------------------------------------------------------

impl QMatrix {
    /// Parses the matrix text format: first line "m n", then m lines of n
    /// quaternion literals separated by ';'.
    pub fn from_text(s: &str) -> Result<QMatrix> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (hline, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            col: 1,
            msg: "empty matrix file".into(),
        })?;
        let dims: Vec<&str> = header.split_whitespace().collect();
        let parse_dim = |s: &str| -> Result<usize> {
            s.parse().map_err(|_| Error::Parse {
                line: hline + 1,
                col: 1,
                msg: format!("bad dimension `{s}`"),
            })
        };
        if dims.len() != 2 {
            return Err(Error::Parse {
                line: hline + 1,
                col: 1,
                msg: "expected header line `rows cols`".into(),
            });
        }
        let rows = parse_dim(dims[0])?;
        let cols = parse_dim(dims[1])?;
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            let (lno, line) = lines.next().ok_or(Error::Parse {
                line: hline + 2 + r,
                col: 1,
                msg: format!("expected {rows} matrix rows, found {r}"),
            })?;
            let cells: Vec<&str> = line.split(';').map(str::trim).collect();
            if cells.len() != cols {
                return Err(Error::Parse {
                    line: lno + 1,
                    col: 1,
                    msg: format!("expected {cols} entries, found {}", cells.len()),
                });
            }
            for (cno, cell) in cells.iter().enumerate() {
                let q: Quaternion = cell.parse().map_err(|e| match e {
                    Error::Parse { msg, .. } => Error::Parse {
                        line: lno + 1,
                        col: cno + 1,
                        msg,
                    },
                    other => other,
                })?;
                data.push(q);
            }
        }
        if let Some((lno, _)) = lines.next() {
            return Err(Error::Parse {
                line: lno + 1,
                col: 1,
                msg: "trailing content after matrix rows".into(),
            });
        }
        Ok(QMatrix { rows, cols, data })
    }

    pub fn to_text(&self, decimal: bool) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|c| self.get(r, c).to_text(decimal))
                .collect();
            out.push_str(&row.join(" ; "));
            out.push('\n');
        }
        out
    }

    /// Structured form: one `[a0, a1, a2, a3]` tuple of rational strings per
    /// entry (consumed by the CLI's --json output).
    pub fn to_nested(&self) -> Vec<Vec<[String; 4]>> {
        (0..self.rows)
            .map(|r| {
                (0..self.cols)
                    .map(|c| {
                        let q = self.get(r, c);
                        [
                            q.re.to_string(),
                            q.im_i.to_string(),
                            q.im_j.to_string(),
                            q.im_k.to_string(),
                        ]
                    })
                    .collect()
            })
            .collect()
    }
}

/// Convenience constructor used throughout the tests: rows of quaternion
/// literals like `"i ; j ; 0"`.
pub fn qmat(rows: &[&str]) -> QMatrix {
    let body: String = rows.iter().map(|r| format!("{r}\n")).collect();
    let cols = rows[0].split(';').count();
    QMatrix::from_text(&format!("{} {}\n{}", rows.len(), cols, body)).expect("invalid literal")
}
