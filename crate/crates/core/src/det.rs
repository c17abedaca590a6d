//! Row and column determinants of quaternion matrices.
//!
//! For a square matrix over a noncommutative ring the n! monomials of the
//! classical determinant no longer have a canonical factor order. The row
//! determinant rdet_i fixes it by writing each permutation as disjoint
//! cycles in a normal form anchored at row index i and multiplying the
//! entries along each cycle walk; the column determinant cdet_j mirrors the
//! construction from the right. Both coincide with the classical
//! determinant on real (and complex) matrices, and all 2n functionals agree
//! and are real on Hermitian matrices, which is what makes the minor-sum
//! calculus downstream work.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::{Quaternion, Rational};
use crate::subsets::{subsets, subsets_containing};

/// Determinant evaluation refuses matrices larger than this by default;
/// the permutation sum is factorial in n.
pub const DEFAULT_SIZE_CAP: usize = 8;

fn check_square_capped(m: &QMatrix, op: &'static str, cap: usize) -> Result<usize> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            op,
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if m.rows() > cap {
        return Err(Error::SizeCap { n: m.rows(), cap });
    }
    Ok(m.rows())
}

/// Disjoint cycles of a permutation given as an image table.
fn cycles_of(perm: &[usize]) -> Vec<Vec<usize>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut cycles = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = perm[start];
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            cur = perm[cur];
        }
        cycles.push(cycle);
    }
    cycles
}

/// Product of entries along one cycle, starting the walk at `start`:
/// a[start][p(start)] · a[p(start)][p²(start)] ⋯ a[p⁻¹(start)][start].
fn cycle_walk(m: &QMatrix, perm: &[usize], start: usize) -> Quaternion {
    let mut prod = Quaternion::one();
    let mut cur = start;
    loop {
        let next = perm[cur];
        prod *= m.get(cur, next);
        cur = next;
        if cur == start {
            return prod;
        }
    }
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm over the image table.
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    f(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// Row determinant anchored at row `i` (0-based), with the configured size cap.
pub fn rdet_capped(m: &QMatrix, i: usize, cap: usize) -> Result<Quaternion> {
    let n = check_square_capped(m, "rdet", cap)?;
    if i >= n {
        return Err(Error::IndexOutOfRange {
            op: "rdet",
            index: i,
            size: n,
        });
    }
    let mut sum = Quaternion::zero();
    for_each_permutation(n, |perm| {
        let cycles = cycles_of(perm);
        // Sign (−1)^{n−r}; r counts all cycles, fixed points included, so
        // the identity permutation contributes +1.
        let negative = (n - cycles.len()) % 2 == 1;
        // Anchored cycle first (walk starts at i), remaining cycles by
        // ascending minimum, each walked from its minimum.
        let mut others: Vec<usize> = cycles
            .iter()
            .filter(|c| !c.contains(&i))
            .map(|c| *c.iter().min().unwrap())
            .collect();
        others.sort_unstable();
        let mut term = cycle_walk(m, perm, i);
        for start in others {
            term *= &cycle_walk(m, perm, start);
        }
        if negative {
            sum -= &term;
        } else {
            sum += &term;
        }
    });
    Ok(sum)
}

/// Column determinant anchored at column `j` (0-based): remaining cycles by
/// descending minimum multiplied first, the anchored cycle walk last.
pub fn cdet_capped(m: &QMatrix, j: usize, cap: usize) -> Result<Quaternion> {
    let n = check_square_capped(m, "cdet", cap)?;
    if j >= n {
        return Err(Error::IndexOutOfRange {
            op: "cdet",
            index: j,
            size: n,
        });
    }
    let mut sum = Quaternion::zero();
    for_each_permutation(n, |perm| {
        let cycles = cycles_of(perm);
        let negative = (n - cycles.len()) % 2 == 1;
        let mut others: Vec<usize> = cycles
            .iter()
            .filter(|c| !c.contains(&j))
            .map(|c| *c.iter().min().unwrap())
            .collect();
        others.sort_unstable_by(|a, b| b.cmp(a));
        let mut term = Quaternion::one();
        for start in others {
            term *= &cycle_walk(m, perm, start);
        }
        term *= &cycle_walk(m, perm, j);
        if negative {
            sum -= &term;
        } else {
            sum += &term;
        }
    });
    Ok(sum)
}

pub fn rdet(m: &QMatrix, i: usize) -> Result<Quaternion> {
    rdet_capped(m, i, DEFAULT_SIZE_CAP)
}

pub fn cdet(m: &QMatrix, j: usize) -> Result<Quaternion> {
    cdet_capped(m, j, DEFAULT_SIZE_CAP)
}

/// Determinant of a Hermitian matrix: the common value of all row and column
/// determinants, guaranteed real. A nonzero imaginary residue means the
/// engine itself is broken, reported as an internal error.
pub fn hermitian_det_capped(m: &QMatrix, cap: usize) -> Result<Rational> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian { op: "hermitian_det" });
    }
    if m.rows() == 0 {
        return Ok(Rational::one());
    }
    let d = rdet_capped(m, 0, cap)?;
    if !d.is_real() {
        return Err(Error::Internal(format!(
            "hermitian determinant came out non-real: {d}"
        )));
    }
    Ok(d.re)
}

pub fn hermitian_det(m: &QMatrix) -> Result<Rational> {
    hermitian_det_capped(m, DEFAULT_SIZE_CAP)
}

/// Double determinant det(M·M*) = det(M*·M); nonzero exactly when M is
/// invertible.
pub fn double_det_capped(m: &QMatrix, cap: usize) -> Result<Rational> {
    check_square_capped(m, "double_det", cap)?;
    hermitian_det_capped(&m.mul(&m.conj_transpose())?, cap)
}

pub fn double_det(m: &QMatrix) -> Result<Rational> {
    double_det_capped(m, DEFAULT_SIZE_CAP)
}

/// Principal minor |M_α^α| of a Hermitian matrix over the index subset α.
pub fn principal_minor(m: &QMatrix, alpha: &[usize], cap: usize) -> Result<Rational> {
    if !m.is_hermitian() {
        return Err(Error::NotHermitian {
            op: "principal_minor",
        });
    }
    hermitian_det_capped(&m.submatrix(alpha, alpha), cap)
}

/// Σ over all k-subsets α of the principal minors |M_α^α|.
pub fn principal_minor_sum(m: &QMatrix, k: usize, cap: usize) -> Result<Rational> {
    let mut acc = Rational::zero();
    for alpha in subsets(m.rows(), k) {
        acc += principal_minor(m, &alpha, cap)?;
    }
    Ok(acc)
}

/// Σ_{β ∋ i, |β| = r} cdet_i( (M with column i replaced by b)_β^β ).
///
/// The building block of every column-side determinantal representation:
/// M is the (Hermitian) kernel matrix, b the bordering column, and the sum
/// ranges over all r-element principal submatrices containing index i.
pub fn col_replaced_minor_sum(
    m: &QMatrix,
    i: usize,
    b: &[Quaternion],
    r: usize,
    cap: usize,
) -> Result<Quaternion> {
    let n = m.rows();
    if i >= n {
        return Err(Error::IndexOutOfRange {
            op: "col_replaced_minor_sum",
            index: i,
            size: n,
        });
    }
    let replaced = m.replace_column(i, b)?;
    let mut acc = Quaternion::zero();
    for beta in subsets_containing(n, r, i) {
        let local = beta.iter().position(|&x| x == i).unwrap();
        acc += &cdet_capped(&replaced.submatrix(&beta, &beta), local, cap)?;
    }
    Ok(acc)
}

/// Row-side mirror: Σ_{α ∋ j, |α| = r} rdet_j( (M with row j replaced by b)_α^α ).
pub fn row_replaced_minor_sum(
    m: &QMatrix,
    j: usize,
    b: &[Quaternion],
    r: usize,
    cap: usize,
) -> Result<Quaternion> {
    let n = m.rows();
    if j >= n {
        return Err(Error::IndexOutOfRange {
            op: "row_replaced_minor_sum",
            index: j,
            size: n,
        });
    }
    let replaced = m.replace_row(j, b)?;
    let mut acc = Quaternion::zero();
    for alpha in subsets_containing(n, r, j) {
        let local = alpha.iter().position(|&x| x == j).unwrap();
        acc += &rdet_capped(&replaced.submatrix(&alpha, &alpha), local, cap)?;
    }
    Ok(acc)
}
