//! Formula-free axiom checkers for the three defining axiom systems, plus a
//! classical-determinant embedding oracle.
//!
//! These only multiply, transpose and subtract; they never touch the
//! determinantal representation code they are used to check. A report holds
//! exactly when its residual matrix is identically zero.

use num::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxiomId {
    P1,
    P2,
    P3,
    P4,
    D2,
    D5,
    D6,
    W7,
    W8,
    W9,
}

impl std::fmt::Display for AxiomId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let (name, law) = match self {
            AxiomId::P1 => ("P1", "AXA = A"),
            AxiomId::P2 => ("P2", "XAX = X"),
            AxiomId::P3 => ("P3", "(AX)* = AX"),
            AxiomId::P4 => ("P4", "(XA)* = XA"),
            AxiomId::D2 => ("D2", "XAX = X"),
            AxiomId::D5 => ("D5", "AX = XA"),
            AxiomId::D6 => ("D6", "A^{k+1}X = A^k"),
            AxiomId::W7 => ("W7", "(AW)^{k+1}XW = (AW)^k"),
            AxiomId::W8 => ("W8", "XWAWX = X"),
            AxiomId::W9 => ("W9", "AWX = XWA"),
        };
        write!(f, "{name} [{law}]")
    }
}

#[derive(Debug, Clone)]
pub struct AxiomReport {
    pub axiom: AxiomId,
    pub holds: bool,
    pub residual: QMatrix,
}

fn report(axiom: AxiomId, lhs: QMatrix, rhs: &QMatrix) -> Result<AxiomReport> {
    let residual = lhs.sub(rhs)?;
    Ok(AxiomReport {
        axiom,
        holds: residual.is_zero(),
        residual,
    })
}

/// The four Penrose identities for the pair (A, X); all hold iff X = A⁺.
pub fn verify_penrose(a: &QMatrix, x: &QMatrix) -> Result<Vec<AxiomReport>> {
    if x.rows() != a.cols() || x.cols() != a.rows() {
        return Err(Error::DimensionMismatch {
            op: "verify_penrose",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: x.rows(),
            rhs_cols: x.cols(),
        });
    }
    let ax = a.mul(x)?;
    let xa = x.mul(a)?;
    Ok(vec![
        report(AxiomId::P1, ax.mul(a)?, a)?,
        report(AxiomId::P2, xa.mul(x)?, x)?,
        report(AxiomId::P3, ax.conj_transpose(), &ax)?,
        report(AxiomId::P4, xa.conj_transpose(), &xa)?,
    ])
}

/// The three Drazin identities; k is computed from A.
pub fn verify_drazin(a: &QMatrix, x: &QMatrix) -> Result<Vec<AxiomReport>> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            op: "verify_drazin",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    if x.rows() != a.rows() || x.cols() != a.cols() {
        return Err(Error::DimensionMismatch {
            op: "verify_drazin",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: x.rows(),
            rhs_cols: x.cols(),
        });
    }
    let k = a.matrix_index()?;
    Ok(vec![
        report(AxiomId::D2, x.mul(a)?.mul(x)?, x)?,
        report(AxiomId::D5, a.mul(x)?, &x.mul(a)?)?,
        report(AxiomId::D6, a.pow(k + 1)?.mul(x)?, &a.pow(k)?)?,
    ])
}

/// The three weighted identities with k = max{Ind(AW), Ind(WA)};
/// all hold iff X = A_{d,W}.
pub fn verify_wdrazin(a: &QMatrix, w: &QMatrix, x: &QMatrix) -> Result<Vec<AxiomReport>> {
    if w.rows() != a.cols() || w.cols() != a.rows() {
        return Err(Error::DimensionMismatch {
            op: "verify_wdrazin",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: w.rows(),
            rhs_cols: w.cols(),
        });
    }
    if x.rows() != a.rows() || x.cols() != a.cols() {
        return Err(Error::DimensionMismatch {
            op: "verify_wdrazin",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: x.rows(),
            rhs_cols: x.cols(),
        });
    }
    let v = a.mul(w)?;
    let u = w.mul(a)?;
    let k = u.matrix_index()?.max(v.matrix_index()?);
    Ok(vec![
        report(AxiomId::W7, v.pow(k + 1)?.mul(x)?.mul(w)?, &v.pow(k)?)?,
        report(AxiomId::W8, x.mul(w)?.mul(a)?.mul(w)?.mul(x)?, x)?,
        report(AxiomId::W9, v.mul(x)?, &x.mul(&u)?)?,
    ])
}

pub fn all_hold(reports: &[AxiomReport]) -> bool {
    reports.iter().all(|r| r.holds)
}

/// Classical cofactor-expansion determinant for matrices with real entries,
/// the embedding oracle for the determinant engine.
pub fn classical_det_oracle(m: &QMatrix) -> Result<Rational> {
    if !m.is_square() {
        return Err(Error::NonSquare {
            op: "classical_det_oracle",
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    if !m.is_real() {
        return Err(Error::Internal(
            "classical determinant oracle needs real entries".into(),
        ));
    }
    let n = m.rows();
    let grid: Vec<Vec<Rational>> = (0..n)
        .map(|r| (0..n).map(|c| m.get(r, c).re.clone()).collect())
        .collect();
    Ok(cofactor_det(&grid))
}

fn cofactor_det(grid: &[Vec<Rational>]) -> Rational {
    let n = grid.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return grid[0][0].clone();
    }
    let mut acc = Rational::zero();
    for (c, pivot) in grid[0].iter().enumerate() {
        if pivot.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = grid[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|(cc, _)| *cc != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = pivot * &cofactor_det(&minor);
        if c % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
