//! Moore-Penrose and Drazin inverses via determinantal representations.
//!
//! Every route is a quotient of bordered principal-minor sums over a fixed
//! real denominator; the routes differ in which Gram kernel they expand
//! over and from which side. Cross-route agreement is exact and is used as
//! the primary correctness mechanism in the test suite.

use num::{One, Zero};

use crate::det::{
    col_replaced_minor_sum, double_det_capped, principal_minor_sum, row_replaced_minor_sum,
    DEFAULT_SIZE_CAP,
};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::{Quaternion, Rational};

/// Which determinantal route produced an inverse.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    MpLeft,
    MpRight,
    DrazinCdet,
    DrazinRdet,
    DrazinHermitianCdet,
    DrazinHermitianRdet,
    Composition,
    ExactInverse,
}

/// A computed generalized inverse, the route used, and the real minor-sum
/// denominator it was divided by.
#[derive(Debug, Clone)]
pub struct InverseResult {
    pub matrix: QMatrix,
    pub route: Route,
    pub denominator: Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MpRoute {
    /// Expand over A*A with column determinants.
    Left,
    /// Expand over AA* with row determinants.
    Right,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DrazinRoute {
    Cdet,
    Rdet,
    HermitianCdet,
    HermitianRdet,
    /// A^k (A^{2k+1})⁺ A^k through the Moore-Penrose inverse.
    Composition,
}

fn nonzero_denominator(d: Rational, what: &str) -> Result<Rational> {
    if d.is_zero() {
        return Err(Error::Internal(format!(
            "{what}: minor-sum denominator vanished at positive rank"
        )));
    }
    Ok(d)
}

/// Moore-Penrose inverse of an arbitrary matrix, default (left) route.
pub fn mp_inverse(a: &QMatrix) -> Result<InverseResult> {
    mp_inverse_with(a, MpRoute::Left, DEFAULT_SIZE_CAP)
}

pub fn mp_inverse_with(a: &QMatrix, route: MpRoute, cap: usize) -> Result<InverseResult> {
    let (m, n) = (a.rows(), a.cols());
    let r = a.rank();
    if r == 0 {
        return Ok(InverseResult {
            matrix: QMatrix::zeros(n, m),
            route: match route {
                MpRoute::Left => Route::MpLeft,
                MpRoute::Right => Route::MpRight,
            },
            denominator: Rational::one(),
        });
    }
    let adj = a.conj_transpose();
    match route {
        MpRoute::Left => {
            let gram = adj.mul(a)?; // n×n
            let denom = nonzero_denominator(principal_minor_sum(&gram, r, cap)?, "mp left")?;
            let inv_denom = Rational::one() / denom.clone();
            let mut x = QMatrix::zeros(n, m);
            for j in 0..m {
                let col = adj.column(j);
                for i in 0..n {
                    let num = col_replaced_minor_sum(&gram, i, &col, r, cap)?;
                    x.set(i, j, num.scale(&inv_denom));
                }
            }
            Ok(InverseResult {
                matrix: x,
                route: Route::MpLeft,
                denominator: denom,
            })
        }
        MpRoute::Right => {
            let gram = a.mul(&adj)?; // m×m
            let denom = nonzero_denominator(principal_minor_sum(&gram, r, cap)?, "mp right")?;
            let inv_denom = Rational::one() / denom.clone();
            let mut x = QMatrix::zeros(n, m);
            for i in 0..n {
                let row = adj.row(i);
                for j in 0..m {
                    let num = row_replaced_minor_sum(&gram, j, &row, r, cap)?;
                    x.set(i, j, num.scale(&inv_denom));
                }
            }
            Ok(InverseResult {
                matrix: x,
                route: Route::MpRight,
                denominator: denom,
            })
        }
    }
}

/// Exact inverse of a square matrix. Invertibility is decided by the double
/// determinant; the left-adjoint form is computed and cross-checked against
/// the right-adjoint form entry by entry.
pub fn inverse(a: &QMatrix) -> Result<QMatrix> {
    inverse_capped(a, DEFAULT_SIZE_CAP)
}

pub fn inverse_capped(a: &QMatrix, cap: usize) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            op: "inverse",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let dd = double_det_capped(a, cap)?;
    if dd.is_zero() {
        return Err(Error::Singular);
    }
    let left = mp_inverse_with(a, MpRoute::Left, cap)?.matrix;
    let right = mp_inverse_with(a, MpRoute::Right, cap)?.matrix;
    if left != right {
        return Err(Error::Internal(
            "left and right adjoint inverse forms disagree".into(),
        ));
    }
    Ok(left)
}

/// Drazin inverse: auto-selects the Hermitian fast path when applicable,
/// otherwise the general column-determinant route.
pub fn drazin(a: &QMatrix) -> Result<InverseResult> {
    let route = if a.is_hermitian() {
        DrazinRoute::HermitianCdet
    } else {
        DrazinRoute::Cdet
    };
    drazin_with(a, route, DEFAULT_SIZE_CAP)
}

pub fn drazin_with(a: &QMatrix, route: DrazinRoute, cap: usize) -> Result<InverseResult> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            op: "drazin",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let k = a.matrix_index()?;
    if k == 0 {
        return Ok(InverseResult {
            matrix: inverse_capped(a, cap)?,
            route: Route::ExactInverse,
            denominator: double_det_capped(a, cap)?,
        });
    }
    drazin_with_index(a, k, route, cap)
}

/// Determinantal Drazin entries for any k ≥ Ind(A); the weighted-Drazin
/// routes call this with the weighted index, which may exceed Ind(A).
pub(crate) fn drazin_with_index(
    a: &QMatrix,
    k: usize,
    route: DrazinRoute,
    cap: usize,
) -> Result<InverseResult> {
    let n = a.rows();
    let a_k = a.pow(k)?;
    let r = a_k.rank();
    if r == 0 {
        return Ok(InverseResult {
            matrix: QMatrix::zeros(n, n),
            route: Route::Composition,
            denominator: Rational::one(),
        });
    }
    match route {
        DrazinRoute::Cdet => {
            let p = a.pow(2 * k + 1)?;
            let gram = p.conj_transpose().mul(&p)?;
            let hat = p.conj_transpose().mul(&a_k)?;
            let denom = nonzero_denominator(principal_minor_sum(&gram, r, cap)?, "drazin cdet")?;
            let inv_denom = Rational::one() / denom.clone();
            let mut sums = QMatrix::zeros(n, n); // sums[t][j]
            for j in 0..n {
                let col = hat.column(j);
                for t in 0..n {
                    sums.set(t, j, col_replaced_minor_sum(&gram, t, &col, r, cap)?);
                }
            }
            let x = QMatrix::from_fn(n, n, |i, j| {
                let mut acc = Quaternion::zero();
                for t in 0..n {
                    acc += &(a_k.get(i, t) * sums.get(t, j));
                }
                acc.scale(&inv_denom)
            });
            Ok(InverseResult {
                matrix: x,
                route: Route::DrazinCdet,
                denominator: denom,
            })
        }
        DrazinRoute::Rdet => {
            let p = a.pow(2 * k + 1)?;
            let gram = p.mul(&p.conj_transpose())?;
            let check = a_k.mul(&p.conj_transpose())?;
            let denom = nonzero_denominator(principal_minor_sum(&gram, r, cap)?, "drazin rdet")?;
            let inv_denom = Rational::one() / denom.clone();
            let mut sums = QMatrix::zeros(n, n); // sums[i][s]
            for i in 0..n {
                let row = check.row(i);
                for s in 0..n {
                    sums.set(i, s, row_replaced_minor_sum(&gram, s, &row, r, cap)?);
                }
            }
            let x = QMatrix::from_fn(n, n, |i, j| {
                let mut acc = Quaternion::zero();
                for s in 0..n {
                    acc += &(sums.get(i, s) * a_k.get(s, j));
                }
                acc.scale(&inv_denom)
            });
            Ok(InverseResult {
                matrix: x,
                route: Route::DrazinRdet,
                denominator: denom,
            })
        }
        DrazinRoute::HermitianCdet | DrazinRoute::HermitianRdet => {
            if !a.is_hermitian() {
                return Err(Error::RouteInapplicable {
                    route: format!("{route:?}"),
                    reason: "matrix is not Hermitian".into(),
                });
            }
            let power = a.pow(k + 1)?;
            let denom =
                nonzero_denominator(principal_minor_sum(&power, r, cap)?, "drazin hermitian")?;
            let inv_denom = Rational::one() / denom.clone();
            let mut x = QMatrix::zeros(n, n);
            if route == DrazinRoute::HermitianCdet {
                for j in 0..n {
                    let col = a_k.column(j);
                    for i in 0..n {
                        let num = col_replaced_minor_sum(&power, i, &col, r, cap)?;
                        x.set(i, j, num.scale(&inv_denom));
                    }
                }
            } else {
                for i in 0..n {
                    let row = a_k.row(i);
                    for j in 0..n {
                        let num = row_replaced_minor_sum(&power, j, &row, r, cap)?;
                        x.set(i, j, num.scale(&inv_denom));
                    }
                }
            }
            Ok(InverseResult {
                matrix: x,
                route: if route == DrazinRoute::HermitianCdet {
                    Route::DrazinHermitianCdet
                } else {
                    Route::DrazinHermitianRdet
                },
                denominator: denom,
            })
        }
        DrazinRoute::Composition => {
            let p = a.pow(2 * k + 1)?;
            let mp = mp_inverse_with(&p, MpRoute::Left, cap)?;
            let x = a_k.mul(&mp.matrix)?.mul(&a_k)?;
            Ok(InverseResult {
                matrix: x,
                route: Route::Composition,
                denominator: mp.denominator,
            })
        }
    }
}

/// Independent composition route A^k (A^{2k+1})⁺ A^k.
pub fn drazin_via_mp(a: &QMatrix) -> Result<QMatrix> {
    if !a.is_square() {
        return Err(Error::NonSquare {
            op: "drazin_via_mp",
            rows: a.rows(),
            cols: a.cols(),
        });
    }
    let k = a.matrix_index()?;
    if k == 0 {
        return inverse(a);
    }
    Ok(drazin_with_index(a, k, DrazinRoute::Composition, DEFAULT_SIZE_CAP)?.matrix)
}
