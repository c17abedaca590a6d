//! The W-weighted Drazin inverse of a rectangular matrix, through every
//! representation route, with cross-route agreement as the correctness
//! mechanism.
//!
//! For A (m×n) weighted by W (n×m), write U = WA and V = AW and let
//! k = max{Ind(U), Ind(V)}. The unconditionally valid routes all reduce to
//! A·(U^D)² = (V^D)²·A; the two factored routes that pull W⁺ out of the
//! double minor sum satisfy the exact identities
//!
//!   factored-left  = W⁺W · A_{d,W}      factored-right = A_{d,W} · WW⁺
//!
//! and therefore equal A_{d,W} itself only when the corresponding projector
//! fixes it (for example W of full column / full row rank). The library
//! computes them faithfully and exposes the applicability test separately.

use num::{One, Zero};

use crate::det::{col_replaced_minor_sum, principal_minor_sum, row_replaced_minor_sum, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::inverse::{drazin_with_index, inverse_capped, mp_inverse_with, DrazinRoute, MpRoute};
use crate::matrix::QMatrix;
use crate::quaternion::{Quaternion, Rational};

/// Which of the two general Drazin entry forms to use for a factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetForm {
    Cdet,
    Rdet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WdRoute {
    /// A · (U^D)² with determinantal Drazin entries; the two forms pick the
    /// entry representation of each U^D factor.
    UDet(DetForm, DetForm),
    /// (V^D)² · A, mirrored.
    VDet(DetForm, DetForm),
    /// Factored form expanding over V-powers and WW*; equals A_{d,W}·WW⁺.
    FactoredRight,
    /// Factored form expanding over W*W and U-powers; equals W⁺W·A_{d,W}.
    FactoredLeft,
    /// Single minor-sum family over (AW)^{k+2}; requires AW Hermitian.
    HermitianAw,
    /// Single minor-sum family over (WA)^{k+2}; requires WA Hermitian.
    HermitianWa,
    /// Composition oracle through the Drazin inverse of WA and AW.
    Cline,
    /// Both indices zero: plain inverse of WAW.
    ExactInverse,
}

#[derive(Debug, Clone)]
pub struct WDrazinResult {
    pub matrix: QMatrix,
    /// Weighted index max{Ind(AW), Ind(WA)}.
    pub k: usize,
    pub route: WdRoute,
    /// Stabilized rank of (AW)^k (equivalently of (WA)^k).
    pub r: usize,
    /// Rank of the weight W.
    pub r1: usize,
}

pub(crate) struct Weighted {
    pub(crate) u: QMatrix,
    pub(crate) v: QMatrix,
    pub(crate) k: usize,
    pub(crate) r: usize,
    pub(crate) r1: usize,
}

pub(crate) fn weighted_setup(a: &QMatrix, w: &QMatrix) -> Result<Weighted> {
    if a.rows() != w.cols() || a.cols() != w.rows() {
        return Err(Error::DimensionMismatch {
            op: "wdrazin",
            lhs_rows: a.rows(),
            lhs_cols: a.cols(),
            rhs_rows: w.rows(),
            rhs_cols: w.cols(),
        });
    }
    let u = w.mul(a)?;
    let v = a.mul(w)?;
    let k = u.matrix_index()?.max(v.matrix_index()?);
    let r = if k == 0 { u.rows() } else { v.pow(k)?.rank() };
    Ok(Weighted {
        u,
        v,
        k,
        r,
        r1: w.rank(),
    })
}

/// W-weighted Drazin inverse with the default route: the Hermitian fast
/// path when AW or WA is Hermitian, otherwise the V-side Drazin route.
pub fn wdrazin(a: &QMatrix, w: &QMatrix) -> Result<WDrazinResult> {
    let setup = weighted_setup(a, w)?;
    let route = if setup.k == 0 {
        WdRoute::ExactInverse
    } else if setup.v.is_hermitian() {
        WdRoute::HermitianAw
    } else if setup.u.is_hermitian() {
        WdRoute::HermitianWa
    } else {
        WdRoute::VDet(DetForm::Cdet, DetForm::Cdet)
    };
    wdrazin_route(a, w, &setup, route, DEFAULT_SIZE_CAP)
}

pub fn wdrazin_with(a: &QMatrix, w: &QMatrix, route: WdRoute, cap: usize) -> Result<WDrazinResult> {
    let setup = weighted_setup(a, w)?;
    wdrazin_route(a, w, &setup, route, cap)
}

pub(crate) fn drazin_form(m: &QMatrix, k: usize, form: DetForm, cap: usize) -> Result<QMatrix> {
    let route = match form {
        DetForm::Cdet => DrazinRoute::Cdet,
        DetForm::Rdet => DrazinRoute::Rdet,
    };
    if k == 0 {
        return inverse_capped(m, cap);
    }
    Ok(drazin_with_index(m, k, route, cap)?.matrix)
}

fn wdrazin_route(
    a: &QMatrix,
    w: &QMatrix,
    s: &Weighted,
    route: WdRoute,
    cap: usize,
) -> Result<WDrazinResult> {
    let (m, n) = (a.rows(), a.cols());
    let done = |matrix: QMatrix, route: WdRoute| WDrazinResult {
        matrix,
        k: s.k,
        route,
        r: s.r,
        r1: s.r1,
    };
    if s.k == 0 {
        // Both WA and AW invertible forces m = n; the weighted inverse
        // degenerates to (WAW)^{-1}.
        let waw = w.mul(a)?.mul(w)?;
        return Ok(done(inverse_capped(&waw, cap)?, WdRoute::ExactInverse));
    }
    if s.r == 0 {
        return Ok(done(QMatrix::zeros(m, n), route));
    }
    let x = match route {
        WdRoute::ExactInverse => {
            return Err(Error::RouteInapplicable {
                route: "exact-inverse".into(),
                reason: "weighted index is positive".into(),
            })
        }
        WdRoute::UDet(l, f) => {
            let d1 = drazin_form(&s.u, s.k, l, cap)?;
            let d2 = if f == l { d1.clone() } else { drazin_form(&s.u, s.k, f, cap)? };
            a.mul(&d1.mul(&d2)?)?
        }
        WdRoute::VDet(l, f) => {
            let d1 = drazin_form(&s.v, s.k, l, cap)?;
            let d2 = if f == l { d1.clone() } else { drazin_form(&s.v, s.k, f, cap)? };
            d1.mul(&d2)?.mul(a)?
        }
        WdRoute::FactoredLeft => factored_left(a, w, s, None, cap)?,
        WdRoute::FactoredRight => factored_right(a, w, s, None, cap)?,
        WdRoute::HermitianAw => {
            if !s.v.is_hermitian() {
                return Err(Error::RouteInapplicable {
                    route: "hermitian-aw".into(),
                    reason: "AW is not Hermitian".into(),
                });
            }
            let power = s.v.pow(s.k + 2)?;
            let vbar = s.v.pow(s.k)?.mul(a)?;
            let denom = principal_minor_sum(&power, s.r, cap)?;
            if denom.is_zero() {
                return Err(Error::Internal("hermitian-aw denominator vanished".into()));
            }
            let inv_denom = Rational::one() / denom;
            let mut x = QMatrix::zeros(m, n);
            for j in 0..n {
                let col = vbar.column(j);
                for i in 0..m {
                    let num = col_replaced_minor_sum(&power, i, &col, s.r, cap)?;
                    x.set(i, j, num.scale(&inv_denom));
                }
            }
            x
        }
        WdRoute::HermitianWa => {
            if !s.u.is_hermitian() {
                return Err(Error::RouteInapplicable {
                    route: "hermitian-wa".into(),
                    reason: "WA is not Hermitian".into(),
                });
            }
            let power = s.u.pow(s.k + 2)?;
            let ubar = a.mul(&s.u.pow(s.k)?)?;
            let denom = principal_minor_sum(&power, s.r, cap)?;
            if denom.is_zero() {
                return Err(Error::Internal("hermitian-wa denominator vanished".into()));
            }
            let inv_denom = Rational::one() / denom;
            let mut x = QMatrix::zeros(m, n);
            for i in 0..m {
                let row = ubar.row(i);
                for j in 0..n {
                    let num = row_replaced_minor_sum(&power, j, &row, s.r, cap)?;
                    x.set(i, j, num.scale(&inv_denom));
                }
            }
            x
        }
        WdRoute::Cline => {
            let via_u = a.mul(&drazin_square(&s.u, s.k, cap)?)?;
            let via_v = drazin_square(&s.v, s.k, cap)?.mul(a)?;
            if via_u != via_v {
                return Err(Error::Internal(
                    "the two Cline composition forms disagree".into(),
                ));
            }
            via_u
        }
    };
    Ok(done(x, route))
}

/// (M^D)² computed through the Moore-Penrose composition with index k.
fn drazin_square(m: &QMatrix, k: usize, cap: usize) -> Result<QMatrix> {
    let d = if k == 0 {
        inverse_capped(m, cap)?
    } else {
        drazin_with_index(m, k, DrazinRoute::Composition, cap)?.matrix
    };
    d.mul(&d)
}

/// Cline composition oracle A((WA)^D)² (checked against ((AW)^D)²A).
pub fn wdrazin_via_cline(a: &QMatrix, w: &QMatrix) -> Result<QMatrix> {
    let setup = weighted_setup(a, w)?;
    Ok(wdrazin_route(a, w, &setup, WdRoute::Cline, DEFAULT_SIZE_CAP)?.matrix)
}

/// The exact A_{d,W} from an existing setup, for the solver layer.
pub(crate) fn cline_from_setup(
    a: &QMatrix,
    w: &QMatrix,
    s: &Weighted,
    cap: usize,
) -> Result<QMatrix> {
    Ok(wdrazin_route(a, w, s, WdRoute::Cline, cap)?.matrix)
}

/// The two Moore-Penrose composition forms
/// ({V^k[(V^{2k+1}]⁺V^k})W⁺  and  W⁺({U^k[U^{2k+1}]⁺U^k}).
///
/// Returned as (right, left). They are *not* equal in general: right equals
/// A_{d,W}·WW⁺ and left equals W⁺W·A_{d,W} exactly, so each one matches
/// A_{d,W} only when the corresponding projector fixes it.
pub fn wdrazin_via_mp(a: &QMatrix, w: &QMatrix) -> Result<(QMatrix, QMatrix)> {
    wdrazin_via_mp_capped(a, w, DEFAULT_SIZE_CAP)
}

pub fn wdrazin_via_mp_capped(a: &QMatrix, w: &QMatrix, cap: usize) -> Result<(QMatrix, QMatrix)> {
    let s = weighted_setup(a, w)?;
    let w_pinv = mp_inverse_with(w, MpRoute::Left, cap)?.matrix;
    if s.k == 0 {
        let waw = w.mul(a)?.mul(w)?;
        let x = inverse_capped(&waw, cap)?;
        return Ok((x.clone(), x));
    }
    let core_v = {
        let vk = s.v.pow(s.k)?;
        let p = s.v.pow(2 * s.k + 1)?;
        let mp = mp_inverse_with(&p, MpRoute::Left, cap)?.matrix;
        vk.mul(&mp)?.mul(&vk)?
    };
    let core_u = {
        let uk = s.u.pow(s.k)?;
        let p = s.u.pow(2 * s.k + 1)?;
        let mp = mp_inverse_with(&p, MpRoute::Left, cap)?.matrix;
        uk.mul(&mp)?.mul(&uk)?
    };
    Ok((core_v.mul(&w_pinv)?, w_pinv.mul(&core_u)?))
}

/// Whether the factored-left route is exact for this (A, W): the column
/// space of A_{d,W} must lie in the column space of W*.
pub fn factored_left_applicable(a: &QMatrix, w: &QMatrix) -> Result<bool> {
    let x = wdrazin_via_cline(a, w)?;
    let w_pinv = mp_inverse_with(w, MpRoute::Left, DEFAULT_SIZE_CAP)?.matrix;
    Ok(w_pinv.mul(w)?.mul(&x)? == x)
}

/// Whether the factored-right route is exact: the row space of A_{d,W}
/// must lie in the row space of W.
pub fn factored_right_applicable(a: &QMatrix, w: &QMatrix) -> Result<bool> {
    let x = wdrazin_via_cline(a, w)?;
    let w_pinv = mp_inverse_with(w, MpRoute::Left, DEFAULT_SIZE_CAP)?.matrix;
    Ok(x.mul(w)?.mul(&w_pinv)? == x)
}

/// Factored U-side double minor sum; `rhs` optionally post-multiplies the
/// U-side bordering matrix (the solver reuses this with D̂ = Û·D).
pub(crate) fn factored_left(
    a: &QMatrix,
    w: &QMatrix,
    s: &Weighted,
    rhs: Option<&QMatrix>,
    cap: usize,
) -> Result<QMatrix> {
    let (m, n) = (a.rows(), a.cols());
    let w_adj = w.conj_transpose();
    let wsw = w_adj.mul(w)?; // m×m
    let u_k = s.u.pow(s.k)?;
    let w_hat = w_adj.mul(&u_k)?; // m×n
    let p = s.u.pow(2 * s.k + 1)?;
    let gram = p.conj_transpose().mul(&p)?; // n×n
    let u_hat = p.conj_transpose().mul(&u_k)?; // n×n
    let border = match rhs {
        Some(d) => u_hat.mul(d)?,
        None => u_hat,
    };
    let out_cols = border.cols();
    let denom_w = principal_minor_sum(&wsw, s.r1, cap)?;
    let denom_u = principal_minor_sum(&gram, s.r, cap)?;
    if denom_w.is_zero() || denom_u.is_zero() {
        return Err(Error::Internal("factored-left denominator vanished".into()));
    }
    let inv_denom = Rational::one() / (denom_w * denom_u);
    let mut first = QMatrix::zeros(m, n);
    for t in 0..n {
        let col = w_hat.column(t);
        for i in 0..m {
            first.set(i, t, col_replaced_minor_sum(&wsw, i, &col, s.r1, cap)?);
        }
    }
    let mut second = QMatrix::zeros(n, out_cols);
    for j in 0..out_cols {
        let col = border.column(j);
        for t in 0..n {
            second.set(t, j, col_replaced_minor_sum(&gram, t, &col, s.r, cap)?);
        }
    }
    Ok(QMatrix::from_fn(m, out_cols, |i, j| {
        let mut acc = Quaternion::zero();
        for t in 0..n {
            acc += &(first.get(i, t) * second.get(t, j));
        }
        acc.scale(&inv_denom)
    }))
}

/// Factored V-side double minor sum; `lhs` optionally pre-multiplies the
/// V-side bordering matrix (the solver reuses this with Ď = D·V̌).
pub(crate) fn factored_right(
    a: &QMatrix,
    w: &QMatrix,
    s: &Weighted,
    lhs: Option<&QMatrix>,
    cap: usize,
) -> Result<QMatrix> {
    let (m, n) = (a.rows(), a.cols());
    let w_adj = w.conj_transpose();
    let wws = w.mul(&w_adj)?; // n×n
    let v_k = s.v.pow(s.k)?;
    let w_check = v_k.mul(&w_adj)?; // m×n
    let p = s.v.pow(2 * s.k + 1)?;
    let gram = p.mul(&p.conj_transpose())?; // m×m
    let v_check = v_k.mul(&p.conj_transpose())?; // m×m
    let border = match lhs {
        Some(d) => d.mul(&v_check)?,
        None => v_check,
    };
    let out_rows = border.rows();
    let denom_v = principal_minor_sum(&gram, s.r, cap)?;
    let denom_w = principal_minor_sum(&wws, s.r1, cap)?;
    if denom_v.is_zero() || denom_w.is_zero() {
        return Err(Error::Internal("factored-right denominator vanished".into()));
    }
    let inv_denom = Rational::one() / (denom_v * denom_w);
    let mut first = QMatrix::zeros(out_rows, m);
    for i in 0..out_rows {
        let row = border.row(i);
        for t in 0..m {
            first.set(i, t, row_replaced_minor_sum(&gram, t, &row, s.r, cap)?);
        }
    }
    let mut second = QMatrix::zeros(m, n);
    for t in 0..m {
        let row = w_check.row(t);
        for j in 0..n {
            second.set(t, j, row_replaced_minor_sum(&wws, j, &row, s.r1, cap)?);
        }
    }
    Ok(QMatrix::from_fn(out_rows, n, |i, j| {
        let mut acc = Quaternion::zero();
        for t in 0..m {
            acc += &(first.get(i, t) * second.get(t, j));
        }
        acc.scale(&inv_denom)
    }))
}

/// The idempotents P₁ = WAW·A_{d,W} and P₂ = A_{d,W}·WAW.
pub fn weighted_projectors(a: &QMatrix, w: &QMatrix) -> Result<(QMatrix, QMatrix)> {
    let x = wdrazin_via_cline(a, w)?;
    let waw = w.mul(a)?.mul(w)?;
    Ok((waw.mul(&x)?, x.mul(&waw)?))
}
