//! Cramer-rule solvers for the three restricted matrix equations
//!
//!   WAWX = D,      XWAW = D,      W₁AW₁XW₂BW₂ = D.
//!
//! The unique solution in the restricted sense is A_{d,W}·D (resp.
//! D·A_{d,W}, A_{d,W₁}·D·B_{d,W₂}); consistency is decided operationally by
//! the projector identity: applying the equation's left-hand side to that
//! candidate must reproduce D exactly. An inconsistent right-hand side still
//! yields the formula value of the chosen route, flagged in the report with
//! its nonzero residual.

use num::{One, Zero};

use crate::det::{col_replaced_minor_sum, principal_minor_sum, row_replaced_minor_sum, DEFAULT_SIZE_CAP};
use crate::error::{Error, Result};
use crate::matrix::QMatrix;
use crate::quaternion::Rational;
use crate::verify::{verify_wdrazin, AxiomReport};
use crate::wdrazin::{
    drazin_form, factored_left, factored_right, weighted_setup, DetForm, Weighted,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveRoute {
    /// Cheapest applicable route: Hermitian when the kernel is Hermitian,
    /// otherwise the Drazin product.
    Auto,
    /// Double minor-sum route factoring through the weight's Moore-Penrose
    /// inverse (one-sided equations only). Exact precisely when the matching
    /// factored representation of A_{d,W} is exact.
    Factored,
    /// Determinantal Drazin entries composed with the data.
    DrazinProduct,
    /// Single minor-sum family over the Hermitian kernel power
    /// (column-replacement form; the d-column form for the two-sided
    /// equation).
    Hermitian,
    /// Row-replacement twin of `Hermitian` for the two-sided equation.
    HermitianAlt,
    /// Plain composition through the weighted Drazin inverse oracle.
    Oracle,
}

impl SolveRoute {
    pub fn parse(name: &str) -> Option<SolveRoute> {
        Some(match name {
            "auto" => SolveRoute::Auto,
            "factored" => SolveRoute::Factored,
            "drazin" => SolveRoute::DrazinProduct,
            "hermitian" => SolveRoute::Hermitian,
            "hermitian-alt" => SolveRoute::HermitianAlt,
            "oracle" => SolveRoute::Oracle,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone)]
pub struct SolveReport {
    pub x: QMatrix,
    /// Projector identity verdict: the restricted equation has a solution.
    pub consistent: bool,
    /// Residual of the returned X in the original equation.
    pub residual_zero: bool,
    pub residual: QMatrix,
    pub route: SolveRoute,
    /// Weighted-Drazin axiom reports for the inverse(s) backing the solve
    /// (empty when verification is disabled).
    pub verification: Vec<AxiomReport>,
}

/// Which side of the equation a one-sided consistency check refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Consistency of WAWX = D (Left) or XWAW = D (Right) by the projector
/// identity.
pub fn check_consistency(a: &QMatrix, w: &QMatrix, d: &QMatrix, side: Side) -> Result<bool> {
    let x = crate::wdrazin::wdrazin_via_cline(a, w)?;
    let waw = w.mul(a)?.mul(w)?;
    match side {
        Side::Left => Ok(waw.mul(&x)?.mul(d)? == *d),
        Side::Right => Ok(d.mul(&x)?.mul(&waw)? == *d),
    }
}

fn solve_report(
    x: QMatrix,
    route: SolveRoute,
    consistent: bool,
    residual: QMatrix,
    verification: Vec<AxiomReport>,
) -> SolveReport {
    SolveReport {
        residual_zero: residual.is_zero(),
        x,
        consistent,
        residual,
        route,
        verification,
    }
}

fn hermitian_denominator(power: &QMatrix, r: usize, cap: usize, what: &str) -> Result<Rational> {
    let denom = principal_minor_sum(power, r, cap)?;
    if denom.is_zero() {
        return Err(Error::Internal(format!("{what}: denominator vanished")));
    }
    Ok(denom)
}

/// Solves WAWX = D for A (m×n), W (n×m), D (n×p); X is m×p.
pub fn solve_left(
    a: &QMatrix,
    w: &QMatrix,
    d: &QMatrix,
    route: SolveRoute,
    cap: usize,
    verify: bool,
) -> Result<SolveReport> {
    let s = weighted_setup(a, w)?;
    if d.rows() != a.cols() {
        return Err(Error::DimensionMismatch {
            op: "solve_left",
            lhs_rows: a.cols(),
            lhs_cols: a.rows(),
            rhs_rows: d.rows(),
            rhs_cols: d.cols(),
        });
    }
    let (m, p) = (a.rows(), d.cols());
    let a_dw = crate::wdrazin::cline_from_setup(a, w, &s, cap)?;
    let route = match route {
        SolveRoute::Auto => {
            if s.k > 0 && s.v.is_hermitian() {
                SolveRoute::Hermitian
            } else {
                SolveRoute::DrazinProduct
            }
        }
        r => r,
    };
    let x = if s.k == 0 || s.r == 0 {
        a_dw.mul(d)?
    } else {
        match route {
            SolveRoute::Factored => factored_left(a, w, &s, Some(d), cap)?,
            SolveRoute::DrazinProduct => {
                let vd = drazin_form(&s.v, s.k, DetForm::Cdet, cap)?;
                vd.mul(&vd)?.mul(&a.mul(d)?)?
            }
            SolveRoute::Hermitian => {
                if !s.v.is_hermitian() {
                    return Err(Error::RouteInapplicable {
                        route: "hermitian".into(),
                        reason: "AW is not Hermitian".into(),
                    });
                }
                let power = s.v.pow(s.k + 2)?;
                let border = s.v.pow(s.k)?.mul(a)?.mul(d)?; // m×p
                let denom = hermitian_denominator(&power, s.r, cap, "solve_left hermitian")?;
                let inv_denom = Rational::one() / denom;
                let mut x = QMatrix::zeros(m, p);
                for j in 0..p {
                    let col = border.column(j);
                    for i in 0..m {
                        let num = col_replaced_minor_sum(&power, i, &col, s.r, cap)?;
                        x.set(i, j, num.scale(&inv_denom));
                    }
                }
                x
            }
            SolveRoute::Oracle => a_dw.mul(d)?,
            SolveRoute::HermitianAlt | SolveRoute::Auto => {
                return Err(Error::RouteInapplicable {
                    route: format!("{route:?}"),
                    reason: "not a one-sided left route".into(),
                })
            }
        }
    };
    let waw = w.mul(a)?.mul(w)?;
    let consistent = waw.mul(&a_dw)?.mul(d)? == *d;
    let residual = waw.mul(&x)?.sub(d)?;
    let verification = if verify {
        verify_wdrazin(a, w, &a_dw)?
    } else {
        Vec::new()
    };
    Ok(solve_report(x, route, consistent, residual, verification))
}

/// Solves XWAW = D for D (q×m), A (m×n), W (n×m); X is q×n.
pub fn solve_right(
    d: &QMatrix,
    a: &QMatrix,
    w: &QMatrix,
    route: SolveRoute,
    cap: usize,
    verify: bool,
) -> Result<SolveReport> {
    let s = weighted_setup(a, w)?;
    if d.cols() != a.rows() {
        return Err(Error::DimensionMismatch {
            op: "solve_right",
            lhs_rows: d.rows(),
            lhs_cols: d.cols(),
            rhs_rows: a.rows(),
            rhs_cols: a.cols(),
        });
    }
    let (q, n) = (d.rows(), a.cols());
    let a_dw = crate::wdrazin::cline_from_setup(a, w, &s, cap)?;
    let route = match route {
        SolveRoute::Auto => {
            if s.k > 0 && s.u.is_hermitian() {
                SolveRoute::Hermitian
            } else {
                SolveRoute::DrazinProduct
            }
        }
        r => r,
    };
    let x = if s.k == 0 || s.r == 0 {
        d.mul(&a_dw)?
    } else {
        match route {
            SolveRoute::Factored => factored_right(a, w, &s, Some(d), cap)?,
            SolveRoute::DrazinProduct => {
                let ud = drazin_form(&s.u, s.k, DetForm::Cdet, cap)?;
                d.mul(a)?.mul(&ud.mul(&ud)?)?
            }
            SolveRoute::Hermitian => {
                if !s.u.is_hermitian() {
                    return Err(Error::RouteInapplicable {
                        route: "hermitian".into(),
                        reason: "WA is not Hermitian".into(),
                    });
                }
                let power = s.u.pow(s.k + 2)?;
                let border = d.mul(a)?.mul(&s.u.pow(s.k)?)?; // q×n
                let denom = hermitian_denominator(&power, s.r, cap, "solve_right hermitian")?;
                let inv_denom = Rational::one() / denom;
                let mut x = QMatrix::zeros(q, n);
                for i in 0..q {
                    let row = border.row(i);
                    for j in 0..n {
                        let num = row_replaced_minor_sum(&power, j, &row, s.r, cap)?;
                        x.set(i, j, num.scale(&inv_denom));
                    }
                }
                x
            }
            SolveRoute::Oracle => d.mul(&a_dw)?,
            SolveRoute::HermitianAlt | SolveRoute::Auto => {
                return Err(Error::RouteInapplicable {
                    route: format!("{route:?}"),
                    reason: "not a one-sided right route".into(),
                })
            }
        }
    };
    let waw = w.mul(a)?.mul(w)?;
    let consistent = d.mul(&a_dw)?.mul(&waw)? == *d;
    let residual = x.mul(&waw)?.sub(d)?;
    let verification = if verify {
        verify_wdrazin(a, w, &a_dw)?
    } else {
        Vec::new()
    };
    Ok(solve_report(x, route, consistent, residual, verification))
}

/// The derived data of the two-sided equation: D̃ = ADB,
/// D̄ = (AW₁)^{k₁}A·D·B(W₂B)^{k₂}, and the bordered d-vectors collected as
/// the columns of `d_cols` / the rows of `d_rows` (both m×q).
#[derive(Debug, Clone)]
pub struct DVectors {
    pub d_tilde: QMatrix,
    pub d_bar: QMatrix,
    pub d_cols: QMatrix,
    pub d_rows: QMatrix,
}

struct TwoSided {
    sa: Weighted,
    sb: Weighted,
}

fn two_sided_setup(
    a: &QMatrix,
    w1: &QMatrix,
    b: &QMatrix,
    w2: &QMatrix,
    d: &QMatrix,
) -> Result<TwoSided> {
    let sa = weighted_setup(a, w1)?;
    let sb = weighted_setup(b, w2)?;
    if d.rows() != a.cols() || d.cols() != b.rows() {
        return Err(Error::DimensionMismatch {
            op: "solve_two_sided",
            lhs_rows: a.cols(),
            lhs_cols: b.rows(),
            rhs_rows: d.rows(),
            rhs_cols: d.cols(),
        });
    }
    Ok(TwoSided { sa, sb })
}

/// D̄ and the bordered d-vectors of the Hermitian two-sided routes. Requires
/// AW₁ and W₂B Hermitian (the row/column sums are only defined there).
pub fn build_d_vectors(
    a: &QMatrix,
    w1: &QMatrix,
    b: &QMatrix,
    w2: &QMatrix,
    d: &QMatrix,
    cap: usize,
) -> Result<DVectors> {
    let ts = two_sided_setup(a, w1, b, w2, d)?;
    let (sa, sb) = (&ts.sa, &ts.sb);
    let d_tilde = a.mul(d)?.mul(b)?;
    let v_bar = sa.v.pow(sa.k)?.mul(a)?; // m×n
    let u_bar = b.mul(&sb.u.pow(sb.k)?)?; // p×q
    let d_bar = v_bar.mul(d)?.mul(&u_bar)?; // m×q
    let (m, q) = (d_bar.rows(), d_bar.cols());
    if !sa.v.is_hermitian() || !sb.u.is_hermitian() {
        return Err(Error::RouteInapplicable {
            route: "d-vectors".into(),
            reason: "AW1 or W2B is not Hermitian".into(),
        });
    }
    let v_pow = sa.v.pow(sa.k + 2)?;
    let u_pow = sb.u.pow(sb.k + 2)?;
    let mut d_cols = QMatrix::zeros(m, q);
    let mut d_rows = QMatrix::zeros(m, q);
    for t in 0..m {
        let row = d_bar.row(t);
        for j in 0..q {
            d_cols.set(t, j, row_replaced_minor_sum(&u_pow, j, &row, sb.r, cap)?);
        }
    }
    for l in 0..q {
        let col = d_bar.column(l);
        for i in 0..m {
            d_rows.set(i, l, col_replaced_minor_sum(&v_pow, i, &col, sa.r, cap)?);
        }
    }
    Ok(DVectors {
        d_tilde,
        d_bar,
        d_cols,
        d_rows,
    })
}

/// Solves W₁AW₁XW₂BW₂ = D for A (m×n), W₁ (n×m), B (p×q), W₂ (q×p),
/// D (n×p); X is m×q.
#[allow(clippy::too_many_arguments)]
pub fn solve_two_sided(
    a: &QMatrix,
    w1: &QMatrix,
    d: &QMatrix,
    b: &QMatrix,
    w2: &QMatrix,
    route: SolveRoute,
    cap: usize,
    verify: bool,
) -> Result<SolveReport> {
    let ts = two_sided_setup(a, w1, b, w2, d)?;
    let (sa, sb) = (&ts.sa, &ts.sb);
    let a_dw = crate::wdrazin::cline_from_setup(a, w1, sa, cap)?;
    let b_dw = crate::wdrazin::cline_from_setup(b, w2, sb, cap)?;
    let oracle_x = a_dw.mul(d)?.mul(&b_dw)?;
    let hermitian_ok = sa.v.is_hermitian() && sb.u.is_hermitian();
    let route = match route {
        SolveRoute::Auto => {
            if sa.k > 0 && sb.k > 0 && hermitian_ok {
                SolveRoute::Hermitian
            } else {
                SolveRoute::DrazinProduct
            }
        }
        r => r,
    };
    let degenerate = sa.k == 0 || sb.k == 0 || sa.r == 0 || sb.r == 0;
    let x = if degenerate {
        oracle_x.clone()
    } else {
        match route {
            SolveRoute::DrazinProduct => {
                let vd = drazin_form(&sa.v, sa.k, DetForm::Cdet, cap)?;
                let ud = drazin_form(&sb.u, sb.k, DetForm::Cdet, cap)?;
                let d_tilde = a.mul(d)?.mul(b)?;
                vd.mul(&vd)?.mul(&d_tilde)?.mul(&ud.mul(&ud)?)?
            }
            SolveRoute::Hermitian | SolveRoute::HermitianAlt => {
                if !hermitian_ok {
                    return Err(Error::RouteInapplicable {
                        route: format!("{route:?}"),
                        reason: "AW1 or W2B is not Hermitian".into(),
                    });
                }
                let vectors = build_d_vectors(a, w1, b, w2, d, cap)?;
                let v_pow = sa.v.pow(sa.k + 2)?;
                let u_pow = sb.u.pow(sb.k + 2)?;
                let denom_v = hermitian_denominator(&v_pow, sa.r, cap, "two-sided")?;
                let denom_u = hermitian_denominator(&u_pow, sb.r, cap, "two-sided")?;
                let inv_denom = Rational::one() / (denom_v * denom_u);
                let (m, q) = (a.rows(), b.cols());
                let mut x = QMatrix::zeros(m, q);
                if route == SolveRoute::Hermitian {
                    for j in 0..q {
                        let col = vectors.d_cols.column(j);
                        for i in 0..m {
                            let num = col_replaced_minor_sum(&v_pow, i, &col, sa.r, cap)?;
                            x.set(i, j, num.scale(&inv_denom));
                        }
                    }
                } else {
                    for i in 0..m {
                        let row = vectors.d_rows.row(i);
                        for j in 0..q {
                            let num = row_replaced_minor_sum(&u_pow, j, &row, sb.r, cap)?;
                            x.set(i, j, num.scale(&inv_denom));
                        }
                    }
                }
                x
            }
            SolveRoute::Oracle => oracle_x.clone(),
            SolveRoute::Factored | SolveRoute::Auto => {
                return Err(Error::RouteInapplicable {
                    route: format!("{route:?}"),
                    reason: "not a two-sided route".into(),
                })
            }
        }
    };
    let lhs = w1.mul(a)?.mul(w1)?;
    let rhs = w2.mul(b)?.mul(w2)?;
    let consistent = lhs.mul(&oracle_x)?.mul(&rhs)? == *d;
    let residual = lhs.mul(&x)?.mul(&rhs)?.sub(d)?;
    let verification = if verify {
        let mut reports = verify_wdrazin(a, w1, &a_dw)?;
        reports.extend(verify_wdrazin(b, w2, &b_dw)?);
        reports
    } else {
        Vec::new()
    };
    Ok(solve_report(x, route, consistent, residual, verification))
}

/// Default-cap, verification-on convenience wrappers.
pub fn solve_left_default(a: &QMatrix, w: &QMatrix, d: &QMatrix) -> Result<SolveReport> {
    solve_left(a, w, d, SolveRoute::Auto, DEFAULT_SIZE_CAP, true)
}

pub fn solve_right_default(d: &QMatrix, a: &QMatrix, w: &QMatrix) -> Result<SolveReport> {
    solve_right(d, a, w, SolveRoute::Auto, DEFAULT_SIZE_CAP, true)
}

pub fn solve_two_sided_default(
    a: &QMatrix,
    w1: &QMatrix,
    d: &QMatrix,
    b: &QMatrix,
    w2: &QMatrix,
) -> Result<SolveReport> {
    solve_two_sided(a, w1, d, b, w2, SolveRoute::Auto, DEFAULT_SIZE_CAP, true)
}
