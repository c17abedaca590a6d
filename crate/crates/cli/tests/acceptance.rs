//! Acceptance suite: one test per criterion (split into named parts where a
//! criterion bundles several claims), each printing a PASS line on success.
//!
//! Several stated golden values are internally contradicted by the reference
//! printout itself (verified independently through multiple determinantal
//! routes, composition oracles and the exact axiom suites; see the library
//! crate's golden_examples tests for the corrected values and their
//! cross-checks). Those assertions are kept verbatim here and are expected
//! to fail: a red entry below means the stated value is not reproducible
//! from its own inputs, not that the implementation disagrees with itself.

use std::process::Command;
use std::time::Instant;

use num::{BigInt, BigRational};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use quatrix::det::{cdet, col_replaced_minor_sum, hermitian_det, principal_minor_sum, rdet};
use quatrix::inverse::{
    drazin_via_mp, drazin_with, mp_inverse_with, DrazinRoute, MpRoute,
};
use quatrix::matrix::qmat;
use quatrix::quaternion::Quaternion;
use quatrix::solve::{solve_left, solve_right, solve_two_sided, SolveRoute};
use quatrix::verify::{
    all_hold, classical_det_oracle, verify_drazin, verify_penrose, verify_wdrazin,
};
use quatrix::wdrazin::{
    factored_left_applicable, factored_right_applicable, wdrazin_via_cline, wdrazin_via_mp,
    wdrazin_with, DetForm, WdRoute,
};
use quatrix::{QMatrix, Rational};

fn rational(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_quatrix"))
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn example1() -> (QMatrix, QMatrix, QMatrix) {
    (
        qmat(&["0 ; i ; 0", "k ; 1 ; i", "1 ; 0 ; 0", "1 ; -k ; -j"]),
        qmat(&["k ; 0 ; i ; 0", "-j ; k ; 0 ; 1", "0 ; 1 ; 0 ; -k"]),
        qmat(&["k ; i", "i ; -j", "1 ; -i"]),
    )
}

fn example2_corrected() -> (QMatrix, QMatrix, QMatrix, QMatrix, QMatrix) {
    (
        qmat(&["k ; 0 ; i ; 0", "-j ; k ; 0 ; 1", "0 ; 1 ; 0 ; -k"]),
        qmat(&["k ; -j ; 0", "0 ; k ; 1", "i ; 0 ; 0", "0 ; 1 ; -k"]),
        qmat(&["i ; -1", "k ; 0", "0 ; j", "1 ; i"]),
        qmat(&["k ; j ; 0", "i ; 0 ; 1"]),
        qmat(&["k ; -i", "j ; 0", "0 ; 1"]),
    )
}

// ---- criterion 1 ----------------------------------------------------------

/// Golden solution of the first worked equation, asserted exactly as
/// stated. Expected red: the equation is inconsistent for these inputs
/// (WAW has a zero third row, D does not), the stated X has 3 rows where
/// the solution shape is 4×2, and the stated entries outside row 1 descend
/// from first-factor values refuted by the printout's own companion values.
#[test]
fn criterion1_example1_golden_solution() {
    let started = Instant::now();
    let (a, w, d) = example1();
    let rep = solve_left(&a, &w, &d, SolveRoute::Factored, 8, true).unwrap();
    assert!(
        started.elapsed().as_secs() < 10,
        "criterion 1 runtime bound exceeded"
    );
    let stated = qmat(&[
        "1 ; k",
        "1+i+7k ; -7-4j",
        "19/2+5j-5k ; -10i+19/2k",
    ]);
    let unrestricted = wdrazin_via_cline(&a, &w).unwrap().mul(&d).unwrap();
    assert_eq!(
        rep.x, stated,
        "stated golden X is not reproducible from its own inputs; \
         factored-route value (shown as left) and the unrestricted \
         candidate A_dW*D = {unrestricted:?} are the two honest values, \
         and the equation is inconsistent (consistent = {})",
        rep.consistent
    );
    println!("criterion 1: PASS");
}

// ---- criterion 2 ----------------------------------------------------------

#[test]
fn criterion2_intermediates_products_and_minor_sums() {
    let (a, w, d) = example1();
    let u = w.mul(&a).unwrap();
    assert_eq!(u, qmat(&["i ; j ; 0", "0 ; k ; 0", "0 ; 0 ; 0"]));
    let wsw = w.conj_transpose().mul(&w).unwrap();
    assert_eq!(
        wsw,
        qmat(&["2 ; i ; -j ; j", "-i ; 2 ; 0 ; -2k", "j ; 0 ; 1 ; 0", "-j ; 2k ; 0 ; 2"])
    );
    let u5 = u.pow(5).unwrap();
    let d_hat = u5.conj_transpose().mul(&u.pow(2).unwrap()).unwrap().mul(&d).unwrap();
    assert_eq!(d_hat, qmat(&["i-j-k ; -j", "1+3i+6j-2k ; 4i-2k", "0 ; 0"]));
    assert_eq!(principal_minor_sum(&wsw, 3, 8).unwrap(), rational(2));
    let gram = u5.conj_transpose().mul(&u5).unwrap();
    assert_eq!(principal_minor_sum(&gram, 2, 8).unwrap(), rational(1));
    println!("criterion 2 (U, W*W, D-hat, minor sums): PASS");
}

/// The stated W*U² matrix. Expected red in two entries: the printout's own
/// expansion displays and first-factor values force (1,1) = k (not −k) and
/// (2,2) = k (not i+k).
#[test]
fn criterion2_intermediate_w_hat_as_stated() {
    let (a, w, _) = example1();
    let u = w.mul(&a).unwrap();
    let w_hat = w.conj_transpose().mul(&u.pow(2).unwrap()).unwrap();
    let stated = qmat(&["-k ; 1-2j ; 0", "0 ; i+k ; 0", "i ; 1+j ; 0", "0 ; -1 ; 0"]);
    assert_eq!(
        w_hat, stated,
        "stated W*U^2 contradicts the printout's own downstream displays"
    );
    println!("criterion 2 (W-hat): PASS");
}

/// The six per-entry numerators (anchored minor sums against the two
/// transformed right-hand columns). Expected red in exactly one of the six:
/// the stated (anchor 1, column 1) value −2i−j−k has a flipped k sign; the
/// other five are reproduced exactly by the same engine.
#[test]
fn criterion2_numerators_as_stated() {
    let (a, w, d) = example1();
    let u = w.mul(&a).unwrap();
    let u5 = u.pow(5).unwrap();
    let gram = u5.conj_transpose().mul(&u5).unwrap();
    let d_hat = u5.conj_transpose().mul(&u.pow(2).unwrap()).unwrap().mul(&d).unwrap();
    let stated = [
        [Quaternion::from_ints(0, -2, -1, -1), Quaternion::from_ints(-2, 0, 2, 0)],
        [Quaternion::j(), Quaternion::i()],
        [Quaternion::zero(), Quaternion::zero()],
    ];
    for t in 0..3 {
        for j in 0..2 {
            let got = col_replaced_minor_sum(&gram, t, &d_hat.column(j), 2, 8).unwrap();
            assert_eq!(
                got, stated[t][j],
                "numerator (anchor {t}, column {j}): the stated value \
                 disagrees with the engine that reproduces the other five"
            );
        }
    }
    println!("criterion 2 (numerators): PASS");
}

// ---- criterion 3 ----------------------------------------------------------

/// Second worked equation with the inputs exactly as printed. Expected red:
/// with the printed B, the kernel W2·B is not Hermitian (so the printout's
/// own route cannot run) and no route returns the stated X.
#[test]
fn criterion3_strict_printed_inputs() {
    let a = qmat(&["k ; 0 ; i ; 0", "-j ; k ; 0 ; 1", "0 ; 1 ; 0 ; -k"]);
    let w1 = qmat(&["k ; -j ; 0", "0 ; k ; 1", "i ; 0 ; 0", "0 ; 1 ; -k"]);
    let d_printed = qmat(&["i ; -1", "k ; 0", "0 ; j", "-1 ; 0"]);
    let b_printed = qmat(&["k ; j ; 0", "j ; 0 ; 1"]);
    let w2 = qmat(&["k ; -i", "j ; 0", "0 ; 1"]);
    assert!(
        w2.mul(&b_printed).unwrap().is_hermitian(),
        "printed B gives a non-Hermitian W2*B kernel (the printed U matrix \
         is Hermitian, forcing B(2,1) = i); strict printed inputs cannot \
         reproduce the stated computation"
    );
    let stated = qmat(&[
        "-4/3i+j ; 1/3 ; -1-7/9k",
        "-7/3-5/3k ; -2/3i ; 5/3i-11/9j",
        "0 ; 0 ; 0",
    ]);
    let rep = solve_two_sided(&a, &w1, &d_printed, &b_printed, &w2, SolveRoute::Auto, 8, false)
        .unwrap();
    assert_eq!(rep.x, stated);
    println!("criterion 3 (strict printed inputs): PASS");
}

#[test]
fn criterion3_corrected_inputs_intermediates() {
    let (a, w1, d, b, w2) = example2_corrected();
    let v = a.mul(&w1).unwrap();
    let u = w2.mul(&b).unwrap();
    assert_eq!(v.pow(3).unwrap(), qmat(&["-13 ; 8i ; 0", "-8i ; -5 ; 0", "0 ; 0 ; 0"]));
    assert_eq!(u.pow(3).unwrap(), qmat(&["0 ; -3i ; -3i", "3i ; -3 ; 0", "3i ; 0 ; 3"]));
    assert_eq!(principal_minor_sum(&v.pow(3).unwrap(), 2, 8).unwrap(), rational(1));
    assert_eq!(principal_minor_sum(&u.pow(3).unwrap(), 2, 8).unwrap(), rational(-27));
    // D-bar as printed (the printout's k = 1 products)
    let d_bar = v.mul(&a).unwrap().mul(&d).unwrap().mul(&b.mul(&u).unwrap()).unwrap();
    assert_eq!(
        d_bar,
        qmat(&["2i+j ; -7+k ; -5+2k", "-1+k ; -5i-j ; -4i-2j", "0 ; 0 ; 0"])
    );
    println!("criterion 3 (corrected inputs, intermediates): PASS");
}

/// The three stated d-columns. Expected red in exactly one entry: the
/// stated (2,3) value 9i+3j is an arithmetic slip for 9i+9j (recomputed
/// from the printout's own D̄ row 2 and (W2B)³, and confirmed by the
/// agreement of every solution route on the corrected value).
#[test]
fn criterion3_d_columns_as_stated() {
    let (a, w1, d, b, w2) = example2_corrected();
    let v = a.mul(&w1).unwrap();
    let u = w2.mul(&b).unwrap();
    let d_bar = v.mul(&a).unwrap().mul(&d).unwrap().mul(&b.mul(&u).unwrap()).unwrap();
    let u3 = u.pow(3).unwrap();
    let stated = qmat(&["36i-9j ; -27 ; 9-9k", "-27-9k ; -18i ; 9i+3j", "0 ; 0 ; 0"]);
    for t in 0..3 {
        let row = d_bar.row(t);
        for j in 0..3 {
            let got = quatrix::det::row_replaced_minor_sum(&u3, j, &row, 2, 8).unwrap();
            assert_eq!(got, *stated.get(t, j), "d-column entry ({t},{j})");
        }
    }
    println!("criterion 3 (d-columns): PASS");
}

/// The stated final X from the corrected inputs. Expected red in the third
/// column only, inherited from the d-column slip above; columns 1 and 2
/// match exactly.
#[test]
fn criterion3_solution_as_stated() {
    let (a, w1, d, b, w2) = example2_corrected();
    let rep = solve_two_sided(&a, &w1, &d, &b, &w2, SolveRoute::Hermitian, 8, false).unwrap();
    let stated = qmat(&[
        "-4/3i+j ; 1/3 ; -1-7/9k",
        "-7/3-5/3k ; -2/3i ; 5/3i-11/9j",
        "0 ; 0 ; 0",
    ]);
    assert_eq!(
        rep.x, stated,
        "stated X inherits the d-column slip in its third column; every \
         route and the exact axiom suites agree on -1+k and 5/3i+5/3j there"
    );
    println!("criterion 3 (solution): PASS");
}

// ---- criterion 4: axiom suites on randomized inputs ------------------------

fn random_quaternion(rng: &mut ChaCha8Rng) -> Quaternion {
    Quaternion::from_ints(
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
        rng.gen_range(-2..=2),
    )
}

fn random_matrix(rng: &mut ChaCha8Rng, rows: usize, cols: usize) -> QMatrix {
    QMatrix::from_fn(rows, cols, |_, _| random_quaternion(rng))
}

/// A deterministic battery of ≥50 matrices with small components, mixing
/// generic, rank-deficient, nilpotent and Hermitian cases.
fn matrix_battery(rng: &mut ChaCha8Rng) -> Vec<QMatrix> {
    let mut out = Vec::new();
    let shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)];
    for round in 0..5 {
        for &(m, n) in &shapes {
            out.push(random_matrix(rng, m, n));
            if round % 2 == 0 {
                // rank-deficient: outer product of random vectors
                let col = random_matrix(rng, m, 1);
                let row = random_matrix(rng, 1, n);
                out.push(col.mul(&row).unwrap());
            }
        }
    }
    for n in [2usize, 3, 3] {
        // nilpotent: strictly upper triangular
        let full = random_matrix(rng, n, n);
        out.push(QMatrix::from_fn(n, n, |r, c| {
            if c > r {
                full.get(r, c).clone()
            } else {
                Quaternion::zero()
            }
        }));
        // Hermitian
        let p = random_matrix(rng, n, n);
        out.push(p.add(&p.conj_transpose()).unwrap());
    }
    out.push(QMatrix::zeros(2, 3));
    out.push(QMatrix::zeros(3, 3));
    out
}

#[test]
fn criterion4_axiom_suites() {
    let mut rng = ChaCha8Rng::seed_from_u64(41);
    let battery = matrix_battery(&mut rng);
    assert!(battery.len() >= 50, "battery too small: {}", battery.len());
    let mut drazin_cases = 0;
    for a in &battery {
        let mp = mp_inverse_with(a, MpRoute::Left, 8).unwrap().matrix;
        assert!(
            all_hold(&verify_penrose(a, &mp).unwrap()),
            "Penrose failed for {a:?}"
        );
        if a.is_square() {
            drazin_cases += 1;
            let dz = quatrix::inverse::drazin(a).unwrap().matrix;
            assert!(
                all_hold(&verify_drazin(a, &dz).unwrap()),
                "Drazin axioms failed for {a:?}"
            );
        }
    }
    // weighted pairs: A and a fresh compatible weight (plus degenerate ones)
    let mut wd_cases = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    let shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)];
    for round in 0..9 {
        for &(m, n) in &shapes {
            let a = random_matrix(&mut rng, m, n);
            let w = if round == 3 {
                QMatrix::zeros(n, m)
            } else if round == 4 {
                let col = random_matrix(&mut rng, n, 1);
                let row = random_matrix(&mut rng, 1, m);
                col.mul(&row).unwrap()
            } else {
                random_matrix(&mut rng, n, m)
            };
            let x = wdrazin_via_cline(&a, &w).unwrap();
            assert!(
                all_hold(&verify_wdrazin(&a, &w, &x).unwrap()),
                "weighted axioms failed for {a:?} with {w:?}"
            );
            wd_cases += 1;
        }
    }
    assert!(wd_cases >= 50 && drazin_cases >= 15);
    println!(
        "criterion 4: PASS ({} Penrose, {} Drazin, {} weighted cases, all residuals exactly zero)",
        battery.len(),
        drazin_cases,
        wd_cases
    );
}

// ---- criterion 5: route agreement ------------------------------------------

#[test]
fn criterion5_route_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    let shapes = [(2, 2), (2, 3), (3, 2), (3, 3), (3, 4), (4, 3)];
    let mut factored_exact = 0;
    let mut instances = 0;
    for round in 0..9 {
        for &(m, n) in &shapes {
            instances += 1;
            let a = random_matrix(&mut rng, m, n);
            let w = if round == 2 {
                let col = random_matrix(&mut rng, n, 1);
                let row = random_matrix(&mut rng, 1, m);
                col.mul(&row).unwrap()
            } else {
                random_matrix(&mut rng, n, m)
            };

            // Moore-Penrose: both expansion sides agree.
            let mp_l = mp_inverse_with(&a, MpRoute::Left, 8).unwrap().matrix;
            let mp_r = mp_inverse_with(&a, MpRoute::Right, 8).unwrap().matrix;
            assert_eq!(mp_l, mp_r);

            // Drazin of the two kernels: every route agrees.
            for kernel in [w.mul(&a).unwrap(), a.mul(&w).unwrap()] {
                let reference = drazin_via_mp(&kernel).unwrap();
                for route in [DrazinRoute::Cdet, DrazinRoute::Rdet, DrazinRoute::Composition] {
                    assert_eq!(drazin_with(&kernel, route, 8).unwrap().matrix, reference);
                }
                if kernel.is_hermitian() {
                    for route in [DrazinRoute::HermitianCdet, DrazinRoute::HermitianRdet] {
                        assert_eq!(drazin_with(&kernel, route, 8).unwrap().matrix, reference);
                    }
                }
            }

            // Weighted Drazin: all four entry-form variants on both sides,
            // the Cline oracle, and the Hermitian fast paths agree.
            let x = wdrazin_via_cline(&a, &w).unwrap();
            for l in [DetForm::Cdet, DetForm::Rdet] {
                for f in [DetForm::Cdet, DetForm::Rdet] {
                    assert_eq!(wdrazin_with(&a, &w, WdRoute::UDet(l, f), 8).unwrap().matrix, x);
                    assert_eq!(wdrazin_with(&a, &w, WdRoute::VDet(l, f), 8).unwrap().matrix, x);
                }
            }
            if a.mul(&w).unwrap().is_hermitian() {
                assert_eq!(wdrazin_with(&a, &w, WdRoute::HermitianAw, 8).unwrap().matrix, x);
            }
            if w.mul(&a).unwrap().is_hermitian() {
                assert_eq!(wdrazin_with(&a, &w, WdRoute::HermitianWa, 8).unwrap().matrix, x);
            }

            // Factored forms: exact projector identities always, equality
            // with the weighted inverse exactly when applicable.
            let f_left = wdrazin_with(&a, &w, WdRoute::FactoredLeft, 8).unwrap().matrix;
            let f_right = wdrazin_with(&a, &w, WdRoute::FactoredRight, 8).unwrap().matrix;
            let w_pinv = mp_inverse_with(&w, MpRoute::Left, 8).unwrap().matrix;
            assert_eq!(f_left, w_pinv.mul(&w).unwrap().mul(&x).unwrap());
            assert_eq!(f_right, x.mul(&w).unwrap().mul(&w_pinv).unwrap());
            let left_ok = w_pinv.mul(&w).unwrap().mul(&x).unwrap() == x;
            let right_ok = x.mul(&w).unwrap().mul(&w_pinv).unwrap() == x;
            assert_eq!(f_left == x, left_ok);
            assert_eq!(f_right == x, right_ok);
            if round == 0 {
                assert_eq!(factored_left_applicable(&a, &w).unwrap(), left_ok);
                assert_eq!(factored_right_applicable(&a, &w).unwrap(), right_ok);
            }
            if left_ok {
                factored_exact += 1;
            }
            if right_ok {
                factored_exact += 1;
            }
            // the Moore-Penrose composition pair coincides with the factored
            // determinantal forms identically
            let (mp_right_form, mp_left_form) = wdrazin_via_mp(&a, &w).unwrap();
            assert_eq!(mp_right_form, f_right);
            assert_eq!(mp_left_form, f_left);

            // Solver routes on a consistent constructed instance.
            let u = w.mul(&a).unwrap();
            let v = a.mul(&w).unwrap();
            let k = u.matrix_index().unwrap().max(v.matrix_index().unwrap());
            let y = random_matrix(&mut rng, n, 2);
            let d = u.pow(k).unwrap().mul(&y).unwrap();
            let reference = solve_left(&a, &w, &d, SolveRoute::Oracle, 8, false).unwrap();
            assert!(reference.consistent && reference.residual_zero);
            for route in [SolveRoute::DrazinProduct, SolveRoute::Auto] {
                let rep = solve_left(&a, &w, &d, route, 8, false).unwrap();
                assert_eq!(rep.x, reference.x);
                assert!(rep.residual_zero);
            }
            if left_ok {
                let rep = solve_left(&a, &w, &d, SolveRoute::Factored, 8, false).unwrap();
                assert_eq!(rep.x, reference.x);
            }
            if v.is_hermitian() && k > 0 {
                let rep = solve_left(&a, &w, &d, SolveRoute::Hermitian, 8, false).unwrap();
                assert_eq!(rep.x, reference.x);
            }
            let y2 = random_matrix(&mut rng, 2, m);
            let d2 = y2.mul(&v.pow(k).unwrap()).unwrap();
            let reference = solve_right(&d2, &a, &w, SolveRoute::Oracle, 8, false).unwrap();
            assert!(reference.consistent && reference.residual_zero);
            for route in [SolveRoute::DrazinProduct, SolveRoute::Auto] {
                let rep = solve_right(&d2, &a, &w, route, 8, false).unwrap();
                assert_eq!(rep.x, reference.x);
            }
            if right_ok {
                let rep = solve_right(&d2, &a, &w, SolveRoute::Factored, 8, false).unwrap();
                assert_eq!(rep.x, reference.x);
            }
        }
    }
    assert!(factored_exact > 0, "no instance exercised an exact factored form");
    println!(
        "criterion 5: PASS ({instances} instances; every applicable route agreed entrywise, \
         factored forms matched their projector identities everywhere and the weighted \
         inverse itself in {factored_exact} applicable cases)"
    );
}

#[test]
fn criterion5_two_sided_route_agreement() {
    let mut rng = ChaCha8Rng::seed_from_u64(51);
    let mut hermitian_cases = 0;
    for round in 0..12 {
        let (m, n, p, q) = (2, 3, 2, 3);
        let (a, w1, b, w2);
        if round % 2 == 0 {
            // build Hermitian kernels the way the worked example does:
            // reuse a conjugate-transpose-shaped weight
            let base_a = random_matrix(&mut rng, m, n);
            let base_b = random_matrix(&mut rng, p, q);
            a = base_a.clone();
            w1 = base_a.conj_transpose();
            b = base_b.clone();
            w2 = base_b.conj_transpose();
        } else {
            a = random_matrix(&mut rng, m, n);
            w1 = random_matrix(&mut rng, n, m);
            b = random_matrix(&mut rng, p, q);
            w2 = random_matrix(&mut rng, q, p);
        }
        let u1 = w1.mul(&a).unwrap();
        let v2 = b.mul(&w2).unwrap();
        let k1 = u1.matrix_index().unwrap().max(a.mul(&w1).unwrap().matrix_index().unwrap());
        let k2 = v2.matrix_index().unwrap().max(w2.mul(&b).unwrap().matrix_index().unwrap());
        // D = (W1·A)^{k1} · Z · (B·W2)^{k2} satisfies both range conditions
        let z = random_matrix(&mut rng, n, p);
        let d = u1.pow(k1).unwrap().mul(&z).unwrap().mul(&v2.pow(k2).unwrap()).unwrap();
        let reference =
            solve_two_sided(&a, &w1, &d, &b, &w2, SolveRoute::Oracle, 8, false).unwrap();
        assert!(reference.consistent, "constructed instance must be consistent");
        assert!(reference.residual_zero);
        let rep = solve_two_sided(&a, &w1, &d, &b, &w2, SolveRoute::DrazinProduct, 8, false).unwrap();
        assert_eq!(rep.x, reference.x);
        if a.mul(&w1).unwrap().is_hermitian() && w2.mul(&b).unwrap().is_hermitian() {
            hermitian_cases += 1;
            for route in [SolveRoute::Hermitian, SolveRoute::HermitianAlt] {
                let rep = solve_two_sided(&a, &w1, &d, &b, &w2, route, 8, false).unwrap();
                assert_eq!(rep.x, reference.x, "route {route:?}");
            }
        }
    }
    assert!(hermitian_cases >= 4);
    println!("criterion 5 (two-sided): PASS ({hermitian_cases} Hermitian-kernel cases)");
}

// ---- criterion 6: determinant calculus --------------------------------------

#[test]
fn criterion6_determinant_calculus() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 2..=4usize {
        for _ in 0..6 {
            let p = random_matrix(&mut rng, n, n);
            let h = p.add(&p.conj_transpose()).unwrap();
            // all 2n anchored determinants equal and real
            let d = hermitian_det(&h).unwrap();
            for idx in 0..n {
                let r = rdet(&h, idx).unwrap();
                let c = cdet(&h, idx).unwrap();
                assert!(r.is_real() && c.is_real());
                assert_eq!(r.re, d);
                assert_eq!(c.re, d);
            }
            // left row combination kills the anchored determinants
            let mut combo = vec![Quaternion::zero(); n];
            for src in 1..n {
                let c = random_quaternion(&mut rng);
                for t in 0..n {
                    combo[t] += &(&c * h.get(src, t));
                }
            }
            let replaced = h.replace_row(0, &combo).unwrap();
            assert!(rdet(&replaced, 0).unwrap().is_zero());
            assert!(cdet(&replaced, 0).unwrap().is_zero());
            // right column combination likewise
            let mut ccombo = vec![Quaternion::zero(); n];
            for src in 1..n {
                let c = random_quaternion(&mut rng);
                for t in 0..n {
                    ccombo[t] += &(h.get(t, src) * &c);
                }
            }
            let creplaced = h.replace_column(0, &ccombo).unwrap();
            assert!(cdet(&creplaced, 0).unwrap().is_zero());
            assert!(rdet(&creplaced, 0).unwrap().is_zero());
            // real embedding agrees with the classical determinant
            let real = QMatrix::from_fn(n, n, |r, c| {
                Quaternion::from_ints(
                    (r as i64 * 7 + c as i64 * 3) % 5 - 2 + ((r + c) % 2) as i64,
                    0,
                    0,
                    0,
                )
            });
            let classical = classical_det_oracle(&real).unwrap();
            for idx in 0..n {
                assert_eq!(rdet(&real, idx).unwrap(), Quaternion::from_rational(classical.clone()));
                assert_eq!(cdet(&real, idx).unwrap(), Quaternion::from_rational(classical.clone()));
            }
        }
    }
    // 2x2 closed forms
    let m = qmat(&["1+i ; 2-j", "k ; 3j"]);
    let (a, b, c, d) = (m.get(0, 0), m.get(0, 1), m.get(1, 0), m.get(1, 1));
    assert_eq!(rdet(&m, 0).unwrap(), &(a * d) - &(b * c));
    assert_eq!(cdet(&m, 0).unwrap(), &(d * a) - &(b * c));
    println!("criterion 6: PASS");
}

// ---- criterion 7: consistency gate ------------------------------------------

#[test]
fn criterion7_constructed_inconsistent_rejected() {
    let (a, w, _) = example1();
    // D built from a null vector of (WA)^k cannot lie in the right range
    let u = w.mul(&a).unwrap();
    let k = 2;
    let u_k = u.pow(k).unwrap();
    let z = u_k.right_null_vector().expect("singular kernel has a null vector");
    let z_col = QMatrix::from_fn(3, 1, |r, _| z[r].clone());
    assert!(u_k.mul(&z_col).unwrap().is_zero() && !z_col.is_zero());
    let d = QMatrix::from_fn(3, 2, |r, c| if c == 0 { z[r].clone() } else { Quaternion::zero() });
    let rep = solve_left(&a, &w, &d, SolveRoute::Auto, 8, true).unwrap();
    assert!(!rep.consistent, "null-vector RHS must be rejected");
    assert!(!rep.residual_zero);

    // CLI-level: exit code 2 and a printed nonzero residual
    let dir = std::env::temp_dir().join(format!("quatrix-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let d_path = dir.join("d_bad.mat");
    std::fs::write(&d_path, d.to_text(false)).unwrap();
    let out = bin()
        .args([
            "solve-left",
            &data("ex1_a.mat"),
            &data("ex1_w.mat"),
            d_path.to_str().unwrap(),
        ])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2), "expected exit code 2");
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("inconsistent"), "stderr: {stderr}");
    assert!(
        stderr.contains("residual"),
        "residual must be printed, stderr: {stderr}"
    );
    println!("criterion 7 (constructed inconsistent D rejected, exit 2): PASS");
}

/// Expected red: the first worked equation is inconsistent for its own
/// printed inputs (WAW has a zero third row), so an exact consistency gate
/// cannot accept it.
#[test]
fn criterion7_example1_accepted() {
    let out = bin()
        .args([
            "solve-left",
            &data("ex1_a.mat"),
            &data("ex1_w.mat"),
            &data("ex1_d.mat"),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "the worked left equation is inconsistent (residual rows [[0,0],[0,0],[-1,i]]); \
         an exact gate must reject it, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    println!("criterion 7 (first worked equation accepted): PASS");
}

/// Expected red: the second worked equation (even with the corrected
/// inputs) is inconsistent — D's first column lies outside the range of
/// W1·A·W1 — so an exact consistency gate cannot accept it either.
#[test]
fn criterion7_example2_accepted() {
    let out = bin()
        .args([
            "solve-two-sided",
            &data("ex2_a.mat"),
            &data("ex2_w1.mat"),
            &data("ex2_d.mat"),
            &data("ex2_b.mat"),
            &data("ex2_w2.mat"),
        ])
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(0),
        "the worked two-sided equation is inconsistent; an exact gate must \
         reject it, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    println!("criterion 7 (second worked equation accepted): PASS");
}
