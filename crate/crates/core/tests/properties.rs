//! Property-based invariants of the scalar algebra, the rank machinery and
//! the determinant calculus.

use num::{BigInt, BigRational};
use proptest::prelude::*;

use quatrix::det::{cdet, hermitian_det, rdet};
use quatrix::matrix::QMatrix;
use quatrix::quaternion::{Quaternion, Rational};
use quatrix::verify::classical_det_oracle;

fn rat(n: i64) -> Rational {
    BigRational::from_integer(BigInt::from(n))
}

fn arb_quaternion() -> impl Strategy<Value = Quaternion> {
    (-3i64..=3, -3i64..=3, -3i64..=3, -3i64..=3)
        .prop_map(|(a, b, c, d)| Quaternion::from_ints(a, b, c, d))
}

fn arb_matrix(rows: usize, cols: usize) -> impl Strategy<Value = QMatrix> {
    proptest::collection::vec(arb_quaternion(), rows * cols).prop_map(move |data| {
        let mut it = data.into_iter();
        QMatrix::from_fn(rows, cols, |_, _| it.next().unwrap())
    })
}

fn arb_square(max_n: usize) -> impl Strategy<Value = QMatrix> {
    (1..=max_n).prop_flat_map(|n| arb_matrix(n, n))
}

fn arb_hermitian(max_n: usize) -> impl Strategy<Value = QMatrix> {
    // P + P* is Hermitian with the same entry range flavor.
    arb_square(max_n).prop_map(|p| p.add(&p.conj_transpose()).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn quaternion_ring_laws(a in arb_quaternion(), b in arb_quaternion(), c in arb_quaternion()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!((&a * &b).conj(), &b.conj() * &a.conj());
        prop_assert_eq!((&a * &b).norm_sq(), a.norm_sq() * b.norm_sq());
        if !a.is_zero() {
            let inv = a.inv().unwrap();
            prop_assert!((&a * &inv).is_one());
            prop_assert!((&inv * &a).is_one());
        }
    }

    #[test]
    fn quaternion_text_round_trip(a in arb_quaternion()) {
        let parsed: Quaternion = a.to_text(false).parse().unwrap();
        prop_assert_eq!(parsed, a.clone());
        let parsed_dec: Quaternion = a.to_text(true).parse().unwrap();
        prop_assert_eq!(parsed_dec, a);
    }

    #[test]
    fn matrix_text_round_trip(m in arb_matrix(3, 4)) {
        prop_assert_eq!(QMatrix::from_text(&m.to_text(false)).unwrap(), m.clone());
        prop_assert_eq!(QMatrix::from_text(&m.to_text(true)).unwrap(), m);
    }

    #[test]
    fn rank_properties(m in arb_matrix(3, 4), n in arb_matrix(4, 3)) {
        prop_assert_eq!(m.rank(), m.conj_transpose().rank());
        let prod = m.mul(&n).unwrap();
        prop_assert!(prod.rank() <= m.rank().min(n.rank()));
        let gram = m.mul(&m.conj_transpose()).unwrap();
        prop_assert!(gram.is_hermitian());
        prop_assert!(m.conj_transpose().mul(&m).unwrap().is_hermitian());
    }

    #[test]
    fn adjoint_of_product(m in arb_matrix(3, 3), n in arb_matrix(3, 3)) {
        let lhs = m.mul(&n).unwrap().conj_transpose();
        let rhs = n.conj_transpose().mul(&m.conj_transpose()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn matrix_index_stabilizes(m in arb_square(3)) {
        let k = m.matrix_index().unwrap();
        let rk = m.pow(k).unwrap().rank();
        for extra in 1..=3usize {
            prop_assert_eq!(m.pow(k + extra).unwrap().rank(), rk);
        }
    }

    #[test]
    fn hermitian_all_dets_equal_and_real(m in arb_hermitian(4)) {
        let d = hermitian_det(&m).unwrap();
        for idx in 0..m.rows() {
            let r = rdet(&m, idx).unwrap();
            let c = cdet(&m, idx).unwrap();
            prop_assert!(r.is_real());
            prop_assert!(c.is_real());
            prop_assert_eq!(r.re, d.clone());
            prop_assert_eq!(c.re, d.clone());
        }
    }

    #[test]
    fn row_combination_kills_anchored_dets(
        m in arb_hermitian(4),
        coeffs in proptest::collection::vec(arb_quaternion(), 4),
    ) {
        // replace row 0 by a left combination of the other rows
        let n = m.rows();
        if n >= 2 {
            let mut combo = vec![Quaternion::zero(); n];
            for (src, c) in (1..n).zip(coeffs.iter()) {
                for t in 0..n {
                    combo[t] += &(c * m.get(src, t));
                }
            }
            let replaced = m.replace_row(0, &combo).unwrap();
            prop_assert!(rdet(&replaced, 0).unwrap().is_zero());
            prop_assert!(cdet(&replaced, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn column_combination_kills_anchored_dets(
        m in arb_hermitian(4),
        coeffs in proptest::collection::vec(arb_quaternion(), 4),
    ) {
        // replace column 0 by a right combination of the other columns
        let n = m.rows();
        if n >= 2 {
            let mut combo = vec![Quaternion::zero(); n];
            for (src, c) in (1..n).zip(coeffs.iter()) {
                for t in 0..n {
                    combo[t] += &(m.get(t, src) * c);
                }
            }
            let replaced = m.replace_column(0, &combo).unwrap();
            prop_assert!(cdet(&replaced, 0).unwrap().is_zero());
            prop_assert!(rdet(&replaced, 0).unwrap().is_zero());
        }
    }

    #[test]
    fn real_embedding(n in 1usize..=4, seed in proptest::collection::vec(-9i64..=9, 16)) {
        let m = QMatrix::from_fn(n, n, |r, c| {
            Quaternion::from_rational(rat(seed[r * 4 + c]))
        });
        let classical = classical_det_oracle(&m).unwrap();
        for idx in 0..n {
            prop_assert_eq!(rdet(&m, idx).unwrap(), Quaternion::from_rational(classical.clone()));
            prop_assert_eq!(cdet(&m, idx).unwrap(), Quaternion::from_rational(classical.clone()));
        }
    }

    #[test]
    fn complex_embedding(n in 1usize..=4, seed in proptest::collection::vec((-4i64..=4, -4i64..=4), 16)) {
        // entries in span{1, i} commute; every anchored determinant equals
        // the classical complex determinant computed by cofactor expansion
        let m = QMatrix::from_fn(n, n, |r, c| {
            let (re, im) = seed[r * 4 + c];
            Quaternion::from_ints(re, im, 0, 0)
        });
        let classical = complex_cofactor_det(&m);
        for idx in 0..n {
            prop_assert_eq!(rdet(&m, idx).unwrap(), classical.clone());
            prop_assert_eq!(cdet(&m, idx).unwrap(), classical.clone());
        }
    }

    #[test]
    fn two_by_two_closed_form(a in arb_quaternion(), b in arb_quaternion(),
                              c in arb_quaternion(), d in arb_quaternion()) {
        let m = QMatrix::from_fn(2, 2, |r, s| match (r, s) {
            (0, 0) => a.clone(),
            (0, 1) => b.clone(),
            (1, 0) => c.clone(),
            _ => d.clone(),
        });
        prop_assert_eq!(rdet(&m, 0).unwrap(), &(&a * &d) - &(&b * &c));
        prop_assert_eq!(cdet(&m, 0).unwrap(), &(&d * &a) - &(&b * &c));
    }
}

/// Independent complex determinant: cofactor expansion in the commutative
/// subfield span{1, i}, kept deliberately separate from the engine.
fn complex_cofactor_det(m: &QMatrix) -> Quaternion {
    assert!(m.is_complex());
    let n = m.rows();
    if n == 0 {
        return Quaternion::one();
    }
    if n == 1 {
        return m.get(0, 0).clone();
    }
    let mut acc = Quaternion::zero();
    for c in 0..n {
        let pivot = m.get(0, c);
        if pivot.is_zero() {
            continue;
        }
        let rows: Vec<usize> = (1..n).collect();
        let cols: Vec<usize> = (0..n).filter(|&cc| cc != c).collect();
        let minor = complex_cofactor_det(&m.submatrix(&rows, &cols));
        let term = pivot * &minor;
        if c % 2 == 0 {
            acc += &term;
        } else {
            acc -= &term;
        }
    }
    acc
}
