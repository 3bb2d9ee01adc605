mod common;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

use spherical_pi::linalg::{hnf, snf, solve_in_lattice, Matrix};
use spherical_pi::{Int, IntMatrix};

fn matrix_strategy(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(move |(r, c)| {
        prop::collection::vec(-bound..=bound, r * c).prop_map(move |v| {
            IntMatrix::new(r, c, v.into_iter().map(Int::from).collect()).unwrap()
        })
    })
}

fn is_diagonal(m: &IntMatrix) -> bool {
    (0..m.rows()).all(|i| (0..m.cols()).all(|j| i == j || m[(i, j)].is_zero()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn snf_certificates(m in matrix_strategy(8, 50)) {
        let r = snf(&m);
        prop_assert_eq!(r.u.mul(&m).mul(&r.v), r.s.clone());
        prop_assert!(r.u.det().unwrap().abs().is_one());
        prop_assert!(r.v.det().unwrap().abs().is_one());
        prop_assert!(is_diagonal(&r.s));
        let d = r.elementary_divisors();
        prop_assert!(d.iter().all(|x| x.is_positive()));
        prop_assert!(d.windows(2).all(|w| w[1].is_multiple_of(&w[0])));
        for i in r.rank..m.rows().min(m.cols()) {
            prop_assert!(r.s[(i, i)].is_zero());
        }
    }

    #[test]
    fn snf_products_are_minor_gcds(m in matrix_strategy(5, 12)) {
        let d = snf(&m).elementary_divisors();
        for t in 1..=3.min(m.rows()).min(m.cols()) {
            let product: Int = d.iter().take(t).product();
            let expected = if t <= d.len() { product } else { Int::zero() };
            prop_assert_eq!(common::gcd_of_minors(&m, t), expected, "t = {}", t);
        }
    }

    #[test]
    fn snf_invariant_under_permutations(m in matrix_strategy(6, 20), seed in any::<u64>()) {
        let mut rows: Vec<usize> = (0..m.rows()).collect();
        let mut cols: Vec<usize> = (0..m.cols()).collect();
        // cheap deterministic shuffle
        let mut s = seed;
        for v in [&mut rows, &mut cols] {
            for i in (1..v.len()).rev() {
                s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                v.swap(i, (s >> 33) as usize % (i + 1));
            }
        }
        let permuted = m.select_rows(rows).select_columns(cols);
        prop_assert_eq!(snf(&m).s, snf(&permuted).s);
    }

    #[test]
    fn hnf_certificates_and_shape(m in matrix_strategy(7, 30)) {
        let r = hnf(&m);
        prop_assert_eq!(m.mul(&r.u), r.h.clone());
        prop_assert!(r.u.det().unwrap().abs().is_one());
        let mut last_row = None;
        for (k, &i) in r.pivot_rows.iter().enumerate() {
            if let Some(prev) = last_row {
                prop_assert!(i > prev);
            }
            last_row = Some(i);
            let pivot = &r.h[(i, k)];
            prop_assert!(pivot.is_positive());
            for j in 0..m.cols() {
                let e = &r.h[(i, j)];
                if j < k {
                    prop_assert!(!e.is_negative() && e < pivot);
                } else if j > k {
                    prop_assert!(e.is_zero());
                }
            }
            // nothing above the pivot
            for above in 0..i {
                prop_assert!(r.h[(above, k)].is_zero());
            }
        }
        for j in r.rank()..m.cols() {
            prop_assert!(r.h.column(j).iter().all(Zero::is_zero));
        }
        prop_assert!(m.mul(&r.kernel()).is_zero());
    }

    #[test]
    fn hnf_and_input_span_the_same_columns(m in matrix_strategy(6, 20)) {
        let image = hnf(&m).image();
        for c in m.column_vecs() {
            prop_assert!(solve_in_lattice(&image, &c).unwrap().is_some());
        }
        for c in image.column_vecs() {
            prop_assert!(solve_in_lattice(&m, &c).unwrap().is_some());
        }
    }

    #[test]
    fn solve_finds_exactly_the_lattice_points(m in matrix_strategy(5, 10), x in prop::collection::vec(-5i64..=5, 5)) {
        let x: Vec<Int> = x.into_iter().take(m.cols()).map(Int::from).collect();
        prop_assume!(x.len() == m.cols());
        let b = m.mul_vec(&x).unwrap();
        let found = solve_in_lattice(&m, &b).unwrap().expect("b is in the span");
        prop_assert_eq!(m.mul_vec(&found).unwrap(), b);
    }

    #[test]
    fn fixed_width_agrees_with_bigint(m in matrix_strategy(4, 9)) {
        let small: Matrix<i128> = Matrix::new(
            m.rows(),
            m.cols(),
            m.entries().iter().map(|x| i128::try_from(x).unwrap()).collect(),
        ).unwrap();
        let a: Vec<Int> = snf(&small).elementary_divisors().into_iter().map(Int::from).collect();
        prop_assert_eq!(a, snf(&m).elementary_divisors());
    }
}

#[test]
fn intermediate_growth_stays_exact() {
    // Entries far beyond 64 bits go through unchanged.
    let big: Int = "340282366920938463463374607431768211457".parse().unwrap();
    let m = IntMatrix::from_rows(
        2,
        vec![
            vec![big.clone(), Int::from(3)],
            vec![Int::from(6), big.clone() * Int::from(2)],
        ],
    )
    .unwrap();
    let r = snf(&m);
    assert_eq!(r.u.mul(&m).mul(&r.v), r.s);
    let d = r.elementary_divisors();
    assert_eq!(d.iter().product::<Int>(), m.det().unwrap().abs());
}
