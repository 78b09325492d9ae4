mod common;

use common::{matmul, riordan_matrix, small_rat, triangle_inverse};
use lbp_core::rat::{rat, Rat};
use lbp_core::series::{RatFunc, Series};
use lbp_core::{RiordanArray, RiordanError, Triangle};
use num_traits::{One, Zero};
use proptest::collection::vec;
use proptest::prelude::*;

const ORDER: usize = 12;

/// Normalized rational generators `g = (1 + a x)/(1 + b x + c x^2)` and
/// `f = x (1 + d x)/(1 + e x)`.
fn rational_array() -> impl Strategy<Value = RiordanArray> {
    (small_rat(), small_rat(), small_rat(), small_rat(), small_rat()).prop_map(|(a, b, c, d, e)| {
        let g = RatFunc::from_rats(&[Rat::one(), a], &[Rat::one(), b, c]).unwrap();
        let f = RatFunc::from_rats(&[Rat::zero(), Rat::one(), d], &[Rat::one(), e]).unwrap();
        RiordanArray::make(g, f, ORDER).unwrap()
    })
}

/// Arrays given by raw truncated series with small integer coefficients.
fn series_array() -> impl Strategy<Value = RiordanArray> {
    (vec(-3i64..=3, ORDER - 1), vec(-3i64..=3, ORDER - 2)).prop_map(|(g_rest, f_rest)| {
        let mut g = vec![rat(1)];
        g.extend(g_rest.into_iter().map(rat));
        let mut f = vec![rat(0), rat(1)];
        f.extend(f_rest.into_iter().map(rat));
        RiordanArray::make(Series::new(g).unwrap(), Series::new(f).unwrap(), ORDER).unwrap()
    })
}

fn any_array() -> impl Strategy<Value = RiordanArray> {
    prop_oneof![rational_array(), series_array()]
}

fn square(t: &Triangle) -> Vec<Vec<Rat>> {
    t.to_square()
}

fn generator_coeffs(a: &RiordanArray) -> (Vec<Rat>, Vec<Rat>) {
    (
        a.g().expand(ORDER).unwrap().into_coeffs(),
        a.f().expand(ORDER).unwrap().into_coeffs(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn triangle_matches_definition(a in any_array()) {
        let (g, f) = generator_coeffs(&a);
        let t = a.triangle().unwrap();
        prop_assert_eq!(&t, &riordan_matrix(&g, &f, ORDER));
        prop_assert!(t.has_unit_diagonal());
    }

    #[test]
    fn product_is_matrix_product(a in any_array(), b in any_array()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(ab.order(), ORDER);
        let lhs = square(&ab.triangle().unwrap());
        let rhs = matmul(&square(&a.triangle().unwrap()), &square(&b.triangle().unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn product_is_associative(a in rational_array(), b in rational_array(), c in any_array()) {
        let left = a.mul(&b).unwrap().mul(&c).unwrap().triangle().unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap().triangle().unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn identity_is_neutral(a in any_array()) {
        let id = RiordanArray::identity(ORDER).unwrap();
        let t = a.triangle().unwrap();
        prop_assert_eq!(&id.mul(&a).unwrap().triangle().unwrap(), &t);
        prop_assert_eq!(&a.mul(&id).unwrap().triangle().unwrap(), &t);
    }

    #[test]
    fn inverse_is_matrix_inverse(a in any_array()) {
        let t = a.triangle().unwrap();
        let inv = a.inv().unwrap();
        let ti = inv.triangle().unwrap();
        prop_assert_eq!(&ti, &triangle_inverse(&t));
        prop_assert_eq!(ti.mul(&t), Triangle::identity(ORDER));
        prop_assert_eq!(a.mul(&inv).unwrap().triangle().unwrap(), Triangle::identity(ORDER));
    }

    #[test]
    fn a_and_z_recurrences(a in any_array()) {
        let t = a.triangle().unwrap();
        let seq = a.sequences(ORDER - 1).unwrap();
        prop_assert!(seq.a[0].is_one());
        for n in 0..ORDER - 1 {
            let first: Rat = (0..=n).map(|j| &seq.z[j] * t.get(n, j)).sum();
            prop_assert_eq!(t.get(n + 1, 0), first);
            for k in 0..=n {
                let entry: Rat = (0..=n - k).map(|j| &seq.a[j] * t.get(n, k + j)).sum();
                prop_assert_eq!(t.get(n + 1, k + 1), entry);
            }
        }
    }

    #[test]
    fn production_matrix_solves_shift(a in any_array()) {
        // T_{n+1} without its first row equals T_n P_n on the leading block.
        let n = ORDER - 1;
        let t = square(&a.triangle().unwrap());
        let p = a.production_matrix(n).unwrap();
        let lower: Vec<Vec<Rat>> = (0..n).map(|i| t[i].iter().take(n).cloned().collect()).collect();
        let shifted: Vec<Vec<Rat>> = (1..=n).map(|i| t[i].iter().take(n).cloned().collect()).collect();
        prop_assert_eq!(matmul(&lower, p.entries()), shifted);
        for i in 0..n {
            if i + 1 < n {
                prop_assert!(p.get(i, i + 1).is_one());
            }
            for j in i + 2..n {
                prop_assert!(p.get(i, j).is_zero());
            }
        }
    }

    #[test]
    fn action_is_matrix_times_vector(a in any_array(), s in vec(-4i64..=4, ORDER)) {
        let input = Series::from_ints(&s).unwrap();
        let out = a.act(&input).unwrap();
        let t = a.triangle().unwrap();
        for n in 0..ORDER {
            let expected: Rat = (0..=n).map(|k| t.get(n, k) * rat(s[k])).sum();
            prop_assert_eq!(&out.coeffs()[n], &expected);
        }
    }
}

#[test]
fn binomial_powers_compose() {
    let b2 = RiordanArray::binomial_power(&rat(2), 8).unwrap();
    let b3 = RiordanArray::binomial_power(&rat(-3), 8).unwrap();
    let b_minus_one = RiordanArray::binomial_power(&rat(-1), 8).unwrap();
    assert_eq!(b2.mul(&b3).unwrap().triangle().unwrap(), b_minus_one.triangle().unwrap());
    let b1 = RiordanArray::binomial_power(&rat(1), 5).unwrap().triangle().unwrap();
    assert_eq!(b1.row(4), lbp_core::rat::rats(&[1, 4, 6, 4, 1]).as_slice());
}

#[test]
fn validation_names_the_broken_condition() {
    let one = RatFunc::from_ints(&[1], &[1]).unwrap();
    let x = RatFunc::from_ints(&[0, 1], &[1]).unwrap();
    let two = RatFunc::from_ints(&[2], &[1]).unwrap();
    let shifted = RatFunc::from_ints(&[1, 1], &[1]).unwrap();
    let steep = RatFunc::from_ints(&[0, 2], &[1]).unwrap();
    assert!(matches!(RiordanArray::make(two, x.clone(), 4), Err(RiordanError::GConstant(_))));
    assert!(matches!(RiordanArray::make(one.clone(), shifted, 4), Err(RiordanError::FConstant(_))));
    assert!(matches!(RiordanArray::make(one.clone(), steep, 4), Err(RiordanError::FLinear(_))));
    assert!(matches!(RiordanArray::make(one, x, 0), Err(RiordanError::ZeroOrder)));
}
