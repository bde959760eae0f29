use proptest::prelude::*;

use super::*;
use crate::semiring::Weight;

const NEG: Weight = Weight::BOTTOM;

fn entry() -> impl Strategy<Value = Weight> {
    prop_oneof![1 => Just(NEG), 3 => (-6i128..=6).prop_map(Weight::Finite)]
}

fn matrix(m: usize, n: usize) -> impl Strategy<Value = TropMatrix> {
    proptest::collection::vec(entry(), m * n).prop_map(move |d| Matrix::new(m, n, d).unwrap())
}

fn vector(n: usize) -> impl Strategy<Value = Vec<Weight>> {
    proptest::collection::vec(entry(), n)
}

fn finite_vector(n: usize) -> impl Strategy<Value = Vec<Weight>> {
    proptest::collection::vec((-9i128..=9).prop_map(Weight::Finite), n)
}

fn shapes() -> impl Strategy<Value = (usize, usize)> {
    (1usize..=4, 1usize..=4)
}

fn le(x: &[Weight], y: &[Weight]) -> bool {
    x.iter().zip(y).all(|(a, b)| a <= b)
}

fn dist(x: &[Weight], y: &[Weight]) -> i128 {
    x.iter()
        .zip(y)
        .map(|(a, b)| (a.finite().unwrap() - b.finite().unwrap()).abs())
        .max()
        .unwrap_or(0)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn galois_connection(
        (a, x, y) in shapes().prop_flat_map(|(m, n)| (matrix(m, n), vector(n), vector(m)))
    ) {
        let ext: Vec<Extended> = y.iter().map(|&v| v.into()).collect();
        let res = residual_apply(&a, &ext).unwrap();
        let x_ext: Vec<Extended> = x.iter().map(|&v| v.into()).collect();
        let lhs = le(&matvec(&a, &x).unwrap(), &y);
        let rhs = x_ext.iter().zip(&res).all(|(p, q)| p <= q);
        prop_assert_eq!(lhs, rhs);
        // x <= A^#(Ax)
        let ax: Vec<Extended> = matvec(&a, &x).unwrap().into_iter().map(Extended::from).collect();
        let back = residual_apply(&a, &ax).unwrap();
        prop_assert!(x_ext.iter().zip(&back).all(|(p, q)| p <= q));
    }

    #[test]
    fn operator_is_monotone_homogeneous_nonexpansive(
        (a, b, x, y, lambda) in shapes().prop_flat_map(|(m, n)| {
            (matrix(m, n), matrix(m, n), finite_vector(n), finite_vector(n), -20i128..=20)
        })
    ) {
        let op = enforce_assumptions(&a, &b).unwrap();
        let x = op.elimination().restrict(&x);
        let y = op.elimination().restrict(&y);
        let fx = op.apply(&x).unwrap();
        let fy = op.apply(&y).unwrap();
        let shifted: Vec<Weight> = x.iter().map(|v| v.shift(lambda)).collect();
        let f_shifted = op.apply(&shifted).unwrap();
        prop_assert_eq!(f_shifted, fx.iter().map(|v| v.shift(lambda)).collect::<Vec<_>>());
        prop_assert!(fx.iter().all(|v| v.is_finite()));
        prop_assert!(dist(&fx, &fy) <= dist(&x, &y));
        let meet: Vec<Weight> = x.iter().zip(&y).map(|(p, q)| *p.min(q)).collect();
        prop_assert!(le(&op.apply(&meet).unwrap(), &fx));
    }

    #[test]
    fn elimination_preserves_solutions(
        (a, b) in (1usize..=4, 1usize..=3).prop_flat_map(|(m, n)| (matrix(m, n), matrix(m, n)))
    ) {
        let original = MinMaxOperator::new(a.clone(), b.clone()).unwrap();
        let reduced = enforce_assumptions(&a, &b).unwrap();
        let values: Vec<Weight> = std::iter::once(NEG).chain((-3..=3).map(Weight::Finite)).collect();
        let n = a.cols();
        let mut x = vec![NEG; n];
        let total = values.len().pow(n as u32);
        for code in 0..total {
            let mut c = code;
            for slot in x.iter_mut() {
                *slot = values[c % values.len()];
                c /= values.len();
            }
            let forced_ok = reduced.elimination().forced().iter().all(|&j| x[j].is_bottom());
            let reduced_ok = forced_ok
                && reduced.satisfies(&reduced.elimination().restrict(&x)).unwrap();
            prop_assert_eq!(original.satisfies(&x).unwrap(), reduced_ok, "x = {:?}", x);
        }
    }
}
