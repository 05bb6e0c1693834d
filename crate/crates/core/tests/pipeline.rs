use proptest::prelude::*;
use syzcurve::arrangements::{make_generic_line, random_config, Arrangement, PointConfig};
use syzcurve::curve::{construct_curve, line_component_check};
use syzcurve::fatpoint::{fatpoint_dimension, fatpoint_dimension_local};
use syzcurve::splitting::{splitting_type, SplittingType};
use syzcurve::syzygy::restricted_syzygies;
use syzcurve::unexpected::{criterion_epsilon, criterion_simple};
use syzcurve::Error;

fn splitting() -> impl Strategy<Value = SplittingType> {
    (1u32..6).prop_flat_map(|k| {
        prop::collection::vec(0u32..12, k as usize + 1).prop_map(move |a| {
            let size = a.iter().sum::<u32>() as usize + (k * (k + 1) / 2) as usize;
            SplittingType::new(k, a, size).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn simple_criterion_implies_gap_criterion(st in splitting()) {
        let dec = st.epsilon_decomposition();
        for (i, &a) in st.exponents.iter().enumerate() {
            let j = dec.eps.iter().position(|&e| dec.base + e == a).unwrap();
            if criterion_simple(&st, i).unwrap() {
                prop_assert!(criterion_epsilon(&st, j).unwrap(), "{:?} i={}", st.exponents, i);
            }
        }
    }

    #[test]
    fn decomposition_round_trips(st in splitting()) {
        let dec = st.epsilon_decomposition();
        prop_assert_eq!(dec.exponents(), st.exponents.clone());
        prop_assert_eq!(dec.mult.iter().sum::<u32>(), st.k + 1);
        prop_assert!(dec.eps.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn predicted_dimension_is_convex(st in splitting()) {
        let d: Vec<i64> = (0..20).map(|j| st.predicted_dimension(j) as i64).collect();
        prop_assert!(d.windows(3).all(|w| w[2] - w[1] >= w[1] - w[0]));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn fat_point_routes_agree(seed in 0u64..1000, j in 0u32..4, t in 1u32..5) {
        let z = random_config(seed, 5, 5);
        let line = make_generic_line(&z, seed, 10).unwrap();
        let p = line.dual_point();
        prop_assert_eq!(fatpoint_dimension(&z, p, j, t), fatpoint_dimension_local(&z, p, j, t));
    }

    #[test]
    fn constructed_curves_are_certified(seed in 0u64..1000, size in 6usize..9) {
        let z = random_config(seed, size, 5);
        let arr = Arrangement::new(z.clone()).unwrap();
        let st = splitting_type(&z, 1, seed, 2).unwrap();
        let line = make_generic_line(&z, seed, 3).unwrap();
        let d = st.exponents[0];
        for s in restricted_syzygies(&arr, &line, 1, d).unwrap() {
            let r = match construct_curve(&arr, &line, &s) {
                Ok(r) => r,
                Err(Error::ZeroCurve) => continue,
                Err(e) => return Err(TestCaseError::fail(e.to_string())),
            };
            prop_assert!(r.mult_at_point + r.removed_degree >= d);
            prop_assert!(r.degree <= d + 1);
            prop_assert!(r.multiplicities.iter().all(|&m| m >= 1));
            prop_assert!(line_component_check(&r));
        }
    }
}

#[test]
fn points_file_round_trips() {
    for n in 3..=6 {
        let z = syzcurve::arrangements::fermat_dual(n).unwrap();
        assert_eq!(PointConfig::from_file(&z.to_file()).unwrap(), z);
    }
}

#[test]
fn duplicate_points_are_rejected() {
    let z = random_config(1, 4, 5);
    let mut pts = z.points().to_vec();
    pts.push(pts[0].clone());
    assert!(matches!(PointConfig::new(1, pts), Err(Error::DuplicatePoint(4))));
}
