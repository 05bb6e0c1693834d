use proptest::prelude::*;
use syzcurve::forms::{multi_indices, BinaryForm, ProjPoint, TernaryForm};
use syzcurve::linalg::ExactMatrix;
use syzcurve::CycloScalar;

fn scalar(order: u32) -> impl Strategy<Value = CycloScalar> {
    let width = match order {
        3 | 4 => 2,
        5 => 4,
        _ => 1,
    };
    (prop::collection::vec(-20i64..=20, width), 1i64..=9).prop_map(move |(c, den)| {
        c.iter().enumerate().fold(CycloScalar::zero(order), |acc, (i, &v)| {
            &acc + &(&CycloScalar::zeta_power(order, i as i64) * &CycloScalar::from_ratio(1, v, den))
        })
    })
}

fn any_order() -> impl Strategy<Value = u32> {
    prop::sample::select(vec![1u32, 3, 4, 5])
}

fn ternary(degree: u32) -> impl Strategy<Value = TernaryForm> {
    let n = multi_indices(degree).len();
    prop::collection::vec(-6i64..=6, n).prop_map(move |c| {
        multi_indices(degree)
            .iter()
            .zip(c)
            .fold(TernaryForm::zero(degree), |acc, (m, v)| {
                let mono = TernaryForm::var(0)
                    .pow(m[0])
                    .mul(&TernaryForm::var(1).pow(m[1]))
                    .mul(&TernaryForm::var(2).pow(m[2]));
                acc.add(&mono.scale(&CycloScalar::from_int(1, v))).unwrap()
            })
    })
}

fn binary(degree: u32) -> impl Strategy<Value = BinaryForm> {
    prop::collection::vec(-6i64..=6, degree as usize + 1)
        .prop_map(|c| BinaryForm::from_coeffs(c.into_iter().map(|v| CycloScalar::from_int(1, v)).collect()))
}

proptest! {
    #[test]
    fn field_axioms((a, b, c) in any_order().prop_flat_map(|n| (scalar(n), scalar(n), scalar(n)))) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn norm_is_multiplicative((a, b) in any_order().prop_flat_map(|n| (scalar(n), scalar(n)))) {
        prop_assert_eq!((&a * &b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn display_round_trips(a in any_order().prop_flat_map(scalar)) {
        let back = CycloScalar::parse(&a.to_string(), a.order()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn euler_identity_for_forms(f in (1u32..5).prop_flat_map(ternary)) {
        let sum = (0..3).fold(TernaryForm::zero(f.degree()), |acc, v| {
            acc.add(&TernaryForm::var(v).mul(&f.differentiate(v))).unwrap()
        });
        prop_assert_eq!(sum, f.scale(&CycloScalar::from_int(1, f.degree() as i64)));
    }

    #[test]
    fn exact_division_inverts_product(f in ternary(2), g in ternary(3)) {
        prop_assume!(!f.is_zero());
        prop_assert_eq!(f.mul(&g).div_exact(&f), Some(g));
    }

    #[test]
    fn multiplicity_of_products_adds(f in ternary(2), g in ternary(2), p in (-4i64..=4, -4i64..=4, 1i64..=4)) {
        prop_assume!(!f.is_zero() && !g.is_zero());
        let p = ProjPoint::from_ints(p.0, p.1, p.2).unwrap();
        let m = f.mul(&g).multiplicity_at(&p).unwrap();
        prop_assert_eq!(m, f.multiplicity_at(&p).unwrap() + g.multiplicity_at(&p).unwrap());
    }

    #[test]
    fn binary_gcd_divides(a in binary(3), b in binary(2), c in binary(2)) {
        prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
        let g = a.mul(&b).gcd(&a.mul(&c)).unwrap();
        prop_assert!(g.degree() >= 3);
        prop_assert!(a.mul(&b).div_exact(&g).is_some());
        prop_assert!(a.mul(&c).div_exact(&g).is_some());
    }

    #[test]
    fn rank_nullity(rows in prop::collection::vec(prop::collection::vec(-3i64..=3, 5), 1..7)) {
        let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        let m = ExactMatrix::from_ints(&refs);
        let kernel = m.kernel_basis();
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        prop_assert_eq!(m.rank(), m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| x.is_zero()));
        }
    }
}
