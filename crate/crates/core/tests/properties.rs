use proptest::prelude::*;
use quadisc::closedform::{dispatch, tr_closed, tr_recurrence, TrParams};
use quadisc::instance::{random_instance, FamilyKind};
use quadisc::resultant::{
    discriminant_oracle, discriminant_oracle_with, resultant_prs, resultant_sylvester, OracleKind,
};
use quadisc::{GaussianRational as Q, Polynomial};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn gr() -> impl Strategy<Value = Q> {
    (-60i64..=60, 1i64..=12, -60i64..=60, 1i64..=12).prop_map(|(p, q, r, s)| Q::from_parts(p, q, r, s).unwrap())
}

fn nonzero() -> impl Strategy<Value = Q> {
    gr().prop_filter("nonzero", |v| !v.is_zero())
}

fn poly(max_deg: usize) -> impl Strategy<Value = Polynomial> {
    (prop::collection::vec(gr(), 0..=max_deg), nonzero()).prop_map(|(mut c, lead)| {
        c.push(lead);
        Polynomial::new(c)
    })
}

fn sign(e: usize) -> Q {
    if e % 2 == 0 {
        Q::one()
    } else {
        -Q::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in gr(), b in gr(), c in gr()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
        prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
        prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
        prop_assert_eq!(&a - &a, Q::zero());
        if !a.is_zero() {
            prop_assert_eq!(&a * &a.inv().unwrap(), Q::one());
            prop_assert_eq!((&b * &a).checked_div(&a).unwrap(), b.clone());
        }
        prop_assert_eq!(&a * &a.conj(), Q::from(a.re_num() * a.re_num() + a.im_num() * a.im_num()) / (Q::from(a.den().clone()) * Q::from(a.den().clone())));
    }

    #[test]
    fn normalized_text_round_trip(a in gr()) {
        let back: Q = a.to_string().parse().unwrap();
        prop_assert_eq!(&back, &a);
        let rebuilt = Q::new(a.re_num() * 7, a.im_num() * 7, a.den() * 7).unwrap();
        prop_assert_eq!(rebuilt, a);
    }

    #[test]
    fn pow_adds_exponents(a in nonzero(), j in 0u64..8, k in 0u64..8) {
        prop_assert_eq!(a.pow(j) * a.pow(k), a.pow(j + k));
        prop_assert_eq!(a.powi(-(j as i64)).unwrap() * a.pow(j), Q::one());
    }

    #[test]
    fn divmod_round_trip(f in poly(9), g in poly(5)) {
        let (q, r) = f.divmod(&g).unwrap();
        prop_assert_eq!(&(&q * &g) + &r, f);
        prop_assert!(r.degree().map_or(true, |d| d < g.degree().unwrap()));
    }

    #[test]
    fn derivative_rules(f in poly(6), g in poly(6), c in gr()) {
        prop_assert_eq!((&f + &g.scale(&c)).derivative(), &f.derivative() + &g.derivative().scale(&c));
        prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
    }

    #[test]
    fn text_round_trip(f in poly(7)) {
        let back: Polynomial = f.to_string().parse().unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn reciprocal_involution(f in poly(7), c in nonzero()) {
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = c;
        let f = Polynomial::new(coeffs);
        prop_assert_eq!(f.reciprocal().reciprocal(), f);
    }

    #[test]
    fn resultant_antisymmetry_and_prs(f in poly(5), g in poly(5)) {
        prop_assume!(f.degree().unwrap() + g.degree().unwrap() > 0);
        let (n, m) = (f.degree().unwrap(), g.degree().unwrap());
        let rfg = resultant_sylvester(&f, &g).unwrap();
        prop_assert_eq!(&rfg, &(sign(n * m) * resultant_sylvester(&g, &f).unwrap()));
        prop_assert_eq!(&rfg, &resultant_prs(&f, &g).unwrap());
    }

    #[test]
    fn resultant_multiplicative(f in poly(4), g in poly(4), h in poly(4)) {
        prop_assume!(h.degree().unwrap() > 0);
        prop_assert_eq!(
            resultant_sylvester(&(&f * &g), &h).unwrap(),
            resultant_sylvester(&f, &h).unwrap() * resultant_sylvester(&g, &h).unwrap()
        );
    }

    #[test]
    fn discriminant_of_reciprocal(f in poly(7), c in nonzero()) {
        prop_assume!(f.degree().unwrap() >= 1);
        let mut coeffs = f.coeffs().to_vec();
        coeffs[0] = c;
        let f = Polynomial::new(coeffs);
        prop_assert_eq!(
            discriminant_oracle(&f).unwrap().value,
            discriminant_oracle(&f.reciprocal()).unwrap().value
        );
        prop_assert_eq!(
            discriminant_oracle(&f).unwrap().value,
            discriminant_oracle_with(&f, OracleKind::Prs).unwrap().value
        );
    }

    #[test]
    fn root_product(lead in nonzero(), roots in prop::collection::vec(gr(), 1..5), g in poly(4)) {
        let f = roots.iter().fold(Polynomial::constant(lead.clone()), |acc, z| &acc * &Polynomial::new(vec![-z, Q::one()]));
        let m = g.degree().unwrap() as u64;
        let expected = lead.pow(m) * roots.iter().map(|z| g.eval(z)).product::<Q>();
        prop_assert_eq!(resultant_sylvester(&f, &g).unwrap(), expected);
    }

    #[test]
    fn discriminant_vanishes_on_square_factor(a in poly(3), b in poly(3)) {
        prop_assume!(a.degree().unwrap() >= 1);
        let f = &(&a * &a) * &b;
        prop_assert!(discriminant_oracle(&f).unwrap().value.is_zero());
        prop_assert!(dispatch(&f).unwrap().value.is_zero());
    }

    #[test]
    fn tr_closed_is_recurrence(b3 in nonzero(), b1 in gr(), b0 in gr(), r in 1u64..80) {
        let p = TrParams::new(b3, b1, b0).unwrap();
        prop_assert_eq!(tr_closed(&p, r).unwrap(), tr_recurrence(&p, r).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn every_family_matches_oracle(seed in any::<u64>(), which in 0usize..9, extra in 0i64..10) {
        let kind = FamilyKind::ALL[which];
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let inst = random_instance(kind, kind.min_n() + extra, &mut rng).unwrap();
        let oracle = inst.oracle().unwrap().value;
        prop_assert_eq!(&inst.formula().unwrap().value, &oracle, "{}", inst);
        let routed = dispatch(&inst.polynomial()).unwrap();
        prop_assert_eq!(&routed.value, &oracle);
    }

    #[test]
    fn dispatch_scales_non_monic(f in poly(6), lead in nonzero()) {
        prop_assume!(f.degree().unwrap() >= 1);
        let g = f.scale(&lead);
        prop_assert_eq!(dispatch(&g).unwrap().value, discriminant_oracle(&g).unwrap().value);
    }
}
