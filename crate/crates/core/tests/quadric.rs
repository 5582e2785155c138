mod common;

use common::s;
use proptest::prelude::*;
use tropleg_core::contact::{general_contact_eval, ContactForm, ParametrizedCurve};
use tropleg_core::quadric::*;
use tropleg_core::{Poly, PrimeField, Scalar};

fn poly(c: &[i64]) -> Poly<Scalar> {
    Poly::from_coeffs(c.iter().map(|&n| s(n)).collect())
}

fn legendrian(f: &ContactForm, curve: &ParametrizedCurve<Scalar>) -> bool {
    num_traits::Zero::is_zero(&general_contact_eval(f, curve))
}

#[test]
fn power_form_with_exponents_one_two() {
    let f = ContactForm::from_ints([3, 0, 0, 0, 0, 1]);
    let c = classify_quadric_curve(&f).unwrap();
    assert_eq!(c.form, Some(StandardForm::Power));
    assert_eq!(c.form.unwrap().index(), 2);
    assert_eq!(c.exponents, Some((1, 2)));
    assert_eq!(c.algebraicity, Algebraicity::Algebraic);
    // mu' = -2 mu, nu' = -4 nu: nu = mu^2 is an integral curve
    let curve = lift_to_quadric(&poly(&[0, 1]), &poly(&[0, 0, 1]));
    assert!(legendrian(&f, &curve));
}

#[test]
fn degenerate_forms_are_rejected() {
    for f in [
        [0, 0, 0, 0, 0, 0],
        [0, 0, 0, 2, 3, 0],
        [0, 1, 1, 0, 0, 0],
        [0, 1, 1, 1, -1, 0],
    ] {
        assert_eq!(
            classify_quadric_curve(&ContactForm::from_ints(f)),
            Err(QuadricError::NotContact)
        );
    }
}

#[test]
fn mixed_square_and_pure_square_is_not_algebraic() {
    let f = ContactForm::from_ints([0, 1, 1, 0, -1, 0]);
    let c = classify_quadric_curve(&f).unwrap();
    assert_eq!(c.form, None);
    assert_eq!(c.algebraicity, Algebraicity::NonAlgebraic);
}

#[test]
fn positive_characteristic_is_inconclusive() {
    let k = PrimeField::new(101).unwrap();
    let f = ContactForm::new([3, 0, 0, 0, 0, 1].map(|n| k.element(n)));
    let c = classify_quadric_curve(&f).unwrap();
    assert_eq!(c.form, Some(StandardForm::Power));
    assert_eq!(c.algebraicity, Algebraicity::Inconclusive);
}

#[test]
fn every_standard_form_has_an_equation() {
    let forms = [
        StandardForm::MobiusBoth,
        StandardForm::Power,
        StandardForm::MobiusNuPowerMu,
        StandardForm::MobiusMuPowerNu,
        StandardForm::Bilinear,
        StandardForm::Linear,
        StandardForm::BilinearMu,
        StandardForm::BilinearNu,
        StandardForm::MuConstant,
        StandardForm::NuConstant,
    ];
    for (i, f) in forms.iter().enumerate() {
        assert_eq!(f.index(), i + 1);
        assert!(!f.equation().is_empty());
    }
}

#[test]
fn square_minus_one_on_both_rulings() {
    // mu' = mu^2 - 1, nu' = nu^2 - 4: discriminants 4 and 16, exponent ratio 1/2
    let f = ContactForm::from_ints([0, 1, 1, 4, -1, 0]);
    let c = classify_quadric_curve(&f).unwrap();
    assert_eq!(c.mu.tag, NormalTag::SquareMinusOne);
    assert_eq!(c.nu.tag, NormalTag::SquareMinusOne);
    assert_eq!(c.form, Some(StandardForm::MobiusBoth));
    assert_eq!(c.exponents, Some((1, 2)));
    assert_eq!(c.algebraicity, Algebraicity::Algebraic);
}

#[test]
fn mu_constant_form() {
    let f = ContactForm::from_ints([1, 0, 0, 1, 0, 1]);
    let c = classify_quadric_curve(&f).unwrap();
    assert_eq!(c.form, Some(StandardForm::MuConstant));
    // mu fixed at any value, nu free
    let curve = lift_to_quadric(&poly(&[7]), &poly(&[0, 1]));
    assert!(legendrian(&f, &curve));
}

proptest! {
    #[test]
    fn monomial_pairs_are_power_curves(k1 in 1i64..6, k2 in 1i64..6, lam in 1i64..5, neg in any::<bool>()) {
        prop_assume!(k1 != k2);
        let lam = if neg { -lam } else { lam };
        // mu' = 2 k1 lam mu, nu' = 2 k2 lam nu
        let f = ContactForm::from_ints([-(k1 + k2) * lam, 0, 0, 0, 0, (k1 - k2) * lam]);
        let c = classify_quadric_curve(&f).unwrap();
        prop_assert_eq!(c.form, Some(StandardForm::Power));
        let (d1, d2) = c.exponents.unwrap();
        prop_assert_eq!(d1 as i64 * k2, d2 as i64 * k1);
        let curve = lift_to_quadric(&Poly::monomial(s(1), k1 as usize), &Poly::monomial(s(1), k2 as usize));
        prop_assert!(legendrian(&f, &curve));
    }

    #[test]
    fn classification_is_invariant_under_scaling(
        p in -4i64..4, qq in -4i64..4, r in -4i64..4, a in -4i64..4, b in -4i64..4, c in -4i64..4,
        lam in 1i64..6,
    ) {
        prop_assume!(p * c + qq * b + r * a != 0);
        let coeffs = [p, qq, r, a, b, c].map(s);
        let f = ContactForm::new(coeffs.clone());
        let g = ContactForm::new(coeffs.map(|x| &x * &s(lam)));
        let (cf, cg) = (classify_quadric_curve(&f).unwrap(), classify_quadric_curve(&g).unwrap());
        prop_assert_eq!(cf.form, cg.form);
        prop_assert_eq!(cf.exponents, cg.exponents);
        prop_assert_eq!(cf.algebraicity, cg.algebraicity);
    }

    #[test]
    fn discriminants_differ_by_the_contact_invariant(
        p in -6i64..6, qq in -6i64..6, r in -6i64..6, a in -6i64..6, b in -6i64..6, c in -6i64..6,
    ) {
        prop_assume!(p * c + qq * b + r * a != 0);
        let k = classify_quadric_curve(&ContactForm::from_ints([p, qq, r, a, b, c])).unwrap();
        let diff = &k.mu.discriminant - &k.nu.discriminant;
        prop_assert_eq!(diff, s(-4 * (p * c + qq * b + r * a)));
        // so the two rulings never both have a double root
        prop_assert!(!matches!(k.form, Some(StandardForm::Bilinear | StandardForm::Linear
            | StandardForm::BilinearMu | StandardForm::BilinearNu)));
    }
}
