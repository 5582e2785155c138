mod common;

use common::{int_point, s, series_point};
use num_traits::Zero;
use proptest::prelude::*;
use tropleg_core::contact::*;
use tropleg_core::{Field, Poly, RatFun, Scalar, ScalarMap};

fn omega1() -> ContactForm {
    ContactForm::from_ints([3, 0, 0, 0, 0, 1])
}

fn curve(cs: [&[i64]; 4]) -> ParametrizedCurve<Scalar> {
    ParametrizedCurve::new(cs.map(|c| Poly::from_coeffs(c.iter().map(|&n| s(n)).collect())))
}

#[test]
fn twisted_cubic_is_legendrian_for_omega1() {
    let c = curve([&[0, 1], &[0, 0, 1], &[0, 0, 0, 1], &[1]]);
    assert!(general_contact_eval(&omega1(), &c).is_zero());
    assert!(!contact_eval(&c).is_zero());
    let zero = ContactForm::from_ints([0; 6]);
    assert!(general_contact_eval(&zero, &c).is_zero());
    assert!(!zero.is_contact());
}

#[test]
fn constant_curve_is_legendrian() {
    assert!(contact_eval(&curve([&[1], &[0], &[0], &[0]])).is_zero());
}

#[test]
fn line_through_one_not_legendrian() {
    // (s, 1, 0, 1)
    let c = curve([&[0, 1], &[1], &[0], &[1]]);
    assert_eq!(contact_eval(&c), Poly::constant(s(1)));
    let l = Line::new([0, 1, 0, 1].map(s), [1, 0, 0, 0].map(s));
    assert_eq!(line_criterion(&l), s(1));
    assert!(!line_is_legendrian(&l).unwrap());
}

#[test]
fn family_is_legendrian_and_passes_standard_points() {
    assert!(general_contact_eval(&omega1(), &cubic_family_curve()).is_zero());
    assert!(contact_eval(&cubic_family_psi_curve()).is_zero());
    assert!(contact_eval(&cubic_family_psi_m_curve()).is_zero());
    let std = standard_points::<Scalar>();
    for mu in [-3, 0, 1, 7] {
        let mu = Scalar::ratio(mu, 5);
        for (t, p) in [0, 1, -1].into_iter().zip(&std) {
            assert!(cubic_family(&s(t), &mu).projectively_equal(p));
            assert!(cubic_family_psi(&s(t), &mu).projectively_equal(p));
        }
    }
    assert_eq!(cubic_family_psi(&s(1), &s(9)), int_point([2, 2, 2, 2]));
}

#[test]
fn surface_contains_family() {
    let c = cubic_family_psi_curve();
    assert!(cubic_surface_eval(c.coords()).is_zero());
    for p in standard_points::<Scalar>() {
        assert!(cubic_surface_eval(p.coords()).is_zero());
    }
    assert!(!cubic_surface_eval(int_point([1, 0, 1, 0]).coords()).is_zero());
    assert_eq!(cubic_surface().num_terms(), 7);
}

fn generators(l: i64) -> Vec<ScalarMap> {
    let l = Scalar::ratio(l, 3);
    [
        Generator::ShearXy(l.clone()),
        Generator::RotateXy,
        Generator::SwapPairs,
        Generator::CrossShear(l.clone()),
        Generator::ScaleXy(l),
    ]
    .iter()
    .map(|g| g.matrix().unwrap())
    .collect()
}

#[test]
fn generator_examples() {
    let id = ScalarMap::identity();
    assert_eq!(Generator::ShearXy(s(0)).matrix().unwrap(), id);
    let r = Generator::<Scalar>::RotateXy.matrix().unwrap();
    assert_eq!(r.compose(&r).compose(&r).compose(&r), id);
    assert_ne!(r.compose(&r), id);
    for m in generators(2) {
        assert!(m.symplectic_factor().is_some());
        assert!(m.is_flagged_symplectic());
    }
    assert_eq!(
        Generator::ScaleXy(s(0)).matrix(),
        Err(ContactError::ZeroScale)
    );
}

#[test]
fn stabilizer_examples() {
    assert_eq!(stabilizer(&s(0)), ScalarMap::identity());
    let (a, b) = (Scalar::ratio(2, 7), s(-5));
    assert_eq!(
        stabilizer(&a).compose(&stabilizer(&b)),
        stabilizer(&(&a + &b))
    );
    for p in standard_points::<Scalar>() {
        assert!(stabilizer(&a).apply(&p).projectively_equal(&p));
    }
    assert!(stabilizer(&a).symplectic_factor().is_some());
}

#[test]
fn inverse_examples() {
    let id = ScalarMap::identity();
    assert!(id.inverse().unwrap().projectively_equal(&id));
    let sh = Generator::ShearXy(s(4)).matrix().unwrap();
    let back = Generator::ShearXy(s(-4)).matrix().unwrap();
    assert!(sh.inverse().unwrap().projectively_equal(&back));
    let m = generators(5)
        .iter()
        .fold(ScalarMap::identity(), |acc, g| acc.compose(g));
    assert!(m.compose(&m.inverse().unwrap()).is_scalar());
    let zero = ScalarMap::new(std::array::from_fn(|_| std::array::from_fn(|_| s(0))));
    assert_eq!(zero.inverse(), Err(ContactError::Singular));
}

#[test]
fn transformation_of_standard_points_fixes_them() {
    let [a, b, c] = standard_points::<Scalar>();
    let tr = transformation(&a, &b, &c).unwrap();
    assert!(tr.sends_to_standard([&a, &b, &c]));
    for p in [&a, &b, &c] {
        assert!(tr.to_standard.apply(p).projectively_equal(p));
    }
    assert!(tr.to_standard.symplectic_factor().is_some());
}

#[test]
fn transformation_of_rational_points() {
    let p = [
        int_point([29, -6, 13, 11]),
        int_point([-3, -17, 7, -5]),
        int_point([16, -5, 6, 23]),
    ];
    let tr = transformation(&p[0], &p[1], &p[2]).unwrap();
    assert!(tr.sends_to_standard([&p[0], &p[1], &p[2]]));
    assert!(tr.to_standard.symplectic_factor().is_some());
    let std = standard_points::<Scalar>();
    for (a, b) in std.iter().zip(&p) {
        assert!(tr.from_standard.apply(a).projectively_equal(b));
    }
    assert!(tr.to_standard.compose(&tr.from_standard).is_scalar());
}

#[test]
fn transformation_of_series_points() {
    let p = [
        series_point((2, 13), (2, 20), (1, 33)),
        series_point((2, 11), (2, 5), (1, 31)),
        series_point((2, 4), (2, 13), (2, 27)),
    ];
    let tr = transformation(&p[0], &p[1], &p[2]).unwrap();
    assert!(tr.sends_to_standard([&p[0], &p[1], &p[2]]));
    assert!(tr.to_standard.symplectic_factor().is_some());
    // denominators were cleared at every stage
    for row in tr.from_standard.entries() {
        assert!(row.iter().all(RatFun::is_polynomial));
    }
}

#[test]
fn degenerate_triples_are_named() {
    let a = int_point([1, 2, 3, 1]);
    let e = transformation(&a, &a, &int_point([0, 1, 0, 1]));
    assert!(matches!(e, Err(ContactError::Degenerate(_))), "{e:?}");
}

fn line_coeffs(v: [i64; 6]) -> [Scalar; 6] {
    v.map(|n| Scalar::ratio(n, 1))
}

#[test]
fn cubics_through_a_line() {
    let [p1, q1, p2, q2, p3, q3] = line_coeffs([2, -1, 5, 3, 1, 4]);
    let r = cubics_through_line(&p1, &q1, &p2, &q2, &p3, &q3).unwrap();
    assert_eq!(r.polynomial.degree(), Some(3));
    for sol in &r.solutions {
        assert!(sol.lies_on_line(&p1, &q1, &p2, &q2, &p3, &q3));
    }
    let total: usize = r.solutions.iter().map(|x| x.multiplicity).sum();
    assert!(total <= 3);
    // perturbing (p2, q2) keeps the degree
    let r2 = cubics_through_line(&p1, &q1, &(&p2 + &s(1)), &(&q2 - &s(2)), &p3, &q3).unwrap();
    assert_eq!(r2.polynomial.degree(), Some(3));
    let bad = cubics_through_line(&s(1), &q1, &p2, &q2, &s(-3), &q3);
    assert!(matches!(bad, Err(ContactError::NonGenericLine(_))));
}

#[test]
fn cubics_through_line_with_rational_roots() {
    // choose a family member and a point on it, then a line through that point
    let (t, mu) = (Scalar::ratio(2, 1), Scalar::ratio(1, 3));
    let p = cubic_family(&t, &mu).normalized().unwrap();
    let [x, y, z, w] = p.coords().clone();
    // the line y = p1 + q1 x, z = p2 + q2 x, w = p3 + q3 x through (x, y, z, w)
    let (q1, q2, q3) = (s(1), s(-2), s(3));
    let (p1, p2, p3) = (&y - &(&q1 * &x), &z - &(&q2 * &x), &w - &(&q3 * &x));
    let r = cubics_through_line(&p1, &q1, &p2, &q2, &p3, &q3).unwrap();
    assert_eq!(r.polynomial.degree(), Some(3));
    assert!(r.solutions.iter().any(|sol| sol.t == t && sol.mu == mu));
    for sol in &r.solutions {
        assert!(sol.lies_on_line(&p1, &q1, &p2, &q2, &p3, &q3));
    }
}

#[test]
fn balance_table_on_family_line() {
    // family line at A = 1, B = 2, X = 1 with t = 3
    let t = 3i64;
    let (ta, tb, tab) = (t, t.pow(2), t.pow(3));
    let line = Line::new([ta, 2 * tb, tab * t, 1].map(s), [ta, tb, -tab, 0].map(s));
    assert!(line_is_legendrian(&line).unwrap());
    let b = line_balance_table(&line).unwrap();
    assert_eq!(b.constant_coordinates, vec![3]);
}

fn small() -> impl Strategy<Value = i64> {
    -9i64..=9
}

fn word() -> impl Strategy<Value = Vec<(u8, i64)>> {
    prop::collection::vec((0u8..5, 1i64..=6), 1..8)
}

fn word_matrix(w: &[(u8, i64)]) -> ScalarMap {
    w.iter().fold(ScalarMap::identity(), |acc, &(g, l)| {
        let l = Scalar::ratio(l, 2);
        let g = match g {
            0 => Generator::ShearXy(l),
            1 => Generator::RotateXy,
            2 => Generator::SwapPairs,
            3 => Generator::CrossShear(l),
            _ => Generator::ScaleXy(l),
        };
        acc.compose(&g.matrix().unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn words_stay_symplectic(w in word()) {
        let m = word_matrix(&w);
        prop_assert!(m.symplectic_factor().is_some());
    }

    #[test]
    fn symplectic_maps_preserve_legendrian(w in word(), mu in small()) {
        let m = word_matrix(&w);
        let mu = Scalar::ratio(mu, 4);
        let fam = cubic_family_psi_curve().map_coeffs(|c| c.eval(&mu));
        prop_assert!(contact_eval(&fam).is_zero());
        prop_assert!(contact_eval(&m.apply_curve(&fam)).is_zero());
    }

    #[test]
    fn stabilizer_is_additive(a in small(), b in small()) {
        let (a, b) = (Scalar::ratio(a, 3), Scalar::ratio(b, 7));
        prop_assert_eq!(stabilizer(&a).compose(&stabilizer(&b)), stabilizer(&(&a + &b)));
    }

    #[test]
    fn transformation_hits_standard_points(
        v in prop::collection::vec(-30i64..=30, 9),
    ) {
        let p: Vec<ProjectivePoint<Scalar>> = v
            .chunks(3)
            .map(|c| int_point([c[0], c[1], c[2], 1]))
            .collect();
        match transformation(&p[0], &p[1], &p[2]) {
            Ok(tr) => {
                prop_assert!(tr.sends_to_standard([&p[0], &p[1], &p[2]]));
                prop_assert!(tr.to_standard.symplectic_factor().is_some());
            }
            // non-generic draws must name the vanishing pivot
            Err(e) => prop_assert!(matches!(e, ContactError::Degenerate(_)), "{:?}", e),
        }
    }

    #[test]
    fn surface_identity_at_random_parameters(t in small(), mu in small()) {
        let (t, mu) = (Scalar::ratio(t, 5), Scalar::ratio(mu, 3));
        prop_assert!(cubic_surface_eval(cubic_family_psi(&t, &mu).coords()).is_zero());
    }

    #[test]
    fn balance_identities_match_criterion(
        a in prop::array::uniform4(-9i64..=9),
        b in prop::array::uniform3(-9i64..=9),
        bump in 1i64..=5,
    ) {
        // solve the criterion a1 b0 - a0 b1 + a3 b2 - a2 b3 = 0 for b3 when a2 != 0
        prop_assume!(a[2] != 0 && b.iter().all(|&x| x != 0) && a.iter().all(|&x| x != 0));
        let (a4, b3) = (a.map(s), b.map(s));
        let rest = &(&(&a4[1] * &b3[0]) - &(&a4[0] * &b3[1])) + &(&a4[3] * &b3[2]);
        let w = rest.try_div(&a4[2]).unwrap();
        let leg = Line::new(a4.clone(), [b3[0].clone(), b3[1].clone(), b3[2].clone(), w.clone()]);
        prop_assume!(!leg.is_degenerate() && !w.is_zero());
        prop_assert!(line_is_legendrian(&leg).unwrap());
        let tab = line_balance_table(&leg).unwrap();
        prop_assume!(tab.xz_identity.is_some() && tab.yw_identity.is_some());
        prop_assert_eq!(tab.xz_identity, Some(true));
        prop_assert_eq!(tab.yw_identity, Some(true));
        let bad = Line::new(a4, [b3[0].clone(), b3[1].clone(), b3[2].clone(), &w + &s(bump)]);
        prop_assert!(!line_is_legendrian(&bad).unwrap());
        let tab = line_balance_table(&bad).unwrap();
        prop_assume!(tab.xz_identity.is_some() && tab.yw_identity.is_some());
        prop_assert_eq!(tab.xz_identity, Some(false));
        prop_assert_eq!(tab.yw_identity, Some(false));
    }
}
