#![allow(dead_code)]

pub mod fixtures;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use tropleg_core::contact::ProjectivePoint;
use tropleg_core::{Field, Poly, PrimeField, RatFun, Scalar};

pub fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn s(n: i64) -> Scalar {
    Scalar::from(n)
}

/// `c t^e` as a rational function over the field of `c`.
pub fn mono_in(c: Scalar, e: i64) -> RatFun {
    let (zero, one) = (c.kind().int(0), c.kind().int(1));
    let n = e.unsigned_abs() as usize;
    let mut v = vec![zero; n + 1];
    v[n] = one;
    let p = RatFun::from_poly(Poly::from_coeffs(v));
    let p = if e >= 0 { p } else { p.try_inv().unwrap() };
    RatFun::constant(c) * p
}

pub fn mono(c: i64, e: i64) -> RatFun {
    mono_in(s(c), e)
}

/// Affine point `(a, b, c, 1)` with monomial coordinates over `Q(t)`.
pub fn series_point(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> ProjectivePoint<RatFun> {
    ProjectivePoint::new(mono(a.0, a.1), mono(b.0, b.1), mono(c.0, c.1), mono(1, 0))
}

pub fn fp2897() -> PrimeField {
    PrimeField::new(2897).unwrap()
}

/// The same over `F_2897`.
pub fn fp_point(a: (i64, i64), b: (i64, i64), c: (i64, i64)) -> ProjectivePoint<RatFun> {
    let k = fp2897();
    let m = |(c, e): (i64, i64)| mono_in(k.element(c), e);
    ProjectivePoint::new(m(a), m(b), m(c), m((1, 0)))
}

pub fn int_point(v: [i64; 4]) -> ProjectivePoint<Scalar> {
    ProjectivePoint(v.map(Scalar::from))
}

/// Outcome of the series oracle for the log-Gauss lemma.
#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct GaussTally {
    pub agree: usize,
    pub total: usize,
    /// Draws of `S` that tied and were redrawn.
    pub ties: usize,
}

/// Random tropical polynomials of degree at most 6 with coefficients in `[-20, 20]`,
/// lifted with random nonzero rational coefficients, probed at `per_poly` untied
/// rational `S` each. `S = a/b` is handled exactly by writing `t = u^b`.
pub fn gauss_oracle(seed: u64, polys: usize, per_poly: usize) -> GaussTally {
    use rand::{Rng, SeedableRng};
    use tropleg_core::checks::{dominant_exponent, log_gauss_vanishes};
    use tropleg_core::tropical::TropicalPolynomial;
    use tropleg_core::{Series, SeriesPoly};

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut tally = GaussTally::default();
    for _ in 0..polys {
        let deg = rng.gen_range(0..=6usize);
        let mut terms: Vec<(usize, i64, Scalar)> = Vec::new();
        for i in 0..=deg {
            if i == deg || rng.gen_bool(0.6) {
                let n = loop {
                    let n = rng.gen_range(-9i64..=9);
                    if n != 0 {
                        break n;
                    }
                };
                let c = Scalar::ratio(n, rng.gen_range(1..=5));
                terms.push((i, rng.gen_range(-20..=20), c));
            }
        }
        let trop = TropicalPolynomial::from_ints(
            &terms
                .iter()
                .map(|(i, v, _)| (vec![*i as i64], *v))
                .collect::<Vec<_>>(),
        )
        .unwrap();
        let mut judged = 0;
        while judged < per_poly {
            let b = rng.gen_range(1..=3i64);
            let a = rng.gen_range(-12 * b..=12 * b);
            let s_val = BigRational::new(a.into(), b.into());
            let (k, strict) = dominant_exponent(&trop, &s_val);
            let Some(predicted) = log_gauss_vanishes(k, strict) else {
                tally.ties += 1;
                continue;
            };
            judged += 1;
            // f(s) = sum c_i u^{b v_i} s^i evaluated at s = u^a
            let mut coeffs = vec![Series::zero(); deg + 1];
            for (i, v, c) in &terms {
                coeffs[*i] = Series::monomial(c.clone(), b * v);
            }
            let f = SeriesPoly::from_coeffs(coeffs);
            let su = Series::monomial(s(1), a);
            let vf = f.eval(&su).degree().expect("f(s) != 0 off ties");
            let vd = f.derivative().eval(&su).degree();
            let equal = vd == Some(vf - a);
            let below = vd.is_none_or(|d| d < vf - a);
            tally.total += 1;
            if (predicted && equal) || (!predicted && below) {
                tally.agree += 1;
            }
        }
    }
    tally
}
