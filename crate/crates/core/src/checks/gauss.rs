use num_bigint::BigInt;
use num_rational::BigRational;

use crate::tropical::TropicalPolynomial;

/// The exponent `k` maximizing `val(a_i) + i S` over the terms of a univariate tropical
/// polynomial, and whether the maximum is attained only once. On a tie the largest
/// tied exponent is returned.
pub fn dominant_exponent(f: &TropicalPolynomial, s: &BigRational) -> (i64, bool) {
    let mut best: Option<(BigRational, i64)> = None;
    let mut strict = true;
    for t in f.terms() {
        let i = t.exp.first().copied().unwrap_or(0);
        let v = &t.coeff + s * BigRational::from_integer(BigInt::from(i));
        match &best {
            Some((b, _)) if v < *b => {}
            Some((b, _)) if v == *b => strict = false,
            _ => {
                best = Some((v, i));
                strict = true;
            }
        }
    }
    let (_, k) = best.expect("tropical polynomials have a term");
    (k, strict)
}

/// Whether the logarithmic Gauss derivative `s f'(s) / f(s)` has valuation zero at a
/// point where [`dominant_exponent`] returned `(k, strict)`. For `k = 0` with a strict
/// maximum the valuation is negative instead; ties are not decided.
pub fn log_gauss_vanishes(k: i64, strict: bool) -> Option<bool> {
    strict.then_some(k != 0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn two_terms() {
        let f = TropicalPolynomial::from_ints(&[(vec![0], 0), (vec![1], 0)]).unwrap();
        assert_eq!(dominant_exponent(&f, &q(1)), (1, true));
        assert!(!dominant_exponent(&f, &q(0)).1);
        assert_eq!(dominant_exponent(&f, &q(-1)), (0, true));
        assert_eq!(log_gauss_vanishes(0, true), Some(false));
        assert_eq!(log_gauss_vanishes(1, false), None);
    }
}
