//! Parsing of Laurent polynomials such as `-1 + 132t^-5`, `2t^13` or `3/2*s^2 - s`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `(exponent, coefficient)` pairs, merged and without zeros, highest exponent first.
pub type Terms = Vec<(i64, BigRational)>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprError(pub String);

impl std::fmt::Display for ExprError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn err<T>(input: &str, why: &str) -> Result<T, ExprError> {
    Err(ExprError(format!("cannot parse {input:?}: {why}")))
}

struct Cursor<'a> {
    s: &'a [u8],
    i: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.i < self.s.len() && self.s[self.i].is_ascii_whitespace() {
            self.i += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.i).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.i += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let start = self.i;
        while self.i < self.s.len() && self.s[self.i].is_ascii_digit() {
            self.i += 1;
        }
        (self.i > start).then(|| {
            std::str::from_utf8(&self.s[start..self.i])
                .unwrap()
                .parse()
                .unwrap()
        })
    }

    /// `^n`, `^-n` or `^(-n)`; one when absent.
    fn exponent(&mut self) -> Result<Option<i64>, ()> {
        if !self.eat(b'^') {
            return Ok(Some(1));
        }
        let paren = self.eat(b'(');
        let neg = self.eat(b'-');
        let n = self.digits().ok_or(())?;
        if paren && !self.eat(b')') {
            return Err(());
        }
        let n: i64 = n.try_into().map_err(|_| ())?;
        Ok(Some(if neg { -n } else { n }))
    }
}

/// Parse a sum of monomials `c var^e` in one variable. Coefficients are integers or
/// fractions; `c/var^e` is accepted for negative powers.
pub fn parse_laurent(input: &str, var: char) -> Result<Terms, ExprError> {
    let v = var as u8;
    let mut cur = Cursor {
        s: input.as_bytes(),
        i: 0,
    };
    let mut acc: std::collections::BTreeMap<i64, BigRational> = Default::default();
    if cur.peek().is_none() {
        return err(input, "empty expression");
    }
    let mut first = true;
    while cur.peek().is_some() {
        let mut sign = BigRational::one();
        if cur.eat(b'-') {
            sign = -sign;
        } else if !cur.eat(b'+') && !first {
            return err(input, "expected + or -");
        }
        first = false;
        let mut coeff = match cur.digits() {
            Some(n) => {
                let mut c = BigRational::from_integer(n);
                // a fraction, unless the slash divides by the variable
                let save = cur.i;
                if cur.eat(b'/') {
                    match cur.digits() {
                        Some(d) if !d.is_zero() => c /= BigRational::from_integer(d),
                        Some(_) => return err(input, "zero denominator"),
                        None => cur.i = save,
                    }
                }
                cur.eat(b'*');
                Some(c)
            }
            None => None,
        };
        let mut exp = 0;
        let mut divide = false;
        if coeff.is_some() && cur.eat(b'/') {
            divide = true;
        }
        if cur.peek() == Some(v) {
            cur.i += 1;
            exp = match cur.exponent() {
                Ok(Some(e)) => e,
                _ => return err(input, "bad exponent"),
            };
            if divide {
                exp = -exp;
            }
        } else if divide {
            return err(input, "expected the variable after /");
        } else if coeff.is_none() {
            return err(input, "expected a number or the variable");
        }
        let c = coeff.take().unwrap_or_else(BigRational::one) * sign;
        *acc.entry(exp).or_insert_with(BigRational::zero) += c;
    }
    Ok(acc
        .into_iter()
        .rev()
        .filter(|(_, c)| !c.is_zero())
        .collect())
}

/// Parse an integer list such as `3,0,0,0,0,1`.
pub fn parse_ints<const N: usize>(input: &str) -> Result<[i64; N], ExprError> {
    let v: Vec<i64> = input
        .split(',')
        .map(|p| p.trim().parse::<i64>())
        .collect::<Result<_, _>>()
        .or_else(|_| err(input, "expected integers"))?;
    v.try_into()
        .or_else(|_| err(input, &format!("expected {N} comma-separated integers")))
}

/// Parse `lo:hi`.
pub fn parse_range(input: &str) -> Result<(i64, i64), ExprError> {
    let Some((a, b)) = input.split_once(':') else {
        return err(input, "expected lo:hi");
    };
    match (a.trim().parse(), b.trim().parse()) {
        (Ok(a), Ok(b)) => Ok((a, b)),
        _ => err(input, "expected integers lo:hi"),
    }
}

/// Parse a list of rational points `x,y,z;x,y,z`.
pub fn parse_points3(input: &str) -> Result<Vec<[BigRational; 3]>, ExprError> {
    input
        .split(';')
        .filter(|p| !p.trim().is_empty())
        .map(|p| {
            let c: Vec<BigRational> = p
                .split(',')
                .map(|x| tropleg_core::tropical::parse_rational(x).ok_or(()))
                .collect::<Result<_, _>>()
                .or_else(|_| err(p, "expected rational coordinates"))?;
            c.try_into()
                .or_else(|_| err(p, "expected three coordinates"))
        })
        .collect()
}
