//! Modular gcd for integer polynomials: images modulo word-sized primes are combined by
//! Chinese remaindering until the candidate divides both inputs.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::is_prime;

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

fn invm(a: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    let (mut base, mut e) = (a % p, p - 2);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulm(acc, base, p);
        }
        base = mulm(base, base, p);
        e >>= 1;
    }
    acc
}

fn trim_u(v: &mut Vec<u64>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn trim_z(v: &mut Vec<BigInt>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn image(v: &[BigInt], p: u64) -> Vec<u64> {
    let pb = BigInt::from(p);
    let mut out: Vec<u64> = v
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    trim_u(&mut out);
    out
}

/// Monic gcd over `F_p`.
pub(crate) fn gcd_mod(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let (mut x, mut y) = (a.to_vec(), b.to_vec());
    trim_u(&mut x);
    trim_u(&mut y);
    while !y.is_empty() {
        let dy = y.len() - 1;
        let li = invm(y[dy], p);
        while x.len() > dy {
            let k = x.len() - 1 - dy;
            let c = mulm(*x.last().unwrap(), li, p);
            for (j, d) in y.iter().enumerate() {
                if *d != 0 {
                    x[k + j] = (x[k + j] + p - mulm(c, *d, p)) % p;
                }
            }
            trim_u(&mut x);
        }
        std::mem::swap(&mut x, &mut y);
    }
    if let Some(&l) = x.last() {
        let li = invm(l, p);
        for c in x.iter_mut() {
            *c = mulm(*c, li, p);
        }
    }
    x
}

fn content(v: &[BigInt]) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = content(&v);
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c = &*c / &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -&*c;
        }
    }
    v
}

/// Whether `d` divides `a` in `Z[x]`; `d` must be primitive.
fn divides(d: &[BigInt], a: &[BigInt]) -> bool {
    let dd = d.len() - 1;
    let lc = &d[dd];
    let mut rem = a.to_vec();
    while rem.len() > dd {
        let top = rem.last().unwrap().clone();
        if top.is_zero() {
            rem.pop();
            continue;
        }
        let (q, r) = top.div_rem(lc);
        if !r.is_zero() {
            return false;
        }
        let k = rem.len() - 1 - dd;
        for (j, c) in d.iter().enumerate() {
            if !c.is_zero() {
                rem[k + j] -= &q * c;
            }
        }
        trim_z(&mut rem);
    }
    rem.iter().all(|c| c.is_zero())
}

/// Gcd in `Z[x]` of two nonzero integer polynomials (ascending coefficients), up to sign.
pub(crate) fn gcd_zx(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let a = primitive(a.to_vec());
    let b = primitive(b.to_vec());
    let lc_g = a.last().unwrap().gcd(b.last().unwrap());
    let mut cur: Option<(Vec<BigInt>, BigInt, usize)> = None;
    let mut p: u64 = (1 << 31) - 1;
    loop {
        while !is_prime(p) {
            p -= 2;
        }
        let prime = p;
        p -= 2;
        let (ia, ib) = (image(&a, prime), image(&b, prime));
        if ia.len() != a.len() || ib.len() != b.len() {
            continue;
        }
        let g = gcd_mod(&ia, &ib, prime);
        let dg = g.len() - 1;
        if dg == 0 {
            return vec![BigInt::one()];
        }
        let l = image(std::slice::from_ref(&lc_g), prime)
            .first()
            .copied()
            .unwrap_or(0);
        let g: Vec<u64> = g.iter().map(|c| mulm(*c, l, prime)).collect();
        let pb = BigInt::from(prime);
        let half = |m: &BigInt, x: BigInt| if &x * 2 > *m { x - m } else { x };
        let next = match cur.take() {
            Some((h, m, d)) if d == dg => {
                let minv = invm(m.mod_floor(&pb).to_u64().unwrap(), prime);
                let mp = &m * &pb;
                let combined: Vec<BigInt> = h
                    .iter()
                    .zip(&g)
                    .map(|(hc, gc)| {
                        let hm = hc.mod_floor(&pb).to_u64().unwrap();
                        let k = mulm((gc + prime - hm) % prime, minv, prime);
                        half(&mp, (hc + &m * k).mod_floor(&mp))
                    })
                    .collect();
                if combined == h {
                    let cand = primitive(h.clone());
                    if divides(&cand, &a) && divides(&cand, &b) {
                        return cand;
                    }
                }
                (combined, mp, d)
            }
            Some((h, m, d)) if d < dg => (h, m, d),
            _ => (
                g.iter().map(|c| half(&pb, BigInt::from(*c))).collect(),
                pb,
                dg,
            ),
        };
        cur = Some(next);
    }
}
