//! Integer polynomial helpers: content, pseudo-remainders, subresultant gcd,
//! exact division and coefficient bounds. Coefficients are low-to-high.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::floor_sqrt;

pub(crate) type ZPoly = Vec<BigInt>;

pub(crate) fn trim(p: &mut ZPoly) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

pub(crate) fn degree(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

pub(crate) fn content(p: &[BigInt]) -> BigInt {
    p.iter().fold(BigInt::zero(), |g, c| g.gcd(c))
}

/// Primitive part with positive leading coefficient.
pub(crate) fn primitive_part(p: &[BigInt]) -> ZPoly {
    let mut c = content(p);
    if c.is_zero() {
        return Vec::new();
    }
    if p.last().is_some_and(|l| l.is_negative()) {
        c = -c;
    }
    p.iter().map(|x| x / &c).collect()
}

pub(crate) fn mul(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

/// Pseudo-remainder `prem(a, b)`: remainder of `lc(b)^(deg a - deg b + 1) * a` by `b`.
pub(crate) fn prem(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let mut r: ZPoly = a.to_vec();
    let db = degree(b);
    let lb = b.last().expect("nonzero divisor");
    if r.len() < b.len() {
        return r;
    }
    let mut steps = r.len() - b.len() + 1;
    while !r.is_empty() && r.len() >= b.len() {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c *= lb;
        }
        for (j, bc) in b.iter().enumerate() {
            r[shift + j] -= &lr * bc;
        }
        trim(&mut r);
        steps -= 1;
    }
    if steps > 0 {
        let f = num_traits::pow(lb.clone(), steps);
        for c in r.iter_mut() {
            *c *= &f;
        }
    }
    r
}

/// Primitive gcd of two nonzero integer polynomials, via the subresultant PRS.
pub(crate) fn subresultant_gcd(a: &[BigInt], b: &[BigInt]) -> ZPoly {
    let (mut a, mut b) = (primitive_part(a), primitive_part(b));
    if a.len() < b.len() {
        core::mem::swap(&mut a, &mut b);
    }
    if b.is_empty() {
        return a;
    }
    let mut g = BigInt::one();
    let mut h = BigInt::one();
    loop {
        let delta = degree(&a) - degree(&b);
        let r = prem(&a, &b);
        if r.is_empty() {
            return primitive_part(&b);
        }
        if r.len() == 1 {
            return vec![BigInt::one()];
        }
        let divisor = &g * num_traits::pow(h.clone(), delta);
        a = b;
        b = r.into_iter().map(|c| c / &divisor).collect();
        g = a.last().unwrap().clone();
        // h <- g^delta / h^(delta - 1)
        h = if delta == 0 {
            h
        } else {
            num_traits::pow(g.clone(), delta) / num_traits::pow(h, delta - 1)
        };
    }
}

/// Exact division over the integers; `None` if `b` does not divide `a` in `Z[x]`.
pub(crate) fn exact_div(a: &[BigInt], b: &[BigInt]) -> Option<ZPoly> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let lb = b.last().unwrap();
    let mut r: ZPoly = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let top = &r[k + b.len() - 1];
        let (qk, rem) = top.div_rem(lb);
        if !rem.is_zero() {
            return None;
        }
        if !qk.is_zero() {
            for (j, bc) in b.iter().enumerate() {
                r[k + j] -= &qk * bc;
            }
        }
        q[k] = qk;
    }
    if r.iter().any(|c| !c.is_zero()) {
        return None;
    }
    trim(&mut q);
    Some(q)
}

/// Bound `B` with `|c| <= B` for every coefficient `c` of every integer factor of `f`
/// (Mignotte: `binom(n, j) * ||f||_2 <= 2^n * ||f||_2`).
pub(crate) fn mignotte_bound(f: &[BigInt]) -> BigInt {
    let n = degree(f);
    let norm2: BigInt = f.iter().map(|c| c * c).sum();
    let norm = floor_sqrt(&norm2) + BigInt::one();
    norm << n
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(v: &[i64]) -> ZPoly {
        v.iter().map(|&c| BigInt::from(c)).collect()
    }

    #[test]
    fn gcd_textbook() {
        // Knuth's subresultant example.
        let a = z(&[-5, 2, 8, -3, -3, 0, 1, 0, 1]);
        let b = z(&[21, -9, -4, 0, 5, 0, 3]);
        assert_eq!(subresultant_gcd(&a, &b), z(&[1]));
        // (x+1)^2 (x-2) and (x+1)(x+3)
        let a = z(&[-2, -3, 0, 1]);
        let b = z(&[3, 4, 1]);
        assert_eq!(subresultant_gcd(&a, &b), z(&[1, 1]));
    }

    #[test]
    fn exact_division() {
        let a = z(&[-2, -3, 0, 1]);
        assert_eq!(exact_div(&a, &z(&[1, 1])), Some(z(&[-2, -1, 1])));
        assert_eq!(exact_div(&a, &z(&[1, 2])), None);
    }

    #[test]
    fn pseudo_remainder() {
        // prem(x^2 + 1, 2x + 1) = 4(x^2+1) mod (2x+1) = 5
        assert_eq!(prem(&z(&[1, 0, 1]), &z(&[1, 2])), z(&[5]));
    }
}
