//! Polynomials over a prime field `F_p` with `p < 2^32`, and their factorization
//! by distinct-degree plus equal-degree (Cantor–Zassenhaus) splitting.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::error::{Error, Result};

/// Dense polynomial over `F_p`, coefficients low-to-high in `[0, p)`.
///
/// The leading coefficient is nonzero; the zero polynomial is empty.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

/// Seed for the equal-degree splitting; output does not depend on it.
const EDF_SEED: u64 = 0x5eed_0fc0_ffee;

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

impl FpPoly {
    pub fn new(p: u64, mut coeffs: Vec<u64>) -> Result<FpPoly> {
        if p >= 1 << 32 || !crate::arith::is_prime(&BigInt::from(p)) {
            return Err(Error::NotPrime);
        }
        for c in coeffs.iter_mut() {
            *c %= p;
        }
        Ok(FpPoly::trimmed(p, coeffs))
    }

    fn trimmed(p: u64, mut coeffs: Vec<u64>) -> FpPoly {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPoly { p, coeffs }
    }

    /// Reduction of an integer polynomial modulo `p`.
    pub(crate) fn from_ints(p: u64, z: &[BigInt]) -> FpPoly {
        let pb = BigInt::from(p);
        let coeffs = z.iter().map(|c| c.mod_floor(&pb).to_u64().unwrap()).collect();
        FpPoly::trimmed(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    fn one(p: u64) -> FpPoly {
        FpPoly { p, coeffs: vec![1] }
    }

    fn x(p: u64) -> FpPoly {
        FpPoly { p, coeffs: vec![0, 1] }
    }

    pub fn monic(&self) -> FpPoly {
        match self.coeffs.last() {
            None | Some(1) => self.clone(),
            Some(&l) => self.scale(inv_mod(l, self.p)),
        }
    }

    fn scale(&self, c: u64) -> FpPoly {
        FpPoly::trimmed(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)).collect())
    }

    pub fn add(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|k| {
                let s = self.coeffs.get(k).copied().unwrap_or(0) + o.coeffs.get(k).copied().unwrap_or(0);
                if s >= self.p { s - self.p } else { s }
            })
            .collect();
        FpPoly::trimmed(self.p, c)
    }

    pub fn sub(&self, o: &FpPoly) -> FpPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        let c = (0..n)
            .map(|k| {
                let a = self.coeffs.get(k).copied().unwrap_or(0);
                let b = o.coeffs.get(k).copied().unwrap_or(0);
                if a >= b { a - b } else { a + self.p - b }
            })
            .collect();
        FpPoly::trimmed(self.p, c)
    }

    pub fn mul(&self, o: &FpPoly) -> FpPoly {
        if self.is_zero() || o.is_zero() {
            return FpPoly { p: self.p, coeffs: Vec::new() };
        }
        let p = self.p as u128;
        let mut acc = vec![0u128; self.coeffs.len() + o.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.coeffs.iter().enumerate() {
                acc[i + j] += a as u128 * b as u128;
            }
        }
        FpPoly::trimmed(self.p, acc.into_iter().map(|c| (c % p) as u64).collect())
    }

    pub fn divrem(&self, d: &FpPoly) -> Result<(FpPoly, FpPoly)> {
        let ld = *d.coeffs.last().ok_or(Error::ZeroPolynomial)?;
        let p = self.p;
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((FpPoly { p, coeffs: Vec::new() }, self.clone()));
        }
        let inv = inv_mod(ld, p);
        let dd = d.deg();
        let mut r = self.coeffs.clone();
        let mut q = vec![0u64; r.len() - dd];
        for k in (0..q.len()).rev() {
            let top = r[k + dd];
            if top == 0 {
                continue;
            }
            let qk = mul_mod(top, inv, p);
            for (j, &dc) in d.coeffs.iter().enumerate() {
                let t = mul_mod(qk, dc, p);
                r[k + j] = if r[k + j] >= t { r[k + j] - t } else { r[k + j] + p - t };
            }
            q[k] = qk;
        }
        r.truncate(dd);
        Ok((FpPoly::trimmed(p, q), FpPoly::trimmed(p, r)))
    }

    pub fn rem(&self, d: &FpPoly) -> FpPoly {
        self.divrem(d).expect("nonzero modulus").1
    }

    /// Monic gcd.
    pub fn gcd(&self, o: &FpPoly) -> FpPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Extended gcd: `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &FpPoly) -> (FpPoly, FpPoly, FpPoly) {
        let p = self.p;
        let zero = FpPoly { p, coeffs: Vec::new() };
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (FpPoly::one(p), zero.clone());
        let (mut t0, mut t1) = (zero, FpPoly::one(p));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1).unwrap();
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = core::mem::replace(&mut r1, r);
            s0 = core::mem::replace(&mut s1, s2);
            t0 = core::mem::replace(&mut t1, t2);
        }
        let inv = match r0.coeffs.last() {
            Some(&l) => inv_mod(l, p),
            None => 1,
        };
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    pub fn derivative(&self) -> FpPoly {
        let c = self.coeffs.iter().enumerate().skip(1).map(|(k, &a)| mul_mod(a, k as u64 % self.p, self.p)).collect();
        FpPoly::trimmed(self.p, c)
    }

    /// `self^e mod m`.
    pub fn pow_mod(&self, mut e: u64, m: &FpPoly) -> FpPoly {
        let mut base = self.rem(m);
        let mut acc = FpPoly::one(self.p).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(m);
            }
        }
        acc
    }

    pub fn is_squarefree(&self) -> bool {
        self.gcd(&self.derivative()).deg() == 0
    }

    /// Distinct-degree factorization of a monic squarefree polynomial:
    /// pairs `(g_d, d)` where `g_d` is the product of all irreducible factors of degree `d`.
    pub fn distinct_degree(&self) -> Vec<(FpPoly, usize)> {
        let p = self.p;
        let mut out = Vec::new();
        let mut f = self.monic();
        let x = FpPoly::x(p);
        let mut h = x.rem(&f);
        let mut d = 0;
        while f.deg() >= 2 * (d + 1) {
            d += 1;
            h = h.pow_mod(p, &f);
            let g = f.gcd(&h.sub(&x));
            if g.deg() > 0 {
                f = f.divrem(&g).unwrap().0;
                h = h.rem(&f);
                out.push((g, d));
            }
        }
        if f.deg() > 0 {
            let d = f.deg();
            out.push((f, d));
        }
        out
    }

    /// Splits a monic squarefree product of irreducibles all of degree `d`.
    fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<FpPoly>) {
        let n = self.deg();
        if n == d {
            out.push(self.clone());
            return;
        }
        let p = self.p;
        loop {
            let a = FpPoly::trimmed(p, (0..n).map(|_| rng.next_u64() % p).collect());
            if a.deg() == 0 {
                continue;
            }
            let g = self.gcd(&a);
            let split = if g.deg() > 0 {
                g
            } else {
                // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
                let mut frob = a.rem(self);
                let mut norm = frob.clone();
                for _ in 1..d {
                    frob = frob.pow_mod(p, self);
                    norm = norm.mul(&frob).rem(self);
                }
                let b = norm.pow_mod((p - 1) / 2, self).sub(&FpPoly::one(p));
                self.gcd(&b)
            };
            if split.deg() > 0 && split.deg() < n {
                let rest = self.divrem(&split).unwrap().0;
                split.equal_degree(d, rng, out);
                rest.equal_degree(d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a squarefree polynomial, sorted by degree then coefficients.
    /// Requires an odd modulus.
    pub fn factor_squarefree(&self) -> Result<Vec<FpPoly>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.p == 2 {
            return Err(Error::Precondition("equal-degree splitting needs an odd prime"));
        }
        if !self.is_squarefree() {
            return Err(Error::Precondition("polynomial must be squarefree modulo p"));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(EDF_SEED);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree() {
            g.equal_degree(d, &mut rng, &mut out);
        }
        out.sort_by(|a, b| a.deg().cmp(&b.deg()).then_with(|| a.coeffs.cmp(&b.coeffs)));
        Ok(out)
    }

    /// Lifts the residues to their symmetric integer representatives.
    pub(crate) fn to_ints(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|&c| BigInt::from(c)).collect()
    }
}

/// Reduces an integer into `[0, m)`.
pub(crate) fn mod_floor(a: &BigInt, m: &BigInt) -> BigInt {
    let r = a % m;
    if r.is_negative() { r + m } else { r }
}
