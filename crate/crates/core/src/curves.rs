//! Hyperelliptic models `y^2 = r(x)`: genus, bounded rational point search, and
//! the change of variables between the quartic `C3: y^2 = x^4 - 2x^3 + x^2 - x`
//! and the cubic `C3': u^2 = v^3 + v^2 + 2v + 1`.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{floor_sqrt, Rat};
use crate::dynamics::t_poly;
use crate::error::{check_range, Error, Result};
use crate::mvpoly::MvPoly;
use crate::poly::{odd_part, squarefree_part, QPoly};

pub const MAX_POINT_HEIGHT: u64 = 100_000;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct HypCurve {
    pub rhs: QPoly,
    /// Radical of `rhs` (monic), which fixes the genus.
    pub squarefree_rhs: QPoly,
    /// Product of the irreducible factors of odd multiplicity (monic).
    pub odd_part: QPoly,
    pub genus: usize,
}

impl HypCurve {
    pub fn new(rhs: QPoly) -> Result<HypCurve> {
        let genus = genus_of(&rhs)?;
        let squarefree_rhs = squarefree_part(&rhs)?;
        let odd_part = odd_part(&rhs)?;
        Ok(HypCurve { rhs, squarefree_rhs, odd_part, genus })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct AffinePoint {
    pub x: Rat,
    pub y: Rat,
}

impl AffinePoint {
    pub fn new(x: Rat, y: Rat) -> AffinePoint {
        AffinePoint { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> AffinePoint {
        AffinePoint::new(Rat::from_i64(x), Rat::from_i64(y))
    }

    pub fn on(&self, rhs: &QPoly) -> bool {
        &self.y * &self.y == rhs.eval(&self.x)
    }
}

/// Genus of the smooth model of `y^2 = squarefree_part(rhs)`: with `d` its degree,
/// `0` for `d <= 2`, `(d - 1)/2` for odd `d`, `(d - 2)/2` for even `d`.
pub fn genus_of(rhs: &QPoly) -> Result<usize> {
    let d = squarefree_part(rhs)?.deg();
    if d == 0 {
        return Err(Error::ConstantPolynomial);
    }
    Ok(if d <= 2 { 0 } else { (d - 1) / 2 })
}

/// `y^2 = t_i(x)` for the critical-orbit polynomial of `gamma`, `2 <= i <= 8`.
pub fn tcurve(gamma: &Rat, i: usize) -> Result<HypCurve> {
    check_range("i", i as u64, 2, 8)?;
    HypCurve::new(t_poly(gamma, i)?)
}

/// The curve `u^2 = v^3 + v^2 + 2v + 1`, in the variable `v`.
pub fn c3prime_rhs() -> QPoly {
    QPoly::from_i64s(&[1, 2, 1, 1])
}

/// `x^4 - 2x^3 + x^2 - x`, the quartic written in the `x -> -x` convention.
pub fn c3_rhs() -> QPoly {
    QPoly::from_i64s(&[0, -1, 1, -2, 1])
}

/// Orders points by the height of `x`, then `x`, then `y` with `y >= 0` first.
fn point_order(a: &AffinePoint, b: &AffinePoint) -> core::cmp::Ordering {
    crate::dynamics::height_order(&a.x, &b.x).then_with(|| b.y.cmp(&a.y))
}

pub fn sort_points(points: &mut [AffinePoint]) {
    points.sort_by(point_order);
}

/// All affine rational points with `height(x) <= height`, both signs of `y`.
pub fn search_points(rhs: &QPoly, height: u64) -> Result<Vec<AffinePoint>> {
    search_points_class(rhs, height, 1, 0)
}

/// The part of [`search_points`] whose `x` has denominator `b = residue (mod modulus)`.
pub fn search_points_class(rhs: &QPoly, height: u64, modulus: u64, residue: u64) -> Result<Vec<AffinePoint>> {
    check_range("height", height, 1, MAX_POINT_HEIGHT)?;
    if modulus == 0 || residue >= modulus {
        return Err(Error::Precondition("residue must be below a positive modulus"));
    }
    if rhs.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (content, prim) = rhs.to_primitive();
    let d = prim.len() - 1;
    // rhs(a/b) = content * F(a, b) / b^d, so with content = n/k it is a square
    // iff n * k * F(a, b) * b^(d mod 2) is a square integer.
    let scale = content.numer() * content.denom();
    let h = BigInt::from(height);
    let mut out = Vec::new();
    let mut b = BigInt::from(residue);
    if b.is_zero() {
        b += modulus;
    }
    while b <= h {
        let bpow: Vec<BigInt> = powers(&b, d);
        let mut a = -h.clone();
        while a <= h {
            if a.gcd(&b).is_one() {
                let mut f = BigInt::zero();
                let mut apow = BigInt::one();
                for (i, c) in prim.iter().enumerate() {
                    if !c.is_zero() {
                        f += c * &apow * &bpow[d - i];
                    }
                    apow *= &a;
                }
                let mut t = &scale * f;
                if d % 2 == 1 {
                    t *= &b;
                }
                if is_square_int(&t) {
                    let x = Rat::new(a.clone(), b.clone()).unwrap();
                    let y = rhs.eval(&x).sqrt().expect("square by construction");
                    if !y.is_zero() {
                        out.push(AffinePoint::new(x.clone(), -&y));
                    }
                    out.push(AffinePoint::new(x, y));
                }
            }
            a += 1;
        }
        b += modulus;
    }
    sort_points(&mut out);
    Ok(out)
}

fn powers(b: &BigInt, d: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(d + 1);
    out.push(BigInt::one());
    for i in 0..d {
        let next = &out[i] * b;
        out.push(next);
    }
    out
}

const fn residue_mask(m: u64) -> u128 {
    let mut acc = 0u128;
    let mut k = 0;
    while k < m {
        acc |= 1u128 << ((k * k) % m);
        k += 1;
    }
    acc
}

/// Moduli with few quadratic residues, and their residue bitmasks.
const SQUARE_SIEVE: [(u64, u128); 4] =
    [(64, residue_mask(64)), (63, residue_mask(63)), (65, residue_mask(65)), (11, residue_mask(11))];

fn is_square_int(t: &BigInt) -> bool {
    if t.is_negative() {
        return false;
    }
    for (m, mask) in SQUARE_SIEVE {
        let r = (t % m).iter_u64_digits().next().unwrap_or(0);
        if mask >> r & 1 == 0 {
            return false;
        }
    }
    let s = floor_sqrt(t);
    &s * &s == *t
}

/// Pushes `f(x, y)` through `x = -1/v`, `y = u/v^2` and clears `v^4`, giving a
/// polynomial in `(u, v)`. Needs `deg_x + 2 deg_y <= 4` in every term.
fn pullback_to_uv(f: &MvPoly) -> Result<MvPoly> {
    let mut terms = Vec::new();
    for (e, c) in f.terms() {
        let (i, j) = (e[0], e[1]);
        let vexp = 4u32.checked_sub(i + 2 * j).ok_or(Error::Precondition("weighted degree above 4"))?;
        let sign = if i % 2 == 1 { -c } else { c.clone() };
        terms.push((alloc::vec![j, vexp], sign));
    }
    MvPoly::from_terms(&["u", "v"], terms)
}

/// Checks the exact identity
/// `v^4 (y^2 - (x^4 - 2x^3 + x^2 - x)) = u^2 - (v^3 + v^2 + 2v + 1)` under
/// `x = -1/v`, `y = u/v^2`, as polynomials in `u` and `v`.
pub fn verify_birational_c3() -> bool {
    let mut c3 = MvPoly::from_terms(&["x", "y"], [(alloc::vec![0, 2], Rat::one())]).unwrap();
    for (i, c) in c3_rhs().coeffs().iter().enumerate() {
        c3.add_term(alloc::vec![i as u32, 0], -c).unwrap();
    }
    let mut target = MvPoly::from_terms(&["u", "v"], [(alloc::vec![2, 0], Rat::one())]).unwrap();
    for (i, c) in c3prime_rhs().coeffs().iter().enumerate() {
        target.add_term(alloc::vec![0, i as u32], -c).unwrap();
    }
    pullback_to_uv(&c3).is_ok_and(|p| p == target)
}

/// Image on the quartic of a point `(v, u)` of the cubic: `x = -1/v`, `y = u/v^2`.
pub fn c3prime_pullback(v: &Rat, u: &Rat) -> Result<AffinePoint> {
    let inv = v.recip().map_err(|_| Error::Precondition("the map is undefined at v = 0"))?;
    Ok(AffinePoint::new(-&inv, u * &inv * &inv))
}

/// Image on the cubic of a point `(x, y)` of the quartic: `v = -1/x`, `u = y/x^2`.
pub fn c3_pushforward(p: &AffinePoint) -> Result<AffinePoint> {
    let inv = p.x.recip().map_err(|_| Error::Precondition("the map is undefined at x = 0"))?;
    Ok(AffinePoint::new(-&inv, &p.y * &inv * &inv))
}

/// Rational points of the cubic above `v`; empty if `rhs(v)` is not a rational square.
pub fn c3prime_points_at(v: &Rat) -> Vec<AffinePoint> {
    match c3prime_rhs().eval(v).sqrt() {
        None => Vec::new(),
        Some(u) if u.is_zero() => alloc::vec![AffinePoint::new(v.clone(), u)],
        Some(u) => alloc::vec![AffinePoint::new(v.clone(), u.clone()), AffinePoint::new(v.clone(), -u)],
    }
}
