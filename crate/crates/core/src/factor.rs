//! Factorization of univariate polynomials over the rationals.
//!
//! The squarefree part is cleared to a primitive integer polynomial, rational
//! roots are split off, and the rest goes through Zassenhaus: factor modulo a
//! small prime, Hensel-lift past twice the Mignotte bound, then recombine the
//! lifted factors by subset enumeration.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::arith::{is_square, Rat};
use crate::error::{Error, Result};
use crate::fp::{mod_floor, FpPoly};
use crate::poly::{squarefree_part, QPoly};
use crate::zpoly::{self, ZPoly};

/// A monic irreducible factor and its multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct Factor {
    pub poly: QPoly,
    pub mult: usize,
}

/// `unit * prod poly_i^mult_i`, factors sorted by degree then coefficient list.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FactorList {
    pub unit: Rat,
    pub factors: Vec<Factor>,
}

impl FactorList {
    /// Multiplies the factorization back out.
    pub fn reconstruct(&self) -> QPoly {
        let mut acc = QPoly::constant(self.unit.clone());
        for f in &self.factors {
            acc = &acc * &f.poly.pow(f.mult as u32);
        }
        acc
    }

    /// Number of irreducible factors counted with multiplicity.
    pub fn count_with_multiplicity(&self) -> usize {
        self.factors.iter().map(|f| f.mult).sum()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|f| f.mult * f.poly.deg()).sum()
    }

    /// True when the factored polynomial is irreducible (one factor, multiplicity one).
    pub fn is_irreducible(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].mult == 1
    }

    /// The factors with multiplicity expanded, in canonical order.
    pub fn expanded(&self) -> Vec<&QPoly> {
        self.factors.iter().flat_map(|f| core::iter::repeat_n(&f.poly, f.mult)).collect()
    }
}

/// Canonical factor order: degree, then coefficients low-to-high.
pub fn canonical_cmp(a: &QPoly, b: &QPoly) -> Ordering {
    a.deg().cmp(&b.deg()).then_with(|| a.coeffs().cmp(b.coeffs()))
}

/// Complete factorization into monic irreducibles over the rationals.
pub fn factor(f: &QPoly) -> Result<FactorList> {
    let unit = f.leading().ok_or(Error::ZeroPolynomial)?.clone();
    if f.is_constant() {
        return Ok(FactorList { unit, factors: Vec::new() });
    }
    let radical = squarefree_part(f)?;
    let mut irreducibles = factor_squarefree(&radical);
    irreducibles.sort_by(canonical_cmp);
    let mut rest = f.monic();
    let mut factors = Vec::with_capacity(irreducibles.len());
    for poly in irreducibles {
        let mut mult = 0;
        while let Some(q) = rest.div_exact(&poly) {
            rest = q;
            mult += 1;
        }
        factors.push(Factor { poly, mult });
    }
    debug_assert!(rest.is_one_poly());
    Ok(FactorList { unit, factors })
}

/// Irreducibility over the rationals; constants are rejected.
pub fn is_irreducible(f: &QPoly) -> Result<bool> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Err(Error::ConstantPolynomial);
    }
    if f.deg() == 1 {
        return Ok(true);
    }
    Ok(factor(f)?.is_irreducible())
}

impl QPoly {
    fn is_one_poly(&self) -> bool {
        self.deg() == 0 && self.coeff(0).is_one()
    }
}

/// Monic irreducible factors of a monic squarefree polynomial.
fn factor_squarefree(radical: &QPoly) -> Vec<QPoly> {
    let (_, mut h) = radical.to_primitive();
    let mut out = Vec::new();
    if zpoly::degree(&h) <= 1 {
        out.push(radical.clone());
        return out;
    }
    if h[0].is_zero() {
        out.push(QPoly::x());
        h.remove(0);
    }
    for root in bounded_rational_roots(&h) {
        // root = a/b  <=>  factor b*x - a
        let lin = vec![-root.numer().clone(), root.denom().clone()];
        h = zpoly::exact_div(&h, &lin).expect("rational root divides");
        out.push(QPoly::linear_root(&root));
    }
    match zpoly::degree(&h) {
        0 => {}
        1 => out.push(QPoly::from_zpoly(&h).monic()),
        _ => out.extend(zassenhaus(&h).into_iter().map(|g| QPoly::from_zpoly(&g).monic())),
    }
    out
}

/// Above these sizes divisor enumeration is skipped; Zassenhaus still finds
/// the linear factors.
const ROOT_SEARCH_MAX_ABS: u64 = 1_000_000_000;
const ROOT_SEARCH_MAX_CANDIDATES: usize = 4096;

/// Rational roots of a squarefree integer polynomial with `h(0) != 0`, by the
/// rational root theorem, when the end coefficients are small enough to factor.
fn bounded_rational_roots(h: &[BigInt]) -> Vec<Rat> {
    let small = |c: &BigInt| c.abs().to_u64().filter(|&v| v <= ROOT_SEARCH_MAX_ABS);
    let (Some(c0), Some(cn)) = (small(&h[0]), small(h.last().unwrap())) else {
        return Vec::new();
    };
    let (num_div, den_div) = (divisors(c0), divisors(cn));
    if num_div.len() * den_div.len() > ROOT_SEARCH_MAX_CANDIDATES {
        return Vec::new();
    }
    rational_roots_from_divisors(h, &num_div, &den_div)
}

pub(crate) fn rational_roots_from_divisors(h: &[BigInt], num_div: &[u64], den_div: &[u64]) -> Vec<Rat> {
    let n = zpoly::degree(h) as u32;
    let mut roots = Vec::new();
    for &b in den_div {
        for &a in num_div {
            if a.gcd(&b) != 1 {
                continue;
            }
            for sign in [-1i64, 1] {
                let a = BigInt::from(a) * sign;
                let b = BigInt::from(b);
                // b^n h(a/b) = sum h_i a^i b^(n-i)
                let mut acc = BigInt::zero();
                let mut apow = BigInt::one();
                for (i, c) in h.iter().enumerate() {
                    if !c.is_zero() {
                        acc += c * &apow * num_traits::pow(b.clone(), (n - i as u32) as usize);
                    }
                    apow *= &a;
                }
                if acc.is_zero() {
                    roots.push(Rat::new(a, b).unwrap());
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Positive divisors by trial division.
pub(crate) fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Odd primes below this are tried as moduli.
const PRIME_SCAN_LIMIT: u64 = 10_000;
/// Number of usable primes compared before committing to the one with the fewest factors.
const PRIME_TRIALS: usize = 5;

struct ModularImage {
    p: u64,
    factor_count: usize,
    ddf: Vec<(FpPoly, usize)>,
}

/// Irreducible factors (primitive, positive leading coefficient) of a squarefree
/// primitive integer polynomial of degree at least 2.
fn zassenhaus(h: &[BigInt]) -> Vec<ZPoly> {
    let n = zpoly::degree(h);
    let lc = h.last().unwrap().clone();
    let deriv: ZPoly = h.iter().enumerate().skip(1).map(|(k, c)| c * BigInt::from(k)).collect();

    // Degrees d such that some sub-product of the modular factors has degree d,
    // intersected over every prime examined.
    let mut feasible = vec![true; n + 1];
    let mut best: Option<ModularImage> = None;
    let mut trials = 0;
    for p in odd_primes(PRIME_SCAN_LIMIT) {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let hp = FpPoly::from_ints(p, h);
        let dp = FpPoly::from_ints(p, &deriv);
        if hp.gcd(&dp).degree() != Some(0) {
            continue;
        }
        let ddf = hp.monic().distinct_degree();
        let factor_count: usize = ddf.iter().map(|(g, d)| g.degree().unwrap() / d).sum();
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for (g, d) in &ddf {
            for _ in 0..g.degree().unwrap() / d {
                for k in (*d..=n).rev() {
                    if reach[k - d] {
                        reach[k] = true;
                    }
                }
            }
        }
        for (f, r) in feasible.iter_mut().zip(&reach) {
            *f &= *r;
        }
        if factor_count == 1 || feasible[1..n].iter().all(|f| !f) {
            return vec![h.to_vec()];
        }
        if best.as_ref().is_none_or(|b| factor_count < b.factor_count) {
            best = Some(ModularImage { p, factor_count, ddf });
        }
        trials += 1;
        if trials == PRIME_TRIALS {
            break;
        }
    }
    let image = best.expect("some prime below the scan limit is usable");
    let p = image.p;
    let mut modular = Vec::with_capacity(image.factor_count);
    for (g, _) in &image.ddf {
        modular.extend(g.factor_squarefree().expect("squarefree modulo p"));
    }

    // p^k > 2 * |lc| * Mignotte bound
    let bound = (zpoly::mignotte_bound(h) * lc.abs()) << 1;
    let pb = BigInt::from(p);
    let mut modulus = pb.clone();
    let mut levels = 0;
    while modulus <= bound {
        modulus = &modulus * &modulus;
        levels += 1;
    }
    let lifted = hensel_lift_all(h, &modular, p, levels);
    recombine(h, lifted, &modulus, &feasible)
}

fn odd_primes(limit: u64) -> impl Iterator<Item = u64> {
    (3..limit).step_by(2).filter(|&n| (3..).step_by(2).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn reduce(a: &[BigInt], m: &BigInt) -> ZPoly {
    let mut out: ZPoly = a.iter().map(|c| mod_floor(c, m)).collect();
    zpoly::trim(&mut out);
    out
}

fn mul_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    reduce(&zpoly::mul(a, b), m)
}

fn add_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let v: ZPoly = (0..n).map(|k| a.get(k).unwrap_or(&zero) + b.get(k).unwrap_or(&zero)).collect();
    reduce(&v, m)
}

fn sub_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let zero = BigInt::zero();
    let v: ZPoly = (0..n).map(|k| a.get(k).unwrap_or(&zero) - b.get(k).unwrap_or(&zero)).collect();
    reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn divrem_monic_mod(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let mut r = reduce(a, m);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let db = b.len() - 1;
    let mut q = vec![BigInt::zero(); r.len() - db];
    for k in (0..q.len()).rev() {
        let top = r[k + db].clone();
        if top.is_zero() {
            continue;
        }
        for (j, bc) in b.iter().enumerate() {
            r[k + j] = mod_floor(&(&r[k + j] - &top * bc), m);
        }
        q[k] = top;
    }
    r.truncate(db);
    zpoly::trim(&mut r);
    zpoly::trim(&mut q);
    (q, r)
}

fn inverse_mod(a: &BigInt, m: &BigInt) -> BigInt {
    let e = a.extended_gcd(m);
    debug_assert!(e.gcd.is_one());
    mod_floor(&e.x, m)
}

/// One quadratic Hensel step: from `f = g h (mod m)`, `s g + t h = 1 (mod m)`
/// with `g, h` monic, produce the same relations modulo `m^2`.
fn hensel_step(f: &[BigInt], g: &mut ZPoly, h: &mut ZPoly, s: &mut ZPoly, t: &mut ZPoly, m2: &BigInt) {
    let e = sub_mod(f, &mul_mod(g, h, m2), m2);
    let (q, r) = divrem_monic_mod(&mul_mod(s, &e, m2), h, m2);
    let g_new = add_mod(&add_mod(g, &mul_mod(t, &e, m2), m2), &mul_mod(&q, g, m2), m2);
    let h_new = add_mod(h, &r, m2);
    let b = sub_mod(&add_mod(&mul_mod(s, &g_new, m2), &mul_mod(t, &h_new, m2), m2), &[BigInt::one()], m2);
    let (c, d) = divrem_monic_mod(&mul_mod(s, &b, m2), &h_new, m2);
    *s = sub_mod(s, &d, m2);
    *t = sub_mod(&sub_mod(t, &mul_mod(t, &b, m2), m2), &mul_mod(&c, &g_new, m2), m2);
    *g = g_new;
    *h = h_new;
}

/// Lifts the monic factorization `h / lc(h) = prod u_i (mod p)` to modulus `p^(2^levels)`.
fn hensel_lift_all(h: &[BigInt], modular: &[FpPoly], p: u64, levels: u32) -> Vec<ZPoly> {
    let pb = BigInt::from(p);
    let mut moduli = vec![pb.clone()];
    for _ in 0..levels {
        let last = moduli.last().unwrap();
        moduli.push(last * last);
    }
    let top = moduli.last().unwrap().clone();
    let lc_inv = inverse_mod(h.last().unwrap(), &top);
    let monic_target: ZPoly = reduce(&h.iter().map(|c| c * &lc_inv).collect::<ZPoly>(), &top);

    let mut lifted = Vec::with_capacity(modular.len());
    let mut target = monic_target;
    for i in 0..modular.len() - 1 {
        let g0 = &modular[i];
        let h0 = modular[i + 1..].iter().skip(1).fold(modular[i + 1].clone(), |acc, u| acc.mul(u));
        let (one, s0, t0) = g0.xgcd(&h0);
        debug_assert_eq!(one.degree(), Some(0));
        let (mut g, mut hh, mut s, mut t) = (g0.to_ints(), h0.to_ints(), s0.to_ints(), t0.to_ints());
        for m2 in &moduli[1..] {
            let f = reduce(&target, m2);
            hensel_step(&f, &mut g, &mut hh, &mut s, &mut t, m2);
        }
        lifted.push(g);
        target = hh;
    }
    lifted.push(target);
    lifted
}

fn symmetric(a: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    let mut out: ZPoly = a.iter().map(|c| { let r = mod_floor(c, m); if r > half { r - m } else { r } }).collect();
    zpoly::trim(&mut out);
    out
}

/// Recombines lifted modular factors into true factors by subset enumeration
/// in increasing cardinality.
fn recombine(h: &[BigInt], mut lifted: Vec<ZPoly>, modulus: &BigInt, feasible: &[bool]) -> Vec<ZPoly> {
    let mut rest: ZPoly = h.to_vec();
    let mut found = Vec::new();
    let mut size = 1;
    'sizes: while 2 * size <= lifted.len() {
        let mut combo: Vec<usize> = (0..size).collect();
        loop {
            let deg: usize = combo.iter().map(|&i| lifted[i].len() - 1).sum();
            if feasible[deg] {
                if let Some((g, quotient)) = try_subset(&rest, &lifted, &combo, modulus) {
                    found.push(g);
                    rest = quotient;
                    for &i in combo.iter().rev() {
                        lifted.remove(i);
                    }
                    // Stay at this cardinality with the reduced list.
                    continue 'sizes;
                }
            }
            if !next_combination(&mut combo, lifted.len()) {
                break;
            }
        }
        size += 1;
    }
    if zpoly::degree(&rest) > 0 {
        found.push(zpoly::primitive_part(&rest));
    }
    found
}

fn try_subset(rest: &[BigInt], lifted: &[ZPoly], combo: &[usize], modulus: &BigInt) -> Option<(ZPoly, ZPoly)> {
    let lc = rest.last().unwrap();
    let lc_term = vec![lc.clone()];
    // Cheap constant-term test before the full product.
    let c0 = combo.iter().fold(mod_floor(lc, modulus), |acc, &i| mod_floor(&(acc * &lifted[i][0]), modulus));
    let half = modulus >> 1;
    let c0 = if c0 > half { c0 - modulus } else { c0 };
    if c0.is_zero() || !(lc * &rest[0]).is_multiple_of(&c0) {
        return None;
    }
    let prod = combo.iter().fold(lc_term, |acc, &i| mul_mod(&acc, &lifted[i], modulus));
    let g = zpoly::primitive_part(&symmetric(&prod, modulus));
    let q = zpoly::exact_div(rest, &g)?;
    Some((g, q))
}

fn next_combination(combo: &mut [usize], n: usize) -> bool {
    let k = combo.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if combo[i] < n - k + i {
            combo[i] += 1;
            for j in i + 1..k {
                combo[j] = combo[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// Independent check for monic quartics: a split into two monic rational
/// quadratics, found from the rational roots of the resolvent cubic.
///
/// With `f = (x^2 + a x + b)(x^2 + c x + d)` the sum `s = b + d` is a root of
/// `s^3 - f2 s^2 + (f1 f3 - 4 f0) s - (f3^2 f0 - 4 f2 f0 + f1^2)`; each rational
/// root gives `{a, c}` and `{b, d}` as roots of two quadratics.
pub fn quad_split_oracle(f: &QPoly) -> Result<Option<(QPoly, QPoly)>> {
    if f.degree() != Some(4) {
        return Err(Error::Precondition("quartic input required"));
    }
    if !f.is_monic() {
        return Err(Error::Precondition("monic input required"));
    }
    let (f0, f1, f2, f3) = (f.coeff(0), f.coeff(1), f.coeff(2), f.coeff(3));
    let four = Rat::from_i64(4);
    let resolvent = QPoly::from_coeffs(vec![
        -(&f3 * &f3 * &f0 - &four * &f2 * &f0 + &f1 * &f1),
        &f1 * &f3 - &four * &f0,
        -&f2,
        Rat::one(),
    ]);
    for s in rational_roots_exhaustive(&resolvent) {
        // a + c = f3, a c = f2 - s;  b + d = s, b d = f0
        let Some((a, c)) = quadratic_roots(&f3, &(&f2 - &s)) else { continue };
        let Some((b, d)) = quadratic_roots(&s, &f0) else { continue };
        for (b, d) in [(b.clone(), d.clone()), (d, b)] {
            if &a * &d + &b * &c == f1 {
                let p1 = QPoly::from_coeffs(vec![b, a.clone(), Rat::one()]);
                let p2 = QPoly::from_coeffs(vec![d, c.clone(), Rat::one()]);
                if &p1 * &p2 == *f {
                    let (p1, p2) = if canonical_cmp(&p1, &p2) == Ordering::Greater { (p2, p1) } else { (p1, p2) };
                    return Ok(Some((p1, p2)));
                }
            }
        }
    }
    Ok(None)
}

/// Roots of `z^2 - sum z + prod` when rational.
fn quadratic_roots(sum: &Rat, prod: &Rat) -> Option<(Rat, Rat)> {
    let disc = sum * sum - Rat::from_i64(4) * prod;
    let r = is_square(&disc)?;
    let two = Rat::from_i64(2);
    Some(((sum + &r) / &two, (sum - &r) / &two))
}

/// All rational roots by the rational root theorem with full divisor enumeration.
/// Meant for small inputs.
pub fn rational_roots_exhaustive(f: &QPoly) -> Vec<Rat> {
    let (_, mut h) = f.to_primitive();
    let mut roots = Vec::new();
    if h.is_empty() {
        return roots;
    }
    if h[0].is_zero() {
        roots.push(Rat::zero());
        while h[0].is_zero() {
            h.remove(0);
        }
    }
    if h.len() > 1 {
        let c0 = h[0].abs().to_u64().expect("small constant term");
        let cn = h.last().unwrap().abs().to_u64().expect("small leading coefficient");
        roots.extend(rational_roots_from_divisors(&h, &divisors(c0), &divisors(cn)));
    }
    roots.sort();
    roots.dedup();
    roots
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::tests::q;

    fn fl(unit: &str, fs: &[(&str, usize)]) -> FactorList {
        FactorList {
            unit: unit.parse().unwrap(),
            factors: fs.iter().map(|(p, m)| Factor { poly: q(p), mult: *m }).collect(),
        }
    }

    #[test]
    fn pair_from_second_iterate() {
        let f = q("4/9,0,-8/3,0,1");
        assert_eq!(factor(&f).unwrap(), fl("1", &[("2/3,-2,1", 1), ("2/3,2,1", 1)]));
        assert!(!is_irreducible(&f).unwrap());
        assert!(is_irreducible(&q("-4/3,0,1")).unwrap());
    }

    #[test]
    fn third_iterate_of_golden_map() {
        // (x^2 - x - 1) iterated three times
        let g = q("-1,-1,1");
        let g3 = g.compose(&g).compose(&g);
        let got = factor(&g3).unwrap();
        assert_eq!(got, fl("1", &[("-1,4,0,-3,1", 1), ("1,1,-3,-1,1", 1)]));
    }

    #[test]
    fn small_irreducibles() {
        assert_eq!(factor(&q("1,0,1")).unwrap(), fl("1", &[("1,0,1", 1)]));
        // Eisenstein at 2
        assert!(is_irreducible(&q("2,0,2,0,1")).unwrap());
        assert_eq!(is_irreducible(&q("5")), Err(Error::ConstantPolynomial));
        assert_eq!(factor(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn repeated_factors_and_units() {
        // -3/2 (x - 1/2)^3 (x^2 + 1) x
        let f = (q("-1/2,1").pow(3) * q("1,0,1") * QPoly::x()).scale(&"-3/2".parse().unwrap());
        let got = factor(&f).unwrap();
        assert_eq!(got, fl("-3/2", &[("-1/2,1", 3), ("0,1", 1), ("1,0,1", 1)]));
        assert_eq!(got.reconstruct(), f);
        assert_eq!(factor(&q("7")).unwrap(), fl("7", &[]));
    }

    #[test]
    fn swinnerton_dyer_is_irreducible() {
        // Minimal polynomial of sqrt2 + sqrt3 + sqrt5: splits into linears or
        // quadratics modulo every prime, so recombination has to reject many subsets.
        let f = q("576,0,-960,0,352,0,-40,0,1");
        assert!(is_irreducible(&f).unwrap());
    }

    #[test]
    fn large_coefficients_need_lifting() {
        let a = q("123456789,-987654321,1,0,1");
        let b = q("-31415926535,0,27182818,1");
        let f = &a * &b;
        let got = factor(&f).unwrap();
        assert_eq!(got.reconstruct(), f);
        assert_eq!(got.factors.len(), 2);
    }

    #[test]
    fn degree_sixteen_iterate() {
        // g(x) = x^2 - x - 1; g^4 is reducible with two factors of degree 8.
        let g = q("-1,-1,1");
        let g4 = g.compose(&g).compose(&g).compose(&g);
        let got = factor(&g4).unwrap();
        assert_eq!(got.reconstruct(), g4);
        for f in &got.factors {
            assert!(f.poly.is_monic());
        }
        assert!(got.factors.len() >= 2);
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(
            quad_split_oracle(&q("4/9,0,-8/3,0,1")).unwrap(),
            Some((q("2/3,-2,1"), q("2/3,2,1")))
        );
        assert_eq!(
            quad_split_oracle(&(q("29/16,-3/2,1") * q("21/16,1/2,1"))).unwrap(),
            Some((q("21/16,1/2,1"), q("29/16,-3/2,1")))
        );
        assert_eq!(quad_split_oracle(&q("2,0,2,0,1")).unwrap(), None);
        assert!(quad_split_oracle(&q("1,1,1")).is_err());
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), [1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), [1]);
        assert_eq!(divisors(49), [1, 7, 49]);
    }
}
