//! Dense univariate polynomials over the rationals.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::zpoly::{self, ZPoly};

/// Polynomial with rational coefficients, stored low-to-high.
///
/// The coefficient vector never ends in a zero; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPoly {
    coeffs: Vec<Rat>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> QPoly {
        QPoly::constant(Rat::one())
    }

    /// The polynomial `x`.
    pub fn x() -> QPoly {
        QPoly::monomial(Rat::one(), 1)
    }

    pub fn constant(c: Rat) -> QPoly {
        QPoly::from_coeffs(vec![c])
    }

    pub fn monomial(c: Rat, k: usize) -> QPoly {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        QPoly::from_coeffs(v)
    }

    /// `x - c`
    pub fn linear_root(c: &Rat) -> QPoly {
        QPoly::from_coeffs(vec![-c, Rat::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> QPoly {
        while coeffs.last().is_some_and(Rat::is_zero) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> QPoly {
        QPoly::from_coeffs(coeffs.iter().map(|&c| Rat::from_i64(c)).collect())
    }

    pub(crate) fn from_zpoly(z: &[BigInt]) -> QPoly {
        QPoly::from_coeffs(z.iter().cloned().map(Rat::from_int).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree, mapping the zero polynomial to 0.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(Rat::is_one)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &Rat) -> QPoly {
        if c.is_zero() {
            return QPoly::zero();
        }
        QPoly { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> QPoly {
        match self.leading() {
            None => QPoly::zero(),
            Some(l) if l.is_one() => self.clone(),
            Some(l) => self.scale(&l.recip().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, mut e: u32) -> QPoly {
        let mut base = self.clone();
        let mut acc = QPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs.iter().rev().fold(Rat::zero(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * Rat::from_i64(k as i64))
                .collect(),
        )
    }

    /// `self(g(x))`, by Horner's rule on polynomials.
    pub fn compose(&self, g: &QPoly) -> QPoly {
        let mut acc = QPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &QPoly::constant(c.clone());
        }
        acc
    }

    /// Quotient and remainder with `deg(rem) < deg(divisor)`.
    pub fn divrem(&self, divisor: &QPoly) -> Result<(QPoly, QPoly)> {
        let lead = divisor.leading().ok_or(Error::ZeroPolynomial)?;
        let dd = divisor.deg();
        if self.coeffs.len() < divisor.coeffs.len() {
            return Ok((QPoly::zero(), self.clone()));
        }
        let inv = lead.recip()?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); self.coeffs.len() - dd];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dd];
            if top.is_zero() {
                continue;
            }
            let q = top * &inv;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &(&q * d);
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        Ok((QPoly::from_coeffs(quot), QPoly::from_coeffs(rem)))
    }

    /// Quotient when `divisor` divides `self` exactly.
    pub fn div_exact(&self, divisor: &QPoly) -> Option<QPoly> {
        let (q, r) = self.divrem(divisor).ok()?;
        r.is_zero().then_some(q)
    }

    /// Writes `self = content * p` with `p` primitive in `Z[x]`, positive leading coefficient.
    pub(crate) fn to_primitive(&self) -> (Rat, ZPoly) {
        if self.is_zero() {
            return (Rat::zero(), Vec::new());
        }
        let lcm = self.coeffs.iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let scaled: ZPoly = self.coeffs.iter().map(|c| c.numer() * (&lcm / c.denom())).collect();
        let prim = zpoly::primitive_part(&scaled);
        let content = &Rat::from_int(scaled.last().unwrap().clone())
            / &Rat::from_int(prim.last().unwrap().clone() * &lcm);
        (content, prim)
    }

    /// `f(x + c)`: coefficient `j` of the result is the coefficient of `(x - c)^j` in `f`.
    ///
    /// Computed by repeated synthetic division by `x - c`.
    pub fn taylor_shift(&self, c: &Rat) -> QPoly {
        let mut work = self.coeffs.clone();
        let n = work.len();
        // After pass i, work[i] holds the i-th Taylor coefficient.
        for i in 0..n {
            for k in (i..n - 1).rev() {
                let t = &work[k + 1] * c;
                work[k] += &t;
            }
        }
        QPoly::from_coeffs(work)
    }

    /// Parses the comma-separated low-to-high coefficient list (`"1,0,-4/3"`).
    pub fn parse_coeff_list(s: &str) -> Result<QPoly> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(QPoly::zero());
        }
        let coeffs = s.split(',').map(|t| t.trim().parse()).collect::<Result<Vec<Rat>>>()?;
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Inverse of [`QPoly::parse_coeff_list`].
    pub fn to_coeff_list(&self) -> String {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                out.push(',');
            }
            let _ = write!(out, "{c}");
        }
        out
    }
}

/// Monic gcd via primitive integer images and the subresultant PRS.
///
/// `gcd(f, 0)` is `monic(f)`; both zero is an error.
pub fn gcd_monic(f: &QPoly, g: &QPoly) -> Result<QPoly> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => return Err(Error::ZeroPolynomial),
        (false, true) => return Ok(f.monic()),
        (true, false) => return Ok(g.monic()),
        _ => {}
    }
    let (_, fz) = f.to_primitive();
    let (_, gz) = g.to_primitive();
    Ok(QPoly::from_zpoly(&zpoly::subresultant_gcd(&fz, &gz)).monic())
}

/// Monic radical `f / gcd(f, f')`.
pub fn squarefree_part(f: &QPoly) -> Result<QPoly> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if f.is_constant() {
        return Ok(QPoly::one());
    }
    let g = gcd_monic(f, &f.derivative())?;
    Ok(f.div_exact(&g).expect("gcd divides f").monic())
}

/// Yun's squarefree decomposition: monic squarefree `s_i` with
/// `f = lc(f) * prod s_i^i`. Entries with `s_i = 1` are omitted.
pub fn squarefree_decomposition(f: &QPoly) -> Result<Vec<(QPoly, usize)>> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::new();
    if f.is_constant() {
        return Ok(out);
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = gcd_monic(&f, &df)?;
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut d = &c - &b.derivative();
    let mut i = 1;
    loop {
        let a = gcd_monic(&b, &d)?;
        if !a.is_constant() {
            out.push((a.clone(), i));
        }
        b = b.div_exact(&a).unwrap();
        if b.is_constant() {
            break;
        }
        c = d.div_exact(&a).unwrap();
        d = &c - &b.derivative();
        i += 1;
    }
    Ok(out)
}

/// Monic product of the squarefree components of odd multiplicity: `f` divided by
/// its largest square divisor, up to a constant.
pub fn odd_part(f: &QPoly) -> Result<QPoly> {
    let parts = squarefree_decomposition(f)?;
    Ok(parts.iter().filter(|(_, m)| m % 2 == 1).fold(QPoly::one(), |acc, (p, _)| &acc * p))
}

impl<'a> Add<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<'a> Sub<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        QPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<'a> Mul<&'a QPoly> for &'a QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += &(a * b);
                }
            }
        }
        QPoly::from_coeffs(out)
    }
}

impl Neg for &QPoly {
    type Output = QPoly;
    fn neg(self) -> QPoly {
        QPoly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

macro_rules! forward_poly_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: QPoly) -> QPoly {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $tr<&'a QPoly> for QPoly {
            type Output = QPoly;
            fn $method(self, rhs: &QPoly) -> QPoly {
                (&self).$method(rhs)
            }
        }
    };
}

forward_poly_binop!(Add, add);
forward_poly_binop!(Sub, sub);
forward_poly_binop!(Mul, mul);

/// Human-readable form in `x^k` notation, highest degree first.
impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                write!(f, "{mag}")?;
                if k > 0 {
                    f.write_str("*")?;
                }
            }
            match k {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPoly({self})")
    }
}

#[cfg(feature = "serde")]
mod serde_impls {
    use super::QPoly;
    use crate::arith::Rat;
    use alloc::vec::Vec;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    impl Serialize for QPoly {
        fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
            self.coeffs.serialize(s)
        }
    }

    impl<'de> Deserialize<'de> for QPoly {
        fn deserialize<D: Deserializer<'de>>(d: D) -> Result<QPoly, D::Error> {
            Ok(QPoly::from_coeffs(Vec::<Rat>::deserialize(d)?))
        }
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use alloc::string::ToString;

    pub(crate) fn q(s: &str) -> QPoly {
        QPoly::parse_coeff_list(s).unwrap()
    }

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    // t_3 for gamma = 0 as listed: x^4 + 2x^3 + x^2 + x
    const T3_GAMMA0: &str = "0,1,1,2,1";

    #[test]
    fn product_of_pair() {
        let p = q("2/3,-2,1") * q("2/3,2,1");
        assert_eq!(p, q("4/9,0,-8/3,0,1"));
        let f = q("1,2,3");
        assert_eq!(&f * &QPoly::one(), f);
        let (quo, rem) = q("0,0,0,1").divrem(&q("0,0,1")).unwrap();
        assert_eq!((quo, rem), (QPoly::x(), QPoly::zero()));
        assert_eq!(f.divrem(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn composition() {
        assert_eq!(q("0,0,1").compose(&q("1,1")), q("1,2,1"));
        let g = q("-4/3,0,1");
        assert_eq!(g.compose(&g), q("4/9,0,-8/3,0,1"));
        let f = q("3,-1,5,7");
        assert_eq!(f.compose(&QPoly::x()), f);
    }

    #[test]
    fn derivatives() {
        assert_eq!(q("1,1,1").derivative(), q("1,2"));
        assert_eq!(q("5").derivative(), QPoly::zero());
        assert_eq!(q(T3_GAMMA0).derivative(), q("1,2,6,4"));
    }

    #[test]
    fn gcds() {
        assert_eq!(gcd_monic(&q("1/4,1,1"), &q("1,2")).unwrap(), q("1/2,1"));
        assert_eq!(gcd_monic(&q("2,4"), &QPoly::zero()).unwrap(), q("1/2,1"));
        // Euclid by hand: x^2 + x = (2x+1)(x/2 + 1/4) - 1/4, so the gcd is 1.
        assert_eq!(gcd_monic(&q("0,1,1"), &q("1,2")).unwrap(), QPoly::one());
        assert_eq!(gcd_monic(&QPoly::zero(), &QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn radicals() {
        assert_eq!(squarefree_part(&q("1/4,1,1")).unwrap(), q("1/2,1"));
        assert_eq!(squarefree_part(&q("2,0,6")).unwrap(), q("1/3,0,1"));
        assert_eq!(squarefree_part(&q("0,0,0,1")).unwrap(), QPoly::x());
        assert_eq!(squarefree_part(&QPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn yun_decomposition() {
        // (x-1)^2 (x-2)(x-3) (x+5)^3
        let f = q("-1,1").pow(2) * q("-2,1") * q("-3,1") * q("5,1").pow(3);
        let parts = squarefree_decomposition(&f.scale(&r("-3/2"))).unwrap();
        assert_eq!(parts, alloc::vec![(q("6,-5,1"), 1), (q("-1,1"), 2), (q("5,1"), 3)]);
        assert_eq!(odd_part(&f).unwrap(), q("6,-5,1") * q("5,1"));
        assert_eq!(odd_part(&q("1/4,1,1")).unwrap(), QPoly::one());
    }

    #[test]
    fn taylor_shifts() {
        assert_eq!(q("0,0,1").taylor_shift(&Rat::one()), q("1,2,1"));
        let p1 = q("-1,4,0,-3,1");
        assert_eq!(p1.taylor_shift(&r("1/2")).coeff(0), r("11/16"));
        assert_eq!(p1.taylor_shift(&Rat::zero()), p1);
    }

    #[test]
    fn evaluation() {
        assert_eq!(q("-1,4,0,-3,1").eval(&r("1/2")), r("11/16"));
        assert_eq!(q("7,1,1").eval(&Rat::zero()), r("7"));
        // t_3 with gamma = 1/2 at m = -7/4
        assert_eq!(q("1/2,1,1,2,1").eval(&r("-7/4")), r("121/256"));
    }

    #[test]
    fn text_forms() {
        let f = q("-1,4,0,-3,1");
        assert_eq!(f.to_string(), "x^4 - 3*x^3 + 4*x - 1");
        assert_eq!(q("4/9,0,-8/3").to_string(), "-8/3*x^2 + 4/9");
        assert_eq!(q("0,-1").to_string(), "-x");
        assert_eq!(QPoly::parse_coeff_list(&f.to_coeff_list()).unwrap(), f);
        assert!(QPoly::parse_coeff_list("1,,2").is_err());
    }

    pub(crate) mod strategies {
        use super::*;
        use proptest::prelude::*;

        pub fn rat() -> impl Strategy<Value = Rat> {
            (-30i64..30, 1i64..8).prop_map(|(n, d)| Rat::frac(n, d))
        }

        pub fn poly(max_deg: usize) -> impl Strategy<Value = QPoly> {
            proptest::collection::vec(rat(), 0..=max_deg + 1).prop_map(QPoly::from_coeffs)
        }
    }

    mod props {
        use super::strategies::*;
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn compose_associative(f in poly(4), g in poly(4), h in poly(4)) {
                prop_assert_eq!(f.compose(&g.compose(&h)), f.compose(&g).compose(&h));
            }

            #[test]
            fn derivative_linear_and_leibniz(f in poly(5), g in poly(5), c in rat()) {
                prop_assert_eq!((&f + &g.scale(&c)).derivative(), &f.derivative() + &g.derivative().scale(&c));
                prop_assert_eq!((&f * &g).derivative(), &(&f.derivative() * &g) + &(&f * &g.derivative()));
            }

            #[test]
            fn radical_divides_and_is_squarefree(f in poly(3), g in poly(2)) {
                let h = &(&f * &f) * &g;
                prop_assume!(!h.is_zero());
                let s = squarefree_part(&h).unwrap();
                prop_assert!(h.divrem(&s).unwrap().1.is_zero());
                prop_assert_eq!(gcd_monic(&s, &s.derivative()).unwrap().deg(), 0);
            }

            #[test]
            fn taylor_shift_inverts(f in poly(6), c in rat()) {
                prop_assert_eq!(f.taylor_shift(&c).taylor_shift(&-&c), f.clone());
                prop_assert_eq!(f.taylor_shift(&c), f.compose(&q("0,1").add_constant(&c)));
            }

            #[test]
            fn eval_of_composition(f in poly(4), g in poly(4), x in rat()) {
                prop_assert_eq!(f.compose(&g).eval(&x), f.eval(&g.eval(&x)));
            }

            #[test]
            fn divrem_reconstructs(f in poly(7), g in poly(3)) {
                prop_assume!(!g.is_zero());
                let (quo, rem) = f.divrem(&g).unwrap();
                prop_assert_eq!(&(&quo * &g) + &rem, f);
                prop_assert!(rem.is_zero() || rem.deg() < g.deg());
            }
        }
    }

    impl QPoly {
        fn add_constant(&self, c: &Rat) -> QPoly {
            self + &QPoly::constant(c.clone())
        }
    }
}
