//! The family `g(x) = (x - gamma)^2 + m + gamma`, its iterates, the critical-orbit
//! polynomials `t_i`, and detection of newly reducible iterates.
//!
//! An iterate `g^k` is *newly reducible* when `g^(k-1)` is irreducible and `g^k`
//! is not (with `g^0 = x`). When that happens for `k >= 2`:
//!
//! * `g^k` is a product of exactly two irreducible factors of degree `2^(k-1)`,
//!   exchanged by `x -> 2 gamma - x`;
//! * the critical value `g^k(gamma)` is a rational square.
//!
//! The square condition is only necessary, so searches use it to discard
//! candidates and full factorization to confirm the survivors.

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use crate::arith::{is_square, Rat};
use crate::error::{check_range, Error, Result};
use crate::factor::{factor, Factor, FactorList};
use crate::poly::QPoly;

/// Largest supported iterate (degree `2^8 = 256`).
pub const MAX_ITERATE: usize = 8;
/// Largest `n_max` accepted by [`detect`].
pub const MAX_DETECT_LEVEL: usize = 7;
pub const MAX_SEARCH_LEVEL: usize = 3;
pub const MAX_SEARCH_HEIGHT: u64 = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct FamilyParams {
    pub gamma: Rat,
    pub m: Rat,
}

impl FamilyParams {
    pub fn new(gamma: Rat, m: Rat) -> FamilyParams {
        FamilyParams { gamma, m }
    }
}

/// Factorization verdict for one iterate.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(tag = "verdict", rename_all = "snake_case"))]
pub enum Verdict {
    Irreducible,
    Reducible { factorization: FactorList },
}

impl Verdict {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Verdict::Irreducible)
    }

    pub fn factorization(&self) -> Option<&FactorList> {
        match self {
            Verdict::Irreducible => None,
            Verdict::Reducible { factorization } => Some(factorization),
        }
    }
}

/// Value of the critical orbit `g^(n+1)(gamma)` and whether it is a rational square.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SquareFilter {
    /// Iterate level `n + 1` the value belongs to.
    pub level: usize,
    pub value: Rat,
    pub is_square: bool,
    pub root: Option<Rat>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct IterateReport {
    pub params: FamilyParams,
    pub n_max: usize,
    /// Verdicts for `g^1 ..= g^(n_max + 1)`.
    pub verdicts: Vec<Verdict>,
    pub newly_reducible_at: Option<usize>,
    /// At the newly reducible level when it is at least 2; at level `n_max + 1`
    /// when nothing became reducible; absent when `g` itself is reducible.
    pub square_filter: Option<SquareFilter>,
    /// `p2(x) = ±p1(2 gamma - x)` for the split at `newly_reducible_at`, when that
    /// split has exactly two factors of equal degree.
    pub pairing_ok: Option<bool>,
}

impl IterateReport {
    /// Verdict for `g^level` (1-based).
    pub fn verdict(&self, level: usize) -> Option<&Verdict> {
        level.checked_sub(1).and_then(|i| self.verdicts.get(i))
    }

    /// The two factors `(p1, p2)` of the newly reducible iterate, if it splits into two.
    pub fn split_pair(&self) -> Option<(&QPoly, &QPoly)> {
        let k = self.newly_reducible_at?;
        two_factor_split(self.verdict(k)?.factorization()?)
    }
}

fn two_factor_split(fl: &FactorList) -> Option<(&QPoly, &QPoly)> {
    match fl.expanded().as_slice() {
        [a, b] if a.deg() == b.deg() => Some((a, b)),
        _ => None,
    }
}

/// `x^2 - 2 gamma x + (gamma^2 + m + gamma)`
pub fn build_g(params: &FamilyParams) -> QPoly {
    let FamilyParams { gamma, m } = params;
    QPoly::from_coeffs(alloc::vec![
        gamma * gamma + m + gamma,
        -(gamma + gamma),
        Rat::one(),
    ])
}

/// `g^n`, `1 <= n <= 8`.
pub fn iterate_g(params: &FamilyParams, n: usize) -> Result<QPoly> {
    check_range("n", n as u64, 1, MAX_ITERATE as u64)?;
    Ok(iterates(params, n).pop().unwrap())
}

/// `[g^1, ..., g^n]`, each computed from the previous as `(g^(k-1) - gamma)^2 + m + gamma`.
fn iterates(params: &FamilyParams, n: usize) -> Vec<QPoly> {
    let shift = QPoly::constant(params.gamma.clone());
    let offset = QPoly::constant(&params.m + &params.gamma);
    let mut out: Vec<QPoly> = Vec::with_capacity(n);
    out.push(build_g(params));
    while out.len() < n {
        let centered = out.last().unwrap() - &shift;
        out.push(&(&centered * &centered) + &offset);
    }
    out
}

/// Critical-orbit polynomial `t_i` in the variable `x` (standing for `m`):
/// `t_1 = x + gamma`, `t_i = (t_(i-1) - gamma)^2 + x + gamma`.
pub fn t_poly(gamma: &Rat, i: usize) -> Result<QPoly> {
    check_range("i", i as u64, 1, MAX_ITERATE as u64)?;
    let offset = &QPoly::x() + &QPoly::constant(gamma.clone());
    let mut t = offset.clone();
    for _ in 1..i {
        let centered = &t - &QPoly::constant(gamma.clone());
        t = &(&centered * &centered) + &offset;
    }
    Ok(t)
}

/// `g^k(gamma)` for `k = 1..=levels`.
pub fn critical_orbit(params: &FamilyParams, levels: usize) -> Vec<Rat> {
    let c = &params.m + &params.gamma;
    let mut out = Vec::with_capacity(levels);
    let mut v = c.clone();
    for _ in 0..levels {
        out.push(v.clone());
        let d = &v - &params.gamma;
        v = &d * &d + &c;
    }
    out
}

/// Computes `g^(n+1)(gamma)` and tests it for being a rational square.
pub fn square_filter(params: &FamilyParams, n: usize) -> Result<SquareFilter> {
    check_range("n", n as u64, 1, u32::MAX as u64)?;
    let value = critical_orbit(params, n + 1).pop().unwrap();
    let root = is_square(&value);
    Ok(SquareFilter { level: n + 1, is_square: root.is_some(), root, value })
}

/// Whether `p2(x) = (-1)^d p1(2 gamma - x)`, the pairing of the two factors of a
/// newly reducible iterate. Implies `p1(gamma) = p2(gamma)` for even `d`.
pub fn pairing_check(p1: &QPoly, p2: &QPoly, gamma: &Rat) -> Result<bool> {
    let (d1, d2) = (p1.deg(), p2.deg());
    if d1 != d2 || p1.is_zero() || p2.is_zero() {
        return Err(Error::DegreeMismatch { left: d1, right: d2 });
    }
    let reflect = QPoly::from_coeffs(alloc::vec![gamma + gamma, -Rat::one()]);
    let mut image = p1.compose(&reflect);
    if d1 % 2 == 1 {
        image = -&image;
    }
    Ok(image == *p2)
}

/// Factors `g^1 ..= g^(n_max+1)` and reports the first reducible level.
///
/// Once `g^k = prod q_j^e_j` is known, `g^(k+1) = prod q_j(g)^e_j` is factored
/// one composed factor at a time.
pub fn detect(params: &FamilyParams, n_max: usize) -> Result<IterateReport> {
    check_range("n_max", n_max as u64, 1, MAX_DETECT_LEVEL as u64)?;
    let g = build_g(params);
    let levels = n_max + 1;
    let mut verdicts = Vec::with_capacity(levels);
    let mut current: Option<FactorList> = None;
    let mut iterate = g.clone();
    for k in 1..=levels {
        if k > 1 {
            iterate = iterate.compose(&g);
        }
        let fl = match &current {
            None => factor(&iterate)?,
            Some(prev) => factor_composed(prev, &g)?,
        };
        if fl.is_irreducible() {
            verdicts.push(Verdict::Irreducible);
        } else {
            debug_assert_eq!(fl.reconstruct(), iterate);
            current = Some(fl.clone());
            verdicts.push(Verdict::Reducible { factorization: fl });
        }
    }
    let newly = verdicts.iter().position(|v| !v.is_irreducible()).map(|i| i + 1);
    let square_filter = match newly {
        Some(1) => None,
        Some(k) => Some(square_filter(params, k - 1)?),
        None => Some(square_filter(params, n_max)?),
    };
    let pairing_ok = match newly {
        Some(k) => match two_factor_split(verdicts[k - 1].factorization().unwrap()) {
            Some((p1, p2)) => Some(pairing_check(p1, p2, &params.gamma)?),
            None => None,
        },
        None => None,
    };
    Ok(IterateReport { params: params.clone(), n_max, verdicts, newly_reducible_at: newly, square_filter, pairing_ok })
}

fn factor_composed(prev: &FactorList, g: &QPoly) -> Result<FactorList> {
    let mut merged: Vec<Factor> = Vec::new();
    for f in &prev.factors {
        for h in factor(&f.poly.compose(g))?.factors {
            let mult = h.mult * f.mult;
            match merged.iter_mut().find(|e| e.poly == h.poly) {
                Some(e) => e.mult += mult,
                None => merged.push(Factor { poly: h.poly, mult }),
            }
        }
    }
    merged.sort_by(|a, b| crate::factor::canonical_cmp(&a.poly, &b.poly));
    // g is monic, so composing keeps the unit.
    Ok(FactorList { unit: prev.unit.clone(), factors: merged })
}

/// A candidate `m` found by [`search_m`].
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SearchHit {
    pub m: Rat,
    pub report: IterateReport,
}

fn check_search(n: usize, height: u64) -> Result<()> {
    check_range("n", n as u64, 1, MAX_SEARCH_LEVEL as u64)?;
    check_range("height", height, 1, MAX_SEARCH_HEIGHT)
}

/// All `m = a/b` of height at most `height` with `g^(n+1)` newly reducible,
/// ordered by height, then numerator, then denominator.
pub fn search_m(gamma: &Rat, n: usize, height: u64) -> Result<Vec<SearchHit>> {
    search_m_class(gamma, n, height, 1, 0)
}

/// The part of [`search_m`] whose numerators satisfy `a = residue (mod modulus)`.
///
/// Distinct residues partition the candidate set, so the classes can run on
/// separate workers and be merged with [`sort_hits`].
pub fn search_m_class(gamma: &Rat, n: usize, height: u64, modulus: u64, residue: u64) -> Result<Vec<SearchHit>> {
    check_search(n, height)?;
    if modulus == 0 || residue >= modulus {
        return Err(Error::Precondition("residue must be below a positive modulus"));
    }
    let h = height as i64;
    let mut hits = Vec::new();
    for b in 1..=h {
        for a in -h..=h {
            if (a.rem_euclid(modulus as i64)) as u64 != residue || a.gcd(&b) != 1 {
                continue;
            }
            let params = FamilyParams::new(gamma.clone(), Rat::frac(a, b));
            if !square_filter(&params, n)?.is_square {
                continue;
            }
            let report = detect(&params, n)?;
            if report.newly_reducible_at == Some(n + 1) {
                hits.push(SearchHit { m: params.m, report });
            }
        }
    }
    sort_hits(&mut hits);
    Ok(hits)
}

/// Sorts by height, then numerator, then denominator.
pub fn sort_hits(hits: &mut [SearchHit]) {
    hits.sort_by(|x, y| height_order(&x.m, &y.m));
}

pub fn height_order(x: &Rat, y: &Rat) -> core::cmp::Ordering {
    x.height()
        .cmp(&y.height())
        .then_with(|| x.numer().cmp(y.numer()))
        .then_with(|| x.denom().cmp(y.denom()))
}

/// Every rational of height at most `height`, in [`height_order`].
pub fn rationals_up_to_height(height: u64) -> Vec<Rat> {
    let h = height as i64;
    let mut out: Vec<Rat> = Vec::new();
    for b in 1..=h {
        for a in -h..=h {
            if a.gcd(&b) == 1 {
                out.push(Rat::frac(a, b));
            }
        }
    }
    out.sort_by(height_order);
    out
}

/// `height(x)` as a machine integer when it fits.
pub fn small_height(x: &Rat) -> Option<u64> {
    let h: BigInt = x.height();
    debug_assert!(!h.is_negative());
    h.to_u64()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::is_irreducible;
    use crate::poly::tests::q;

    fn r(s: &str) -> Rat {
        s.parse().unwrap()
    }

    fn params(gamma: &str, m: &str) -> FamilyParams {
        FamilyParams::new(r(gamma), r(m))
    }

    #[test]
    fn family_members() {
        assert_eq!(build_g(&params("1/2", "-7/4")), q("-1,-1,1"));
        assert_eq!(build_g(&params("0", "-4/3")), q("-4/3,0,1"));
        assert_eq!(build_g(&params("0", "0")), q("0,0,1"));
    }

    #[test]
    fn iterates_of_examples() {
        assert_eq!(iterate_g(&params("0", "-4/3"), 2).unwrap(), q("4/9,0,-8/3,0,1"));
        let p = params("3/5", "-2/7");
        assert_eq!(iterate_g(&p, 1).unwrap(), build_g(&p));
        let g3 = iterate_g(&params("1/2", "-7/4"), 3).unwrap();
        assert_eq!(g3, q("-1,4,0,-3,1") * q("1,1,-3,-1,1"));
        assert!(iterate_g(&p, 0).is_err());
        assert!(iterate_g(&p, 9).is_err());
        assert_eq!(iterate_g(&p, 8).unwrap().degree(), Some(256));
    }

    #[test]
    fn t_polynomials() {
        let gamma = r("5/3");
        assert_eq!(t_poly(&gamma, 2).unwrap(), q("5/3,1,1"));
        assert_eq!(t_poly(&gamma, 4).unwrap(), q("5/3,1,1,2,5,6,6,4,1"));
        assert_eq!(t_poly(&r("1/2"), 3).unwrap().eval(&r("-7/4")), r("121/256"));
        let g3 = iterate_g(&params("1/2", "-7/4"), 3).unwrap();
        assert_eq!(g3.eval(&r("1/2")), r("121/256"));
        assert!(t_poly(&gamma, 0).is_err());
    }

    #[test]
    fn square_filter_examples() {
        let f = square_filter(&params("1/2", "-7/4"), 2).unwrap();
        assert_eq!((f.value, f.is_square, f.root), (r("121/256"), true, Some(r("11/16"))));
        let f = square_filter(&params("0", "-4/3"), 1).unwrap();
        assert_eq!((f.value, f.root), (r("4/9"), Some(r("2/3"))));
        let f = square_filter(&params("0", "1"), 1).unwrap();
        assert_eq!((f.value, f.is_square, f.root), (r("2"), false, None));
    }

    #[test]
    fn pairing_examples() {
        assert!(pairing_check(&q("-1,4,0,-3,1"), &q("1,1,-3,-1,1"), &r("1/2")).unwrap());
        assert!(pairing_check(&q("2/3,-2,1"), &q("2/3,2,1"), &r("0")).unwrap());
        assert!(!pairing_check(&q("1,0,1"), &q("1,1,1"), &r("0")).unwrap());
        assert!(pairing_check(&q("1,0,1"), &q("1,1"), &r("0")).is_err());
        // Linear pair from a reducible g: x - 1 and x + 1 around gamma = 0.
        assert!(pairing_check(&q("-1,1"), &q("1,1"), &r("0")).unwrap());
    }

    #[test]
    fn detect_examples() {
        let rep = detect(&params("0", "-4/3"), 1).unwrap();
        assert_eq!(rep.newly_reducible_at, Some(2));
        assert_eq!(rep.pairing_ok, Some(true));

        let rep = detect(&params("1/2", "-7/4"), 2).unwrap();
        assert_eq!(rep.newly_reducible_at, Some(3));
        assert_eq!(rep.pairing_ok, Some(true));
        let sf = rep.square_filter.clone().unwrap();
        assert_eq!((sf.level, sf.value, sf.root), (3, r("121/256"), Some(r("11/16"))));
        let (p1, p2) = rep.split_pair().unwrap();
        assert_eq!((p1, p2), (&q("-1,4,0,-3,1"), &q("1,1,-3,-1,1")));

        let rep = detect(&params("1/4", "1"), 1).unwrap();
        assert!(rep.verdicts[0].is_irreducible());
        assert_eq!(rep.newly_reducible_at, Some(2));
    }

    #[test]
    fn detect_reducible_base_and_levels() {
        // g = x^2 - 1 is reducible at level 1.
        let rep = detect(&params("0", "-1"), 3).unwrap();
        assert_eq!(rep.newly_reducible_at, Some(1));
        assert_eq!(rep.square_filter, None);
        assert_eq!(rep.pairing_ok, Some(true));
        assert_eq!(rep.verdicts.len(), 4);
        let g4 = iterate_g(&params("0", "-1"), 4).unwrap();
        assert_eq!(rep.verdict(4).unwrap().factorization().unwrap().reconstruct(), g4);
        // x^2: a repeated root.
        let rep = detect(&params("0", "0"), 2).unwrap();
        assert_eq!(rep.newly_reducible_at, Some(1));
        let fl = rep.verdict(3).unwrap().factorization().unwrap();
        assert_eq!(fl.factors, alloc::vec![Factor { poly: QPoly::x(), mult: 8 }]);
        assert!(detect(&params("0", "0"), 8).is_err());
    }

    #[test]
    fn stable_family_member() {
        // x^2 + 1: all iterates irreducible.
        let rep = detect(&params("0", "1"), 3).unwrap();
        assert_eq!(rep.newly_reducible_at, None);
        assert_eq!(rep.square_filter.unwrap().level, 4);
    }

    #[test]
    fn search_examples() {
        let hits = search_m(&r("0"), 1, 4).unwrap();
        assert!(hits.iter().any(|h| h.m == r("-4/3")));
        for h in &hits {
            assert_eq!(h.report.newly_reducible_at, Some(2));
        }
        let hits = search_m(&r("1/2"), 2, 8).unwrap();
        assert!(hits.iter().any(|h| h.m == r("-7/4")));
        assert!(search_m(&r("0"), 4, 3).is_err());
        assert!(search_m(&r("0"), 1, 10_001).is_err());
    }

    #[test]
    fn search_classes_partition() {
        let whole = search_m(&r("0"), 1, 6).unwrap();
        let mut merged = Vec::new();
        for res in 0..3 {
            merged.extend(search_m_class(&r("0"), 1, 6, 3, res).unwrap());
        }
        sort_hits(&mut merged);
        assert_eq!(merged, whole);
    }

    #[test]
    fn irreducibility_of_g_matches_square_test() {
        // g is irreducible iff -(m + gamma) is not a rational square.
        let mut seed = 12345u64;
        let mut next = || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((seed >> 33) % 41) as i64 - 20
        };
        for _ in 0..200 {
            let (a, b, c, d) = (next(), next().abs() + 1, next(), next().abs() + 1);
            let p = FamilyParams::new(Rat::frac(a, b), Rat::frac(c, d));
            let nonsquare = is_square(&-(&p.m + &p.gamma)).is_none();
            assert_eq!(is_irreducible(&build_g(&p)).unwrap(), nonsquare);
        }
    }

    #[test]
    fn t_structure() {
        for i in 1..=8 {
            let base = t_poly(&Rat::zero(), i).unwrap();
            for gamma in ["1/4", "-3", "7/2"] {
                let gamma = r(gamma);
                let t = t_poly(&gamma, i).unwrap();
                assert_eq!(&t - &QPoly::constant(gamma.clone()), base);
            }
        }
    }

    #[test]
    fn t_equals_critical_orbit() {
        let samples = [("0", "1"), ("1/2", "-7/4"), ("-3/4", "2/9"), ("5", "-1/3")];
        for (gamma, m) in samples {
            let p = params(gamma, m);
            for i in 1..=6 {
                let t = t_poly(&p.gamma, i).unwrap();
                assert_eq!(t.eval(&p.m), iterate_g(&p, i).unwrap().eval(&p.gamma));
            }
        }
    }
}
