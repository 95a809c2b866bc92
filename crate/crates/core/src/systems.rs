//! Explicit polynomial systems behind newly reducible second and third iterates.
//!
//! Second iterate: `g^2 = (x^2 + c1 x + c0)(x^2 - c1 x + c0)` after centering at
//! `gamma`, which forces `c1^4 + 4 m c1^2 - 4m - 4 gamma = 0`, so
//! `m = (c1^4 - 4 gamma) / (4 - 4 c1^2)`.
//!
//! Third iterate: write the two quartic factors of `g^3` around `gamma` as
//! `(x - gamma)^4 + a3 (x - gamma)^3 + ...`; matching coefficients splits into
//! Case I (`a1 != 0`) and Case II (`a1 = 0`). The eliminants of both cases are
//! bundled in [`crate::data`].

use alloc::vec::Vec;

use crate::arith::{is_square, Rat};
use crate::data;
use crate::dynamics::{detect, height_order, iterate_g, rationals_up_to_height, FamilyParams, IterateReport};
use crate::error::{Error, Result};
use crate::factor::factor;
use crate::mvpoly::Assignment;
use crate::poly::QPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct N1Witness {
    pub c1: Rat,
    pub gamma: Rat,
    pub m: Rat,
    /// `(4 gamma - c1^2) / (1 - c1^2)` is not a rational square.
    pub nonsquare_ok: bool,
}

impl N1Witness {
    /// Constant coefficient of the centered factors, `(c1^2 + 2m) / 2`.
    pub fn c0(&self) -> Rat {
        (&self.c1 * &self.c1 + &self.m + &self.m) * Rat::frac(1, 2)
    }

    /// Whether the witness proves `g` irreducible with `g^2` reducible. With
    /// `c1 = 0` the map is `(x - gamma)^2` and the nonsquare test says nothing.
    pub fn is_certificate(&self) -> bool {
        self.nonsquare_ok && !self.c1.is_zero()
    }

    /// The two factors `(x - gamma)^2 -+ c1 (x - gamma) + c0` of `g^2`.
    pub fn factors(&self) -> (QPoly, QPoly) {
        let c0 = self.c0();
        let minus = QPoly::from_coeffs(alloc::vec![c0.clone(), -&self.c1, Rat::one()]);
        let plus = QPoly::from_coeffs(alloc::vec![c0, self.c1.clone(), Rat::one()]);
        (minus.taylor_shift(&-&self.gamma), plus.taylor_shift(&-&self.gamma))
    }
}

/// Computes the second-iterate witness for `c1`; needs `gamma != 1/4` and `c1 != +-1`.
pub fn n1_witness(c1: &Rat, gamma: &Rat) -> Result<N1Witness> {
    if *gamma == Rat::frac(1, 4) {
        return Err(Error::Precondition("gamma = 1/4 is degenerate"));
    }
    let c1sq = c1 * c1;
    if c1sq.is_one() {
        return Err(Error::Precondition("c1 = +-1 is degenerate"));
    }
    let four = Rat::from_i64(4);
    let m = (&c1sq * &c1sq - &four * gamma) / (&four - &four * &c1sq);
    let ratio = (&four * gamma - &c1sq) / (Rat::one() - &c1sq);
    Ok(N1Witness { c1: c1.clone(), gamma: gamma.clone(), m, nonsquare_ok: is_square(&ratio).is_none() })
}

/// `c1^4 + 4 m c1^2 - 4 m - 4 gamma`.
pub fn n1_relation_residual(c1: &Rat, m: &Rat, gamma: &Rat) -> Rat {
    let c1sq = c1 * c1;
    let four = Rat::from_i64(4);
    &c1sq * &c1sq + &four * m * &c1sq - &four * m - &four * gamma
}

/// Candidate values of `c1` at height at most `c1_height`, excluding `0` and `+-1`.
pub fn n1_candidates(c1_height: u64) -> Vec<Rat> {
    rationals_up_to_height(c1_height)
        .into_iter()
        .filter(|c| !c.is_zero() && !c.abs().is_one())
        .collect()
}

/// The witness for `c1` if it is a certificate, confirmed by factoring `g` and `g^2`.
pub fn n1_check(c1: &Rat, gamma: &Rat) -> Result<Option<N1Witness>> {
    let w = n1_witness(c1, gamma)?;
    if !w.is_certificate() {
        return Ok(None);
    }
    let report = detect(&FamilyParams::new(gamma.clone(), w.m.clone()), 1)?;
    if report.newly_reducible_at != Some(2) {
        return Err(Error::CrossCheck(alloc::format!("c1 = {c1}, m = {}: factorization disagrees", w.m)));
    }
    Ok(Some(w))
}

/// Every certificate with `height(c1) <= c1_height`, in height order of `c1`.
pub fn n1_enumerate(gamma: &Rat, c1_height: u64) -> Result<Vec<N1Witness>> {
    if *gamma == Rat::frac(1, 4) {
        return Err(Error::Precondition("gamma = 1/4 is degenerate"));
    }
    let mut out = Vec::new();
    for c1 in n1_candidates(c1_height) {
        if let Some(w) = n1_check(&c1, gamma)? {
            out.push(w);
        }
    }
    Ok(out)
}

/// For `gamma = 1/4`, `g^2 = (x^2 - 3/2 x + m + 13/16)(x^2 + 1/2 x + m + 5/16)` for every `m`.
pub fn quarter_gamma_factors(m: &Rat) -> (QPoly, QPoly) {
    (
        QPoly::from_coeffs(alloc::vec![m + &Rat::frac(13, 16), Rat::frac(-3, 2), Rat::one()]),
        QPoly::from_coeffs(alloc::vec![m + &Rat::frac(5, 16), Rat::frac(1, 2), Rat::one()]),
    )
}

/// Checks [`quarter_gamma_factors`] against the iterate itself.
pub fn quarter_gamma_holds(m: &Rat) -> Result<bool> {
    let (p, q) = quarter_gamma_factors(m);
    Ok(&p * &q == iterate_g(&FamilyParams::new(Rat::frac(1, 4), m.clone()), 2)?)
}

/// How the family parameter `m` enters the second coordinate of the bundled curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
#[cfg_attr(feature = "serde", serde(rename_all = "snake_case"))]
pub enum CgammaConvention {
    /// The coordinate is `m` itself.
    Direct,
    /// The coordinate is `-m`.
    Negated,
}

/// Settled by [`resolve_cgamma_convention`]: the known third-iterate example at
/// `gamma = 1/2` has `m = -7/4` and `a3 = +-1`, and the curve vanishes at `(1, -7/4)`.
pub const CGAMMA_CONVENTION: CgammaConvention = CgammaConvention::Direct;

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CgammaResolution {
    /// Curve value at `(a3, m, gamma) = (1, 7/4, 1/2)`.
    pub at_plus: Rat,
    /// Curve value at `(1, -7/4, 1/2)`.
    pub at_minus: Rat,
    pub convention: CgammaConvention,
}

/// Exact value of the bundled Case I curve at `(a3, m, gamma)`.
pub fn cgamma_eval(a3: &Rat, m: &Rat, gamma: &Rat) -> Rat {
    let point: Assignment =
        [("a3", a3), ("m", m), ("gamma", gamma)].into_iter().map(|(k, v)| (k.into(), v.clone())).collect();
    data::c_gamma().eval(&point).expect("all variables assigned")
}

/// Curve value for a family member under [`CGAMMA_CONVENTION`].
pub fn cgamma_at_family(a3: &Rat, m: &Rat, gamma: &Rat) -> Rat {
    match CGAMMA_CONVENTION {
        CgammaConvention::Direct => cgamma_eval(a3, m, gamma),
        CgammaConvention::Negated => cgamma_eval(a3, &-m, gamma),
    }
}

/// Evaluates the curve at `(1, +-7/4, 1/2)`; exactly one value must vanish.
pub fn resolve_cgamma_convention() -> Result<CgammaResolution> {
    let (one, half) = (Rat::one(), Rat::frac(1, 2));
    let at_plus = cgamma_eval(&one, &Rat::frac(7, 4), &half);
    let at_minus = cgamma_eval(&one, &Rat::frac(-7, 4), &half);
    let convention = match (at_plus.is_zero(), at_minus.is_zero()) {
        (true, false) => CgammaConvention::Negated,
        (false, true) => CgammaConvention::Direct,
        _ => return Err(Error::CrossCheck(alloc::format!("ambiguous sign: {at_plus} and {at_minus}"))),
    };
    Ok(CgammaResolution { at_plus, at_minus, convention })
}

/// Case I residuals, with the last equation read as
/// `a0^2 = m^4 + 2m^3 + m^2 + m + gamma` (the constant term of the centered `g^3`).
pub fn case_i_residuals(a: &[Rat; 4], m: &Rat, gamma: &Rat) -> [Rat; 4] {
    let [a0, a1, a2, a3] = a;
    let two = Rat::from_i64(2);
    let m2 = m * m;
    let m3 = &m2 * m;
    [
        &two * a2 - a3 * a3 - Rat::from_i64(4) * m,
        &two * a0 + a2 * a2 - &two * a1 * a3 - Rat::from_i64(6) * &m2 - &two * m,
        &two * a2 * a0 - a1 * a1 - Rat::from_i64(4) * &m3 - Rat::from_i64(4) * &m2,
        a0 * a0 - centered_constant(m, gamma),
    ]
}

/// The last Case I equation as printed, `a0^2 - m^4 - 2m^2 - m^2 - m - gamma`.
pub fn case_i_printed_last(a0: &Rat, m: &Rat, gamma: &Rat) -> Rat {
    let m2 = m * m;
    a0 * a0 - &m2 * &m2 - Rat::from_i64(3) * &m2 - m - gamma
}

/// `g^3(gamma) = m^4 + 2m^3 + m^2 + m + gamma`.
fn centered_constant(m: &Rat, gamma: &Rat) -> Rat {
    let m2 = m * m;
    &m2 * &m2 + Rat::from_i64(2) * &m2 * m + &m2 + m + gamma
}

/// Case II residuals in `(a0, a2, a3, b2)`, last equation read as in
/// [`case_i_residuals`].
pub fn case_ii_residuals(a0: &Rat, a2: &Rat, a3: &Rat, b2: &Rat, m: &Rat, gamma: &Rat) -> [Rat; 5] {
    let two = Rat::from_i64(2);
    let four = Rat::from_i64(4);
    let m2 = m * m;
    [
        b2 - a3 * a3 + a2 - &four * m,
        (b2 - a2) * a3,
        &two * a0 + a2 * b2 - Rat::from_i64(6) * &m2 - &two * m,
        (a2 + b2) * a0 - &four * &m2 * m - &four * &m2,
        a0 * a0 - centered_constant(m, gamma),
    ]
}

/// A Case I solution read off a newly reducible third iterate.
#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CaseISolution {
    pub a0: Rat,
    pub a1: Rat,
    pub a2: Rat,
    pub a3: Rat,
    pub m: Rat,
    pub gamma: Rat,
    pub residuals: [Rat; 4],
    pub printed_last_residual: Rat,
    pub cgamma_value: Rat,
    /// `a1 != 0`, all residuals zero and the curve vanishes.
    pub valid: bool,
}

impl CaseISolution {
    /// `(b0, b1, b2, b3) = (a0, -a1, a2, -a3)`.
    pub fn b(&self) -> [Rat; 4] {
        [self.a0.clone(), -&self.a1, self.a2.clone(), -&self.a3]
    }
}

/// If `g^3` is newly reducible, the centered coefficients of its first factor.
pub fn case_i_extract(gamma: &Rat, m: &Rat) -> Result<Option<CaseISolution>> {
    let report = detect(&FamilyParams::new(gamma.clone(), m.clone()), 2)?;
    if report.newly_reducible_at != Some(3) {
        return Ok(None);
    }
    let Some((p1, _)) = report.split_pair() else {
        return Ok(None);
    };
    let centered = p1.taylor_shift(gamma);
    let a: [Rat; 4] = core::array::from_fn(|k| centered.coeff(k));
    let residuals = case_i_residuals(&a, m, gamma);
    let printed_last_residual = case_i_printed_last(&a[0], m, gamma);
    let cgamma_value = cgamma_at_family(&a[3], m, gamma);
    let valid = !a[1].is_zero() && residuals.iter().all(Rat::is_zero) && cgamma_value.is_zero();
    let [a0, a1, a2, a3] = a;
    Ok(Some(CaseISolution {
        a0,
        a1,
        a2,
        a3,
        m: m.clone(),
        gamma: gamma.clone(),
        residuals,
        printed_last_residual,
        cgamma_value,
        valid,
    }))
}

/// The Case II eliminant at `gamma`, as a polynomial in `m`.
pub fn case_ii_poly(gamma: &Rat) -> QPoly {
    data::case2().specialize("gamma", gamma).and_then(|p| p.to_univariate()).expect("bundled case2 is in (m, gamma)")
}

#[derive(Clone, Debug, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct CaseIICandidate {
    pub m: Rat,
    pub report: IterateReport,
}

/// Rational roots of [`case_ii_poly`], each with its `detect` report at `n_max = 2`.
pub fn case_ii_candidates(gamma: &Rat) -> Result<Vec<CaseIICandidate>> {
    let roots = rational_roots(&case_ii_poly(gamma))?;
    roots
        .into_iter()
        .map(|m| {
            let report = detect(&FamilyParams::new(gamma.clone(), m.clone()), 2)?;
            Ok(CaseIICandidate { m, report })
        })
        .collect()
}

/// Distinct rational roots, from the linear factors of a full factorization.
pub fn rational_roots(f: &QPoly) -> Result<Vec<Rat>> {
    let mut roots: Vec<Rat> = factor(f)?
        .factors
        .iter()
        .filter(|fa| fa.poly.deg() == 1)
        .map(|fa| -fa.poly.coeff(0))
        .collect();
    roots.sort_by(height_order);
    Ok(roots)
}

/// Appendix element `index` evaluated at `assignment` over `(a0, a1, a2, a3, q)`.
pub fn appendix_eval(index: usize, assignment: &Assignment) -> Result<Rat> {
    data::appendix(index)?.eval(assignment)
}
