//! Sparse multivariate polynomials over the rationals, with the plain-text
//! exchange format used for the bundled data files:
//!
//! ```text
//! vars: a3 m gamma
//! 1 16 0 0
//! -32 12 1 0
//! ```
//!
//! One term per line, coefficient first. Blank lines and lines starting with `#`
//! are skipped.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;


use crate::arith::Rat;
use crate::error::{Error, Result};
use crate::poly::QPoly;

#[derive(Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct MvPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Rat>,
}

/// Variable assignment for [`MvPoly::eval`].
pub type Assignment = BTreeMap<String, Rat>;

impl MvPoly {
    pub fn zero(vars: &[&str]) -> MvPoly {
        MvPoly { vars: vars.iter().map(|v| v.to_string()).collect(), terms: BTreeMap::new() }
    }

    /// Builds from `(exponents, coefficient)` pairs, summing repeats and dropping zeros.
    pub fn from_terms(vars: &[&str], terms: impl IntoIterator<Item = (Vec<u32>, Rat)>) -> Result<MvPoly> {
        let mut p = MvPoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, c)?;
        }
        Ok(p)
    }

    pub fn add_term(&mut self, exps: Vec<u32>, coeff: Rat) -> Result<()> {
        if exps.len() != self.vars.len() {
            return Err(Error::DegreeMismatch { left: exps.len(), right: self.vars.len() });
        }
        let sum = self.coeff(&exps) + coeff;
        if sum.is_zero() {
            self.terms.remove(&exps);
        } else {
            self.terms.insert(exps, sum);
        }
        Ok(())
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Rat> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    pub fn degree_in(&self, name: &str) -> Option<u32> {
        let k = self.var_index(name)?;
        Some(self.terms.keys().map(|e| e[k]).max().unwrap_or(0))
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    /// Parses the text format described in the module docs.
    pub fn parse(text: &str) -> Result<MvPoly> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (hline, header) = lines.next().ok_or(Error::Parse { line: 1, message: "missing header".to_string() })?;
        let names = header
            .strip_prefix("vars:")
            .ok_or(Error::Parse { line: hline, message: "expected `vars:` header".to_string() })?;
        let vars: Vec<String> = names.split_whitespace().map(|s| s.to_string()).collect();
        if vars.is_empty() {
            return Err(Error::Parse { line: hline, message: "no variables".to_string() });
        }
        for (i, v) in vars.iter().enumerate() {
            if vars[..i].contains(v) {
                return Err(Error::Parse { line: hline, message: alloc::format!("repeated variable {v}") });
            }
        }
        let mut terms = BTreeMap::new();
        for (line, l) in lines {
            let mut fields = l.split_whitespace();
            let coeff: Rat = fields
                .next()
                .unwrap()
                .parse()
                .map_err(|_| Error::Parse { line, message: "bad coefficient".to_string() })?;
            let exps = fields
                .map(|f| f.parse::<u32>())
                .collect::<core::result::Result<Vec<u32>, _>>()
                .map_err(|_| Error::Parse { line, message: "bad exponent".to_string() })?;
            if exps.len() != vars.len() {
                return Err(Error::Parse {
                    line,
                    message: alloc::format!("expected {} exponents, found {}", vars.len(), exps.len()),
                });
            }
            if terms.contains_key(&exps) {
                return Err(Error::DuplicateTerm { line });
            }
            if !coeff.is_zero() {
                terms.insert(exps, coeff);
            }
        }
        Ok(MvPoly { vars, terms })
    }

    /// Inverse of [`MvPoly::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::from("vars:");
        for v in &self.vars {
            out.push(' ');
            out.push_str(v);
        }
        out.push('\n');
        for (e, c) in self.terms.iter().rev() {
            out.push_str(&c.to_string());
            for k in e {
                out.push(' ');
                out.push_str(&k.to_string());
            }
            out.push('\n');
        }
        out
    }

    /// Exact value at `assignment`. Only variables that actually occur need a value.
    pub fn eval(&self, assignment: &Assignment) -> Result<Rat> {
        let mut values: Vec<Option<&Rat>> = Vec::with_capacity(self.vars.len());
        for (k, name) in self.vars.iter().enumerate() {
            let value = assignment.get(name);
            if value.is_none() && self.terms.keys().any(|e| e[k] > 0) {
                return Err(Error::MissingVariable(name.clone()));
            }
            values.push(value);
        }
        let powers: Vec<Vec<Rat>> = values
            .iter()
            .enumerate()
            .map(|(k, v)| match v {
                Some(v) => {
                    let top = self.degree_in(&self.vars[k]).unwrap() as usize;
                    let mut ps = Vec::with_capacity(top + 1);
                    ps.push(Rat::one());
                    for i in 0..top {
                        let next = &ps[i] * *v;
                        ps.push(next);
                    }
                    ps
                }
                None => alloc::vec![Rat::one()],
            })
            .collect();
        let mut sum = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &d) in e.iter().enumerate() {
                if d > 0 {
                    t *= &powers[k][d as usize];
                }
            }
            sum += &t;
        }
        Ok(sum)
    }

    /// Substitutes `value` for `name`, removing that variable.
    pub fn specialize(&self, name: &str, value: &Rat) -> Result<MvPoly> {
        let k = self.var_index(name).ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        let vars: Vec<&str> = self.vars.iter().filter(|v| *v != name).map(|v| v.as_str()).collect();
        let terms = self.terms.iter().map(|(e, c)| {
            let mut rest = e.clone();
            let d = rest.remove(k);
            (rest, c * &value.pow(d))
        });
        MvPoly::from_terms(&vars, terms)
    }

    /// Reads a polynomial in one variable as a [`QPoly`].
    pub fn to_univariate(&self) -> Result<QPoly> {
        if self.vars.len() != 1 {
            return Err(Error::Precondition("expected exactly one variable"));
        }
        let top = self.degree_in(&self.vars[0]).unwrap() as usize;
        let mut coeffs = alloc::vec![Rat::zero(); top + 1];
        for (e, c) in &self.terms {
            coeffs[e[0] as usize] = c.clone();
        }
        Ok(QPoly::from_coeffs(coeffs))
    }

    /// Coefficient of `name^d` as a polynomial in the remaining variables.
    pub fn coefficient_of(&self, name: &str, d: u32) -> Result<MvPoly> {
        let k = self.var_index(name).ok_or_else(|| Error::MissingVariable(name.to_string()))?;
        let vars: Vec<&str> = self.vars.iter().filter(|v| *v != name).map(|v| v.as_str()).collect();
        let terms = self.terms.iter().filter(|(e, _)| e[k] == d).map(|(e, c)| {
            let mut rest = e.clone();
            rest.remove(k);
            (rest, c.clone())
        });
        MvPoly::from_terms(&vars, terms)
    }
}

impl fmt::Display for MvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let monomial: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(d, _)| **d > 0)
                .map(|(d, v)| if *d == 1 { v.clone() } else { alloc::format!("{v}^{d}") })
                .collect();
            let neg = c.is_negative();
            let mag = c.abs();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            match (mag.is_one(), monomial.is_empty()) {
                (_, true) => write!(f, "{mag}")?,
                (true, false) => f.write_str(&monomial.join("*"))?,
                (false, false) => write!(f, "{mag}*{}", monomial.join("*"))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MvPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MvPoly[{}]({self})", self.vars.join(","))
    }
}
