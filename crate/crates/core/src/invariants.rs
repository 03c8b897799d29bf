//! Counting invariants, the Φ polynomial and link comparisons.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, QuandleError, SolverError};
use crate::presentation::QuandlePresentation;
use crate::quandle::{AlexanderParams, FiniteQuandle};
use crate::solver::{
    brute_force_colorings, brute_force_count, build_system, count_solutions, enumerate_solutions,
    Coloring,
};

/// Number of colorings of `p` by `q`. Alexander quandles are counted through
/// the Smith form; other quandles by exhaustive search.
pub fn counting_invariant(p: &QuandlePresentation, q: &FiniteQuandle) -> BigUint {
    match q.alexander_params() {
        Some(params) => count_solutions(&build_system(p, params), params.n()),
        None => brute_force_count(p, q),
    }
}

/// All colorings of `p` by `q`, sorted.
pub fn colorings(
    p: &QuandlePresentation,
    q: &FiniteQuandle,
    cap: u64,
) -> Result<Vec<Coloring>, SolverError> {
    match q.alexander_params() {
        Some(params) => enumerate_solutions(&build_system(p, params), params.n(), cap),
        None => brute_force_colorings(p, q, cap),
    }
}

/// `Φ = Σ q^|Im f|` over all colorings `f`.
pub fn phi_polynomial(
    p: &QuandlePresentation,
    q: &FiniteQuandle,
    cap: u64,
) -> Result<PhiPolynomial, SolverError> {
    Ok(PhiPolynomial::from_colorings(&colorings(p, q, cap)?))
}

/// Counting invariant for every involutory Alexander quandle over ℤₙ, i.e.
/// every unit `t` with `t² ≡ 1 (mod n)`, in increasing `t`.
pub fn involutory_analysis(p: &QuandlePresentation, n: u64) -> Vec<(u64, BigUint)> {
    AlexanderParams::involutory_units(n)
        .into_iter()
        .map(|t| {
            let params = AlexanderParams::new(n, t as i64).expect("involutory t is a unit");
            (t, count_solutions(&build_system(p, params), n))
        })
        .collect()
}

/// Sparse polynomial in `q` with non-negative integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PhiPolynomial {
    terms: BTreeMap<usize, BigUint>,
}

impl PhiPolynomial {
    pub fn from_colorings(colorings: &[Coloring]) -> Self {
        let mut phi = PhiPolynomial::default();
        for c in colorings {
            phi.add_term(c.image_size, BigUint::from(1u32));
        }
        phi
    }

    pub fn add_term(&mut self, exponent: usize, coefficient: BigUint) {
        if coefficient.is_zero() {
            return;
        }
        *self.terms.entry(exponent).or_default() += coefficient;
    }

    pub fn terms(&self) -> &BTreeMap<usize, BigUint> {
        &self.terms
    }

    pub fn coefficient(&self, exponent: usize) -> BigUint {
        self.terms.get(&exponent).cloned().unwrap_or_default()
    }

    /// Sum of the coefficients, which is the number of colorings.
    pub fn total(&self) -> BigUint {
        self.terms.values().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().next_back().copied()
    }
}

/// `3*q^1 + 6*q^3`; the zero polynomial prints as `0`.
impl fmt::Display for PhiPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(e, c)| format!("{c}*q^{e}"))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl FromStr for PhiPolynomial {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut phi = PhiPolynomial::default();
        if s.trim() == "0" {
            return Ok(phi);
        }
        for term in s.split('+') {
            let (c, e) = term
                .trim()
                .split_once("*q^")
                .ok_or_else(|| format!("bad term `{}`", term.trim()))?;
            let c: BigUint = c.parse().map_err(|_| format!("bad coefficient `{c}`"))?;
            let e: usize = e.parse().map_err(|_| format!("bad exponent `{e}`"))?;
            phi.add_term(e, c);
        }
        Ok(phi)
    }
}

impl Serialize for PhiPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for PhiPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

/// Which `t` values to try for each modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum TPolicy {
    AllUnits,
    Involutory,
    Single(i64),
}

impl TPolicy {
    pub fn values(&self, n: u64) -> Result<Vec<u64>, QuandleError> {
        match *self {
            TPolicy::AllUnits => Ok(AlexanderParams::units(n)),
            TPolicy::Involutory => Ok(AlexanderParams::involutory_units(n)),
            TPolicy::Single(t) => Ok(vec![AlexanderParams::new(n, t)?.t()]),
        }
    }
}

impl fmt::Display for TPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TPolicy::AllUnits => f.write_str("all-units"),
            TPolicy::Involutory => f.write_str("involutory"),
            TPolicy::Single(t) => write!(f, "{t}"),
        }
    }
}

impl FromStr for TPolicy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all-units" | "all" => Ok(TPolicy::AllUnits),
            "involutory" | "involutory-only" => Ok(TPolicy::Involutory),
            other => other.parse().map(TPolicy::Single).map_err(|_| {
                format!("expected `all-units`, `involutory` or an integer, got `{other}`")
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "distinguished")]
    Distinguished,
    #[serde(rename = "not distinguished")]
    NotDistinguished,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Distinguished => "distinguished",
            Verdict::NotDistinguished => "not distinguished",
        })
    }
}

/// One `(n, t)` cell. A Φ entry is `None` when enumeration hit the cap.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CompareCell {
    pub n: u64,
    pub t: u64,
    #[serde(with = "decimal")]
    pub count_a: BigUint,
    #[serde(with = "decimal")]
    pub count_b: BigUint,
    pub phi_a: Option<PhiPolynomial>,
    pub phi_b: Option<PhiPolynomial>,
}

impl CompareCell {
    pub fn differs(&self) -> bool {
        if self.count_a != self.count_b {
            return true;
        }
        matches!((&self.phi_a, &self.phi_b), (Some(a), Some(b)) if a != b)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DistinguishabilityReport {
    pub link_a: String,
    pub link_b: String,
    pub grid: Vec<CompareCell>,
    pub verdict: Verdict,
}

impl DistinguishabilityReport {
    pub fn from_grid(link_a: &str, link_b: &str, grid: Vec<CompareCell>) -> Self {
        let verdict = if grid.iter().any(CompareCell::differs) {
            Verdict::Distinguished
        } else {
            Verdict::NotDistinguished
        };
        DistinguishabilityReport {
            link_a: link_a.to_string(),
            link_b: link_b.to_string(),
            grid,
            verdict,
        }
    }

    /// Plain-text rendering: a header, one line per cell, then the verdict.
    pub fn to_text(&self) -> String {
        let mut out = format!("compare {} vs {}\n", self.link_a, self.link_b);
        let show = |phi: &Option<PhiPolynomial>| {
            phi.as_ref()
                .map_or_else(|| "(count only)".to_string(), ToString::to_string)
        };
        for c in &self.grid {
            out.push_str(&format!(
                "n={} t={}: count {} vs {}; phi {} vs {}\n",
                c.n,
                c.t,
                c.count_a,
                c.count_b,
                show(&c.phi_a),
                show(&c.phi_b)
            ));
        }
        out.push_str(&format!("verdict: {}\n", self.verdict));
        out
    }
}

/// Evaluates both presentations over every `(n, t)` allowed by `policy` for
/// the given moduli. Cells are computed in parallel and returned in `(n, t)`
/// order.
pub fn compare(
    link_a: (&str, &QuandlePresentation),
    link_b: (&str, &QuandlePresentation),
    moduli: &[u64],
    policy: TPolicy,
    cap: u64,
) -> Result<DistinguishabilityReport, Error> {
    let mut points = Vec::new();
    for &n in moduli {
        for t in policy.values(n)? {
            points.push(AlexanderParams::new(n, t as i64)?);
        }
    }
    let grid = points
        .par_iter()
        .map(|&params| {
            let q = FiniteQuandle::alexander(params.n(), params.t() as i64)
                .expect("params were validated");
            let (a, b) = (link_a.1, link_b.1);
            CompareCell {
                n: params.n(),
                t: params.t(),
                count_a: counting_invariant(a, &q),
                count_b: counting_invariant(b, &q),
                phi_a: phi_polynomial(a, &q, cap).ok(),
                phi_b: phi_polynomial(b, &q, cap).ok(),
            }
        })
        .collect();
    Ok(DistinguishabilityReport::from_grid(
        link_a.0, link_b.0, grid,
    ))
}

/// Serializes big counts as decimal strings so no precision is lost.
pub mod decimal {
    use num_bigint::BigUint;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(value: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&value.to_str_radix(10))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        let text = String::deserialize(d)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::catalog;

    fn presentation(name: &str) -> QuandlePresentation {
        QuandlePresentation::extract(&catalog(name).unwrap())
    }

    #[test]
    fn trefoil_phi() {
        let q = FiniteQuandle::alexander(3, 2).unwrap();
        let phi = phi_polynomial(&presentation("trefoil"), &q, 100).unwrap();
        assert_eq!(phi.to_string(), "3*q^1 + 6*q^3");
        assert_eq!(phi.total(), BigUint::from(9u32));
        assert_eq!(
            counting_invariant(&presentation("trefoil"), &q),
            BigUint::from(9u32)
        );
    }

    #[test]
    fn unlink_phi_with_trivial_quandle() {
        let q = FiniteQuandle::alexander(2, 1).unwrap();
        let phi = phi_polynomial(&presentation("unlink2"), &q, 100).unwrap();
        assert_eq!(phi.to_string(), "2*q^1 + 2*q^2");
    }

    #[test]
    fn non_alexander_quandles_use_the_search() {
        let q = FiniteQuandle::validate(&FiniteQuandle::takasaki(5).unwrap().rows()).unwrap();
        assert!(q.alexander_params().is_none());
        assert_eq!(
            counting_invariant(&presentation("hopf_sum"), &q),
            BigUint::from(5u32)
        );
        assert_eq!(
            counting_invariant(&presentation("unknot"), &q),
            BigUint::from(5u32)
        );
    }

    #[test]
    fn phi_text_round_trip() {
        let phi: PhiPolynomial = "3*q^1 + 6*q^3".parse().unwrap();
        assert_eq!(phi.coefficient(3), BigUint::from(6u32));
        assert_eq!(phi.to_string().parse::<PhiPolynomial>().unwrap(), phi);
        assert!("3q".parse::<PhiPolynomial>().is_err());
        assert_eq!(
            "0".parse::<PhiPolynomial>().unwrap(),
            PhiPolynomial::default()
        );
    }

    #[test]
    fn involutory_rows() {
        let rows = involutory_analysis(&presentation("hopf_sum"), 5);
        assert_eq!(
            rows,
            vec![(1, BigUint::from(125u32)), (4, BigUint::from(5u32))]
        );
        let rows = involutory_analysis(&presentation("allen_swenberg"), 2);
        assert_eq!(rows, vec![(1, BigUint::from(8u32))]);
        let ts: Vec<u64> = involutory_analysis(&presentation("trefoil"), 8)
            .iter()
            .map(|r| r.0)
            .collect();
        assert_eq!(ts, vec![1, 3, 5, 7]);
    }

    #[test]
    fn unknot_and_trefoil_are_distinguished() {
        let (u, t) = (presentation("unknot"), presentation("trefoil"));
        let report = compare(
            ("unknot", &u),
            ("trefoil", &t),
            &[3],
            TPolicy::Single(2),
            1000,
        )
        .unwrap();
        assert_eq!(report.verdict, Verdict::Distinguished);
        assert_eq!(report.grid.len(), 1);
        assert_eq!(report.grid[0].count_a, BigUint::from(3u32));
        assert_eq!(report.grid[0].count_b, BigUint::from(9u32));
    }

    #[test]
    fn reflexive_comparison() {
        let p = presentation("trefoil");
        let report = compare(("a", &p), ("b", &p), &[2, 3, 4, 5], TPolicy::AllUnits, 1000).unwrap();
        assert_eq!(report.verdict, Verdict::NotDistinguished);
        assert!(report
            .grid
            .iter()
            .all(|c| c.count_a == c.count_b && c.phi_a == c.phi_b));
    }

    #[test]
    fn cells_over_the_cap_are_count_only() {
        let p = presentation("hopf_sum");
        let report = compare(("a", &p), ("b", &p), &[5], TPolicy::Single(1), 10).unwrap();
        assert_eq!(report.grid[0].count_a, BigUint::from(125u32));
        assert!(report.grid[0].phi_a.is_none());
        assert_eq!(report.verdict, Verdict::NotDistinguished);
    }

    #[test]
    fn single_policy_rejects_non_units() {
        let p = presentation("hopf_sum");
        let err = compare(("a", &p), ("b", &p), &[4], TPolicy::Single(2), 10).unwrap_err();
        assert_eq!(err, Error::Quandle(QuandleError::NotAUnit { t: 2, n: 4 }));
    }

    #[test]
    fn policy_parsing() {
        assert_eq!("all-units".parse::<TPolicy>().unwrap(), TPolicy::AllUnits);
        assert_eq!(
            "involutory".parse::<TPolicy>().unwrap(),
            TPolicy::Involutory
        );
        assert_eq!("-1".parse::<TPolicy>().unwrap(), TPolicy::Single(-1));
        assert!("some".parse::<TPolicy>().is_err());
    }

    #[test]
    fn report_serializes_counts_as_strings() {
        let p = presentation("trefoil");
        let report = compare(("a", &p), ("b", &p), &[3], TPolicy::Single(2), 100).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains(r#""count_a":"9""#), "{json}");
        assert!(json.contains(r#""verdict":"not distinguished""#));
        let back: DistinguishabilityReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, report);
    }
}
