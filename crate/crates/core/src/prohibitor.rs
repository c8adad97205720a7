//! Arithmetic prohibition of complex schemes of real curves with a deep nest.
//!
//! Combines the signature/nullity inequalities for curves on `Sigma_n`, Fiedler's
//! alternating orientation rule and the complex-orientation formulas for degree 9.
//! Geometric side conditions are caller-asserted and echoed in the report.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::closedforms::epsilons;
use crate::error::{Error, Result};

/// Integer data of an `(M - r)`-curve of bidegree `(2k + 1, 0)` on `Sigma_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveParams {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub j: u32,
    pub lambda: u32,
    pub lambda_odd: u32,
    pub lambda_even: u32,
}

impl CurveParams {
    pub fn new(n: u32, k: u32, r: u32, j: u32, lambda_odd: u32, lambda_even: u32) -> Result<Self> {
        let p = Self { n, k, r, j, lambda: lambda_odd + lambda_even, lambda_odd, lambda_even };
        p.validate()?;
        Ok(p)
    }

    /// Checks everything except the `lambda > J > 0` gate.
    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.k == 0 {
            return Err(Error::InvalidParams("n and k must be positive".into()));
        }
        if self.j % 2 != self.n % 2 {
            return Err(Error::InvalidParams(format!("J = {} must have the parity of n = {}", self.j, self.n)));
        }
        if self.n % 4 == 0 && self.k != 1 {
            return Err(Error::InvalidParams(format!("n = {} is divisible by 4, so k must be 1", self.n)));
        }
        if self.lambda != self.lambda_odd + self.lambda_even {
            return Err(Error::InvalidParams(format!(
                "lambda = {} but lambda_odd + lambda_even = {}",
                self.lambda,
                self.lambda_odd + self.lambda_even
            )));
        }
        Ok(())
    }

    pub fn m(&self) -> u32 {
        2 * self.k + 1
    }

    /// Genus `(m - 1)(mn - 2) / 2`.
    pub fn genus(&self) -> u64 {
        let (m, n) = (self.m() as u64, self.n as u64);
        (m - 1) * (m * n - 2) / 2
    }

    pub fn hypothesis_holds(&self) -> bool {
        self.lambda > self.j && self.j > 0
    }
}

/// Verdicts and slacks (`rhs - lhs`) of the odd-oval and even-oval inequalities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InequalityCheck {
    pub odd_ovals: bool,
    pub even_ovals: bool,
    pub slack_odd: i64,
    pub slack_even: i64,
}

impl InequalityCheck {
    pub fn holds(&self) -> bool {
        self.odd_ovals && self.even_ovals
    }
}

fn nest_term(n: u32, k: u32) -> i64 {
    let k = k as i64;
    if n % 2 == 1 {
        k - 1
    } else {
        2 * (k - 1)
    }
}

/// `(center, radius)` with the odd-oval inequality reading `|center - J| <= radius`.
pub fn odd_window(n: u32, k: u32, r: u32, lambda_odd: u32) -> Result<(i64, i64)> {
    let e = epsilons(n, k)?;
    let (n, k, r) = (n as i64, k as i64, r as i64);
    let center = n * k * k - 3 * k + 1 + e.eps - r;
    Ok((center, r + 2 * lambda_odd as i64 + nest_term(n as u32, k as u32)))
}

/// The even-oval twin of [`odd_window`].
pub fn even_window(n: u32, k: u32, r: u32, lambda_even: u32) -> Result<(i64, i64)> {
    let e = epsilons(n, k)?;
    let (n, k, r) = (n as i64, k as i64, r as i64);
    let center = n * k * k - 3 * k + 1 + e.eps_prime - r;
    Ok((center, r + 2 * lambda_even as i64 + nest_term(n as u32, k as u32)))
}

/// Both inequalities; `Error::Hypothesis` unless `lambda > J > 0`.
pub fn curve_inequalities(p: &CurveParams) -> Result<InequalityCheck> {
    p.validate()?;
    if !p.hypothesis_holds() {
        return Err(Error::Hypothesis(format!("need lambda > J > 0, got lambda = {}, J = {}", p.lambda, p.j)));
    }
    let j = p.j as i64;
    let (c1, r1) = odd_window(p.n, p.k, p.r, p.lambda_odd)?;
    let (c2, r2) = even_window(p.n, p.k, p.r, p.lambda_even)?;
    let slack_odd = r1 - (c1 - j).abs();
    let slack_even = r2 - (c2 - j).abs();
    Ok(InequalityCheck { odd_ovals: slack_odd >= 0, even_ovals: slack_even >= 0, slack_odd, slack_even })
}

/// Fiedler's rule `J >= |lambda_+ - lambda_-|`.
pub fn fiedler_bound(lambda_plus: u32, lambda_minus: u32, j: u32) -> bool {
    j as i64 >= (lambda_plus as i64 - lambda_minus as i64).abs()
}

/// Pointed form for a pencil centered in an oval `v`: `J_v >= |delta_sum - sign v|`.
pub fn fiedler_pointed(delta_sum: i64, sign_v: i8, j_v: i64) -> bool {
    j_v >= (delta_sum - sign_v as i64).abs()
}

/// Jump window `3 - 2 beta <= J_v <= 9 + 2 beta` for a pencil centered in an innermost oval
/// of a degree 9 curve `<J u alpha u 1<beta u 1<gamma>>>`.
pub fn degree9_jump_window(beta: u32) -> (i64, i64) {
    let (c, rad) = odd_window(1, 4, 0, beta).expect("fixed valid parameters");
    (c - rad, c + rad)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Prohibited,
    Admissible,
    HypothesisNotMet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    pub violated: Vec<String>,
    pub assumptions: Vec<String>,
    pub notes: Vec<String>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub feasible_jumps: Vec<u32>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub schemes: Vec<Degree9Scheme>,
}

impl Report {
    fn new(verdict: Verdict) -> Self {
        Self { verdict, violated: vec![], assumptions: vec![], notes: vec![], feasible_jumps: vec![], schemes: vec![] }
    }
}

/// A curve query; with `j = None` every `J` with `0 < J < lambda` of the right parity is tried.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveQuery {
    pub n: u32,
    pub k: u32,
    pub r: u32,
    pub j: Option<u32>,
    pub lambda_odd: u32,
    pub lambda_even: u32,
    pub lambda_plus: Option<u32>,
    pub lambda_minus: Option<u32>,
}

fn jump_violations(q: &CurveQuery, j: u32) -> Result<Vec<String>> {
    let p = CurveParams::new(q.n, q.k, q.r, j, q.lambda_odd, q.lambda_even)?;
    let c = curve_inequalities(&p)?;
    let mut v = vec![];
    if !c.odd_ovals {
        v.push(format!("odd-oval inequality fails at J = {j} (slack {})", c.slack_odd));
    }
    if !c.even_ovals {
        v.push(format!("even-oval inequality fails at J = {j} (slack {})", c.slack_even));
    }
    if let (Some(lp), Some(lm)) = (q.lambda_plus, q.lambda_minus) {
        if !fiedler_bound(lp, lm, j) {
            v.push(format!("Fiedler's rule needs J >= {} but J = {j}", (lp as i64 - lm as i64).abs()));
        }
    }
    Ok(v)
}

pub fn curve_report(q: &CurveQuery) -> Result<Report> {
    let lambda = q.lambda_odd + q.lambda_even;
    if let (Some(lp), Some(lm)) = (q.lambda_plus, q.lambda_minus) {
        if lp + lm != lambda {
            return Err(Error::InvalidParams(format!("lambda_+ + lambda_- = {} but lambda = {lambda}", lp + lm)));
        }
    }
    let mut report = Report::new(Verdict::Admissible);
    report.notes.push("inequalities are applied in their non-strict form".into());
    match q.j {
        Some(j) => {
            let p = CurveParams { n: q.n, k: q.k, r: q.r, j, lambda, lambda_odd: q.lambda_odd, lambda_even: q.lambda_even };
            p.validate()?;
            if !p.hypothesis_holds() {
                report.verdict = Verdict::HypothesisNotMet;
                report.violated.push(format!("hypothesis lambda > J > 0 fails (lambda = {lambda}, J = {j})"));
                return Ok(report);
            }
            report.violated = jump_violations(q, j)?;
            if report.violated.is_empty() {
                report.feasible_jumps.push(j);
            } else {
                report.verdict = Verdict::Prohibited;
            }
        }
        None => {
            report.assumptions.push("the number of jumps satisfies lambda > J > 0".into());
            let mut reasons = vec![];
            for j in (1..lambda).filter(|j| j % 2 == q.n % 2) {
                let v = jump_violations(q, j)?;
                if v.is_empty() {
                    report.feasible_jumps.push(j);
                } else {
                    reasons.extend(v);
                }
            }
            if report.feasible_jumps.is_empty() {
                report.verdict = Verdict::Prohibited;
                report.violated = summarize_windows(q)?;
                if report.violated.is_empty() {
                    report.violated = reasons;
                }
            }
        }
    }
    Ok(report)
}

fn summarize_windows(q: &CurveQuery) -> Result<Vec<String>> {
    let (c1, r1) = odd_window(q.n, q.k, q.r, q.lambda_odd)?;
    let (c2, r2) = even_window(q.n, q.k, q.r, q.lambda_even)?;
    let hi = (c1 + r1).min(c2 + r2);
    let lo = (c1 - r1).max(c2 - r2);
    let mut v = vec![format!("curve inequalities allow {lo} <= J <= {hi}")];
    if let (Some(lp), Some(lm)) = (q.lambda_plus, q.lambda_minus) {
        v.push(format!("Fiedler's rule needs J >= {}", (lp as i64 - lm as i64).abs()));
    }
    Ok(v)
}

/// Complex scheme `<J u alpha_+ u alpha_- u 1_eps2<beta_+ u beta_- u 1_eps1<gamma_+ u gamma_->>>`
/// of a degree 9 curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Degree9Scheme {
    pub alpha_plus: u32,
    pub alpha_minus: u32,
    pub beta_plus: u32,
    pub beta_minus: u32,
    pub gamma_plus: u32,
    pub gamma_minus: u32,
    pub eps1: i8,
    pub eps2: i8,
}

impl Degree9Scheme {
    pub fn new(alpha: (u32, u32), beta: (u32, u32), gamma: (u32, u32), eps1: i8, eps2: i8) -> Result<Self> {
        if eps1.abs() != 1 || eps2.abs() != 1 {
            return Err(Error::InvalidParams("eps1 and eps2 must be +1 or -1".into()));
        }
        if gamma.0 + gamma.1 == 0 {
            return Err(Error::InvalidParams("gamma must be at least 1".into()));
        }
        Ok(Self {
            alpha_plus: alpha.0,
            alpha_minus: alpha.1,
            beta_plus: beta.0,
            beta_minus: beta.1,
            gamma_plus: gamma.0,
            gamma_minus: gamma.1,
            eps1,
            eps2,
        })
    }

    pub fn alpha(&self) -> u32 {
        self.alpha_plus + self.alpha_minus
    }

    pub fn beta(&self) -> u32 {
        self.beta_plus + self.beta_minus
    }

    pub fn gamma(&self) -> u32 {
        self.gamma_plus + self.gamma_minus
    }

    pub fn delta_alpha(&self) -> i64 {
        self.alpha_plus as i64 - self.alpha_minus as i64
    }

    pub fn delta_beta(&self) -> i64 {
        self.beta_plus as i64 - self.beta_minus as i64
    }

    pub fn delta_gamma(&self) -> i64 {
        self.gamma_plus as i64 - self.gamma_minus as i64
    }

    /// Reverses every oval sign.
    pub fn flipped(&self) -> Self {
        Self {
            alpha_plus: self.alpha_minus,
            alpha_minus: self.alpha_plus,
            beta_plus: self.beta_minus,
            beta_minus: self.beta_plus,
            gamma_plus: self.gamma_minus,
            gamma_minus: self.gamma_plus,
            eps1: -self.eps1,
            eps2: -self.eps2,
        }
    }
}

fn sign_char(e: i8) -> char {
    if e > 0 {
        '+'
    } else {
        '-'
    }
}

impl fmt::Display for Degree9Scheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |plus: u32, minus: u32| {
            let mut s = vec![];
            if plus > 0 {
                s.push(format!("{plus}+"));
            }
            if minus > 0 {
                s.push(format!("{minus}-"));
            }
            s
        };
        let mut outer = vec!["J".to_string()];
        outer.extend(part(self.alpha_plus, self.alpha_minus));
        let mut mid = part(self.beta_plus, self.beta_minus);
        let inner = part(self.gamma_plus, self.gamma_minus).join(" u ");
        mid.push(format!("1{}<{inner}>", sign_char(self.eps1)));
        outer.push(format!("1{}<{}>", sign_char(self.eps2), mid.join(" u ")));
        write!(f, "<{}>", outer.join(" u "))
    }
}

/// Outcomes of the three arithmetic constraints on a degree 9 complex scheme.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Degree9Checks {
    pub rohlin_mishachev: bool,
    pub complex_orientation: bool,
    pub jump_bound: bool,
}

impl Degree9Checks {
    pub fn all(&self) -> bool {
        self.rohlin_mishachev && self.complex_orientation && self.jump_bound
    }
}

/// `da + e2 + (1 - 2 e2)(db + e1) + (1 - 2 e1 - 2 e2) dg`, which must equal 8.
pub fn rohlin_mishachev_lhs(s: &Degree9Scheme) -> i64 {
    let (e1, e2) = (s.eps1 as i64, s.eps2 as i64);
    s.delta_alpha() + e2 + (1 - 2 * e2) * (s.delta_beta() + e1) + (1 - 2 * e1 - 2 * e2) * s.delta_gamma()
}

/// `2 [(e2 + 1)(db + dg) + (e1 + 1) dg]`.
fn orientation_lhs_doubled(s: &Degree9Scheme) -> i64 {
    let (e1, e2) = (s.eps1 as i64, s.eps2 as i64);
    2 * ((e2 + 1) * (s.delta_beta() + s.delta_gamma()) + (e1 + 1) * s.delta_gamma())
}

fn orientation_square(s: &Degree9Scheme) -> i64 {
    let e = s.eps1 as i64 + s.eps2 as i64 + 2;
    e * e
}

/// `(e2 + 1)(db + dg) + (e1 + 1) dg = -(e1 + e2 + 2)^2 / 2`.
pub fn complex_orientation_holds(s: &Degree9Scheme) -> bool {
    orientation_lhs_doubled(s) == -orientation_square(s)
}

/// The same relation with `+(e1 + e2 + 2)^2 / 2` on the right.
pub fn complex_orientation_positive_rhs(s: &Degree9Scheme) -> bool {
    orientation_lhs_doubled(s) == orientation_square(s)
}

/// `|da + db + dg - sign v| <= 9 + 2 beta` for each sign carried by some oval of `<gamma>`.
pub fn jump_bound_holds(s: &Degree9Scheme) -> bool {
    let sum = s.delta_alpha() + s.delta_beta() + s.delta_gamma();
    let (_, hi) = degree9_jump_window(s.beta());
    [(1i8, s.gamma_plus), (-1, s.gamma_minus)]
        .iter()
        .filter(|(_, count)| *count > 0)
        .all(|&(sign, _)| (sum - sign as i64).abs() <= hi)
}

pub fn degree9_checks(s: &Degree9Scheme) -> Degree9Checks {
    Degree9Checks {
        rohlin_mishachev: rohlin_mishachev_lhs(s) == 8,
        complex_orientation: complex_orientation_holds(s),
        jump_bound: jump_bound_holds(s),
    }
}

/// Caller-asserted geometric facts used to prune the sieve.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SieveOptions {
    /// `|dg| <= 1` whenever `alpha > 0` and `beta = 0`.
    pub gamma_balance: bool,
    /// Use the `+(e1 + e2 + 2)^2 / 2` orientation relation instead of the default.
    pub positive_orientation_rhs: bool,
}

fn sieve_passes(s: &Degree9Scheme, opts: SieveOptions) -> bool {
    let orient = if opts.positive_orientation_rhs { complex_orientation_positive_rhs(s) } else { complex_orientation_holds(s) };
    if rohlin_mishachev_lhs(s) != 8 || !orient || !jump_bound_holds(s) {
        return false;
    }
    !(opts.gamma_balance && s.delta_gamma().abs() > 1 && s.alpha() > 0 && s.beta() == 0)
}

/// All complex schemes on the isotopy type `<J u alpha u 1<beta u 1<gamma>>>` passing the sieve, sorted.
pub fn degree9_enumerate(alpha: u32, beta: u32, gamma: u32, opts: SieveOptions) -> Result<Vec<Degree9Scheme>> {
    if gamma == 0 {
        return Err(Error::InvalidParams("gamma must be at least 1".into()));
    }
    let mut out: Vec<Degree9Scheme> = (0..=alpha)
        .into_par_iter()
        .flat_map_iter(|ap| {
            let mut local = vec![];
            for bp in 0..=beta {
                for gp in 0..=gamma {
                    for eps1 in [1i8, -1] {
                        for eps2 in [1i8, -1] {
                            let s = Degree9Scheme {
                                alpha_plus: ap,
                                alpha_minus: alpha - ap,
                                beta_plus: bp,
                                beta_minus: beta - bp,
                                gamma_plus: gp,
                                gamma_minus: gamma - gp,
                                eps1,
                                eps2,
                            };
                            if sieve_passes(&s, opts) {
                                local.push(s);
                            }
                        }
                    }
                }
            }
            local
        })
        .collect();
    out.sort();
    Ok(out)
}

/// Number of ovals of a degree 9 M-curve besides the odd branch and the two nest ovals.
pub const DEGREE9_M_CURVE_EMPTY_OVALS: u32 = 26;

/// Sieve report for an isotopy type; `m_curve` enforces `alpha + beta + gamma = 26`.
pub fn degree9_report(alpha: u32, beta: u32, gamma: u32, m_curve: bool, opts: SieveOptions) -> Result<Report> {
    let mut report = Report::new(Verdict::Admissible);
    if gamma == 0 {
        report.verdict = Verdict::HypothesisNotMet;
        report.violated.push("gamma must be at least 1".into());
        return Ok(report);
    }
    if opts.gamma_balance {
        report.assumptions.push("|delta gamma| <= 1 whenever alpha > 0 and beta = 0".into());
    }
    if opts.positive_orientation_rhs {
        report.assumptions.push("orientation relation with positive right-hand side".into());
    }
    if m_curve {
        report.assumptions.push("M-curve: 29 real components".into());
        let total = alpha + beta + gamma;
        if total != DEGREE9_M_CURVE_EMPTY_OVALS {
            report.verdict = Verdict::Prohibited;
            report.violated.push(format!("M-curve needs alpha + beta + gamma = 26, got {total}"));
            return Ok(report);
        }
    }
    let (lo, hi) = degree9_jump_window(beta);
    report.notes.push(format!("jumps in a pencil centered in an oval of <gamma>: {lo} <= J_v <= {hi}"));
    report.schemes = degree9_enumerate(alpha, beta, gamma, opts)?;
    if report.schemes.is_empty() {
        report.verdict = Verdict::Prohibited;
        report.violated.push("no complex scheme satisfies the orientation formulas and the jump bound".into());
    }
    Ok(report)
}

/// The complex schemes listed for `<J u alpha u 1<1<gamma>>>` with `beta = 0`: empty unless
/// `alpha >= 7` and `alpha`, `gamma` are odd.
pub fn beta_zero_families(alpha: u32, gamma: u32) -> Vec<Degree9Scheme> {
    if alpha < 7 || alpha % 2 == 0 || gamma % 2 == 0 {
        return vec![];
    }
    let a = ((alpha + 7) / 2, (alpha - 7) / 2);
    let (gp, gm) = ((gamma + 1) / 2, (gamma - 1) / 2);
    let mk = |g: (u32, u32), e1: i8, e2: i8| Degree9Scheme::new(a, (0, 0), g, e1, e2).expect("valid");
    let mut v = vec![mk((gp, gm), -1, -1), mk((gm, gp), -1, 1), mk((gm, gp), 1, -1)];
    v.sort();
    v
}
