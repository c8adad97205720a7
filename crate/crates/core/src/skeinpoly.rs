//! Skein systems of cyclically symmetric multilinear polynomials.
//!
//! The matrices `A_J^±`, their normalized determinants `a_J^±`, reconstruction of a
//! system from its initial values, closed forms for the twisted determinants of the
//! b and c families, and the homogeneous expansion through disjoint edge sets of the
//! J-cycle.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::algebra::{bareiss_det, GaussianInteger};
use crate::braid::FamilyKind;
use crate::error::{Error, Result};

/// Largest arity handled by the subset-keyed representation.
pub const MAX_ARITY: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PmSign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl PmSign {
    pub fn flip(self) -> Self {
        match self {
            PmSign::Plus => PmSign::Minus,
            PmSign::Minus => PmSign::Plus,
        }
    }

    pub fn value(self) -> i64 {
        match self {
            PmSign::Plus => 1,
            PmSign::Minus => -1,
        }
    }
}

impl std::str::FromStr for PmSign {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" | "p" => Ok(PmSign::Plus),
            "-" | "minus" | "m" => Ok(PmSign::Minus),
            _ => Err(Error::Parse(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

/// A polynomial of degree at most one in each of `x_1..x_J`, keyed by the bitmask
/// of the variables in each monomial.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MultilinearPoly {
    arity: usize,
    coeffs: BTreeMap<u32, GaussianInteger>,
}

impl MultilinearPoly {
    pub fn zero(arity: usize) -> Self {
        assert!(arity <= MAX_ARITY, "arity {arity} exceeds {MAX_ARITY}");
        Self { arity, coeffs: BTreeMap::new() }
    }

    pub fn constant(arity: usize, c: GaussianInteger) -> Self {
        let mut p = Self::zero(arity);
        p.add_term(0, c);
        p
    }

    /// The variable `x_{j+1}` (0-based `j`).
    pub fn variable(arity: usize, j: usize) -> Self {
        assert!(j < arity);
        let mut p = Self::zero(arity);
        p.add_term(1 << j, GaussianInteger::one());
        p
    }

    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (u32, GaussianInteger)>) -> Self {
        let mut p = Self::zero(arity);
        for (m, c) in terms {
            assert!(m >> arity == 0, "monomial outside the arity");
            p.add_term(m, c);
        }
        p
    }

    fn add_term(&mut self, mask: u32, c: GaussianInteger) {
        if c.is_zero() {
            return;
        }
        let slot = self.coeffs.entry(mask).or_insert_with(GaussianInteger::zero);
        *slot = &*slot + &c;
        if slot.is_zero() {
            self.coeffs.remove(&mask);
        }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> GaussianInteger {
        self.coeffs.get(&mask).cloned().unwrap_or_else(GaussianInteger::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &GaussianInteger)> {
        self.coeffs.iter().map(|(m, c)| (*m, c))
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.len()
    }

    pub fn add(&self, o: &Self) -> Self {
        assert_eq!(self.arity, o.arity);
        let mut p = self.clone();
        for (m, c) in &o.coeffs {
            p.add_term(*m, c.clone());
        }
        p
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.scale(&GaussianInteger::real(-1)))
    }

    pub fn scale(&self, c: &GaussianInteger) -> Self {
        Self::from_terms(self.arity, self.coeffs.iter().map(|(m, v)| (*m, v * c)))
    }

    pub fn eval(&self, x: &[GaussianInteger]) -> Result<GaussianInteger> {
        if x.len() != self.arity {
            return Err(Error::Shape(format!("expected {} values, got {}", self.arity, x.len())));
        }
        let mut acc = GaussianInteger::zero();
        for (m, c) in &self.coeffs {
            let mut term = c.clone();
            for (j, xj) in x.iter().enumerate() {
                if m >> j & 1 == 1 {
                    term = &term * xj;
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    pub fn eval_int(&self, x: &[i64]) -> Result<GaussianInteger> {
        let xs: Vec<GaussianInteger> = x.iter().map(|&v| GaussianInteger::real(v)).collect();
        self.eval(&xs)
    }

    /// `f(x_J, x_1, ..., x_{J-1})`.
    pub fn rotate(&self) -> Self {
        let j = self.arity;
        let full = if j == 0 { 0 } else { (1u32 << j) - 1 };
        Self::from_terms(
            j,
            self.coeffs.iter().map(|(m, c)| {
                // variable i of the result is variable i-1 of the argument vector
                let shifted = ((m << 1) | (m >> (j - 1))) & full;
                (shifted, c.clone())
            }),
        )
    }

    pub fn is_cyclic(&self) -> bool {
        self.arity == 0 || self.rotate() == *self
    }

    /// Sets `x_{j+1} = 0`.
    pub fn set_zero(&self, j: usize) -> Self {
        Self::from_terms(self.arity, self.coeffs.iter().filter(|(m, _)| *m >> j & 1 == 0).map(|(m, c)| (*m, c.clone())))
    }

    /// `g(x_1 + x_3, x_4, ..., x_J)` as a polynomial in J variables, for g of arity J-2.
    pub fn lift_merged(g: &Self, arity: usize) -> Self {
        assert_eq!(g.arity + 2, arity);
        let mut p = Self::zero(arity);
        for (m, c) in &g.coeffs {
            let rest = (m >> 1) << 3;
            if m & 1 == 1 {
                p.add_term(rest | 1, c.clone());
                p.add_term(rest | 4, c.clone());
            } else {
                p.add_term(rest, c.clone());
            }
        }
        p
    }

    /// Integer coefficients, if every coefficient is real.
    pub fn to_integer_terms(&self) -> Option<BTreeMap<u32, BigInt>> {
        self.coeffs.iter().map(|(m, c)| c.is_real().then(|| (*m, c.re.clone()))).collect()
    }

    pub fn degree(&self) -> Option<u32> {
        self.coeffs.keys().map(|m| m.count_ones()).max()
    }

    pub fn is_homogeneous(&self, d: u32) -> bool {
        self.coeffs.keys().all(|m| m.count_ones() == d)
    }
}

impl fmt::Display for MultilinearPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.coeffs {
            let negative = c.is_real() && c.re.is_negative();
            let coeff = match (c.is_real(), negative && !first) {
                (true, true) => (-&c.re).to_string(),
                (true, false) => c.re.to_string(),
                _ => format!("({c})"),
            };
            let vars: Vec<String> = (0..self.arity).filter(|j| m >> j & 1 == 1).map(|j| format!("x{}", j + 1)).collect();
            let body = if vars.is_empty() { coeff } else { format!("{coeff}*{}", vars.join("*")) };
            if !first {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            write!(f, "{body}")?;
            first = false;
        }
        Ok(())
    }
}

/// A multilinear polynomial invariant under the cyclic shift of its variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearCyclicPoly(MultilinearPoly);

impl MultilinearCyclicPoly {
    pub fn new(p: MultilinearPoly) -> Result<Self> {
        if !p.is_cyclic() {
            return Err(Error::InvalidParams("polynomial is not cyclically symmetric".into()));
        }
        Ok(Self(p))
    }

    pub fn poly(&self) -> &MultilinearPoly {
        &self.0
    }

    pub fn into_poly(self) -> MultilinearPoly {
        self.0
    }

    pub fn arity(&self) -> usize {
        self.0.arity
    }

    pub fn eval_int(&self, x: &[i64]) -> Result<GaussianInteger> {
        self.0.eval_int(x)
    }
}

impl fmt::Display for MultilinearCyclicPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `A_J^±` with every `x_i` set to zero: the J-cycle adjacency with the closing edge signed.
fn a_matrix_constant(j: usize, sign: PmSign) -> Vec<Vec<BigInt>> {
    let s = sign.value();
    let mut a = vec![vec![0i64; j]; j];
    for i in 0..j.saturating_sub(1) {
        a[i][i + 1] += 1;
        a[i + 1][i] += 1;
    }
    if j >= 1 {
        a[0][j - 1] += s;
        a[j - 1][0] += s;
    }
    a.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect()
}

/// `A_J^±(x)`.
pub fn a_matrix(sign: PmSign, x: &[BigInt]) -> Vec<Vec<BigInt>> {
    let mut a = a_matrix_constant(x.len(), sign);
    for (i, xi) in x.iter().enumerate() {
        a[i][i] -= BigInt::from(2) * xi;
    }
    a
}

pub fn a_matrix_det(sign: PmSign, x: &[i64]) -> Result<BigInt> {
    if x.is_empty() {
        return Err(Error::InvalidParams("J must be positive".into()));
    }
    let xs: Vec<BigInt> = x.iter().map(|&v| BigInt::from(v)).collect();
    Ok(bareiss_det(a_matrix(sign, &xs)))
}

/// `(sign applied, matrix sign)` with `a_J^± = s * det A_J^{sign'}`.
fn a_pm_recipe(j: usize, sign: PmSign) -> (i64, PmSign) {
    match j % 4 {
        0 | 1 => (sign.value(), sign),
        _ => (-sign.value(), sign.flip()),
    }
}

pub fn a_pm(sign: PmSign, x: &[i64]) -> Result<BigInt> {
    let (s, which) = a_pm_recipe(x.len(), sign);
    Ok(a_matrix_det(which, x)? * s)
}

/// `det A_J^±` as a multilinear polynomial: the coefficient of `x_S` is
/// `(-2)^|S|` times the principal minor of the constant part on the complement of S.
pub fn a_matrix_det_symbolic(j: usize, sign: PmSign) -> Result<MultilinearPoly> {
    if j == 0 || j > MAX_ARITY {
        return Err(Error::InvalidParams(format!("J must lie in 1..={MAX_ARITY}")));
    }
    let a0 = a_matrix_constant(j, sign);
    let full = (1u32 << j) - 1;
    let mut p = MultilinearPoly::zero(j);
    for s in 0..=full {
        let keep: Vec<usize> = (0..j).filter(|i| s >> i & 1 == 0).collect();
        let minor: Vec<Vec<BigInt>> = keep.iter().map(|&r| keep.iter().map(|&c| a0[r][c].clone()).collect()).collect();
        let d = bareiss_det(minor);
        let factor = num_traits::pow(BigInt::from(-2), s.count_ones() as usize);
        p.add_term(s, GaussianInteger::from(d * factor));
    }
    Ok(p)
}

pub fn a_pm_symbolic(j: usize, sign: PmSign) -> Result<MultilinearCyclicPoly> {
    let (s, which) = a_pm_recipe(j, sign);
    MultilinearCyclicPoly::new(a_matrix_det_symbolic(j, which)?.scale(&GaussianInteger::real(s)))
}

/// Checks multilinearity, cyclic symmetry and the reduction
/// `f_J(x_1, 0, x_3, ..., x_J) = f_{J-2}(x_1 + x_3, x_4, ..., x_J)`.
pub fn check_skein_axioms(f: &[MultilinearPoly]) -> bool {
    if f.iter().any(|p| !p.is_cyclic()) {
        return false;
    }
    f.windows(2).all(|w| w[1].arity() == w[0].arity() + 2 && skein_reduction_holds(&w[1], &w[0]))
}

pub fn skein_reduction_holds(fj: &MultilinearPoly, fj2: &MultilinearPoly) -> bool {
    fj.arity() == fj2.arity() + 2 && fj.set_zero(1) == MultilinearPoly::lift_merged(fj2, fj.arity())
}

/// Initial data of a skein system: parity, `c_0`, (`c_1` for parity 2) and `c_J = f_J(1,...,1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SkeinSystemSpec {
    pub parity: u8,
    pub c0: GaussianInteger,
    pub c1: Option<GaussianInteger>,
    pub values: BTreeMap<usize, GaussianInteger>,
}

impl SkeinSystemSpec {
    pub fn new(
        parity: u8,
        c0: GaussianInteger,
        c1: Option<GaussianInteger>,
        values: BTreeMap<usize, GaussianInteger>,
    ) -> Result<Self> {
        match (parity, &c1) {
            (1, None) | (2, Some(_)) => {}
            (1, Some(_)) => return Err(Error::InvalidParams("c_1 is only used for parity 2".into())),
            (2, None) => return Err(Error::InvalidParams("parity 2 needs c_1".into())),
            _ => return Err(Error::InvalidParams("parity must be 1 or 2".into())),
        }
        if values.keys().any(|&j| j == 0 || (j % 2) != (parity as usize % 2)) {
            return Err(Error::InvalidParams("c_J given for an arity of the wrong parity".into()));
        }
        Ok(Self { parity, c0, c1, values })
    }

    /// Builds the data from a rule for `c_J`, for arities up to `max_j`.
    pub fn from_rule(
        parity: u8,
        c0: GaussianInteger,
        c1: Option<GaussianInteger>,
        max_j: usize,
        rule: impl Fn(usize) -> GaussianInteger,
    ) -> Result<Self> {
        let values = (parity as usize..=max_j).step_by(2).map(|j| (j, rule(j))).collect();
        Self::new(parity, c0, c1, values)
    }

    fn value(&self, j: usize) -> Result<GaussianInteger> {
        self.values.get(&j).cloned().ok_or_else(|| Error::InvalidParams(format!("c_{j} is missing")))
    }
}

/// The initial data of the four systems `a_J^±` split by parity.
pub fn a_system_spec(sign: PmSign, parity: u8, max_j: usize) -> Result<SkeinSystemSpec> {
    let g = GaussianInteger::real;
    let ip = |e: i64| GaussianInteger::i_pow(e);
    match (sign, parity) {
        (PmSign::Plus, 1) => SkeinSystemSpec::from_rule(1, g(2), None, max_j, |j| (&ip(j as i64 + 1) + &g(1)).scale(&2.into())),
        (PmSign::Minus, 1) => SkeinSystemSpec::from_rule(1, g(2), None, max_j, |j| (&ip(j as i64 - 1) + &g(1)).scale(&2.into())),
        (PmSign::Plus, 2) => SkeinSystemSpec::from_rule(2, g(0), Some(g(0)), max_j, |j| (&ip(j as i64) - &g(1)).scale(&2.into())),
        (PmSign::Minus, 2) => {
            SkeinSystemSpec::from_rule(2, g(-4), Some(g(-4)), max_j, |j| (&ip(j as i64) + &g(1)).scale(&(-2).into()))
        }
        _ => Err(Error::InvalidParams("parity must be 1 or 2".into())),
    }
}

/// The members `f_ν, f_{ν+2}, ..., f_J` determined by the initial data.
pub fn reconstruct_all(data: &SkeinSystemSpec, j: usize) -> Result<Vec<MultilinearPoly>> {
    let nu = data.parity as usize;
    if j < nu || (j - nu) % 2 != 0 {
        return Err(Error::Parity { n: data.parity as u32, j });
    }
    if j > MAX_ARITY {
        return Err(Error::InvalidParams(format!("J must not exceed {MAX_ARITY}")));
    }
    let mut out: Vec<MultilinearPoly> = Vec::new();
    let base_values: Vec<GaussianInteger> = if nu == 1 {
        vec![data.c0.clone(), data.value(1)?]
    } else {
        let c1 = data.c1.clone().expect("validated");
        vec![data.c0.clone(), c1.clone(), c1, data.value(2)?]
    };
    out.push(from_cube_values(nu, &base_values));
    let mut arity = nu + 2;
    while arity <= j {
        let prev = out.last().expect("base exists");
        let full = (1u32 << arity) - 1;
        let mut vals = vec![GaussianInteger::zero(); 1 << arity];
        for v in 0..=full {
            if v == full {
                vals[v as usize] = data.value(arity)?;
                continue;
            }
            let mut found: Option<GaussianInteger> = None;
            for p in (0..arity).filter(|p| v >> p & 1 == 0) {
                // rotate so that the zero sits in the second slot
                let w: Vec<i64> = (0..arity).map(|i| (v >> ((i + p + arity - 1) % arity) & 1) as i64).collect();
                let mut arg = vec![w[0] + w[2]];
                arg.extend_from_slice(&w[3..]);
                let val = prev.eval_int(&arg)?;
                match &found {
                    None => found = Some(val),
                    Some(f) if *f == val => {}
                    Some(f) => {
                        return Err(Error::Inconsistent(format!(
                            "arity {arity}: vertex {v:#b} gets both {f} and {val}"
                        )))
                    }
                }
            }
            vals[v as usize] = found.expect("vertex has a zero");
        }
        out.push(from_cube_values(arity, &vals));
        arity += 2;
    }
    Ok(out)
}

pub fn reconstruct_from_initial(data: &SkeinSystemSpec, j: usize) -> Result<MultilinearCyclicPoly> {
    let last = reconstruct_all(data, j)?.pop().expect("nonempty");
    MultilinearCyclicPoly::new(last)
}

/// Multilinear interpolation from the values at the vertices of the unit cube.
fn from_cube_values(arity: usize, vals: &[GaussianInteger]) -> MultilinearPoly {
    let mut c: Vec<GaussianInteger> = vals.to_vec();
    // Moebius inversion over the subset lattice
    for bit in 0..arity {
        for s in 0..c.len() {
            if s >> bit & 1 == 1 {
                c[s] = &c[s] - &c[s ^ (1 << bit)];
            }
        }
    }
    MultilinearPoly::from_terms(arity, c.into_iter().enumerate().map(|(m, v)| (m as u32, v)))
}

/// Closed form of `i^alpha det` for the b or c family braid with exponents `alpha`,
/// in its published five-case shape.
///
/// For the c family with n odd and k odd this disagrees in sign with the determinant
/// table at `alpha = (1, ..., 1)`; [`tilde_reconciled`] carries the corrected sign.
pub fn tilde_closed_form(kind: FamilyKind, n: u32, k: u32, alpha: &[u32]) -> Result<GaussianInteger> {
    let j = alpha.len();
    if n == 0 || k == 0 || j == 0 {
        return Err(Error::InvalidParams("n, k and J must be positive".into()));
    }
    if (n as usize + j) % 2 != 0 {
        return Err(Error::Parity { n, j });
    }
    if kind == FamilyKind::C && k < 2 {
        return Err(Error::InvalidParams("the c family needs k >= 2".into()));
    }
    let x: Vec<i64> = alpha.iter().map(|&a| a as i64).collect();
    let ap = || a_pm(PmSign::Plus, &x).map(GaussianInteger::from);
    let am = || a_pm(PmSign::Minus, &x).map(GaussianInteger::from);
    let two_pow = GaussianInteger::real(BigInt::one() << (k - 1));
    let ik = GaussianInteger::i_pow(k as i64);
    let imk = GaussianInteger::i_pow(-(k as i64));
    let out = match (n % 4, kind) {
        (0, _) if k > 1 => GaussianInteger::zero(),
        (0, _) => ap()?,
        (2, _) => {
            let four = GaussianInteger::real(-(BigInt::one() << (2 * (k - 1))));
            &four * &am()?
        }
        _ => {
            let plus_branch = (n + 2 * k) % 4 == 3;
            let use_plus = plus_branch == (kind == FamilyKind::B);
            if use_plus {
                &(&ik * &two_pow) * &ap()?
            } else {
                &(&imk * &two_pow) * &am()?
            }
        }
    };
    Ok(out)
}

/// [`tilde_closed_form`] with the c-family odd-n branches multiplied by `(-1)^k`, which
/// makes it agree with the determinant table of the c family.
pub fn tilde_reconciled(kind: FamilyKind, n: u32, k: u32, alpha: &[u32]) -> Result<GaussianInteger> {
    let t = tilde_closed_form(kind, n, k, alpha)?;
    Ok(if kind == FamilyKind::C && n % 2 == 1 && k % 2 == 1 { -t } else { t })
}

/// `det` of the family braid through the reconciled closed form: `i^-alpha` times the twisted value.
pub fn det_closed_form(kind: FamilyKind, n: u32, k: u32, alpha: &[u32]) -> Result<GaussianInteger> {
    let s: i64 = alpha.iter().map(|&a| a as i64).sum();
    Ok(&GaussianInteger::i_pow(-s) * &tilde_reconciled(kind, n, k, alpha)?)
}

/// Masks of the subsets of variables left uncovered by a set of pairwise disjoint
/// edges of the J-cycle covering exactly `J - k` vertices.
pub fn cycle_matchings(j: usize, k: usize) -> Result<Vec<u32>> {
    if k > j || (j - k) % 2 != 0 {
        return Err(Error::Parity { n: k as u32, j });
    }
    if j > MAX_ARITY {
        return Err(Error::InvalidParams(format!("J must not exceed {MAX_ARITY}")));
    }
    let edges: Vec<u32> = match j {
        0 | 1 => vec![],
        2 => vec![0b11],
        _ => (0..j).map(|i| (1u32 << i) | (1u32 << ((i + 1) % j))).collect(),
    };
    let target = (j - k) / 2;
    let full = if j == 0 { 0 } else { (1u32 << j) - 1 };
    let mut out = Vec::new();
    fn go(edges: &[u32], start: usize, used: u32, left: usize, full: u32, out: &mut Vec<u32>) {
        if left == 0 {
            out.push(full & !used);
            return;
        }
        for i in start..edges.len() {
            if edges[i] & used == 0 {
                go(edges, i + 1, used | edges[i], left - 1, full, out);
            }
        }
    }
    go(&edges, 0, 0, target, full, &mut out);
    out.sort_unstable();
    Ok(out)
}

/// `f_{J,k}`: the sum of the monomials left uncovered by the matchings of the J-cycle.
pub fn f_jk(j: usize, k: usize) -> Result<MultilinearCyclicPoly> {
    let masks = cycle_matchings(j, k)?;
    MultilinearCyclicPoly::new(MultilinearPoly::from_terms(j, masks.into_iter().map(|m| (m, GaussianInteger::one()))))
}

/// `a_J^±` assembled from the homogeneous pieces `f_{J,k}`.
pub fn a_pm_homogeneous(j: usize, sign: PmSign) -> Result<MultilinearCyclicPoly> {
    if j == 0 {
        return Err(Error::InvalidParams("J must be positive".into()));
    }
    let two_i = GaussianInteger::new(0, 2);
    let mut plus = MultilinearPoly::zero(j);
    let start = if j % 2 == 0 { 2 } else { 1 };
    for k in (start..=j).step_by(2) {
        let mut c = two_i.pow(k as u32);
        if j % 2 == 1 {
            c = &c * &GaussianInteger::i();
        }
        plus = plus.add(&f_jk(j, k)?.into_poly().scale(&c));
    }
    let (base_plus, base_minus) = if j % 2 == 0 { (0, -4) } else { (2, 4) };
    plus = plus.add(&MultilinearPoly::constant(j, GaussianInteger::real(base_plus)));
    let out = match sign {
        PmSign::Plus => plus,
        PmSign::Minus => MultilinearPoly::constant(j, GaussianInteger::real(base_minus)).sub(&plus),
    };
    MultilinearCyclicPoly::new(out)
}

/// The number of matchings counted in closed form, `C((J+k)/2 - 1, (J-k)/2) * J / k`.
pub fn matching_count_formula(j: usize, k: usize) -> Option<BigRational> {
    if k == 0 || k > j || (j - k) % 2 != 0 {
        return None;
    }
    let top = (j + k) / 2 - 1;
    let bot = (j - k) / 2;
    Some(BigRational::from_integer(binomial(top as u64, bot as u64)) * BigRational::new(BigInt::from(j), BigInt::from(k)))
}

fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Both sides of `sum_k C(n-k, k) (-4)^-k = (n+1) / 2^n`.
pub fn binomial_identity_sides(n: u64) -> (BigRational, BigRational) {
    let mut lhs = BigRational::zero();
    for k in 0..=n / 2 {
        let c = BigRational::from_integer(binomial(n - k, k));
        let w = BigRational::new(BigInt::one(), num_traits::pow(BigInt::from(-4), k as usize));
        lhs += c * w;
    }
    let rhs = BigRational::new(BigInt::from(n + 1), BigInt::one() << n);
    (lhs, rhs)
}
