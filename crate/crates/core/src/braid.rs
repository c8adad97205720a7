//! Braid words, the named subwords pi, tau, Delta, delta, and the families b and c.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A word in the standard generators of B_m. Letter `+j` is sigma_j, `-j` its inverse.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::InvalidParams("a braid needs at least one strand".into()));
        }
        for &l in &letters {
            let j = l.unsigned_abs() as usize;
            if l == 0 || j >= strands {
                return Err(Error::IndexOutOfRange { index: l as i64, strands });
            }
        }
        Ok(Self { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        Self { strands: strands.max(1), letters: Vec::new() }
    }

    /// Single generator sigma_j^{+-1}.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Same letters viewed in B_m for a larger m.
    pub fn embed(&self, strands: usize) -> Result<Self> {
        if strands < self.strands {
            return Err(Error::StrandMismatch(self.strands, strands));
        }
        Ok(Self { strands, letters: self.letters.clone() })
    }

    pub fn inverse(&self) -> Self {
        Self { strands: self.strands, letters: self.letters.iter().rev().map(|&l| -l).collect() }
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch(self.strands, other.strands));
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { strands: self.strands, letters })
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut letters = Vec::with_capacity(base.letters.len() * e.unsigned_abs() as usize);
        for _ in 0..e.unsigned_abs() {
            letters.extend_from_slice(&base.letters);
        }
        Self { strands: self.strands, letters }
    }

    /// `w^-1 self w`
    pub fn conjugate_by(&self, w: &Self) -> Result<Self> {
        w.inverse().concat(self)?.concat(w)
    }

    /// Cancels adjacent `sigma_j sigma_j^-1` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self { strands: self.strands, letters: out }
    }

    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image of each strand position under the braid permutation.
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let j = l.unsigned_abs() as usize;
            perm.swap(j - 1, j);
        }
        perm
    }

    /// Number of components of the closure (cycles of the permutation).
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for s in 0..perm.len() {
            if !seen[s] {
                cycles += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = perm[x];
                }
            }
        }
        cycles
    }

    /// Replaces the letter at `pos`; `None` deletes it.
    pub fn with_letter(&self, pos: usize, letter: Option<i32>) -> Result<Self> {
        let mut letters = self.letters.clone();
        if pos >= letters.len() {
            return Err(Error::InvalidParams(format!("position {pos} beyond word length {}", letters.len())));
        }
        match letter {
            Some(l) => letters[pos] = l,
            None => {
                letters.remove(pos);
            }
        }
        Self::new(self.strands, letters)
    }

    pub fn to_text(&self) -> String {
        self.to_string()
    }

    /// Parses comma- or space-separated signed generator indices.
    pub fn parse(strands: usize, text: &str) -> Result<Self> {
        let letters = text
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<i32>().map_err(|_| Error::Parse(format!("bad braid letter {s:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(strands, letters)
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for BraidWord {
    type Err = Error;

    /// `m:letters`, e.g. `3:1,2,1`.
    fn from_str(s: &str) -> Result<Self> {
        let (m, w) = s.split_once(':').ok_or_else(|| Error::Parse(format!("expected strands:letters, got {s:?}")))?;
        let m = m.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad strand count {m:?}")))?;
        Self::parse(m, w)
    }
}

/// Concatenates `words[i]^powers[i]`, optionally free-reducing the result.
pub fn compose(words: &[BraidWord], powers: &[i64], reduce: bool) -> Result<BraidWord> {
    if words.len() != powers.len() {
        return Err(Error::InvalidParams("one power per word is required".into()));
    }
    let strands = words.first().map(|w| w.strands).unwrap_or(1);
    let mut acc = BraidWord::identity(strands);
    for (w, &p) in words.iter().zip(powers) {
        acc = acc.concat(&w.pow(p))?;
    }
    Ok(if reduce { acc.free_reduce() } else { acc })
}

/// The named subwords.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedWord {
    Pi(usize, usize),
    Tau(usize, usize),
    Delta(usize),
    DeltaSmall(usize),
}

fn check_gen(j: usize, strands: usize) -> Result<()> {
    if j == 0 || j >= strands {
        return Err(Error::IndexOutOfRange { index: j as i64, strands });
    }
    Ok(())
}

/// `pi_{k,l}`: the run of generators from sigma_k to sigma_l.
pub fn pi(k: usize, l: usize, strands: usize) -> Result<BraidWord> {
    check_gen(k, strands)?;
    check_gen(l, strands)?;
    let letters: Vec<i32> = if k <= l {
        (k..=l).map(|j| j as i32).collect()
    } else {
        (l..=k).rev().map(|j| j as i32).collect()
    };
    BraidWord::new(strands, letters)
}

/// `tau_{k,l}`.
pub fn tau(k: usize, l: usize, strands: usize) -> Result<BraidWord> {
    check_gen(k, strands)?;
    check_gen(l, strands)?;
    use std::cmp::Ordering::*;
    match k.cmp(&l) {
        Equal => Ok(BraidWord::identity(strands)),
        Less => pi(l, k + 1, strands)?.inverse().concat(&pi(k, l - 1, strands)?),
        Greater => pi(l, k - 1, strands)?.inverse().concat(&pi(k, l + 1, strands)?),
    }
}

/// `Delta_k = pi_{1,k-1} pi_{1,k-2} ... pi_{1,2} sigma_1`, the half twist on the first k strands.
pub fn delta_big(k: usize, strands: usize) -> Result<BraidWord> {
    if k == 0 || k > strands {
        return Err(Error::IndexOutOfRange { index: k as i64, strands });
    }
    let mut w = BraidWord::identity(strands);
    for top in (1..k).rev() {
        w = w.concat(&pi(1, top, strands)?)?;
    }
    Ok(w)
}

/// `delta_k = sigma_1 sigma_2 ... sigma_{k-1}`.
pub fn delta_small(k: usize, strands: usize) -> Result<BraidWord> {
    if k == 0 || k > strands {
        return Err(Error::IndexOutOfRange { index: k as i64, strands });
    }
    BraidWord::new(strands, (1..k).map(|j| j as i32).collect())
}

pub fn named_word(kind: NamedWord, strands: usize) -> Result<BraidWord> {
    match kind {
        NamedWord::Pi(k, l) => pi(k, l, strands),
        NamedWord::Tau(k, l) => tau(k, l, strands),
        NamedWord::Delta(k) => delta_big(k, strands),
        NamedWord::DeltaSmall(k) => delta_small(k, strands),
    }
}

/// Parameters of the families b and c: m = 2k+1 strands, J blocks, exponents alpha_j.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyParams {
    pub n: u32,
    pub k: u32,
    pub alphas: Vec<u32>,
}

impl FamilyParams {
    pub fn new(n: u32, k: u32, alphas: Vec<u32>) -> Result<Self> {
        if n == 0 || k == 0 || alphas.is_empty() {
            return Err(Error::InvalidParams("n, k and J must be positive".into()));
        }
        if (n as usize + alphas.len()) % 2 != 0 {
            return Err(Error::Parity { n, j: alphas.len() });
        }
        Ok(Self { n, k, alphas })
    }

    pub fn ones(n: u32, k: u32, j: usize) -> Result<Self> {
        Self::new(n, k, vec![1; j])
    }

    pub fn j(&self) -> usize {
        self.alphas.len()
    }

    pub fn m(&self) -> usize {
        2 * self.k as usize + 1
    }

    pub fn alpha_sum(&self) -> u64 {
        self.alphas.iter().map(|&a| a as u64).sum()
    }
}

/// The generator-index offset between the written family formulas and sigma_1..sigma_{m-1}.
///
/// The family generators are read so that the special strands are the middle ones:
/// b acts on strands k, k+1, k+2 through sigma_k and sigma_{k+1}, and c through
/// sigma_{k-1} and sigma_{k+2}.
pub const FAMILY_INDEX_SHIFT: usize = 1;

/// `w_1 ... w_J Delta^n` with `w_j = sigma_lo^{-alpha_j} tau_{lo,hi}` for odd j and
/// `sigma_hi^{-alpha_j} tau_{hi,lo}` for even j, using literal generator indices.
pub fn family_general(p: &FamilyParams, lo: usize, hi: usize) -> Result<BraidWord> {
    let m = p.m();
    let mut w = BraidWord::identity(m);
    for (idx, &a) in p.alphas.iter().enumerate() {
        let (g, other) = if idx % 2 == 0 { (lo, hi) } else { (hi, lo) };
        let block = BraidWord::new(m, vec![-(g as i32); a as usize])?.concat(&tau(g, other, m)?)?;
        w = w.concat(&block)?;
    }
    w.concat(&delta_big(m, m)?.pow(p.n as i64))
}

/// `b = b_1 ... b_J Delta^n` in B_{2k+1}.
pub fn family_b(p: &FamilyParams) -> Result<BraidWord> {
    let k = p.k as usize;
    family_general(p, k - 1 + FAMILY_INDEX_SHIFT, k + FAMILY_INDEX_SHIFT)
}

/// `c = c_1 ... c_J Delta^n` in B_{2k+1}, k >= 2.
pub fn family_c(p: &FamilyParams) -> Result<BraidWord> {
    if p.k < 2 {
        return Err(Error::InvalidParams("the c family needs k >= 2".into()));
    }
    let k = p.k as usize;
    family_general(p, k - 2 + FAMILY_INDEX_SHIFT, k + 1 + FAMILY_INDEX_SHIFT)
}

/// Which of the two braid families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyKind {
    B,
    C,
}

impl FromStr for FamilyKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" | "B" => Ok(FamilyKind::B),
            "c" | "C" => Ok(FamilyKind::C),
            _ => Err(Error::Parse(format!("unknown family {s:?}"))),
        }
    }
}

pub fn family(kind: FamilyKind, p: &FamilyParams) -> Result<BraidWord> {
    match kind {
        FamilyKind::B => family_b(p),
        FamilyKind::C => family_c(p),
    }
}

/// `Delta^n` in B_{2k+1}.
pub fn delta_power(n: i64, k: u32) -> BraidWord {
    let m = 2 * k as usize + 1;
    delta_big(m, m).expect("valid half twist").pow(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(m: usize, l: &[i32]) -> BraidWord {
        BraidWord::new(m, l.to_vec()).unwrap()
    }

    #[test]
    fn named_words() {
        assert_eq!(delta_big(3, 3).unwrap(), w(3, &[1, 2, 1]));
        assert_eq!(delta_big(4, 4).unwrap(), w(4, &[1, 2, 3, 1, 2, 1]));
        assert_eq!(tau(2, 3, 4).unwrap(), w(4, &[-3, 2]));
        assert_eq!(tau(3, 2, 4).unwrap(), w(4, &[-2, 3]));
        assert_eq!(tau(1, 3, 4).unwrap(), w(4, &[-2, -3, 1, 2]));
        assert_eq!(pi(3, 1, 4).unwrap(), w(4, &[3, 2, 1]));
        assert_eq!(delta_small(3, 3).unwrap(), w(3, &[1, 2]));
        assert!(pi(0, 1, 3).is_err());
        assert!(tau(1, 3, 3).is_err());
    }

    #[test]
    fn composition() {
        let s = w(2, &[1]);
        assert!(compose(&[s.clone(), s.inverse()], &[1, 1], true).unwrap().is_empty());
        let d = delta_big(3, 3).unwrap();
        assert_eq!(d.pow(2), w(3, &[1, 2, 1, 1, 2, 1]));
        assert_eq!(d.pow(-1), w(3, &[-1, -2, -1]));
        assert!(s.concat(&d).is_err());
        let t = tau(1, 2, 3).unwrap().concat(&tau(2, 1, 3).unwrap()).unwrap();
        assert!(t.free_reduce().is_empty());
    }

    #[test]
    fn exponent_sums_and_components() {
        assert_eq!(delta_power(3, 2).exponent_sum(), 3 * 10);
        assert_eq!(BraidWord::identity(3).exponent_sum(), 0);
        assert_eq!(BraidWord::identity(3).closure_components(), 3);
        assert_eq!(w(3, &[1, 2]).closure_components(), 1);
        assert_eq!(delta_big(3, 3).unwrap().closure_components(), 2);
    }

    #[test]
    fn families() {
        let p = FamilyParams::new(1, 2, vec![0]).unwrap();
        let b = family_b(&p).unwrap();
        let expected = w(5, &[-3, 2]).concat(&delta_power(1, 2)).unwrap();
        assert_eq!(b, expected);
        let p2 = FamilyParams::new(2, 3, vec![0, 0]).unwrap();
        assert_eq!(family_b(&p2).unwrap().free_reduce(), delta_power(2, 3).free_reduce());
        let p3 = FamilyParams::new(3, 3, vec![2, 0, 1]).unwrap();
        assert_eq!(family_b(&p3).unwrap().exponent_sum(), -3 + 3 * 21);
        assert_eq!(family_c(&p3).unwrap().exponent_sum(), -3 + 3 * 21);
        assert!(family_c(&FamilyParams::new(1, 1, vec![1]).unwrap()).is_err());
        assert!(FamilyParams::new(2, 1, vec![1]).is_err());
    }

    #[test]
    fn text_round_trip() {
        let b = w(4, &[1, -3, 2]);
        assert_eq!(b.to_text(), "1,-3,2");
        assert_eq!(BraidWord::parse(4, "1, -3 2").unwrap(), b);
        assert_eq!("4:1,-3,2".parse::<BraidWord>().unwrap(), b);
        assert!(BraidWord::parse(3, "3").is_err());
    }
}
