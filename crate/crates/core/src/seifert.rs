//! Seifert matrices of braid closures and the invariants read off from them.
//!
//! The surface is built from m stacked disks joined by one half-twisted band per
//! letter. A basis of its first homology is given by the loops running through two
//! consecutive bands of the same generator.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{
    bareiss_det, interpolate_from_values, signature_nullity_of_symmetric, GaussianInteger, LaurentPolynomial,
    SymmetricIntMatrix,
};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// A basis loop: generator index and the two word positions bounding it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Cycle {
    pub generator: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeifertData {
    pub matrix: Vec<Vec<BigInt>>,
    pub cycles: Vec<Cycle>,
    /// The word the surface was built from (after stabilization).
    pub word: BraidWord,
}

impl SeifertData {
    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn symmetrized(&self) -> SymmetricIntMatrix {
        SymmetricIntMatrix::symmetrize(&self.matrix)
    }
}

/// Appends `sigma_j sigma_j^-1` for every generator index that does not occur,
/// so that the disk-and-band surface is connected.
pub fn stabilize(b: &BraidWord) -> BraidWord {
    let m = b.strands();
    let mut present = vec![false; m];
    for &l in b.letters() {
        present[l.unsigned_abs() as usize] = true;
    }
    let mut letters = b.letters().to_vec();
    for j in 1..m {
        if !present[j] {
            letters.push(j as i32);
            letters.push(-(j as i32));
        }
    }
    BraidWord::new(m, letters).expect("stabilized word stays in range")
}

pub fn seifert_matrix(b: &BraidWord) -> SeifertData {
    let word = stabilize(b);
    let x = word.letters();
    let mut cycles = Vec::new();
    for (a, &la) in x.iter().enumerate() {
        let g = la.unsigned_abs() as usize;
        if let Some(off) = x[a + 1..].iter().position(|&l| l.unsigned_abs() as usize == g) {
            cycles.push(Cycle { generator: g, a, b: a + 1 + off });
        }
    }
    let d = cycles.len();
    let sgn = |p: usize| -> i64 { x[p].signum() as i64 };
    let mut v = vec![vec![0i64; d]; d];
    for i in 0..d {
        let ci = cycles[i];
        v[i][i] = -(sgn(ci.a) + sgn(ci.b)) / 2;
        for j in i + 1..d {
            let cj = cycles[j];
            if ci.b == cj.a {
                // consecutive loops of one generator share the band at ci.b
                if sgn(ci.b) > 0 {
                    v[i][j] = 1;
                } else {
                    v[j][i] = -1;
                }
            } else if ci.a < cj.a && cj.a < ci.b && ci.b < cj.b {
                if ci.generator == cj.generator + 1 {
                    v[j][i] = -1;
                } else if cj.generator == ci.generator + 1 {
                    v[i][j] = 1;
                }
            }
        }
    }
    let matrix = v.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
    SeifertData { matrix, cycles, word }
}

/// `(Sign, Null)` of `V + V^T`.
pub fn signature_nullity(b: &BraidWord) -> (i64, usize) {
    signature_nullity_of_symmetric(&seifert_matrix(b).symmetrized())
}

/// `det(t^-1 V - t V^T)` for a square integer matrix V.
///
/// Writes the determinant as `t^-d P(t^2)` with `P(s) = det(V - s V^T)` of degree at
/// most d, evaluates P at `s = 0..d` exactly and interpolates.
pub fn conway_from_matrix(v: &[Vec<BigInt>]) -> LaurentPolynomial {
    let d = v.len();
    if d == 0 {
        return LaurentPolynomial::one();
    }
    let values: Vec<BigInt> = (0..=d)
        .into_par_iter()
        .map(|s| {
            let s = BigInt::from(s);
            let m: Vec<Vec<BigInt>> =
                (0..d).map(|i| (0..d).map(|j| &v[i][j] - &s * &v[j][i]).collect()).collect();
            bareiss_det(m)
        })
        .collect();
    let coeffs = interpolate_from_values(&values);
    LaurentPolynomial::from_terms(coeffs.into_iter().enumerate().map(|(j, c)| (2 * j as i64 - d as i64, c)))
}

/// Conway potential `Omega(t) = det(t^-1 V - t V^T)` of the closure.
pub fn conway_potential(b: &BraidWord) -> LaurentPolynomial {
    conway_from_matrix(&seifert_matrix(b).matrix)
}

/// `det L = Omega(i) = (-i)^d det(V + V^T)`.
pub fn link_det(b: &BraidWord) -> GaussianInteger {
    let s = seifert_matrix(b);
    let d = s.dim() as i64;
    GaussianInteger::i_pow(-d).scale(&s.symmetrized().det())
}

/// Every invariant at once, sharing one Seifert matrix.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub components: usize,
    pub exponent_sum: i64,
    pub signature: i64,
    pub nullity: usize,
    pub conway: LaurentPolynomial,
    pub det: GaussianInteger,
}

pub fn invariants(b: &BraidWord) -> Invariants {
    let s = seifert_matrix(b);
    let sym = s.symmetrized();
    let (signature, nullity) = signature_nullity_of_symmetric(&sym);
    Invariants {
        components: b.closure_components(),
        exponent_sum: b.exponent_sum(),
        signature,
        nullity,
        conway: conway_from_matrix(&s.matrix),
        det: GaussianInteger::i_pow(-(s.dim() as i64)).scale(&sym.det()),
    }
}

/// Signature after a band attachment: `Sign L' = Sign L + sign(i det L' / det L)`.
pub fn band_step(sign_l: i64, det_l: &GaussianInteger, det_lp: &GaussianInteger) -> Result<i64> {
    if det_l.is_zero() {
        return Err(Error::ZeroDeterminant);
    }
    // i det L' / det L = i det L' conj(det L) / |det L|^2
    let num = &(&GaussianInteger::i() * det_lp) * &det_l.conj();
    if !num.im.is_zero() {
        return Err(Error::NonRealRatio);
    }
    let step = if num.re.is_positive() {
        1
    } else if num.re.is_negative() {
        -1
    } else {
        0
    };
    Ok(sign_l + step)
}

/// A band attachment moves exactly one of signature and nullity by one.
pub fn band_step_consistent(before: (i64, usize), after: (i64, usize)) -> bool {
    (after.0 - before.0).abs() + (after.1 as i64 - before.1 as i64).abs() == 1
}
