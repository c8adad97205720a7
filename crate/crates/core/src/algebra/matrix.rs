use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};


use crate::error::{Error, Result};

/// Fraction-free Gaussian elimination. The determinant of the 0x0 matrix is 1.
///
/// Every intermediate entry is a minor of the input, so each division is exact.
pub fn bareiss_det<R: super::ExactRing>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    assert!(a.iter().all(|r| r.len() == n), "bareiss_det: matrix is not square");
    let mut sign_flip = false;
    let mut prev = R::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return R::zero(),
            }
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            let aik = a[i][k].clone();
            for j in k + 1..n {
                let v = pivot.mul(&a[i][j]).sub(&aik.mul(&a[k][j]));
                a[i][j] = v.div_exact(&prev).expect("bareiss_det: inexact division");
            }
        }
        prev = pivot;
    }
    let d = if n == 0 { R::one() } else { a[n - 1][n - 1].clone() };
    if sign_flip {
        d.neg()
    } else {
        d
    }
}

/// Determinant of a square integer matrix.
pub fn det_int(a: &[Vec<BigInt>]) -> BigInt {
    bareiss_det(a.to_vec())
}

/// A symmetric square matrix of arbitrary-precision integers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetricIntMatrix {
    entries: Vec<Vec<BigInt>>,
}

impl SymmetricIntMatrix {
    pub fn new(entries: Vec<Vec<BigInt>>) -> Result<Self> {
        let n = entries.len();
        if entries.iter().any(|r| r.len() != n) {
            return Err(Error::Shape("not square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if entries[i][j] != entries[j][i] {
                    return Err(Error::Shape(format!("not symmetric at ({i},{j})")));
                }
            }
        }
        Ok(Self { entries })
    }

    pub fn from_i64(rows: &[Vec<i64>]) -> Result<Self> {
        Self::new(rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect())
    }

    /// `V + V^T` of a square matrix.
    pub fn symmetrize(v: &[Vec<BigInt>]) -> Self {
        let n = v.len();
        let entries = (0..n).map(|i| (0..n).map(|j| &v[i][j] + &v[j][i]).collect()).collect();
        Self { entries }
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn det(&self) -> BigInt {
        det_int(&self.entries)
    }
}

/// Signature and nullity of a real symmetric form by congruence elimination.
///
/// Pivots: the first nonzero diagonal entry of the remaining block, in index order.
/// If the diagonal of the remaining block vanishes, the first nonzero row `r` and
/// its first off-diagonal nonzero column `c` form a hyperbolic plane, counted as
/// one positive and one negative square. All-zero rows count toward the nullity.
/// Each step replaces the remaining block by a positive multiple of its Schur
/// complement and divides out the content, so everything stays in Z.
pub fn signature_nullity_of_symmetric(m: &SymmetricIntMatrix) -> (i64, usize) {
    let mut a: Vec<Vec<BigInt>> = m.entries.clone();
    let mut live: Vec<usize> = (0..a.len()).collect();
    let mut sig: i64 = 0;
    let mut null: usize = 0;

    loop {
        let zero_rows: Vec<usize> = live.iter().copied().filter(|&i| live.iter().all(|&j| a[i][j].is_zero())).collect();
        null += zero_rows.len();
        live.retain(|i| !zero_rows.contains(i));
        if live.is_empty() {
            break;
        }

        if let Some(&p) = live.iter().find(|&&i| !a[i][i].is_zero()) {
            let piv = a[p][p].clone();
            sig += if piv.is_positive() { 1 } else { -1 };
            let rest: Vec<usize> = live.iter().copied().filter(|&i| i != p).collect();
            let s = if piv.is_positive() { BigInt::one() } else { -BigInt::one() };
            let apiv = piv.abs();
            let col: Vec<BigInt> = rest.iter().map(|&i| a[i][p].clone()).collect();
            for (x, &i) in rest.iter().enumerate() {
                for (y, &j) in rest.iter().enumerate().skip(x) {
                    let v = &apiv * &a[i][j] - &s * &col[x] * &col[y];
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
            live = rest;
        } else {
            let r = live[0];
            let c = *live.iter().find(|&&j| j != r && !a[r][j].is_zero()).expect("nonzero row");
            let h = a[r][c].clone();
            let rest: Vec<usize> = live.iter().copied().filter(|&i| i != r && i != c).collect();
            // S = C - (b_r b_c^T + b_c b_r^T)/h, scaled by h^2 > 0
            let br: Vec<BigInt> = rest.iter().map(|&i| a[i][r].clone()).collect();
            let bc: Vec<BigInt> = rest.iter().map(|&i| a[i][c].clone()).collect();
            let h2 = &h * &h;
            for x in 0..rest.len() {
                for y in x..rest.len() {
                    let (i, j) = (rest[x], rest[y]);
                    let v = &h2 * &a[i][j] - &h * (&br[x] * &bc[y] + &bc[x] * &br[y]);
                    a[i][j] = v.clone();
                    a[j][i] = v;
                }
            }
            live = rest;
        }
        reduce_content(&mut a, &live);
    }
    (sig, null)
}

fn reduce_content(a: &mut [Vec<BigInt>], live: &[usize]) {
    let mut g = BigInt::zero();
    for &i in live {
        for &j in live {
            if !a[i][j].is_zero() {
                g = g.gcd(&a[i][j]);
                if g.is_one() {
                    return;
                }
            }
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for &i in live {
        for &j in live {
            a[i][j] = &a[i][j] / &g;
        }
    }
}

/// Recovers the integer coefficients `c_0..c_d` of a polynomial of degree at most `d`
/// from its values at `0, 1, ..., d` (Newton forward differences).
pub fn interpolate_from_values(values: &[BigInt]) -> Vec<BigInt> {
    let d = values.len();
    if d == 0 {
        return Vec::new();
    }
    // forward differences at 0
    let mut diffs = values.to_vec();
    let mut lead = Vec::with_capacity(d);
    for k in 0..d {
        lead.push(diffs[0].clone());
        for i in 0..d - k - 1 {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // P(s) = sum lead[j] * C(s, j) = sum (lead[j]/j!) * s(s-1)...(s-j+1)
    let mut coeffs = vec![BigInt::zero(); d];
    let mut falling = vec![BigInt::one()]; // s(s-1)...(s-j+1), low-to-high coefficients
    let mut fact = BigInt::one();
    for (j, l) in lead.iter().enumerate() {
        if j > 0 {
            fact *= BigInt::from(j);
            let shift = BigInt::from(j - 1);
            let mut next = vec![BigInt::zero(); falling.len() + 1];
            for (e, c) in falling.iter().enumerate() {
                next[e + 1] += c;
                next[e] -= c * &shift;
            }
            falling = next;
        }
        let (e_j, r) = l.div_rem(&fact);
        assert!(r.is_zero(), "interpolate_from_values: values are not from an integer polynomial");
        for (e, c) in falling.iter().enumerate() {
            coeffs[e] += &e_j * c;
        }
    }
    coeffs
}
