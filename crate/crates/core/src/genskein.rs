//! Linear relations among Conway potentials of braids differing by a fixed power of a
//! short braid, and the block-determinant identity behind them.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::algebra::{bareiss_det, GaussianInteger, LaurentPolynomial};
use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::seifert::conway_potential;

type Lp = LaurentPolynomial;

fn lp(terms: &[(i64, i64)]) -> Lp {
    Lp::from_terms(terms.iter().copied())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RelationKind {
    /// Five consecutive powers of `delta_3 = sigma_1 sigma_2`.
    Delta3Order4,
    /// Five consecutive powers of `Delta_3^2`.
    Delta3SqOrder4,
}

/// A five-term relation `sum_j c_j Omega(b s^j) = 0` for a step braid `s`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationSpec {
    pub kind: RelationKind,
    pub coefficients: Vec<Lp>,
}

impl RelationSpec {
    pub fn new(kind: RelationKind) -> Self {
        let coefficients = match kind {
            RelationKind::Delta3Order4 => {
                let c1 = lp(&[(2, -1), (0, 1), (-2, -1)]);
                let c2 = lp(&[(2, -1), (0, 2), (-2, -1)]);
                vec![Lp::one(), c1.clone(), c2, c1, Lp::one()]
            }
            RelationKind::Delta3SqOrder4 => {
                let c1 = lp(&[(6, -1), (0, -2), (-6, -1)]);
                let c2 = lp(&[(6, 2), (0, 2), (-6, 2)]);
                vec![Lp::one(), c1.clone(), c2, c1, Lp::one()]
            }
        };
        Self { kind, coefficients }
    }

    /// The braid multiplied in at each step, inside `B_m`.
    pub fn step(&self, strands: usize) -> Result<BraidWord> {
        let letters = match self.kind {
            RelationKind::Delta3Order4 => vec![1, 2],
            RelationKind::Delta3SqOrder4 => vec![1, 2, 1, 1, 2, 1],
        };
        BraidWord::new(strands, letters)
    }

    /// The coefficients at `t = i`, all real integers.
    pub fn det_coefficients(&self) -> Vec<GaussianInteger> {
        self.coefficients.iter().map(Lp::eval_at_i).collect()
    }
}

fn check_strands(b: &BraidWord) -> Result<()> {
    if b.strands() < 3 {
        return Err(Error::InvalidParams(format!("relation needs at least 3 strands, got {}", b.strands())));
    }
    Ok(())
}

fn stepped(b: &BraidWord, step: &BraidWord, count: usize) -> Result<Vec<BraidWord>> {
    let mut out = vec![b.clone()];
    for _ in 1..count {
        let next = out.last().expect("nonempty").concat(step)?;
        out.push(next);
    }
    Ok(out)
}

/// `sum_j c_j Omega(b s^j)`; identically zero when the relation holds.
pub fn relation_residual(b: &BraidWord, spec: &RelationSpec) -> Result<Lp> {
    check_strands(b)?;
    let words = stepped(b, &spec.step(b.strands())?, spec.coefficients.len())?;
    let omegas: Vec<Lp> = words.par_iter().map(conway_potential).collect();
    Ok(spec.coefficients.iter().zip(&omegas).fold(Lp::zero(), |acc, (c, o)| &acc + &(c * o)))
}

/// The same relation at `t = i`, on link determinants.
pub fn det_relation_check(b: &BraidWord, kind: RelationKind) -> Result<GaussianInteger> {
    check_strands(b)?;
    let spec = RelationSpec::new(kind);
    let words = stepped(b, &spec.step(b.strands())?, spec.coefficients.len())?;
    let dets: Vec<GaussianInteger> = words.par_iter().map(crate::seifert::link_det).collect();
    Ok(spec.det_coefficients().iter().zip(&dets).fold(GaussianInteger::zero(), |acc, (c, d)| &acc + &(c * d)))
}

/// `Omega(L+) - Omega(L-) - (t - t^-1) Omega(L0)` at one letter of `b`.
pub fn conway_skein_residual(b: &BraidWord, pos: usize) -> Result<Lp> {
    let letter = *b.letters().get(pos).ok_or(Error::IndexOutOfRange { index: pos as i64, strands: b.len() })?;
    let g = letter.abs();
    let plus = b.with_letter(pos, Some(g))?;
    let minus = b.with_letter(pos, Some(-g))?;
    let zero = b.with_letter(pos, None)?;
    let o = [plus, minus, zero].par_iter().map(conway_potential).collect::<Vec<_>>();
    Ok(&(&o[0] - &o[1]) - &(&Lp::sym_binomial(1) * &o[2]))
}

/// `det L+ - det L- - 2i det L0` at one letter of `b`.
pub fn det_skein_residual(b: &BraidWord, pos: usize) -> Result<GaussianInteger> {
    let letter = *b.letters().get(pos).ok_or(Error::IndexOutOfRange { index: pos as i64, strands: b.len() })?;
    let g = letter.abs();
    let d = |w: BraidWord| crate::seifert::link_det(&w);
    let plus = d(b.with_letter(pos, Some(g))?);
    let minus = d(b.with_letter(pos, Some(-g))?);
    let zero = d(b.with_letter(pos, None)?);
    Ok(&(&plus - &minus) - &(&GaussianInteger::new(0, 2) * &zero))
}

/// Deterministic generator used by randomized checks.
pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random word in `B_m` of length `1..=max_len`.
pub fn random_braid<R: Rng + ?Sized>(rng: &mut R, strands: usize, max_len: usize) -> Result<BraidWord> {
    if strands < 2 || max_len == 0 {
        return Err(Error::InvalidParams("need at least 2 strands and a positive length".into()));
    }
    let len = rng.gen_range(1..=max_len);
    let letters = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    BraidWord::new(strands, letters)
}

/// Square matrix over Laurent polynomials.
pub type LaurentMatrix = Vec<Vec<Lp>>;

/// The fixed part of the block layout: `V0` (s x s), `U` (s x 2), `U*` (2 x s), `W` (2 x 2).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockInput {
    pub v0: LaurentMatrix,
    pub u: LaurentMatrix,
    pub u_star: LaurentMatrix,
    pub w: LaurentMatrix,
}

fn block_a() -> [[Lp; 2]; 2] {
    [[Lp::sym_binomial(1), Lp::monomial(-1, -1)], [Lp::t(), Lp::sym_binomial(1)]]
}

fn block_b() -> [[Lp; 2]; 2] {
    [[Lp::monomial(1, -1), Lp::zero()], [Lp::monomial(-1, 1), Lp::monomial(1, -1)]]
}

fn block_b_star() -> [[Lp; 2]; 2] {
    [[Lp::monomial(-1, 1), Lp::monomial(1, -1)], [Lp::zero(), Lp::monomial(-1, 1)]]
}

impl BlockInput {
    pub fn new(v0: LaurentMatrix, u: LaurentMatrix, u_star: LaurentMatrix, w: LaurentMatrix) -> Result<Self> {
        let s = v0.len();
        let shape = |m: &LaurentMatrix, r: usize, c: usize| m.len() == r && m.iter().all(|row| row.len() == c);
        if !shape(&v0, s, s) || !shape(&u, s, 2) || !shape(&u_star, 2, s) || !shape(&w, 2, 2) {
            return Err(Error::Shape("blocks must be s x s, s x 2, 2 x s and 2 x 2".into()));
        }
        Ok(Self { v0, u, u_star, w })
    }

    /// The `(s + 2j)`-square matrix with `j` diagonal 2 x 2 blocks `W, A, ..., A`.
    pub fn assemble(&self, j: usize) -> LaurentMatrix {
        let s = self.v0.len();
        let n = s + 2 * j;
        let mut m = vec![vec![Lp::zero(); n]; n];
        for r in 0..s {
            m[r][..s].clone_from_slice(&self.v0[r]);
        }
        if j == 0 {
            return m;
        }
        for r in 0..s {
            for c in 0..2 {
                m[r][s + c] = self.u[r][c].clone();
                m[s + c][r] = self.u_star[c][r].clone();
            }
        }
        let (a, b, bs) = (block_a(), block_b(), block_b_star());
        for blk in 0..j {
            let o = s + 2 * blk;
            for r in 0..2 {
                for c in 0..2 {
                    m[o + r][o + c] = if blk == 0 { self.w[r][c].clone() } else { a[r][c].clone() };
                    if blk + 1 < j {
                        m[o + r][o + 2 + c] = b[r][c].clone();
                        m[o + 2 + r][o + c] = bs[r][c].clone();
                    }
                }
            }
        }
        m
    }
}

/// `det V_0 + c_1 det V_1 + c_2 det V_2 + c_3 det V_3 + det V_4`.
pub fn block_identity_check(input: &BlockInput) -> Lp {
    let coeffs = RelationSpec::new(RelationKind::Delta3Order4).coefficients;
    let dets: Vec<Lp> = (0..5).into_par_iter().map(|j| bareiss_det(input.assemble(j))).collect();
    coeffs.iter().zip(&dets).fold(Lp::zero(), |acc, (c, d)| &acc + &(c * d))
}

/// Coefficients of `det` of the trailing `2j x 2j` part as a function of a free 2 x 2 block:
/// `a0 + a1 det W + a11 w11 + a12 w12 + a21 w21 + a22 w22`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCoefficients {
    pub j: usize,
    pub a0: Lp,
    pub a1: Lp,
    pub a11: Lp,
    pub a12: Lp,
    pub a21: Lp,
    pub a22: Lp,
}

fn trailing_det(j: usize, w: [[Lp; 2]; 2]) -> Lp {
    let input = BlockInput {
        v0: vec![],
        u: vec![],
        u_star: vec![vec![]; 2],
        w: w.iter().map(|r| r.to_vec()).collect(),
    };
    bareiss_det(input.assemble(j))
}

pub fn block_coefficients(j: usize) -> Result<BlockCoefficients> {
    if j == 0 {
        return Err(Error::InvalidParams("j must be positive".into()));
    }
    let z = Lp::zero;
    let o = Lp::one;
    let a0 = trailing_det(j, [[z(), z()], [z(), z()]]);
    let unit = |r: usize, c: usize| {
        let mut w = [[z(), z()], [z(), z()]];
        w[r][c] = o();
        &trailing_det(j, w) - &a0
    };
    let (a11, a12, a21, a22) = (unit(0, 0), unit(0, 1), unit(1, 0), unit(1, 1));
    let ident = trailing_det(j, [[o(), z()], [z(), o()]]);
    let a1 = &(&(&ident - &a0) - &a11) - &a22;
    Ok(BlockCoefficients { j, a0, a1, a11, a12, a21, a22 })
}

impl BlockCoefficients {
    /// Evaluates the affine-plus-determinant form at a concrete block.
    pub fn evaluate(&self, w: &[[Lp; 2]; 2]) -> Lp {
        let det_w = &(&w[0][0] * &w[1][1]) - &(&w[0][1] * &w[1][0]);
        let mut acc = &self.a0 + &(&self.a1 * &det_w);
        for (c, x) in [(&self.a11, &w[0][0]), (&self.a12, &w[0][1]), (&self.a21, &w[1][0]), (&self.a22, &w[1][1])] {
            acc = &acc + &(c * x);
        }
        acc
    }

    /// Direct determinant of the trailing part at a concrete block.
    pub fn direct(&self, w: &[[Lp; 2]; 2]) -> Lp {
        trailing_det(self.j, w.clone())
    }
}

/// A random Laurent polynomial from `{0, ±1, ±t, ±t^-1}`.
pub fn random_small_laurent<R: Rng + ?Sized>(rng: &mut R) -> Lp {
    let e = rng.gen_range(-1..=1);
    match rng.gen_range(0..3) {
        0 => Lp::zero(),
        1 => Lp::monomial(1, e),
        _ => Lp::monomial(-1, e),
    }
}

pub fn random_block_input<R: Rng + ?Sized>(rng: &mut R, s: usize) -> BlockInput {
    let mut mat = |r: usize, c: usize| -> LaurentMatrix {
        (0..r).map(|_| (0..c).map(|_| random_small_laurent(rng)).collect()).collect()
    };
    let v0 = mat(s, s);
    let u = mat(s, 2);
    let u_star = mat(2, s);
    let w = mat(2, 2);
    BlockInput { v0, u, u_star, w }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_at_i() {
        let c = RelationSpec::new(RelationKind::Delta3Order4).det_coefficients();
        let want: Vec<GaussianInteger> = [1, 3, 4, 3, 1].iter().map(|&v| GaussianInteger::real(v)).collect();
        assert_eq!(c, want);
        let c = RelationSpec::new(RelationKind::Delta3SqOrder4).det_coefficients();
        let want: Vec<GaussianInteger> = [1, 0, -2, 0, 1].iter().map(|&v| GaussianInteger::real(v)).collect();
        assert_eq!(c, want);
    }

    #[test]
    fn empty_word_relations() {
        let b = BraidWord::identity(3);
        for kind in [RelationKind::Delta3Order4, RelationKind::Delta3SqOrder4] {
            assert!(relation_residual(&b, &RelationSpec::new(kind)).unwrap().is_zero());
            assert!(det_relation_check(&b, kind).unwrap().is_zero());
        }
        let b = BraidWord::new(3, vec![-1]).unwrap();
        assert!(det_relation_check(&b, RelationKind::Delta3SqOrder4).unwrap().is_zero());
        assert!(relation_residual(&BraidWord::identity(2), &RelationSpec::new(RelationKind::Delta3Order4)).is_err());
    }

    #[test]
    fn coefficient_table() {
        let c2 = block_coefficients(2).unwrap();
        assert_eq!(c2.a0, Lp::one());
        assert_eq!(c2.a1, lp(&[(2, 1), (0, -1), (-2, 1)]));
        assert_eq!(c2.a12, lp(&[(3, 1)]));
        assert_eq!(c2.a21, lp(&[(-3, -1)]));
        let c3 = block_coefficients(3).unwrap();
        assert_eq!(c3.a12, lp(&[(5, 1), (3, -1)]));
        let c4 = block_coefficients(4).unwrap();
        assert_eq!(c4.a1, lp(&[(6, 1), (4, -1), (0, 1), (-4, -1), (-6, 1)]));
        for c in [&c2, &c3, &c4] {
            let mixed = &c.a12.shift(-2) + &c.a21.shift(2);
            assert_eq!(c.a11, mixed);
            assert_eq!(c.a22, mixed);
        }
    }

    #[test]
    fn block_identity_on_random_input() {
        let mut rng = seeded_rng(7);
        for s in 0..=3 {
            let input = random_block_input(&mut rng, s);
            assert!(block_identity_check(&input).is_zero(), "s = {s}");
            let c = block_coefficients(3).unwrap();
            let w = [[input.w[0][0].clone(), input.w[0][1].clone()], [input.w[1][0].clone(), input.w[1][1].clone()]];
            assert_eq!(c.evaluate(&w), c.direct(&w));
        }
    }
}
