use braidlink::braid::{family, FamilyKind, FamilyParams};
use braidlink::seifert::link_det;
use braidlink::skeinpoly::*;
use braidlink::GaussianInteger;

fn merge_reduction_holds(j: usize, sign: PmSign) -> bool {
    let lhs = a_matrix_det_symbolic(j, sign).unwrap().set_zero(1);
    let inner = a_matrix_det_symbolic(j - 2, sign.flip()).unwrap();
    let rhs = MultilinearPoly::lift_merged(&inner, j).scale(&GaussianInteger::real(-1));
    lhs == rhs
}

#[test]
fn determinant_identities_hold_symbolically() {
    for j in 1..=9 {
        let plus = a_matrix_det_symbolic(j, PmSign::Plus).unwrap();
        let minus = a_matrix_det_symbolic(j, PmSign::Minus).unwrap();
        let four = if j % 2 == 0 { 4 } else { -4 };
        assert_eq!(minus.sub(&plus), MultilinearPoly::constant(j, GaussianInteger::real(four)), "J={j}");
        if j >= 3 {
            assert!(merge_reduction_holds(j, PmSign::Plus), "J={j}");
            assert!(merge_reduction_holds(j, PmSign::Minus), "J={j}");
        }
    }
}

#[test]
fn a_systems_are_skein_systems() {
    for sign in [PmSign::Plus, PmSign::Minus] {
        for parity in [1usize, 2] {
            let seq: Vec<MultilinearPoly> =
                (parity..=9).step_by(2).map(|j| a_pm_symbolic(j, sign).unwrap().into_poly()).collect();
            assert!(check_skein_axioms(&seq));
            let data = a_system_spec(sign, parity as u8, 9).unwrap();
            let rebuilt = reconstruct_all(&data, if parity == 1 { 9 } else { 8 }).unwrap();
            assert_eq!(rebuilt, seq[..rebuilt.len()].to_vec(), "{sign:?} parity {parity}");
        }
    }
    let broken = MultilinearPoly::variable(3, 0);
    assert!(!check_skein_axioms(&[a_pm_symbolic(1, PmSign::Plus).unwrap().into_poly(), broken]));
}

#[test]
fn homogeneous_expansion_matches() {
    for j in 1..=8 {
        for sign in [PmSign::Plus, PmSign::Minus] {
            assert_eq!(a_pm_homogeneous(j, sign).unwrap(), a_pm_symbolic(j, sign).unwrap(), "J={j}");
        }
        for k in (1..=j).filter(|k| (j - k) % 2 == 0) {
            let f = f_jk(j, k).unwrap();
            assert!(f.poly().is_homogeneous(k as u32));
            let count = f.eval_int(&vec![1; j]).unwrap();
            let formula = matching_count_formula(j, k).unwrap();
            assert!(formula.is_integer());
            assert_eq!(count, GaussianInteger::from(formula.to_integer()), "J={j} k={k}");
        }
    }
}

#[test]
fn closed_forms_match_seifert_small() {
    for (kind, n, k) in [(FamilyKind::B, 1u32, 1u32), (FamilyKind::B, 2, 2), (FamilyKind::C, 3, 2), (FamilyKind::B, 4, 1)] {
        for j in 1..=3usize {
            if (n as usize + j) % 2 != 0 {
                continue;
            }
            let mut alpha = vec![0u32; j];
            loop {
                let p = FamilyParams::new(n, k, alpha.clone()).unwrap();
                let det = link_det(&family(kind, &p).unwrap());
                assert_eq!(det, det_closed_form(kind, n, k, &alpha).unwrap(), "{kind:?} n={n} k={k} a={alpha:?}");
                let mut i = 0;
                while i < j && alpha[i] == 2 {
                    alpha[i] = 0;
                    i += 1;
                }
                if i == j {
                    break;
                }
                alpha[i] += 1;
            }
        }
    }
}
