use braidlink::braid::FamilyKind;
use braidlink::closedforms::*;

fn alphas(j: usize, max: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..j {
        out = out.into_iter().flat_map(|v| (1..=max).map(move |a| { let mut w = v.clone(); w.push(a); w })).collect();
    }
    out
}

#[test]
fn grid_matches_seifert() {
    let mut checked = 0;
    for kind in [FamilyKind::B, FamilyKind::C] {
        for n in 1..=4u32 {
            for k in 1..=3u32 {
                for j in 1..=4usize {
                    if (n as usize + j) % 2 != 0 || (kind == FamilyKind::C && k < 2) {
                        continue;
                    }
                    for a in alphas(j, 3) {
                        let v = verify(kind, n, k, &a).unwrap();
                        assert!(v.agree, "{kind:?} n={n} k={k} a={a:?}: {v:?}");
                        if v.closed_form.sign_null().is_some() {
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 500, "{checked}");
}
