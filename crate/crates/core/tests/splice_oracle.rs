use braidlink::braid::{delta_power, family_b, family_c, FamilyParams};
use braidlink::seifert::conway_potential;
use braidlink::splice::{build_named, NamedDiagram};

#[test]
fn delta_powers_agree_with_seifert() {
    for k in 1..=3u32 {
        for n in 1..=4u32 {
            let en = build_named(&NamedDiagram::TorusDelta { n, k }).unwrap().omega_en().unwrap();
            assert_eq!(en, conway_potential(&delta_power(n as i64, k)), "n={n} k={k}");
        }
    }
}

#[test]
fn b_family_agrees_with_seifert() {
    for k in 1..=2u32 {
        for n in 1..=4u32 {
            for j in 1..=4u32 {
                if (n + j) % 2 != 0 {
                    continue;
                }
                let d = build_named(&NamedDiagram::BFamily { n, k, j }).unwrap();
                let braid = family_b(&FamilyParams::ones(n, k, j as usize).unwrap()).unwrap();
                let direct = conway_potential(&braid);
                match d.omega_en() {
                    Ok(en) => assert_eq!(en, direct, "n={n} k={k} J={j}"),
                    Err(_) => {
                        let nab = d.nabla_multivariable().unwrap().omega().unwrap();
                        assert_eq!(nab, direct, "nabla n={n} k={k} J={j}");
                    }
                }
            }
        }
    }
}

#[test]
fn c_family_agrees_with_seifert() {
    for k in 2..=3u32 {
        for n in 1..=3u32 {
            for j in 1..=4u32 {
                if (n + j) % 2 != 0 {
                    continue;
                }
                let d = build_named(&NamedDiagram::CFamily { n, k, j }).unwrap();
                let braid = family_c(&FamilyParams::ones(n, k, j as usize).unwrap()).unwrap();
                let direct = conway_potential(&braid);
                let en = d.omega_en().or_else(|_| d.nabla_multivariable().unwrap().omega()).unwrap();
                assert_eq!(en, direct, "n={n} k={k} J={j}");
            }
        }
    }
}

#[test]
fn b_family_10_agrees_with_seifert() {
    for k in 1..=3u32 {
        for n in [2u32, 4] {
            let d = build_named(&NamedDiagram::BFamily10 { n, k }).unwrap();
            let braid = family_b(&FamilyParams::new(n, k, vec![1, 0]).unwrap()).unwrap();
            let direct = conway_potential(&braid);
            let en = d.omega_en().or_else(|_| d.nabla_multivariable().unwrap().omega()).unwrap();
            assert_eq!(en, direct, "n={n} k={k}");
        }
    }
}

#[test]
fn two_strand_cables_match_sigma_powers() {
    use braidlink::BraidWord;
    for q in -7i64..=7 {
        if q == 0 {
            continue;
        }
        let named = if q % 2 != 0 {
            NamedDiagram::Torus { d: 1, p: 2, q }
        } else {
            NamedDiagram::Torus { d: 2, p: 1, q: q / 2 }
        };
        let d = build_named(&named).unwrap();
        let letter = if q > 0 { 1 } else { -1 };
        let braid = BraidWord::new(2, vec![letter; q.unsigned_abs() as usize]).unwrap();
        assert_eq!(d.omega_en().unwrap(), conway_potential(&braid), "q={q}");
    }
}

#[test]
fn nabla_specializes_to_en() {
    let mut cases = vec![];
    for k in 1..=3u32 {
        for n in 1..=4u32 {
            cases.push(NamedDiagram::TorusDelta { n, k });
            for j in 1..=4u32 {
                if (n + j) % 2 == 0 {
                    cases.push(NamedDiagram::BFamily { n, k, j });
                    if k >= 2 {
                        cases.push(NamedDiagram::CFamily { n, k, j });
                    }
                }
            }
        }
    }
    cases.push(NamedDiagram::AxisCable { q: 3, p: vec![1, 2, 4] });
    cases.push(NamedDiagram::AxisCable { q: 4, p: vec![-1] });
    for c in cases {
        let d = build_named(&c).unwrap();
        if let Ok(en) = d.omega_en() {
            assert_eq!(d.nabla_multivariable().unwrap().omega().unwrap(), en, "{c:?}");
        }
    }
}
