use std::process::ExitCode;
use std::time::Instant;

use rand::Rng;
use rayon::prelude::*;

use braidlink::braid::{delta_power, family, family_b, FamilyKind, FamilyParams};
use braidlink::closedforms::*;
use braidlink::genskein::*;
use braidlink::prohibitor::*;
use braidlink::seifert::{link_det, signature_nullity};
use braidlink::skeinpoly::*;
use braidlink::splice::{build_named, NamedDiagram, SpliceDiagram};
use braidlink::{GaussianInteger as G, LaurentPolynomial as Lp};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(failures: &[String], ok_detail: String) -> Outcome {
    if failures.is_empty() {
        Outcome { pass: true, detail: ok_detail }
    } else {
        let shown: Vec<&str> = failures.iter().take(4).map(String::as_str).collect();
        Outcome { pass: false, detail: format!("{} failure(s): {}", failures.len(), shown.join("; ")) }
    }
}

fn splice_det(d: &SpliceDiagram) -> G {
    match d.omega_en() {
        Ok(o) => o.eval_at_i(),
        Err(_) => d.nabla_multivariable().and_then(|f| f.omega()).expect("multivariable potential").eval_at_i(),
    }
}

fn int_tuple(s: &str) -> Vec<i64> {
    s.split(|c: char| !(c.is_ascii_digit() || c == '-')).filter(|t| !t.is_empty()).map(|t| t.parse().unwrap()).collect()
}

fn delta_table() -> Outcome {
    let mut fails = vec![];
    let mut count = 0;
    for n in 1..=4u32 {
        for k in 1..=3u32 {
            let direct = signature_nullity(&delta_power(n as i64, k));
            let closed = sign_null_delta(n, k).unwrap();
            let null_ok = direct.1 == 0 || direct.1 == 2 * k as usize;
            count += 1;
            if closed != SignNull::from(direct) || !null_ok {
                fails.push(format!("n={n} k={k}: direct {direct:?}, closed {closed:?}"));
            }
        }
    }
    outcome(&fails, format!("{count} cases of Delta^n in B_(2k+1), Sign and Null exact"))
}

const DELTA_LOG: [(u32, &str); 12] = [
    (1, "{1, {1, 0}, -1}"),
    (1, "{2, {6, 0}, 0}"),
    (1, "{3, {11, 0}, -1}"),
    (2, "{1, {4, 0}, 0}"),
    (2, "{2, {12, 0}, 0}"),
    (2, "{3, {24, 0}, 0}"),
    (3, "{1, {7, 0}, 1}"),
    (3, "{2, {18, 0}, 0}"),
    (3, "{3, {37, 0}, 1}"),
    (4, "{1, {8, 2}, 0}"),
    (4, "{2, {24, 4}, 0}"),
    (4, "{3, {48, 6}, 0}"),
];

fn log_fixtures() -> Outcome {
    let mut fails = vec![];
    for (n, row) in DELTA_LOG {
        let v = int_tuple(row);
        let (k, neg_sign, null, excess) = (v[0] as u32, v[1], v[2], v[3]);
        let (sign, nul) = signature_nullity(&delta_power(n as i64, k));
        let kk = k as i64;
        if -sign != neg_sign || nul as i64 != null || neg_sign - n as i64 * kk * (kk + 1) != excess {
            fails.push(format!("n={n} {row}: engine Sign={sign} Null={nul}"));
        }
    }
    outcome(&fails, "12 log rows match with Sign = -(first entry)".into())
}

fn skein_relation() -> Outcome {
    let mut rng = seeded_rng(11);
    let cases: Vec<_> = (0..100)
        .map(|i| {
            let strands = 3 + i % 2;
            let b = random_braid(&mut rng, strands, 12).unwrap();
            let pos = rng.gen_range(0..b.len());
            (b, pos)
        })
        .collect();
    let fails: Vec<String> = cases
        .par_iter()
        .filter_map(|(b, pos)| {
            let r = conway_skein_residual(b, *pos).unwrap();
            let d = det_skein_residual(b, *pos).unwrap();
            (!r.is_zero() || !d.is_zero()).then(|| format!("{} at {pos}", b.to_text()))
        })
        .collect();
    outcome(&fails, "100 seeded braids in B_3/B_4, potential and determinant residuals zero".into())
}

fn zero_exponent_dets() -> Outcome {
    let mut fails = vec![];
    for n in [1u32, 3] {
        for k in 1..=3u32 {
            let want = (&G::i_pow(n as i64).scale(&2.into())).pow(k);
            let seif = link_det(&family_b(&FamilyParams::new(n, k, vec![0]).unwrap()).unwrap());
            let spl = splice_det(&build_named(&NamedDiagram::TorusDelta { n, k }).unwrap());
            if seif != want || spl != want {
                fails.push(format!("b^1({n},{k})(0): seifert {seif}, splice {spl}, want {want}"));
            }
        }
    }
    for n in [2u32, 4] {
        for k in 1..=3u32 {
            let want = (&G::real(2) - &G::i_pow(n as i64).scale(&2.into())).pow(k);
            let seif = link_det(&family_b(&FamilyParams::new(n, k, vec![0, 0]).unwrap()).unwrap());
            let spl = splice_det(&build_named(&NamedDiagram::TorusDelta { n, k }).unwrap());
            let ten = &G::i() * &link_det(&family_b(&FamilyParams::new(n, k, vec![1, 0]).unwrap()).unwrap());
            let ten_spl = &G::i() * &splice_det(&build_named(&NamedDiagram::BFamily10 { n, k }).unwrap());
            if seif != want || spl != want || ten != want || ten_spl != want {
                fails.push(format!("b^2({n},{k})(0,0): seifert {seif}, splice {spl}, i*det(1,0) {ten}/{ten_spl}, want {want}"));
            }
        }
    }
    outcome(&fails, "n odd: (2i^n)^k; n even: (2-2i^n)^k, by Seifert matrices and splice diagrams".into())
}

const C_LOG: [(u32, &str); 3] = [(2, "{0, -8 I, 0, -8 I, 0}"), (3, "{-16, 0, -16, 0, -16}"), (4, "{0, 32 I, 0, 32 I, 0}")];

fn parse_gaussian_row(s: &str) -> Vec<G> {
    s.trim_matches(|c| c == '{' || c == '}')
        .split(',')
        .map(|t| {
            let t = t.trim();
            match t.strip_suffix(" I") {
                Some(im) => G::new(0, im.parse::<i64>().unwrap()),
                None => G::real(t.parse::<i64>().unwrap()),
            }
        })
        .collect()
}

fn det_tables() -> Outcome {
    let mut cases = vec![];
    for n in 1..=6u32 {
        for k in 1..=4u32 {
            for j in (1..=6u32).filter(|j| (n + j) % 2 == 0) {
                cases.push((FamilyKind::B, n, k, j));
                if k >= 2 {
                    cases.push((FamilyKind::C, n, k, j));
                }
            }
        }
    }
    let mut fails: Vec<String> = cases
        .par_iter()
        .filter_map(|&(kind, n, k, j)| {
            let named = match kind {
                FamilyKind::B => NamedDiagram::BFamily { n, k, j },
                FamilyKind::C => NamedDiagram::CFamily { n, k, j },
            };
            let spl = splice_det(&build_named(&named).unwrap());
            let seif = link_det(&family(kind, &FamilyParams::ones(n, k, j as usize).unwrap()).unwrap());
            let table = ones_det_table(kind, n, k, j as usize).unwrap();
            (spl != seif || seif != table).then(|| format!("{kind:?} n={n} k={k} J={j}: splice {spl} seifert {seif} table {table}"))
        })
        .collect();
    for (k, row) in C_LOG {
        for (idx, want) in parse_gaussian_row(row).into_iter().enumerate().take(3) {
            let j = 2 * idx + 1;
            let got = link_det(&family(FamilyKind::C, &FamilyParams::ones(1, k, j).unwrap()).unwrap());
            if got != want {
                fails.push(format!("log c n=1 k={k} J={j}: engine {got}, log {want}"));
            }
        }
    }
    outcome(&fails, format!("{} family cases plus 9 c-family log entries agree three ways", cases.len()))
}

fn alpha_grid(j: usize, lo: u32, hi: u32) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for _ in 0..j {
        out = out
            .into_iter()
            .flat_map(|v| {
                (lo..=hi).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
    }
    out
}

fn family_cases(kmax: u32, jmax: usize, lo: u32, hi: u32) -> Vec<(FamilyKind, u32, u32, Vec<u32>)> {
    let mut cases = vec![];
    for kind in [FamilyKind::B, FamilyKind::C] {
        for n in 1..=4u32 {
            for k in 1..=kmax {
                if kind == FamilyKind::C && k < 2 {
                    continue;
                }
                for j in (1..=jmax).filter(|j| (n as usize + j) % 2 == 0) {
                    for a in alpha_grid(j, lo, hi) {
                        cases.push((kind, n, k, a));
                    }
                }
            }
        }
    }
    cases
}

fn twisted_closed_forms() -> Outcome {
    let cases = family_cases(3, 4, 0, 2);
    let rows: Vec<(bool, bool, String)> = cases
        .par_iter()
        .map(|(kind, n, k, a)| {
            let direct = tilde_direct(*kind, *n, *k, a).unwrap();
            let printed = tilde_closed_form(*kind, *n, *k, a).unwrap();
            let reconciled = tilde_reconciled(*kind, *n, *k, a).unwrap();
            (printed == direct, reconciled == direct, format!("{kind:?} n={n} k={k} a={a:?}: det-twist {direct}, closed form {printed}"))
        })
        .collect();
    let fails: Vec<String> = rows.iter().filter(|r| !r.0).map(|r| r.2.clone()).collect();
    let reconciled_ok = rows.iter().all(|r| r.1);
    let mut o = outcome(&fails, format!("{} rows over the five parity cases", rows.len()));
    if !o.pass {
        o.detail = format!(
            "{} of {} rows; all mismatches are c-family rows with n odd and k odd, off by sign; the sign-reconciled form matches {} rows",
            o.detail,
            rows.len(),
            if reconciled_ok { "all" } else { "NOT all" }
        );
    }
    o
}

fn sign_null_grid() -> Outcome {
    let cases = family_cases(3, 4, 0, 3);
    let results: Vec<(bool, bool, String)> = cases
        .par_iter()
        .map(|(kind, n, k, a)| {
            let v = verify(*kind, *n, *k, a).unwrap();
            let checked = v.closed_form.sign_null().is_some() || matches!(v.closed_form, ClosedForm::NullOnly { .. });
            let sn_ok = match &v.closed_form {
                ClosedForm::Established(s) => *s == v.direct,
                ClosedForm::NullOnly { null } => *null == v.direct.null,
                ClosedForm::NotEstablished { .. } => true,
            };
            (checked, sn_ok, format!("{kind:?} n={n} k={k} a={a:?}: {:?} vs {:?}", v.closed_form, v.direct))
        })
        .collect();
    let mut fails: Vec<String> = results.iter().filter(|r| !r.1).map(|r| r.2.clone()).collect();
    let checked = results.iter().filter(|r| r.0).count();
    let mut tables = 0;
    for n in [1u32, 3, 5] {
        for k in 1..=3u32 {
            tables += 1;
            if one_block_table_expected(n, k, 6).unwrap() != one_block_table_observed(n, k, 6).unwrap() {
                fails.push(format!("one-block table n={n} k={k}"));
            }
            for rest in [vec![1u32, 1], vec![2, 1], vec![1, 3]] {
                let special = (n as usize + 2 * k as usize) % 4 != 3 && rest.iter().all(|&a| a == 1);
                tables += 1;
                let e = induction_table_expected(special, 6);
                if e != induction_table_observed(FamilyKind::B, n, k, &rest, 6).unwrap() {
                    fails.push(format!("induction table n={n} k={k} rest={rest:?}"));
                }
            }
        }
    }
    outcome(&fails, format!("{checked} closed-form rows of {} grid points, {tables} table patterns for a = 0..6", results.len()))
}

fn symbolic_identities() -> Outcome {
    let mut fails = vec![];
    for j in 1..=9usize {
        let plus = a_matrix_det_symbolic(j, PmSign::Plus).unwrap();
        let minus = a_matrix_det_symbolic(j, PmSign::Minus).unwrap();
        let four = if j % 2 == 0 { 4 } else { -4 };
        if minus.sub(&plus) != MultilinearPoly::constant(j, G::real(four)) {
            fails.push(format!("det A^- - det A^+ at J={j}"));
        }
        if j >= 3 {
            for sign in [PmSign::Plus, PmSign::Minus] {
                let lhs = a_matrix_det_symbolic(j, sign).unwrap().set_zero(1);
                let inner = a_matrix_det_symbolic(j - 2, sign.flip()).unwrap();
                if lhs != MultilinearPoly::lift_merged(&inner, j).scale(&G::real(-1)) {
                    fails.push(format!("zero-merge reduction J={j} {sign:?}"));
                }
            }
        }
    }
    for j in 1..=8usize {
        for sign in [PmSign::Plus, PmSign::Minus] {
            if a_pm_homogeneous(j, sign).unwrap() != a_pm_symbolic(j, sign).unwrap() {
                fails.push(format!("homogeneous expansion J={j} {sign:?}"));
            }
        }
    }
    let mut points = 0;
    for j in 1..=5usize {
        let parity = if j % 2 == 0 { 1 } else { -1 };
        for x in alpha_grid(j, 1, 4) {
            let x: Vec<i64> = x.into_iter().map(i64::from).collect();
            let all_ones = x.iter().all(|&v| v == 1);
            let p = a_matrix_det(PmSign::Plus, &x).unwrap();
            let m = a_matrix_det(PmSign::Minus, &x).unwrap();
            points += 1;
            let sign_of = |v: &num_bigint::BigInt| match v.sign() {
                num_bigint::Sign::Minus => -1,
                num_bigint::Sign::NoSign => 0,
                num_bigint::Sign::Plus => 1,
            };
            if (!all_ones && sign_of(&p) != parity) || sign_of(&m) != parity {
                fails.push(format!("sign of det A^± at {x:?}"));
            }
        }
    }
    let initial = [
        (PmSign::Plus, vec![0i64], 2i64),
        (PmSign::Minus, vec![0, 0], -4),
        (PmSign::Minus, vec![1, 0], -4),
        (PmSign::Plus, vec![1, 1, 1], 4),
        (PmSign::Plus, vec![1, 1, 1, 1, 1], 0),
    ];
    for (sign, x, want) in initial {
        if a_pm(sign, &x).unwrap() != want.into() {
            fails.push(format!("a^{sign:?}{x:?} != {want}"));
        }
    }
    for sign in [PmSign::Plus, PmSign::Minus] {
        for parity in [1u8, 2] {
            let spec = a_system_spec(sign, parity, 9).unwrap();
            let top = if parity == 1 { 9 } else { 8 };
            let rebuilt = reconstruct_all(&spec, top).unwrap();
            for (idx, f) in rebuilt.iter().enumerate() {
                let j = parity as usize + 2 * idx;
                if *f != a_pm_symbolic(j, sign).unwrap().into_poly() {
                    fails.push(format!("initial data {sign:?} parity {parity} fails at J={j}"));
                }
            }
        }
    }
    outcome(&fails, format!("J<=9 determinant identities, J<=8 homogeneous sums, {points} sign points, initial data exact"))
}

fn lp(terms: &[(i64, i64)]) -> Lp {
    Lp::from_terms(terms.iter().copied())
}

fn generalized_skein() -> Outcome {
    let mut rng = seeded_rng(23);
    let braids: Vec<_> = (0..50).map(|i| random_braid(&mut rng, 3 + i % 3, 10).unwrap()).collect();
    let mut fails: Vec<String> = braids
        .par_iter()
        .flat_map_iter(|b| {
            let mut f = vec![];
            for kind in [RelationKind::Delta3Order4, RelationKind::Delta3SqOrder4] {
                if !relation_residual(b, &RelationSpec::new(kind)).unwrap().is_zero() {
                    f.push(format!("{kind:?} potential on {}", b.to_text()));
                }
                if !det_relation_check(b, kind).unwrap().is_zero() {
                    f.push(format!("{kind:?} determinant on {}", b.to_text()));
                }
            }
            f
        })
        .collect();
    for s in 0..20 {
        let input = random_block_input(&mut rng, s % 4);
        if !block_identity_check(&input).is_zero() {
            fails.push(format!("block identity instance {s}"));
        }
    }
    let expected = [
        (2usize, lp(&[(0, 1)]), lp(&[(2, 1), (0, -1), (-2, 1)]), lp(&[(3, 1)]), lp(&[(-3, -1)])),
        (3, lp(&[(2, 1), (0, -1), (-2, 1)]), lp(&[(4, 1), (2, -1), (-2, -1), (-4, 1)]), lp(&[(5, 1), (3, -1)]), lp(&[(-3, 1), (-5, -1)])),
        (
            4,
            lp(&[(4, 1), (2, -1), (-2, -1), (-4, 1)]),
            lp(&[(6, 1), (4, -1), (0, 1), (-4, -1), (-6, 1)]),
            lp(&[(7, 1), (5, -1)]),
            lp(&[(-5, 1), (-7, -1)]),
        ),
    ];
    for (j, a0, a1, a12, a21) in expected {
        let c = block_coefficients(j).unwrap();
        let mixed = &c.a12.shift(-2) + &c.a21.shift(2);
        if c.a0 != a0 || c.a1 != a1 || c.a12 != a12 || c.a21 != a21 || c.a11 != mixed || c.a22 != mixed {
            fails.push(format!("coefficient table j={j}: {c:?}"));
        }
    }
    outcome(&fails, "50 seeded braids (m = 3..5) on four relations, 20 block instances, 3 coefficient tables".into())
}

fn applications() -> Outcome {
    let mut fails = vec![];
    let q = CurveQuery {
        n: 1,
        k: 3,
        r: 0,
        j: None,
        lambda_odd: 0,
        lambda_even: 13,
        lambda_plus: Some(10),
        lambda_minus: Some(3),
    };
    let rep = curve_report(&q).unwrap();
    if rep.verdict != Verdict::Prohibited {
        fails.push(format!("degree 7 scheme not prohibited: {rep:?}"));
    }
    for beta in 0..=10u32 {
        if degree9_jump_window(beta) != (3 - 2 * beta as i64, 9 + 2 * beta as i64) {
            fails.push(format!("jump window beta={beta}"));
        }
    }
    let opts = SieveOptions { gamma_balance: true, ..Default::default() };
    for alpha in 0..=15u32 {
        for gamma in 1..=25u32 {
            let got = degree9_enumerate(alpha, 0, gamma, opts).unwrap();
            if got != beta_zero_families(alpha, gamma) {
                fails.push(format!("beta = 0 families alpha={alpha} gamma={gamma}"));
            }
            if !got.is_empty() && (alpha % 2 == 0 || alpha < 7) {
                fails.push(format!("alpha={alpha} survives"));
            }
        }
    }
    let nested = [
        ((2u32, 1u32, 23u32), Degree9Scheme::new((1, 1), (0, 1), (13, 10), -1, -1).unwrap()),
        ((3, 1, 22), Degree9Scheme::new((1, 2), (1, 0), (12, 10), -1, -1).unwrap()),
    ];
    let mut printed_counts = vec![];
    for ((a, b, g), want) in nested {
        let got = degree9_report(a, b, g, true, opts).unwrap().schemes;
        if got != vec![want] {
            fails.push(format!("({a},{b},{g}) gives {got:?}"));
        }
        let printed = SieveOptions { positive_orientation_rhs: true, ..opts };
        printed_counts.push(degree9_enumerate(a, b, g, printed).unwrap().len());
    }
    outcome(
        &fails,
        format!(
            "degree 7 prohibited, jump windows, beta = 0 families for alpha<=15 gamma<=25, unique nested schemes \
             (orientation relation with negated right side; the printed sign leaves {printed_counts:?} schemes)"
        ),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("Delta^n signature/nullity table", delta_table),
        ("computation log fixtures for Delta^n", log_fixtures),
        ("Conway skein relation on random braids", skein_relation),
        ("zero-exponent family determinants", zero_exponent_dets),
        ("four-case determinant tables", det_tables),
        ("twisted determinant closed forms", twisted_closed_forms),
        ("closed-form signature/nullity grid and tables", sign_null_grid),
        ("skein-system symbolic identities", symbolic_identities),
        ("generalized skein relations and block identity", generalized_skein),
        ("prohibition engine", applications),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.pass;
        println!(
            "criterion {:>2} {} {name} [{:.1}s]: {}",
            i + 1,
            if o.pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
