//! Acceptance suite: one test per criterion, each printing a pass/fail
//! line. Reference data is frozen here independently of the unit tests.

use mtv_core::exact::{self, SeqName};
use mtv_core::index::Index;
use mtv_core::perms;
use mtv_core::triangles::{self, TriangleName};
use mtv_core::tvalues::{self, EvalConfig};
use mtv_core::verify;
use rug::ops::Pow;
use rug::Float;
use std::time::Instant;

fn announce(criterion: u32, what: &str, started: Instant, budget_s: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion {criterion:2} ({what}): PASS in {elapsed:.2}s (budget {budget_s}s)");
    assert!(
        elapsed < budget_s,
        "criterion {criterion} exceeded its runtime budget: {elapsed:.2}s >= {budget_s}s"
    );
}

const SEQ_TABLE: [(SeqName, [&str; 11]); 8] = [
    (
        SeqName::B,
        ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42", "0", "-1/30", "0", "5/66"],
    ),
    (
        SeqName::C,
        ["1", "0", "-1/3", "0", "7/15", "0", "-31/21", "0", "127/15", "0", "-2555/33"],
    ),
    (
        SeqName::D,
        ["1", "-1", "2/3", "0", "-8/15", "0", "32/21", "0", "-128/15", "0", "2560/33"],
    ),
    (
        SeqName::E,
        ["1", "0", "-1", "0", "5", "0", "-61", "0", "1385", "0", "-50521"],
    ),
    (
        SeqName::F,
        ["1", "-1", "0", "2", "0", "-16", "0", "272", "0", "-7936", "0"],
    ),
    (
        SeqName::G,
        ["0", "1", "-1", "0", "1", "0", "-3", "0", "17", "0", "-155"],
    ),
    (
        SeqName::Ee,
        ["1", "1", "1", "2", "5", "16", "61", "272", "1385", "7936", "50521"],
    ),
    (
        SeqName::Gg,
        ["0", "1", "1", "0", "1", "0", "3", "0", "17", "0", "155"],
    ),
];

#[test]
fn criterion_01_sequence_table_reproduction() {
    let started = Instant::now();
    for (name, row) in SEQ_TABLE {
        for (n, want) in row.iter().enumerate() {
            assert_eq!(exact::seq(name, n).to_string(), *want, "{name}_{n}");
        }
    }
    announce(1, "sequence table, 8 rows x n<=10, exact", started, 1.0);
}

const T_ENTRINGER: [&[i64]; 11] = [
    &[1],
    &[0, 1],
    &[0, 1, 1],
    &[0, 1, 2, 2],
    &[0, 2, 4, 5, 5],
    &[0, 5, 10, 14, 16, 16],
    &[0, 16, 32, 46, 56, 61, 61],
    &[0, 61, 122, 178, 224, 256, 272, 272],
    &[0, 272, 544, 800, 1024, 1202, 1324, 1385, 1385],
    &[0, 1385, 2770, 4094, 5296, 6320, 7120, 7664, 7936, 7936],
    &[0, 7936, 15872, 23536, 30656, 36976, 42272, 46366, 49136, 50521, 50521],
];
const T_DUMONT: [&[i64]; 11] = [
    &[0],
    &[0, 0],
    &[0, 1, 0],
    &[0, 1, 1, 0],
    &[0, 0, 1, 0, 0],
    &[0, 1, 2, 2, 1, 0],
    &[0, 0, 1, 1, 1, 0, 0],
    &[0, 3, 6, 8, 8, 6, 3, 0],
    &[0, 0, 3, 3, 5, 3, 3, 0, 0],
    &[0, 17, 34, 48, 56, 56, 48, 34, 17, 0],
    &[0, 0, 17, 17, 31, 25, 31, 17, 17, 0, 0],
];
const T_E: [&[i64]; 11] = [
    &[0],
    &[0, 1],
    &[0, 0, 1],
    &[0, 1, 2, 2],
    &[0, 0, 1, 3, 5],
    &[0, 5, 10, 14, 16, 16],
    &[0, 0, 5, 15, 29, 45, 61],
    &[0, 61, 122, 178, 224, 256, 272, 272],
    &[0, 0, 61, 183, 361, 585, 841, 1113, 1385],
    &[0, 1385, 2770, 4094, 5296, 6320, 7120, 7664, 7936, 7936],
    &[0, 0, 1385, 4155, 8249, 13545, 19865, 26985, 34649, 42585, 50521],
];
const T_F: [&[i64]; 11] = [
    &[0],
    &[0, 1],
    &[0, 1, 1],
    &[0, 0, 1, 2],
    &[0, 2, 4, 5, 5],
    &[0, 0, 2, 6, 11, 16],
    &[0, 16, 32, 46, 56, 61, 61],
    &[0, 0, 16, 48, 94, 150, 211, 272],
    &[0, 272, 544, 800, 1024, 1202, 1324, 1385, 1385],
    &[0, 0, 272, 816, 1616, 2640, 3842, 5166, 6551, 7936],
    &[0, 7936, 15872, 23536, 30656, 36976, 42272, 46366, 49136, 50521, 50521],
];
const T_G: [&[i64]; 11] = [
    &[0],
    &[0, 0],
    &[0, 1, 2],
    &[0, 1, 1, 0],
    &[0, 0, 1, 2, 2],
    &[0, 1, 2, 2, 1, 0],
    &[0, 0, 1, 3, 5, 6, 6],
    &[0, 3, 6, 8, 8, 6, 3, 0],
    &[0, 0, 3, 9, 17, 25, 31, 34, 34],
    &[0, 17, 34, 48, 56, 56, 48, 34, 17, 0],
    &[0, 0, 17, 51, 99, 155, 211, 259, 293, 310, 310],
];
const T_H: [&[i64]; 11] = [
    &[0],
    &[0, 0],
    &[0, 1, 0],
    &[0, 1, -1, 0],
    &[0, 0, 1, 0, 0],
    &[0, 1, 0, 0, -1, 0],
    &[0, 0, 1, 1, 1, 0, 0],
    &[0, 3, 0, 2, -2, 0, -3, 0],
    &[0, 0, 3, 3, 5, 3, 3, 0, 0],
    &[0, 17, 0, 14, -6, 6, -14, 0, -17, 0],
    &[0, 0, 17, 17, 31, 25, 31, 17, 17, 0, 0],
];

#[test]
fn criterion_02_triangle_tables_bit_exact() {
    let started = Instant::now();
    let tables: [(TriangleName, &[&[i64]; 11]); 6] = [
        (TriangleName::Entringer, &T_ENTRINGER),
        (TriangleName::Dumont, &T_DUMONT),
        (TriangleName::E, &T_E),
        (TriangleName::F, &T_F),
        (TriangleName::G, &T_G),
        (TriangleName::H, &T_H),
    ];
    for (name, table) in tables {
        for (k, row) in table.iter().enumerate() {
            for (j, &want) in row.iter().enumerate() {
                assert_eq!(
                    triangles::entry(name, k, j).unwrap(),
                    num_bigint::BigInt::from(want),
                    "{name}({k},{j})"
                );
            }
        }
    }
    // spot values named in the criterion
    assert_eq!(triangles::entringer(10, 3).unwrap(), 23536.into());
    assert_eq!(triangles::dumont_triangle(9, 4).unwrap(), 56.into());
    assert_eq!(triangles::explicit_h(7, 4).unwrap(), (-2).into());
    announce(2, "appendix tables 1-6, bit-exact", started, 1.0);
}

#[test]
fn criterion_03_oracle_equivalence() {
    let started = Instant::now();
    for k in 0..=8 {
        for j in 0..=k {
            assert_eq!(
                triangles::entringer(k, j).unwrap(),
                num_bigint::BigInt::from(perms::count_down_up_starting(k, j).unwrap()),
                "EE({k},{j})"
            );
        }
    }
    for k in 2..=9 {
        for j in 1..k {
            assert_eq!(
                triangles::dumont_triangle(k, j).unwrap(),
                num_bigint::BigInt::from(perms::count_dumont_starting(k, j).unwrap()),
                "GG({k},{j})"
            );
        }
    }
    announce(3, "recurrence triangles vs enumeration", started, 30.0);
}

#[test]
fn criterion_04_exact_identity_suite() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let reports = verify::run_suite("thm2*", &cfg, verify::DEFAULT_TOL);
    assert!(reports.len() >= 100, "only {} exact reports", reports.len());
    for r in &reports {
        assert!(r.pass && r.exact && r.residual == 0.0, "{}", r.line());
    }
    announce(4, "exact identities, residual exactly 0", started, 1.0);
}

fn assert_residual(value: &Float, want: &Float, tol: f64, what: &str) {
    let diff = Float::with_val(value.prec(), value - want).abs().to_f64();
    assert!(diff < tol, "{what}: residual {diff:.3e} >= {tol:e}");
}

#[test]
fn criterion_05_closed_form_numerics() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let prec = cfg.precision;
    let hp = Float::with_val(prec, rug::float::Constant::Pi) / 2u32;
    let tol = 1e-10;

    let t2 = tvalues::eval_t(&Index::new(vec![2]).unwrap(), &cfg).unwrap();
    assert_residual(&t2.value, &hp.clone().square(), tol, "T(2) vs pi^2/4");

    let tt1 = tvalues::eval_t_tilde(&Index::ones(1), &cfg).unwrap();
    assert_residual(&tt1.value, &hp, tol, "Tt(1) vs pi/2");

    let mut factorial = 1u64;
    for n in 1..=6usize {
        factorial *= n as u64;
        let want = Float::with_val(prec, (&hp).pow(n as u32)) / factorial;
        let got = tvalues::eval_t_tilde(&Index::ones(n), &cfg).unwrap();
        assert_residual(&got.value, &want, tol, &format!("Tt(ones {n})"));
    }

    for k in 1..=6usize {
        let target = Index::new(vec![(k + 1) as u32]).unwrap();
        let got = if k % 2 == 1 {
            tvalues::eval_t(&target, &cfg).unwrap()
        } else {
            tvalues::eval_t_tilde(&target, &cfg).unwrap()
        };
        let mut q = exact::seq(SeqName::Ee, k);
        for d in 2..=k {
            q /= exact::Rational::from_integer(d.into());
        }
        let want =
            tvalues::rational_to_float(&q, prec) * Float::with_val(prec, (&hp).pow((k + 1) as u32));
        assert_residual(&got.value, &want, tol, &format!("branch value at k={k}"));
    }
    announce(5, "closed-form numerics at default config", started, 10.0);
}

#[test]
fn criterion_06_hooked_relation() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let reports = verify::run_suite("kt", &cfg, 1e-8);
    assert_eq!(reports.len(), 5);
    for r in &reports {
        assert!(r.pass && r.residual < 1e-8, "{}", r.line());
    }
    announce(6, "hooked relation n=1..5 at 1e-8", started, 60.0);
}

#[test]
fn criterion_07_main_theorems() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    // the registered grids cover at least these required points
    let required: [(&str, &[&str]); 5] = [
        ("thm13", &["k1=1,k2=3", "k1=3,k2=3", "k1=1,k2=5"]),
        ("thm14", &["k2=3", "k2=5"]),
        ("thm15", &["k1=1,k3=1", "k1=1,k3=2", "k1=3,k3=1"]),
        ("thm16", &["k3=1", "k3=2", "k3=3"]),
        ("thm17", &["k1=0,k3=1", "k1=0,k3=2", "k1=2,k3=1"]),
    ];
    for (filter, params) in required {
        let reports = verify::run_suite(filter, &cfg, 1e-6);
        for p in params {
            assert!(
                reports.iter().any(|r| r.params == *p),
                "{filter} missing required point {p}"
            );
        }
        for r in &reports {
            assert!(r.pass && r.residual < 1e-6, "{}", r.line());
        }
    }
    announce(7, "main theorems at desk scale, 1e-6", started, 300.0);
}

#[test]
fn criterion_08_general_theorem_grid() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let mut count = 0;
    for filter in [
        "thm32", "thm33", "thm34", "thm35", "cor36", "cor36diff", "lemma37", "lemma38", "thm39",
        "thm310", "thm311", "thm16form", "thm17form",
    ] {
        let reports = verify::run_suite(filter, &cfg, 1e-6);
        assert!(!reports.is_empty(), "no reports for {filter}");
        for r in &reports {
            assert!(r.pass && r.residual < 1e-6, "{}", r.line());
            count += 1;
        }
    }
    assert!(count >= 40, "general grid has only {count} points");
    announce(8, "general relations grid, 1e-6", started, 600.0);
}

#[test]
fn criterion_09_duality() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let reports = verify::run_suite("duality", &cfg, 1e-8);
    assert_eq!(reports.len(), 4);
    for r in &reports {
        assert!(r.pass && r.residual < 1e-8, "{}", r.line());
    }
    announce(9, "duality at four indices, 1e-8", started, 60.0);
}

#[test]
fn criterion_10_mutation_sensitivity() {
    let started = Instant::now();
    let cfg = EvalConfig::default();
    let reports = verify::mutation_probe(&cfg, verify::DEFAULT_TOL);
    assert_eq!(reports.len(), 3);
    for r in &reports {
        assert!(!r.pass, "corrupted identity slipped through: {}", r.line());
        assert!(r.residual > 1e-3, "suspiciously small residual: {}", r.line());
    }
    announce(10, "mutation probes all fail", started, 120.0);
}
