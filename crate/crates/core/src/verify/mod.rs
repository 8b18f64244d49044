//! The identity catalog: every relation the crate knows how to check, on a
//! fixed parameter grid, with deterministic ordering and parallel execution.
//!
//! Filters select checks by name: `all`, an exact name like `thm13`, or a
//! trailing-star prefix like `thm2*`.

mod context;
mod depth23;
mod exact_checks;
mod general;
mod gf_checks;
mod kt_checks;
mod main_theorems;
mod mutation;

pub use context::{Ctx, VerifyError};
pub use depth23::{check_thm16_form, check_thm17_form, check_thm310, check_thm311, check_thm39};
pub use exact_checks::{
    check_diagonal, check_oracle_dumont, check_oracle_entringer, check_oracle_totals,
    check_parity_dumont, check_parity_entringer, check_recurrence, check_reflection,
};
pub use general::{check_cor36_difference, check_general, check_lemma37, check_lemma38};
pub use kt_checks::{
    check_depth1_functional, check_duality, check_duality_expansion, check_kt_relation,
    check_ones_closed_form, check_rel31, hook_convention_probe,
};
pub use main_theorems::{check_thm13, check_thm14, check_thm15, check_thm16, check_thm17};

use crate::exact::SeqName;
use crate::index::Index;
use crate::report::CheckReport;
use crate::tvalues::EvalConfig;
use rayon::prelude::*;

/// Default pass tolerance for numerical checks.
pub const DEFAULT_TOL: f64 = 1e-8;

type Runner = Box<dyn Fn(Ctx<'_>, f64) -> context::CheckResult + Send + Sync>;

struct Entry {
    name: &'static str,
    runner: Runner,
}

fn idx(parts: &[u32]) -> Index {
    Index::new(parts.to_vec()).expect("static registry index")
}

macro_rules! entry {
    ($list:expr, $name:literal, $runner:expr) => {
        $list.push(Entry {
            name: $name,
            runner: Box::new($runner),
        })
    };
}

// The full registry. Grids are fixed here so that suite runs are
// reproducible; weights stay within desk scale.
fn registry() -> Vec<Entry> {
    let mut list: Vec<Entry> = Vec::new();

    // exact recurrences and parity identities
    for which in ["E", "F", "G", "H", "HG"] {
        for k in 1..=12 {
            entry!(list, "thm23", move |_ctx, _tol| exact_checks::check_recurrence(which, k));
        }
    }
    for k in 1..=12 {
        entry!(list, "thm24", move |_ctx, _tol| exact_checks::check_parity_entringer(k));
        entry!(list, "thm26", move |_ctx, _tol| exact_checks::check_reflection(k));
        entry!(list, "thm27", move |_ctx, _tol| exact_checks::check_parity_dumont(k));
    }
    for k in 0..=12 {
        entry!(list, "thm27-Hkk", move |_ctx, _tol| exact_checks::check_diagonal("Hkk", k));
        entry!(list, "thm27-Gkk", move |_ctx, _tol| exact_checks::check_diagonal("Gkk", k));
        if k >= 1 {
            entry!(list, "thm27-2Hkk", move |_ctx, _tol| exact_checks::check_diagonal("2Hkk", k));
        }
        if k >= 3 && k % 2 == 1 {
            entry!(list, "thm27-Godd", move |_ctx, _tol| exact_checks::check_diagonal("Godd", k));
        }
    }

    // enumeration oracle
    for k in 0..=8 {
        entry!(list, "oracle-EE", move |_ctx, _tol| exact_checks::check_oracle_entringer(k));
    }
    for k in 2..=9 {
        entry!(list, "oracle-GG", move |_ctx, _tol| exact_checks::check_oracle_dumont(k));
    }
    for n in 1..=9 {
        entry!(list, "oracle-EE-total", move |_ctx, _tol| {
            exact_checks::check_oracle_totals("EE", n)
        });
    }
    for n in 1..=4 {
        entry!(list, "oracle-GG-total", move |_ctx, _tol| {
            exact_checks::check_oracle_totals("GG", n)
        });
    }

    // generating functions
    for name in SeqName::ALL {
        entry!(list, "gf", move |ctx, _tol| gf_check(ctx, name));
    }

    // hooked relation and depth-one forms
    for n in 1..=5 {
        entry!(list, "kt", move |ctx, tol| kt_checks::check_kt_relation(ctx, n, tol));
    }
    entry!(list, "hook-convention", |ctx, tol| {
        kt_checks::hook_convention_probe(ctx, tol)
    });
    for k in 1..=6 {
        entry!(list, "rel31", move |ctx, tol| kt_checks::check_rel31(ctx, k, tol));
    }
    for n in 1..=6 {
        entry!(list, "ones", move |ctx, tol| {
            kt_checks::check_ones_closed_form(ctx, n, tol)
        });
    }
    for k in 1..=5 {
        entry!(list, "eq33", move |ctx, tol| {
            kt_checks::check_depth1_functional(ctx, "Tt", k, tol)
        });
        entry!(list, "eq34", move |ctx, tol| {
            kt_checks::check_depth1_functional(ctx, "T", k, tol)
        });
    }

    // duality
    for parts in [&[2u32][..], &[3], &[1, 2], &[2, 2]] {
        entry!(list, "duality", move |ctx, tol| {
            kt_checks::check_duality(ctx, &idx(parts), tol)
        });
    }
    for parts in [&[2u32][..], &[3], &[1, 2], &[2, 2], &[1, 3]] {
        entry!(list, "eqT", move |ctx, tol| {
            kt_checks::check_duality_expansion(ctx, &idx(parts), tol)
        });
    }

    // headline theorems at desk scale (weights capped at 9)
    for (k1, k2) in [(1usize, 3usize), (3, 3), (1, 5)] {
        entry!(list, "thm13", move |ctx, tol| {
            main_theorems::check_thm13(ctx, k1, k2, tol)
        });
    }
    for k2 in [3usize, 5, 7] {
        entry!(list, "thm14", move |ctx, tol| main_theorems::check_thm14(ctx, k2, tol));
    }
    for (k1, k3) in [(1usize, 1usize), (1, 2), (3, 1), (1, 3), (3, 3), (1, 4), (5, 1)] {
        entry!(list, "thm15", move |ctx, tol| {
            main_theorems::check_thm15(ctx, k1, k3, tol)
        });
    }
    for k3 in [1usize, 2, 3, 4, 5] {
        entry!(list, "thm16", move |ctx, tol| main_theorems::check_thm16(ctx, k3, tol));
    }
    for (k1, k3) in [(0usize, 1usize), (0, 2), (2, 1), (0, 3), (2, 2), (0, 4), (4, 1)] {
        entry!(list, "thm17", move |ctx, tol| {
            main_theorems::check_thm17(ctx, k1, k3, tol)
        });
    }

    // general relations
    let general_grid: [&[u32]; 9] =
        [&[2], &[3], &[4], &[6], &[1, 2], &[2, 2], &[1, 3], &[1, 4], &[2, 1, 2]];
    let tall_grid: [&[u32]; 6] = [&[3], &[4], &[6], &[1, 3], &[2, 3], &[1, 1, 3]];
    for parts in general_grid {
        entry!(list, "thm32", move |ctx, tol| {
            general::check_general(ctx, SeqName::C, &idx(parts), tol)
        });
        entry!(list, "thm34", move |ctx, tol| {
            general::check_general(ctx, SeqName::E, &idx(parts), tol)
        });
        entry!(list, "thm35", move |ctx, tol| {
            general::check_general(ctx, SeqName::F, &idx(parts), tol)
        });
    }
    for parts in tall_grid {
        entry!(list, "thm33", move |ctx, tol| {
            general::check_general(ctx, SeqName::D, &idx(parts), tol)
        });
        entry!(list, "cor36", move |ctx, tol| {
            general::check_general(ctx, SeqName::G, &idx(parts), tol)
        });
    }
    for parts in [&[3u32][..], &[4], &[1, 3]] {
        entry!(list, "cor36diff", move |ctx, tol| {
            general::check_cor36_difference(ctx, &idx(parts), tol)
        });
    }

    // functional lemmas
    let lemma37_grid: [(SeqName, &[u32], usize); 13] = [
        (SeqName::E, &[2], 0),
        (SeqName::E, &[3], 0),
        (SeqName::E, &[3], 1),
        (SeqName::E, &[1, 1, 2], 0),
        (SeqName::C, &[2, 2], 0),
        (SeqName::C, &[4], 2),
        (SeqName::C, &[1, 2], 3),
        (SeqName::D, &[1, 3], 0),
        (SeqName::D, &[3], 1),
        (SeqName::F, &[2], 1),
        (SeqName::F, &[1, 2], 0),
        (SeqName::G, &[1, 3], 0),
        (SeqName::G, &[4], 0),
    ];
    for (a, parts, h) in lemma37_grid {
        entry!(list, "lemma37", move |ctx, tol| {
            general::check_lemma37(ctx, a, &idx(parts), h, tol)
        });
    }
    let lemma38_grid: [(SeqName, &[u32]); 8] = [
        (SeqName::E, &[2, 2]),
        (SeqName::F, &[1, 3]),
        (SeqName::C, &[2, 3]),
        (SeqName::D, &[1, 4]),
        (SeqName::G, &[3, 3]),
        (SeqName::E, &[1, 1, 2]),
        (SeqName::F, &[2, 1, 2]),
        (SeqName::C, &[1, 2, 2]),
    ];
    for (a, parts) in lemma38_grid {
        entry!(list, "lemma38", move |ctx, tol| {
            general::check_lemma38(ctx, a, &idx(parts), tol)
        });
    }

    // depth-two and depth-three specializations
    let thm39_c: [(usize, usize); 8] =
        [(0, 2), (1, 1), (1, 3), (2, 2), (0, 4), (3, 3), (3, 1), (2, 4)];
    for (k1, k2) in thm39_c {
        entry!(list, "thm39", move |ctx, tol| {
            depth23::check_thm39(ctx, SeqName::C, k1, k2, tol)
        });
    }
    let thm39_d: [(usize, usize); 6] = [(0, 2), (1, 3), (2, 2), (2, 4), (0, 4), (1, 5)];
    for (k1, k2) in thm39_d {
        entry!(list, "thm39", move |ctx, tol| {
            depth23::check_thm39(ctx, SeqName::D, k1, k2, tol)
        });
    }
    for k2 in [3usize, 5, 7] {
        entry!(list, "thm310", move |ctx, tol| depth23::check_thm310(ctx, k2, tol));
    }
    let thm311_grid: [(usize, usize); 12] = [
        (0, 2),
        (1, 1),
        (2, 2),
        (1, 3),
        (0, 4),
        (3, 3),
        (0, 1),
        (1, 2),
        (0, 3),
        (2, 1),
        (2, 3),
        (1, 4),
    ];
    for (k1, k3) in thm311_grid {
        entry!(list, "thm311", move |ctx, tol| {
            depth23::check_thm311(ctx, k1, k3, tol)
        });
    }
    for k3 in [1usize, 2, 3, 4] {
        entry!(list, "thm16form", move |ctx, tol| {
            depth23::check_thm16_form(ctx, k3, tol)
        });
    }
    let thm17_grid: [(usize, usize); 6] = [(0, 1), (0, 2), (2, 1), (0, 3), (2, 3), (2, 2)];
    for (k1, k3) in thm17_grid {
        entry!(list, "thm17form", move |ctx, tol| {
            depth23::check_thm17_form(ctx, k1, k3, tol)
        });
    }

    list
}

fn gf_check(ctx: Ctx<'_>, name: SeqName) -> context::CheckResult {
    gf_checks::check_sequence_gf(ctx, name, 24)
}

/// True when `name` matches the filter (`all`, exact, or `prefix*`).
pub fn filter_matches(filter: &str, name: &str) -> bool {
    if filter == "all" || filter == name {
        return true;
    }
    match filter.strip_suffix('*') {
        Some(prefix) => name.starts_with(prefix),
        None => false,
    }
}

/// Run every registered check whose name matches the filter. Checks run in
/// parallel; the report order is the fixed registration order. A check that
/// errors out is converted into a failing report.
pub fn run_suite(filter: &str, cfg: &EvalConfig, tol: f64) -> Vec<CheckReport> {
    let entries: Vec<Entry> = registry()
        .into_iter()
        .filter(|e| filter_matches(filter, e.name))
        .collect();
    entries
        .par_iter()
        .map(|e| {
            let ctx = Ctx::new(cfg);
            (e.runner)(ctx, tol).unwrap_or_else(|err| {
                CheckReport::exact(e.name, "error", f64::NAN, f64::NAN, false)
                    .with_note(format!("check aborted: {err}"))
            })
        })
        .collect()
}

/// The three deliberately corrupted identities; every returned report must
/// FAIL for the suite to count as sensitive.
pub fn mutation_probe(cfg: &EvalConfig, tol: f64) -> Vec<CheckReport> {
    let ctx = Ctx::new(cfg);
    let mut out = Vec::new();
    let push = |out: &mut Vec<CheckReport>, r: context::CheckResult| match r {
        Ok(report) => out.push(report),
        Err(err) => out.push(
            CheckReport::exact("mutation", "error", f64::NAN, f64::NAN, false)
                .with_note(format!("probe aborted: {err}")),
        ),
    };
    push(&mut out, mutation::corrupted_kt(ctx, 3, tol));
    push(&mut out, mutation::corrupted_thm13(ctx, 1, 3, tol));
    push(&mut out, mutation::corrupted_duality(ctx, &idx(&[2, 2]), tol));
    out
}

/// Names of all registered checks, deduplicated, in registration order.
pub fn check_names() -> Vec<&'static str> {
    let mut names = Vec::new();
    for e in registry() {
        if !names.contains(&e.name) {
            names.push(e.name);
        }
    }
    names
}

/// Generating-function check with a caller-chosen truncation order, exposed
/// for the CLI and tests.
pub fn check_sequence_gf(
    name: SeqName,
    trunc: usize,
    cfg: &EvalConfig,
) -> Result<CheckReport, VerifyError> {
    gf_checks::check_sequence_gf(Ctx::new(cfg), name, trunc)
}
