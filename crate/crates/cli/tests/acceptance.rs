//! Acceptance gate. Each test prints one `criterion N: PASS|FAIL` line; all
//! comparisons are exact.

use std::path::PathBuf;
use std::process::Command;

use loday_cli::report::{Report, Verdict};
use loday_cli::suite::{run_criterion, SuiteOptions};
use loday_core::anticyclic::convention_search;
use loday_core::SignPolicy;

const SEED: u64 = 42;

fn options() -> SuiteOptions {
    SuiteOptions {
        seed: SEED,
        ..SuiteOptions::default()
    }
}

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn count(v: &Verdict, key: &str) -> usize {
    v.counts.get(key).copied().unwrap_or(0)
}

/// Runs one suite criterion, applies the extra conditions and prints its line.
fn gate(id: usize, extra: impl FnOnce(&Verdict) -> Result<(), String>) {
    let v = run_criterion(id, &options());
    let outcome = if v.passed {
        extra(&v)
    } else {
        Err(format!("{:?}", v.witness))
    };
    println!(
        "criterion {id:>2}: {} {} ({} checks)",
        if outcome.is_ok() { "PASS" } else { "FAIL" },
        v.name,
        v.checked
    );
    if let Err(why) = outcome {
        panic!("criterion {id} failed: {why}");
    }
}

fn require(ok: bool, why: &str) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

#[test]
fn criterion_01_free_zinbiel_axiom() {
    gate(1, |v| require(v.checked >= 200, "fewer than 200 triples"));
}

#[test]
fn criterion_02_shuffle_is_sum_of_half_shuffles() {
    gate(2, |v| require(v.checked >= 200, "fewer than 200 pairs"));
}

#[test]
fn criterion_03_coderivation_law() {
    gate(3, |v| require(v.checked > 0, "nothing checked"));
}

#[test]
fn criterion_04_lie_word_recursion() {
    gate(4, |v| require(count(v, "four-letter display") > 0, "four-letter display not exercised"));
}

#[test]
fn criterion_05_anticyclic_calculus() {
    gate(5, |v| {
        require(count(v, "projection") > 0, "no projections")?;
        require(count(v, "rotation") > 0, "no rotations")?;
        require(count(v, "bracket routes") > 0, "no bracket routes")
    });
}

#[test]
fn criterion_06_dual_commutator() {
    gate(6, |_| {
        let search = convention_search(2, 5);
        require(search.passing() == [SignPolicy::SHIPPED], "shipped convention is not the unique passing one")?;
        let committed = std::fs::read_to_string(root().join("docs/convention-search.txt"))
            .map_err(|e| format!("docs/convention-search.txt: {e}"))?;
        let rendered = loday_cli::commands::convention_search(2, 5).map_err(|e| e.to_string())?.to_text();
        require(committed == rendered, "committed transcript is stale")
    });
}

#[test]
fn criterion_07_universal_pairing() {
    gate(7, |v| require(count(v, "universality maps") >= 4, "too few random lifts"));
}

#[test]
fn criterion_08_mu_squared_iff_leibniz() {
    gate(8, |v| {
        require(count(v, "leibniz") + count(v, "not leibniz") >= 53, "fewer than 50 random tables")?;
        require(count(v, "leibniz") > 0 && count(v, "not leibniz") > 0, "one side of the biconditional never hit")
    });
}

#[test]
fn criterion_09_theta_iff_twisted_leibniz() {
    gate(9, |v| {
        require(count(v, "twisted leibniz") > 0, "no twisted Leibniz sample")?;
        require(count(v, "twisted not leibniz") > 0, "no non-Leibniz twisted sample")
    });
}

#[test]
fn criterion_10_invariant_metrics() {
    gate(10, |v| {
        require(count(v, "invariant") > 0 && count(v, "not invariant") > 0, "one side never hit")?;
        require(count(v, "lie reduction") > 0, "Lie reduction not exercised")
    });
}

#[test]
fn criterion_11_flow() {
    gate(11, |v| require(count(v, "invariant") > 0 && count(v, "not invariant") > 0, "one side never hit"));
}

#[test]
fn criterion_12_coboundary_squares_to_zero() {
    gate(12, |v| require(count(v, "nonabelian") > 0, "only abelian structures sampled"));
}

fn verify(extra: &[&str]) -> (Option<i32>, Vec<u8>) {
    let out = Command::new(env!("CARGO_BIN_EXE_loday"))
        .args(["verify", "--seed", "42", "--json"])
        .args(extra)
        .output()
        .expect("loday runs");
    (out.status.code(), out.stdout)
}

#[test]
fn criterion_13_determinism_and_mutation() {
    let check = || -> Result<(), String> {
        let (code_a, a) = verify(&[]);
        let (code_b, b) = verify(&[]);
        require(code_a == Some(0) && code_b == Some(0), "default verify run did not pass")?;
        require(a == b, "reports differ between runs")?;
        let report: Report = serde_json::from_slice(&a).map_err(|e| e.to_string())?;
        require(report.seed == Some(SEED) && report.sign_convention == "minus", "report header")?;
        require(report.verdicts.len() == 12 && report.passed, "report verdicts")?;

        let (code, mutated) = verify(&["--dual-sign-policy", "plus"]);
        require(code == Some(1), "mutated build did not exit with status 1")?;
        let report: Report = serde_json::from_slice(&mutated).map_err(|e| e.to_string())?;
        let six = &report.verdicts[5];
        require(six.id == "6" && !six.passed, "criterion 6 did not fail under the flipped sign")?;
        let w = six.witness.as_ref().ok_or("no witness")?;
        require(w.note.contains("triangularity") && w.note.contains("length 3"), "witness is not a length-3 triangularity word")?;
        require(!w.terms.is_empty(), "witness carries no terms")
    };
    let outcome = check();
    println!(
        "criterion 13: {} deterministic reports and sign mutation",
        if outcome.is_ok() { "PASS" } else { "FAIL" }
    );
    if let Err(why) = outcome {
        panic!("criterion 13 failed: {why}");
    }
}
