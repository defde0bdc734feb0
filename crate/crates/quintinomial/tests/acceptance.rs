//! The twelve acceptance checks, one test per criterion.
//!
//! Each test prints its scoreboard line (visible under `--nocapture`) and
//! asserts the criterion passed, wall-clock limit included.  Seed and
//! factoring budget are pinned here so the suite is reproducible.

use quintinomial::verify::{self, CriterionReport};

const SEED: u64 = 0;
const BUDGET: u64 = 1 << 22;

fn assert_pass(report: CriterionReport) {
    println!("{}", report.summary_line());
    assert!(
        report.passed,
        "criterion {} ({}) failed: {} [{} ms / {} ms]",
        report.id, report.name, report.details, report.elapsed_ms, report.limit_ms
    );
}

#[test]
fn criterion_01_discriminant_formula() {
    assert_pass(verify::discriminant_formula(SEED).unwrap());
}

#[test]
fn criterion_02_quartic_grid_residues() {
    assert_pass(verify::quartic_grid_residues().unwrap());
}

#[test]
fn criterion_03_monogenic_iff_squarefree() {
    assert_pass(verify::monogenic_iff_squarefree(SEED, BUDGET).unwrap());
}

#[test]
fn criterion_04_unique_cyclic_pair() {
    assert_pass(verify::unique_cyclic_pair(SEED, BUDGET).unwrap());
}

#[test]
fn criterion_05_family_walk_d4() {
    assert_pass(verify::family_walk(SEED, BUDGET).unwrap());
}

#[test]
fn criterion_06_octic_split_certificates() {
    assert_pass(verify::octic_split_certificates(SEED).unwrap());
}

#[test]
fn criterion_07_equal_coefficient_octics() {
    assert_pass(verify::equal_coefficient_octics(SEED).unwrap());
}

#[test]
fn criterion_08_wreath_certificates() {
    assert_pass(verify::wreath_certificates(BUDGET).unwrap());
}

#[test]
fn criterion_09_mixed_residue_monogenic() {
    assert_pass(verify::mixed_residue_monogenic(SEED, BUDGET).unwrap());
}

#[test]
fn criterion_10_lucas_pell_chain() {
    assert_pass(verify::lucas_pell_chain().unwrap());
}

#[test]
fn criterion_11_squarefree_density() {
    assert_pass(verify::squarefree_density(BUDGET).unwrap());
}

#[test]
fn criterion_12_lift_independence_and_reassembly() {
    assert_pass(verify::lift_independence(SEED).unwrap());
}
