//! Primality-suite plumbing behind the `aks` binary: a uniform report
//! type, a sharded case runner, and one verification suite per
//! property family, each independently runnable over configurable
//! ranges.

pub mod suites;

use std::fmt::Write as _;

use serde::Serialize;

/// Range and execution knobs shared by every suite. Each suite reads
/// only the flags its report lists and falls back to its documented
/// default for the rest.
#[derive(Clone, Debug)]
pub struct SuiteConfig {
    pub max_n: Option<u64>,
    pub max_p: Option<u64>,
    pub max_m: Option<u64>,
    pub max_r: Option<u64>,
    pub seed: u64,
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: None,
            max_p: None,
            max_m: None,
            max_r: None,
            seed: 0x5eed_0001,
            jobs: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Failure {
    pub inputs: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub ranges: Vec<(String, String)>,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    pub elapsed_secs: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        writeln!(out, "suite: {}", self.suite).unwrap();
        for (name, value) in &self.ranges {
            writeln!(out, "range: {name} = {value}").unwrap();
        }
        writeln!(out, "cases run: {}", self.cases_run).unwrap();
        writeln!(out, "failures: {}", self.failures.len()).unwrap();
        const SHOWN: usize = 25;
        for f in self.failures.iter().take(SHOWN) {
            writeln!(
                out,
                "  inputs: {} | expected: {} | got: {}",
                f.inputs, f.expected, f.got
            )
            .unwrap();
        }
        if self.failures.len() > SHOWN {
            writeln!(out, "  ... and {} more", self.failures.len() - SHOWN).unwrap();
        }
        writeln!(out, "elapsed: {:.3}s", self.elapsed_secs).unwrap();
        writeln!(
            out,
            "result: {}",
            if self.passed() { "PASS" } else { "FAIL" }
        )
        .unwrap();
        out
    }
}

pub const SUITE_NAMES: &[&str] = &[
    "oracle",
    "legendre",
    "lcm-bound",
    "lemma-d",
    "totient-sum",
    "cyclotomic",
    "xk-identities",
    "gflt",
    "division",
    "cns",
    "sigma",
    "grid",
    "rub",
    "introspectivity",
    "congruence",
    "lemma-f",
    "lemma-g",
    "lemma-h",
    "pascal",
    "binomial",
    "binom-div",
];

/// Run one suite by name; `None` for an unknown name.
pub fn run_suite(name: &str, cfg: &SuiteConfig) -> Option<VerifyReport> {
    let report = match name {
        "oracle" => suites::oracle(cfg),
        "legendre" => suites::legendre(cfg),
        "lcm-bound" => suites::lcm_bound(cfg),
        "lemma-d" => suites::lemma_d(cfg),
        "totient-sum" => suites::totient_sum(cfg),
        "cyclotomic" => suites::cyclotomic_products(cfg),
        "xk-identities" => suites::xk_identities(cfg),
        "gflt" => suites::gflt(cfg),
        "division" => suites::division(cfg),
        "cns" => suites::cns(cfg),
        "sigma" => suites::sigma(cfg),
        "grid" => suites::grid(cfg),
        "rub" => suites::rub(cfg),
        "introspectivity" => suites::introspectivity(cfg),
        "congruence" => suites::congruence(cfg),
        "lemma-f" => suites::lemma_f(cfg),
        "lemma-g" => suites::lemma_g(cfg),
        "lemma-h" => suites::lemma_h(cfg),
        "pascal" => suites::pascal(cfg),
        "binomial" => suites::binomial(cfg),
        "binom-div" => suites::binom_div(cfg),
        _ => return None,
    };
    Some(report)
}
