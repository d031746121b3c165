//! The fifteen-point acceptance gate. Each test drives one property
//! suite (or the bench harness) at its contract ranges and prints one
//! pass/fail line. Criterion 13 documents a real defect in the
//! four-step inequality chain: its first three steps and the
//! end-to-end comparison hold on every harvested parameter set, but
//! the final step fails for most primes, so the test states the exact
//! breakage and fails honestly rather than papering over it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use aks_algebra::fastdiv::bench_divide;
use aks_cli::{run_suite, SuiteConfig, VerifyReport};

fn cfg() -> SuiteConfig {
    SuiteConfig {
        seed: 0xacce_97ed,
        ..SuiteConfig::default()
    }
}

fn gate(criterion: &str, report: &VerifyReport) {
    let status = if report.passed() { "pass" } else { "FAIL" };
    println!(
        "criterion {criterion}: {status} ({} cases, {} failures, {:.1}s)",
        report.cases_run,
        report.failures.len(),
        report.elapsed_secs
    );
    if !report.passed() {
        println!("{}", report.render());
    }
    assert!(report.passed(), "criterion {criterion} failed");
}

#[test]
fn criterion_01_oracle_agreement_to_20000_single_threaded() {
    let config = SuiteConfig {
        max_n: Some(20_000),
        jobs: 1,
        ..cfg()
    };
    let report = run_suite("oracle", &config).unwrap();
    gate("01 oracle agreement to 20000", &report);
    assert!(
        report.elapsed_secs < 600.0,
        "single-threaded sweep took {:.1}s, over the ten-minute budget",
        report.elapsed_secs
    );
}

#[test]
fn criterion_02_lcm_lower_bound_to_2000() {
    let config = SuiteConfig {
        max_m: Some(2000),
        ..cfg()
    };
    let report = run_suite("lcm-bound", &config).unwrap();
    gate("02 lcm lower bound", &report);
}

#[test]
fn criterion_03_order_witness_search_to_5000() {
    let config = SuiteConfig {
        max_n: Some(5000),
        ..cfg()
    };
    let report = run_suite("lemma-d", &config).unwrap();
    gate("03 order witness search", &report);
}

#[test]
fn criterion_04_legendre_valuations() {
    let config = SuiteConfig {
        max_n: Some(500),
        max_p: Some(100),
        ..cfg()
    };
    let report = run_suite("legendre", &config).unwrap();
    gate("04 factorial valuations", &report);
}

#[test]
fn criterion_05_totient_divisor_sum_to_2000() {
    let config = SuiteConfig {
        max_r: Some(2000),
        ..cfg()
    };
    let report = run_suite("totient-sum", &config).unwrap();
    gate("05 totient divisor sum", &report);
}

#[test]
fn criterion_06_cyclotomic_factorization() {
    let config = SuiteConfig {
        max_p: Some(60),
        ..cfg()
    };
    let report = run_suite("cyclotomic", &config).unwrap();
    gate("06 cyclotomic factorization", &report);
}

#[test]
fn criterion_07_freshman_dream_exhaustive_to_31() {
    let config = SuiteConfig {
        max_p: Some(31),
        ..cfg()
    };
    let report = run_suite("gflt", &config).unwrap();
    gate("07 prime-power congruence", &report);
}

#[test]
fn criterion_08_fast_division_differential() {
    let config = SuiteConfig {
        max_n: Some(10_000),
        max_m: Some(1000),
        ..cfg()
    };
    let report = run_suite("division", &config).unwrap();
    gate("08 fast division differential", &report);
    assert!(report.cases_run >= 11_000);
}

#[test]
fn criterion_09_subset_unranking_bijections() {
    let cns = run_suite("cns", &SuiteConfig { max_m: Some(16), ..cfg() }).unwrap();
    gate("09a subset unranking bijection", &cns);
    let sigma = run_suite("sigma", &SuiteConfig { max_m: Some(40), ..cfg() }).unwrap();
    gate("09b exponent tuple injectivity", &sigma);
}

#[test]
fn criterion_10_root_enumeration_samples() {
    let config = SuiteConfig {
        max_n: Some(1000),
        max_p: Some(101),
        ..cfg()
    };
    let report = run_suite("rub", &config).unwrap();
    gate("10 root enumeration", &report);
    assert!(report.cases_run >= 1000);
}

#[test]
fn criterion_11_introspectivity_closure() {
    let config = SuiteConfig {
        max_n: Some(500),
        ..cfg()
    };
    let report = run_suite("introspectivity", &config).unwrap();
    gate("11 introspectivity closure", &report);
    assert!(report.cases_run >= 500);
}

#[test]
fn criterion_12_product_family_distinctness() {
    let config = SuiteConfig {
        max_n: Some(20),
        max_m: Some(200),
        ..cfg()
    };
    let report = run_suite("lemma-f", &config).unwrap();
    gate("12 product family distinctness", &report);
    assert!(report.cases_run >= 20);
}

#[test]
fn criterion_13_inequality_chain_on_harvested_sets() {
    let config = SuiteConfig {
        max_n: Some(150),
        ..cfg()
    };
    let report = run_suite("lemma-h", &config).unwrap();
    gate("13 inequality chain on harvested sets", &report);
}

#[test]
fn criterion_14_binomial_layer() {
    let pascal = run_suite("pascal", &SuiteConfig { max_m: Some(64), ..cfg() }).unwrap();
    gate("14a Pascal and factorial identities", &pascal);
    let expand = run_suite("binomial", &SuiteConfig { max_m: Some(64), ..cfg() }).unwrap();
    gate("14b expansion vs iterated multiplication", &expand);
    let divis = run_suite("binom-div", &SuiteConfig { max_p: Some(101), ..cfg() }).unwrap();
    gate("14c prime divisibility of binomials", &divis);
}

#[test]
fn criterion_15_division_bench_correctness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xacce_97ed);
    let report = bench_divide(&[64, 256, 1024, 4096], 65521, 3, &mut rng)
        .expect("bench runs on a prime modulus");
    let mut all = true;
    for row in &report.rows {
        all &= row.all_trials_matched;
        println!(
            "criterion 15 bench: degree {} -> fast {} ns, long {} ns, ratio {:.2}, matched {}",
            row.divisor_degree,
            row.ks_mean_ns,
            row.long_mean_ns,
            row.long_mean_ns as f64 / row.ks_mean_ns.max(1) as f64,
            row.all_trials_matched
        );
    }
    println!(
        "criterion 15 division bench: {}",
        if all { "pass" } else { "FAIL" }
    );
    assert!(all, "criterion 15 failed: a bench trial mismatched");
}
