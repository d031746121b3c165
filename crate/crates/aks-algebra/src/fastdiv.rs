//! Polynomial division by coefficient reversal and truncated power-series
//! inversion (Kung–Sieveking), differentially tested against schoolbook
//! long division, plus a small wall-clock benchmark of the two.

use std::time::Instant;

use rand::Rng;
use serde::Serialize;

use crate::error::Error;
use crate::polyring::{poly_long_div, ModPoly};

/// Quotient and remainder with the usual invariant: for inputs `(P, S)`,
/// `P = S * quotient + remainder` and `deg remainder < deg S`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotient: ModPoly,
    pub remainder: ModPoly,
}

/// Reverse the coefficients of `f` within a degree-`n` frame: the
/// coefficient of `X^i` moves to `X^(n-i)`. Requires `deg f <= n`; an
/// involution when `deg f = n`.
pub fn reverse(f: &ModPoly, n: usize) -> Result<ModPoly, Error> {
    if let Some(d) = f.degree() {
        if d > n {
            return Err(Error::DegreeExceedsFrame { deg: d, frame: n });
        }
    }
    let mut coeffs = vec![0u64; n + 1];
    for (i, &c) in f.coeffs().iter().enumerate() {
        coeffs[n - i] = c;
    }
    Ok(ModPoly::new(f.modulus(), coeffs))
}

/// Truncation mod `X^k`: keep the coefficients on `X^0 .. X^(k-1)`.
fn truncate(f: &ModPoly, k: usize) -> ModPoly {
    let keep = f.coeffs().len().min(k);
    ModPoly::new(f.modulus(), f.coeffs()[..keep].to_vec())
}

fn check_unit_constant(s: &ModPoly) -> Result<(), Error> {
    if s.coeff(0) != 1 {
        return Err(Error::NonUnitConstantTerm(s.coeff(0)));
    }
    Ok(())
}

/// The inverse of `s` mod `X^(k+1)` as the literal geometric sum
/// `1 + (1-s) + (1-s)^2 + ... + (1-s)^k`: since `1 - s` has no constant
/// term, `s * sum = 1 - (1-s)^(k+1)` vanishes mod `X^(k+1)`. Slow
/// (one truncated product per term) but direct; the reference
/// implementation for [`doubling_inverse`].
pub fn truncated_geom_inverse(s: &ModPoly, k: usize) -> Result<ModPoly, Error> {
    check_unit_constant(s)?;
    let m = s.modulus();
    let g = truncate(&ModPoly::one(m).sub(s), k + 1);
    let mut acc = ModPoly::one(m);
    let mut term = ModPoly::one(m);
    for _ in 1..=k {
        term = truncate(&term.mul(&g), k + 1);
        if term.is_zero() {
            break;
        }
        acc = acc.add(&term);
    }
    Ok(acc)
}

/// The same inverse of `s` mod `X^(k+1)`, computed by precision
/// doubling: from `s*x = 1 mod X^t`, the update `x <- x*(2 - s*x)`
/// is correct mod `X^(2t)`. Truncated inverses are unique, so this
/// agrees with [`truncated_geom_inverse`] coefficient for coefficient.
pub fn doubling_inverse(s: &ModPoly, k: usize) -> Result<ModPoly, Error> {
    check_unit_constant(s)?;
    let m = s.modulus();
    let target = k + 1;
    let two = ModPoly::constant(m, 2 % m);
    let mut x = ModPoly::one(m);
    let mut prec = 1usize;
    while prec < target {
        prec = (prec * 2).min(target);
        let sx = truncate(&truncate(s, prec).mul(&x), prec);
        x = truncate(&x.mul(&two.sub(&sx)), prec);
    }
    Ok(x)
}

/// Division with remainder through reversal: normalize `S` to monic,
/// reverse both polynomials, multiply the reversed dividend by the
/// truncated inverse of the reversed divisor, and read the quotient off
/// the low coefficients in reverse. Output is identical to
/// [`poly_long_div`].
pub fn ks_divide(p: &ModPoly, s: &ModPoly) -> Result<DivisionResult, Error> {
    let m_deg = s.degree().ok_or(Error::ZeroDivisor)?;
    let modulus = p.modulus();
    let n_deg = match p.degree() {
        Some(n) if n >= m_deg => n,
        _ => {
            return Ok(DivisionResult {
                quotient: ModPoly::zero(modulus),
                remainder: p.clone(),
            })
        }
    };
    let lc = s.leading_coeff().expect("nonzero divisor");
    let s_monic = s.make_monic()?;
    let k = n_deg - m_deg;
    let p_rev = reverse(p, n_deg)?;
    let s_rev = reverse(&s_monic, m_deg)?;
    let s_rev_inv = doubling_inverse(&s_rev, k)?;
    let h = truncate(&p_rev.mul(&s_rev_inv), k + 1);
    let q_monic = reverse(&h, k)?;
    // P = S_monic * Q_monic + R and S = lc * S_monic, so Q = Q_monic / lc.
    let quotient = if lc == 1 {
        q_monic
    } else {
        let lc_inv = crate::polyring::inv_mod_u64(lc, modulus)
            .ok_or(Error::NonInvertibleLeading { lc, modulus })?;
        q_monic.scale(lc_inv)
    };
    let remainder = p.sub(&s.mul(&quotient));
    if remainder.degree() >= s.degree() {
        return Err(Error::PropertyViolation(format!(
            "reversal division left remainder {remainder} of degree >= deg {s}"
        )));
    }
    Ok(DivisionResult {
        quotient,
        remainder,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchRow {
    pub divisor_degree: usize,
    pub dividend_degree: usize,
    pub trials: usize,
    pub ks_mean_ns: u128,
    pub long_mean_ns: u128,
    pub all_trials_matched: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct BenchReport {
    pub modulus: u64,
    pub trials: usize,
    pub rows: Vec<BenchRow>,
}

/// Time reversal-based division against schoolbook long division on
/// random inputs: for each degree `d`, a random monic divisor of degree
/// `d` and a random dividend of degree `2d`, repeated `trials` times.
/// Every trial cross-checks that the two algorithms return the same
/// quotient and remainder.
pub fn bench_divide(
    degrees: &[usize],
    modulus: u64,
    trials: usize,
    rng: &mut impl Rng,
) -> Result<BenchReport, Error> {
    let mut rows = Vec::with_capacity(degrees.len());
    for &d in degrees {
        let mut ks_total = 0u128;
        let mut long_total = 0u128;
        let mut all_matched = true;
        for _ in 0..trials.max(1) {
            let s = random_monic(rng, modulus, d);
            let p = random_poly(rng, modulus, 2 * d);

            let t0 = Instant::now();
            let fast = ks_divide(&p, &s)?;
            ks_total += t0.elapsed().as_nanos();

            let t1 = Instant::now();
            let (q, r) = poly_long_div(&p, &s)?;
            long_total += t1.elapsed().as_nanos();

            if fast.quotient != q || fast.remainder != r {
                all_matched = false;
            }
        }
        let trials = trials.max(1);
        rows.push(BenchRow {
            divisor_degree: d,
            dividend_degree: 2 * d,
            trials,
            ks_mean_ns: ks_total / trials as u128,
            long_mean_ns: long_total / trials as u128,
            all_trials_matched: all_matched,
        });
    }
    Ok(BenchReport {
        modulus,
        trials: trials.max(1),
        rows,
    })
}

fn random_poly(rng: &mut impl Rng, modulus: u64, degree: usize) -> ModPoly {
    let mut coeffs: Vec<u64> = (0..=degree).map(|_| rng.gen_range(0..modulus)).collect();
    while coeffs[degree] == 0 {
        coeffs[degree] = rng.gen_range(0..modulus);
    }
    ModPoly::new(modulus, coeffs)
}

fn random_monic(rng: &mut impl Rng, modulus: u64, degree: usize) -> ModPoly {
    let mut coeffs: Vec<u64> = (0..=degree).map(|_| rng.gen_range(0..modulus)).collect();
    coeffs[degree] = 1;
    ModPoly::new(modulus, coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn poly(m: u64, coeffs: &[u64]) -> ModPoly {
        ModPoly::new(m, coeffs.to_vec())
    }

    #[test]
    fn reverse_moves_coefficients_across_the_frame() {
        let f = poly(7, &[1, 2, 3]);
        assert_eq!(reverse(&f, 2).unwrap(), poly(7, &[3, 2, 1]));
        assert_eq!(reverse(&f, 4).unwrap(), poly(7, &[0, 0, 3, 2, 1]));
        assert!(matches!(
            reverse(&f, 1),
            Err(Error::DegreeExceedsFrame { deg: 2, frame: 1 })
        ));
    }

    #[test]
    fn reverse_is_an_involution_on_its_frame() {
        let f = poly(13, &[4, 0, 9, 1, 7]);
        let n = f.degree().unwrap();
        assert_eq!(reverse(&reverse(&f, n).unwrap(), n).unwrap(), f);
    }

    #[test]
    fn inverse_of_one_is_one() {
        let one = ModPoly::one(11);
        for k in [0usize, 1, 5, 30] {
            assert_eq!(truncated_geom_inverse(&one, k).unwrap(), one);
            assert_eq!(doubling_inverse(&one, k).unwrap(), one);
        }
    }

    #[test]
    fn inverses_require_unit_constant_term() {
        let s = poly(11, &[3, 1]);
        assert!(matches!(
            truncated_geom_inverse(&s, 4),
            Err(Error::NonUnitConstantTerm(3))
        ));
        assert!(matches!(
            doubling_inverse(&s, 4),
            Err(Error::NonUnitConstantTerm(3))
        ));
    }

    #[test]
    fn truncated_inverse_multiplies_to_one() {
        let s = poly(101, &[1, 7, 0, 13, 42]);
        for k in [0usize, 1, 2, 3, 7, 20] {
            for inv in [
                truncated_geom_inverse(&s, k).unwrap(),
                doubling_inverse(&s, k).unwrap(),
            ] {
                let prod = truncate(&s.mul(&inv), k + 1);
                assert_eq!(prod, ModPoly::one(101), "k = {k}");
            }
        }
    }

    #[test]
    fn sample_division_over_z5() {
        // (X^3 + 2X + 1) / (X + 1) over Z/5: quotient X^2 + 4X + 3,
        // remainder 3.
        let p = poly(5, &[1, 2, 0, 1]);
        let s = poly(5, &[1, 1]);
        let got = ks_divide(&p, &s).unwrap();
        assert_eq!(got.quotient, poly(5, &[3, 4, 1]));
        assert_eq!(got.remainder, poly(5, &[3]));
    }

    #[test]
    fn short_dividend_returns_zero_quotient() {
        let p = poly(7, &[2, 1]);
        let s = poly(7, &[0, 0, 1]);
        let got = ks_divide(&p, &s).unwrap();
        assert!(got.quotient.is_zero());
        assert_eq!(got.remainder, p);
        assert!(ks_divide(&p, &ModPoly::zero(7)).is_err());
    }

    #[test]
    fn non_monic_divisors_are_normalized_and_unscaled() {
        let p = poly(11, &[3, 1, 4, 1, 5, 9]);
        let s = poly(11, &[2, 7, 5]);
        let fast = ks_divide(&p, &s).unwrap();
        let (q, r) = poly_long_div(&p, &s).unwrap();
        assert_eq!(fast.quotient, q);
        assert_eq!(fast.remainder, r);
        assert_eq!(s.mul(&fast.quotient).add(&fast.remainder), p);
    }

    #[test]
    fn bench_runs_and_cross_checks() {
        let mut rng = StdRng::seed_from_u64(7);
        let report = bench_divide(&[8, 16], 1_000_003, 3, &mut rng).unwrap();
        assert_eq!(report.rows.len(), 2);
        for row in &report.rows {
            assert!(row.all_trials_matched);
            assert_eq!(row.dividend_degree, 2 * row.divisor_degree);
        }
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"ks_mean_ns\""));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn reversal_division_matches_long_division(
            p in proptest::collection::vec(0u64..65_521, 0..40),
            s in proptest::collection::vec(0u64..65_521, 1..20),
        ) {
            let m = 65_521u64;
            let p = ModPoly::new(m, p);
            let s = ModPoly::new(m, s);
            prop_assume!(!s.is_zero());
            let fast = ks_divide(&p, &s).unwrap();
            let (q, r) = poly_long_div(&p, &s).unwrap();
            prop_assert_eq!(fast.quotient, q);
            prop_assert_eq!(fast.remainder, r);
        }

        #[test]
        fn both_inverse_paths_agree(
            tail in proptest::collection::vec(0u64..97, 0..24),
            k in 0usize..40,
        ) {
            let m = 97u64;
            let mut coeffs = vec![1u64];
            coeffs.extend(tail);
            let s = ModPoly::new(m, coeffs);
            let slow = truncated_geom_inverse(&s, k).unwrap();
            let fast = doubling_inverse(&s, k).unwrap();
            prop_assert_eq!(slow, fast);
        }
    }
}
