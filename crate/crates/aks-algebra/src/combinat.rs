//! Exact binomial coefficients, binomial expansion over the integers,
//! the combinatorial number system (ranking of fixed-size bit sets), and
//! the derived map from ranks to bounded exponent tuples.

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::Error;
use crate::polyring::ModPoly;

/// Exact binomial coefficient, via the multiplicative formula with exact
/// intermediate divisions (each prefix product is itself a binomial).
/// Rows up to 100 stay in machine words; binom(100, 50) times 100 is
/// still far below the u128 ceiling.
pub fn binom(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    if n <= 100 {
        let mut acc: u128 = 1;
        for i in 1..=k {
            acc = acc * (n - k + i) as u128 / i as u128;
        }
        return BigUint::from(acc);
    }
    let mut acc = BigUint::one();
    for i in 1..=k {
        acc = acc * (n - k + i) / i;
    }
    acc
}

/// Coefficients of `(X + a)^n` over the integers, ascending:
/// `coeffs[i] = binom(n, i) * a^(n-i)`.
pub fn binomial_expand(a: &BigUint, n: u64) -> Vec<BigUint> {
    (0..=n)
        .map(|i| binom(n, i) * a.pow((n - i) as u32))
        .collect()
}

/// `(X + a)^n` with the exact integer coefficients reduced mod
/// `modulus`.
pub fn binomial_expand_mod(a: &BigUint, n: u64, modulus: u64) -> ModPoly {
    let m = BigUint::from(modulus);
    let coeffs = binomial_expand(a, n)
        .into_iter()
        .map(|c| (c % &m).to_u64().expect("below a u64 modulus"))
        .collect();
    ModPoly::new(modulus, coeffs)
}

/// The value (a sum of distinct powers of two) encoding the `rank`-th
/// `k`-element subset of bit positions `{0, ..., m-1}`, with ranks
/// starting at 1. Defined by splitting on whether position `m-1` is in
/// the subset: the first `binom(m-1, k)` ranks leave it out, the rest
/// include it and recurse with `k - 1`. This ranks all `binom(m, k)`
/// subsets bijectively.
pub fn subset_at_rank(m: u64, k: u64, rank: &BigUint) -> Result<BigUint, Error> {
    let total = binom(m, k);
    if rank.is_zero() || rank > &total {
        return Err(Error::RankOutOfRange {
            rank: rank.clone(),
            max: total,
        });
    }
    let mut value = BigUint::zero();
    let mut i = rank.clone();
    let mut m = m;
    let mut k = k;
    while k > 0 {
        let without_top = binom(m - 1, k);
        if i <= without_top {
            m -= 1;
        } else {
            i -= without_top;
            value.set_bit(m - 1, true);
            m -= 1;
            k -= 1;
        }
    }
    debug_assert!(i.is_one());
    Ok(value)
}

/// 1-based positions of the set bits of `v`, ascending: entry `i` is one
/// more than the bit index of the `(i+1)`-th lowest set bit.
pub fn bit_positions(v: &BigUint) -> Vec<u64> {
    (0..v.bits()).filter(|&j| v.bit(j)).map(|j| j + 1).collect()
}

/// Turn strictly increasing 1-based positions into the gap sequence
/// `e_0 = pos[0] - 1`, `e_i = pos[i] - pos[i-1] - 1`: exponent tuples
/// whose sum is the last position minus the tuple length.
pub fn exponents_from_positions(positions: &[u64]) -> Result<Vec<u64>, Error> {
    let mut prev = 0u64;
    let mut out = Vec::with_capacity(positions.len());
    for &p in positions {
        if p <= prev {
            return Err(Error::precondition(format!(
                "positions must be strictly increasing and at least 1, got {positions:?}"
            )));
        }
        out.push(p - prev - 1);
        prev = p;
    }
    Ok(out)
}

/// The `rank`-th exponent tuple `(e_0, ..., e_ell)` with all entries
/// nonnegative and sum at most `t - 1`, for ranks `1..=binom(t+ell,
/// ell+1)`: the subset ranking composed with the position-to-gap map.
/// Distinct ranks give distinct tuples.
pub fn exponent_tuple_at_rank(t: u64, ell: u64, rank: &BigUint) -> Result<Vec<u64>, Error> {
    if t == 0 {
        return Err(Error::precondition("t must be at least 1"));
    }
    let m = t + ell;
    let k = ell + 1;
    let value = subset_at_rank(m, k, rank)?;
    if value.bits() > m {
        return Err(Error::BitLengthExceeded {
            limit: m,
            got: value.bits(),
        });
    }
    let positions = bit_positions(&value);
    if positions.len() as u64 != k {
        return Err(Error::PopcountMismatch {
            expected: k,
            got: positions.len() as u64,
        });
    }
    let tuple = exponents_from_positions(&positions)?;
    let sum: u64 = tuple.iter().sum();
    if sum > t - 1 {
        return Err(Error::PropertyViolation(format!(
            "exponent tuple {tuple:?} at rank {rank} sums to {sum}, above t - 1 = {}",
            t - 1
        )));
    }
    Ok(tuple)
}

/// Two-coordinate view of a 1-based index `l` in `[1, (k+1)^2]`: the
/// pair `(i, j)` with `i = (l-1) / (k+1)` and `j = (l-1) mod (k+1)`, so
/// `j` moves fastest as `l` increases.
pub fn grid_rank(k: u64, l: u64) -> Result<(u64, u64), Error> {
    let side = k + 1;
    let max = side * side;
    if l == 0 || l > max {
        return Err(Error::GridIndexOutOfRange { l, max });
    }
    Ok(((l - 1) / side, (l - 1) % side))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn big(v: u64) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn binom_values_and_pascal_rule() {
        assert_eq!(binom(5, 2), big(10));
        assert_eq!(binom(0, 0), big(1));
        assert_eq!(binom(4, 7), big(0));
        assert_eq!(binom(52, 5), big(2_598_960));
        // The range crosses the word-size cutoff at 100, tying the two
        // evaluation paths together through the Pascal recurrence.
        for n in 1..=110u64 {
            for k in 1..=n {
                assert_eq!(binom(n, k), binom(n - 1, k - 1) + binom(n - 1, k));
            }
        }
    }

    #[test]
    fn expansion_of_x_plus_two_cubed() {
        let coeffs = binomial_expand(&big(2), 3);
        assert_eq!(coeffs, vec![big(8), big(12), big(6), big(1)]);
    }

    #[test]
    fn expansion_row_sums_to_power_of_a_plus_one() {
        for (a, n) in [(1u64, 10u64), (3, 7), (10, 5)] {
            let total: BigUint = binomial_expand(&big(a), n).into_iter().sum();
            assert_eq!(total, big(a + 1).pow(n as u32));
        }
    }

    #[test]
    fn modular_expansion_collapses_to_freshman_dream_at_p() {
        let full = binomial_expand_mod(&big(2), 3, 1_000_003);
        assert_eq!(full, ModPoly::new(1_000_003, vec![8, 12, 6, 1]));
        for p in [3u64, 5, 7, 11, 13] {
            for a in 0..p {
                let reduced = binomial_expand_mod(&big(a), p, p);
                let mut want = vec![0u64; p as usize + 1];
                want[0] = a;
                want[p as usize] = 1;
                assert_eq!(reduced, ModPoly::new(p, want), "p = {p}, a = {a}");
            }
        }
    }

    #[test]
    fn subset_rank_base_values() {
        // One-element subsets of two positions: ranks 1, 2 give values 1, 2.
        assert_eq!(subset_at_rank(2, 1, &big(1)).unwrap(), big(1));
        assert_eq!(subset_at_rank(2, 1, &big(2)).unwrap(), big(2));
        // Two-element subsets of three positions: 3, 5, 6.
        assert_eq!(subset_at_rank(3, 2, &big(1)).unwrap(), big(3));
        assert_eq!(subset_at_rank(3, 2, &big(2)).unwrap(), big(5));
        assert_eq!(subset_at_rank(3, 2, &big(3)).unwrap(), big(6));
        // The empty subset has rank 1 and value 0.
        assert_eq!(subset_at_rank(5, 0, &big(1)).unwrap(), big(0));
    }

    #[test]
    fn subset_rank_is_bijective_for_small_sizes() {
        for m in 0..=10u64 {
            for k in 0..=m {
                let total = binom(m, k);
                let mut seen = HashSet::new();
                let mut rank = BigUint::one();
                while rank <= total {
                    let v = subset_at_rank(m, k, &rank).unwrap();
                    assert_eq!(v.count_ones(), k, "m={m} k={k} rank={rank}");
                    assert!(v.bits() <= m);
                    assert!(seen.insert(v), "duplicate value at m={m} k={k}");
                    rank += 1u32;
                }
                assert_eq!(BigUint::from(seen.len()), total);
            }
        }
    }

    #[test]
    fn subset_rank_rejects_out_of_range() {
        assert!(subset_at_rank(3, 2, &big(0)).is_err());
        assert!(subset_at_rank(3, 2, &big(4)).is_err());
        assert!(subset_at_rank(3, 5, &big(1)).is_err());
    }

    #[test]
    fn positions_of_set_bits_are_one_based() {
        assert_eq!(bit_positions(&big(0b101101)), vec![1, 3, 4, 6]);
        assert_eq!(bit_positions(&big(0)), Vec::<u64>::new());
        assert_eq!(bit_positions(&big(1)), vec![1]);
    }

    #[test]
    fn gaps_reconstruct_positions() {
        let pos = vec![2u64, 3, 7, 10];
        let e = exponents_from_positions(&pos).unwrap();
        assert_eq!(e, vec![1, 0, 3, 2]);
        // Partial sums invert the map: pos[i] = e_0 + ... + e_i + (i+1).
        let mut acc = 0u64;
        for (i, &g) in e.iter().enumerate() {
            acc += g;
            assert_eq!(pos[i], acc + i as u64 + 1);
        }
        assert!(exponents_from_positions(&[0]).is_err());
        assert!(exponents_from_positions(&[3, 3]).is_err());
    }

    #[test]
    fn exponent_tuples_are_distinct_and_bounded() {
        for (t, ell) in [(4u64, 2u64), (6, 3), (3, 5), (1, 4)] {
            let total = binom(t + ell, ell + 1);
            let mut seen = HashSet::new();
            let mut rank = BigUint::one();
            while rank <= total {
                let tuple = exponent_tuple_at_rank(t, ell, &rank).unwrap();
                assert_eq!(tuple.len() as u64, ell + 1);
                assert!(tuple.iter().sum::<u64>() <= t - 1);
                assert!(seen.insert(tuple));
                rank += 1u32;
            }
            assert_eq!(BigUint::from(seen.len()), total);
            // Every admissible tuple is hit: their count is the same
            // binomial by stars and bars over sum <= t-1.
            let mut all = HashSet::new();
            enumerate_tuples(ell + 1, t - 1, &mut vec![], &mut all);
            assert_eq!(all.len(), seen.len());
            assert_eq!(all, seen);
        }
    }

    fn enumerate_tuples(len: u64, budget: u64, cur: &mut Vec<u64>, out: &mut HashSet<Vec<u64>>) {
        if cur.len() as u64 == len {
            out.insert(cur.clone());
            return;
        }
        for e in 0..=budget {
            cur.push(e);
            enumerate_tuples(len, budget - e, cur, out);
            cur.pop();
        }
    }

    #[test]
    fn grid_rank_walks_rows() {
        assert_eq!(grid_rank(2, 1).unwrap(), (0, 0));
        assert_eq!(grid_rank(2, 5).unwrap(), (1, 1));
        assert_eq!(grid_rank(2, 9).unwrap(), (2, 2));
        assert_eq!(grid_rank(2, 4).unwrap(), (1, 0));
        assert!(grid_rank(2, 0).is_err());
        assert!(grid_rank(2, 10).is_err());
        // All indices are covered exactly once.
        let mut seen = HashSet::new();
        for l in 1..=16u64 {
            assert!(seen.insert(grid_rank(3, l).unwrap()));
        }
        assert_eq!(seen.len(), 16);
    }
}
