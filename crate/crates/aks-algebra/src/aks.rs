//! The AKS primality test with a structured trace of every decision,
//! plus the executable instruments behind its correctness argument:
//! the generalized Fermat congruence, introspectivity, the residue
//! orbit G_r, greedy product membership, the rank-to-product map tau,
//! the grid-collision root index ghat, and the binomial inequality
//! chain.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigUint;
use num_integer::{Integer, Roots};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{binom, exponent_tuple_at_rank, grid_rank};
use crate::error::Error;
use crate::numtheory::{bitlen, find_r, is_perfect_power, totient, trial_factorize};
use crate::polyring::{powmod, root_indices_in_field, ModPoly, QuotientField, SparsePoly};

/// Serialize numbers as decimal strings so 64-bit and arbitrary
/// precision values survive JSON consumers that parse numbers as
/// doubles.
mod dec_string {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::fmt::Display;
    use std::str::FromStr;

    pub fn serialize<T: Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(v)
    }

    pub fn deserialize<'de, T, D>(d: D) -> Result<T, D::Error>
    where
        T: FromStr,
        T::Err: Display,
        D: Deserializer<'de>,
    {
        let raw = String::deserialize(d)?;
        raw.parse().map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Verdict {
    Prime,
    Composite,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Prime => write!(f, "PRIME"),
            Verdict::Composite => write!(f, "COMPOSITE"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PerfectPowerWitness {
    #[serde(with = "dec_string")]
    pub base: BigUint,
    #[serde(with = "dec_string")]
    pub exp: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GcdHit {
    #[serde(with = "dec_string")]
    pub a: u64,
    #[serde(with = "dec_string")]
    pub g: BigUint,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceCheck {
    #[serde(with = "dec_string")]
    pub a: u64,
    pub ok: bool,
}

/// Everything one run of the test decided, in decision order. Fields of
/// stages the run never reached stay at their zero defaults.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AksTrace {
    pub schema_version: String,
    #[serde(with = "dec_string")]
    pub n: BigUint,
    pub perfect_power: Option<PerfectPowerWitness>,
    #[serde(with = "dec_string")]
    pub r: u64,
    #[serde(with = "dec_string")]
    pub ord_r_n: u64,
    pub gcd_hit: Option<GcdHit>,
    pub small_n_shortcut: bool,
    #[serde(with = "dec_string")]
    pub ell: u64,
    pub congruence_checks: Vec<CongruenceCheck>,
    pub verdict: Verdict,
}

pub const TRACE_SCHEMA_VERSION: &str = "1";

impl AksTrace {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("trace serializes")
    }

    pub fn from_json(raw: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(raw)
    }
}

/// Decide primality of `n`. Stages, in order: 0 and 1 are composite by
/// convention (recorded as their own trivial perfect powers); a perfect
/// power is composite; find the least `r` coprime to `n` with
/// `ord_r(n) > bitlen(n)^2`; scan `a <= r` for a proper gcd with `n`;
/// accept outright if `n <= r`; otherwise accept iff
/// `(X+a)^n = X^n + a  (mod X^r - 1, n)` for every
/// `a <= isqrt(phi(r)) * (bitlen(n) - 1)`.
pub fn aks_is_prime(n: &BigUint) -> (Verdict, AksTrace) {
    let mut trace = AksTrace {
        schema_version: TRACE_SCHEMA_VERSION.to_string(),
        n: n.clone(),
        perfect_power: None,
        r: 0,
        ord_r_n: 0,
        gcd_hit: None,
        small_n_shortcut: false,
        ell: 0,
        congruence_checks: Vec::new(),
        verdict: Verdict::Composite,
    };
    if let Some((base, exp)) = is_perfect_power(n) {
        // 0 and 1 land here too, as their own squares.
        trace.perfect_power = Some(PerfectPowerWitness { base, exp });
        return (Verdict::Composite, trace);
    }
    let (r, ord) = find_r(n).expect("an admissible r exists below the bound for every n >= 2");
    trace.r = r;
    trace.ord_r_n = ord;
    for a in 1..=r {
        let g = BigUint::from(a).gcd(n);
        if g > BigUint::one() && &g < n {
            trace.gcd_hit = Some(GcdHit { a, g });
            return (Verdict::Composite, trace);
        }
    }
    if n <= &BigUint::from(r) {
        trace.small_n_shortcut = true;
        trace.verdict = Verdict::Prime;
        return (Verdict::Prime, trace);
    }
    let ell = totient(r).sqrt() * (bitlen(n) - 1);
    trace.ell = ell;
    for a in 0..=ell {
        let ok = check_congruence(n, r, a);
        trace.congruence_checks.push(CongruenceCheck { a, ok });
        if !ok {
            return (Verdict::Composite, trace);
        }
    }
    trace.verdict = Verdict::Prime;
    (Verdict::Prime, trace)
}

/// One congruence probe: `(X+a)^n = X^(n mod r) + a` in
/// `Z/n[X] / (X^r - 1)`. The modulus `n` may be composite; `X^r - 1`
/// being monic keeps reduction well defined.
pub fn check_congruence(n: &BigUint, r: u64, a: u64) -> bool {
    assert!(r >= 2, "the congruence ring needs r >= 2");
    assert!(n >= &BigUint::from(2u32), "the coefficient modulus needs n >= 2");
    if let Some(n64) = n.to_u64() {
        let f = ModPoly::x_plus(n64, a % n64);
        let g = ModPoly::x_pow_minus_one(n64, r as usize);
        let lhs = powmod(&f, n, &g).expect("X^r - 1 is monic");
        lhs == x_pow_plus_const(n64, n, r, a)
    } else {
        check_congruence_wide(n, r, a)
    }
}

/// `X^(n mod r) + a` over `Z/n`, the fully reduced right-hand side.
fn x_pow_plus_const(modulus: u64, n: &BigUint, r: u64, a: u64) -> ModPoly {
    let k = (n % r).to_u64().expect("below r") as usize;
    let mut coeffs = vec![0u64; k + 1];
    coeffs[0] = a % modulus;
    coeffs[k] = (coeffs[k] + 1) % modulus;
    ModPoly::new(modulus, coeffs)
}

/// The same probe with arbitrary-precision coefficients, for n past
/// u64. Same cyclic square-and-multiply, one coefficient reduction per
/// product.
fn check_congruence_wide(n: &BigUint, r: u64, a: u64) -> bool {
    let r = r as usize;
    let mut base = vec![BigUint::zero(); r];
    base[0] = BigUint::from(a) % n;
    base[1 % r] += 1u32;
    base[1 % r] %= n;
    let mut acc = vec![BigUint::zero(); r];
    acc[0] = BigUint::one();
    for i in (0..n.bits()).rev() {
        acc = cyclic_mul_wide(&acc, &acc, n);
        if n.bit(i) {
            acc = cyclic_mul_wide(&acc, &base, n);
        }
    }
    let k = (n % (r as u64)).to_u64().expect("below r") as usize;
    let mut rhs = vec![BigUint::zero(); r];
    rhs[0] = BigUint::from(a) % n;
    rhs[k] += 1u32;
    rhs[k] %= n;
    acc == rhs
}

fn cyclic_mul_wide(a: &[BigUint], b: &[BigUint], n: &BigUint) -> Vec<BigUint> {
    let r = a.len();
    let mut out = vec![BigUint::zero(); r];
    for (i, ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            if bj.is_zero() {
                continue;
            }
            let mut k = i + j;
            if k >= r {
                k -= r;
            }
            out[k] += ai * bj;
        }
    }
    for v in &mut out {
        *v %= n;
    }
    out
}

/// The generalized Fermat congruence `(X+a)^p = X^p + a` in
/// `Z/p[X] / (X^r - 1)`: provably true for prime `p`, `gcd(a, p) = 1`,
/// `1 <= r < p`, so any `false` from this function flags a broken
/// arithmetic layer rather than a mathematical possibility.
pub fn gflt_check(p: u64, a: u64, r: u64) -> Result<bool, Error> {
    if !crate::numtheory::trial_division_is_prime_u64(p) {
        return Err(Error::precondition(format!("p must be prime, got {p}")));
    }
    if r == 0 || r >= p {
        return Err(Error::precondition(format!("1 <= r < p, got r = {r}, p = {p}")));
    }
    if crate::numtheory::gcd_u64(a % p, p) != 1 {
        return Err(Error::precondition(format!("gcd(a, p) = 1, got a = {a}, p = {p}")));
    }
    if r == 1 {
        // X - 1 collapses everything to constants: both sides are 1 + a.
        return Ok(true);
    }
    Ok(check_congruence(&BigUint::from(p), r, a % p))
}

/// For a prime divisor `p` of an accepted `n`: does
/// `(X+a)^(n/p) = X^(n/p) + a` hold in `Z/p[X] / (X^r - 1)`?
pub fn congruence_lemma_check(n: &BigUint, p: u64, r: u64, a: u64) -> Result<bool, Error> {
    if !crate::numtheory::trial_division_is_prime_u64(p) {
        return Err(Error::precondition(format!("p must be prime, got {p}")));
    }
    if !(n % p).is_zero() {
        return Err(Error::precondition(format!("p = {p} must divide n = {n}")));
    }
    if crate::numtheory::gcd_u64(a % p, p) != 1 {
        return Err(Error::precondition(format!("gcd(a, p) = 1, got a = {a}, p = {p}")));
    }
    if r < 2 {
        return Err(Error::precondition(format!("r >= 2, got {r}")));
    }
    let e = n / p;
    let f = ModPoly::x_plus(p, a % p);
    let g = ModPoly::x_pow_minus_one(p, r as usize);
    let lhs = powmod(&f, &e, &g).expect("X^r - 1 is monic");
    Ok(lhs == x_pow_plus_const(p, &e, r, a))
}

/// Is `m` introspective for `f` over `Z/p` at cycle length `r`:
/// `f(X)^m = f(X^m)` in `Z/p[X] / (X^r - 1)`?
pub fn is_introspective(f: &ModPoly, m: &BigUint, r: u64) -> bool {
    let g = ModPoly::x_pow_minus_one(f.modulus(), r as usize);
    let lhs = powmod(f, m, &g).expect("X^r - 1 is monic");
    let k = (m % r).to_u64().expect("below r");
    let rhs = f.compose_x_pow_mod_cyclic(k, r as usize);
    lhs == rhs
}

/// The residue orbit of an AKS run: all values `(n/p)^i * p^j mod r`,
/// computed as the multiplicative closure of `{1}` under `n/p` and `p`.
/// Its size `t` is the pigeonhole cardinality of the counting argument.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GSet {
    r: u64,
    residues: BTreeSet<u64>,
}

impl GSet {
    pub fn r(&self) -> u64 {
        self.r
    }

    pub fn residues(&self) -> &BTreeSet<u64> {
        &self.residues
    }

    pub fn t(&self) -> u64 {
        self.residues.len() as u64
    }

    pub fn contains(&self, residue: u64) -> bool {
        self.residues.contains(&residue)
    }
}

pub fn g_set(n: &BigUint, p: u64, r: u64) -> Result<GSet, Error> {
    if r == 0 || !n.gcd(&BigUint::from(r)).is_one() {
        return Err(Error::NotCoprime { y: n.clone(), r });
    }
    if p == 0 || !(n % p).is_zero() {
        return Err(Error::precondition(format!("p = {p} must divide n = {n}")));
    }
    let q = ((n / p) % r).to_u64().expect("below r");
    let p_red = p % r;
    let mut residues = BTreeSet::new();
    let mut frontier = vec![1u64 % r];
    residues.insert(1 % r);
    while let Some(x) = frontier.pop() {
        for gen in [q, p_red] {
            let y = (x as u128 * gen as u128 % r as u128) as u64;
            if residues.insert(y) {
                frontier.push(y);
            }
        }
    }
    let t = residues.len() as u64;
    let phi = totient(r);
    if t > phi {
        return Err(Error::PropertyViolation(format!(
            "orbit size {t} exceeds phi({r}) = {phi}"
        )));
    }
    Ok(GSet { r, residues })
}

/// Parameters harvested from a run (or assembled for a fixture), ready
/// for the counting instruments: the orbit, its size `t`, the loop
/// bound `ell`, and the quotient field `Z/p[X]/(h)` with `h` the first
/// irreducible factor of the `r`-th cyclotomic polynomial.
#[derive(Clone, Debug)]
pub struct InstrumentContext {
    pub n: BigUint,
    pub p: u64,
    pub r: u64,
    pub ord_r_n: u64,
    pub t: u64,
    pub ell: u64,
    pub g: GSet,
    pub field: QuotientField,
}

impl InstrumentContext {
    /// Build from an accepted run of the test. Requires the congruence
    /// loop to have actually executed (no small-n shortcut) and `r < p`
    /// so the cyclotomic field exists; runs that stop earlier have
    /// nothing for the instruments to measure.
    pub fn from_accepted_run(n: &BigUint) -> Result<Self, Error> {
        let (verdict, trace) = aks_is_prime(n);
        if verdict != Verdict::Prime {
            return Err(Error::precondition(format!("n = {n} is not accepted")));
        }
        if trace.small_n_shortcut {
            return Err(Error::precondition(format!(
                "n = {n} accepted via the n <= r shortcut; the congruence loop never ran"
            )));
        }
        let r = trace.r;
        let factorization = trial_factorize(n);
        let p = factorization
            .factors
            .iter()
            .rev()
            .map(|(q, _)| q.to_u64().expect("desk-scale factor"))
            .find(|&q| {
                crate::numtheory::mult_order(&BigUint::from(q), r)
                    .map(|ord| ord > 1)
                    .unwrap_or(false)
            })
            .ok_or_else(|| {
                Error::PropertyViolation(format!(
                    "no prime divisor of {n} has multiplicative order above 1 mod {r}"
                ))
            })?;
        Self::from_parts(n.clone(), p, r, trace.ord_r_n, trace.ell)
    }

    /// Assemble directly from parts, validating orbit and field. Used
    /// both by [`Self::from_accepted_run`] and by constructed composite
    /// fixtures for the collision instrument.
    pub fn from_parts(n: BigUint, p: u64, r: u64, ord_r_n: u64, ell: u64) -> Result<Self, Error> {
        if r >= p {
            return Err(Error::precondition(format!(
                "the instrument field needs r < p, got r = {r}, p = {p}"
            )));
        }
        let g = g_set(&n, p, r)?;
        let t = g.t();
        let field = QuotientField::from_cyclotomic(p, r)?;
        // The two rank-domain counts coincide: choosing t-1 of t+ell is
        // choosing which ell+1 to leave out.
        let lhs = binom(t + ell, t.saturating_sub(1));
        let rhs = binom(t + ell, ell + 1);
        if t >= 1 && lhs != rhs {
            return Err(Error::PropertyViolation(format!(
                "binom({}, {}) = {lhs} differs from binom({}, {}) = {rhs}",
                t + ell,
                t - 1,
                t + ell,
                ell + 1
            )));
        }
        Ok(InstrumentContext {
            n,
            p,
            r,
            ord_r_n,
            t,
            ell,
            g,
            field,
        })
    }

    pub fn rank_count(&self) -> BigUint {
        binom(self.t + self.ell, self.ell + 1)
    }
}

/// Product of shifted linears `prod (X+a)^(e_a)` over `Z/p`, degrees
/// small enough to build densely.
pub fn shifted_linear_product(p: u64, exponents: &[u64]) -> ModPoly {
    let mut acc = ModPoly::one(p);
    for (a, &e) in exponents.iter().enumerate() {
        let lin = ModPoly::x_plus(p, a as u64 % p);
        for _ in 0..e {
            acc = acc.mul(&lin);
        }
    }
    acc
}

/// The rank-indexed product family of the counting argument:
/// `tau(rank) = prod (X+a)^(e_a) mod (h, p)` with the exponent tuple
/// unranked combinatorially. Distinct ranks give distinct residues on
/// accepted prime runs.
pub fn tau(ctx: &InstrumentContext, rank: &BigUint) -> Result<ModPoly, Error> {
    let tuple = exponent_tuple_at_rank(ctx.t, ctx.ell, rank)?;
    let product = shifted_linear_product(ctx.p, &tuple);
    Ok(ctx.field.reduce(&product))
}

/// Greedy membership test for the product family: repeatedly strip the
/// smallest `X+a`, `a <= ell`, that divides the canonical
/// representative, at most `t - 1` strips in total. Membership means
/// the representative is exactly such a product with exponent sum
/// below `t`; the accumulated tuple is returned.
pub fn p_hat_membership(
    f: &ModPoly,
    t: u64,
    ell: u64,
    field: &QuotientField,
) -> Option<Vec<u64>> {
    let mut rem = field.reduce(f);
    if rem.is_zero() || t == 0 {
        return None;
    }
    let p = field.p();
    let mut tuple = vec![0u64; ell as usize + 1];
    let mut strips = 0u64;
    'outer: while !rem.is_one() {
        for a in 0..=ell {
            // X + a divides rem exactly when -a is a root.
            if rem.eval(neg_mod(a, p)) == 0 {
                if strips == t - 1 {
                    return None;
                }
                let (q, r) = crate::polyring::poly_long_div(&rem, &ModPoly::x_plus(p, a % p))
                    .expect("monic linear divisor");
                debug_assert!(r.is_zero());
                rem = q;
                tuple[a as usize] += 1;
                strips += 1;
                continue 'outer;
            }
        }
        return None;
    }
    Some(tuple)
}

fn neg_mod(a: u64, p: u64) -> u64 {
    (p - a % p) % p
}

/// The first repeated residue among the grid of products
/// `(n/p)^i * p^j mod r`, `0 <= i, j <= isqrt(t)`, scanned in grid-rank
/// order: returns `(m1, m2)` with `m1 > m2` and `m1 = m2 (mod r)`.
/// The pigeonhole `t < (isqrt(t)+1)^2` guarantees a collision.
pub fn grid_collision(ctx: &InstrumentContext) -> Result<(BigUint, BigUint), Error> {
    let k = ctx.t.sqrt();
    let base_q = &ctx.n / ctx.p;
    let base_p = BigUint::from(ctx.p);
    let r = ctx.r;
    let mut seen: Vec<(u64, BigUint)> = Vec::new();
    for l in 1..=(k + 1) * (k + 1) {
        let (i, j) = grid_rank(k, l)?;
        let m = base_q.pow(i as u32) * base_p.pow(j as u32);
        let residue = (&m % r).to_u64().expect("below r");
        if let Some((_, partner)) = seen.iter().find(|(res, _)| *res == residue) {
            let (m1, m2) = if m > *partner {
                (m, partner.clone())
            } else {
                (partner.clone(), m)
            };
            if m1 == m2 {
                return Err(Error::PropertyViolation(format!(
                    "grid entries repeat the value {m1} itself, not just its residue mod {r}"
                )));
            }
            let bound = ctx.n.pow(k as u32);
            if m1 > bound {
                return Err(Error::PropertyViolation(format!(
                    "collision value {m1} exceeds n^isqrt(t) = {bound}"
                )));
            }
            return Ok((m1, m2));
        }
        seen.push((residue, m));
    }
    Err(Error::PropertyViolation(format!(
        "no residue collision among {} grid products mod {r}, contradicting the pigeonhole",
        (k + 1) * (k + 1)
    )))
}

/// Root index of a product-family member: every such `f` is a root of
/// `Y^m1 - Y^m2` in the quotient field, and its 1-based position among
/// the roots (elements scanned in canonical rank order) is an injective
/// label bounded by the polynomial degree `m1 <= n^isqrt(t)`.
pub fn ghat(ctx: &InstrumentContext, f: &ModPoly) -> Result<BigUint, Error> {
    let reduced_n = {
        let val = ctx.n.clone();
        let p = BigUint::from(ctx.p);
        let mut rest = val;
        while (&rest % &p).is_zero() {
            rest /= &p;
        }
        rest
    };
    if reduced_n.is_one() {
        return Err(Error::precondition(format!(
            "n = {} is a power of p = {}; the collision argument needs another prime factor",
            ctx.n, ctx.p
        )));
    }
    let (m1, m2) = grid_collision(ctx)?;
    let poly = SparsePoly::new(vec![
        (m2.clone(), ModPoly::constant(ctx.p, ctx.p - 1)),
        (m1.clone(), ModPoly::one(ctx.p)),
    ]);
    let roots = root_indices_in_field(&ctx.field, &poly)?;
    let target = ctx.field.reduce(f);
    roots
        .into_iter()
        .find(|(root, _)| *root == target)
        .map(|(_, index)| index)
        .ok_or_else(|| Error::NotARoot(format!("{target} is not a root of Y^{m1} - Y^{m2}")))
}

/// One inequality of the chain, with both sides materialized for the
/// report.
#[derive(Clone, Debug, Serialize)]
pub struct ChainStep {
    pub label: String,
    #[serde(with = "dec_string")]
    pub lhs: BigUint,
    pub relation: &'static str,
    #[serde(with = "dec_string")]
    pub rhs: BigUint,
    pub holds: bool,
}

/// The four-step binomial chain that the counting argument closes
/// with, evaluated by exact arithmetic, plus the end-to-end comparison
/// of its two ends. `all_steps_hold` requires every intermediate link;
/// the ends can compare correctly even when a middle link fails.
#[derive(Clone, Debug, Serialize)]
pub struct InequalityChainReport {
    #[serde(with = "dec_string")]
    pub n: BigUint,
    #[serde(with = "dec_string")]
    pub r: u64,
    #[serde(with = "dec_string")]
    pub t: u64,
    #[serde(with = "dec_string")]
    pub ell: u64,
    #[serde(with = "dec_string")]
    pub s: u64,
    pub steps: Vec<ChainStep>,
    pub all_steps_hold: bool,
    pub end_to_end_holds: bool,
}

fn chain_step(label: &str, lhs: BigUint, relation: &'static str, rhs: BigUint) -> ChainStep {
    let holds = match relation {
        ">=" => lhs >= rhs,
        ">" => lhs > rhs,
        other => unreachable!("unknown relation {other}"),
    };
    ChainStep {
        label: label.to_string(),
        lhs,
        relation,
        rhs,
        holds,
    }
}

/// Evaluate `binom(t+ell, t-1) >= binom(ell+1+s, s) >= binom(2s+1, s)
/// > 2^(s+2) >= 2 * n^isqrt(t)` with `s = isqrt(t) * (bitlen(n) - 1)`,
/// step by step. Requires `s >= 6` (the middle binomial bound needs
/// it) and `t >= 1`.
pub fn lemma_h_inequality_chain(
    n: &BigUint,
    r: u64,
    t: u64,
    ell: u64,
) -> Result<InequalityChainReport, Error> {
    if t == 0 {
        return Err(Error::precondition("t must be at least 1"));
    }
    let sqrt_t = t.sqrt();
    let log_n = bitlen(n).saturating_sub(1);
    let s = sqrt_t * log_n;
    if s < 6 {
        return Err(Error::precondition(format!(
            "the chain needs isqrt(t) * (bitlen(n) - 1) >= 6, got {s}"
        )));
    }
    let two_pow = BigUint::from(2u32).pow((s + 2) as u32);
    let target = BigUint::from(2u32) * n.pow(sqrt_t as u32);
    let steps = vec![
        chain_step(
            "binom(t+ell, t-1) >= binom(ell+1+s, s)",
            binom(t + ell, t - 1),
            ">=",
            binom(ell + 1 + s, s),
        ),
        chain_step(
            "binom(ell+1+s, s) >= binom(2s+1, s)",
            binom(ell + 1 + s, s),
            ">=",
            binom(2 * s + 1, s),
        ),
        chain_step(
            "binom(2s+1, s) > 2^(s+2)",
            binom(2 * s + 1, s),
            ">",
            two_pow.clone(),
        ),
        chain_step("2^(s+2) >= 2 * n^isqrt(t)", two_pow, ">", target.clone()),
    ];
    let all_steps_hold = steps.iter().all(|s| s.holds);
    let end_to_end_holds = binom(t + ell, t - 1) > target;
    Ok(InequalityChainReport {
        n: n.clone(),
        r,
        t,
        ell,
        s,
        steps,
        all_steps_hold,
        end_to_end_holds,
    })
}
