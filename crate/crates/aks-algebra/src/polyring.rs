//! Dense polynomials over `Z/m`, with field-only extras (Euclid, gcd,
//! cyclotomic construction, irreducible factors, quotient fields, root
//! indexing) layered on top of ring arithmetic that also works for
//! composite moduli.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::error::Error;
use crate::numtheory::{gcd_u64, totient};

/// A polynomial over `Z/modulus` as a normalized coefficient vector:
/// `coeffs[i]` multiplies `X^i`, every coefficient lies in
/// `[0, modulus)`, and the vector carries no trailing zeros. The zero
/// polynomial is the empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModPoly {
    modulus: u64,
    coeffs: Vec<u64>,
}

impl ModPoly {
    /// Build from raw coefficients (`coeffs[i]` on `X^i`), reducing and
    /// trimming as needed.
    pub fn new(modulus: u64, coeffs: Vec<u64>) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.into_iter().map(|c| c % modulus).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        ModPoly { modulus, coeffs }
    }

    pub fn zero(modulus: u64) -> Self {
        ModPoly::new(modulus, vec![])
    }

    pub fn one(modulus: u64) -> Self {
        ModPoly::new(modulus, vec![1])
    }

    pub fn constant(modulus: u64, c: u64) -> Self {
        ModPoly::new(modulus, vec![c])
    }

    /// The monomial `X`.
    pub fn x(modulus: u64) -> Self {
        ModPoly::new(modulus, vec![0, 1])
    }

    /// The linear polynomial `X + a`.
    pub fn x_plus(modulus: u64, a: u64) -> Self {
        ModPoly::new(modulus, vec![a, 1])
    }

    /// The monomial `X^k`.
    pub fn x_pow(modulus: u64, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = 1;
        ModPoly::new(modulus, coeffs)
    }

    /// The binomial `X^r - 1`, the reduction polynomial of the
    /// congruence loop.
    pub fn x_pow_minus_one(modulus: u64, r: usize) -> Self {
        assert!(r >= 1);
        let mut coeffs = vec![0; r + 1];
        coeffs[0] = modulus - 1;
        coeffs[r] = 1;
        ModPoly::new(modulus, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Degree, or `None` for the zero polynomial. `None` sorts below
    /// every actual degree, which is exactly the contract remainders
    /// must satisfy.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn leading_coeff(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == Some(1)
    }

    fn assert_same_modulus(&self, other: &ModPoly) {
        assert_eq!(
            self.modulus, other.modulus,
            "mixed moduli: {} vs {}",
            self.modulus, other.modulus
        );
    }

    pub fn add(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let m = self.modulus;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| addmod(self.coeff(i), other.coeff(i), m))
            .collect();
        ModPoly::new(m, coeffs)
    }

    pub fn sub(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let m = self.modulus;
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len)
            .map(|i| addmod(self.coeff(i), m - other.coeff(i) % m, m))
            .collect();
        ModPoly::new(m, coeffs)
    }

    pub fn neg(&self) -> ModPoly {
        ModPoly::zero(self.modulus).sub(self)
    }

    pub fn mul(&self, other: &ModPoly) -> ModPoly {
        self.assert_same_modulus(other);
        let m = self.modulus;
        if self.is_zero() || other.is_zero() {
            return ModPoly::zero(m);
        }
        let out_len = self.coeffs.len() + other.coeffs.len() - 1;
        let mut acc = vec![0u128; out_len];
        if m < (1 << 32) {
            // Products stay below 2^64, so sums of any realistic length
            // fit in u128 and one reduction per output coefficient does.
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u128;
                for (j, &b) in other.coeffs.iter().enumerate() {
                    acc[i + j] += a * b as u128;
                }
            }
        } else {
            for (i, &a) in self.coeffs.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                let a = a as u128;
                let m128 = m as u128;
                for (j, &b) in other.coeffs.iter().enumerate() {
                    acc[i + j] += a * b as u128 % m128;
                }
            }
        }
        let m128 = m as u128;
        ModPoly::new(m, acc.into_iter().map(|v| (v % m128) as u64).collect())
    }

    pub fn scale(&self, c: u64) -> ModPoly {
        let m = self.modulus;
        let c = c % m;
        let coeffs = self
            .coeffs
            .iter()
            .map(|&a| (a as u128 * c as u128 % m as u128) as u64)
            .collect();
        ModPoly::new(m, coeffs)
    }

    /// Divide through by the leading coefficient. Fails when that
    /// coefficient is not invertible mod the modulus.
    pub fn make_monic(&self) -> Result<ModPoly, Error> {
        let lc = self.leading_coeff().ok_or(Error::ZeroDivisor)?;
        if lc == 1 {
            return Ok(self.clone());
        }
        let inv = inv_mod_u64(lc, self.modulus).ok_or(Error::NonInvertibleLeading {
            lc,
            modulus: self.modulus,
        })?;
        Ok(self.scale(inv))
    }

    /// Substitute `X^k` for `X`.
    pub fn compose_x_pow(&self, k: usize) -> ModPoly {
        assert!(k >= 1);
        let mut coeffs = vec![0; self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = a;
        }
        ModPoly::new(self.modulus, coeffs)
    }

    /// Substitute `X^k` for `X` and reduce mod `X^r - 1` in one pass:
    /// the coefficient on `X^i` lands on `X^(i*k mod r)`.
    pub fn compose_x_pow_mod_cyclic(&self, k: u64, r: usize) -> ModPoly {
        let m = self.modulus;
        let mut acc = vec![0u64; r];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let pos = ((i as u128 * k as u128) % r as u128) as usize;
            acc[pos] = addmod(acc[pos], a, m);
        }
        ModPoly::new(m, acc)
    }

    /// Substitute a polynomial for `X`, reducing mod `g` throughout
    /// (Horner over the quotient ring).
    pub fn compose_mod(&self, inner: &ModPoly, g: &ModPoly) -> Result<ModPoly, Error> {
        self.assert_same_modulus(inner);
        self.assert_same_modulus(g);
        let m = self.modulus;
        let mut acc = ModPoly::zero(m);
        for &a in self.coeffs.iter().rev() {
            acc = rem_with_invertible_lead(&acc.mul(inner), g)?;
            acc = acc.add(&ModPoly::constant(m, a));
        }
        Ok(acc)
    }

    /// Evaluate at a point by Horner's rule.
    pub fn eval(&self, x: u64) -> u64 {
        let m = self.modulus as u128;
        let x = x as u128 % m;
        let mut acc = 0u128;
        for &a in self.coeffs.iter().rev() {
            acc = (acc * x + a as u128) % m;
        }
        acc as u64
    }

    /// Formal derivative.
    pub fn derivative(&self) -> ModPoly {
        let m = self.modulus;
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| (a as u128 * (i as u128 % m as u128) % m as u128) as u64)
            .collect();
        ModPoly::new(m, coeffs)
    }
}

impl fmt::Debug for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} (mod {})", self.modulus)
    }
}

impl fmt::Display for ModPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &a) in self.coeffs.iter().enumerate().rev() {
            if a == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (i, a) {
                (0, _) => write!(f, "{a}")?,
                (1, 1) => write!(f, "X")?,
                (1, _) => write!(f, "{a}X")?,
                (_, 1) => write!(f, "X^{i}")?,
                (_, _) => write!(f, "{a}X^{i}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn addmod(a: u64, b: u64, m: u64) -> u64 {
    let s = a as u128 + b as u128;
    (s % m as u128) as u64
}

pub(crate) fn inv_mod_u64(a: u64, m: u64) -> Option<u64> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        let r2 = r0 - q * r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = t0 - q * t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if r0 != 1 {
        return None;
    }
    Some(((t0 % m as i128 + m as i128) % m as i128) as u64)
}

/// Quotient and remainder of dense polynomial division; requires a
/// divisor whose leading coefficient is invertible mod the modulus
/// (always true over a prime field, and true for monic divisors over
/// any ring).
pub fn poly_long_div(p: &ModPoly, s: &ModPoly) -> Result<(ModPoly, ModPoly), Error> {
    p.assert_same_modulus(s);
    let m = p.modulus;
    let ds = s.degree().ok_or(Error::ZeroDivisor)?;
    let lc = s.leading_coeff().expect("nonzero divisor");
    let lc_inv = inv_mod_u64(lc, m).ok_or(Error::NonInvertibleLeading { lc, modulus: m })?;
    let dp = match p.degree() {
        Some(dp) if dp >= ds => dp,
        _ => return Ok((ModPoly::zero(m), p.clone())),
    };
    let m128 = m as u128;
    let mut rem = p.coeffs.clone();
    let mut quot = vec![0u64; dp - ds + 1];
    for k in (ds..=dp).rev() {
        let factor = (rem[k] as u128 * lc_inv as u128 % m128) as u64;
        if factor == 0 {
            continue;
        }
        quot[k - ds] = factor;
        for i in 0..=ds {
            let sub = factor as u128 * s.coeffs[i] as u128 % m128;
            let idx = k - ds + i;
            rem[idx] = ((rem[idx] as u128 + m128 - sub) % m128) as u64;
        }
    }
    Ok((ModPoly::new(m, quot), ModPoly::new(m, rem)))
}

/// Remainder only; same divisibility requirement as [`poly_long_div`].
fn rem_with_invertible_lead(p: &ModPoly, s: &ModPoly) -> Result<ModPoly, Error> {
    Ok(poly_long_div(p, s)?.1)
}

/// Monic gcd of two polynomials over a prime field.
pub fn poly_gcd(f: &ModPoly, g: &ModPoly) -> Result<ModPoly, Error> {
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = rem_with_invertible_lead(&a, &b)?;
        a = std::mem::replace(&mut b, r);
    }
    a.make_monic()
}

/// Extended Euclid over a prime field: returns `(h, u, v)` with `h`
/// monic, `h = u*f + v*g`, and `h` dividing both inputs.
pub fn poly_xgcd(f: &ModPoly, g: &ModPoly) -> Result<(ModPoly, ModPoly, ModPoly), Error> {
    f.assert_same_modulus(g);
    if f.is_zero() && g.is_zero() {
        return Err(Error::BothZero);
    }
    let m = f.modulus;
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut u0, mut u1) = (ModPoly::one(m), ModPoly::zero(m));
    let (mut v0, mut v1) = (ModPoly::zero(m), ModPoly::one(m));
    while !r1.is_zero() {
        let (q, r2) = poly_long_div(&r0, &r1)?;
        r0 = std::mem::replace(&mut r1, r2);
        let u2 = u0.sub(&q.mul(&u1));
        u0 = std::mem::replace(&mut u1, u2);
        let v2 = v0.sub(&q.mul(&v1));
        v0 = std::mem::replace(&mut v1, v2);
    }
    let lc = r0.leading_coeff().expect("nonzero gcd");
    let inv = inv_mod_u64(lc, m).ok_or(Error::NonInvertibleLeading { lc, modulus: m })?;
    Ok((r0.scale(inv), u0.scale(inv), v0.scale(inv)))
}

/// If `g` is `X^r - 1`, the degree `r`; reduction mod such `g` is a
/// plain exponent fold, no division needed.
fn cyclic_degree(g: &ModPoly) -> Option<usize> {
    let d = g.degree()?;
    if d < 1 || g.coeffs[d] != 1 || g.coeffs[0] != g.modulus - 1 {
        return None;
    }
    if g.coeffs[1..d].iter().any(|&c| c != 0) {
        return None;
    }
    Some(d)
}

/// Fold coefficients into `[0, r)` exponent buckets: reduction mod `X^r - 1`.
fn cyclic_fold(f: &ModPoly, r: usize) -> Vec<u64> {
    let m = f.modulus;
    let mut acc = vec![0u64; r];
    for (i, &a) in f.coeffs.iter().enumerate() {
        acc[i % r] = addmod(acc[i % r], a, m);
    }
    acc
}

/// Cyclic product of two length-`r` coefficient vectors mod `m`
/// (multiplication in `Z/m[X] / (X^r - 1)`).
fn cyclic_mul(a: &[u64], b: &[u64], m: u64, out: &mut Vec<u128>) -> Vec<u64> {
    let r = a.len();
    out.clear();
    out.resize(r, 0);
    if m < (1 << 32) {
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = ai as u128;
            // X^i * X^j is X^(i+j) for j < r-i and wraps to X^(i+j-r)
            // after that; splitting at i writes each half branch-free.
            let (head, tail) = out.split_at_mut(i);
            for (j, &bj) in b[..r - i].iter().enumerate() {
                tail[j] += ai * bj as u128;
            }
            for (j, &bj) in b[r - i..].iter().enumerate() {
                head[j] += ai * bj as u128;
            }
        }
    } else {
        let m128 = m as u128;
        for (i, &ai) in a.iter().enumerate() {
            if ai == 0 {
                continue;
            }
            let ai = ai as u128;
            for (j, &bj) in b.iter().enumerate() {
                let mut k = i + j;
                if k >= r {
                    k -= r;
                }
                out[k] += ai * bj as u128 % m128;
            }
        }
    }
    let m128 = m as u128;
    out.iter().map(|&v| (v % m128) as u64).collect()
}

/// `f^e mod (g, modulus)` by square-and-multiply, reducing mod `g` after
/// every multiplication. `g` must have an invertible leading coefficient;
/// reduction mod `X^r - 1` takes a dedicated cyclic path.
pub fn powmod(f: &ModPoly, e: &BigUint, g: &ModPoly) -> Result<ModPoly, Error> {
    f.assert_same_modulus(g);
    let m = f.modulus;
    if let Some(r) = cyclic_degree(g) {
        let base = cyclic_fold(f, r);
        let mut acc = vec![0u64; r];
        acc[0] = 1;
        let mut scratch = Vec::new();
        for i in (0..e.bits()).rev() {
            acc = cyclic_mul(&acc, &acc, m, &mut scratch);
            if e.bit(i) {
                acc = cyclic_mul(&acc, &base, m, &mut scratch);
            }
        }
        return Ok(ModPoly::new(m, acc));
    }
    let g = g.make_monic()?;
    let base = rem_with_invertible_lead(f, &g)?;
    let mut acc = rem_with_invertible_lead(&ModPoly::one(m), &g)?;
    for i in (0..e.bits()).rev() {
        acc = rem_with_invertible_lead(&acc.mul(&acc), &g)?;
        if e.bit(i) {
            acc = rem_with_invertible_lead(&acc.mul(&base), &g)?;
        }
    }
    Ok(acc)
}

/// The `r`-th cyclotomic polynomial over `Z/p`, built by exact division:
/// `Q_1 = X - 1` and `Q_r = (X^r - 1) / prod of Q_d over proper divisors
/// d of r`. Requires `r < p`, which keeps `X^r - 1` squarefree.
pub fn cyclotomic(p: u64, r: u64) -> Result<ModPoly, Error> {
    if r == 0 || r >= p {
        return Err(Error::precondition(format!("1 <= r < p, got r = {r}, p = {p}")));
    }
    let mut memo: HashMap<u64, ModPoly> = HashMap::new();
    let mut divisors: Vec<u64> = (1..=r).filter(|d| r % d == 0).collect();
    divisors.sort_unstable();
    for &d in &divisors {
        let q = if d == 1 {
            ModPoly::new(p, vec![p - 1, 1])
        } else {
            let mut denom = ModPoly::one(p);
            for &d2 in divisors.iter().filter(|&&d2| d2 < d && d % d2 == 0) {
                denom = denom.mul(&memo[&d2]);
            }
            let numer = ModPoly::x_pow_minus_one(p, d as usize);
            let (quot, rem) = poly_long_div(&numer, &denom)?;
            if !rem.is_zero() {
                return Err(Error::PropertyViolation(format!(
                    "cyclotomic division for r = {d} over Z/{p} left remainder {rem}"
                )));
            }
            quot
        };
        if q.degree() != Some(totient(d) as usize) {
            return Err(Error::PropertyViolation(format!(
                "cyclotomic factor for r = {d} over Z/{p} has degree {:?}, expected phi({d})",
                q.degree()
            )));
        }
        memo.insert(d, q);
    }
    Ok(memo.remove(&r).expect("r is its own divisor"))
}

/// Canonical order on polynomials: by degree, then lexicographically on
/// the coefficient sequence read from the constant term upward.
pub fn canonical_cmp(a: &ModPoly, b: &ModPoly) -> Ordering {
    a.coeffs
        .len()
        .cmp(&b.coeffs.len())
        .then_with(|| a.coeffs.cmp(&b.coeffs))
}

/// The monic degree-`d` polynomial at position `idx` in canonical order
/// (constant term the most significant digit of `idx` base `m`).
fn monic_at_index(m: u64, d: usize, idx: u64) -> ModPoly {
    let mut coeffs = vec![0u64; d + 1];
    coeffs[d] = 1;
    let mut rest = idx;
    for i in (0..d).rev() {
        coeffs[i] = rest % m;
        rest /= m;
    }
    ModPoly::new(m, coeffs)
}

const LITERAL_SCAN_LIMIT: u64 = 100_000;

/// A monic irreducible divisor of `f` over a prime field: the first
/// divisor in canonical order (degree ascending, then constant-term-first
/// lex), or `f` made monic when `f` is irreducible. Small candidate
/// spaces are scanned literally; past [`LITERAL_SCAN_LIMIT`] candidates
/// per degree, a gcd sieve against `X^(p^d) - X` finds the same factor
/// without enumerating.
pub fn irreducible_factor(f: &ModPoly) -> Result<ModPoly, Error> {
    let deg = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return Err(Error::precondition("a polynomial of degree at least 1")),
    };
    let p = f.modulus;
    let fm = f.make_monic()?;
    let mut frobenius: Option<ModPoly> = None;
    let mut frobenius_level = 0usize;
    for d in 1..=deg / 2 {
        if checked_pow_at_most(p, d as u32, LITERAL_SCAN_LIMIT) {
            let count = p.pow(d as u32);
            for idx in 0..count {
                let cand = monic_at_index(p, d, idx);
                if rem_with_invertible_lead(&fm, &cand)?.is_zero() {
                    return Ok(cand);
                }
            }
            continue;
        }
        while frobenius_level < d {
            let cur = match frobenius.take() {
                Some(cur) => cur,
                None => rem_with_invertible_lead(&ModPoly::x(p), &fm)?,
            };
            frobenius = Some(powmod(&cur, &BigUint::from(p), &fm)?);
            frobenius_level += 1;
        }
        let xpd = frobenius.clone().expect("advanced above");
        let diff = xpd.sub(&ModPoly::x(p));
        if diff.is_zero() {
            // Every irreducible factor has degree dividing d; the least
            // degree with a factor is found by splitting f itself.
            let mut factors = berlekamp_factor(&fm)?;
            factors.sort_by(canonical_cmp);
            return Ok(factors.swap_remove(0));
        }
        let g = poly_gcd(&fm, &diff)?;
        match g.degree() {
            None | Some(0) => continue,
            Some(gd) if gd == d => return Ok(g),
            Some(_) => {
                // Several factors share the minimal degree d; split g and
                // take the canonically least, matching what a literal scan
                // of degree-d candidates would have returned.
                let mut factors = berlekamp_factor(&g)?;
                factors.sort_by(canonical_cmp);
                return Ok(factors.swap_remove(0));
            }
        }
    }
    Ok(fm)
}

fn checked_pow_at_most(base: u64, exp: u32, limit: u64) -> bool {
    match base.checked_pow(exp) {
        Some(v) => v <= limit,
        None => false,
    }
}

/// Deterministic Berlekamp factorization of a squarefree monic
/// polynomial over a prime field. Splitting scans candidate constants in
/// ascending order, so the factor list is reproducible.
fn berlekamp_factor(g: &ModPoly) -> Result<Vec<ModPoly>, Error> {
    let p = g.modulus;
    let n = g.degree().ok_or(Error::ZeroDivisor)?;
    if n == 1 {
        return Ok(vec![g.clone()]);
    }
    // Rows of the Frobenius matrix: X^(i*p) mod g for i = 0..n.
    let xp = powmod(&ModPoly::x(p), &BigUint::from(p), g)?;
    let mut rows: Vec<Vec<u64>> = Vec::with_capacity(n);
    let mut cur = ModPoly::one(p);
    for _ in 0..n {
        let mut row = vec![0u64; n];
        row[..cur.coeffs.len()].copy_from_slice(&cur.coeffs);
        rows.push(row);
        cur = rem_with_invertible_lead(&cur.mul(&xp), g)?;
    }
    // Nullspace of (Frobenius - I): the fixed polynomials of X -> X^p.
    for (i, row) in rows.iter_mut().enumerate() {
        row[i] = (row[i] + p - 1) % p;
    }
    let basis = nullspace_mod_p(&rows, p);
    let factor_count = basis.len();
    let mut factors = vec![g.clone()];
    if factor_count == 1 {
        return Ok(factors);
    }
    for v in &basis {
        let vpoly = ModPoly::new(p, v.clone());
        if vpoly.degree().map_or(true, |d| d == 0) {
            continue;
        }
        let mut next = Vec::with_capacity(factors.len());
        for fac in factors {
            if fac.degree() == Some(1) {
                next.push(fac);
                continue;
            }
            let mut pieces = vec![fac];
            for c in 0..p {
                let mut split_out = Vec::with_capacity(pieces.len());
                for piece in pieces {
                    let shifted = vpoly.sub(&ModPoly::constant(p, c));
                    let h = poly_gcd(&piece, &shifted)?;
                    match h.degree() {
                        None | Some(0) => split_out.push(piece),
                        Some(hd) if hd == piece.degree().unwrap() => split_out.push(piece),
                        Some(_) => {
                            let (q, r) = poly_long_div(&piece, &h)?;
                            debug_assert!(r.is_zero());
                            split_out.push(h);
                            split_out.push(q.make_monic()?);
                        }
                    }
                }
                pieces = split_out;
            }
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == factor_count {
            break;
        }
    }
    Ok(factors)
}

/// Transposed-free nullspace basis of a square matrix mod p (rows are the
/// matrix rows). Returns one basis vector per free column.
fn nullspace_mod_p(matrix: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = matrix.len();
    // Work on the transpose: we need vectors v with v * M = 0 where rows
    // of M are images; X^(i*p) coefficients are stored row-wise, so a
    // combination sum_i v_i * row_i = 0 is what we solve.
    let mut m: Vec<Vec<u64>> = (0..n)
        .map(|col| (0..n).map(|row| matrix[row][col]).collect())
        .collect();
    let p128 = p as u128;
    let mut pivot_of_col: Vec<Option<usize>> = vec![None; n];
    let mut row = 0;
    for col in 0..n {
        let Some(pivot) = (row..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(row, pivot);
        let inv = inv_mod_u64(m[row][col], p).expect("prime modulus");
        for x in m[row].iter_mut() {
            *x = (*x as u128 * inv as u128 % p128) as u64;
        }
        for r in 0..n {
            if r != row && m[r][col] != 0 {
                let factor = m[r][col] as u128;
                for c in 0..n {
                    let sub = factor * m[row][c] as u128 % p128;
                    m[r][c] = ((m[r][c] as u128 + p128 - sub) % p128) as u64;
                }
            }
        }
        pivot_of_col[col] = Some(row);
        row += 1;
    }
    let mut basis = Vec::new();
    for free in 0..n {
        if pivot_of_col[free].is_some() {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free] = 1;
        for col in 0..n {
            if let Some(prow) = pivot_of_col[col] {
                let coeff = m[prow][free];
                if coeff != 0 {
                    v[col] = p - coeff;
                }
            }
        }
        basis.push(v);
    }
    basis
}

/// Enumerating every element of a field larger than this is refused.
pub const FIELD_ENUMERATION_LIMIT: u64 = 2_000_000;

/// The field `Z/p[X] / (h)` for a monic irreducible `h` of degree at
/// least 2, with a canonical rank for every element: ranks enumerate
/// coefficient tuples `(c_0, ..., c_(d-1))` in lexicographic order with
/// the constant term `c_0` the most significant digit.
#[derive(Clone, Debug)]
pub struct QuotientField {
    p: u64,
    h: ModPoly,
}

impl QuotientField {
    /// Build the field, verifying the shape of `h`: monic, degree at
    /// least 2, and irreducible (checked with [`irreducible_factor`]).
    pub fn new(p: u64, h: ModPoly) -> Result<Self, Error> {
        if h.modulus() != p {
            return Err(Error::precondition(format!(
                "h must live over Z/{p}, got modulus {}",
                h.modulus()
            )));
        }
        if !h.is_monic() || h.degree().map_or(true, |d| d < 2) {
            return Err(Error::precondition(format!(
                "h must be monic of degree at least 2, got {h}"
            )));
        }
        let factor = irreducible_factor(&h)?;
        if factor != h {
            return Err(Error::precondition(format!(
                "h must be irreducible, but {factor} divides {h}"
            )));
        }
        Ok(QuotientField { p, h })
    }

    /// The field for the congruence argument: `h` is the first
    /// irreducible factor of the `r`-th cyclotomic polynomial over
    /// `Z/p`. Requires `r < p`, `gcd(p, r) = 1`, and that `r` does not
    /// divide `p - 1` (which forces `deg h >= 2`).
    pub fn from_cyclotomic(p: u64, r: u64) -> Result<Self, Error> {
        if r == 0 || r >= p {
            return Err(Error::precondition(format!("1 <= r < p, got r = {r}, p = {p}")));
        }
        if gcd_u64(p, r) != 1 {
            return Err(Error::precondition(format!("gcd(p, r) = 1, got p = {p}, r = {r}")));
        }
        if (p - 1) % r == 0 {
            return Err(Error::precondition(format!(
                "r must not divide p - 1, got r = {r}, p = {p}"
            )));
        }
        let q = cyclotomic(p, r)?;
        let h = irreducible_factor(&q)?;
        let d = h.degree().expect("cyclotomic factors are nonzero");
        if d < 2 {
            return Err(Error::PropertyViolation(format!(
                "irreducible factor {h} of the cyclotomic polynomial for r = {r} over Z/{p} \
                 has degree {d}, expected at least 2"
            )));
        }
        // deg h is the multiplicative order of p mod r, so X keeps order
        // r in the quotient: h divides no earlier X^k - 1.
        for k in 1..r {
            let (_, rem) = poly_long_div(&ModPoly::x_pow_minus_one(p, k as usize), &h)?;
            if rem.is_zero() {
                return Err(Error::PropertyViolation(format!(
                    "factor {h} divides X^{k} - 1 with k = {k} < r = {r}"
                )));
            }
        }
        Ok(QuotientField { p, h })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn modulus_poly(&self) -> &ModPoly {
        &self.h
    }

    pub fn degree(&self) -> usize {
        self.h.degree().expect("h is nonzero")
    }

    /// Number of elements, `p^deg(h)`.
    pub fn size(&self) -> BigUint {
        BigUint::from(self.p).pow(self.degree() as u32)
    }

    /// Canonical representative of a residue: the remainder mod `h`.
    pub fn reduce(&self, f: &ModPoly) -> ModPoly {
        poly_long_div(f, &self.h).expect("h is monic").1
    }

    pub fn add(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.reduce(&a.add(b))
    }

    pub fn sub(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.reduce(&a.sub(b))
    }

    pub fn mul(&self, a: &ModPoly, b: &ModPoly) -> ModPoly {
        self.reduce(&a.mul(b))
    }

    pub fn pow(&self, f: &ModPoly, e: &BigUint) -> ModPoly {
        powmod(f, e, &self.h).expect("h is monic")
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self, f: &ModPoly) -> Result<ModPoly, Error> {
        let red = self.reduce(f);
        if red.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        let (g, u, _) = poly_xgcd(&red, &self.h)?;
        if !g.is_one() {
            return Err(Error::PropertyViolation(format!(
                "gcd of {red} with the irreducible modulus {} is {g}, not 1",
                self.h
            )));
        }
        Ok(self.reduce(&u))
    }

    /// The element at a canonical rank in `[0, size)`.
    pub fn element_at_rank(&self, rank: &BigUint) -> Result<ModPoly, Error> {
        let size = self.size();
        if rank >= &size {
            return Err(Error::RankOutOfRange {
                rank: rank.clone(),
                max: size - 1u32,
            });
        }
        let d = self.degree();
        let p = BigUint::from(self.p);
        let mut coeffs = vec![0u64; d];
        let mut rest = rank.clone();
        for c in coeffs.iter_mut().rev() {
            *c = (&rest % &p).to_u64().expect("digit below p");
            rest /= &p;
        }
        Ok(ModPoly::new(self.p, coeffs))
    }

    /// The canonical rank of an element (a polynomial of degree below
    /// `deg h`): its coefficient tuple read as base-`p` digits, constant
    /// term most significant.
    pub fn rank_of(&self, f: &ModPoly) -> Result<BigUint, Error> {
        let d = self.degree();
        if f.degree().map_or(false, |fd| fd >= d) {
            return Err(Error::DegreeExceedsFrame {
                deg: f.degree().unwrap(),
                frame: d,
            });
        }
        let p = BigUint::from(self.p);
        let mut rank = BigUint::zero();
        for i in 0..d {
            rank = rank * &p + BigUint::from(f.coeff(i));
        }
        Ok(rank)
    }

    /// Iterate every element in canonical rank order. Refused for
    /// fields past [`FIELD_ENUMERATION_LIMIT`].
    pub fn elements(&self) -> Result<impl Iterator<Item = ModPoly> + '_, Error> {
        let size = self
            .size()
            .to_u64()
            .filter(|&s| s <= FIELD_ENUMERATION_LIMIT)
            .ok_or_else(|| Error::FieldTooLarge { size: self.size() })?;
        let d = self.degree();
        let p = self.p;
        Ok((0..size).map(move |rank| {
            let mut coeffs = vec![0u64; d];
            let mut rest = rank;
            for c in coeffs.iter_mut().rev() {
                *c = rest % p;
                rest /= p;
            }
            ModPoly::new(p, coeffs)
        }))
    }
}

/// A polynomial with arbitrary-precision exponents, stored as
/// `(exponent, coefficient)` terms with exponents strictly increasing.
/// Coefficients are whatever ring the caller works in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePoly<C> {
    terms: Vec<(BigUint, C)>,
}

impl<C> SparsePoly<C> {
    /// Build from terms, which must come with strictly increasing
    /// exponents.
    pub fn new(terms: Vec<(BigUint, C)>) -> Self {
        for pair in terms.windows(2) {
            assert!(pair[0].0 < pair[1].0, "exponents must strictly increase");
        }
        SparsePoly { terms }
    }

    pub fn terms(&self) -> &[(BigUint, C)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree, or `None` for the empty sum.
    pub fn degree(&self) -> Option<&BigUint> {
        self.terms.last().map(|(e, _)| e)
    }
}

impl SparsePoly<u64> {
    /// `Y^a - Y^b` with `a > b`, the shape produced by the residue
    /// collision argument.
    pub fn power_difference(p: u64, a: &BigUint, b: &BigUint) -> Self {
        assert!(a > b, "need a > b for Y^a - Y^b");
        SparsePoly::new(vec![(b.clone(), p - 1), (a.clone(), 1)])
    }

    /// Evaluate over `Z/p` (p prime), reducing exponents with Fermat:
    /// for x != 0, x^e = x^(e mod (p-1)).
    pub fn eval_mod_p(&self, p: u64, x: u64) -> u64 {
        let x = x % p;
        let mut acc: u128 = 0;
        let p128 = p as u128;
        for (e, c) in &self.terms {
            let term = if x == 0 {
                if e.is_zero() {
                    1
                } else {
                    0
                }
            } else {
                let e_red = (e % (p - 1)).to_u64().expect("below p-1");
                powmod_u64(x, e_red, p)
            };
            acc = (acc + *c as u128 % p128 * term as u128) % p128;
        }
        acc as u64
    }
}

fn powmod_u64(mut base: u64, mut e: u64, m: u64) -> u64 {
    let m128 = m as u128;
    base %= m;
    let mut acc: u128 = 1 % m128;
    let mut b = base as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        e >>= 1;
    }
    acc as u64
}

impl SparsePoly<ModPoly> {
    /// Evaluate over a quotient field at `x`, one pow per term.
    pub fn eval_in_field(&self, field: &QuotientField, x: &ModPoly) -> ModPoly {
        let mut acc = ModPoly::zero(field.p());
        for (e, c) in &self.terms {
            let term = field.mul(c, &field.pow(x, e));
            acc = field.add(&acc, &term);
        }
        acc
    }
}

/// Roots of a dense polynomial over `Z/p` with their 1-based position in
/// the scan order `0, 1, ..., p-1`: the `k`-th root found gets index `k`.
/// A nonzero polynomial over a field cannot have more roots than its
/// degree; if that bound ever broke the count check would report it.
pub fn root_indices(p: u64, g: &ModPoly) -> Result<Vec<(u64, u64)>, Error> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    assert_eq!(g.modulus(), p);
    let mut out = Vec::new();
    for x in 0..p {
        if g.eval(x) == 0 {
            out.push((x, out.len() as u64 + 1));
        }
    }
    check_root_count(out.len(), &BigUint::from(g.degree().unwrap() as u64))?;
    Ok(out)
}

/// Same indexing for a sparse polynomial over `Z/p`, whose degree may be
/// far larger than `p`.
pub fn root_indices_sparse(p: u64, g: &SparsePoly<u64>) -> Result<Vec<(u64, u64)>, Error> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let mut out = Vec::new();
    for x in 0..p {
        if g.eval_mod_p(p, x) == 0 {
            out.push((x, out.len() as u64 + 1));
        }
    }
    check_root_count(out.len(), g.degree().expect("nonzero"))?;
    Ok(out)
}

/// Root indexing over a quotient field, elements scanned in canonical
/// rank order (so the index of a root is one more than the number of
/// roots preceding it).
pub fn root_indices_in_field(
    field: &QuotientField,
    g: &SparsePoly<ModPoly>,
) -> Result<Vec<(ModPoly, BigUint)>, Error> {
    if g.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    let mut out = Vec::new();
    for x in field.elements()? {
        if g.eval_in_field(field, &x).is_zero() {
            let index = BigUint::from(out.len() as u64 + 1);
            out.push((x, index));
        }
    }
    check_root_count(out.len(), g.degree().expect("nonzero"))?;
    Ok(out)
}

fn check_root_count(count: usize, degree: &BigUint) -> Result<(), Error> {
    if &BigUint::from(count) > degree {
        return Err(Error::PropertyViolation(format!(
            "found {count} roots of a polynomial of degree {degree}"
        )));
    }
    Ok(())
}
