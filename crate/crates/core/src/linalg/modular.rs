//! Exact nilpotency through characteristic polynomials modulo primes.
//!
//! After clearing denominators the matrix has entries in Z[i]. For a prime `p ≡ 1 (mod 4)`
//! with `r² ≡ −1`, the map `i ↦ r` is a ring homomorphism Z[i] → F_p, so every coefficient of
//! the characteristic polynomial maps to the coefficient computed mod `p`. A coefficient that
//! vanishes mod primes whose product exceeds the square of a Hadamard bound on it is zero.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};

use super::mat::Mat;

const PRIME_COUNT: usize = 96;

/// Primes `p ≡ 1 (mod 4)` just below 2^31, each with a square root of −1.
fn primes() -> &'static [(u64, u64)] {
    static PRIMES: OnceLock<Vec<(u64, u64)>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(PRIME_COUNT);
        let mut p: u64 = (1 << 31) - 3;
        while out.len() < PRIME_COUNT {
            if p % 4 == 1 && is_prime(p) {
                out.push((p, sqrt_minus_one(p)));
            }
            p -= 2;
        }
        out
    })
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

fn sqrt_minus_one(p: u64) -> u64 {
    (2..p)
        .find(|&c| pow_mod(c, (p - 1) / 2, p) == p - 1)
        .map(|c| pow_mod(c, (p - 1) / 4, p))
        .expect("p ≡ 1 mod 4 has a non-residue")
}

fn residue(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().expect("reduced below p")
}

/// Characteristic polynomial mod `p` via Hessenberg reduction; lowest degree first.
fn char_poly_mod(mut h: Vec<u64>, n: usize, p: u64) -> Vec<u64> {
    let at = |i: usize, j: usize| i * n + j;
    for m in 1..n.saturating_sub(1) {
        let Some(i) = (m..n).find(|&i| h[at(i, m - 1)] != 0) else {
            continue;
        };
        if i != m {
            for c in 0..n {
                h.swap(at(i, c), at(m, c));
            }
            for r in 0..n {
                h.swap(at(r, i), at(r, m));
            }
        }
        let inv = pow_mod(h[at(m, m - 1)], p - 2, p);
        for j in m + 1..n {
            let u = h[at(j, m - 1)] * inv % p;
            if u == 0 {
                continue;
            }
            for c in 0..n {
                h[at(j, c)] = (h[at(j, c)] + p - u * h[at(m, c)] % p) % p;
            }
            for r in 0..n {
                h[at(r, m)] = (h[at(r, m)] + u * h[at(r, j)]) % p;
            }
        }
    }
    let mut polys: Vec<Vec<u64>> = vec![vec![1]];
    for m in 1..=n {
        let prev = &polys[m - 1];
        let mut pm = vec![0u64; m + 1];
        let d = h[at(m - 1, m - 1)];
        for (k, &c) in prev.iter().enumerate() {
            pm[k + 1] = (pm[k + 1] + c) % p;
            pm[k] = (pm[k] + p - d * c % p) % p;
        }
        let mut t = 1u64;
        for i in 1..m {
            t = t * h[at(m - i, m - i - 1)] % p;
            if t == 0 {
                break;
            }
            let f = t * h[at(m - i - 1, m - 1)] % p;
            for (k, &c) in polys[m - i - 1].iter().enumerate() {
                pm[k] = (pm[k] + p - f * c % p) % p;
            }
        }
        polys.push(pm);
    }
    polys.pop().expect("n + 1 entries")
}

/// `Some(nilpotent?)` decided exactly, or `None` when the coefficient bound needs more
/// primes than are cached.
pub(crate) fn is_nilpotent_multimodular(a: &Mat) -> Option<bool> {
    let n = a.n_rows();
    let mut den = BigInt::one();
    for x in a.entries() {
        den = den.lcm(x.re().denom()).lcm(x.im().denom());
    }
    let scaled: Vec<(BigInt, BigInt)> = a
        .entries()
        .iter()
        .map(|x| {
            let re = x.re().numer() * (&den / x.re().denom());
            let im = x.im().numer() * (&den / x.im().denom());
            (re, im)
        })
        .collect();
    // |c_k| <= prod_i (1 + |row_i|), and |row_i| < 2^(max bits + 1 + log2(n)/2).
    let half_log_n = (usize::BITS - n.leading_zeros()) as u64;
    let mut log_bound: u64 = 0;
    for i in 0..n {
        let bits = scaled[i * n..(i + 1) * n]
            .iter()
            .map(|(re, im)| re.abs().bits().max(im.abs().bits()))
            .max()
            .unwrap_or(0);
        log_bound += if bits == 0 { 1 } else { bits + 2 + half_log_n };
    }
    // Need prod p > |c_k|^2; every prime exceeds 2^30.
    let needed = (2 * log_bound + 1).div_ceil(30) as usize;
    let primes = primes();
    if needed > primes.len() {
        return None;
    }
    for &(p, r) in &primes[..needed] {
        let h: Vec<u64> = scaled
            .iter()
            .map(|(re, im)| (residue(re, p) + r * residue(im, p)) % p)
            .collect();
        let c = char_poly_mod(h, n, p);
        if c[..n].iter().any(|&x| x != 0) {
            return Some(false);
        }
    }
    Some(true)
}
