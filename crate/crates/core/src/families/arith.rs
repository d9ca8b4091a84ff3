//! Arithmetic functions: Euler φ, Möbius μ, Jordan totients and Ramanujan sums.

use num::{BigInt, Integer, One};

/// Prime factorization by trial division as `(prime, exponent)` pairs.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn divisors(n: u64) -> Vec<u64> {
    let mut d: Vec<u64> = (1..=n).take_while(|k| k * k <= n).filter(|k| n % k == 0).collect();
    let big: Vec<u64> = d.iter().rev().map(|k| n / k).filter(|&q| q * q != n).collect();
    d.extend(big);
    d
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n) == vec![(n, 1)]
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n).iter().fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `J_k(n) = n^k Π_{p|n} (1 − p^{−k})`.
pub fn jordan_totient(k: u32, n: u64) -> BigInt {
    factorize(n).iter().fold(BigInt::from(n).pow(k), |acc, &(p, _)| {
        let pk = BigInt::from(p).pow(k);
        acc / &pk * (pk - BigInt::one())
    })
}

/// `c_n(j)` by von Sterneck's formula `μ(n/g)·φ(n)/φ(n/g)`, `g = gcd(n, j)`.
pub fn ramanujan_sum(n: u64, j: u64) -> i64 {
    let g = n.gcd(&j);
    let t = n / g;
    mobius(t) * (euler_phi(n) / euler_phi(t)) as i64
}

/// Legendre symbol `(a|p)` for an odd prime `p` by Euler's criterion.
pub fn legendre(a: i64, p: u64) -> i64 {
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let mut result: u128 = 1;
    let mut base = a as u128;
    let m = p as u128;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    if result == 1 {
        1
    } else {
        -1
    }
}

/// `Σ_{0<k<n, gcd(k,n)=1} cos(2πjk/n)` summed directly; reference for [`ramanujan_sum`].
pub fn ramanujan_sum_direct(n: u64, j: u64) -> f64 {
    (1..=n)
        .filter(|k| k.gcd(&n) == 1)
        .map(|k| (2.0 * std::f64::consts::PI * ((j * k) % n) as f64 / n as f64).cos())
        .sum()
}

pub fn smallest_prime_factor(n: u64) -> Option<u64> {
    factorize(n).first().map(|&(p, _)| p)
}


#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ramanujan_values() {
        assert_eq!(ramanujan_sum(4, 2), -2);
        for n in 1..=12 {
            assert_eq!(ramanujan_sum(n, n), euler_phi(n) as i64);
        }
    }

    #[test]
    fn jordan_values() {
        assert_eq!(jordan_totient(2, 6), BigInt::from(24));
        assert_eq!(jordan_totient(1, 10), BigInt::from(euler_phi(10)));
    }

    #[test]
    fn legendre_mod_five() {
        let v: Vec<i64> = (1..5).map(|j| legendre(j, 5)).collect();
        assert_eq!(v, vec![1, -1, -1, 1]);
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(9), vec![1, 3, 9]);
    }
}
