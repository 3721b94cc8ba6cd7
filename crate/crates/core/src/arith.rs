//! Elementary number theory needed by the group and coloring code.

/// Greatest common divisor.
pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Least common multiple.
pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization as (prime, exponent) pairs, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

/// Divisors of `n` other than 1 and `n` itself, ascending.
pub fn proper_nontrivial_divisors(n: u64) -> Vec<u64> {
    divisors(n).into_iter().filter(|&d| d != 1 && d != n).collect()
}

/// Euler's totient.
pub fn euler_phi(n: u64) -> u64 {
    let mut phi = n;
    for (p, _) in factorize(n) {
        phi = phi / p * (p - 1);
    }
    phi
}

/// True iff `n` is a power of a single prime. 1 counts as a prime power
/// (exponent zero), so cyclic groups of order 1 and p land in the same
/// complete-graph branch.
pub fn is_prime_power(n: u64) -> bool {
    n == 1 || factorize(n).len() == 1
}

/// `b^e mod m` by binary exponentiation. `m` must be nonzero.
pub fn pow_mod(b: u64, mut e: u64, m: u64) -> u64 {
    let mut base = b % m;
    let mut acc = 1 % m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisor_basics() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(proper_nontrivial_divisors(12), vec![2, 3, 4, 6]);
        assert_eq!(proper_nontrivial_divisors(7), Vec::<u64>::new());
        assert_eq!(proper_nontrivial_divisors(1), Vec::<u64>::new());
    }

    #[test]
    fn phi_values() {
        assert_eq!(euler_phi(1), 1);
        assert_eq!(euler_phi(2), 1);
        assert_eq!(euler_phi(6), 2);
        assert_eq!(euler_phi(12), 4);
        assert_eq!(euler_phi(27), 18);
    }

    #[test]
    fn phi_dominates_divisor_count() {
        // phi(n) >= |D(n)| - 2, which is what makes the backbone edge
        // construction well-defined.
        for n in 1..=2000u64 {
            assert!(
                euler_phi(n) as i64 >= divisors(n).len() as i64 - 2,
                "failed at n={n}"
            );
        }
    }

    #[test]
    fn prime_power_classification() {
        assert!(is_prime_power(1));
        assert!(is_prime_power(2));
        assert!(is_prime_power(27));
        assert!(is_prime_power(64));
        assert!(!is_prime_power(6));
        assert!(!is_prime_power(12));
        assert!(!is_prime_power(189));
    }

    #[test]
    fn factorize_roundtrip() {
        for n in 1..=500u64 {
            let f = factorize(n);
            let back: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(back, n);
            for w in f.windows(2) {
                assert!(w[0].0 < w[1].0);
            }
            for &(p, _) in &f {
                assert!(is_prime(p));
            }
        }
    }

    #[test]
    fn gcd_lcm() {
        assert_eq!(gcd(12, 18), 6);
        assert_eq!(gcd(7, 0), 7);
        assert_eq!(lcm(4, 6), 12);
        assert_eq!(lcm(1, 9), 9);
    }

    #[test]
    fn pow_mod_matches_naive() {
        for b in 0..12u64 {
            for e in 0..10u64 {
                for m in 1..9u64 {
                    let naive = (0..e).fold(1 % m, |acc, _| acc * b % m);
                    assert_eq!(pow_mod(b, e, m), naive, "b={b} e={e} m={m}");
                }
            }
        }
    }
}
