//! Small number-theoretic helpers over `u64`.

use num_integer::Integer;

/// Divisors of `n` in ascending order. `n` must be positive.
pub fn divisors(n: u64) -> Vec<u64> {
    assert!(n > 0, "divisors of zero are undefined");
    let mut low = Vec::new();
    let mut high = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            low.push(d);
            if d * d != n {
                high.push(n / d);
            }
        }
        d += 1;
    }
    low.extend(high.into_iter().rev());
    low
}

/// Distinct prime divisors of `n` in ascending order (empty for `n = 1`).
pub fn prime_divisors(n: u64) -> Vec<u64> {
    let mut primes = Vec::new();
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            primes.push(p);
            while m % p == 0 {
                m /= p;
            }
        }
        p += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    primes
}

/// Number of distinct primes dividing `n`.
pub fn num_distinct_prime_divisors(n: u64) -> usize {
    prime_divisors(n).len()
}

/// `n = p^a` for a prime `p` and `a >= 1`.
pub fn is_prime_power(n: u64) -> bool {
    n >= 2 && prime_divisors(n).len() == 1
}

/// `n = 2^a` with `a >= 1`.
pub fn is_power_of_two(n: u64) -> bool {
    n >= 2 && n.is_power_of_two()
}

/// Prime power of an odd prime.
pub fn is_odd_prime_power(n: u64) -> bool {
    is_prime_power(n) && n % 2 == 1
}

pub fn is_square_free(n: u64) -> bool {
    prime_divisors(n).iter().all(|p| n % (p * p) != 0)
}

pub fn divisor_count(n: u64) -> usize {
    divisors(n).len()
}

pub fn divisor_sum(n: u64) -> u64 {
    divisors(n).iter().sum()
}

/// Smallest non-negative `s` with `s ≡ a (mod m1)` and `s ≡ b (mod m2)`, if any.
/// The solution is unique modulo `lcm(m1, m2)`.
pub fn crt(a: u64, m1: u64, b: u64, m2: u64) -> Option<u64> {
    let (m1, m2) = (m1 as i128, m2 as i128);
    let (a, b) = (a as i128 % m1, b as i128 % m2);
    let eg = m1.extended_gcd(&m2);
    let g = eg.gcd;
    if (b - a) % g != 0 {
        return None;
    }
    let l = m1 / g * m2;
    // m1 * x ≡ b - a (mod m2)
    let k = ((b - a) / g).rem_euclid(m2 / g) * eg.x.rem_euclid(m2 / g) % (m2 / g);
    let s = (a + m1 * k).rem_euclid(l);
    Some(s as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divisors_are_sorted() {
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(36), vec![1, 2, 3, 4, 6, 9, 12, 18, 36]);
    }

    #[test]
    fn prime_counts() {
        assert_eq!(num_distinct_prime_divisors(12), 2);
        assert_eq!(num_distinct_prime_divisors(7), 1);
        assert_eq!(num_distinct_prime_divisors(30), 3);
        assert_eq!(num_distinct_prime_divisors(1), 0);
    }

    #[test]
    fn power_predicates() {
        let pp: Vec<u64> = (2..=32).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29, 31, 32]);
        assert!(is_power_of_two(2) && is_power_of_two(64) && !is_power_of_two(12));
        assert!(is_odd_prime_power(27) && !is_odd_prime_power(8));
        assert!(is_square_free(30) && !is_square_free(12) && is_square_free(2));
    }

    #[test]
    fn crt_matches_brute_force() {
        for m1 in 1..=12u64 {
            for m2 in 1..=12u64 {
                for a in 0..m1 {
                    for b in 0..m2 {
                        let l = m1.lcm(&m2);
                        let brute = (0..l).find(|s| s % m1 == a && s % m2 == b);
                        assert_eq!(crt(a, m1, b, m2), brute, "{a} mod {m1}, {b} mod {m2}");
                    }
                }
            }
        }
    }
}
