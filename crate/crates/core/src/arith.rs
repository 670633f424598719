//! Small integer helpers used for element orders and group orders.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

pub fn coprime(a: u64, b: u64) -> bool {
    gcd(a, b) == 1
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

/// Distinct prime divisors in ascending order.
pub fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    if n == 0 || p < 2 {
        return 1;
    }
    while n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `n` with every factor of `p` removed.
pub fn p_prime_part(n: u64, p: u64) -> u64 {
    n / p_part(n, p)
}

pub fn is_power_of(n: u64, p: u64) -> bool {
    n >= 1 && p_part(n, p) == n
}

/// Sorted set of primes, read either as π or as its complement π′.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeSet {
    primes: Vec<u64>,
    complement: bool,
}

impl PrimeSet {
    pub fn new(mut primes: Vec<u64>) -> crate::Result<Self> {
        primes.sort_unstable();
        primes.dedup();
        if let Some(&q) = primes.iter().find(|&&q| !is_prime(q)) {
            return Err(crate::Error::NotPrime(q));
        }
        Ok(PrimeSet { primes, complement: false })
    }

    /// The set of all primes other than `p`.
    pub fn excluding(p: u64) -> crate::Result<Self> {
        let mut set = PrimeSet::new(vec![p])?;
        set.complement = true;
        Ok(set)
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn is_complement(&self) -> bool {
        self.complement
    }

    pub fn contains_prime(&self, q: u64) -> bool {
        self.primes.binary_search(&q).is_ok() != self.complement
    }

    /// True when every prime divisor of `n` lies in the set. 1 is a π-number for every π.
    pub fn is_pi_number(&self, n: u64) -> bool {
        prime_divisors(n).into_iter().all(|q| self.contains_prime(q))
    }

    /// The π-part of `n`.
    pub fn part_of(&self, n: u64) -> u64 {
        prime_divisors(n)
            .into_iter()
            .filter(|&q| self.contains_prime(q))
            .map(|q| p_part(n, q))
            .product()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(prime_divisors(1), Vec::<u64>::new());
        assert_eq!(prime_divisors(360), vec![2, 3, 5]);
        assert_eq!(p_part(24, 2), 8);
        assert_eq!(p_prime_part(24, 2), 3);
        assert_eq!(p_part(24, 5), 1);
        assert!(is_power_of(1, 3));
        assert!(!is_power_of(12, 2));
    }

    #[test]
    fn prime_sets() {
        let not2 = PrimeSet::excluding(2).unwrap();
        assert!(not2.is_pi_number(15));
        assert!(!not2.is_pi_number(6));
        assert!(not2.is_pi_number(1));
        assert_eq!(not2.part_of(120), 15);
        assert!(PrimeSet::new(vec![2, 4]).is_err());
        let pi = PrimeSet::new(vec![3, 2, 3]).unwrap();
        assert_eq!(pi.primes(), &[2, 3]);
        assert_eq!(pi.part_of(60), 12);
    }
}
