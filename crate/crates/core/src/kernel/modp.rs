use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

/// Word-sized primes between 2^30 and 2^31; products of two residues fit in a `u64`.
pub const DEFAULT_PRIMES: [u64; 5] = [2147483647, 2147483629, 2147483587, 2147483579, 2147483563];

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Arithmetic in the prime field with `p < 2^32` elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Self {
        assert!(p > 2 && p < (1 << 32), "prime out of range");
        Fp { p }
    }

    #[inline]
    pub fn p(self) -> u64 {
        self.p
    }

    #[inline]
    pub fn add(self, a: u64, b: u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(self, a: u64, b: u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(self, a: u64) -> u64 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(self, mut a: u64, mut e: u64) -> u64 {
        let mut r = 1;
        while e > 0 {
            if e & 1 == 1 {
                r = self.mul(r, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        r
    }

    pub fn inv(self, a: u64) -> Option<u64> {
        if a.is_multiple_of(self.p) {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }

    pub fn from_i64(self, a: i64) -> u64 {
        let r = a.rem_euclid(self.p as i64);
        r as u64
    }

    pub fn from_bigint(self, a: &BigInt) -> u64 {
        let p = BigInt::from(self.p);
        let r = a.mod_floor(&p);
        r.to_u64().unwrap()
    }

    /// Reduces a rational; `None` when the denominator vanishes modulo `p`.
    pub fn from_rational(self, a: &BigRational) -> Option<u64> {
        if a.is_zero() {
            return Some(0);
        }
        let n = self.from_bigint(a.numer());
        let d = self.from_bigint(a.denom());
        self.inv(d).map(|di| self.mul(n, di))
    }

    /// Symmetric lift to `(-p/2, p/2]`.
    pub fn lift(self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}
