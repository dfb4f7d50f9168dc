//! Exact scalars: rationals, rising factorials for every integer index,
//! central binomial coefficients and reduction of rationals modulo odd
//! prime powers.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Pow, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Exact rational number, always in lowest terms with a positive denominator.
pub type Rational = BigRational;

/// Largest prime accepted as a modulus base.
pub const PRIME_BOUND: u64 = 1_000_000;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(Integer::from(n), Integer::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(Integer::from(n))
}

/// `(-1)^e` as a rational.
pub fn sign_power(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// `a (a+1) ... (a+len-1)`, the ordinary rising factorial for a nonnegative length.
fn ascending_product(a: &Rational, len: u64) -> Rational {
    let mut acc = Rational::one();
    let mut factor = a.clone();
    for _ in 0..len {
        if factor.is_zero() {
            return Rational::zero();
        }
        acc *= &factor;
        factor += Rational::one();
    }
    acc
}

/// Rising factorial `(a)_m` for any integer `m`, using
/// `(a)_{-n} = 1 / ((a-n)_n)` for negative indices.
pub fn rising_factorial(a: &Rational, m: i64) -> Result<Rational> {
    if m >= 0 {
        return Ok(ascending_product(a, m as u64));
    }
    let len = m.unsigned_abs();
    let start = a - Rational::from_integer(Integer::from(len));
    let den = ascending_product(&start, len);
    if den.is_zero() {
        return Err(Error::Pole);
    }
    Ok(den.recip())
}

/// `1 / (a)_m`. Total for negative `m`, where it equals `(a+m)_{-m}`; in
/// particular `1/(1)_m = 0` for every `m < 0`.
pub fn inv_rising_factorial(a: &Rational, m: i64) -> Result<Rational> {
    if m < 0 {
        let start = a + Rational::from_integer(Integer::from(m));
        return Ok(ascending_product(&start, m.unsigned_abs()));
    }
    let value = ascending_product(a, m as u64);
    if value.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(value.recip())
}

/// `C(2n, n)`.
pub fn central_binomial(n: u64) -> Integer {
    // c_j = C(n + j, j) stays integral at every step
    let mut c = Integer::one();
    for j in 1..=n {
        c = c * Integer::from(n + j) / Integer::from(j);
    }
    c
}

/// Deterministic trial division; adequate below [`PRIME_BOUND`].
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// `p^e` for an odd prime `p < 10^6` and `e >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimePowerModulus {
    p: u64,
    e: u32,
    modulus: Integer,
}

impl PrimePowerModulus {
    pub fn new(p: u64, e: u32) -> Result<Self> {
        if e == 0 || p >= PRIME_BOUND || p.is_multiple_of(2) || !is_prime(p) {
            return Err(Error::InvalidModulus { p, e });
        }
        let modulus = Pow::pow(Integer::from(p), e);
        Ok(PrimePowerModulus { p, e, modulus })
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn exponent(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &Integer {
        &self.modulus
    }

    /// Canonical representative of an integer in `[0, p^e)`.
    pub fn reduce_integer(&self, x: &Integer) -> Integer {
        x.mod_floor(&self.modulus)
    }
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: &Integer, m: &Integer) -> Option<Integer> {
    let a = a.mod_floor(m);
    let egcd = a.extended_gcd(m);
    if !egcd.gcd.is_one() {
        return None;
    }
    Some(egcd.x.mod_floor(m))
}

/// `numerator * denominator^{-1} mod p^e`, in `[0, p^e)`.
pub fn mod_reduce(x: &Rational, m: &PrimePowerModulus) -> Result<Integer> {
    let den = x.denom();
    if (den % Integer::from(m.prime())).is_zero() {
        return Err(Error::NonInvertibleDenominator);
    }
    let inv = mod_inverse(den, m.modulus()).ok_or(Error::NonInvertibleDenominator)?;
    Ok((x.numer() * inv).mod_floor(m.modulus()))
}

/// `p`-adic valuation of a nonzero integer.
pub fn valuation(x: &Integer, p: u64) -> Option<u32> {
    if x.is_zero() {
        return None;
    }
    let p = Integer::from(p);
    let mut x = x.abs();
    let mut v = 0;
    while (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    Some(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;
    use proptest::prelude::*;

    // independent product over (a-j), used only by tests
    fn naive_negative(a: &Rational, n: i64) -> Option<Rational> {
        let mut den = Rational::one();
        for j in 1..=n {
            den *= a - int(j);
        }
        if den.is_zero() {
            None
        } else {
            Some(den.recip())
        }
    }

    #[test]
    fn rising_factorial_examples() {
        assert_eq!(rising_factorial(&rat(1, 2), 3).unwrap(), rat(15, 8));
        assert_eq!(rising_factorial(&rat(-7, 3), 0).unwrap(), int(1));
        assert_eq!(rising_factorial(&rat(1, 2), -1).unwrap(), int(-2));
        assert_eq!(rising_factorial(&int(1), -1), Err(Error::Pole));
        assert_eq!(rising_factorial(&int(3), -4), Err(Error::Pole));
        assert_eq!(rising_factorial(&int(-2), 4).unwrap(), int(0));
    }

    #[test]
    fn inverse_rising_factorial_examples() {
        assert_eq!(inv_rising_factorial(&int(1), -1).unwrap(), int(0));
        assert_eq!(inv_rising_factorial(&int(1), 3).unwrap(), rat(1, 6));
        assert_eq!(
            inv_rising_factorial(&int(-2), 4),
            Err(Error::DivisionByZero)
        );
        for m in -8..0 {
            assert!(inv_rising_factorial(&int(1), m).unwrap().is_zero());
        }
        // 1/(1/2)_{-2} = (1/2-2)(1/2-1) = 3/4
        assert_eq!(inv_rising_factorial(&rat(1, 2), -2).unwrap(), rat(3, 4));
    }

    #[test]
    fn negative_index_matches_naive_product() {
        for num in -9..10 {
            for den in 1..5 {
                let a = rat(num, den);
                for n in 1..6 {
                    match naive_negative(&a, n) {
                        Some(v) => assert_eq!(rising_factorial(&a, -n).unwrap(), v),
                        None => assert_eq!(rising_factorial(&a, -n), Err(Error::Pole)),
                    }
                }
            }
        }
    }

    #[test]
    fn central_binomial_examples() {
        assert_eq!(central_binomial(0), Integer::from(1));
        assert_eq!(central_binomial(2), Integer::from(6));
        assert_eq!(central_binomial(5), Integer::from(252));
        assert_eq!(central_binomial(10), Integer::from(184_756));
    }

    #[test]
    fn central_binomial_matches_half_rising_factorial() {
        let half = rat(1, 2);
        for n in 0..=200u64 {
            let lhs = Rational::from_integer(central_binomial(n))
                / Rational::from_integer(Pow::pow(Integer::from(4), n));
            let rhs = rising_factorial(&half, n as i64).unwrap()
                / rising_factorial(&int(1), n as i64).unwrap();
            assert_eq!(lhs, rhs, "n = {n}");
        }
    }

    #[test]
    fn modulus_validation() {
        assert!(PrimePowerModulus::new(3, 3).is_ok());
        assert!(PrimePowerModulus::new(999_983, 1).is_ok());
        assert!(PrimePowerModulus::new(2, 1).is_err());
        assert!(PrimePowerModulus::new(9, 1).is_err());
        assert!(PrimePowerModulus::new(5, 0).is_err());
        assert!(PrimePowerModulus::new(1_000_003, 1).is_err());
    }

    #[test]
    fn primality_by_sieve() {
        let limit = 5000usize;
        let mut sieve = alloc::vec![true; limit];
        sieve[0] = false;
        sieve[1] = false;
        for i in 2..limit {
            if sieve[i] {
                let mut j = i * i;
                while j < limit {
                    sieve[j] = false;
                    j += i;
                }
            }
        }
        let mismatches: Vec<usize> = (0..limit)
            .filter(|&i| sieve[i] != is_prime(i as u64))
            .collect();
        assert!(mismatches.is_empty(), "{mismatches:?}");
    }

    #[test]
    fn mod_reduce_examples() {
        let m27 = PrimePowerModulus::new(3, 3).unwrap();
        assert_eq!(mod_reduce(&rat(3, 8), &m27).unwrap(), Integer::from(24));
        let m7 = PrimePowerModulus::new(7, 1).unwrap();
        assert_eq!(mod_reduce(&int(5), &m7).unwrap(), Integer::from(5));
        let m9 = PrimePowerModulus::new(3, 2).unwrap();
        assert_eq!(
            mod_reduce(&rat(1, 3), &m9),
            Err(Error::NonInvertibleDenominator)
        );
        assert_eq!(mod_reduce(&int(-1), &m9).unwrap(), Integer::from(8));
    }

    #[test]
    fn valuation_counts_prime_factors() {
        assert_eq!(valuation(&Integer::from(81 * 5), 3), Some(4));
        assert_eq!(valuation(&Integer::from(-10), 5), Some(1));
        assert_eq!(valuation(&Integer::from(0), 5), None);
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-40i64..40, 1i64..12).prop_map(|(n, d)| rat(n, d))
    }

    fn coprime_rational(primes: i64) -> impl Strategy<Value = Rational> {
        (-5000i64..5000, 1i64..500)
            .prop_filter("denominator coprime to the primes", move |(_, d)| {
                d.gcd(&primes) == 1
            })
            .prop_map(|(n, d)| rat(n, d))
    }

    proptest! {
        #[test]
        fn shift_law(a in small_rational(), m1 in 0i64..8, m2 in 0i64..8) {
            let whole = rising_factorial(&a, m1 + m2).unwrap();
            let split = rising_factorial(&a, m1).unwrap()
                * rising_factorial(&(&a + int(m1)), m2).unwrap();
            prop_assert_eq!(whole, split);
        }

        #[test]
        fn negative_index_inverts_shifted_product(a in small_rational(), n in 1i64..8) {
            let shifted = rising_factorial(&(&a - int(n)), n).unwrap();
            if !shifted.is_zero() {
                let neg = rising_factorial(&a, -n).unwrap();
                prop_assert_eq!(neg * shifted, int(1));
            }
        }

        #[test]
        fn reciprocal_is_inverse(a in small_rational(), m in -8i64..8) {
            if let Ok(v) = rising_factorial(&a, m) {
                if !v.is_zero() {
                    prop_assert_eq!(inv_rising_factorial(&a, m).unwrap() * v, int(1));
                }
            }
        }

        #[test]
        fn mod_reduce_is_ring_homomorphism(
            idx in 0usize..4,
            e in 1u32..5,
            x in coprime_rational(3 * 5 * 7 * 11),
            y in coprime_rational(3 * 5 * 7 * 11),
        ) {
            let p = [3u64, 5, 7, 11][idx];
            let m = PrimePowerModulus::new(p, e).unwrap();
            let rx = mod_reduce(&x, &m).unwrap();
            let ry = mod_reduce(&y, &m).unwrap();
            prop_assert_eq!(mod_reduce(&(&x + &y), &m).unwrap(), m.reduce_integer(&(&rx + &ry)));
            prop_assert_eq!(mod_reduce(&(&x * &y), &m).unwrap(), m.reduce_integer(&(&rx * &ry)));
        }
    }
}
