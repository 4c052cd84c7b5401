//! Arbitrary-precision integers and rationals plus the combinatorial scalars
//! (factorials, generalized binomials, rising factorials) used throughout.
//!
//! All scalars are exact; there is no floating point anywhere in the crate.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational, always kept in reduced canonical form
/// (positive denominator, gcd(|numerator|, denominator) = 1).
pub type Rat = BigRational;

/// n! as an exact integer.
pub fn factorial(n: u64) -> Int {
    (1..=n).map(Int::from).product()
}

/// Generalized binomial coefficient binom(a, k) = a(a-1)...(a-k+1) / k!
/// for arbitrary rational a. For integer a >= k this is the ordinary
/// binomial coefficient.
pub fn binomial(a: &Rat, k: u64) -> Rat {
    let mut num = Rat::one();
    for i in 0..k {
        num *= a - Rat::from_integer(Int::from(i));
    }
    num / Rat::from_integer(factorial(k))
}

/// binom(a, k) for integer a (possibly negative). The value is always an
/// integer; the division by k! is checked to be exact.
pub fn binomial_int(a: i64, k: u64) -> Int {
    let r = binomial(&Rat::from_integer(Int::from(a)), k);
    assert!(r.denom().is_one(), "integer binomial must reduce to an integer");
    r.numer().clone()
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
pub fn pochhammer(a: &Rat, n: u64) -> Rat {
    let mut prod = Rat::one();
    for i in 0..n {
        prod *= a + Rat::from_integer(Int::from(i));
    }
    prod
}

/// Convenience: rational p/q from machine integers. Panics if q = 0.
pub fn rat(p: i64, q: i64) -> Rat {
    Rat::new(Int::from(p), Int::from(q))
}

/// Parse an exact rational from "p", "-p/q" or "p/q" notation.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: Int = num
        .parse()
        .map_err(|_| format!("invalid rational numerator: {s:?}"))?;
    let den: Int = den
        .parse()
        .map_err(|_| format!("invalid rational denominator: {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in rational: {s:?}"));
    }
    Ok(Rat::new(num, den))
}

/// Render a rational as "p" or "p/q" with no precision loss.
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Sign of a rational as -1, 0 or +1.
pub fn sign(r: &Rat) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn factorial_small() {
        assert_eq!(factorial(0), Int::from(1));
        assert_eq!(factorial(1), Int::from(1));
        assert_eq!(factorial(6), Int::from(720));
        // oracle: repeated multiplication
        let mut acc = Int::one();
        for i in 1..=20u64 {
            acc *= Int::from(i);
            assert_eq!(factorial(i), acc);
        }
    }

    #[test]
    fn binomial_ordinary() {
        assert_eq!(binomial(&rat(5, 1), 2), rat(10, 1));
        assert_eq!(binomial_int(5, 2), Int::from(10));
    }

    #[test]
    fn binomial_k_zero_is_one() {
        for a in [rat(0, 1), rat(-7, 2), rat(22, 3)] {
            assert_eq!(binomial(&a, 0), Rat::one());
        }
    }

    #[test]
    fn binomial_negative_upper() {
        // (-3)(-4)/2! = 6
        assert_eq!(binomial_int(-3, 2), Int::from(6));
        assert_eq!(binomial_int(-1, 5), Int::from(-1));
        assert_eq!(binomial_int(-2, 3), Int::from(-4));
    }

    #[test]
    fn binomial_times_k_factorial_is_falling_factorial() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
        for _ in 0..1000 {
            let a = Rat::new(
                Int::from(rng.random_range(-60..=60i64)),
                Int::from(rng.random_range(1..=9i64)),
            );
            let k = rng.random_range(0..=30u64);
            let mut falling = Rat::one();
            for i in 0..k {
                falling *= &a - Rat::from_integer(Int::from(i));
            }
            assert_eq!(binomial(&a, k) * Rat::from_integer(factorial(k)), falling);
        }
    }

    #[test]
    fn binomial_integer_matches_factorial_ratio() {
        for n in 0..=12u64 {
            for k in 0..=n {
                let by_factorials = factorial(n) / (factorial(k) * factorial(n - k));
                assert_eq!(binomial_int(n as i64, k), by_factorials);
            }
        }
    }

    #[test]
    fn pochhammer_base_cases() {
        assert_eq!(pochhammer(&rat(9, 4), 0), Rat::one());
        for n in 0..=10u64 {
            assert_eq!(
                pochhammer(&rat(1, 1), n),
                Rat::from_integer(factorial(n))
            );
        }
        // (1/2)(3/2) = 3/4
        assert_eq!(pochhammer(&rat(1, 2), 2), rat(3, 4));
    }

    #[test]
    fn pochhammer_is_multiplicative_in_the_order() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xa5a5);
        for _ in 0..200 {
            let a = Rat::new(
                Int::from(rng.random_range(-30..=30i64)),
                Int::from(rng.random_range(1..=7i64)),
            );
            let m = rng.random_range(0..=20u64);
            let n = rng.random_range(0..=20u64);
            let lhs = pochhammer(&a, m + n);
            let shifted = &a + Rat::from_integer(Int::from(m));
            let rhs = pochhammer(&a, m) * pochhammer(&shifted, n);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn rational_parsing_round_trips() {
        for s in ["0", "-3", "7/2", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert_eq!(parse_rat("4/2").unwrap(), rat(2, 1));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }
}
