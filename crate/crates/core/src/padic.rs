//! p-adic digits and binomial coefficients modulo a prime.
//!
//! The digit-product rule reduces `C(m, n) mod p` to a product of
//! single-digit binomials over the base-p expansions of `m` and `n`. For
//! p = 2 it collapses to a subset test on binary digits: `C(m, n)` is odd
//! exactly when every binary digit of `n` is at most the matching digit of
//! `m`, i.e. `m & n == n`.
//!
//! [`binom_exact`] is an independent arbitrary-precision route to the same
//! values; the test suite reduces it mod p and compares.

use crate::error::{Error, Result};
use num_bigint::BigUint;

/// Largest modulus accepted by [`validate_prime`].
pub const PRIME_BOUND: u64 = 1 << 16;

/// Base-p digits, least significant first. The expansion of 0 is `[0]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DigitVector {
    pub prime: u64,
    pub digits: Vec<u64>,
}

impl DigitVector {
    /// Reassembles `sum digits[i] * p^i`.
    pub fn value(&self) -> u64 {
        self.digits
            .iter()
            .rev()
            .fold(0u64, |acc, &d| acc * self.prime + d)
    }
}

/// Checks that `p` is a prime in `2..=65536` by trial division.
pub fn validate_prime(p: u64) -> Result<()> {
    if p < 2 {
        return Err(Error::ModulusTooSmall(p));
    }
    if p > PRIME_BOUND {
        return Err(Error::ModulusTooLarge(p));
    }
    if p == 2 {
        return Ok(());
    }
    if p.is_multiple_of(2) {
        return Err(Error::ModulusComposite(p));
    }
    let mut d = 3;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return Err(Error::ModulusComposite(p));
        }
        d += 2;
    }
    Ok(())
}

pub fn p_adic_digits(a: u64, p: u64) -> Result<DigitVector> {
    validate_prime(p)?;
    let mut digits = Vec::new();
    let mut rest = a;
    loop {
        digits.push(rest % p);
        rest /= p;
        if rest == 0 {
            break;
        }
    }
    Ok(DigitVector { prime: p, digits })
}

/// `C(m, n) mod p` by the digit-product rule.
pub fn binom_mod_p(m: u64, n: u64, p: u64) -> Result<u64> {
    validate_prime(p)?;
    if n > m {
        return Ok(0);
    }
    let mut acc = 1u64;
    let (mut mm, mut nn) = (m, n);
    while nn > 0 || mm > 0 {
        acc = acc * binom_digit(mm % p, nn % p, p) % p;
        if acc == 0 {
            return Ok(0);
        }
        mm /= p;
        nn /= p;
    }
    Ok(acc)
}

/// `C(a, b) mod p` for digits `a, b < p`, by the multiplicative formula
/// with a single Fermat inverse for the denominator.
fn binom_digit(a: u64, b: u64, p: u64) -> u64 {
    if b > a {
        return 0;
    }
    let b = b.min(a - b);
    let mut num = 1u64;
    let mut den = 1u64;
    for t in 0..b {
        num = num * ((a - t) % p) % p;
        den = den * ((t + 1) % p) % p;
    }
    num * pow_mod(den, p - 2, p) % p
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Parity of `C(m, n)`: 1 iff the binary digits of `n` are dominated by
/// those of `m`.
pub fn binom_mod2(m: u64, n: u64) -> u64 {
    u64::from(m & n == n)
}

/// Parity of `B(m, g) = C(m + 2g, g)`, the multiplicity criterion deciding
/// whether `Y^mu` is a direct summand of `M^lambda` (`g = lambda2 - mu2`).
pub fn b_parity(m: u64, g: u64) -> u64 {
    binom_mod2(m + 2 * g, g)
}

/// Exact `C(m, n)` over arbitrary-precision integers; every intermediate
/// quotient in the multiplicative formula is an integer.
pub fn binom_exact(m: u64, n: u64) -> BigUint {
    if n > m {
        return BigUint::from(0u32);
    }
    let n = n.min(m - n);
    let mut acc = BigUint::from(1u32);
    for t in 0..n {
        acc = acc * (m - t) / (t + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn digits_of_small_values() {
        // Expansions worked out by hand in binary.
        assert_eq!(p_adic_digits(6, 2).unwrap().digits, vec![0, 1, 1]);
        assert_eq!(p_adic_digits(0, 2).unwrap().digits, vec![0]);
        assert_eq!(p_adic_digits(15, 2).unwrap().digits, vec![1, 1, 1, 1]);
        assert_eq!(p_adic_digits(14, 3).unwrap().digits, vec![2, 1, 1]);
    }

    #[test]
    fn digit_value_roundtrip() {
        for a in [0u64, 1, 5, 255, 1023, 65535, 123_456_789] {
            for p in [2u64, 3, 5, 65521] {
                assert_eq!(p_adic_digits(a, p).unwrap().value(), a);
            }
        }
    }

    #[test]
    fn binom_mod_p_matches_hand_values() {
        // C(6,2) = 15.
        assert_eq!(binom_mod_p(6, 2, 2).unwrap(), 1);
        assert_eq!(binom_mod_p(6, 2, 3).unwrap(), 0);
        assert_eq!(binom_mod_p(6, 2, 5).unwrap(), 0);
        // C(4,2) = 6.
        assert_eq!(binom_mod_p(4, 2, 2).unwrap(), 0);
        assert_eq!(binom_mod_p(4, 2, 5).unwrap(), 1);
        // n > m.
        assert_eq!(binom_mod_p(3, 5, 2).unwrap(), 0);
    }

    #[test]
    fn parity_shortcut_examples() {
        assert_eq!(binom_mod2(6, 2), 1);
        assert_eq!(binom_mod2(4, 2), 0);
        assert_eq!(b_parity(0, 0), 1); // C(0,0) = 1
        assert_eq!(b_parity(2, 2), 1); // C(6,2) = 15
        assert_eq!(b_parity(2, 1), 0); // C(4,1) = 4
        for g in 1..40 {
            // C(2g, g) is always even.
            assert_eq!(b_parity(0, g), 0);
        }
    }

    #[test]
    fn exact_binomials() {
        assert_eq!(binom_exact(6, 2), BigUint::from(15u32));
        assert_eq!(binom_exact(0, 0), BigUint::from(1u32));
        assert_eq!(binom_exact(3, 5), BigUint::from(0u32));
        assert_eq!(
            binom_exact(100, 50).to_string(),
            "100891344545564193334812497256"
        );
        // Pascal spot checks.
        for m in 1..30u64 {
            for n in 1..=m {
                assert_eq!(
                    binom_exact(m, n),
                    binom_exact(m - 1, n - 1) + binom_exact(m - 1, n)
                );
            }
        }
    }

    #[test]
    fn prime_validation() {
        assert!(validate_prime(2).is_ok());
        assert!(validate_prime(65521).is_ok());
        assert_eq!(validate_prime(0), Err(Error::ModulusTooSmall(0)));
        assert_eq!(validate_prime(1), Err(Error::ModulusTooSmall(1)));
        assert_eq!(validate_prime(4), Err(Error::ModulusComposite(4)));
        assert_eq!(validate_prime(65535), Err(Error::ModulusComposite(65535)));
        // 65537 is prime but past the checkable bound, so it is refused.
        assert_eq!(validate_prime(65537), Err(Error::ModulusTooLarge(65537)));
    }

    proptest! {
        #[test]
        fn digit_product_agrees_with_exact(m in 0u64..3000, n in 0u64..3000, pidx in 0usize..4) {
            let p = [2u64, 3, 5, 13][pidx];
            let expect = (binom_exact(m, n) % p).to_u64_digits().first().copied().unwrap_or(0);
            prop_assert_eq!(binom_mod_p(m, n, p).unwrap(), expect);
        }

        #[test]
        fn mod2_shortcut_agrees_with_digit_product(m in 0u64..100_000, n in 0u64..100_000) {
            prop_assert_eq!(binom_mod2(m, n), binom_mod_p(m, n, 2).unwrap());
        }

        #[test]
        fn digits_are_in_range_and_roundtrip(a: u64, pidx in 0usize..5) {
            let p = [2u64, 3, 5, 251, 65521][pidx];
            let dv = p_adic_digits(a, p).unwrap();
            prop_assert!(dv.digits.iter().all(|&d| d < p));
            prop_assert!(dv.digits.last() != Some(&0) || a == 0);
            prop_assert_eq!(dv.value(), a);
        }
    }
}
