use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{Error, Result};

/// The ring `Z_n` for `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Ring {
    modulus: u32,
}

impl Ring {
    pub fn new(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusTooSmall(modulus));
        }
        let modulus = u32::try_from(modulus).map_err(|_| Error::OrderGuard {
            order: modulus,
            limit: u64::from(u32::MAX),
        })?;
        Ok(Ring { modulus })
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    /// Positive divisors of the modulus in increasing order.
    pub fn divisors(&self) -> Vec<u32> {
        divisors(self.modulus)
    }

    /// Every ideal `dZ_n`, ordered by canonical key (zero ideal first, then by
    /// increasing generator).
    pub fn ideals(&self) -> Vec<Ideal> {
        let mut ideals: Vec<Ideal> = self
            .divisors()
            .into_iter()
            .map(|d| Ideal::from_divisor(*self, d))
            .collect();
        ideals.sort();
        ideals
    }

    pub fn ideal(&self, generator: u64) -> Ideal {
        Ideal::generated_by(*self, generator)
    }

    pub fn zero_ideal(&self) -> Ideal {
        Ideal::from_divisor(*self, self.modulus)
    }

    pub fn whole(&self) -> Ideal {
        Ideal::from_divisor(*self, 1)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z{}", self.modulus)
    }
}

/// An ideal `dZ_n`, stored by its divisor generator `d | n`.
///
/// `d = n` is the zero ideal and `d = 1` the whole ring. Ordering follows the
/// lexicographic order of the sorted element lists, so the zero ideal sorts
/// first and the remaining ideals sort by increasing `d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring: Ring,
    divisor: u32,
}

impl Ideal {
    /// The ideal generated by an arbitrary ring element.
    pub fn generated_by(ring: Ring, element: u64) -> Self {
        let n = u64::from(ring.modulus);
        let d = (element % n).gcd(&n);
        Ideal::from_divisor(ring, d as u32)
    }

    pub(crate) fn from_divisor(ring: Ring, divisor: u32) -> Self {
        debug_assert!(divisor >= 1 && ring.modulus.is_multiple_of(divisor));
        Ideal { ring, divisor }
    }

    /// The ideal generated by a set of ring elements (the empty set gives 0).
    pub fn generated_by_all<I: IntoIterator<Item = u64>>(ring: Ring, elements: I) -> Self {
        let n = u64::from(ring.modulus);
        let d = elements.into_iter().fold(n, |acc, r| acc.gcd(&(r % n)));
        Ideal::from_divisor(ring, d as u32)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn divisor(&self) -> u32 {
        self.divisor
    }

    pub fn is_zero(&self) -> bool {
        self.divisor == self.ring.modulus
    }

    pub fn is_whole(&self) -> bool {
        self.divisor == 1
    }

    pub fn is_nontrivial(&self) -> bool {
        !self.is_zero() && !self.is_whole()
    }

    /// Number of elements, `n / d`.
    pub fn order(&self) -> u32 {
        self.ring.modulus / self.divisor
    }

    pub fn contains(&self, r: u64) -> bool {
        (r % u64::from(self.ring.modulus)).is_multiple_of(u64::from(self.divisor))
    }

    pub fn elements(&self) -> Vec<u32> {
        (0..self.ring.modulus)
            .step_by(self.divisor as usize)
            .collect()
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        Ideal::from_divisor(self.ring, self.divisor.gcd(&other.divisor))
    }

    pub fn intersection(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        Ideal::from_divisor(self.ring, self.divisor.lcm(&other.divisor))
    }

    pub fn product(&self, other: &Ideal) -> Ideal {
        debug_assert_eq!(self.ring, other.ring);
        Ideal::generated_by(
            self.ring,
            u64::from(self.divisor) * u64::from(other.divisor),
        )
    }

    /// `dZ_n` is prime exactly when `d` is a prime number.
    pub fn is_prime(&self) -> bool {
        is_prime_number(u64::from(self.divisor))
    }

    /// Display label: `0`, `Z<n>` for the whole ring, otherwise `<d>Z<n>`.
    pub fn label(&self) -> String {
        if self.is_zero() {
            "0".to_string()
        } else if self.is_whole() {
            self.ring.to_string()
        } else {
            format!("{}{}", self.divisor, self.ring)
        }
    }
}

impl PartialOrd for Ideal {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Ideal {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let key = |i: &Ideal| (i.ring, !i.is_zero(), i.divisor);
        key(self).cmp(&key(other))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

pub fn divisors(n: u32) -> Vec<u32> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u32;
    while u64::from(d) * u64::from(d) <= u64::from(n) {
        if n.is_multiple_of(d) {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

pub fn is_prime_number(n: u64) -> bool {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideal_count_is_divisor_count() {
        for n in 2..=60u64 {
            let ring = Ring::new(n).unwrap();
            let brute = (1..=n).filter(|d| n % d == 0).count();
            assert_eq!(ring.ideals().len(), brute, "n = {n}");
        }
    }

    #[test]
    fn prime_ideals_match_definition() {
        for n in 2..=40u64 {
            let ring = Ring::new(n).unwrap();
            for ideal in ring.ideals() {
                let by_definition = !ideal.is_whole()
                    && (0..n).all(|a| {
                        (0..n).all(|b| {
                            !ideal.contains(a * b) || ideal.contains(a) || ideal.contains(b)
                        })
                    });
                assert_eq!(ideal.is_prime(), by_definition, "{ideal} in Z{n}");
            }
        }
    }

    #[test]
    fn ideal_arithmetic() {
        let r = Ring::new(12).unwrap();
        assert_eq!(r.ideal(4).sum(&r.ideal(6)), r.ideal(2));
        assert_eq!(r.ideal(4).intersection(&r.ideal(6)), r.zero_ideal());
        assert_eq!(r.ideal(2).product(&r.ideal(6)), r.zero_ideal());
        assert_eq!(r.ideal(9), r.ideal(3));
        assert_eq!(r.ideal(0), r.zero_ideal());
        assert_eq!(r.ideal(5), r.whole());
        assert_eq!(r.ideal(2).elements(), vec![0, 2, 4, 6, 8, 10]);
        assert_eq!(r.ideal(3).label(), "3Z12");
    }

    #[test]
    fn rejects_small_modulus() {
        assert_eq!(Ring::new(1), Err(Error::ModulusTooSmall(1)));
        assert_eq!(Ring::new(0), Err(Error::ModulusTooSmall(0)));
    }

    #[test]
    fn ordering_matches_element_lists() {
        let r = Ring::new(30).unwrap();
        let ideals = r.ideals();
        let mut by_elements = ideals.clone();
        by_elements.sort_by_key(|i| i.elements());
        assert_eq!(ideals, by_elements);
    }
}
