use std::fmt;

use num_integer::Integer;

use super::ring::Ring;
use crate::error::{Error, Result};

/// A finite module `Z_{d_1} x ... x Z_{d_k}` over `Z_n` with every `d_i | n`.
///
/// Elements are addressed by a mixed-radix index in `0..order`, with the first
/// coordinate most significant. Ascending indices therefore enumerate the
/// residue tuples in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FiniteModule {
    ring: Ring,
    factors: Vec<u32>,
    strides: Vec<u32>,
    order: u32,
}

impl FiniteModule {
    pub fn new(ring: Ring, factors: Vec<u32>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::Descriptor {
                text: String::new(),
                reason: "a module needs at least one invariant factor".into(),
            });
        }
        let mut order: u64 = 1;
        for &d in &factors {
            if d < 2 {
                return Err(Error::FactorTooSmall(u64::from(d)));
            }
            if !ring.modulus().is_multiple_of(d) {
                return Err(Error::FactorNotDividing {
                    factor: d,
                    modulus: ring.modulus(),
                });
            }
            order = order.saturating_mul(u64::from(d));
        }
        let order = u32::try_from(order).map_err(|_| Error::OrderGuard {
            order,
            limit: u64::from(u32::MAX),
        })?;
        let mut strides = vec![1u32; factors.len()];
        for i in (0..factors.len().saturating_sub(1)).rev() {
            strides[i] = strides[i + 1] * factors[i + 1];
        }
        Ok(FiniteModule {
            ring,
            factors,
            strides,
            order,
        })
    }

    /// The ring viewed as a module over itself.
    pub fn regular(ring: Ring) -> Self {
        FiniteModule::new(ring, vec![ring.modulus()]).expect("Z_n divides itself")
    }

    /// The module with the given factors over `Z_e`, `e` the lcm of the factors.
    pub fn over_exponent(factors: Vec<u32>) -> Result<Self> {
        let ring = Ring::new(exponent(&factors)?)?;
        FiniteModule::new(ring, factors)
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    pub fn factors(&self) -> &[u32] {
        &self.factors
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.factors.len()
    }

    /// True when this is `Z_n` over `Z_n`.
    pub fn is_regular(&self) -> bool {
        self.factors == [self.ring.modulus()]
    }

    pub fn zero(&self) -> u32 {
        0
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.order
    }

    /// Unit vectors `e_i`, which generate the module.
    pub fn standard_generators(&self) -> Vec<u32> {
        self.strides.clone()
    }

    pub fn decode(&self, x: u32) -> Vec<u32> {
        self.factors
            .iter()
            .zip(&self.strides)
            .map(|(&d, &s)| (x / s) % d)
            .collect()
    }

    pub fn encode(&self, coords: &[u32]) -> Result<u32> {
        if coords.len() != self.factors.len()
            || coords.iter().zip(&self.factors).any(|(a, d)| a >= d)
        {
            return Err(Error::ElementOutOfRange(coords.to_vec()));
        }
        Ok(coords.iter().zip(&self.strides).map(|(a, s)| a * s).sum())
    }

    pub fn add(&self, x: u32, y: u32) -> u32 {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let a = (x / s) % d;
            let b = (y / s) % d;
            out += ((a + b) % d) * s;
        }
        out
    }

    pub fn neg(&self, x: u32) -> u32 {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let a = (x / s) % d;
            out += ((d - a) % d) * s;
        }
        out
    }

    /// Scalar action `r . (a_i) = (r a_i mod d_i)`.
    pub fn scale(&self, r: u32, x: u32) -> u32 {
        let mut out = 0;
        for (&d, &s) in self.factors.iter().zip(&self.strides) {
            let a = u64::from((x / s) % d);
            out += ((u64::from(r) * a) % u64::from(d)) as u32 * s;
        }
        out
    }

    /// Descriptor text such as `Z2xZ4`.
    pub fn descriptor(&self) -> String {
        self.factors
            .iter()
            .map(|d| format!("Z{d}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Element text: a bare residue for cyclic modules, a tuple otherwise.
    pub fn format_element(&self, x: u32) -> String {
        let coords = self.decode(x);
        if coords.len() == 1 {
            coords[0].to_string()
        } else {
            let parts: Vec<String> = coords.iter().map(u32::to_string).collect();
            format!("({})", parts.join(","))
        }
    }
}

impl fmt::Display for FiniteModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} over {}", self.descriptor(), self.ring)
    }
}

fn exponent(factors: &[u32]) -> Result<u64> {
    let mut e: u64 = 1;
    for &d in factors {
        if d < 2 {
            return Err(Error::FactorTooSmall(u64::from(d)));
        }
        e = e.lcm(&u64::from(d));
        if e > u64::from(u32::MAX) {
            return Err(Error::OrderGuard {
                order: e,
                limit: u64::from(u32::MAX),
            });
        }
    }
    Ok(e)
}

fn parse_atoms(text: &str) -> Result<Vec<u64>> {
    let malformed = |reason: &str| Error::Descriptor {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    if text.is_empty() {
        return Err(malformed("empty descriptor"));
    }
    text.split('x')
        .map(|atom| {
            let digits = atom
                .strip_prefix('Z')
                .ok_or_else(|| malformed("each factor must look like Z<n>"))?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed("each factor must look like Z<n>"));
            }
            digits
                .parse::<u64>()
                .map_err(|_| malformed("factor does not fit in 64 bits"))
        })
        .collect()
}

/// Parses `Z<n1>xZ<n2>x...` and an optional single-factor ring `Z<n>`.
///
/// Without a ring descriptor the ring is `Z_e`, `e` the lcm of the factors.
pub fn parse_descriptor(
    module_text: &str,
    ring_text: Option<&str>,
) -> Result<(Ring, FiniteModule)> {
    let raw = parse_atoms(module_text.trim())?;
    let mut factors = Vec::with_capacity(raw.len());
    for d in raw {
        if d < 2 {
            return Err(Error::FactorTooSmall(d));
        }
        let d = u32::try_from(d).map_err(|_| Error::OrderGuard {
            order: d,
            limit: u64::from(u32::MAX),
        })?;
        factors.push(d);
    }
    let ring = match ring_text {
        Some(text) => {
            let atoms = parse_atoms(text.trim())?;
            if atoms.len() != 1 {
                return Err(Error::Descriptor {
                    text: text.to_string(),
                    reason: "a ring descriptor is a single Z<n>".into(),
                });
            }
            Ring::new(atoms[0])?
        }
        None => Ring::new(exponent(&factors)?)?,
    };
    let module = FiniteModule::new(ring, factors)?;
    Ok((ring, module))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_cyclic_module_with_default_ring() {
        let (ring, module) = parse_descriptor("Z12", None).unwrap();
        assert_eq!(ring.modulus(), 12);
        assert_eq!(module.factors(), &[12]);
        assert!(module.is_regular());
    }

    #[test]
    fn parses_product_over_explicit_ring() {
        let (ring, module) = parse_descriptor("Z2xZ4", Some("Z8")).unwrap();
        assert_eq!(ring.modulus(), 8);
        assert_eq!(module.factors(), &[2, 4]);
        assert_eq!(module.order(), 8);
        assert!(!module.is_regular());
    }

    #[test]
    fn default_ring_is_lcm() {
        let (ring, _) = parse_descriptor("Z4xZ6", None).unwrap();
        assert_eq!(ring.modulus(), 12);
    }

    #[test]
    fn rejects_non_dividing_factor() {
        let err = parse_descriptor("Z5", Some("Z6")).unwrap_err();
        assert_eq!(
            err,
            Error::FactorNotDividing {
                factor: 5,
                modulus: 6
            }
        );
        assert!(err.to_string().contains("5 does not divide 6"));
    }

    #[test]
    fn rejects_malformed_text() {
        for bad in [
            "", "12", "Z", "Zx", "Z2x", "Z2*Z3", "z4", "Z-3", "Z2 x Z3", "Z2xY3",
        ] {
            assert!(
                matches!(parse_descriptor(bad, None), Err(Error::Descriptor { .. })),
                "{bad:?} should be rejected"
            );
        }
        assert!(matches!(
            parse_descriptor("Z4", Some("Z2xZ2")),
            Err(Error::Descriptor { .. })
        ));
    }

    #[test]
    fn rejects_small_factors() {
        assert_eq!(parse_descriptor("Z1", None), Err(Error::FactorTooSmall(1)));
        assert_eq!(
            parse_descriptor("Z2xZ0", None),
            Err(Error::FactorTooSmall(0))
        );
        assert_eq!(
            parse_descriptor("Z2", Some("Z1")),
            Err(Error::ModulusTooSmall(1))
        );
    }

    #[test]
    fn arithmetic_is_coordinatewise() {
        let (_, m) = parse_descriptor("Z2xZ4", Some("Z8")).unwrap();
        let x = m.encode(&[1, 3]).unwrap();
        let y = m.encode(&[1, 2]).unwrap();
        assert_eq!(m.decode(m.add(x, y)), vec![0, 1]);
        assert_eq!(m.decode(m.neg(x)), vec![1, 1]);
        assert_eq!(m.decode(m.scale(3, x)), vec![1, 1]);
        assert_eq!(m.decode(m.scale(8, x)), vec![0, 0]);
        assert_eq!(m.format_element(x), "(1,3)");
        assert!(m.encode(&[2, 0]).is_err());
    }

    #[test]
    fn indices_follow_lexicographic_tuple_order() {
        let (_, m) = parse_descriptor("Z3xZ2xZ4", Some("Z12")).unwrap();
        let tuples: Vec<Vec<u32>> = m.elements().map(|x| m.decode(x)).collect();
        let mut sorted = tuples.clone();
        sorted.sort();
        assert_eq!(tuples, sorted);
    }
}
