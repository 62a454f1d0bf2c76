//! Module families for the suite.
//!
//! Grammar, with parts separated by `;`:
//!
//! - `cyclic:<lo>..<hi>`: `Z_n` over itself for `lo ≤ n ≤ hi`
//! - `product:ab<=<N>`: every `Z_a x Z_b` with `2 ≤ a ≤ b`, `ab ≤ N`, over `Z_lcm(a,b)`
//! - `product:<module>,<module>,...`: explicit descriptors over their default rings
//! - `vector:<p>^<k>`: `(Z_p)^k` over `Z_p`
//! - `zmod:<module>/<ring>` or `zmod:<module>`: one instance

use num_integer::Integer;

use crate::algebra::{is_prime_number, parse_descriptor, FiniteModule, SizeGuard};
use crate::error::{Error, Result};

fn family_error(text: &str, reason: impl Into<String>) -> Error {
    Error::Family {
        text: text.to_string(),
        reason: reason.into(),
    }
}

fn number(text: &str, part: &str) -> Result<u64> {
    text.trim()
        .parse()
        .map_err(|_| family_error(part, format!("`{text}` is not a non-negative integer")))
}

/// Expands a family descriptor into modules, in a deterministic order.
pub fn generate_family(text: &str, guard: SizeGuard) -> Result<Vec<FiniteModule>> {
    let mut modules = Vec::new();
    for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
        let (kind, body) = part
            .split_once(':')
            .ok_or_else(|| family_error(part, "expected `<kind>:<arguments>`"))?;
        let body = body.trim();
        match kind.trim() {
            "cyclic" => modules.extend(cyclic(part, body)?),
            "product" => modules.extend(product(part, body)?),
            "vector" => modules.push(vector(part, body)?),
            "zmod" => {
                let (module, ring) = match body.split_once('/') {
                    Some((m, r)) => (m, Some(r)),
                    None => (body, None),
                };
                modules.push(parse_descriptor(module, ring)?.1);
            }
            other => return Err(family_error(part, format!("unknown family kind `{other}`"))),
        }
    }
    for m in &modules {
        guard.check_order(m)?;
    }
    Ok(modules)
}

fn cyclic(part: &str, body: &str) -> Result<Vec<FiniteModule>> {
    let (lo, hi) = body
        .split_once("..")
        .ok_or_else(|| family_error(part, "expected `<lo>..<hi>`"))?;
    let (lo, hi) = (number(lo, part)?, number(hi, part)?);
    if lo < 2 {
        return Err(family_error(part, "the lower bound must be at least 2"));
    }
    (lo..=hi)
        .map(|n| parse_descriptor(&format!("Z{n}"), None).map(|(_, m)| m))
        .collect()
}

fn product(part: &str, body: &str) -> Result<Vec<FiniteModule>> {
    if let Some(bound) = body.strip_prefix("ab<=") {
        let bound = number(bound, part)?;
        let mut modules = Vec::new();
        for a in 2..=bound {
            for b in a..=bound / a {
                let ring = format!("Z{}", a.lcm(&b));
                modules.push(parse_descriptor(&format!("Z{a}xZ{b}"), Some(&ring))?.1);
            }
        }
        return Ok(modules);
    }
    body.split(',')
        .map(|m| parse_descriptor(m.trim(), None).map(|(_, m)| m))
        .collect()
}

fn vector(part: &str, body: &str) -> Result<FiniteModule> {
    let (p, k) = body
        .split_once('^')
        .ok_or_else(|| family_error(part, "expected `<p>^<k>`"))?;
    let (p, k) = (number(p, part)?, number(k, part)?);
    if !is_prime_number(p) {
        return Err(family_error(part, format!("{p} is not prime")));
    }
    if k == 0 {
        return Err(family_error(part, "the exponent must be positive"));
    }
    let descriptor = vec![format!("Z{p}"); k as usize].join("x");
    Ok(parse_descriptor(&descriptor, Some(&format!("Z{p}")))?.1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(text: &str) -> Vec<String> {
        generate_family(text, SizeGuard::default())
            .unwrap()
            .iter()
            .map(|m| format!("{}/{}", m.descriptor(), m.ring()))
            .collect()
    }

    #[test]
    fn grammar_examples() {
        assert_eq!(names("cyclic:6..8"), ["Z6/Z6", "Z7/Z7", "Z8/Z8"]);
        assert_eq!(names("vector:2^2"), ["Z2xZ2/Z2"]);
        assert_eq!(names("zmod:Z2xZ4/Z8"), ["Z2xZ4/Z8"]);
        assert_eq!(
            names("cyclic:5..6; vector:3^1"),
            ["Z5/Z5", "Z6/Z6", "Z3/Z3"]
        );
        assert!(names("").is_empty());
    }

    #[test]
    fn bounded_products() {
        let all = names("product:ab<=16");
        assert_eq!(
            all,
            [
                "Z2xZ2/Z2",
                "Z2xZ3/Z6",
                "Z2xZ4/Z4",
                "Z2xZ5/Z10",
                "Z2xZ6/Z6",
                "Z2xZ7/Z14",
                "Z2xZ8/Z8",
                "Z3xZ3/Z3",
                "Z3xZ4/Z12",
                "Z3xZ5/Z15",
                "Z4xZ4/Z4"
            ]
        );
        assert_eq!(names("product:Z2xZ4,Z3xZ3"), ["Z2xZ4/Z4", "Z3xZ3/Z3"]);
    }

    #[test]
    fn malformed_families() {
        let guard = SizeGuard::default();
        for bad in [
            "cyclic:1..4",
            "cyclic:4",
            "vector:4^2",
            "vector:2^0",
            "tree:3",
            "cyclic",
        ] {
            assert!(
                matches!(generate_family(bad, guard), Err(Error::Family { .. })),
                "{bad}"
            );
        }
        assert!(matches!(
            generate_family("cyclic:5000..5000", guard),
            Err(Error::OrderGuard { .. })
        ));
    }
}
