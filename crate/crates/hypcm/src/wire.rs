//! The text syntax for numbers on the command line and in reports:
//! complex literals like `1.5+0.25i`, `-2i`, `3`, and comma-separated vectors.

use hypcm_core::C64;

use crate::error::{Error, Result};

fn real(s: &str) -> Result<f64> {
    s.parse::<f64>().map_err(|_| Error::Usage(format!("not a number: `{s}`")))
}

/// Parses `re`, `im i`, or `re±im i`.
pub fn parse_complex(s: &str) -> Result<C64> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Usage("empty number".into()));
    }
    let Some(body) = t.strip_suffix('i').or_else(|| t.strip_suffix('j')) else {
        return Ok(C64::new(real(&t)?, 0.0));
    };
    // the split point is the last sign that does not belong to an exponent
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let im_part = |s: &str| -> Result<f64> {
        match s {
            "" | "+" => Ok(1.0),
            "-" => Ok(-1.0),
            _ => real(s),
        }
    };
    match split {
        Some(k) => Ok(C64::new(real(&body[..k])?, im_part(&body[k..])?)),
        None => Ok(C64::new(0.0, im_part(body)?)),
    }
}

pub fn parse_vector(s: &str) -> Result<Vec<C64>> {
    s.split(',').map(parse_complex).collect()
}

pub fn parse_reals(s: &str) -> Result<Vec<f64>> {
    s.split(',').map(|t| real(t.trim())).collect()
}

/// Shortest representation that parses back to the same `f64` (at most 17
/// significant digits).
pub fn fmt_real(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let m = x.abs();
    if m.is_finite() && !(1e-4..1e16).contains(&m) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

pub fn fmt_complex(z: C64) -> String {
    let im = if z.im.is_sign_negative() && z.im != 0.0 { fmt_real(z.im) } else { format!("+{}", fmt_real(z.im.abs())) };
    format!("{}{}i", fmt_real(z.re), im)
}

pub fn fmt_vector(v: &[C64]) -> String {
    v.iter().map(|z| fmt_complex(*z)).collect::<Vec<_>>().join(",")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literals() {
        assert_eq!(parse_complex("1.5+0.25i").unwrap(), C64::new(1.5, 0.25));
        assert_eq!(parse_complex("-2i").unwrap(), C64::new(0.0, -2.0));
        assert_eq!(parse_complex("3").unwrap(), C64::new(3.0, 0.0));
        assert_eq!(parse_complex("1e-3-1.5e+2i").unwrap(), C64::new(1e-3, -150.0));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert!(parse_complex("1+xi").is_err());
        assert!(parse_complex("").is_err());
    }

    #[test]
    fn vectors() {
        let v = parse_vector("0.3,-0.1+0.2i").unwrap();
        assert_eq!(v, vec![C64::new(0.3, 0.0), C64::new(-0.1, 0.2)]);
    }

    #[test]
    fn printing() {
        assert_eq!(fmt_complex(C64::new(1.0, 0.0)), "1+0i");
        assert_eq!(fmt_complex(C64::new(-0.5, -2.0)), "-0.5-2i");
        assert_eq!(fmt_real(1.5e-12), "1.5e-12");
        assert_eq!(fmt_real(-2e20), "-2e20");
        assert_eq!(fmt_real(0.25), "0.25");
    }

    proptest::proptest! {
        #[test]
        fn complex_round_trip(re in proptest::num::f64::NORMAL | proptest::num::f64::ZERO,
                              im in proptest::num::f64::NORMAL | proptest::num::f64::ZERO) {
            let z = C64::new(re, im);
            let back = parse_complex(&fmt_complex(z)).unwrap();
            proptest::prop_assert_eq!(back.re.to_bits(), re.to_bits());
            proptest::prop_assert_eq!(back.im, im);
        }

        #[test]
        fn vector_round_trip(v in proptest::collection::vec((-1e6f64..1e6, -1e6f64..1e6), 1..5)) {
            let v: Vec<C64> = v.into_iter().map(|(a, b)| C64::new(a, b)).collect();
            proptest::prop_assert_eq!(parse_vector(&fmt_vector(&v)).unwrap(), v);
        }
    }
}
