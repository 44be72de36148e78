//! Exact rational scalars shared by the symbolic layer and the family
//! descriptors.
//!
//! `Rational` is `num_rational::BigRational`: always reduced to lowest terms
//! with a positive denominator, which is exactly the invariant the exact
//! arithmetic layer needs. Values print and parse as `p/q` (or `p` when the
//! denominator is one), and that is also their JSON representation.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = BigRational;

/// Rational from an integer pair. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    BigRational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rational {
    BigRational::from(BigInt::from(n))
}

/// Nearest-f64 view of a rational (infinite for overflowing magnitudes).
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

pub fn format_rational(r: &Rational) -> String {
    if r.denom() == &BigInt::from(1) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational, String> {
    let s = s.trim();
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let numer: BigInt = numer
        .parse()
        .map_err(|e| format!("bad rational numerator {numer:?}: {e}"))?;
    let denom: BigInt = denom
        .parse()
        .map_err(|e| format!("bad rational denominator {denom:?}: {e}"))?;
    if denom.is_zero() {
        return Err(format!("zero denominator in rational {s:?}"));
    }
    Ok(BigRational::new(numer, denom))
}

/// Serde adapter: a rational as a `"p/q"` JSON string (plain integers also
/// accepted on input).
pub mod serde_str {
    use super::*;
    use serde::de::{self, Visitor};
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(r: &Rational, ser: S) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&format_rational(r))
    }

    struct RationalVisitor;

    impl Visitor<'_> for RationalVisitor {
        type Value = Rational;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            write!(f, "a rational as \"p/q\" string or integer")
        }

        fn visit_str<E: de::Error>(self, v: &str) -> Result<Rational, E> {
            parse_rational(v).map_err(de::Error::custom)
        }

        fn visit_i64<E: de::Error>(self, v: i64) -> Result<Rational, E> {
            Ok(rat_int(v))
        }

        fn visit_u64<E: de::Error>(self, v: u64) -> Result<Rational, E> {
            Ok(Rational::from(BigInt::from(v)))
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Rational, D::Error> {
        de.deserialize_any(RationalVisitor)
    }
}

/// Serde adapter for `Vec<Rational>` in the same string format.
pub mod serde_str_vec {
    use super::*;
    use serde::de::{self, SeqAccess, Visitor};
    use serde::ser::SerializeSeq;
    use serde::{Deserializer, Serializer};
    use std::fmt;

    pub fn serialize<S: Serializer>(v: &[Rational], ser: S) -> Result<S::Ok, S::Error> {
        let mut seq = ser.serialize_seq(Some(v.len()))?;
        for r in v {
            seq.serialize_element(&format_rational(r))?;
        }
        seq.end()
    }

    struct VecVisitor;

    impl<'de> Visitor<'de> for VecVisitor {
        type Value = Vec<Rational>;

        fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
            write!(f, "a sequence of rationals")
        }

        fn visit_seq<A: SeqAccess<'de>>(self, mut seq: A) -> Result<Self::Value, A::Error> {
            #[derive(serde::Deserialize)]
            struct Item(#[serde(with = "super::serde_str")] Rational);
            let mut out = Vec::new();
            while let Some(Item(r)) = seq.next_element()? {
                out.push(r);
            }
            Ok(out)
        }
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Vec<Rational>, D::Error> {
        de.deserialize_seq(VecVisitor)
    }

    #[allow(dead_code)]
    fn _suppress(_: &dyn de::Error) {}
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["3/2", "-7/3", "5", "0", "-1"] {
            let r = parse_rational(s).unwrap();
            assert_eq!(format_rational(&r), s);
        }
        assert_eq!(format_rational(&parse_rational("6/4").unwrap()), "3/2");
        assert_eq!(format_rational(&parse_rational("3/-2").unwrap()), "-3/2");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn f64_view() {
        assert_eq!(to_f64(&rat(3, 2)), 1.5);
        assert_eq!(to_f64(&rat(-1, 4)), -0.25);
    }
}
