use facering::arith::FieldDescriptor;

use crate::error::{CliError, Result};

/// Environment variable holding the default coefficient field.
pub const FIELD_ENV: &str = "FACERING_FIELD";

const M61: u64 = (1 << 61) - 1;
const M31: u64 = (1 << 31) - 1;

/// Fields with a compiled implementation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldChoice {
    F2,
    F3,
    F5,
    F7,
    F11,
    F13,
    F101,
    Mersenne31,
    Mersenne61,
    Gf2_8,
    Gf2_63,
}

impl FieldChoice {
    pub fn from_descriptor(d: &FieldDescriptor) -> Result<Self> {
        d.validate()?;
        Ok(match (d.characteristic, d.extension_degree) {
            (2, 1) => FieldChoice::F2,
            (3, 1) => FieldChoice::F3,
            (5, 1) => FieldChoice::F5,
            (7, 1) => FieldChoice::F7,
            (11, 1) => FieldChoice::F11,
            (13, 1) => FieldChoice::F13,
            (101, 1) => FieldChoice::F101,
            (M31, 1) => FieldChoice::Mersenne31,
            (M61, 1) => FieldChoice::Mersenne61,
            (2, 8) => FieldChoice::Gf2_8,
            (2, 63) => FieldChoice::Gf2_63,
            _ => {
                return Err(CliError::Usage(format!(
                    "no implementation for {d}; supported: GF(p) for p in 2, 3, 5, 7, 11, 13, 101, 2^31-1, 2^61-1 and GF(2^8), GF(2^63)"
                )))
            }
        })
    }

    /// Accepts `p`, `p^m`, `2^61-1` and the short names `m31`, `m61`, `gf2^63`.
    pub fn parse(s: &str) -> Result<Self> {
        let t = s.trim().to_ascii_lowercase();
        let t = t.strip_prefix("gf").unwrap_or(&t).trim_matches(|c| c == '(' || c == ')');
        let desc = match t {
            "m31" | "2^31-1" => FieldDescriptor::prime(M31),
            "m61" | "2^61-1" => FieldDescriptor::prime(M61),
            _ => match t.split_once('^') {
                Some((p, m)) => FieldDescriptor {
                    characteristic: p.parse().map_err(|_| CliError::Usage(format!("bad field {s:?}")))?,
                    extension_degree: m.parse().map_err(|_| CliError::Usage(format!("bad field {s:?}")))?,
                    indeterminates: Vec::new(),
                },
                None => FieldDescriptor::prime(t.parse().map_err(|_| CliError::Usage(format!("bad field {s:?}")))?),
            },
        };
        Self::from_descriptor(&desc)
    }

    /// Field named by the environment variable, or `GF(2^61-1)`.
    pub fn from_env() -> Result<Self> {
        match std::env::var(FIELD_ENV) {
            Ok(v) if !v.trim().is_empty() => Self::parse(&v),
            _ => Ok(FieldChoice::Mersenne61),
        }
    }

    pub fn descriptor(self) -> FieldDescriptor {
        match self {
            FieldChoice::F2 => FieldDescriptor::prime(2),
            FieldChoice::F3 => FieldDescriptor::prime(3),
            FieldChoice::F5 => FieldDescriptor::prime(5),
            FieldChoice::F7 => FieldDescriptor::prime(7),
            FieldChoice::F11 => FieldDescriptor::prime(11),
            FieldChoice::F13 => FieldDescriptor::prime(13),
            FieldChoice::F101 => FieldDescriptor::prime(101),
            FieldChoice::Mersenne31 => FieldDescriptor::prime(M31),
            FieldChoice::Mersenne61 => FieldDescriptor::prime(M61),
            FieldChoice::Gf2_8 => FieldDescriptor::binary(8),
            FieldChoice::Gf2_63 => FieldDescriptor::binary(63),
        }
    }

    pub fn characteristic(self) -> u64 {
        self.descriptor().characteristic
    }
}

/// Runs `$body` with `$F` bound to the field type of `$choice`.
#[macro_export]
macro_rules! with_field {
    ($choice:expr, $F:ident => $body:expr) => {{
        use $crate::field::FieldChoice as C;
        match $choice {
            C::F2 => {
                type $F = facering::arith::F2;
                $body
            }
            C::F3 => {
                type $F = facering::arith::F3;
                $body
            }
            C::F5 => {
                type $F = facering::arith::F5;
                $body
            }
            C::F7 => {
                type $F = facering::arith::F7;
                $body
            }
            C::F11 => {
                type $F = facering::arith::F11;
                $body
            }
            C::F13 => {
                type $F = facering::arith::F13;
                $body
            }
            C::F101 => {
                type $F = facering::arith::F101;
                $body
            }
            C::Mersenne31 => {
                type $F = facering::arith::Mersenne31;
                $body
            }
            C::Mersenne61 => {
                type $F = facering::arith::Mersenne61;
                $body
            }
            C::Gf2_8 => {
                type $F = facering::arith::Gf2_8;
                $body
            }
            C::Gf2_63 => {
                type $F = facering::arith::Gf2_63;
                $body
            }
        }
    }};
}

/// Runs `$body` with `$F` bound to the prime subfield of `$choice`, the
/// coefficient field of symbolic coordinates.
#[macro_export]
macro_rules! with_prime_subfield {
    ($choice:expr, $F:ident => $body:expr) => {{
        use $crate::field::FieldChoice as C;
        let prime = match $choice {
            C::Gf2_8 | C::Gf2_63 => C::F2,
            other => other,
        };
        $crate::with_field!(prime, $F => $body)
    }};
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_common_spellings() {
        assert_eq!(FieldChoice::parse("2^63").unwrap(), FieldChoice::Gf2_63);
        assert_eq!(FieldChoice::parse("GF(2^63)").unwrap(), FieldChoice::Gf2_63);
        assert_eq!(FieldChoice::parse("m61").unwrap(), FieldChoice::Mersenne61);
        assert_eq!(FieldChoice::parse("2305843009213693951").unwrap(), FieldChoice::Mersenne61);
        assert_eq!(FieldChoice::parse("101").unwrap(), FieldChoice::F101);
        assert!(FieldChoice::parse("4").is_err());
        assert!(FieldChoice::parse("17").is_err());
        assert!(FieldChoice::parse("x").is_err());
    }

    #[test]
    fn descriptor_round_trip() {
        for c in [FieldChoice::F2, FieldChoice::Mersenne61, FieldChoice::Gf2_8, FieldChoice::Gf2_63, FieldChoice::Mersenne31] {
            assert_eq!(FieldChoice::from_descriptor(&c.descriptor()).unwrap(), c);
        }
    }
}
