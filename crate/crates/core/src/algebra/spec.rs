use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Gl,
    Sl,
    SlNnModCenter,
    Osp2,
    P,
    PPrime,
}

/// Family plus parameters, e.g. `gl(2|1)` or `osp(2|4)`.
///
/// For `osp(2|2n)` the stored `n` is the rank of the symplectic part; for the
/// periplectic families `m == n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AlgebraSpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl AlgebraSpec {
    pub fn gl(m: usize, n: usize) -> Self {
        Self {
            family: Family::Gl,
            m,
            n,
        }
    }

    pub fn sl(m: usize, n: usize) -> Self {
        Self {
            family: Family::Sl,
            m,
            n,
        }
    }

    pub fn sl_mod_center(n: usize) -> Self {
        Self {
            family: Family::SlNnModCenter,
            m: n,
            n,
        }
    }

    pub fn osp2(n: usize) -> Self {
        Self {
            family: Family::Osp2,
            m: 2,
            n,
        }
    }

    pub fn p(n: usize) -> Self {
        Self {
            family: Family::P,
            m: n,
            n,
        }
    }

    pub fn p_prime(n: usize) -> Self {
        Self {
            family: Family::PPrime,
            m: n,
            n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let ok = match self.family {
            Family::Gl | Family::Sl => self.m >= 1 && self.n >= 1,
            Family::SlNnModCenter => self.m == self.n && self.n >= 1,
            Family::Osp2 => self.m == 2 && self.n >= 1,
            Family::P | Family::PPrime => self.m == self.n && self.n >= 2,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "{self} (m={}, n={})",
                self.m, self.n
            )))
        }
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::Gl => write!(f, "gl({m}|{n})"),
            Family::Sl => write!(f, "sl({m}|{n})"),
            Family::SlNnModCenter => write!(f, "sl({n}|{n})/I"),
            Family::Osp2 => write!(f, "osp(2|{})", 2 * n),
            Family::P => write!(f, "p({n})"),
            Family::PPrime => write!(f, "p'({n})"),
        }
    }
}

impl FromStr for AlgebraSpec {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || Error::Parse(format!("unknown algebra spec {text:?}"));
        let (head, rest) = compact.split_once('(').ok_or_else(bad)?;
        let (args, tail) = rest.split_once(')').ok_or_else(bad)?;
        let num = |s: &str| s.parse::<usize>().map_err(|_| bad());
        let pair = |s: &str| -> Result<(usize, usize)> {
            let (a, b) = s.split_once('|').ok_or_else(bad)?;
            Ok((num(a)?, num(b)?))
        };
        let spec = match (head, tail) {
            ("gl", "") => {
                let (m, n) = pair(args)?;
                AlgebraSpec::gl(m, n)
            }
            ("sl", "") => {
                let (m, n) = pair(args)?;
                AlgebraSpec::sl(m, n)
            }
            ("sl", "/I") => {
                let (m, n) = pair(args)?;
                if m != n {
                    return Err(Error::InvalidParams(format!(
                        "{text}: quotient needs m = n"
                    )));
                }
                AlgebraSpec::sl_mod_center(n)
            }
            ("osp", "") => {
                let (two, even) = pair(args)?;
                if two != 2 || even % 2 != 0 {
                    return Err(Error::InvalidParams(format!("{text}: expected osp(2|2n)")));
                }
                AlgebraSpec::osp2(even / 2)
            }
            ("p", "") => AlgebraSpec::p(num(args)?),
            ("p'", "") => AlgebraSpec::p_prime(num(args)?),
            _ => return Err(bad()),
        };
        spec.validate()?;
        Ok(spec)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_display_roundtrip() {
        for text in [
            "gl(2|1)",
            "sl(3|2)",
            "sl(2|2)/I",
            "osp(2|4)",
            "p(3)",
            "p'(2)",
        ] {
            let spec: AlgebraSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        assert_eq!(
            "gl( 1 | 1 )".parse::<AlgebraSpec>().unwrap(),
            AlgebraSpec::gl(1, 1)
        );
    }

    #[test]
    fn parse_rejects_bad_input() {
        for text in [
            "gl(0|1)",
            "so(3)",
            "osp(3|2)",
            "osp(2|3)",
            "p(1)",
            "sl(2|1)/I",
            "gl(2,1)",
        ] {
            assert!(text.parse::<AlgebraSpec>().is_err(), "{text}");
        }
    }
}
