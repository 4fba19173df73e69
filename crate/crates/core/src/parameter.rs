use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The connection parameters under study.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Parameter {
    /// Proper vertex k-connection number; `Pvck(1)` is pvc.
    Pvck(usize),
    /// Strong proper vertex-connection number.
    Spvc,
}

impl Parameter {
    pub const PVC: Parameter = Parameter::Pvck(1);
    pub const PVC2: Parameter = Parameter::Pvck(2);
}

impl fmt::Display for Parameter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parameter::Pvck(1) => f.write_str("pvc"),
            Parameter::Pvck(k) => write!(f, "pvc{k}"),
            Parameter::Spvc => f.write_str("spvc"),
        }
    }
}

impl FromStr for Parameter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "pvc" => Ok(Parameter::PVC),
            "spvc" => Ok(Parameter::Spvc),
            _ => s
                .strip_prefix("pvc")
                .and_then(|k| k.trim_start_matches('_').parse().ok())
                .filter(|&k: &usize| k >= 1)
                .map(Parameter::Pvck)
                .ok_or_else(|| Error::Precondition(format!("unknown parameter `{s}`"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_round_trip() {
        for p in [Parameter::PVC, Parameter::PVC2, Parameter::Pvck(3), Parameter::Spvc] {
            assert_eq!(p.to_string().parse::<Parameter>().unwrap(), p);
        }
        assert_eq!("pvc_2".parse::<Parameter>().unwrap(), Parameter::PVC2);
        assert!("pvc0".parse::<Parameter>().is_err());
    }
}
