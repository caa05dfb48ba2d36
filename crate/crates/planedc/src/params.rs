//! Problem parameters shared across the solver, oracle and extension layers.

use serde::{Deserialize, Serialize};
use std::fmt;

/// Total edge budget `q`; `Infinite` selects the per-face-only variant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Budget {
    Finite(u32),
    Infinite,
}

impl Budget {
    pub fn allows(&self, count: u32) -> bool {
        match self {
            Budget::Finite(q) => count <= *q,
            Budget::Infinite => true,
        }
    }

    /// alpha(q): 1 when q is infinite, q otherwise.
    pub fn alpha(&self) -> u64 {
        match self {
            Budget::Finite(q) => *q as u64,
            Budget::Infinite => 1,
        }
    }

    pub fn parse(text: &str) -> Option<Budget> {
        if text == "inf" {
            Some(Budget::Infinite)
        } else {
            text.parse::<u32>().ok().map(Budget::Finite)
        }
    }
}

impl fmt::Display for Budget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Budget::Finite(q) => write!(f, "{q}"),
            Budget::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Budget {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Budget::Finite(q) => s.serialize_u32(*q),
            Budget::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Budget {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let v = serde_json::Value::deserialize(d)?;
        match &v {
            serde_json::Value::Number(n) => n
                .as_u64()
                .filter(|&x| x <= u32::MAX as u64)
                .map(|x| Budget::Finite(x as u32))
                .ok_or_else(|| D::Error::custom("bad budget")),
            serde_json::Value::String(s) if s == "inf" => Ok(Budget::Infinite),
            _ => Err(D::Error::custom("budget must be a number or \"inf\"")),
        }
    }
}

/// Parameters of a (q, k, d)-extension / BBFPDC instance. `d >= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExtensionParams {
    pub q: Budget,
    pub k: u32,
    pub d: u32,
}

impl ExtensionParams {
    pub fn new(q: Budget, k: u32, d: u32) -> crate::Result<Self> {
        if d < 1 {
            return Err(crate::Error::Precondition("d must be at least 1".into()));
        }
        Ok(ExtensionParams { q, k, d })
    }

    /// Weight marking useless edges: d + 1.
    pub fn dead_weight(&self) -> u64 {
        self.d as u64 + 1
    }
}
