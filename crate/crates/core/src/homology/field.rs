use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The coefficient field: ℚ (characteristic 0) or 𝔽_p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldSpec {
    characteristic: u32,
}

impl FieldSpec {
    pub const RATIONALS: FieldSpec = FieldSpec { characteristic: 0 };

    pub fn new(characteristic: u32) -> Result<Self> {
        if characteristic == 0 || is_prime(characteristic) {
            Ok(FieldSpec { characteristic })
        } else {
            Err(Error::InvalidCharacteristic(characteristic))
        }
    }

    pub fn prime(p: u32) -> Result<Self> {
        if p == 0 {
            return Err(Error::InvalidCharacteristic(0));
        }
        FieldSpec::new(p)
    }

    pub fn characteristic(self) -> u32 {
        self.characteristic
    }

    /// True when Sₙ-representations over this field need not be semisimple,
    /// i.e. `0 < char <= n`.
    pub fn is_modular_for(self, n: usize) -> bool {
        self.characteristic != 0 && (self.characteristic as usize) <= n
    }

    pub fn ensure_same(self, other: FieldSpec) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::FieldMismatch(self.characteristic, other.characteristic))
        }
    }
}

impl TryFrom<u32> for FieldSpec {
    type Error = Error;

    fn try_from(c: u32) -> Result<Self> {
        FieldSpec::new(c)
    }
}

impl From<FieldSpec> for u32 {
    fn from(f: FieldSpec) -> u32 {
        f.characteristic
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.characteristic {
            0 => f.write_str("QQ"),
            p => write!(f, "ZZ/{p}"),
        }
    }
}

fn is_prime(p: u32) -> bool {
    if p < 2 {
        return false;
    }
    let p = u64::from(p);
    (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}
