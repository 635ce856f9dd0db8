//! System-level simulation parameters.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sap;

/// OFDM-IM system parameters plus the knobs of the dither generator.
///
/// Derived quantities (`subblocks`, bit widths) are computed on
/// construction so every consumer sees a consistent set.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SystemConfig {
    /// Total subcarrier count N.
    pub subcarriers: usize,
    /// Subblock length n.
    pub subblock_len: usize,
    /// Active subcarriers per subblock k.
    pub active_per_subblock: usize,
    /// Constellation order M (square QAM).
    pub mod_order: usize,
    /// Time-domain oversampling factor for PAPR capture.
    pub oversample: usize,
    /// Channel tap count.
    pub taps: usize,
    /// Clip-and-filter iteration count for dither generation.
    pub icf_iterations: usize,
    /// Linear clipping ratio relative to the undithered RMS amplitude.
    pub clip_ratio: f64,
    #[serde(skip, default)]
    derived: Derived,
}

#[derive(Debug, Clone, Copy, Default)]
struct Derived {
    subblocks: usize,
    index_bits: usize,
    symbol_bits: usize,
}

impl SystemConfig {
    pub fn new(
        subcarriers: usize,
        subblock_len: usize,
        active_per_subblock: usize,
        mod_order: usize,
        oversample: usize,
        taps: usize,
        icf_iterations: usize,
        clip_ratio: f64,
    ) -> Result<Self> {
        let cfg = Self {
            subcarriers,
            subblock_len,
            active_per_subblock,
            mod_order,
            oversample,
            taps,
            icf_iterations,
            clip_ratio,
            derived: Derived::default(),
        };
        cfg.validated()
    }

    /// Re-run validation and fill in derived quantities (used after
    /// deserializing from a config file).
    pub fn validated(mut self) -> Result<Self> {
        let n = self.subblock_len;
        let k = self.active_per_subblock;
        if n == 0 || self.subcarriers == 0 || self.subcarriers % n != 0 {
            return Err(Error::InvalidConfig(format!(
                "subcarrier count {} is not a multiple of subblock length {n}",
                self.subcarriers
            )));
        }
        if k == 0 || k >= n {
            return Err(Error::InvalidConfig(format!(
                "active count {k} must satisfy 1 <= k < n = {n}"
            )));
        }
        if self.mod_order < 4
            || !self.mod_order.is_power_of_two()
            || self.mod_order.trailing_zeros() % 2 != 0
        {
            return Err(Error::InvalidConfig(format!(
                "modulation order {} is not square QAM",
                self.mod_order
            )));
        }
        if self.oversample == 0 {
            return Err(Error::InvalidConfig("oversample factor must be >= 1".into()));
        }
        if self.taps == 0 || self.taps > self.subcarriers {
            return Err(Error::InvalidConfig(format!(
                "tap count {} out of range 1..={}",
                self.taps, self.subcarriers
            )));
        }
        if !(self.clip_ratio > 0.0) {
            return Err(Error::InvalidConfig(format!(
                "clip ratio {} must be positive",
                self.clip_ratio
            )));
        }
        self.derived = Derived {
            subblocks: self.subcarriers / n,
            index_bits: sap::index_bits(n, k),
            symbol_bits: k * self.mod_order.trailing_zeros() as usize,
        };
        Ok(self)
    }

    /// Subblock count g = N / n.
    pub fn subblocks(&self) -> usize {
        self.derived.subblocks
    }

    /// Index bits per subblock p1.
    pub fn index_bits(&self) -> usize {
        self.derived.index_bits
    }

    /// Symbol bits per subblock p2 = k log2 M.
    pub fn symbol_bits(&self) -> usize {
        self.derived.symbol_bits
    }

    /// Bits per subblock p = p1 + p2.
    pub fn bits_per_subblock(&self) -> usize {
        self.derived.index_bits + self.derived.symbol_bits
    }

    /// Bits per OFDM symbol m = p * g.
    pub fn bits_per_symbol(&self) -> usize {
        self.bits_per_subblock() * self.derived.subblocks
    }

    /// Oversampled time-domain length.
    pub fn time_samples(&self) -> usize {
        self.subcarriers * self.oversample
    }
}

/// The configuration used throughout: N=128 subcarriers in subblocks of 4
/// with 2 active, 16-QAM, 4x oversampling, 8 channel taps, 5 clip-filter
/// iterations at a 1.6 linear clip ratio.
impl Default for SystemConfig {
    fn default() -> Self {
        Self::new(128, 4, 2, 16, 4, 8, 5, 1.6).expect("reference config is valid")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_bit_budget() {
        let cfg = SystemConfig::default();
        assert_eq!(cfg.subblocks(), 32);
        assert_eq!(cfg.index_bits(), 2);
        assert_eq!(cfg.symbol_bits(), 8);
        assert_eq!(cfg.bits_per_subblock(), 10);
        assert_eq!(cfg.bits_per_symbol(), 320);
        assert_eq!(cfg.time_samples(), 512);
    }

    #[test]
    fn rejects_bad_geometry() {
        assert!(SystemConfig::new(100, 4, 2, 16, 4, 8, 5, 1.6).is_ok());
        assert!(SystemConfig::new(126, 4, 2, 16, 4, 8, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 4, 16, 4, 8, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 0, 16, 4, 8, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 2, 32, 4, 8, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 2, 16, 0, 8, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 2, 16, 4, 129, 5, 1.6).is_err());
        assert!(SystemConfig::new(128, 4, 2, 16, 4, 8, 5, 0.0).is_err());
    }
}
