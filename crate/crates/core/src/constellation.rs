//! Square-QAM constellation with per-axis reflected Gray labeling.
//!
//! The constellation is used unnormalized: for 16-QAM the point set is
//! exactly `{±1±j1, ±1±j3, ±3±j1, ±3±j3}` and the amplitude levels are
//! `{√2, √10, √18}`. SNR calibration happens downstream, so the raw
//! integer grid is kept throughout.

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Bit pair ordering per axis: in-phase bits come before quadrature bits,
/// and each axis maps its bits through a reflected Gray code so that
/// adjacent amplitude levels differ in one bit.
#[derive(Debug, Clone)]
pub struct Constellation {
    order: usize,
    bits_per_symbol: usize,
    bits_per_axis: usize,
    axis_levels: Vec<f64>,
    points: Vec<Complex64>,
    amplitude_levels: Vec<f64>,
}

fn gray_encode(v: usize) -> usize {
    v ^ (v >> 1)
}

fn gray_decode(mut g: usize) -> usize {
    let mut v = g;
    while g > 0 {
        g >>= 1;
        v ^= g;
    }
    v
}

impl Constellation {
    /// Build an M-ary square QAM constellation (M a power of 4).
    pub fn square_qam(order: usize) -> Result<Self> {
        if order < 4 || !order.is_power_of_two() || !order.trailing_zeros().is_multiple_of(2) {
            return Err(Error::InvalidConfig(format!(
                "constellation order {order} is not square QAM (need a power of 4)"
            )));
        }
        let bits_per_symbol = order.trailing_zeros() as usize;
        let bits_per_axis = bits_per_symbol / 2;
        let side = 1usize << bits_per_axis;
        let axis_levels: Vec<f64> = (0..side)
            .map(|l| (2 * l) as f64 - (side - 1) as f64)
            .collect();

        // Label layout: top bits = I axis Gray code, bottom bits = Q axis.
        let mut points = vec![Complex64::new(0.0, 0.0); order];
        for (i_idx, &re) in axis_levels.iter().enumerate() {
            for (q_idx, &im) in axis_levels.iter().enumerate() {
                let label = (gray_encode(i_idx) << bits_per_axis) | gray_encode(q_idx);
                points[label] = Complex64::new(re, im);
            }
        }

        let mut amplitude_levels: Vec<f64> = points.iter().map(|p| p.norm()).collect();
        amplitude_levels.sort_by(|a, b| a.partial_cmp(b).unwrap());
        amplitude_levels.dedup_by(|a, b| (*a - *b).abs() < 1e-12);

        Ok(Self {
            order,
            bits_per_symbol,
            bits_per_axis,
            axis_levels,
            points,
            amplitude_levels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn bits_per_symbol(&self) -> usize {
        self.bits_per_symbol
    }

    /// Distinct point magnitudes, ascending.
    pub fn amplitude_levels(&self) -> &[f64] {
        &self.amplitude_levels
    }

    pub fn points(&self) -> &[Complex64] {
        &self.points
    }

    /// Point carrying the given label (bits packed MSB-first).
    pub fn point(&self, label: usize) -> Complex64 {
        self.points[label]
    }

    /// Mean point energy; 10.0 for the unnormalized 16-QAM grid.
    pub fn mean_energy(&self) -> f64 {
        self.points.iter().map(|p| p.norm_sqr()).sum::<f64>() / self.order as f64
    }

    /// Map `log2 M` bits (values 0/1, MSB first) to a constellation point.
    pub fn map(&self, bits: &[u8]) -> Result<Complex64> {
        if bits.len() != self.bits_per_symbol {
            return Err(Error::LengthMismatch {
                expected: self.bits_per_symbol,
                got: bits.len(),
            });
        }
        Ok(self.point(pack_bits(bits)))
    }

    /// Inverse of [`Constellation::map`]; the input must be an exact point.
    pub fn demap(&self, point: Complex64) -> Result<Vec<u8>> {
        let label = self.label_of(point)?;
        Ok(unpack_bits(label, self.bits_per_symbol))
    }

    /// Label of an exact constellation point.
    pub fn label_of(&self, point: Complex64) -> Result<usize> {
        let side = 1usize << self.bits_per_axis;
        let to_idx = |level: f64| -> Option<usize> {
            let idx = (level + (side - 1) as f64) / 2.0;
            let rounded = idx.round();
            if (idx - rounded).abs() < 1e-9 && rounded >= 0.0 && (rounded as usize) < side {
                Some(rounded as usize)
            } else {
                None
            }
        };
        match (to_idx(point.re), to_idx(point.im)) {
            (Some(i_idx), Some(q_idx))
                if self.axis_levels[i_idx] == point.re && self.axis_levels[q_idx] == point.im =>
            {
                Ok((gray_encode(i_idx) << self.bits_per_axis) | gray_encode(q_idx))
            }
            _ => Err(Error::InvalidSymbol {
                re: point.re,
                im: point.im,
            }),
        }
    }

    /// Decode a label back to its per-axis level indices (I, Q).
    #[allow(dead_code)]
    fn axis_indices(&self, label: usize) -> (usize, usize) {
        let mask = (1usize << self.bits_per_axis) - 1;
        (
            gray_decode(label >> self.bits_per_axis),
            gray_decode(label & mask),
        )
    }
}

/// Pack bit values (0/1, MSB first) into an integer label.
pub fn pack_bits(bits: &[u8]) -> usize {
    bits.iter().fold(0usize, |acc, &b| (acc << 1) | b as usize)
}

/// Unpack an integer label into `width` bit values, MSB first.
pub fn unpack_bits(label: usize, width: usize) -> Vec<u8> {
    (0..width)
        .map(|i| ((label >> (width - 1 - i)) & 1) as u8)
        .collect()
}

/// Smallest symbol magnitude in a subblock; always one of the
/// constellation's amplitude levels.
pub fn amp_floor(symbols: &[Complex64]) -> Result<f64> {
    symbols
        .iter()
        .map(|s| s.norm())
        .min_by(|a, b| a.partial_cmp(b).unwrap())
        .ok_or(Error::EmptySymbols)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qam16() -> Constellation {
        Constellation::square_qam(16).unwrap()
    }

    #[test]
    fn rejects_non_square_orders() {
        assert!(Constellation::square_qam(8).is_err());
        assert!(Constellation::square_qam(32).is_err());
        assert!(Constellation::square_qam(2).is_err());
    }

    #[test]
    fn sixteen_qam_point_set() {
        let c = qam16();
        let mut expected = Vec::new();
        for re in [-3.0, -1.0, 1.0, 3.0] {
            for im in [-3.0, -1.0, 1.0, 3.0] {
                expected.push(Complex64::new(re, im));
            }
        }
        for e in expected {
            assert!(c.points().iter().any(|&p| p == e), "missing {e}");
        }
    }

    #[test]
    fn sixteen_qam_amplitude_levels() {
        let c = qam16();
        let levels = c.amplitude_levels();
        assert_eq!(levels.len(), 3);
        assert!((levels[0] - 2.0f64.sqrt()).abs() < 1e-12);
        assert!((levels[1] - 10.0f64.sqrt()).abs() < 1e-12);
        assert!((levels[2] - 18.0f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn map_all_zero_bits() {
        let c = qam16();
        assert_eq!(c.map(&[0, 0, 0, 0]).unwrap(), Complex64::new(-3.0, -3.0));
    }

    #[test]
    fn gray_axis_mapping() {
        let c = qam16();
        // per-axis pairs: 00→−3, 01→−1, 11→+1, 10→+3
        assert_eq!(c.map(&[0, 1, 0, 0]).unwrap(), Complex64::new(-1.0, -3.0));
        assert_eq!(c.map(&[1, 1, 1, 0]).unwrap(), Complex64::new(1.0, 3.0));
        assert_eq!(c.map(&[1, 0, 0, 1]).unwrap(), Complex64::new(3.0, -1.0));
    }

    #[test]
    fn map_is_bijective() {
        let c = qam16();
        let mut seen = Vec::new();
        for label in 0..16 {
            let p = c.map(&unpack_bits(label, 4)).unwrap();
            assert!(!seen.contains(&p));
            seen.push(p);
        }
    }

    #[test]
    fn demap_roundtrip_all_labels() {
        let c = qam16();
        for label in 0..16 {
            let bits = unpack_bits(label, 4);
            let p = c.map(&bits).unwrap();
            assert_eq!(c.demap(p).unwrap(), bits);
        }
    }

    #[test]
    fn demap_inverse_example() {
        let c = qam16();
        assert_eq!(c.demap(Complex64::new(-3.0, -3.0)).unwrap(), vec![0, 0, 0, 0]);
    }

    #[test]
    fn demap_rejects_non_points() {
        let c = qam16();
        assert!(c.demap(Complex64::new(0.0, 0.0)).is_err());
        assert!(c.demap(Complex64::new(1.0, 0.5)).is_err());
    }

    #[test]
    fn mean_energy_is_ten() {
        assert_eq!(qam16().mean_energy(), 10.0);
    }

    #[test]
    fn amp_floor_examples() {
        let sqrt2 = 2.0f64.sqrt();
        let sqrt10 = 10.0f64.sqrt();
        let sqrt18 = 18.0f64.sqrt();
        let f = amp_floor(&[Complex64::new(1.0, 1.0), Complex64::new(3.0, 3.0)]).unwrap();
        assert!((f - sqrt2).abs() < 1e-12);
        let f = amp_floor(&[Complex64::new(3.0, 1.0), Complex64::new(1.0, 3.0)]).unwrap();
        assert!((f - sqrt10).abs() < 1e-12);
        let f = amp_floor(&[Complex64::new(3.0, 3.0), Complex64::new(3.0, 3.0)]).unwrap();
        assert!((f - sqrt18).abs() < 1e-12);
        assert!(amp_floor(&[]).is_err());
    }

    #[test]
    fn sixty_four_qam_levels() {
        let c = Constellation::square_qam(64).unwrap();
        assert_eq!(c.bits_per_symbol(), 6);
        assert_eq!(c.points().len(), 64);
        assert_eq!(c.amplitude_levels().len(), 9);
        // roundtrip
        for label in 0..64 {
            let bits = unpack_bits(label, 6);
            assert_eq!(c.demap(c.map(&bits).unwrap()).unwrap(), bits);
        }
    }
}
