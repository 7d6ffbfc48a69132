//! Physical parameter space: flux decomposition into integer and fractional
//! parts, spin sectors, the channel carrying the singular solutions, and the
//! map between the two equivalent extension-angle conventions.

use crate::scalar::Real;
use crate::specfun::gamma_raw;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DomainError {
    #[error("flux {mu} is within 1e-12 of an integer; nonintegral flux required")]
    IntegerFlux { mu: f64 },
    #[error("channel index n = {n} must be nonnegative")]
    NegativeChannel { n: i64 },
    #[error("{name} = {value} must lie in the open interval ({lo}, {hi})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("{name} = {value} is not finite")]
    NotFinite { name: &'static str, value: f64 },
}

fn check_open<T: Real>(name: &'static str, value: T, lo: f64, hi: f64) -> Result<(), DomainError> {
    if !value.is_finite() {
        return Err(DomainError::NotFinite {
            name,
            value: value.as_f64(),
        });
    }
    if value <= T::c(lo) || value >= T::c(hi) {
        return Err(DomainError::OutOfRange {
            name,
            value: value.as_f64(),
            lo,
            hi,
        });
    }
    Ok(())
}

/// Flux parameter split as mu = n + gamma with integer n and gamma in (0,1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxDecomposition<T> {
    pub mu: T,
    pub n: i64,
    pub gamma: T,
}

/// Splits the dimensionless flux into integer and fractional parts.
///
/// Flux within 1e-12 of an integer is rejected: the singular channel and its
/// square-integrable irregular solutions only exist for nonintegral flux.
pub fn decompose_flux<T: Real>(mu: T) -> Result<FluxDecomposition<T>, DomainError> {
    if !mu.is_finite() {
        return Err(DomainError::NotFinite {
            name: "mu",
            value: mu.as_f64(),
        });
    }
    if (mu - mu.round()).abs() <= T::c(1e-12) {
        return Err(DomainError::IntegerFlux { mu: mu.as_f64() });
    }
    let floor = mu.floor();
    Ok(FluxDecomposition {
        mu,
        n: floor.as_f64() as i64,
        gamma: mu - floor,
    })
}

/// One of the two inequivalent two-component representations, labeled by
/// twice the spin projection.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinSector {
    Plus,
    Minus,
}

impl SpinSector {
    pub fn sign<T: Real>(self) -> T {
        match self {
            SpinSector::Plus => T::one(),
            SpinSector::Minus => -T::one(),
        }
    }

    pub fn sign_i(self) -> i64 {
        match self {
            SpinSector::Plus => 1,
            SpinSector::Minus => -1,
        }
    }

    pub fn flip(self) -> Self {
        match self {
            SpinSector::Plus => SpinSector::Minus,
            SpinSector::Minus => SpinSector::Plus,
        }
    }
}

/// Orbital quantum number with total angular momentum j = l + s/2, stored as
/// twice_j so half-integers stay exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChannelIndex {
    pub l: i64,
    pub twice_j: i64,
}

impl ChannelIndex {
    pub fn new(l: i64, s: SpinSector) -> Self {
        ChannelIndex {
            l,
            twice_j: 2 * l + s.sign_i(),
        }
    }

    pub fn j<T: Real>(&self) -> T {
        T::c(self.twice_j as f64) * T::c(0.5)
    }
}

/// The channel l = -n-1 hosting the square-integrable singular solutions.
pub fn singular_channel(n: i64, s: SpinSector) -> Result<ChannelIndex, DomainError> {
    if n < 0 {
        return Err(DomainError::NegativeChannel { n });
    }
    Ok(ChannelIndex::new(-n - 1, s))
}

/// Whether the contact spin-flux interaction is attractive in this sector.
/// Invariant under the simultaneous flip (mu, s) -> (-mu, -s).
pub fn is_attractive_sector<T: Real>(mu: T, s: SpinSector) -> bool {
    match s {
        SpinSector::Plus => mu > T::zero(),
        SpinSector::Minus => mu < T::zero(),
    }
}

/// A consistent pair of extension angles, retaining the gamma the map was
/// evaluated at (the map is gamma-dependent).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtensionAngle<T> {
    pub theta: T,
    pub theta_star: T,
    pub gamma: T,
}

fn half_tangent_map<T: Real>(angle: T, factor: T) -> T {
    if angle == T::PI() {
        return T::PI();
    }
    let mapped = T::c(2.0) * (factor * (angle * T::c(0.5)).tan()).atan();
    if mapped <= T::zero() {
        mapped + T::TAU()
    } else {
        mapped
    }
}

/// Converts theta to theta_star via tan(theta_star/2) = Gamma(1-gamma)/(2 Gamma(gamma)) tan(theta/2),
/// branch-selected so both angles lie in the same half-interval about pi.
pub fn map_theta<T: Real>(theta: T, gamma: T) -> Result<ExtensionAngle<T>, DomainError> {
    check_open("theta", theta, 0.0, 2.0 * std::f64::consts::PI)?;
    check_open("gamma", gamma, 0.0, 1.0)?;
    let factor = gamma_raw(T::one() - gamma) / (T::c(2.0) * gamma_raw(gamma));
    Ok(ExtensionAngle {
        theta,
        theta_star: half_tangent_map(theta, factor),
        gamma,
    })
}

/// Inverse of [`map_theta`]: recovers theta from theta_star at the same gamma.
pub fn map_theta_inverse<T: Real>(theta_star: T, gamma: T) -> Result<ExtensionAngle<T>, DomainError> {
    check_open("theta_star", theta_star, 0.0, 2.0 * std::f64::consts::PI)?;
    check_open("gamma", gamma, 0.0, 1.0)?;
    let factor = T::c(2.0) * gamma_raw(gamma) / gamma_raw(T::one() - gamma);
    Ok(ExtensionAngle {
        theta: half_tangent_map(theta_star, factor),
        theta_star,
        gamma,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn flux_decomposition_examples() {
        let d = decompose_flux(3.5).unwrap();
        assert_eq!(d.n, 3);
        assert_eq!(d.gamma, 0.5);
        let d = decompose_flux(-0.25).unwrap();
        assert_eq!(d.n, -1);
        assert_eq!(d.gamma, 0.75);
        assert!(matches!(
            decompose_flux(2.0),
            Err(DomainError::IntegerFlux { .. })
        ));
    }

    #[test]
    fn singular_channel_examples() {
        assert_eq!(singular_channel(0, SpinSector::Plus).unwrap().l, -1);
        assert_eq!(singular_channel(3, SpinSector::Plus).unwrap().l, -4);
        let c = singular_channel(0, SpinSector::Plus).unwrap();
        assert_eq!(c.j::<f64>(), -0.5);
        assert!(singular_channel(-1, SpinSector::Plus).is_err());
    }

    #[test]
    fn attractive_sector_rules() {
        assert!(is_attractive_sector(2.5, SpinSector::Plus));
        assert!(!is_attractive_sector(2.5, SpinSector::Minus));
        assert!(is_attractive_sector(-1.5, SpinSector::Minus));
    }

    #[test]
    fn map_theta_fixed_point_and_example() {
        let a = map_theta(PI, 0.3).unwrap();
        assert_eq!(a.theta_star, PI);
        let a = map_theta(PI / 2.0, 0.5).unwrap();
        assert!((a.theta_star - 2.0 * 0.5f64.atan()).abs() < 1e-15);
    }

    #[test]
    fn map_theta_round_trip() {
        for &gamma in &[0.1, 0.5, 0.9] {
            for i in 1..40 {
                let theta = 2.0 * PI * i as f64 / 40.0;
                let fwd = map_theta(theta, gamma).unwrap();
                let back = map_theta_inverse(fwd.theta_star, gamma).unwrap();
                assert!(
                    (back.theta - theta).abs() < 1e-12,
                    "round trip at theta={theta} gamma={gamma}"
                );
            }
        }
    }
}
