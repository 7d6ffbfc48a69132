//! The transcendental bound-state energy condition and its solutions:
//! single states, energy curves over gamma sweeps, and the zero-mode
//! crossing where particle and antiparticle levels meet.

use crate::scalar::Real;
use crate::specfun::gamma_raw;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum SpectrumError {
    #[error("no bound state for theta_star = {theta_star}: the existence window is (pi, 2 pi)")]
    NoBoundState { theta_star: f64 },
    #[error("{name} = {value} must lie in the open interval ({lo}, {hi})")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },
    #[error("theta_star = pi: the right side of the energy equation diverges")]
    ThetaStarAtPi,
    #[error("mass = {mass} must be positive and finite")]
    BadMass { mass: f64 },
    #[error("root refinement did not converge within {max_iter} iterations")]
    NoConvergence { max_iter: usize },
    #[error("energy has constant sign on the gamma search interval; no zero crossing")]
    NoCrossing,
    #[error("invalid gamma grid: {reason}")]
    BadGrid { reason: &'static str },
}

fn check_open<T: Real>(
    name: &'static str,
    value: T,
    lo: f64,
    hi: f64,
) -> Result<(), SpectrumError> {
    if !(value > T::c(lo) && value < T::c(hi)) {
        return Err(SpectrumError::OutOfRange {
            name,
            value: value.as_f64(),
            lo,
            hi,
        });
    }
    Ok(())
}

/// Which of the two mirror energy curves a state belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Particle,
    Antiparticle,
}

impl Branch {
    pub fn flip(self) -> Self {
        match self {
            Branch::Particle => Branch::Antiparticle,
            Branch::Antiparticle => Branch::Particle,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Particle => "particle",
            Branch::Antiparticle => "antiparticle",
        }
    }
}

/// A solved bound level: |E| < m, k = sqrt(m^2 - E^2).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState<T> {
    pub energy: T,
    pub k: T,
    pub gamma: T,
    pub theta_star: T,
    pub branch: Branch,
    pub mass: T,
}

impl<T: Real> BoundState<T> {
    pub fn x(&self) -> T {
        self.energy / self.mass
    }

    /// Residual of the energy condition at this state's dimensionless energy.
    /// The antiparticle branch is the charge conjugate of a particle root, so
    /// its residual is evaluated at the mirrored -x.
    pub fn equation_residual(&self) -> Result<T, SpectrumError> {
        let x = match self.branch {
            Branch::Particle => self.x(),
            Branch::Antiparticle => -self.x(),
        };
        energy_residual(x, self.gamma, self.theta_star)
    }
}

/// Right side of the energy condition:
/// R = -2^(2 gamma - 1) (Gamma(gamma)/Gamma(1-gamma)) tan(theta_star/2).
fn equation_rhs<T: Real>(gamma: T, theta_star: T) -> Result<T, SpectrumError> {
    check_open("gamma", gamma, 0.0, 1.0)?;
    check_open("theta_star", theta_star, 0.0, 2.0 * std::f64::consts::PI)?;
    if theta_star == T::PI() {
        return Err(SpectrumError::ThetaStarAtPi);
    }
    let two_pow = T::c(2.0).powf(T::c(2.0) * gamma - T::one());
    let ratio = gamma_raw(gamma) / gamma_raw(T::one() - gamma);
    Ok(-two_pow * ratio * (theta_star * T::c(0.5)).tan())
}

/// F(x) = (1+x)^gamma (1-x)^(gamma-1) - R, strictly increasing in x on (-1,1).
/// Roots of F are the dimensionless bound energies x = E/m.
pub fn energy_residual<T: Real>(x: T, gamma: T, theta_star: T) -> Result<T, SpectrumError> {
    check_open("x", x, -1.0, 1.0)?;
    let rhs = equation_rhs(gamma, theta_star)?;
    let lhs = (T::one() + x).powf(gamma) * (T::one() - x).powf(gamma - T::one());
    Ok(lhs - rhs)
}

/// b(gamma) = 2^(2 gamma - 1) Gamma(gamma)^2 sin(pi gamma) / pi, the positive
/// coefficient of the reduced equation at theta_star = 3 pi/2. Computed via
/// the reflection formula as 2^(2 gamma - 1) Gamma(gamma)/Gamma(1-gamma),
/// which keeps b(1/2) = 1 exact.
pub fn coefficient_b<T: Real>(gamma: T) -> Result<T, SpectrumError> {
    check_open("gamma", gamma, 0.0, 1.0)?;
    let two_pow = T::c(2.0).powf(T::c(2.0) * gamma - T::one());
    Ok(two_pow * gamma_raw(gamma) / gamma_raw(T::one() - gamma))
}

/// Brent root refinement for a function with a sign change on [a, b].
/// Returns the abscissa once the bracket shrinks to the floating-point floor.
fn brent<T: Real, F: Fn(T) -> T>(
    f: F,
    mut a: T,
    mut b: T,
    mut fa: T,
    mut fb: T,
    max_iter: usize,
) -> Result<T, SpectrumError> {
    let mut c = a;
    let mut fc = fa;
    let mut d = b - a;
    let mut e = d;
    let eps = T::epsilon();
    let tol_x = T::c(1e-15);
    for _ in 0..max_iter {
        if (fb > T::zero() && fc > T::zero()) || (fb < T::zero() && fc < T::zero()) {
            c = a;
            fc = fa;
            d = b - a;
            e = d;
        }
        if fc.abs() < fb.abs() {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        let tol1 = T::c(2.0) * eps * b.abs() + T::c(0.5) * tol_x;
        let xm = T::c(0.5) * (c - b);
        if xm.abs() <= tol1 || fb == T::zero() {
            return Ok(b);
        }
        if e.abs() >= tol1 && fa.abs() > fb.abs() {
            let s = fb / fa;
            let (mut p, mut q);
            if a == c {
                p = T::c(2.0) * xm * s;
                q = T::one() - s;
            } else {
                let q0 = fa / fc;
                let r = fb / fc;
                p = s * (T::c(2.0) * xm * q0 * (q0 - r) - (b - a) * (r - T::one()));
                q = (q0 - T::one()) * (r - T::one()) * (s - T::one());
            }
            if p > T::zero() {
                q = -q;
            }
            p = p.abs();
            let min1 = T::c(3.0) * xm * q - (tol1 * q).abs();
            let min2 = (e * q).abs();
            if T::c(2.0) * p < min1.min(min2) {
                e = d;
                d = p / q;
            } else {
                d = xm;
                e = d;
            }
        } else {
            d = xm;
            e = d;
        }
        a = b;
        fa = fb;
        if d.abs() > tol1 {
            b = b + d;
        } else {
            b = b + if xm > T::zero() { tol1 } else { -tol1 };
        }
        fb = f(b);
    }
    Err(SpectrumError::NoConvergence { max_iter })
}

const SOLVER_CLIP: f64 = 1e-9;
const SOLVER_MAX_ITER: usize = 200;

/// Solves the energy condition for the given branch.
///
/// The particle root is found by Brent refinement of the logarithmic form
/// G(x) = gamma ln(1+x) + (gamma-1) ln(1-x) - ln R on [-1+1e-9, 1-1e-9]
/// (G is strictly increasing and well conditioned where F is not); the
/// antiparticle energy is the charge conjugate -E. Near the edges of the
/// existence window the root lies within a few ulp of +-1 and the residual
/// of the power form is limited by the spacing of representable x there;
/// the refined root is always the best representable one.
pub fn solve_bound_energy<T: Real>(
    gamma: T,
    theta_star: T,
    branch: Branch,
    mass: T,
) -> Result<BoundState<T>, SpectrumError> {
    check_open("gamma", gamma, 0.0, 1.0)?;
    if !(mass > T::zero() && mass.is_finite()) {
        return Err(SpectrumError::BadMass {
            mass: mass.as_f64(),
        });
    }
    if !(theta_star > T::PI() && theta_star < T::TAU()) {
        return Err(SpectrumError::NoBoundState {
            theta_star: theta_star.as_f64(),
        });
    }
    let rhs = equation_rhs(gamma, theta_star)?;
    let ln_rhs = rhs.ln();
    let g = |x: T| gamma * x.ln_1p() + (gamma - T::one()) * (-x).ln_1p() - ln_rhs;
    let lo = T::c(-1.0 + SOLVER_CLIP);
    let hi = T::c(1.0 - SOLVER_CLIP);
    let glo = g(lo);
    let ghi = g(hi);
    if !(glo < T::zero() && ghi > T::zero()) {
        // Root beyond the representable clip; only reachable for theta_star
        // within ~1e-9 of a window edge at extreme gamma.
        return Err(SpectrumError::NoConvergence {
            max_iter: SOLVER_MAX_ITER,
        });
    }
    let x = brent(g, lo, hi, glo, ghi, SOLVER_MAX_ITER)?;
    let x = match branch {
        Branch::Particle => x,
        Branch::Antiparticle => -x,
    };
    Ok(BoundState {
        energy: mass * x,
        k: mass * (T::one() - x * x).sqrt(),
        gamma,
        theta_star,
        branch,
        mass,
    })
}

/// Uniform gamma grid strictly inside (0, 1).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridSpec<T> {
    min: T,
    max: T,
    steps: usize,
}

impl<T: Real> GridSpec<T> {
    /// steps == 1 yields the single point `min`.
    pub fn new(min: T, max: T, steps: usize) -> Result<Self, SpectrumError> {
        check_open("grid min", min, 0.0, 1.0)?;
        check_open("grid max", max, 0.0, 1.0)?;
        if max < min {
            return Err(SpectrumError::BadGrid {
                reason: "max below min",
            });
        }
        if steps == 0 {
            return Err(SpectrumError::BadGrid {
                reason: "zero steps",
            });
        }
        if steps > 1 && max == min {
            return Err(SpectrumError::BadGrid {
                reason: "degenerate range with more than one step",
            });
        }
        Ok(GridSpec { min, max, steps })
    }

    pub fn points(&self) -> Vec<T> {
        if self.steps == 1 {
            return vec![self.min];
        }
        let h = (self.max - self.min) / T::c((self.steps - 1) as f64);
        (0..self.steps)
            .map(|i| {
                if i == self.steps - 1 {
                    self.max
                } else {
                    self.min + h * T::c(i as f64)
                }
            })
            .collect()
    }
}

/// Per-point outcome of a sweep. Points with gamma > 1/2 are flagged as
/// extrapolated: the curve there continues the analytic formula beyond the
/// range where the reduced two-branch form was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PointStatus {
    Converged,
    Extrapolated,
    Failed,
}

impl PointStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            PointStatus::Converged => "converged",
            PointStatus::Extrapolated => "extrapolated",
            PointStatus::Failed => "failed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CurvePoint<T> {
    pub gamma: T,
    pub energy_over_m: Option<T>,
    pub k_over_m: Option<T>,
    pub status: PointStatus,
}

/// One branch of the spectrum over a gamma grid.
#[derive(Debug, Clone, PartialEq)]
pub struct EnergyCurve<T> {
    pub theta_star: T,
    pub branch: Branch,
    pub mass: T,
    pub points: Vec<CurvePoint<T>>,
}

/// Sweeps the branch over the grid. Per-point solver failures become
/// explicit gap points, never an error for the sweep as a whole.
pub fn sweep_energy_curve<T: Real>(
    theta_star: T,
    branch: Branch,
    mass: T,
    grid: GridSpec<T>,
) -> Result<EnergyCurve<T>, SpectrumError> {
    if !(theta_star > T::PI() && theta_star < T::TAU()) {
        return Err(SpectrumError::NoBoundState {
            theta_star: theta_star.as_f64(),
        });
    }
    let points = grid
        .points()
        .into_iter()
        .map(|gamma| match solve_bound_energy(gamma, theta_star, branch, mass) {
            Ok(state) => CurvePoint {
                gamma,
                energy_over_m: Some(state.x()),
                k_over_m: Some(state.k / mass),
                status: if gamma > T::c(0.5) {
                    PointStatus::Extrapolated
                } else {
                    PointStatus::Converged
                },
            },
            Err(_) => CurvePoint {
                gamma,
                energy_over_m: None,
                k_over_m: None,
                status: PointStatus::Failed,
            },
        })
        .collect();
    Ok(EnergyCurve {
        theta_star,
        branch,
        mass,
        points,
    })
}

/// Gamma at which the particle branch crosses E = 0, by bisection on the
/// sign of the energy. At E = 0 the left side of the energy condition is
/// exactly 1 and increasing, so sign(E(gamma)) = sign(R(gamma) - 1); the
/// bisection predicate uses that closed form.
pub fn find_zero_mode<T: Real>(theta_star: T, mass: T) -> Result<T, SpectrumError> {
    if !(mass > T::zero() && mass.is_finite()) {
        return Err(SpectrumError::BadMass {
            mass: mass.as_f64(),
        });
    }
    if !(theta_star > T::PI() && theta_star < T::TAU()) {
        return Err(SpectrumError::NoBoundState {
            theta_star: theta_star.as_f64(),
        });
    }
    let energy_sign = |gamma: T| -> Result<T, SpectrumError> {
        Ok(equation_rhs(gamma, theta_star)? - T::one())
    };
    let mut lo = T::c(1e-4);
    let mut hi = T::one() - T::c(1e-4);
    let slo = energy_sign(lo)?;
    let shi = energy_sign(hi)?;
    if slo == T::zero() {
        return Ok(lo);
    }
    if shi == T::zero() {
        return Ok(hi);
    }
    if (slo > T::zero()) == (shi > T::zero()) {
        return Err(SpectrumError::NoCrossing);
    }
    // R is strictly decreasing in gamma, so the crossing is unique.
    while hi - lo > T::c(1e-12) {
        let mid = (lo + hi) * T::c(0.5);
        let smid = energy_sign(mid)?;
        if smid == T::zero() {
            return Ok(mid);
        }
        if (smid > T::zero()) == (slo > T::zero()) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo + hi) * T::c(0.5))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn residual_is_zero_at_the_symmetric_point() {
        let f = energy_residual(0.0, 0.5, 1.5 * PI).unwrap();
        assert!(f.abs() < 1e-15, "residual {f}");
    }

    #[test]
    fn coefficient_b_at_half_is_exactly_one() {
        assert_eq!(coefficient_b(0.5).unwrap(), 1.0);
    }

    #[test]
    fn zero_energy_at_gamma_half_canonical_angle() {
        let s = solve_bound_energy(0.5, 1.5 * PI, Branch::Particle, 1.0).unwrap();
        assert!(s.energy.abs() <= 1e-10, "E = {}", s.energy);
        assert!((s.k - 1.0).abs() <= 1e-10);
        let a = solve_bound_energy(0.5, 1.5 * PI, Branch::Antiparticle, 1.0).unwrap();
        assert!((s.energy + a.energy).abs() <= 1e-15);
    }

    #[test]
    fn no_bound_state_below_pi() {
        assert!(matches!(
            solve_bound_energy(0.5, PI / 2.0, Branch::Particle, 1.0),
            Err(SpectrumError::NoBoundState { .. })
        ));
    }

    #[test]
    fn canonical_antisymmetric_pair_at_quarter_angle() {
        // At theta_star = 5 pi/4 and gamma = 1/2 the root is x = sqrt(2)/2.
        let s = solve_bound_energy(0.5, 1.25 * PI, Branch::Particle, 1.0).unwrap();
        assert!((s.energy - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-14);
    }

    #[test]
    fn zero_mode_bisection_canonical() {
        let g = find_zero_mode(1.5 * PI, 1.0).unwrap();
        assert!((g - 0.5).abs() <= 1e-10, "gamma {g}");
    }

    #[test]
    fn grid_points_hit_both_ends() {
        let g = GridSpec::new(0.1, 0.9, 5).unwrap();
        let p = g.points();
        assert_eq!(p.first().copied(), Some(0.1));
        assert_eq!(p.last().copied(), Some(0.9));
        assert_eq!(p.len(), 5);
    }
}
