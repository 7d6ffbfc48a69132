//! Regular Bessel function J_ν(x) for real order ν ≥ -1.
//!
//! For ν ≥ 0: evaluate J'/J by the standard continued fraction, recur the
//! (unnormalized) pair down to μ ∈ [-1/2, 1/2], then fix the scale with the
//! Temme Y-series (x < 2) or the complex continued fraction for the Hankel
//! ratio (x ≥ 2). For ν ∈ (-1, 0): reflect through
//! J_{-a} = cos(aπ) J_a - sin(aπ) Y_a, with the exact (-1)^n rule when -ν is
//! within 1e-8 of an integer n.

use super::SpecFunError;
use crate::scalar::Real;
use crate::specfun::gamma::temme_gammas;

const MAX_ITER: usize = 10_000;

fn fpmin<T: Real>() -> T {
    T::min_positive_value() / T::epsilon()
}

/// (J_ν, Y_ν, J'_ν, Y'_ν) for ν ≥ 0, x > 0.
fn bessel_jy_pos<T: Real>(nu: T, x: T) -> Result<(T, T, T, T), SpecFunError> {
    let one = T::one();
    let two = T::c(2.0);
    let half = T::c(0.5);
    let pi = T::PI();
    let xi = one / x;
    let xi2 = two * xi;
    let w = xi2 / pi;
    let nl = if x < two {
        (nu + half).floor()
    } else {
        (nu - x + T::c(1.5)).floor().max(T::zero())
    };
    let steps = nl.as_f64() as usize;
    let mu = nu - nl;
    let mu2 = mu * mu;

    // CF1 for J'_ν / J_ν, tracking the sign of the denominator chain.
    let mut isign = one;
    let mut h = (nu * xi).max(fpmin::<T>());
    let mut b = xi2 * nu;
    let mut d = T::zero();
    let mut c = h;
    let mut converged = false;
    for _ in 0..MAX_ITER {
        b = b + xi2;
        d = b - d;
        if d.abs() < fpmin::<T>() {
            d = fpmin::<T>();
        }
        c = b - one / c;
        if c.abs() < fpmin::<T>() {
            c = fpmin::<T>();
        }
        d = one / d;
        let del = c * d;
        h = h * del;
        if d < T::zero() {
            isign = -isign;
        }
        if (del - one).abs() < T::epsilon() {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(SpecFunError::NoConvergence("bessel_j continued fraction"));
    }

    // Downward recurrence of the unnormalized pair from order ν to μ.
    let mut rjl = isign * fpmin::<T>();
    let mut rjpl = h * rjl;
    let rjl1 = rjl;
    let rjp1 = rjpl;
    let mut fact = nu * xi;
    for _ in 0..steps {
        let rjtemp = fact * rjl + rjpl;
        fact = fact - xi;
        rjpl = fact * rjtemp - rjl;
        rjl = rjtemp;
    }
    if rjl == T::zero() {
        rjl = T::epsilon();
    }
    let f = rjpl / rjl;

    let (rjmu, mut rymu, mut ry1, rymup);
    if x < two {
        // Temme series for Y_μ and Y_{μ+1}.
        let pimu = pi * mu;
        let fact = if pimu.abs() > T::c(1e-290) {
            pimu / pimu.sin()
        } else {
            one
        };
        let dln = -(x * half).ln();
        let e = mu * dln;
        let fact2 = if e.abs() > T::c(1e-290) { e.sinh() / e } else { one };
        let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
        let mut ff = two / pi * fact * (gam1 * e.cosh() + gam2 * fact2 * dln);
        let ee = e.exp();
        let mut p = ee / (gampl * pi);
        let mut q = one / (ee * pi * gammi);
        let pimu2 = half * pimu;
        let fact3 = if pimu2.abs() > T::c(1e-290) {
            pimu2.sin() / pimu2
        } else {
            one
        };
        let r = pi * pimu2 * fact3 * fact3;
        let mut cc = one;
        let dd = -x * x * T::c(0.25);
        let mut sum = ff + r * q;
        let mut sum1 = p;
        let mut done = false;
        for i in 1..=MAX_ITER {
            let fi = T::c(i as f64);
            ff = (fi * ff + p + q) / (fi * fi - mu2);
            cc = cc * dd / fi;
            p = p / (fi - mu);
            q = q / (fi + mu);
            let del = cc * (ff + r * q);
            sum = sum + del;
            let del1 = cc * p - fi * del;
            sum1 = sum1 + del1;
            if del.abs() < (one + sum.abs()) * T::epsilon() {
                done = true;
                break;
            }
        }
        if !done {
            return Err(SpecFunError::NoConvergence("bessel_j small-x series"));
        }
        rymu = -sum;
        ry1 = -sum1 * xi2;
        rymup = mu * xi * rymu - ry1;
        rjmu = w / (rymup - f * rymu);
    } else {
        // CF2: p + i q = (J' - i Y') / (J - i Y) at order μ.
        let mut a = T::c(0.25) - mu2;
        let mut p = -half * xi;
        let mut q = one;
        let br = two * x;
        let mut bi = two;
        let mut fact = a * xi / (p * p + q * q);
        let mut cr = br + q * fact;
        let mut ci = bi + p * fact;
        let mut den = br * br + bi * bi;
        let mut dr = br / den;
        let mut di = -bi / den;
        let dlr0 = cr * dr - ci * di;
        let dli0 = cr * di + ci * dr;
        let temp = p * dlr0 - q * dli0;
        q = p * dli0 + q * dlr0;
        p = temp;
        let mut done = false;
        for i in 2..=MAX_ITER {
            a = a + two * T::c((i - 1) as f64);
            bi = bi + two;
            dr = a * dr + br;
            di = a * di + bi;
            if dr.abs() + di.abs() < fpmin::<T>() {
                dr = fpmin::<T>();
            }
            fact = a / (cr * cr + ci * ci);
            cr = br + cr * fact;
            ci = bi - ci * fact;
            if cr.abs() + ci.abs() < fpmin::<T>() {
                cr = fpmin::<T>();
            }
            den = dr * dr + di * di;
            dr = dr / den;
            di = -di / den;
            let dlr = cr * dr - ci * di;
            let dli = cr * di + ci * dr;
            let temp = p * dlr - q * dli;
            q = p * dli + q * dlr;
            p = temp;
            if (dlr - one).abs() + dli.abs() < T::epsilon() {
                done = true;
                break;
            }
        }
        if !done {
            return Err(SpecFunError::NoConvergence("bessel_j continued fraction"));
        }
        let gam = (p - f) / q;
        let mut rj = (w / ((p - f) * gam + q)).sqrt();
        if (rjl < T::zero()) != (rj < T::zero()) {
            rj = -rj;
        }
        rjmu = rj;
        rymu = rjmu * gam;
        rymup = rymu * (p + q / gam);
        ry1 = mu * xi * rymu - rymup;
    }

    // Rescale J and J' at the original order; recur Y upward.
    let factor = rjmu / rjl;
    let rj = rjl1 * factor;
    let rjp = rjp1 * factor;
    for i in 1..=steps {
        let rytemp = (mu + T::c(i as f64)) * xi2 * ry1 - rymu;
        rymu = ry1;
        ry1 = rytemp;
    }
    let ry = rymu;
    let ryp = nu * xi * rymu - ry1;
    Ok((rj, ry, rjp, ryp))
}

/// (J_ν(x), J'_ν(x)) for ν ≥ -1, x > 0. Callers validate the domain.
pub(crate) fn bessel_j_pair_raw<T: Real>(nu: T, x: T) -> Result<(T, T), SpecFunError> {
    if nu >= T::zero() {
        let (j, _, jp, _) = bessel_jy_pos(nu, x)?;
        return Ok((j, jp));
    }
    let a = -nu;
    let n = a.round();
    if (a - n).abs() < T::c(1e-8) {
        // J_{-n} = (-1)^n J_n for integer n
        let (j, _, jp, _) = bessel_jy_pos(n, x)?;
        let sign = if (n.as_f64() as i64) % 2 == 0 {
            T::one()
        } else {
            -T::one()
        };
        return Ok((sign * j, sign * jp));
    }
    let (j, y, jp, yp) = bessel_jy_pos(a, x)?;
    let (ca, sa) = ((a * T::PI()).cos(), (a * T::PI()).sin());
    Ok((ca * j - sa * y, ca * jp - sa * yp))
}

pub(crate) fn bessel_j_raw<T: Real>(nu: T, x: T) -> Result<T, SpecFunError> {
    bessel_j_pair_raw(nu, x).map(|(j, _)| j)
}

pub(crate) fn bessel_j_derivative_raw<T: Real>(nu: T, x: T) -> Result<T, SpecFunError> {
    bessel_j_pair_raw(nu, x).map(|(_, jp)| jp)
}
