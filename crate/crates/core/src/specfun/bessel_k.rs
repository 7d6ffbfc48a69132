//! MacDonald function K_ν(x) for real order.
//!
//! Strategy: reduce to |ν| (K is even in its order), peel the order down to
//! μ ∈ [-1/2, 1/2], evaluate (K_μ, K_{μ+1}) by the Temme power series for
//! x ≤ 2 or a Steed continued fraction for x > 2, then recur upward. The
//! upward recurrence for K is stable.

use super::SpecFunError;
use crate::scalar::Real;
use crate::specfun::gamma::temme_gammas;

const MAX_ITER: usize = 10_000;

/// (K_μ(x), K_{μ+1}(x)) for x ≤ 2, |μ| ≤ 1/2, via the Temme series.
fn temme_pair<T: Real>(mu: T, x: T) -> Result<(T, T), SpecFunError> {
    let one = T::one();
    let half = T::c(0.5);
    let pimu = T::PI() * mu;
    let fact = if pimu.abs() > T::c(1e-290) {
        pimu / pimu.sin()
    } else {
        one
    };
    let d = -(x * half).ln();
    let e = mu * d;
    let fact2 = if e.abs() > T::c(1e-290) { e.sinh() / e } else { one };
    let (gam1, gam2, gampl, gammi) = temme_gammas(mu);
    let mut ff = fact * (gam1 * e.cosh() + gam2 * fact2 * d);
    let mut sum = ff;
    let ee = e.exp();
    let mut p = half * ee / gampl;
    let mut q = half / (ee * gammi);
    let mut c = one;
    let d2 = x * x * T::c(0.25);
    let mut sum1 = p;
    for i in 1..=MAX_ITER {
        let fi = T::c(i as f64);
        ff = (fi * ff + p + q) / (fi * fi - mu * mu);
        c = c * d2 / fi;
        p = p / (fi - mu);
        q = q / (fi + mu);
        let del = c * ff;
        sum = sum + del;
        sum1 = sum1 + c * (p - fi * ff);
        if !sum.is_finite() || !sum1.is_finite() {
            return Err(SpecFunError::Overflow("bessel_k"));
        }
        if del.abs() < sum.abs() * T::epsilon() {
            return Ok((sum, sum1 * (T::c(2.0) / x)));
        }
    }
    Err(SpecFunError::NoConvergence("bessel_k small-x series"))
}

/// (K_μ(x), K_{μ+1}(x)) for x > 2, |μ| ≤ 1/2, via Steed's continued fraction.
fn steed_pair<T: Real>(mu: T, x: T) -> Result<(T, T), SpecFunError> {
    let one = T::one();
    let two = T::c(2.0);
    let mut b = two * (one + x);
    let mut d = one / b;
    let mut h = d;
    let mut delh = d;
    let mut q1 = T::zero();
    let mut q2 = one;
    let a1 = T::c(0.25) - mu * mu;
    let mut q = a1;
    let mut c = a1;
    let mut a = -a1;
    let mut s = one + q * delh;
    for i in 2..=MAX_ITER {
        a = a - two * T::c((i - 1) as f64);
        c = -a * c / T::c(i as f64);
        let qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q = q + c * qnew;
        b = b + two;
        d = one / (b + a * d);
        delh = (b * d - one) * delh;
        h = h + delh;
        let dels = q * delh;
        s = s + dels;
        if (dels / s).abs() < T::epsilon() {
            let h = a1 * h;
            let kmu = (T::PI() / (two * x)).sqrt() * (-x).exp() / s;
            let k1 = kmu * (mu + x + T::c(0.5) - h) / x;
            return Ok((kmu, k1));
        }
    }
    Err(SpecFunError::NoConvergence("bessel_k continued fraction"))
}

/// K_ν(x), x > 0, any real ν whose ladder stays in range. Callers validate x.
pub(crate) fn bessel_k_raw<T: Real>(nu: T, x: T) -> Result<T, SpecFunError> {
    let nu = nu.abs();
    let nl = (nu + T::c(0.5)).floor();
    let mu = nu - nl;
    let steps = nl.as_f64() as usize;
    let (mut kmu, mut k1) = if x <= T::c(2.0) {
        temme_pair(mu, x)?
    } else {
        steed_pair(mu, x)?
    };
    let two_over_x = T::c(2.0) / x;
    for i in 1..=steps {
        let knext = (mu + T::c(i as f64)) * two_over_x * k1 + kmu;
        kmu = k1;
        k1 = knext;
    }
    if kmu.is_finite() {
        Ok(kmu)
    } else {
        Err(SpecFunError::Overflow("bessel_k"))
    }
}

/// dK_ν/dx = -(K_{ν-1}(x) + K_{ν+1}(x)) / 2.
pub(crate) fn bessel_k_derivative_raw<T: Real>(nu: T, x: T) -> Result<T, SpecFunError> {
    let km = bessel_k_raw(nu - T::one(), x)?;
    let kp = bessel_k_raw(nu + T::one(), x)?;
    let d = -(km + kp) * T::c(0.5);
    if d.is_finite() {
        Ok(d)
    } else {
        Err(SpecFunError::Overflow("bessel_k_derivative"))
    }
}
