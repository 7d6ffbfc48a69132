//! Gamma function (Lanczos, g = 7, 9 terms) plus the Taylor series for
//! 1/Γ(1+x) that the Temme-style Bessel seeds share.

use crate::scalar::Real;

/// Lanczos coefficients for g = 7, n = 9.
const LANCZOS: [f64; 9] = [
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
];

const SQRT_TWO_PI: f64 = 2.5066282746310002;

/// Γ(x) for x > 0, with reflection below 1/2. Callers validate the domain.
pub(crate) fn gamma_raw<T: Real>(x: T) -> T {
    if x < T::c(0.5) {
        // Γ(x) Γ(1-x) = π / sin(πx)
        let pi = T::PI();
        pi / ((pi * x).sin() * gamma_raw(T::one() - x))
    } else {
        let z = x - T::one();
        let mut acc = T::c(LANCZOS[0]);
        for (i, &p) in LANCZOS.iter().enumerate().skip(1) {
            acc = acc + T::c(p) / (z + T::c(i as f64));
        }
        let t = z + T::c(7.5);
        T::c(SQRT_TWO_PI) * t.powf(z + T::c(0.5)) * (-t).exp() * acc
    }
}

/// Taylor coefficients of 1/Γ(1+x) = Σ aₖ xᵏ, |x| ≤ 1/2.
const INV_GAMMA_1P: [f64; 26] = [
    1.0,
    0.5772156649015329,
    -0.6558780715202538,
    -0.0420026350340952,
    0.1665386113822915,
    -0.0421977345555443,
    -0.0096219715278770,
    0.0072189432466630,
    -0.0011651675918591,
    -0.0002152416741149,
    0.0001280502823882,
    -0.0000201348547807,
    -0.0000012504934821,
    0.0000011330272320,
    -0.0000002056338417,
    0.0000000061160950,
    0.0000000050020075,
    -0.0000000011812746,
    0.0000000001043427,
    0.0000000000077823,
    -0.0000000000036968,
    0.0000000000005100,
    -0.0000000000000206,
    -0.0000000000000054,
    0.0000000000000014,
    0.0000000000000001,
];

/// Cancellation-free seeds for the Temme series, |mu| ≤ 1/2:
/// gam1 = [1/Γ(1-mu) - 1/Γ(1+mu)] / (2 mu),
/// gam2 = [1/Γ(1-mu) + 1/Γ(1+mu)] / 2,
/// gampl = 1/Γ(1+mu), gammi = 1/Γ(1-mu).
///
/// Splitting the Taylor series of 1/Γ(1+x) into even and odd parts makes the
/// mu → 0 limit exact instead of a 0/0.
pub(crate) fn temme_gammas<T: Real>(mu: T) -> (T, T, T, T) {
    let mu2 = mu * mu;
    let mut s_odd = T::zero();
    let mut s_even = T::zero();
    let mut k = INV_GAMMA_1P.len();
    while k > 0 {
        k -= 1;
        if k % 2 == 1 {
            s_odd = s_odd * mu2 + T::c(INV_GAMMA_1P[k]);
        } else {
            s_even = s_even * mu2 + T::c(INV_GAMMA_1P[k]);
        }
    }
    let gam1 = -s_odd;
    let gam2 = s_even;
    let gampl = s_even + mu * s_odd;
    let gammi = s_even - mu * s_odd;
    (gam1, gam2, gampl, gammi)
}
