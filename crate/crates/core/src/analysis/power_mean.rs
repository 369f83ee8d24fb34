use super::quad::{integrate, uniform_points, QuadConfig};
use crate::error::{Error, Result};
use crate::scalar::{cplx, Scalar};
use crate::zeros::{scan_zeros, ScanConfig};
use crate::zeta::EpsteinZeta;

/// `∫_T^{T+H} |ζ_Q(1/2 + it)| dt`. `H = 0` gives 0; otherwise `H ≥ (log T)^{0.1}`.
///
/// The critical zeros inside the range are located first and used as break
/// points, so the integrand is smooth on every panel.
#[allow(non_snake_case)]
pub fn first_power_mean<T: Scalar>(ev: &EpsteinZeta<T>, T_: T, H: T, cfg: &QuadConfig) -> Result<T> {
    if H == T::zero() {
        return Ok(T::zero());
    }
    if !(T_ > T::one()) || !(H >= T_.ln().powf(T::lit(0.1))) {
        return Err(Error::InvalidArgument(format!("need T > 1 and H >= (log T)^0.1, got T = {T_}, H = {H}")));
    }
    let half = T::lit(0.5);
    let (lo, hi) = (T_, T_ + H);
    let zeros = scan_zeros(ev, lo, hi, &ScanConfig::default())?.zeros;
    let panel = T::lit(0.25);
    let mut points = vec![lo];
    for z in zeros.iter().map(|z| z.t).chain(std::iter::once(hi)) {
        let start = *points.last().unwrap();
        if z > start {
            points.extend(uniform_points(start, z, panel).into_iter().skip(1));
        }
    }
    let r = integrate(|t: T| Ok([ev.zeta_q(cplx(half, t))?.zeta.norm()]), &points, cfg)?;
    Ok(r.value[0])
}
