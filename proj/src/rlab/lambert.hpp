#pragma once

namespace rlab {

/// Principal branch W_0 of the Lambert W function: the w >= -1 with
/// w e^w = z. Defined for z >= -1/e; throws ErrorKind::domain below.
/// Residual |w e^w - z| <= 1e-13 * max(1, |z|).
double lambert_w0(double z);

/// W_0(e^s), stable for exponents far beyond the overflow range of e^s.
double lambert_w0_of_exp(double s);

}  // namespace rlab
