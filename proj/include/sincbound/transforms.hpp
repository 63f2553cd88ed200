#pragma once

namespace sincbound {

// Conformal maps used as variable transformations:
//
//   se1(x) = sinh x                        onto (-inf, inf)
//   se2(x) = e^x                           onto (0, inf)
//   se3(x) = arcsinh(e^x)                  onto (0, inf)
//   de1(t) = sinh((pi/2) sinh t)           onto (-inf, inf)
//   de2(t) = exp((pi/2) sinh t)            onto (0, inf)
//   de3_old(t)     = log(1 + e^((pi/2) sinh t))   onto (0, inf)
//   de3_ddagger(t) = log(1 + e^(pi sinh t))       onto (0, inf)
enum class Transform { se1, se2, se3, de1, de2, de3_old, de3_ddagger };

const char* name(Transform kind);
bool is_half_line(Transform kind);  // true when the map targets (0, inf)

// psi(x).  Strictly increasing; stays inside the target interval.  Values
// beyond the double range are saturated so the result is finite for any
// finite x (the experiment node arguments never reach that regime).
double forward(Transform kind, double x);

// psi^{-1}(t) for t strictly inside the target interval, evaluated through
// log1p/expm1 forms so the grid extremes 2^-50 and 2^50 stay accurate.
double inverse(Transform kind, double t);

}  // namespace sincbound
