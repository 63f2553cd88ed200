#pragma once

#include <complex>

namespace sincbound {

// Which combination of interval, decay profile and transformation family a
// certificate is issued for.  Cases 1 map the whole line, cases 2 and 3 the
// half line (algebraic resp. exponential decay at infinity).
enum class CaseTag { se_case1, se_case2, se_case3, de_case1, de_case2, de_case3 };

// Certified analyticity/decay data for a target function:
//
//   |f| <= K * envelope(.; alpha, beta)
//
// on the image of the strip {|Im z| < d} under the case's transformation.
// alpha governs the left end (whole line) or the origin (half line), beta
// the right end.  The d admissible for a computable constant is checked
// where the constant is evaluated: d < pi/2 everywhere except the third SE
// case, which only needs d < pi.
struct FunctionClass {
    CaseTag case_tag;
    double K;
    double alpha;
    double beta;
    double d;

    FunctionClass(CaseTag case_tag, double K, double alpha, double beta, double d);

    double mu() const { return alpha < beta ? alpha : beta; }
    double nu() const { return alpha > beta ? alpha : beta; }
};

// Mesh size and truncation indices driven by the single parameter n.
// Invariant: h > 0, M >= 1, N >= 1, max(M, N) == n.
struct SincParams {
    double h;
    int M;
    int N;
    int n;
};

// SE selection:
//   h = sqrt(pi d / (mu n)),
//   mu == alpha:  M = n, N = ceil(alpha n / beta)   (mirrored otherwise;
//   alpha == beta takes the first branch, giving M == N == n).
SincParams select_params_se(const FunctionClass& cls, int n);

// DE selection (cases 1 and 2), requires n >= nu e / (4 d):
//   h = log(4 d n / mu) / n,
//   mu == alpha:  M = n, N = n - floor(log(beta/alpha) / h)   (mirrored).
SincParams select_params_de(const FunctionClass& cls, int n);

// DE selection (case 3), requires n >= mu e / (2 d):
//   h = log(2 d n / mu) / n,  M = N = n.
SincParams select_params_de3(const FunctionClass& cls, int n);

enum class RateTag { se_rate, de_rate, de3_rate };

// A fully evaluable bound C * eps_n with
//   se_rate:   eps_n = sqrt(n) exp(-sqrt(pi d mu n))
//   de_rate:   eps_n = exp(-pi d n / log(4 d n / mu))
//   de3_rate:  eps_n = exp(-pi d n / log(2 d n / mu))
struct ErrorBound {
    double constant;
    RateTag rate;
    double d;
    double mu;

    ErrorBound(double constant, RateTag rate, double d, double mu);
};

// Explicit constants.  With s = sqrt(pi d mu), nu = max(alpha, beta):
//
//   case 1:  C = (2^(nu+1) K / s) [ 2 / (s (1 - e^(-2s)) (cos d)^nu) + 1 ]
//   case 2:  C = (2 K / s)       [ 2 / (s (1 - e^(-2s)) (cos d)^((alpha+beta)/2)) + 1 ]
//   case 3:  C = (2 K / s)       [ 2^(1+(alpha+beta)/2) / (s (1 - e^(-2s)) (cos(d/2))^(alpha+beta)) + 1 ]
ErrorBound constant_se(const FunctionClass& cls);

// Explicit constants, c = cos((pi/2) sin d):
//
//   case 1:  C = (2^(nu+1) K / (pi d mu)) [ 4 / (pi (1 - e^(-pi mu e/2)) c^nu cos d) + mu e^(pi nu/4) ]
//   case 2:  C = (2 K / (pi d mu))        [ 4 / (pi (1 - e^(-pi mu e/2)) c^((alpha+beta)/2) cos d) + mu e^(pi nu/4) ]
//   case 3:  C = (K / (pi^(1-mu) d mu))   [ 4 / (pi (1 - e^(-pi mu e)) c^(2 mu) (cos d)^(mu+1))
//                                           + mu 2^(1-mu) e^(mu (pi+2)/2) ]
ErrorBound constant_de(const FunctionClass& cls);

// C * eps_n for the given n; DE rates require the log argument to exceed 1.
double bound_value(const ErrorBound& b, int n);

// Decay envelopes:
//   cases 1:  |1 + z^2|^(-gamma/2), gamma = alpha for Re z < 0, beta otherwise
//   cases 2:  |z|^alpha |1 + z^2|^(-(alpha+beta)/2)
//   se case 3:  |z/(1+z)|^alpha |e^(-beta z)|
//   de case 3:  |z^mu e^(-mu z)| with mu = alpha
double envelope(CaseTag tag, std::complex<double> z, double alpha, double beta);

// Reduce a certificate |f(z)| <= K~ |z^alpha e^(-beta z)| with alpha != beta
// to the equal-exponent form needed by the third DE case: g(w) = f(scale w)
// satisfies |g(w)| <= K |w^mu e^(-mu w)| with scale = alpha/beta, mu = alpha
// and K = K~ (alpha/beta)^alpha.
struct Case3Rescale {
    double K;
    double mu;
    double scale;
};
Case3Rescale rescale_case3(double K_tilde, double alpha, double beta);

}  // namespace sincbound
