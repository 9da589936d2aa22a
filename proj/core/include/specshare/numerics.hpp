#ifndef SPECSHARE_NUMERICS_HPP
#define SPECSHARE_NUMERICS_HPP

#include <functional>

#include "specshare/errors.hpp"

namespace specshare {

/// Tolerances for the adaptive quadrature routines. The integral is accepted
/// once the accumulated error bound drops below max(abs_tol, rel_tol*|I|).
struct QuadratureSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_subdivisions = 2000;
};

/// Gamma function. Throws std::domain_error at the poles (x = 0, -1, -2, ...).
double gamma_fn(double x);

/// Upper incomplete gamma function Gamma(a, x) = int_x^inf t^{a-1} e^{-t} dt,
/// x > 0. Negative non-integer a is supported through the downward recurrence
/// Gamma(a, x) = (Gamma(a+1, x) - x^a e^{-x}) / a; a = 0 falls back to the
/// exponential integral E1.
double upper_incomplete_gamma(double a, double x);

/// Gauss hypergeometric function 2F1(a, b; c; z) for real parameters and
/// z <= 0 or |z| < 1. Arguments left of the convergence disk are mapped back
/// with the Pfaff transformation z -> z/(z-1); for very negative z the
/// two-term 1/(1-z) linear transformation is used instead when a - b is not
/// an integer (the Pfaff series needs too many terms there).
double gauss_2f1(double a, double b, double c, double z, double tol = 1e-12);

/// Integral of f over [0, inf), computed by mapping t = u/(1-u) onto (0,1)
/// and subdividing adaptively with a Gauss-Kronrod 7/15 rule. Deterministic
/// for fixed inputs. Throws QuadratureError (with the best estimate and an
/// error bound) if the tolerance cannot be met within max_subdivisions.
double integrate_semi_infinite(const std::function<double(double)>& f,
                               const QuadratureSpec& spec = {});

/// Adaptive Gauss-Kronrod integral of f over the finite interval [lo, hi].
double integrate_finite(const std::function<double(double)>& f, double lo, double hi,
                        const QuadratureSpec& spec = {});

/// Interference factor rho(T, alpha) = T^{2/alpha} int_{T^{-2/alpha}}^inf
/// (1 + u^{alpha/2})^{-1} du for linear SINR threshold T > 0 and path-loss
/// exponent alpha > 2. Evaluated by quadrature after the substitution
/// u = T^{-2/alpha} e^y, which is smooth and overflow-free for any T.
double rho(double t_lin, double alpha);

/// Same integral evaluated through the hypergeometric identity
/// rho = 2T/(alpha-2) * 2F1(1, 1-2/alpha; 2-2/alpha; -T). Kept as a separate
/// code path so the two routes can check each other.
double rho_hypergeometric(double t_lin, double alpha);

/// Quantile of the standard normal distribution (Acklam's rational
/// approximation, |relative error| < 1.2e-9). Used for confidence intervals.
double inverse_normal_cdf(double q);

} // namespace specshare

#endif
