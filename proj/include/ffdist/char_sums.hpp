#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "ffdist/field.hpp"

namespace ffdist {

enum class Method { brute, closed };

/// Result of a character-sum evaluation.  Brute and closed paths for the same
/// sum agree to 1e-9 absolute per q^(d/2) of magnitude.
struct SumValue {
  std::complex<double> value;
  std::int64_t terms = 0;
  Method method = Method::brute;
  bool degenerate = false;  // sphere evaluated at r = 0
};

/// g(k) = sum_x e_q(k x^2); |g(k)| = sqrt(q) for k != 0, g(0) = q.
SumValue gauss_g(FieldElem k, const FieldCtx& ctx);

/// G(m, k) = sum_{x in F_q^d} e_q(x.m - k|x|^2), d = m.size().
/// Closed form (k != 0): e_q((4k)^-1 |m|^2) * g(-k)^d; the sign of the phase
/// and the -k argument were fixed once by cross-validation against the brute
/// path, which is the ground truth for all conventions here.
/// Closed form throws std::domain_error for k = 0; the brute path evaluates
/// the full character sum q^d * [m = 0].
SumValue gauss_G(std::span<const FieldElem> m, FieldElem k, const FieldCtx& ctx,
                 Method method);

/// K(a, b) = sum_{j != 0} e_q(-(a j + b j^-1)).  K(0, 0) = q - 1 by
/// convention so parameter sweeps need not branch.
SumValue kloosterman(FieldElem a, FieldElem b, const FieldCtx& ctx);

/// n(t) = #{(u, v) : u^2 - v^2 = t}, exact count by O(q^2) enumeration.
std::int64_t count_diff_squares(FieldElem t, const FieldCtx& ctx);

/// n(t) for every t at once, one O(q^2) pass.
std::vector<std::int64_t> diff_squares_hist(const FieldCtx& ctx);

/// S^_r(m) = q^-d sum_{|x|^2 = r} e_q(-x.m), d = m.size().
/// The closed path completes the sphere constraint with a delta function over
/// j in F_q: the j = 0 term contributes [m = 0]/q and the j != 0 terms give
///   q^-(d+1) g(1)^d sum_{j != 0} chi(j)^d e_q(-(j r + j^-1 (4^-1 |m|^2))),
/// a Kloosterman-type sum (Legendre twist chi when d is odd).  The r = 0
/// result is flagged degenerate.
SumValue sphere_fourier(FieldElem r, std::span<const FieldElem> m, const FieldCtx& ctx,
                        Method method);

/// Closed form keyed by the value t = |m|^2 alone; the sum depends on m only
/// through t except for the [m = 0] mass, controlled by m_is_zero.
SumValue sphere_fourier_level(FieldElem r, FieldElem t, bool m_is_zero, int d,
                              const FieldCtx& ctx);

} // namespace ffdist
