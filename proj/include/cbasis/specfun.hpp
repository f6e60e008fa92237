#pragma once

// Special functions shared by every other module: generalized Laguerre
// polynomials, Wigner small-d matrices, scalar spherical harmonics,
// spherical Bessel/Hankel functions and log-factorial tables.
//
// Everything here is a pure function of its arguments. The only table,
// the log-factorial table, is built once and never mutated.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <string>
#include <vector>

#include "cbasis/error.hpp"

namespace cbasis {

using complex = std::complex<double>;

inline constexpr int kLaguerreDegreeCap = 200;
inline constexpr int kWignerDegreeCap = 50;
inline constexpr int kBesselOrderCap = 200;

// log(a!) for integer a in [0, max_arg].
class LogFactorialTable {
  public:
    explicit LogFactorialTable(int max_arg) : max_arg_(max_arg), values_(static_cast<std::size_t>(max_arg) + 1) {
        if (max_arg < 1) {
            throw domain_error("LogFactorialTable: max_arg must be >= 1");
        }
        values_[0] = 0.0;
        values_[1] = 0.0;
        for (int a = 2; a <= max_arg; ++a) {
            values_[a] = std::lgamma(static_cast<double>(a) + 1.0);
        }
    }

    int max_arg() const noexcept { return max_arg_; }
    std::vector<double> const& values() const noexcept { return values_; }

    double operator()(int a) const {
        if (a < 0 || a > max_arg_) {
            throw domain_error("log-factorial argument " + std::to_string(a) + " outside [0, " +
                               std::to_string(max_arg_) + "]");
        }
        return values_[static_cast<std::size_t>(a)];
    }

    // a! / b!
    double ratio(int a, int b) const { return std::exp((*this)(a) - (*this)(b)); }

  private:
    int max_arg_;
    std::vector<double> values_;
};

inline LogFactorialTable const& log_factorials() {
    static LogFactorialTable const table(1024);
    return table;
}

// ---------------------------------------------------------------------------
// Generalized Laguerre polynomials
// ---------------------------------------------------------------------------

// L^s_l(rho) by the three-term recurrence in the degree
//   (k+1) L_{k+1} = (2k+1+s-rho) L_k - (k+s) L_{k-1}.
inline double laguerre(int degree, int superscript, double rho, int cap = kLaguerreDegreeCap) {
    if (degree < 0 || degree > cap) {
        throw domain_error("laguerre: degree " + std::to_string(degree) + " outside [0, " + std::to_string(cap) + "]");
    }
    if (superscript < 0) {
        throw domain_error("laguerre: negative superscript");
    }
    if (!std::isfinite(rho)) {
        throw domain_error("laguerre: non-finite argument");
    }
    double const s = superscript;
    double prev = 1.0;
    if (degree == 0) {
        return prev;
    }
    double cur = 1.0 + s - rho;
    for (int k = 1; k < degree; ++k) {
        double const next = ((2.0 * k + 1.0 + s - rho) * cur - (k + s) * prev) / (k + 1.0);
        prev = cur;
        cur = next;
    }
    return cur;
}

// ---------------------------------------------------------------------------
// Wigner small-d matrices and scalar spherical harmonics
// ---------------------------------------------------------------------------

// d^j_{m lambda}(theta) in the convention of Tung, Chap. 7 (= Wigner/Rose):
//   sum_k (-1)^{k+m-lambda} sqrt((j+m)!(j-m)!(j+lambda)!(j-lambda)!)
//         / ((j+lambda-k)! k! (m-lambda+k)! (j-m-k)!)
//         cos(theta/2)^{2j+lambda-m-2k} sin(theta/2)^{m-lambda+2k}
inline double wigner_small_d(int j, int m, int lambda, double theta, int cap = kWignerDegreeCap) {
    if (j < 0 || j > cap) {
        throw domain_error("wigner_small_d: j " + std::to_string(j) + " outside [0, " + std::to_string(cap) + "]");
    }
    if (std::abs(m) > j || std::abs(lambda) > j) {
        throw domain_error("wigner_small_d: |m| and |lambda| must not exceed j");
    }
    if (!std::isfinite(theta)) {
        throw domain_error("wigner_small_d: non-finite angle");
    }
    auto const& lf = log_factorials();
    double const c = std::cos(0.5 * theta);
    double const s = std::sin(0.5 * theta);
    double const log_prefactor = 0.5 * (lf(j + m) + lf(j - m) + lf(j + lambda) + lf(j - lambda));

    int const k_min = std::max(0, lambda - m);
    int const k_max = std::min(j + lambda, j - m);
    double sum = 0.0;
    for (int k = k_min; k <= k_max; ++k) {
        int const cos_power = 2 * j + lambda - m - 2 * k;
        int const sin_power = m - lambda + 2 * k;
        double const magnitude =
            std::exp(log_prefactor - lf(j + lambda - k) - lf(k) - lf(m - lambda + k) - lf(j - m - k));
        double const sign = ((k + m - lambda) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * magnitude * std::pow(c, cos_power) * std::pow(s, sin_power);
    }
    return sum;
}

inline complex scalar_spherical_harmonic(int j, int m, double theta, double phi) {
    if (j < 0 || std::abs(m) > j) {
        throw domain_error("scalar_spherical_harmonic: requires j >= 0 and |m| <= j");
    }
    double const norm = std::sqrt((2.0 * j + 1.0) / (4.0 * std::numbers::pi));
    return norm * std::polar(1.0, m * phi) * wigner_small_d(j, m, 0, theta);
}

// ---------------------------------------------------------------------------
// Spherical Bessel and Hankel functions of real argument
// ---------------------------------------------------------------------------

namespace detail {

inline double spherical_bessel_j_series(int l, double x) {
    // x^l / (2l+1)!! * sum_k (-x^2/2)^k / (k! (2l+3)(2l+5)...(2l+2k+1))
    double lead = 1.0;
    for (int i = 1; i <= l; ++i) {
        lead *= x / (2.0 * i + 1.0);
    }
    double const half_x2 = -0.5 * x * x;
    double term = 1.0;
    double sum = 1.0;
    for (int k = 0; k < 200; ++k) {
        term *= half_x2 / ((k + 1.0) * (2.0 * l + 2.0 * k + 3.0));
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum)) {
            break;
        }
    }
    return lead * sum;
}

inline double spherical_bessel_j0(double x) { return std::sin(x) / x; }
inline double spherical_bessel_j1(double x) { return std::sin(x) / (x * x) - std::cos(x) / x; }

} // namespace detail

// j_l(x) for x >= 0. Power series below x = 1, upward recurrence for l <= x,
// Miller's downward recurrence otherwise.
inline double spherical_bessel_j(int l, double x, int cap = kBesselOrderCap) {
    if (l < 0 || l > cap) {
        throw domain_error("spherical_bessel_j: order " + std::to_string(l) + " outside [0, " + std::to_string(cap) + "]");
    }
    if (!(x >= 0.0) || !std::isfinite(x)) {
        throw domain_error("spherical_bessel_j: argument must be finite and >= 0");
    }
    if (x == 0.0) {
        return l == 0 ? 1.0 : 0.0;
    }
    if (x < 1.0) {
        return detail::spherical_bessel_j_series(l, x);
    }
    double const j0 = detail::spherical_bessel_j0(x);
    if (l == 0) {
        return j0;
    }
    double const j1 = detail::spherical_bessel_j1(x);
    if (l == 1) {
        return j1;
    }
    if (static_cast<double>(l) <= x) {
        double prev = j0;
        double cur = j1;
        for (int k = 1; k < l; ++k) {
            double const next = (2.0 * k + 1.0) / x * cur - prev;
            prev = cur;
            cur = next;
        }
        return cur;
    }

    // Miller: recur downward from well above l with arbitrary seeds, then
    // normalize against whichever of j0, j1 is larger in magnitude.
    int const start = l + 20 + static_cast<int>(std::sqrt(40.0 * l)) + static_cast<int>(x);
    double upper = 0.0;
    double cur = 1e-30;
    double at_l = 0.0;
    double f1 = 0.0;
    for (int k = start; k > 0; --k) {
        double const lower = (2.0 * k + 1.0) / x * cur - upper;
        upper = cur;
        cur = lower;
        if (std::abs(cur) > 1e250) {
            cur *= 1e-250;
            upper *= 1e-250;
            at_l *= 1e-250;
            f1 *= 1e-250;
        }
        if (k - 1 == l) {
            at_l = cur;
        }
        if (k - 1 == 1) {
            f1 = cur;
        }
    }
    // cur now holds the unnormalized j0, f1 the unnormalized j1
    double const scale = std::abs(j0) >= std::abs(j1) ? j0 / cur : j1 / f1;
    return at_l * scale;
}

// y_l(x) for x > 0 by upward recurrence (y_l is the dominant solution).
inline double spherical_bessel_y(int l, double x, int cap = kBesselOrderCap) {
    if (l < 0 || l > cap) {
        throw domain_error("spherical_bessel_y: order " + std::to_string(l) + " outside [0, " + std::to_string(cap) + "]");
    }
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw domain_error("spherical_bessel_y: argument must be finite and > 0");
    }
    double prev = -std::cos(x) / x;
    if (l == 0) {
        return prev;
    }
    double cur = -std::cos(x) / (x * x) - std::sin(x) / x;
    for (int k = 1; k < l; ++k) {
        double const next = (2.0 * k + 1.0) / x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

enum class HankelKind { first = 1, second = 2 };

// h^1_l = j_l + i y_l, h^2_l = j_l - i y_l. The real part comes from the
// Miller-stable j_l so that h1 + h2 = 2 j_l holds for l > x as well.
inline complex spherical_hankel(HankelKind kind, int l, double x, int cap = kBesselOrderCap) {
    if (!(x > 0.0)) {
        throw domain_error("spherical_hankel: argument must be > 0 (irregular at the origin)");
    }
    double const jl = spherical_bessel_j(l, x, cap);
    double const yl = spherical_bessel_y(l, x, cap);
    return kind == HankelKind::first ? complex(jl, yl) : complex(jl, -yl);
}

inline complex spherical_hankel(int kind, int l, double x, int cap = kBesselOrderCap) {
    if (kind != 1 && kind != 2) {
        throw domain_error("spherical_hankel: kind must be 1 or 2");
    }
    return spherical_hankel(kind == 1 ? HankelKind::first : HankelKind::second, l, x, cap);
}

} // namespace cbasis
