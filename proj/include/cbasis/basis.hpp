#pragma once

// Expansion functions of the countable basis |n j m lambda> in the
// multipolar and plane-wave representations.
//
//   c_nj(k)          = A_nj exp(-k/k0)/k0 (2k/k0)^j L^{2j+1}_{n-j-1}(2k/k0)        [m]
//   c_njml(k,th,ph)  = B_nj exp(-k/k0)/k0 (2k/k0)^j L^{2j+1}_{n-j-1}(2k/k0)
//                      exp(i m ph) d^j_{m lambda}(th)                              [m]
//
// with A_nj = sqrt(4 (n-j-1)!/(n+j)!) and B_nj = sqrt((2j+1)(n-j-1)!/(pi (n+j)!)).

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "cbasis/error.hpp"
#include "cbasis/specfun.hpp"

namespace cbasis {

struct BasisIndex {
    int n = 2;
    int j = 1;
    int m = 0;
    int lambda = 1;

    static bool admissible(int n, int j) noexcept { return n >= 2 && j >= 1 && j <= n - 1; }

    bool admissible() const noexcept {
        return admissible(n, j) && m >= -j && m <= j && (lambda == 1 || lambda == -1);
    }

    void validate() const {
        if (!admissible()) {
            throw domain_error("inadmissible basis index " + to_string());
        }
    }

    std::string to_string() const {
        return "(n=" + std::to_string(n) + ", j=" + std::to_string(j) + ", m=" + std::to_string(m) +
               ", lambda=" + std::to_string(lambda) + ")";
    }

    // Serialization order: (lambda, n, j, m).
    auto key() const noexcept { return std::tuple(lambda, n, j, m); }
    friend bool operator==(BasisIndex const&, BasisIndex const&) = default;
    friend auto operator<=>(BasisIndex const& a, BasisIndex const& b) noexcept { return a.key() <=> b.key(); }
};

struct ScaleConfig {
    double k0 = 1.0;                  // 1/m
    double hbar = 1.054571817e-34;    // J s
    double c0 = 299792458.0;          // m/s
    double eps0 = 8.8541878128e-12;   // F/m

    void validate() const {
        auto positive = [](double v) { return std::isfinite(v) && v > 0.0; };
        if (!positive(k0)) {
            throw domain_error("ScaleConfig: k0 must be positive and finite");
        }
        if (!positive(hbar) || !positive(c0) || !positive(eps0)) {
            throw domain_error("ScaleConfig: physical constants must be positive and finite");
        }
    }

    // hbar c0 k0, the energy quantum of the basis [J].
    double energy_quantum() const noexcept { return hbar * c0 * k0; }
};

struct WaveVector {
    double k = 0.0;     // 1/m
    double theta = 0.0; // [0, pi]
    double phi = 0.0;   // [-pi, pi)

    void validate() const {
        if (!(k >= 0.0) || !std::isfinite(k)) {
            throw domain_error("WaveVector: wavenumber must be finite and >= 0");
        }
        if (!(theta >= 0.0 && theta <= std::numbers::pi) || !std::isfinite(phi)) {
            throw domain_error("WaveVector: polar angle outside [0, pi] or non-finite azimuth");
        }
    }

    std::array<double, 3> cartesian() const {
        return {k * std::sin(theta) * std::cos(phi), k * std::sin(theta) * std::sin(phi), k * std::cos(theta)};
    }
};

namespace detail {

inline void require_admissible(int n, int j, char const* who) {
    if (!BasisIndex::admissible(n, j)) {
        throw domain_error(std::string(who) + ": inadmissible (n=" + std::to_string(n) + ", j=" + std::to_string(j) +
                           "), need n >= 2 and 1 <= j <= n-1");
    }
}

// exp(-k/k0)/k0 (2k/k0)^j L^{2j+1}_{n-j-1}(2k/k0), shared by both representations.
inline double spectral_profile(int n, int j, double k, double k0) {
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw domain_error("expansion function: wavenumber must be finite and >= 0");
    }
    if (k == 0.0) {
        return 0.0;
    }
    double const x = 2.0 * k / k0;
    double const envelope = std::exp(-k / k0 + j * std::log(x)) / k0;
    if (envelope == 0.0) {
        return 0.0;
    }
    return envelope * laguerre(n - j - 1, 2 * j + 1, x);
}

} // namespace detail

inline double multipolar_norm(int n, int j) {
    detail::require_admissible(n, j, "multipolar_norm");
    auto const& lf = log_factorials();
    return std::sqrt(4.0 * std::exp(lf(n - j - 1) - lf(n + j)));
}

inline double planewave_norm(int n, int j) {
    detail::require_admissible(n, j, "planewave_norm");
    auto const& lf = log_factorials();
    return std::sqrt((2.0 * j + 1.0) * std::exp(lf(n - j - 1) - lf(n + j)) / std::numbers::pi);
}

// Multipolar expansion function c_nj(k) [m]. Independent of m and lambda.
inline double c_multipolar(int n, int j, double k, ScaleConfig const& scale = {}) {
    detail::require_admissible(n, j, "c_multipolar");
    return multipolar_norm(n, j) * detail::spectral_profile(n, j, k, scale.k0);
}

// Plane-wave expansion function c_{n j m lambda}(p) [m].
inline complex c_planewave(BasisIndex const& index, WaveVector const& p, ScaleConfig const& scale = {}) {
    index.validate();
    p.validate();
    double const radial = planewave_norm(index.n, index.j) * detail::spectral_profile(index.n, index.j, p.k, scale.k0);
    return radial * std::polar(1.0, index.m * p.phi) * wigner_small_d(index.j, index.m, index.lambda, p.theta);
}

// All admissible indices with n <= n_max and lambda in lambda_set, ordered by
// (lambda, n, j, m). Optional filters keep only the given j or m.
inline std::vector<BasisIndex> enumerate_basis(int n_max, std::vector<int> lambda_set = {-1, 1},
                                               std::optional<int> j_filter = std::nullopt,
                                               std::optional<int> m_filter = std::nullopt) {
    std::vector<BasisIndex> out;
    if (n_max < 2) {
        return out;
    }
    std::sort(lambda_set.begin(), lambda_set.end());
    lambda_set.erase(std::unique(lambda_set.begin(), lambda_set.end()), lambda_set.end());
    for (int lambda : lambda_set) {
        if (lambda != 1 && lambda != -1) {
            throw domain_error("enumerate_basis: helicity must be +1 or -1, got " + std::to_string(lambda));
        }
        for (int n = 2; n <= n_max; ++n) {
            for (int j = 1; j <= n - 1; ++j) {
                if (j_filter && *j_filter != j) {
                    continue;
                }
                for (int m = -j; m <= j; ++m) {
                    if (m_filter && *m_filter != m) {
                        continue;
                    }
                    out.push_back({n, j, m, lambda});
                }
            }
        }
    }
    return out;
}

// Number of indices per helicity: sum_{n=2}^{n_max} (n^2 - 1).
inline long basis_count_per_helicity(int n_max) {
    long count = 0;
    for (int n = 2; n <= n_max; ++n) {
        count += static_cast<long>(n) * n - 1;
    }
    return count;
}

} // namespace cbasis
