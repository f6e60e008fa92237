#pragma once

// Radial-temporal kernels of the regular, incoming and outgoing basis fields
// (k0 = 1 1/m):
//
//   c_nj(ct, r) = int_0^inf dk k e^{-k} (2k)^j L^{2j+1}_{n-j-1}(2k) k z_l(kr) e^{-i k ct}
//
// with z_l = j_l (regular), h2_l/2 (incoming) or h1_l/2 (outgoing).

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "cbasis/basis.hpp"
#include "cbasis/error.hpp"
#include "cbasis/specfun.hpp"

namespace cbasis {

enum class KernelKind { regular, incoming, outgoing };

inline char const* to_string(KernelKind kind) {
    switch (kind) {
    case KernelKind::regular: return "regular";
    case KernelKind::incoming: return "incoming";
    case KernelKind::outgoing: return "outgoing";
    }
    return "?";
}

inline constexpr double kTimeDomainWindow = 100.0; // bound on |ct| and r, in units of 1/k0
inline constexpr int kMaxProbeOrder = 4;

struct KernelSpec {
    int n = 2;
    int j = 1;
    int l = 1;
    KernelKind kind = KernelKind::regular;
    double r = 0.0; // m

    void validate() const {
        if (!BasisIndex::admissible(n, j)) {
            throw domain_error("KernelSpec: inadmissible (n=" + std::to_string(n) + ", j=" + std::to_string(j) + ")");
        }
        if (l < j - 1 || l > j + 1) {
            throw domain_error("KernelSpec: l must lie in {j-1, j, j+1}, got " + std::to_string(l));
        }
        if (!std::isfinite(r) || r < 0.0) {
            throw domain_error("KernelSpec: radius must be finite and >= 0");
        }
        if (kind != KernelKind::regular && r == 0.0) {
            throw domain_error(std::string("KernelSpec: ") + to_string(kind) + " kernel is irregular at r = 0");
        }
        if (r > kTimeDomainWindow) {
            throw domain_error("KernelSpec: radius exceeds the window " + std::to_string(kTimeDomainWindow));
        }
    }
};

struct RadialTemporalTrace {
    KernelSpec spec;
    std::vector<double> times;  // ct [m]
    std::vector<complex> values;
};

struct DerivativeOrder {
    int time = 0;   // d^t/d(ct)^t
    int radial = 0; // d^r/dr^r
};

namespace detail {

template <int N>
struct GaussLegendre {
    std::array<double, N> nodes{};   // on [-1, 1]
    std::array<double, N> weights{};

    GaussLegendre() {
        for (int i = 0; i < N; ++i) {
            double x = std::cos(std::numbers::pi * (i + 0.75) / (N + 0.5));
            double dp = 1.0;
            for (int iter = 0; iter < 100; ++iter) {
                double p0 = 1.0;
                double p1 = x;
                for (int k = 2; k <= N; ++k) {
                    double const p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                    p0 = p1;
                    p1 = p2;
                }
                dp = N * (x * p1 - p0) / (x * x - 1.0);
                double const step = p1 / dp;
                x -= step;
                if (std::abs(step) < 1e-16) {
                    break;
                }
            }
            nodes[N - 1 - i] = x;
            weights[N - 1 - i] = 2.0 / ((1.0 - x * x) * dp * dp);
        }
    }
};

inline constexpr int kPanelNodes = 20;

inline GaussLegendre<kPanelNodes> const& panel_rule() {
    static GaussLegendre<kPanelNodes> const rule;
    return rule;
}

// Coefficients c_l' with  d^d/dr^d z_l(kr) = k^d sum_l' c_l' z_l'(kr), from
// repeated use of (2l+1) z_l' = l z_{l-1} - (l+1) z_{l+1}. Index offset: l' = l - d + i.
inline std::vector<double> radial_derivative_coefficients(int l, int d) {
    std::vector<double> coeff(static_cast<std::size_t>(2 * d + 1), 0.0);
    coeff[static_cast<std::size_t>(d)] = 1.0;
    for (int step = 0; step < d; ++step) {
        std::vector<double> next(coeff.size(), 0.0);
        for (int i = 0; i < static_cast<int>(coeff.size()); ++i) {
            double const c = coeff[static_cast<std::size_t>(i)];
            if (c == 0.0) {
                continue;
            }
            int const lp = l - d + i;
            if (lp < 0) {
                continue;
            }
            double const denom = 2.0 * lp + 1.0;
            if (lp > 0) {
                next[static_cast<std::size_t>(i - 1)] += c * lp / denom;
            }
            next[static_cast<std::size_t>(i + 1)] -= c * (lp + 1.0) / denom;
        }
        coeff = std::move(next);
    }
    return coeff;
}

// k e^{-k} (2k)^j L^{2j+1}_{n-j-1}(2k) k
inline double spectral_weight(int n, int j, double k) {
    if (k == 0.0) {
        return 0.0;
    }
    return std::exp(-k + j * std::log(2.0 * k)) * laguerre(n - j - 1, 2 * j + 1, 2.0 * k) * k * k;
}

// Polynomial upper bound of |integrand| used only to place the cutoff.
inline double envelope_bound(int n, int j, int extra_power, double k) {
    int const s = n - j - 1;
    int const alpha = 2 * j + 1;
    auto const& lf = log_factorials();
    double const x = 2.0 * k;
    double poly = 0.0;
    double power = 1.0;
    for (int r = 0; r <= s; ++r) {
        poly += std::exp(lf(s + alpha) - lf(s - r) - lf(alpha + r) - lf(r)) * power;
        power *= x;
    }
    return std::exp(-k + (j + 2 + extra_power) * std::log(std::max(x, 1e-300))) * poly;
}

inline double cutoff_wavenumber(int n, int j, int extra_power) {
    double const step = 0.25;
    double peak = 0.0;
    double k = step;
    for (; k < 1e4; k += step) {
        double const b = envelope_bound(n, j, extra_power, k);
        if (b > peak) {
            peak = b;
        } else if (b < 1e-16 * peak) {
            break;
        }
    }
    return k;
}

inline void check_probe_order(DerivativeOrder const& d) {
    if (d.time < 0 || d.time > kMaxProbeOrder || d.radial < 0 || d.radial > kMaxProbeOrder) {
        throw domain_error("derivative order must lie in [0, " + std::to_string(kMaxProbeOrder) + "]");
    }
}

inline void check_time(double ct) {
    if (!std::isfinite(ct) || std::abs(ct) > kTimeDomainWindow) {
        throw domain_error("|ct| exceeds the window " + std::to_string(kTimeDomainWindow));
    }
}

} // namespace detail

// Kernel values of all three kinds for a fixed (n, j, l, r) on one shared set
// of panelized Gauss-Legendre nodes. The node set resolves the oscillation
// of e^{-ik ct} z_l(kr) for every |ct| <= ct_bound.
class KernelIntegrator {
  public:
    struct Values {
        complex regular;
        complex incoming;
        complex outgoing;

        complex of(KernelKind kind) const {
            switch (kind) {
            case KernelKind::incoming: return incoming;
            case KernelKind::outgoing: return outgoing;
            default: return regular;
            }
        }
    };

    KernelIntegrator(KernelSpec const& spec, double ct_bound, DerivativeOrder order = {})
        : spec_(spec), order_(order) {
        spec.validate();
        detail::check_probe_order(order);
        detail::check_time(ct_bound);

        int const extra_power = order.time + order.radial;
        double const k_max = detail::cutoff_wavenumber(spec.n, spec.j, extra_power);
        double const span = spec.r + std::abs(ct_bound);
        double const period = span > 0.0 ? 2.0 * std::numbers::pi / span : k_max;
        double const width = std::min(1.0, period);
        int const panels = static_cast<int>(std::ceil(k_max / width));
        double const h = k_max / panels;

        auto const coeff = detail::radial_derivative_coefficients(spec.l, order.radial);
        bool const need_irregular = spec.r > 0.0;
        auto const& gl = detail::panel_rule();

        k_.reserve(static_cast<std::size_t>(panels) * detail::kPanelNodes);
        for (int p = 0; p < panels; ++p) {
            double const a = p * h;
            for (int q = 0; q < detail::kPanelNodes; ++q) {
                double const k = a + 0.5 * h * (gl.nodes[q] + 1.0);
                double const w = 0.5 * h * gl.weights[q];
                double const x = k * spec.r;
                double jpart = 0.0;
                double ypart = 0.0;
                for (int i = 0; i < static_cast<int>(coeff.size()); ++i) {
                    double const c = coeff[static_cast<std::size_t>(i)];
                    int const lp = spec.l - order.radial + i;
                    if (c == 0.0 || lp < 0) {
                        continue;
                    }
                    jpart += c * spherical_bessel_j(lp, x);
                    if (need_irregular) {
                        ypart += c * spherical_bessel_y(lp, x);
                    }
                }
                double const base = w * detail::spectral_weight(spec.n, spec.j, k) * std::pow(k, order.radial);
                k_.push_back(k);
                regular_.push_back(base * jpart);
                irregular_.push_back(base * ypart);
            }
        }
    }

    KernelSpec const& spec() const noexcept { return spec_; }
    std::size_t node_count() const noexcept { return k_.size(); }

    Values evaluate(double ct) const {
        detail::check_time(ct);
        complex reg{};
        complex irr{};
        for (std::size_t i = 0; i < k_.size(); ++i) {
            complex phase = std::polar(1.0, -k_[i] * ct);
            if (order_.time > 0) {
                phase *= std::pow(complex(0.0, -k_[i]), order_.time);
            }
            reg += regular_[i] * phase;
            irr += irregular_[i] * phase;
        }
        complex const i_irr = complex(0.0, 1.0) * irr;
        return {reg, 0.5 * (reg - i_irr), 0.5 * (reg + i_irr)};
    }

  private:
    KernelSpec spec_;
    DerivativeOrder order_;
    std::vector<double> k_;
    std::vector<double> regular_;   // w F(k) d^r j_l(kr)
    std::vector<double> irregular_; // w F(k) d^r y_l(kr)
};

// Integrand of the kernel at a single wavenumber (before integration).
inline complex kernel_integrand(KernelSpec const& spec, double k, double ct) {
    spec.validate();
    if (!(k >= 0.0) || !std::isfinite(k)) {
        throw domain_error("kernel_integrand: wavenumber must be finite and >= 0");
    }
    double const weight = detail::spectral_weight(spec.n, spec.j, k);
    if (weight == 0.0) {
        return {};
    }
    double const x = k * spec.r;
    complex z;
    switch (spec.kind) {
    case KernelKind::regular: z = spherical_bessel_j(spec.l, x); break;
    case KernelKind::incoming: z = 0.5 * spherical_hankel(HankelKind::second, spec.l, x); break;
    case KernelKind::outgoing: z = 0.5 * spherical_hankel(HankelKind::first, spec.l, x); break;
    }
    return weight * z * std::polar(1.0, -k * ct);
}

inline complex radial_kernel(KernelSpec const& spec, double ct) {
    return KernelIntegrator(spec, ct).evaluate(ct).of(spec.kind);
}

// Time derivatives come from (-ik)^d under the integral, radial ones from
// the Bessel derivative recursion.
inline complex smoothness_probe(KernelSpec const& spec, double ct, DerivativeOrder order) {
    detail::check_probe_order(order);
    return KernelIntegrator(spec, ct, order).evaluate(ct).of(spec.kind);
}

inline RadialTemporalTrace wavelet_scan(KernelSpec const& spec, std::vector<double> const& ct_grid) {
    spec.validate();
    RadialTemporalTrace trace{spec, ct_grid, {}};
    if (ct_grid.empty()) {
        return trace;
    }
    double bound = 0.0;
    for (std::size_t i = 0; i < ct_grid.size(); ++i) {
        if (!std::isfinite(ct_grid[i]) || (i > 0 && ct_grid[i] < ct_grid[i - 1])) {
            throw domain_error("wavelet_scan: time grid must be finite and sorted");
        }
        bound = std::max(bound, std::abs(ct_grid[i]));
    }
    KernelIntegrator const integrator(spec, bound);
    trace.values.reserve(ct_grid.size());
    for (double ct : ct_grid) {
        trace.values.push_back(integrator.evaluate(ct).of(spec.kind));
    }
    return trace;
}

// Uniform grid ct_min, ct_min + step, ... up to ct_max; empty if ct_min > ct_max.
inline std::vector<double> time_grid(double ct_min, double ct_max, double step) {
    if (!(step > 0.0) || !std::isfinite(step) || !std::isfinite(ct_min) || !std::isfinite(ct_max)) {
        throw domain_error("time_grid: step must be positive and bounds finite");
    }
    std::vector<double> grid;
    if (ct_min > ct_max) {
        return grid;
    }
    auto const count = static_cast<std::size_t>(std::floor((ct_max - ct_min) / step + 1e-9)) + 1;
    grid.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        grid.push_back(ct_min + static_cast<double>(i) * step);
    }
    return grid;
}

// Indices of the local maxima of |value|, largest first.
inline std::vector<std::size_t> dominant_peaks(RadialTemporalTrace const& trace) {
    std::vector<std::size_t> peaks;
    auto const& v = trace.values;
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        double const a = std::abs(v[i]);
        if (a > std::abs(v[i - 1]) && a >= std::abs(v[i + 1])) {
            peaks.push_back(i);
        }
    }
    std::stable_sort(peaks.begin(), peaks.end(),
                     [&](std::size_t a, std::size_t b) { return std::abs(v[a]) > std::abs(v[b]); });
    return peaks;
}

// Share of sum |value|^2 carried by samples with ct < 0.
inline double negative_time_mass_fraction(RadialTemporalTrace const& trace) {
    double negative = 0.0;
    double total = 0.0;
    for (std::size_t i = 0; i < trace.values.size(); ++i) {
        double const m = std::norm(trace.values[i]);
        total += m;
        if (trace.times[i] < 0.0) {
            negative += m;
        }
    }
    return total > 0.0 ? negative / total : 0.0;
}

} // namespace cbasis
