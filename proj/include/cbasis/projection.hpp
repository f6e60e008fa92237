#pragma once

// Expansion of multipolar spectra in the countable basis and back:
//   f_{n j m lambda} = int dk k c_nj(k) f_{j m lambda}(k)
//   f_{j m lambda}(k) = sum_n f_{n j m lambda} c_nj(k)

#include <cmath>
#include <map>
#include <string>
#include <vector>

#include "cbasis/basis.hpp"
#include "cbasis/error.hpp"
#include "cbasis/hilbert.hpp"

namespace cbasis {

// Truncated l2 sequence. Entries are kept in (lambda, n, j, m) order.
struct CoefficientVector {
    std::map<BasisIndex, complex> entries;
    int n_max = 0;
    ScaleConfig scale;

    complex at(BasisIndex const& index) const {
        auto it = entries.find(index);
        return it == entries.end() ? complex{} : it->second;
    }

    double norm_squared() const {
        double sum = 0.0;
        for (auto const& [idx, value] : entries) {
            sum += std::norm(value);
        }
        return sum;
    }

    void validate() const {
        for (auto const& [idx, value] : entries) {
            idx.validate();
            if (idx.n > n_max) {
                throw domain_error("CoefficientVector: index " + idx.to_string() + " exceeds n_max " +
                                   std::to_string(n_max));
            }
        }
    }
};

// Coefficients for every admissible index with n <= n_max and both
// helicities. Channels missing from f get zero coefficients.
inline CoefficientVector project(SpectralSet const& f, int n_max, QuadratureRule const& rule,
                                 ScaleConfig const& scale = {}) {
    if (n_max < 2) {
        throw domain_error("project: n_max must be >= 2, got " + std::to_string(n_max));
    }
    detail::require_on_rule(f, rule, "project");
    scale.validate();

    auto const& w = rule.weights();
    auto const& k = rule.nodes();
    std::map<std::pair<int, int>, std::vector<double>> weighted_profiles;
    auto profile = [&](int n, int j) -> std::vector<double> const& {
        auto [it, inserted] = weighted_profiles.try_emplace({n, j});
        if (inserted) {
            it->second.resize(k.size());
            for (std::size_t i = 0; i < k.size(); ++i) {
                it->second[i] = w[i] * c_multipolar(n, j, k[i], scale);
            }
        }
        return it->second;
    };

    CoefficientVector out;
    out.n_max = n_max;
    out.scale = scale;
    for (auto const& idx : enumerate_basis(n_max, {-1, 1})) {
        auto const* ch = f.find({idx.j, idx.m, idx.lambda});
        complex coefficient{};
        if (ch != nullptr) {
            auto const& p = profile(idx.n, idx.j);
            for (std::size_t i = 0; i < p.size(); ++i) {
                coefficient += p[i] * ch->samples[i];
            }
        }
        out.entries.emplace(idx, coefficient);
    }
    return out;
}

// Synthesizes f_{j m lambda}(k) on k_grid for every channel that appears in
// coeffs. Channels are emitted in (lambda, j, m) order.
inline SpectralSet reconstruct(CoefficientVector const& coeffs, std::vector<double> const& k_grid) {
    coeffs.validate();
    std::map<ChannelLabel, std::vector<complex>> channels;
    for (auto const& [idx, value] : coeffs.entries) {
        auto& samples = channels[{idx.j, idx.m, idx.lambda}];
        if (samples.empty()) {
            samples.assign(k_grid.size(), complex{});
        }
        if (value == complex{}) {
            continue;
        }
        for (std::size_t i = 0; i < k_grid.size(); ++i) {
            samples[i] += value * c_multipolar(idx.n, idx.j, k_grid[i], coeffs.scale);
        }
    }
    SpectralSet out{k_grid, {}};
    for (auto& [label, samples] : channels) {
        out.channels.push_back({label, std::move(samples)});
    }
    return out;
}

struct ResidualReport {
    double residual = 0.0;      // clamped to >= 0
    double raw = 0.0;           // <f|f> - sum |f_eta|^2 before clamping
    double norm_squared = 0.0;  // <f|f>
    double coefficient_norm_squared = 0.0;
    bool clamped = false;
};

// Truncation residual <f|f> - sum |f_eta|^2. Bessel's inequality makes it
// non-negative; quadrature noise below zero is clamped and flagged.
inline ResidualReport residual(SpectralSet const& f, CoefficientVector const& coeffs, QuadratureRule const& rule) {
    ResidualReport report;
    report.norm_squared = photon_number(f, rule);
    report.coefficient_norm_squared = coeffs.norm_squared();
    report.raw = report.norm_squared - report.coefficient_norm_squared;
    report.clamped = report.raw < 0.0;
    report.residual = report.clamped ? 0.0 : report.raw;
    return report;
}

// Dilatation (r, t) -> (alpha r, alpha t):  fbar(q) = alpha f(alpha q).
inline AnalyticSpectrum dilate(AnalyticSpectrum const& f, double alpha) {
    if (!(alpha > 0.0) || !std::isfinite(alpha)) {
        throw domain_error("dilate: alpha must be positive and finite");
    }
    AnalyticSpectrum out;
    out.reserve(f.size());
    for (auto const& ch : f) {
        out.push_back({ch.label, [g = ch.f, alpha](double q) { return alpha * g(alpha * q); }});
    }
    return out;
}

} // namespace cbasis
