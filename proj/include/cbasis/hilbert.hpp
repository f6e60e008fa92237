#pragma once

// Scalar products, photon number and energy over the measure  int_0^inf dk k,
// realized by Gauss-Laguerre quadrature after the substitution x = 2k/k0.

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cbasis/basis.hpp"
#include "cbasis/error.hpp"
#include "cbasis/specfun.hpp"

namespace cbasis {

inline constexpr int kDefaultQuadratureOrder = 200;
inline constexpr int kMaxQuadratureOrder = 512;

// Nodes and weights for  int_0^inf dk k F(k)  where F carries exp(-2k/k0).
//
// The standard Gauss-Laguerre rule (weight e^{-x}) is kept alongside, with
// log-weights because the tail weights underflow for large orders.
class QuadratureRule {
  public:
    QuadratureRule(std::vector<double> std_nodes, std::vector<double> log_std_weights, double k0)
        : order_(static_cast<int>(std_nodes.size())), k0_(k0), std_nodes_(std::move(std_nodes)),
          log_std_weights_(std::move(log_std_weights)) {
        nodes_.resize(std_nodes_.size());
        weights_.resize(std_nodes_.size());
        double const half_k0 = 0.5 * k0_;
        for (std::size_t i = 0; i < std_nodes_.size(); ++i) {
            double const x = std_nodes_[i];
            nodes_[i] = half_k0 * x;
            // dk k = (k0/2)^2 x dx, and the e^{-x} weight is folded back in
            weights_[i] = half_k0 * half_k0 * x * std::exp(x + log_std_weights_[i]);
        }
    }

    int order() const noexcept { return order_; }
    double k0() const noexcept { return k0_; }

    // Wavenumbers k_i [1/m], strictly increasing and positive.
    std::vector<double> const& nodes() const noexcept { return nodes_; }
    // W_i with  sum_i W_i F(k_i) ~ int dk k F(k).
    std::vector<double> const& weights() const noexcept { return weights_; }

    std::vector<double> const& standard_nodes() const noexcept { return std_nodes_; }
    std::vector<double> const& log_standard_weights() const noexcept { return log_std_weights_; }

    // int_0^inf e^{-x} g(x) dx
    template <typename G>
    auto integrate_standard(G&& g) const {
        using value_t = decltype(g(0.0));
        value_t sum{};
        for (std::size_t i = 0; i < std_nodes_.size(); ++i) {
            sum += std::exp(log_std_weights_[i]) * g(std_nodes_[i]);
        }
        return sum;
    }

    // int_0^inf dk k F(k)
    template <typename F>
    auto integrate_measure(F&& f) const {
        using value_t = decltype(f(0.0));
        value_t sum{};
        for (std::size_t i = 0; i < nodes_.size(); ++i) {
            sum += weights_[i] * f(nodes_[i]);
        }
        return sum;
    }

    bool same_rule(QuadratureRule const& other) const noexcept {
        return order_ == other.order_ && k0_ == other.k0_;
    }

  private:
    int order_;
    double k0_;
    std::vector<double> std_nodes_;
    std::vector<double> log_std_weights_;
    std::vector<double> nodes_;
    std::vector<double> weights_;
};

namespace detail {

// L_{n-1}(x) and L_n(x) (superscript 0) sharing a common scale factor
// exp(log_scale); the recurrence is rescaled to stay finite for large x.
struct ScaledLaguerrePair {
    long double below;
    long double at;
    long double log_scale;
};

inline ScaledLaguerrePair scaled_laguerre_pair(int n, long double x) {
    long double lower = 1.0L;   // L_{k-1}
    long double cur = 1.0L - x; // L_k
    long double log_scale = 0.0L;
    for (int k = 1; k < n; ++k) {
        long double const next = ((2.0L * k + 1.0L - x) * cur - k * lower) / (k + 1.0L);
        lower = cur;
        cur = next;
        if (std::abs(cur) > 1e200L) {
            cur *= 1e-200L;
            lower *= 1e-200L;
            log_scale += 200.0L * std::log(10.0L);
        }
    }
    return {lower, cur, log_scale};
}

} // namespace detail

// Gauss-Laguerre rule of the given order, mapped to wavenumbers with x = 2k/k0.
//
// Nodes: eigenvalues of the Jacobi matrix (Golub-Welsch), polished by Newton
// steps on L_order. Weights: w_i = 1 / (x_i L_order'(x_i)^2), kept as
// logarithms.
inline QuadratureRule gauss_laguerre_rule(int order = kDefaultQuadratureOrder, double k0 = 1.0) {
    if (order < 2 || order > kMaxQuadratureOrder) {
        throw domain_error("gauss_laguerre_rule: order " + std::to_string(order) + " outside [2, " +
                           std::to_string(kMaxQuadratureOrder) + "]");
    }
    if (!(k0 > 0.0) || !std::isfinite(k0)) {
        throw domain_error("gauss_laguerre_rule: k0 must be positive and finite");
    }

    Eigen::VectorXd diag(order);
    Eigen::VectorXd sub(order - 1);
    for (int i = 0; i < order; ++i) {
        diag(i) = 2.0 * i + 1.0;
        if (i + 1 < order) {
            sub(i) = i + 1.0;
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw domain_error("gauss_laguerre_rule: Jacobi eigenvalue solve failed");
    }
    Eigen::VectorXd const eig = solver.eigenvalues();

    // Newton polishing runs in extended precision: the degree recurrence
    // loses ~n^2 eps near the origin, which the smallest nodes would inherit.
    std::vector<double> nodes(static_cast<std::size_t>(order));
    std::vector<double> log_weights(static_cast<std::size_t>(order));
    long double const n = order;
    for (int i = 0; i < order; ++i) {
        long double x = eig(i);
        for (int iter = 0; iter < 10; ++iter) {
            auto const p = detail::scaled_laguerre_pair(order, x);
            // x L_n' = n (L_n - L_{n-1})
            long double const derivative = n * (p.at - p.below) / x;
            long double const step = p.at / derivative;
            x -= step;
            if (std::abs(step) <= 1e-19L * x) {
                break;
            }
        }
        auto const p = detail::scaled_laguerre_pair(order, x);
        long double const derivative = n * (p.at - p.below) / x;
        // w = 1 / (x L_n'(x)^2)
        nodes[i] = static_cast<double>(x);
        log_weights[i] = static_cast<double>(-std::log(x) - 2.0L * (std::log(std::abs(derivative)) + p.log_scale));
    }
    for (int i = 1; i < order; ++i) {
        if (!(nodes[i] > nodes[i - 1]) || !(nodes[i - 1] > 0.0)) {
            throw domain_error("gauss_laguerre_rule: node refinement lost ordering at order " + std::to_string(order));
        }
    }
    return QuadratureRule(std::move(nodes), std::move(log_weights), k0);
}

// ---------------------------------------------------------------------------
// Spectra sampled on quadrature nodes
// ---------------------------------------------------------------------------

// (j, m, lambda) labels of one multipolar channel.
struct ChannelLabel {
    int j = 1;
    int m = 0;
    int lambda = 1;

    bool admissible() const noexcept { return j >= 1 && m >= -j && m <= j && (lambda == 1 || lambda == -1); }
    auto key() const noexcept { return std::tuple(lambda, j, m); }
    friend bool operator==(ChannelLabel const&, ChannelLabel const&) = default;
    friend auto operator<=>(ChannelLabel const& a, ChannelLabel const& b) noexcept { return a.key() <=> b.key(); }

    std::string to_string() const {
        return "(j=" + std::to_string(j) + ", m=" + std::to_string(m) + ", lambda=" + std::to_string(lambda) + ")";
    }
};

// Samples of f_{j m lambda}(k) [m] on the grid of the owning SpectralSet.
struct SpectralChannel {
    ChannelLabel label;
    std::vector<complex> samples;
};

// A multipolar spectrum: channels on one shared wavenumber grid.
struct SpectralSet {
    std::vector<double> k;
    std::vector<SpectralChannel> channels;

    SpectralChannel const* find(ChannelLabel const& label) const {
        for (auto const& ch : channels) {
            if (ch.label == label) {
                return &ch;
            }
        }
        return nullptr;
    }

    void validate() const {
        std::vector<ChannelLabel> seen;
        for (auto const& ch : channels) {
            if (!ch.label.admissible()) {
                throw domain_error("SpectralSet: inadmissible channel " + ch.label.to_string());
            }
            if (ch.samples.size() != k.size()) {
                throw contract_violation("SpectralSet: channel " + ch.label.to_string() + " has " +
                                         std::to_string(ch.samples.size()) + " samples for a grid of " +
                                         std::to_string(k.size()));
            }
            for (auto const& other : seen) {
                if (other == ch.label) {
                    throw contract_violation("SpectralSet: duplicate channel " + ch.label.to_string());
                }
            }
            seen.push_back(ch.label);
        }
    }
};

// f_{j m lambda}(k) as a callable, for spectra that must be evaluated off-grid.
struct AnalyticChannel {
    ChannelLabel label;
    std::function<complex(double)> f;
};

using AnalyticSpectrum = std::vector<AnalyticChannel>;

inline SpectralSet sample(AnalyticSpectrum const& spectrum, std::vector<double> const& k) {
    SpectralSet out{k, {}};
    out.channels.reserve(spectrum.size());
    for (auto const& ch : spectrum) {
        SpectralChannel sc{ch.label, {}};
        sc.samples.reserve(k.size());
        for (double kk : k) {
            sc.samples.push_back(ch.f(kk));
        }
        out.channels.push_back(std::move(sc));
    }
    out.validate();
    return out;
}

inline SpectralSet sample(AnalyticSpectrum const& spectrum, QuadratureRule const& rule) {
    return sample(spectrum, rule.nodes());
}

// The single-channel spectrum of basis vector |n j m lambda>.
inline SpectralSet sample_basis_vector(BasisIndex const& index, QuadratureRule const& rule,
                                       ScaleConfig const& scale = {}) {
    index.validate();
    SpectralChannel ch{{index.j, index.m, index.lambda}, {}};
    ch.samples.reserve(rule.nodes().size());
    for (double k : rule.nodes()) {
        ch.samples.emplace_back(c_multipolar(index.n, index.j, k, scale), 0.0);
    }
    return {rule.nodes(), {std::move(ch)}};
}

namespace detail {

inline void require_on_rule(SpectralSet const& f, QuadratureRule const& rule, char const* who) {
    if (f.k != rule.nodes()) {
        throw contract_violation(std::string(who) + ": spectrum is not sampled on the quadrature rule nodes (order " +
                                 std::to_string(rule.order()) + ", k0 " + std::to_string(rule.k0()) + ")");
    }
    f.validate();
}

} // namespace detail

// <f|g> = sum_{j m lambda} int dk k f*_{jml}(k) g_{jml}(k). Channels present in
// only one argument contribute exactly zero.
inline complex inner_product(SpectralSet const& f, SpectralSet const& g, QuadratureRule const& rule) {
    detail::require_on_rule(f, rule, "inner_product");
    detail::require_on_rule(g, rule, "inner_product");
    auto const& w = rule.weights();
    complex total{};
    for (auto const& fc : f.channels) {
        auto const* gc = g.find(fc.label);
        if (gc == nullptr) {
            continue;
        }
        complex sum{};
        for (std::size_t i = 0; i < w.size(); ++i) {
            sum += w[i] * std::conj(fc.samples[i]) * gc->samples[i];
        }
        total += sum;
    }
    return total;
}

inline double photon_number(SpectralSet const& f, QuadratureRule const& rule) {
    detail::require_on_rule(f, rule, "photon_number");
    auto const& w = rule.weights();
    double total = 0.0;
    for (auto const& ch : f.channels) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            total += w[i] * std::norm(ch.samples[i]);
        }
    }
    return total;
}

// <f|H|f> = sum int dk k (hbar c0 k) |f|^2  [J]
inline double energy(SpectralSet const& f, QuadratureRule const& rule, ScaleConfig const& scale = {}) {
    detail::require_on_rule(f, rule, "energy");
    scale.validate();
    auto const& w = rule.weights();
    auto const& k = rule.nodes();
    double total = 0.0;
    for (auto const& ch : f.channels) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            total += w[i] * k[i] * std::norm(ch.samples[i]);
        }
    }
    return scale.hbar * scale.c0 * total;
}

// ---------------------------------------------------------------------------
// Closed-form Laguerre integrals
// ---------------------------------------------------------------------------

inline constexpr int kFactorialOracleCap = 170;

// (s+alpha)!/s! as an exact integer product while it fits in a double mantissa.
inline double rising_factorial_ratio(int alpha, int s) {
    if (alpha < 0 || s < 0 || s + alpha > kFactorialOracleCap) {
        throw domain_error("Laguerre oracle: arguments outside the factorial cap " + std::to_string(kFactorialOracleCap));
    }
    double product = 1.0;
    for (int i = s + 1; i <= s + alpha; ++i) {
        product *= i;
    }
    return product;
}

// int_0^inf e^{-x} x^alpha L^alpha_s L^alpha_sbar dx = (s+alpha)!/s! delta_{s sbar}
inline double laguerre_overlap_oracle(int alpha, int s, int s_bar) {
    double const value = rising_factorial_ratio(alpha, s);
    if (s_bar < 0 || s_bar + alpha > kFactorialOracleCap) {
        throw domain_error("laguerre_overlap_oracle: s_bar outside the factorial cap");
    }
    return s == s_bar ? value : 0.0;
}

// int_0^inf e^{-x} x^{alpha+1} [L^alpha_s]^2 dx = (s+alpha)!/s! (2s+alpha+1)
inline double laguerre_energy_oracle(int alpha, int s) {
    return rising_factorial_ratio(alpha, s) * (2.0 * s + alpha + 1.0);
}

// ---------------------------------------------------------------------------
// Gram matrices of basis vectors
// ---------------------------------------------------------------------------

// Dense Gram matrix G_ab = <a|b> over the given indices. The c_nj are real,
// so G is real symmetric; entries between different channels are exactly 0.
inline std::vector<std::vector<double>> gram_matrix(std::vector<BasisIndex> const& indices,
                                                    QuadratureRule const& rule, ScaleConfig const& scale = {}) {
    scale.validate();
    std::map<std::pair<int, int>, std::vector<double>> profiles;
    for (auto const& idx : indices) {
        idx.validate();
        auto [it, inserted] = profiles.try_emplace({idx.n, idx.j});
        if (inserted) {
            it->second.reserve(rule.nodes().size());
            for (double k : rule.nodes()) {
                it->second.push_back(c_multipolar(idx.n, idx.j, k, scale));
            }
        }
    }
    auto const& w = rule.weights();
    std::size_t const count = indices.size();
    std::vector<std::vector<double>> gram(count, std::vector<double>(count, 0.0));
    for (std::size_t a = 0; a < count; ++a) {
        auto const& ia = indices[a];
        auto const& pa = profiles.at({ia.n, ia.j});
        for (std::size_t b = a; b < count; ++b) {
            auto const& ib = indices[b];
            if (ia.j != ib.j || ia.m != ib.m || ia.lambda != ib.lambda) {
                continue;
            }
            auto const& pb = profiles.at({ib.n, ib.j});
            double sum = 0.0;
            for (std::size_t i = 0; i < w.size(); ++i) {
                sum += w[i] * pa[i] * pb[i];
            }
            gram[a][b] = sum;
            gram[b][a] = sum;
        }
    }
    return gram;
}

} // namespace cbasis
