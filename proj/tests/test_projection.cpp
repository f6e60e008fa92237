#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cbasis/projection.hpp"

using namespace cbasis;
using Catch::Approx;

namespace {

QuadratureRule const& rule200() {
    static QuadratureRule const rule = gauss_laguerre_rule(200);
    return rule;
}

AnalyticSpectrum test_spectrum() {
    return {{{1, 0, 1}, [](double k) { return complex(k * k * std::exp(-k), 0.0); }}};
}

AnalyticSpectrum mixed_spectrum() {
    return {
        {{1, 0, 1}, [](double k) { return complex(k * k * std::exp(-k), 0.0); }},
        {{2, -1, -1}, [](double k) { return complex(0.3, -0.8) * k * k * k * std::exp(-1.4 * k); }},
        {{3, 3, 1}, [](double k) { return std::pow(k, 3) * std::exp(-0.8 * k) * std::polar(1.0, 0.5 * k); }},
    };
}

double max_coefficient_gap(CoefficientVector const& a, CoefficientVector const& b) {
    double worst = 0.0;
    for (auto const& [idx, v] : a.entries) {
        worst = std::max(worst, std::abs(v - b.at(idx)));
    }
    for (auto const& [idx, v] : b.entries) {
        worst = std::max(worst, std::abs(v - a.at(idx)));
    }
    return worst;
}

} // namespace

TEST_CASE("projection of a basis vector", "[projection]") {
    auto const& rule = rule200();
    BasisIndex const target{3, 1, 0, 1};
    auto const coeffs = project(sample_basis_vector(target, rule), 6, rule);
    CHECK(coeffs.entries.size() == 2 * static_cast<std::size_t>(basis_count_per_helicity(6)));
    CHECK(std::abs(coeffs.at(target) - 1.0) < 1e-10);
    double worst = 0.0;
    for (auto const& [idx, v] : coeffs.entries) {
        if (!(idx == target)) {
            worst = std::max(worst, std::abs(v));
        }
    }
    CHECK(worst < 1e-10);
    CHECK(coeffs.at({9, 1, 0, 1}) == complex{});
    CHECK_THROWS_AS(project(sample_basis_vector(target, rule), 1, rule), cbasis::domain_error);
    CHECK_THROWS_AS(project(sample_basis_vector(target, rule), 6, gauss_laguerre_rule(100)),
                    cbasis::contract_violation);
}

TEST_CASE("projection is linear", "[projection]") {
    auto const& rule = rule200();
    auto f = sample_basis_vector({2, 1, 0, 1}, rule);
    auto const c41 = sample_basis_vector({4, 1, 0, 1}, rule);
    for (std::size_t i = 0; i < f.k.size(); ++i) {
        f.channels[0].samples[i] += 2.0 * c41.channels[0].samples[i];
    }
    auto const coeffs = project(f, 6, rule);
    CHECK(std::abs(coeffs.at({2, 1, 0, 1}) - 1.0) < 1e-10);
    CHECK(std::abs(coeffs.at({4, 1, 0, 1}) - 2.0) < 1e-10);
    CHECK(std::abs(coeffs.at({3, 1, 0, 1})) < 1e-10);
}

TEST_CASE("l2 linearity on mixed spectra", "[projection][property]") {
    auto const& rule = rule200();
    auto const f = sample(mixed_spectrum(), rule);
    auto const g = sample(AnalyticSpectrum{{{2, -1, -1}, [](double k) { return complex(k * k * std::exp(-2.0 * k)); }},
                                           {{1, 1, -1}, [](double k) { return complex(0.0, k * std::exp(-k)); }}},
                          rule);
    complex const a{1.7, -0.4};
    complex const b{-0.6, 2.2};
    // a f + b g channel by channel, on the shared rule
    SpectralSet h{rule.nodes(), {}};
    for (auto const& ch : f.channels) {
        SpectralChannel out{ch.label, {}};
        auto const* gc = g.find(ch.label);
        for (std::size_t i = 0; i < rule.nodes().size(); ++i) {
            out.samples.push_back(a * ch.samples[i] + (gc ? b * gc->samples[i] : complex{}));
        }
        h.channels.push_back(std::move(out));
    }
    for (auto const& ch : g.channels) {
        if (f.find(ch.label) == nullptr) {
            SpectralChannel out{ch.label, {}};
            for (auto v : ch.samples) {
                out.samples.push_back(b * v);
            }
            h.channels.push_back(std::move(out));
        }
    }
    auto const pf = project(f, 10, rule);
    auto const pg = project(g, 10, rule);
    auto const ph = project(h, 10, rule);
    double worst = 0.0;
    for (auto const& [idx, v] : ph.entries) {
        worst = std::max(worst, std::abs(v - (a * pf.at(idx) + b * pg.at(idx))));
    }
    CHECK(worst < 1e-12);
}

TEST_CASE("bessel inequality for the test spectrum", "[projection][property]") {
    auto const& rule = rule200();
    auto const f = sample(test_spectrum(), rule);
    double const norm = photon_number(f, rule);
    CHECK(norm == Approx(1.875).epsilon(1e-13));
    double prev = 0.0;
    for (int n_max = 2; n_max <= 10; ++n_max) {
        double const partial = project(f, n_max, rule).norm_squared();
        CHECK(partial >= prev);
        CHECK(partial <= norm * (1.0 + 1e-13));
        prev = partial;
    }
    // k^2 e^{-k} lies in span{c_21, c_31}
    CHECK(project(f, 3, rule).norm_squared() == Approx(norm).epsilon(1e-12));
    CHECK(project(f, 2, rule).norm_squared() < norm);
}

TEST_CASE("reconstruction", "[projection]") {
    auto const& rule = rule200();
    CoefficientVector coeffs;
    coeffs.n_max = 6;
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto const& idx : enumerate_basis(6)) {
        if (idx.j <= 2) {
            coeffs.entries[idx] = {u(rng), u(rng)};
        }
    }
    auto const f = reconstruct(coeffs, rule.nodes());
    auto const back = project(f, 6, rule);
    CHECK(max_coefficient_gap(coeffs, back) < 1e-9);
    CHECK(photon_number(f, rule) == Approx(coeffs.norm_squared()).epsilon(1e-10));
    auto const rep = residual(f, back, rule);
    CHECK(std::abs(rep.raw) < 1e-9);
    CHECK(rep.residual < 1e-9);

    std::vector<double> grid{0.0, 0.5, 1.0};
    auto const at_zero = reconstruct(coeffs, grid);
    REQUIRE(!at_zero.channels.empty());
    CHECK(std::is_sorted(at_zero.channels.begin(), at_zero.channels.end(),
                         [](auto const& x, auto const& y) { return x.label < y.label; }));
    for (auto const& ch : at_zero.channels) {
        CHECK(ch.samples[0] == complex{});
    }

    CoefficientVector empty;
    empty.n_max = 4;
    CHECK(reconstruct(empty, grid).channels.empty());

    CoefficientVector bad;
    bad.n_max = 3;
    bad.entries[{5, 1, 0, 1}] = 1.0;
    CHECK_THROWS_AS(reconstruct(bad, grid), cbasis::domain_error);
}

TEST_CASE("residual behaviour", "[projection]") {
    auto const& rule = rule200();
    auto const f = sample(test_spectrum(), rule);
    auto const rep2 = residual(f, project(f, 2, rule), rule);
    CHECK(rep2.residual > 0.1);
    CHECK_FALSE(rep2.clamped);
    CHECK(rep2.norm_squared == Approx(1.875).epsilon(1e-13));

    double prev = INFINITY;
    for (int n_max = 4; n_max <= 40; ++n_max) {
        double const r = residual(f, project(f, n_max, rule), rule).residual;
        CHECK(r <= prev);
        prev = r;
    }
    CHECK(prev / 1.875 < 1e-6);

    // an inflated coefficient vector drives the raw value negative
    auto over = project(f, 4, rule);
    over.entries[{2, 1, 0, 1}] *= 1.0 + 1e-9;
    auto const rep = residual(f, over, rule);
    CHECK(rep.raw < 0.0);
    CHECK(rep.clamped);
    CHECK(rep.residual == 0.0);
}

TEST_CASE("convergence for spectra outside the span", "[projection][property]") {
    auto const& rule = rule200();
    std::vector<AnalyticSpectrum> spectra{
        {{{1, 0, 1}, [](double k) { return complex(k * std::exp(-1.5 * k)); }}},
        {{{2, 1, -1}, [](double k) { return complex(k * k * std::exp(-0.8 * k)); }}},
        {{{1, -1, 1}, [](double k) { return complex(std::sin(k) * k * std::exp(-k)); }}},
        mixed_spectrum(),
    };
    for (std::size_t s = 0; s < spectra.size(); ++s) {
        auto const f = sample(spectra[s], rule);
        double const norm = photon_number(f, rule);
        double prev = INFINITY;
        bool monotone = true;
        for (int n_max = 2; n_max <= 40; n_max += 2) {
            auto const rep = residual(f, project(f, n_max, rule), rule);
            monotone = monotone && rep.residual <= prev;
            prev = rep.residual;
        }
        INFO("spectrum " << s << " relative residual " << prev / norm);
        CHECK(monotone);
        CHECK(prev / norm < 1e-6);
    }
}

TEST_CASE("dilatation", "[projection]") {
    auto const& rule = rule200();
    auto const f = mixed_spectrum();
    auto const same = sample(dilate(f, 1.0), rule);
    auto const orig = sample(f, rule);
    for (std::size_t c = 0; c < orig.channels.size(); ++c) {
        CHECK(same.channels[c].samples == orig.channels[c].samples);
    }
    CHECK(photon_number(sample(dilate(f, 2.5), rule), rule) == Approx(photon_number(orig, rule)).epsilon(1e-10));
    CHECK_THROWS_AS(dilate(f, 0.0), cbasis::domain_error);
    CHECK_THROWS_AS(dilate(f, -1.0), cbasis::domain_error);
}

TEST_CASE("dilatation covariance", "[projection][property]") {
    auto const& unit_rule = rule200();
    auto const f = mixed_spectrum();
    for (double alpha : {0.5, 2.0, 3.0}) {
        ScaleConfig scaled;
        scaled.k0 = alpha;
        auto const alpha_rule = gauss_laguerre_rule(200, alpha);
        auto const lhs = project(sample(dilate(f, alpha), unit_rule), 12, unit_rule);
        auto const rhs = project(sample(f, alpha_rule), 12, alpha_rule, scaled);
        INFO("alpha " << alpha);
        CHECK(max_coefficient_gap(lhs, rhs) < 1e-10);
    }
}

TEST_CASE("energy under dilatation", "[projection][property]") {
    // change of variables k = alpha q gives energy(dilate(f, alpha)) = energy(f) / alpha
    auto const& rule = rule200();
    auto const f = mixed_spectrum();
    double const base = energy(sample(f, rule), rule);
    std::vector<double> alphas{0.5, 0.8, 1.5, 2.0, 3.0};
    for (double alpha : alphas) {
        double const e = energy(sample(dilate(f, alpha), rule), rule);
        CHECK(e == Approx(base / alpha).epsilon(1e-10));
    }
    // measured exponent from a log-log fit
    double const e_lo = energy(sample(dilate(f, 0.5), rule), rule);
    double const e_hi = energy(sample(dilate(f, 3.0), rule), rule);
    double const exponent = std::log(e_hi / e_lo) / std::log(3.0 / 0.5);
    CHECK(exponent == Approx(-1.0).margin(1e-10));
}
