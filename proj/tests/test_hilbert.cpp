#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "cbasis/hilbert.hpp"
#include "oracles.hpp"

using namespace cbasis;
using Catch::Approx;

namespace {

QuadratureRule const& rule200() {
    static QuadratureRule const rule = gauss_laguerre_rule(200);
    return rule;
}

SpectralSet scaled(SpectralSet f, complex factor) {
    for (auto& ch : f.channels) {
        for (auto& v : ch.samples) {
            v *= factor;
        }
    }
    return f;
}

} // namespace

TEST_CASE("gauss-laguerre rule examples", "[hilbert]") {
    for (int order : {2, 3, 16, 64, 200, 512}) {
        auto const rule = gauss_laguerre_rule(order);
        INFO("order " << order);
        CHECK(std::abs(rule.integrate_standard([](double) { return 1.0; }) - 1.0) < 1e-14);
        CHECK(rule.order() == order);
    }
    auto const& rule = rule200();
    CHECK(std::abs(rule.integrate_standard([](double x) { return x * x * x; }) - 6.0) < 6e-12);

    // degree 2q-1 = 31 at q = 16: monomial moments q! in the log domain
    auto const small = gauss_laguerre_rule(16);
    double worst = 0.0;
    for (int q = 0; q <= 31; ++q) {
        double log_sum = -INFINITY;
        for (int i = 0; i < small.order(); ++i) {
            double const term = small.log_standard_weights()[i] + q * std::log(small.standard_nodes()[i]);
            log_sum = std::max(log_sum, term) + std::log1p(std::exp(-std::abs(log_sum - term)));
        }
        worst = std::max(worst, std::abs(std::expm1(log_sum - std::lgamma(q + 1.0))));
    }
    CHECK(worst < 1e-12);

    // a full degree-31 polynomial against its exact moments in 50 digits
    auto poly = [](double x) {
        double p = 0.0;
        for (int q = 31; q >= 0; --q) {
            p = p * x + ((q % 3) - 1.0) / (q + 1.0);
        }
        return p;
    };
    oracle::big exact = 0;
    for (int q = 0; q <= 31; ++q) {
        exact += oracle::big((q % 3) - 1.0) / (q + 1) * oracle::big_factorial(q);
    }
    double scale = 0.0;
    for (int q = 0; q <= 31; ++q) {
        scale += static_cast<double>(oracle::big_factorial(q)) / (q + 1);
    }
    CHECK(std::abs(small.integrate_standard(poly) - static_cast<double>(exact)) / scale < 1e-13);
}

TEST_CASE("gauss-laguerre rule structure", "[hilbert]") {
    for (int order : {2, 50, 200, 512}) {
        for (double k0 : {1.0, 0.3, 4.0}) {
            auto const rule = gauss_laguerre_rule(order, k0);
            auto const& k = rule.nodes();
            auto const& w = rule.weights();
            bool ok = k.front() > 0.0;
            for (std::size_t i = 0; i < k.size(); ++i) {
                ok = ok && w[i] > 0.0 && std::isfinite(w[i]);
                if (i > 0) {
                    ok = ok && k[i] > k[i - 1];
                }
            }
            CHECK(ok);
            CHECK(k[0] == 0.5 * k0 * rule.standard_nodes()[0]);
        }
    }
    CHECK_THROWS_AS(gauss_laguerre_rule(1), cbasis::domain_error);
    CHECK_THROWS_AS(gauss_laguerre_rule(513), cbasis::domain_error);
    CHECK_THROWS_AS(gauss_laguerre_rule(10, 0.0), cbasis::domain_error);
    CHECK_THROWS_AS(gauss_laguerre_rule(10, -1.0), cbasis::domain_error);

    // reruns are bitwise identical
    auto const a = gauss_laguerre_rule(200);
    CHECK(a.nodes() == rule200().nodes());
    CHECK(a.weights() == rule200().weights());
}

TEST_CASE("folded measure", "[hilbert]") {
    // int dk k k^2 e^{-2k/k0} = 3! (k0/2)^4
    for (double k0 : {1.0, 2.5}) {
        auto const rule = gauss_laguerre_rule(200, k0);
        double const v = rule.integrate_measure([k0](double k) { return k * k * std::exp(-2.0 * k / k0); });
        CHECK(v == Approx(6.0 * std::pow(k0 / 2.0, 4)).epsilon(1e-13));
    }
}

TEST_CASE("inner products of basis vectors", "[hilbert]") {
    auto const& rule = rule200();
    auto const v310 = sample_basis_vector({3, 1, 0, 1}, rule);
    auto const v210 = sample_basis_vector({2, 1, 0, 1}, rule);
    auto const v410 = sample_basis_vector({4, 1, 0, 1}, rule);
    CHECK(std::abs(inner_product(v310, v310, rule) - 1.0) < 1e-10);
    CHECK(std::abs(inner_product(v210, v410, rule)) < 1e-10);

    // different channels are skipped, not integrated
    auto const other = sample_basis_vector({3, 1, 1, 1}, rule);
    CHECK(inner_product(v310, other, rule) == complex{});
    CHECK(inner_product(v310, sample_basis_vector({3, 1, 0, -1}, rule), rule) == complex{});
    CHECK(inner_product(v310, sample_basis_vector({3, 2, 0, 1}, rule), rule) == complex{});

    // conjugate symmetry
    auto const f = scaled(v310, {0.3, -1.2});
    auto const g = scaled(v310, {2.0, 0.7});
    CHECK(std::abs(inner_product(f, g, rule) - std::conj(inner_product(g, f, rule))) < 1e-15);
}

TEST_CASE("photon number and energy", "[hilbert]") {
    auto const& rule = rule200();
    auto const v = sample_basis_vector({5, 2, -1, -1}, rule);
    CHECK(photon_number(v, rule) == Approx(1.0).epsilon(1e-12));
    CHECK(photon_number(scaled(v, 2.0), rule) == Approx(4.0).epsilon(1e-12));

    auto sum = sample_basis_vector({2, 1, 0, 1}, rule);
    auto const w = sample_basis_vector({6, 1, 0, 1}, rule);
    for (std::size_t i = 0; i < sum.k.size(); ++i) {
        sum.channels[0].samples[i] += w.channels[0].samples[i];
    }
    CHECK(photon_number(sum, rule) == Approx(2.0).epsilon(1e-12));
    // one vector per channel, disjoint
    auto pair = sample_basis_vector({2, 1, 0, 1}, rule);
    pair.channels.push_back(sample_basis_vector({3, 2, 2, -1}, rule).channels[0]);
    CHECK(photon_number(pair, rule) == Approx(2.0).epsilon(1e-12));

    ScaleConfig const scale;
    for (int m : {-1, 0, 1}) {
        for (int lambda : {-1, 1}) {
            auto const basis = sample_basis_vector({2, 1, m, lambda}, rule, scale);
            CHECK(std::abs(energy(basis, rule, scale) / scale.energy_quantum() - 2.0) < 2e-10);
        }
    }
    auto const seven = sample_basis_vector({7, 4, 3, 1}, rule, scale);
    CHECK(std::abs(energy(seven, rule, scale) / scale.energy_quantum() - 7.0) < 7e-10);

    auto const zero = scaled(seven, 0.0);
    CHECK(energy(zero, rule, scale) == 0.0);
    CHECK(photon_number(zero, rule) == 0.0);
    SpectralSet const empty{rule.nodes(), {}};
    CHECK(photon_number(empty, rule) == 0.0);
}

TEST_CASE("laguerre integral oracles", "[hilbert]") {
    CHECK(laguerre_overlap_oracle(3, 0, 1) == 0.0);
    CHECK(laguerre_overlap_oracle(3, 0, 0) == 6.0);
    CHECK(laguerre_overlap_oracle(5, 2, 2) == 2520.0);
    CHECK(laguerre_energy_oracle(3, 0) == 24.0);
    // (n=2, j=1): alpha = 3, s = 0.  E = A^2 (k0/2)^3 int e^{-x} x^4 [L]^2 dx with k0 = 1
    double const a2 = std::pow(multipolar_norm(2, 1), 2);
    CHECK(a2 * laguerre_energy_oracle(3, 0) / 8.0 == Approx(2.0).epsilon(1e-15));
    CHECK_THROWS_AS(laguerre_overlap_oracle(100, 71, 71), cbasis::domain_error);
    CHECK_THROWS_AS(laguerre_energy_oracle(-1, 2), cbasis::domain_error);
    CHECK(rising_factorial_ratio(5, 3) == 8.0 * 7 * 6 * 5 * 4);
}

TEST_CASE("quadrature matches the laguerre oracles", "[hilbert][property]") {
    auto const& rule = rule200();
    double worst_overlap = 0.0;
    double worst_energy = 0.0;
    for (int alpha = 0; alpha <= 15; ++alpha) {
        for (int s = 0; s <= 10; ++s) {
            for (int sb = 0; sb <= 10; ++sb) {
                double const q = rule.integrate_standard([&](double x) {
                    return std::pow(x, alpha) * laguerre(s, alpha, x) * laguerre(sb, alpha, x);
                });
                double const expected = laguerre_overlap_oracle(alpha, s, sb);
                double const scale = std::sqrt(rising_factorial_ratio(alpha, s) * rising_factorial_ratio(alpha, sb));
                worst_overlap = std::max(worst_overlap, std::abs(q - expected) / scale);
            }
            double const e = rule.integrate_standard(
                [&](double x) { return std::pow(x, alpha + 1) * std::pow(laguerre(s, alpha, x), 2); });
            worst_energy = std::max(worst_energy, std::abs(e / laguerre_energy_oracle(alpha, s) - 1.0));
        }
    }
    CHECK(worst_overlap < 1e-12);
    CHECK(worst_energy < 1e-12);
}

TEST_CASE("gram identity up to n = 12", "[hilbert][property]") {
    auto const& rule = rule200();
    auto const indices = enumerate_basis(12, {1});
    auto const g = gram_matrix(indices, rule);
    double worst = 0.0;
    for (std::size_t a = 0; a < indices.size(); ++a) {
        for (std::size_t b = 0; b < indices.size(); ++b) {
            worst = std::max(worst, std::abs(g[a][b] - (a == b ? 1.0 : 0.0)));
            if (g[a][b] != g[b][a]) {
                FAIL("gram matrix not symmetric");
            }
        }
    }
    CHECK(worst < 1e-10);
}

TEST_CASE("energy quantization up to n = 12", "[hilbert][property]") {
    auto const& rule = rule200();
    ScaleConfig const scale;
    double worst = 0.0;
    for (int n = 2; n <= 12; ++n) {
        for (int j = 1; j < n; ++j) {
            auto const v = sample_basis_vector({n, j, 0, 1}, rule, scale);
            worst = std::max(worst, std::abs(energy(v, rule, scale) / scale.energy_quantum() / n - 1.0));
        }
    }
    CHECK(worst < 1e-10);
    // other scales: n hbar c0 k0
    for (double k0 : {0.5, 3.0}) {
        ScaleConfig s;
        s.k0 = k0;
        auto const r = gauss_laguerre_rule(200, k0);
        auto const v = sample_basis_vector({9, 4, 1, -1}, r, s);
        CHECK(energy(v, r, s) / s.energy_quantum() == Approx(9.0).epsilon(1e-10));
        CHECK(photon_number(v, r) == Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("cauchy-schwarz on random spectra", "[hilbert][property]") {
    auto const& rule = rule200();
    std::mt19937_64 rng(20240611);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::uniform_int_distribution<int> pick_j(1, 3);
    auto random_set = [&] {
        SpectralSet f{rule.nodes(), {}};
        for (int c = 0; c < 4; ++c) {
            int const j = pick_j(rng);
            ChannelLabel label{j, std::uniform_int_distribution<int>(-j, j)(rng), rng() % 2 == 0 ? 1 : -1};
            if (f.find(label) != nullptr) {
                continue;
            }
            complex const a{u(rng), u(rng)};
            double const decay = 1.0 + 0.5 * (u(rng) + 1.0);
            int const power = j + static_cast<int>(rng() % 3);
            SpectralChannel ch{label, {}};
            for (double k : rule.nodes()) {
                ch.samples.push_back(a * std::pow(k, power) * std::exp(-decay * k) * std::polar(1.0, u(rng)));
            }
            f.channels.push_back(std::move(ch));
        }
        return f;
    };
    for (int trial = 0; trial < 200; ++trial) {
        auto const f = random_set();
        auto const g = random_set();
        double const lhs = std::norm(inner_product(f, g, rule));
        double const rhs = photon_number(f, rule) * photon_number(g, rule);
        CHECK(lhs <= rhs * (1.0 + 1e-12));
    }
}

TEST_CASE("rule mismatch is a contract violation", "[hilbert]") {
    auto const& rule = rule200();
    auto const other = gauss_laguerre_rule(100);
    auto const v = sample_basis_vector({3, 1, 0, 1}, rule);
    CHECK_THROWS_AS(inner_product(v, v, other), cbasis::contract_violation);
    CHECK_THROWS_AS(photon_number(v, other), cbasis::contract_violation);
    CHECK_THROWS_AS(energy(v, gauss_laguerre_rule(200, 2.0)), cbasis::contract_violation);

    auto broken = v;
    broken.channels[0].samples.pop_back();
    CHECK_THROWS_AS(photon_number(broken, rule), cbasis::contract_violation);
    auto duplicate = v;
    duplicate.channels.push_back(v.channels[0]);
    CHECK_THROWS_AS(photon_number(duplicate, rule), cbasis::contract_violation);
    auto bad_label = v;
    bad_label.channels[0].label.m = 5;
    CHECK_THROWS_AS(photon_number(bad_label, rule), cbasis::domain_error);
}
