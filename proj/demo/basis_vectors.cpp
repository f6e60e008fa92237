// Orthonormality and energy quantization of the first few basis vectors.

#include <cstdio>

#include "cbasis/hilbert.hpp"

int main() {
    using namespace cbasis;
    ScaleConfig const scale; // k0 = 1 1/m
    auto const rule = gauss_laguerre_rule(kDefaultQuadratureOrder, scale.k0);

    std::printf("%3s %3s %14s %14s %14s\n", "n", "j", "c_nj(1) [m]", "<njml|njml>", "E/(hbar c k0)");
    for (int n = 2; n <= 6; ++n) {
        for (int j = 1; j < n; ++j) {
            auto const f = sample_basis_vector({n, j, 0, 1}, rule, scale);
            std::printf("%3d %3d %14.8f %14.10f %14.10f\n", n, j, c_multipolar(n, j, 1.0, scale),
                        photon_number(f, rule), energy(f, rule, scale) / scale.energy_quantum());
        }
    }

    auto const a = sample_basis_vector({2, 1, 0, 1}, rule, scale);
    auto const b = sample_basis_vector({4, 1, 0, 1}, rule, scale);
    std::printf("<2 1 0 +1|4 1 0 +1> = %.3e\n", std::abs(inner_product(a, b, rule)));
}
