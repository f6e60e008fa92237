// Incoming/outgoing double wavelet of c_nj(ct, r) at r = 5.

#include <cstdio>

#include "cbasis/timedomain.hpp"

int main() {
    using namespace cbasis;
    auto const grid = time_grid(-15.0, 15.0, 0.05);
    for (auto [n, j] : {std::pair{2, 1}, std::pair{4, 1}, std::pair{4, 3}}) {
        KernelSpec regular{n, j, j, KernelKind::regular, 5.0};
        KernelSpec incoming = regular;
        incoming.kind = KernelKind::incoming;

        auto const reg = wavelet_scan(regular, grid);
        auto const in = wavelet_scan(incoming, grid);
        auto const peaks = dominant_peaks(reg);
        std::printf("n=%d j=%d: |c| peaks at ct = %+.2f, %+.2f; incoming mass at ct<0: %.4f\n", n, j,
                    reg.times[peaks[0]], reg.times[peaks[1]], negative_time_mass_fraction(in));
    }
}
