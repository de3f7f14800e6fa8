#include "hlr/montecarlo.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace hlr {

McResult monte_carlo_check(const GramLattice& lat, const Polytope& cell, long long samples,
                           std::uint64_t seed) {
    const int n = cell.dim();
    std::vector<Rat> lo, hi;
    cell.bounding_box(lo, hi);
    std::vector<double> dlo(static_cast<size_t>(n)), dhi(static_cast<size_t>(n));
    double box_vol = 1;
    for (int i = 0; i < n; ++i) {
        dlo[static_cast<size_t>(i)] = static_cast<double>(lo[static_cast<size_t>(i)]);
        dhi[static_cast<size_t>(i)] = static_cast<double>(hi[static_cast<size_t>(i)]);
        box_vol *= dhi[static_cast<size_t>(i)] - dlo[static_cast<size_t>(i)];
    }
    std::vector<std::vector<double>> funcs;
    std::vector<double> offs;
    for (const auto& h : cell.facets()) {
        std::vector<double> f(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) f[static_cast<size_t>(i)] = static_cast<double>(h.functional[i]);
        funcs.push_back(std::move(f));
        offs.push_back(static_cast<double>(h.offset));
    }
    std::vector<double> g(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            g[static_cast<size_t>(i) * n + j] = static_cast<double>(lat.gram().at(i, j));

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> x(static_cast<size_t>(n));
    McResult res;
    res.samples = samples;
    double sum_q = 0;
    for (long long s = 0; s < samples; ++s) {
        for (int i = 0; i < n; ++i)
            x[static_cast<size_t>(i)] =
                dlo[static_cast<size_t>(i)] +
                unit(rng) * (dhi[static_cast<size_t>(i)] - dlo[static_cast<size_t>(i)]);
        bool inside = true;
        for (size_t f = 0; f < funcs.size(); ++f) {
            double d = 0;
            for (int i = 0; i < n; ++i) d += funcs[f][static_cast<size_t>(i)] * x[static_cast<size_t>(i)];
            if (d > offs[f]) { inside = false; break; }
        }
        if (!inside) continue;
        ++res.accepted;
        double q = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                q += x[static_cast<size_t>(i)] * g[static_cast<size_t>(i) * n + j] *
                     x[static_cast<size_t>(j)];
        sum_q += q;
    }
    res.est_volume = box_vol * static_cast<double>(res.accepted) / static_cast<double>(samples);
    res.est_moment = box_vol * sum_q / static_cast<double>(samples);
    res.exact_volume = static_cast<double>(cell.volume());
    res.exact_moment = static_cast<double>(cell.second_moment(RatVec(n)));
    res.rel_dev_volume = std::abs(res.est_volume - res.exact_volume) / res.exact_volume;
    res.rel_dev_moment = std::abs(res.est_moment - res.exact_moment) / res.exact_moment;
    return res;
}

}  // namespace hlr
