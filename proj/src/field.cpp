#include "ipl/field.hpp"

#include <algorithm>
#include <cmath>

namespace ipl {

namespace {

double rel_gap(double a, double b) {
    const double denom = std::max({1.0, std::abs(a), std::abs(b)});
    return std::abs(a - b) / denom;
}

} // namespace

double fd_validate(const JetField& fn, std::span<const double> point, double h) {
    const int n = fn.dim;
    const BigFloat H(h);
    std::vector<BigFloat> base(point.begin(), point.end());

    auto at = [&](std::initializer_list<std::pair<int, int>> shifts) {
        std::vector<BigFloat> p = base;
        for (auto [axis, steps] : shifts) p[static_cast<std::size_t>(axis)] += steps * H;
        return fn.value_hp(p);
    };

    const Jet3 jet = fn.jet(point);
    const BigFloat f0 = at({});
    double worst = rel_gap(jet.val(), static_cast<double>(f0));

    for (int i = 0; i < n; ++i) {
        const BigFloat d1 = (at({{i, 1}}) - at({{i, -1}})) / (2 * H);
        worst = std::max(worst, rel_gap(jet.grad(i), static_cast<double>(d1)));
    }
    for (int i = 0; i < n; ++i) {
        const BigFloat d2 = (at({{i, 1}}) - 2 * f0 + at({{i, -1}})) / (H * H);
        worst = std::max(worst, rel_gap(jet.hess(i, i), static_cast<double>(d2)));
        for (int j = i + 1; j < n; ++j) {
            const BigFloat m =
                (at({{i, 1}, {j, 1}}) - at({{i, 1}, {j, -1}}) - at({{i, -1}, {j, 1}}) + at({{i, -1}, {j, -1}})) /
                (4 * H * H);
            worst = std::max(worst, rel_gap(jet.hess(i, j), static_cast<double>(m)));
        }
    }
    const BigFloat H3 = H * H * H;
    for (int i = 0; i < n; ++i) {
        const BigFloat diii =
            (at({{i, 2}}) - 2 * at({{i, 1}}) + 2 * at({{i, -1}}) - at({{i, -2}})) / (2 * H3);
        worst = std::max(worst, rel_gap(jet.third(i, i, i), static_cast<double>(diii)));
    }
    // d^3/dx_i^2 dx_j: second difference in i, centered in j
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const BigFloat pj = at({{i, 1}, {j, 1}}) - 2 * at({{j, 1}}) + at({{i, -1}, {j, 1}});
            const BigFloat mj = at({{i, 1}, {j, -1}}) - 2 * at({{j, -1}}) + at({{i, -1}, {j, -1}});
            const BigFloat d = (pj - mj) / (2 * H3);
            worst = std::max(worst, rel_gap(jet.third(i, i, j), static_cast<double>(d)));
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                BigFloat acc(0);
                for (int si = -1; si <= 1; si += 2)
                    for (int sj = -1; sj <= 1; sj += 2)
                        for (int sk = -1; sk <= 1; sk += 2)
                            acc += si * sj * sk * at({{i, si}, {j, sj}, {k, sk}});
                const BigFloat d = acc / (8 * H3);
                worst = std::max(worst, rel_gap(jet.third(i, j, k), static_cast<double>(d)));
            }
    return worst;
}

} // namespace ipl
