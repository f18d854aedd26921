#ifndef SCLD_BOUNDS_IMPL_HPP
#define SCLD_BOUNDS_IMPL_HPP

#include <cmath>
#include <limits>
#include <vector>

namespace scld::bounds {

template <class F>
Maximum maximize(F&& f, double lo, double hi, double step, double tol) {
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
    std::vector<double> values(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
    for (long i = 0; i < count; ++i) {
        const double p = i + 1 == count ? hi : lo + static_cast<double>(i) * step;
        values[static_cast<std::size_t>(i)] = f(p);
    }
    long best = 0;
    for (long i = 1; i < count; ++i) {
        if (values[static_cast<std::size_t>(i)] > values[static_cast<std::size_t>(best)]) best = i;
    }
    auto at = [&](long i) { return i + 1 == count ? hi : lo + static_cast<double>(i) * step; };
    double a = at(std::max(best - 1, 0L)), b = at(std::min(best + 1, count - 1));

    const double invphi = (std::sqrt(5.0) - 1) / 2;
    double c = b - invphi * (b - a), d = a + invphi * (b - a);
    double fc = f(c), fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = f(d);
        }
    }
    Maximum m{values[static_cast<std::size_t>(best)], at(best)};
    const double mid = (a + b) / 2, fm = f(mid);
    if (fm >= m.value) m = {fm, mid};
    return m;
}

}  // namespace scld::bounds

#endif  // SCLD_BOUNDS_IMPL_HPP
