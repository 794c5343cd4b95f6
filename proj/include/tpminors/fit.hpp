#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "tpminors/errors.hpp"

namespace tpm {

struct PowerFit {
    double slope = 0.0;
    double intercept = 0.0;
};

/// Ordinary least squares of ln(y) on ln(x). Needs at least three points and
/// strictly positive data; callers drop zero counts beforehand.
inline PowerFit fit_loglog(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw DimensionError("fit_loglog: x and y differ in length");
    if (x.size() < 3) throw PreconditionError("fit_loglog needs at least 3 points");
    const double n = static_cast<double>(x.size());
    double sx = 0, sy = 0;
    std::vector<double> lx(x.size()), ly(y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0) || !(y[i] > 0)) throw DomainError("fit_loglog needs positive data");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
        sx += lx[i];
        sy += ly[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (lx[i] - mx) * (lx[i] - mx);
        sxy += (lx[i] - mx) * (ly[i] - my);
    }
    if (sxx == 0) throw DomainError("fit_loglog needs at least two distinct sizes");
    PowerFit f;
    f.slope = sxy / sxx;
    f.intercept = my - f.slope * mx;
    return f;
}

}  // namespace tpm
