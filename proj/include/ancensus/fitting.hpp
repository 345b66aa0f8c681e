#ifndef ANCENSUS_FITTING_HPP
#define ANCENSUS_FITTING_HPP

#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

namespace ancensus {

/// Least-squares slope of y against x.
inline double least_squares_slope(const std::vector<std::pair<double, double>>& pts) {
    if (pts.size() < 2) throw std::domain_error("least_squares_slope: need >= 2 points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(pts.size());
    for (const auto& [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = m * sxx - sx * sx;
    if (denom == 0) throw std::domain_error("least_squares_slope: degenerate abscissae");
    return (m * sxy - sx * sy) / denom;
}

/// Slope of log N against log X; every X must be distinct and N >= 1.
inline double fit_exponent(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> logpts;
    logpts.reserve(points.size());
    for (const auto& [x, n] : points) {
        if (x <= 0 || n < 1) continue;
        logpts.emplace_back(std::log(x), std::log(n));
    }
    return least_squares_slope(logpts);
}

/// Slope of log(count+1) against log X, tolerant of zero counts.
inline double fit_exponent_plus_one(const std::vector<std::pair<double, double>>& points) {
    std::vector<std::pair<double, double>> logpts;
    logpts.reserve(points.size());
    for (const auto& [x, n] : points) logpts.emplace_back(std::log(x), std::log(n + 1.0));
    return least_squares_slope(logpts);
}

}  // namespace ancensus

#endif
