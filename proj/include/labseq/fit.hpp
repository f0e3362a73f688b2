#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

#include "labseq/common.hpp"

namespace labseq {

struct fit_point {
    double abscissa = 0;
    double value = 0;
};

struct fit_model {
    double a2 = 0, a1 = 0, a0 = 0;  // value ~ a2*x^2 + a1*x + a0
    double fit_lo = 0, fit_hi = 0;  // abscissa range the model was fitted on
    double residual_rms = 0;

    [[nodiscard]] double evaluate(double x) const { return (a2 * x + a1) * x + a0; }
};

namespace detail {

/// Solves the 3x3 system m*c = r in place by Gaussian elimination with
/// partial pivoting; returns false when the matrix is singular.
inline bool solve3(std::array<std::array<double, 3>, 3>& m, std::array<double, 3>& r) {
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(m[row][col]) > std::abs(m[pivot][col])) pivot = row;
        if (std::abs(m[pivot][col]) < 1e-12) return false;
        std::swap(m[col], m[pivot]);
        std::swap(r[col], r[pivot]);
        for (int row = col + 1; row < 3; ++row) {
            const double f = m[row][col] / m[col][col];
            for (int k = col; k < 3; ++k) m[row][k] -= f * m[col][k];
            r[row] -= f * r[col];
        }
    }
    for (int col = 2; col >= 0; --col) {
        for (int k = col + 1; k < 3; ++k) r[col] -= m[col][k] * r[k];
        r[col] /= m[col][col];
    }
    return true;
}

}  // namespace detail

/// Least-squares quadratic through the points. The abscissae are centered and
/// scaled before forming the normal equations so the system stays
/// well-conditioned even for abscissae in the hundreds. Points are sorted
/// internally, so the result is bit-identical under input re-ordering.
inline fit_model fit_quadratic(std::span<const fit_point> input) {
    std::vector<fit_point> points(input.begin(), input.end());
    std::sort(points.begin(), points.end(), [](const fit_point& a, const fit_point& b) {
        return a.abscissa != b.abscissa ? a.abscissa < b.abscissa : a.value < b.value;
    });
    std::vector<double> distinct;
    for (const auto& p : points) {
        bool seen = false;
        for (double d : distinct) seen = seen || d == p.abscissa;
        if (!seen) distinct.push_back(p.abscissa);
    }
    if (distinct.size() < 3)
        throw error("quadratic fit requires at least three distinct abscissae");

    const double count = static_cast<double>(points.size());
    double mu = 0;
    for (const auto& p : points) mu += p.abscissa;
    mu /= count;
    double var = 0;
    for (const auto& p : points) var += (p.abscissa - mu) * (p.abscissa - mu);
    const double sigma = std::sqrt(var / count);

    double s1 = 0, s2 = 0, s3 = 0, s4 = 0, t0 = 0, t1 = 0, t2 = 0;
    for (const auto& p : points) {
        const double z = (p.abscissa - mu) / sigma;
        const double z2 = z * z;
        s1 += z;
        s2 += z2;
        s3 += z2 * z;
        s4 += z2 * z2;
        t0 += p.value;
        t1 += p.value * z;
        t2 += p.value * z2;
    }
    std::array<std::array<double, 3>, 3> m{{{count, s1, s2}, {s1, s2, s3}, {s2, s3, s4}}};
    std::array<double, 3> rhs{t0, t1, t2};
    if (!detail::solve3(m, rhs)) throw error("quadratic fit is degenerate for these points");
    const double c0 = rhs[0], c1 = rhs[1], c2 = rhs[2];

    fit_model model;
    model.a2 = c2 / (sigma * sigma);
    model.a1 = c1 / sigma - 2 * c2 * mu / (sigma * sigma);
    model.a0 = c0 - c1 * mu / sigma + c2 * mu * mu / (sigma * sigma);
    model.fit_lo = points[0].abscissa;
    model.fit_hi = points[0].abscissa;
    double ss = 0;
    for (const auto& p : points) {
        model.fit_lo = std::min(model.fit_lo, p.abscissa);
        model.fit_hi = std::max(model.fit_hi, p.abscissa);
        const double r = model.evaluate(p.abscissa) - p.value;
        ss += r * r;
    }
    model.residual_rms = std::sqrt(ss / count);
    return model;
}

}  // namespace labseq
