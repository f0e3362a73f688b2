#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "labseq/fit.hpp"
#include "labseq/records.hpp"

using labseq::fit_point;

namespace {

std::vector<fit_point> record_deviation_points() {
    std::vector<fit_point> points;
    for (const auto& row : labseq::analyze_records(labseq::builtin_records()))
        points.push_back({static_cast<double>(row.n_value), static_cast<double>(row.deviation)});
    return points;
}

}  // namespace

TEST_CASE("exact quadratics are recovered with zero residual") {
    std::vector<fit_point> points;
    for (int n = 3; n <= 20; ++n) {
        const double x = n;
        points.push_back({x, 2.0 * x * x - 7.0 * x + 5.0});
    }
    const auto model = labseq::fit_quadratic(points);
    REQUIRE_THAT(model.a2, Catch::Matchers::WithinAbs(2.0, 1e-9));
    REQUIRE_THAT(model.a1, Catch::Matchers::WithinAbs(-7.0, 1e-9));
    REQUIRE_THAT(model.a0, Catch::Matchers::WithinAbs(5.0, 1e-9));
    REQUIRE(model.residual_rms < 1e-8);
    REQUIRE(model.fit_lo == 3.0);
    REQUIRE(model.fit_hi == 20.0);
}

TEST_CASE("fit over the record deviations matches the frozen reference") {
    const auto model = labseq::fit_quadratic(record_deviation_points());
    REQUIRE_THAT(model.a2, Catch::Matchers::WithinRel(0.01355468795254701, 1e-6));
    REQUIRE_THAT(model.a1, Catch::Matchers::WithinRel(-0.06013679328761352, 1e-6));
    REQUIRE_THAT(model.a0, Catch::Matchers::WithinRel(0.42820629492013074, 1e-6));
    REQUIRE_THAT(model.residual_rms, Catch::Matchers::WithinRel(1.2219595904336376, 1e-6));
    REQUIRE_THAT(model.evaluate(60), Catch::Matchers::WithinRel(45.616875326832556, 1e-6));
    REQUIRE_THAT(model.evaluate(190), Catch::Matchers::WithinRel(478.3264506572206, 1e-6));
}

TEST_CASE("fitted deviation growth is nondecreasing over the record range") {
    const auto model = labseq::fit_quadratic(record_deviation_points());
    for (int n = 10; n < 60; ++n) REQUIRE(model.evaluate(n) <= model.evaluate(n + 1));
}

TEST_CASE("fit is invariant under point re-ordering") {
    auto points = record_deviation_points();
    const auto model = labseq::fit_quadratic(points);
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(points.begin(), points.end(), rng);
        const auto shuffled = labseq::fit_quadratic(points);
        REQUIRE(shuffled.a2 == model.a2);
        REQUIRE(shuffled.a1 == model.a1);
        REQUIRE(shuffled.a0 == model.a0);
        REQUIRE(shuffled.residual_rms == model.residual_rms);
    }
}

TEST_CASE("degenerate inputs are rejected") {
    const std::vector<fit_point> two_abscissae = {{1, 1}, {1, 2}, {2, 1}, {2, 5}};
    REQUIRE_THROWS_AS(labseq::fit_quadratic(two_abscissae), labseq::error);
    const std::vector<fit_point> empty;
    REQUIRE_THROWS_AS(labseq::fit_quadratic(empty), labseq::error);
}
