#include "catch_amalgamated.hpp"

#include "ybalg/error.hpp"
#include "ybalg/funceq.hpp"
#include "ybalg/search.hpp"

#include <algorithm>
#include <cmath>
#include <map>

using namespace ybalg;

namespace {

// Objective recomputed through the exact-path evaluator in float mode.
double reference_objective(const SearchConfig& cfg, const ParamVector& raw) {
    const ParamVector p = normalize_params(cfg.shape, raw);
    auto coeff = [&](double u, double v) -> Coeffs {
        if (cfg.shape == AnsatzShape::linear)
            return {Scalar(p[0] * u - p[1] * v), Scalar(p[2] * u - p[3] * v), Scalar(p[4] * u - p[5] * v)};
        // Exponential triples enter scaled to max entry 1.
        const double a = std::pow(p[0], u) * std::pow(p[1], v), b = std::pow(p[2], u) * std::pow(p[3], v),
                     g = std::pow(p[4], u) * std::pow(p[5], v), m = std::max({a, b, g});
        return {Scalar(a / m), Scalar(b / m), Scalar(g / m)};
    };
    ColoredCoeffFn t = [&](const Scalar& u, const Scalar& v) { return coeff(u.to_double(), v.to_double()); };
    double sum = 0;
    for (const auto& [u, v, w] : cfg.colored_grid)
        for (const Scalar& e : eval_colored_system(t, Scalar(u), Scalar(v), Scalar(w))) sum += e.to_double() * e.to_double();
    return sum;
}

}  // namespace

TEST_CASE("objective vanishes on a known linear solution") {
    SearchConfig cfg;
    // alpha = u - v, beta = 2(u - v), gamma = u - 2v
    const ParamVector thm1{1, 1, 2, 2, 1, 2};
    CHECK(search_objective(cfg, thm1) < 1e-20);
    CHECK(classify(cfg, thm1) == Classification::thm1_family);
    // Any rescaling is the same point after normalisation.
    ParamVector scaled = thm1;
    for (double& x : scaled) x *= -3.5;
    CHECK(search_objective(cfg, scaled) < 1e-20);
    CHECK(classify(cfg, scaled) == Classification::thm1_family);
}

TEST_CASE("objective agrees with the exact-path evaluator") {
    SearchConfig cfg;
    const ParamVector a{0.3, -1.2, 2.0, 0.7, -0.4, 1.1};
    CHECK(search_objective(cfg, a) == Catch::Approx(reference_objective(cfg, a)).epsilon(1e-10));
    cfg.shape = AnsatzShape::exponential;
    const ParamVector b{1.5, 0.8, 2.0, 1.1, 0.9, 1.3};
    CHECK(search_objective(cfg, b) == Catch::Approx(reference_objective(cfg, b)).epsilon(1e-10));
    const ParamVector thm2{2, 3, 2, 5, 2, 5};
    CHECK(search_objective(cfg, thm2) < 1e-20);
    CHECK(classify(cfg, thm2) == Classification::thm2_family);
    const ParamVector remark2{2, 3, 5, 3, 2, 3};
    CHECK(search_objective(cfg, remark2) < 1e-20);
    CHECK(classify(cfg, remark2) == Classification::remark2_family);
}

TEST_CASE("degenerate points") {
    SearchConfig cfg;
    CHECK(classify(cfg, ParamVector{}) == Classification::degenerate);
    // alpha = beta = 0 solves every equation trivially.
    const ParamVector ab0{0, 0, 0, 0, 1, -2};
    CHECK(search_objective(cfg, ab0) < 1e-20);
    CHECK(classify(cfg, ab0) == Classification::degenerate);
}

TEST_CASE("seeded linear search finds the first family") {
    SearchConfig cfg;
    const auto results = search(cfg);
    REQUIRE(results.size() == 50);
    std::map<Classification, int> counts;
    bool found = false;
    for (const auto& r : results) {
        ++counts[r.classification];
        if (r.classification == Classification::thm1_family) {
            found = true;
            CHECK(r.objective < 1e-10);
        }
    }
    CHECK(found);
    CHECK(counts[Classification::thm1_family] == 8);
}

TEST_CASE("results are deterministic across repeats and thread counts") {
    SearchConfig cfg;
    cfg.restarts = 12;
    const auto a = search(cfg);
    const auto b = search(cfg);
    cfg.threads = 4;
    const auto c = search(cfg);
    REQUIRE(a.size() == c.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].params == b[i].params);
        CHECK(a[i].params == c[i].params);
        CHECK(a[i].objective == c[i].objective);
        CHECK(a[i].classification == c[i].classification);
        CHECK(a[i].seed == restart_seed(42, static_cast<int>(i)));
    }
    cfg.seed = 43;
    CHECK(search(cfg)[0].params != a[0].params);
}

TEST_CASE("exponential search at the reference seed") {
    SearchConfig cfg;
    cfg.shape = AnsatzShape::exponential;
    std::map<Classification, int> counts;
    for (const auto& r : search(cfg)) ++counts[r.classification];
    CHECK(counts[Classification::thm2_family] == 16);
    CHECK(counts[Classification::remark2_family] == 13);
    CHECK(counts[Classification::unclassified] == 0);
}

TEST_CASE("per-pair gauge keeps the exponential objective away from the trivial boundary") {
    SearchConfig cfg;
    cfg.shape = AnsatzShape::exponential;
    // alpha, beta tiny against gamma on the grid, yet far from a solution
    // once each triple is rescaled.
    const ParamVector near_boundary{std::exp(-3.0), std::exp(-2.0), std::exp(-3.5), std::exp(1.0), 1, 1};
    CHECK(search_objective(cfg, near_boundary) > 1e-6);
}

TEST_CASE("one-parameter search finds the first one-parameter family") {
    SearchConfig cfg;
    cfg.system = SystemKind::onepar;
    cfg.restarts = 30;
    int hits = 0;
    for (const auto& r : search(cfg)) hits += r.classification == Classification::prop1_family;
    CHECK(hits > 0);
}

TEST_CASE("invalid search configurations") {
    SearchConfig cfg;
    cfg.colored_grid.clear();
    CHECK_THROWS_AS(search(cfg), InvalidInput);
    cfg = {};
    cfg.colored_grid = {{1, 1, 2}};
    CHECK_THROWS_AS(search(cfg), InvalidInput);
    cfg = {};
    cfg.restarts = 0;
    CHECK_THROWS_AS(search(cfg), InvalidInput);
    CHECK_THROWS_AS(parse_shape("cubic"), UnknownKind);
    CHECK(to_string(Classification::thm1_family) == "thm1-family");
}
