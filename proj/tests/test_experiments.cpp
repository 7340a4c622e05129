#include "agl/experiment.hpp"

#include "agl/errors.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <set>

using namespace agl;

namespace {

ExperimentConfig parse_config(const char* text) {
    return config_from_json(Json::parse(text));
}

const ReportRow& row_labeled(const Report& report, const std::string& label, std::size_t nth = 0) {
    std::size_t seen = 0;
    for (const auto& r : report)
        if (r.label == label && seen++ == nth) return r;
    FAIL("missing row ", label);
    static ReportRow dummy;
    return dummy;
}

} // namespace

TEST_CASE("expansion: shifted powers of two") {
    const auto cfg = parse_config(R"({
        "experiment": "expansion",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "2"},
        "correspondences": [{"kind":"graph","phi":"x+1","source":"Gm","target":"Ga"}],
        "g": 2,
        "sweep": [10]
    })");
    const auto report = run_expansion(cfg);
    REQUIRE(report.size() == 2);
    const auto& iter = row_labeled(report, "iterated");
    CHECK(iter.set_size == 10);
    CHECK(iter.result == 19); // products of two powers of two
    CHECK(iter.doubling == Rational(Integer(19), Integer(10)));
    const auto& img = row_labeled(report, "image_sum");
    CHECK(img.result == 55);
    REQUIRE(img.exponent.has_value());
    CHECK(*img.exponent == doctest::Approx(std::log(55.0) / std::log(10.0)));

    // Deterministic modulo runtime.
    CHECK(rows_equal_ignoring_runtime(report, run_expansion(cfg)));
}

TEST_CASE("expansion: the sanity floor max(|gA|, |image_sum|) >= |A|") {
    const auto cfg = parse_config(R"({
        "experiment": "expansion",
        "group": "Gm",
        "set": {"builder": "gp", "start": "3", "ratio": "1/2"},
        "correspondences": [{"kind":"graph","phi":"x^2+x","source":"Gm","target":"Gm"}],
        "g": 2,
        "sweep": [4, 8, 12]
    })");
    const auto report = run_expansion(cfg);
    for (const auto& r : report) CHECK(r.result >= r.set_size);
}

TEST_CASE("expansion: g = 1 identity graph returns the set") {
    const auto cfg = parse_config(R"({
        "experiment": "expansion",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "3"},
        "correspondences": [{"kind":"graph","phi":"x","source":"Gm","target":"Ga"}],
        "g": 1,
        "sweep": [7]
    })");
    const auto report = run_expansion(cfg);
    CHECK(row_labeled(report, "image_sum").result == 7);
    CHECK(row_labeled(report, "iterated").result == 7);
}

TEST_CASE("expansion: monomial graphs are refused") {
    const auto cfg = parse_config(R"({
        "experiment": "expansion",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "2"},
        "correspondences": [{"kind":"graph","phi":"5x^3","source":"Gm","target":"Gm"}],
        "g": 2,
        "sweep": [5]
    })");
    CHECK_THROWS_AS(run_expansion(cfg), TranslateCorrespondence);
}

TEST_CASE("eszabo: coset example family") {
    const auto cfg = parse_config(R"({
        "experiment": "eszabo",
        "group": "Gm",
        "set": {"builder": "powers", "gamma": "2", "extras": ["3"]},
        "variety": {"equations": ["X2X3 - X1 + 1"], "dim": 2},
        "sweep": [3, 4, 5]
    })");
    const auto report = run_eszabo(cfg);
    const auto& n3 = row_labeled(report, "count", 0);
    CHECK(n3.set_size == 8);
    CHECK(n3.result == 15);
    CHECK(n3.doubling <= Rational(3));
    for (std::size_t i = 0; i < 3; ++i) {
        const auto& r = row_labeled(report, "count", i);
        CHECK(r.result >= r.set_size);
        CHECK(r.doubling <= Rational(3));
    }
    const auto& ref = row_labeled(report, "size_pow_dim_minus_1", 0);
    CHECK(ref.result == 8); // |A|^(dim-1) with dim = 2
}

TEST_CASE("eszabo: diagonal variety on an AP") {
    const auto cfg = parse_config(R"({
        "experiment": "eszabo",
        "group": "Ga",
        "set": {"builder": "ap", "start": "0", "step": "1"},
        "variety": {"equations": ["x - y"], "g": 2, "dim": 1},
        "sweep": [6, 11]
    })");
    const auto report = run_eszabo(cfg);
    CHECK(row_labeled(report, "count", 0).result == 6);
    CHECK(row_labeled(report, "count", 1).result == 11);
}

TEST_CASE("eszabo: zero-product-exponent triples in a geometric box") {
    const auto cfg = parse_config(R"({
        "experiment": "eszabo",
        "group": "Gm",
        "set": {"builder": "box", "generators": ["2"]},
        "variety": {"equations": ["x1x2x3 - 1"], "dim": 2},
        "sweep": [2, 3]
    })");
    const auto report = run_eszabo(cfg);
    // Lattice oracle: triples i+j+k = 0 with |i|,|j|,|k| <= L.
    std::size_t nth = 0;
    for (const long L : {2L, 3L}) {
        std::uint64_t expect = 0;
        for (long i = -L; i <= L; ++i)
            for (long j = -L; j <= L; ++j)
                if (std::abs(i + j) <= L) ++expect;
        CHECK(row_labeled(report, "count", nth++).result == expect);
    }
}

TEST_CASE("elekes_ronyai: non-degenerate polynomial image") {
    const auto cfg = parse_config(R"({
        "experiment": "elekes_ronyai",
        "group": "Gm",
        "set": {"builder": "explicit", "elements": ["1", "2", "3"]},
        "polynomial": "xy + yz + zx",
        "sweep": [0]
    })");
    const auto report = run_elekes_ronyai(cfg);
    CHECK(row_labeled(report, "image").result == 10);
}

TEST_CASE("elekes_ronyai: projection polynomial returns the set") {
    const auto cfg = parse_config(R"({
        "experiment": "elekes_ronyai",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "5"},
        "polynomial": "x1",
        "sweep": [9]
    })");
    CHECK(row_labeled(run_elekes_ronyai(cfg), "image").result == 9);
}

TEST_CASE("elekes_ronyai: degenerate input is refused") {
    const auto cfg = parse_config(R"({
        "experiment": "elekes_ronyai",
        "group": "Gm",
        "set": {"builder": "explicit", "elements": ["1", "2"]},
        "polynomial": "X2X3 - X1 + 1",
        "sweep": [0]
    })");
    CHECK_THROWS_AS(run_elekes_ronyai(cfg), DegenerateInput);
}

TEST_CASE("elekes_ronyai: tuple budget is enforced") {
    const auto cfg = parse_config(R"({
        "experiment": "elekes_ronyai",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "2"},
        "polynomial": "xy + yz + zx",
        "sweep": [30],
        "budgets": {"tuples": 100}
    })");
    CHECK_THROWS_AS(run_elekes_ronyai(cfg), BudgetExceeded);
}

TEST_CASE("bremner: torsion curve report") {
    const auto cfg = parse_config(R"({
        "experiment": "bremner",
        "curve": {"a": "0", "b": "1"},
        "generators": [{"x": "2", "y": "3"}],
        "sweep": [1, 2, 5]
    })");
    const auto report = run_bremner(cfg);
    REQUIRE(report.size() == 18); // 6 rows per L

    // L = 5 reaches the full torsion group: X = {2, 0, -1}, Y = {0, 1, 3, -1, -3}.
    const auto& xap = row_labeled(report, "x_ap", 2);
    CHECK(xap.set_size == 3);
    CHECK(xap.result == 2);
    const auto& yap = row_labeled(report, "y_ap", 2);
    CHECK(yap.set_size == 5);
    CHECK(yap.result == 4); // -3, -1, 1, 3

    // Pattern lengths are non-decreasing in L.
    for (const std::string label : {"x_ap", "x_gp", "x_square", "y_ap", "y_gp", "y_square"}) {
        std::uint64_t prev = 0;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& r = row_labeled(report, label, i);
            CHECK(r.result >= prev);
            prev = r.result;
        }
    }
}

TEST_CASE("bremner: off-curve generators are refused") {
    const auto cfg = parse_config(R"({
        "experiment": "bremner",
        "curve": {"a": "0", "b": "1"},
        "generators": [{"x": "2", "y": "4"}],
        "sweep": [1]
    })");
    CHECK_THROWS_AS(run_bremner(cfg), OffCurveGenerator);
}

TEST_CASE("bremner: zero generators give the fixed torsion-free report") {
    const auto cfg = parse_config(R"({
        "experiment": "bremner",
        "curve": {"a": "0", "b": "1"},
        "generators": [],
        "sweep": [3]
    })");
    const auto report = run_bremner(cfg);
    REQUIRE(report.size() == 6);
    // The box is {O}; there are no affine coordinates at all.
    for (const auto& r : report) {
        CHECK(r.set_size == 0);
        CHECK(r.result == 0);
        CHECK_FALSE(r.exponent.has_value());
    }
}

TEST_CASE("bremner: the point cache file persists and reruns agree") {
    const auto dir = std::filesystem::temp_directory_path() / "agl_cache_test";
    std::filesystem::create_directories(dir);
    const auto path = (dir / "points.json").string();
    std::filesystem::remove(path);

    const std::string doc = std::string(R"({
        "experiment": "bremner",
        "curve": {"a": "0", "b": "-2"},
        "generators": [{"x": "3", "y": "5"}],
        "sweep": [2],
        "point_cache": ")") + path + "\"}";
    const auto cfg = config_from_json(Json::parse(doc));
    const auto first = run_bremner(cfg);
    CHECK(std::filesystem::exists(path));
    const auto second = run_bremner(cfg); // served from the cache
    CHECK(rows_equal_ignoring_runtime(first, second));
    std::filesystem::remove(path);
}

TEST_CASE("build_set covers every builder") {
    const auto gm = GroupDescriptor::multiplicative();
    const auto ga = GroupDescriptor::additive();

    SetBuilder ap;
    ap.kind = SetBuilder::Kind::Ap;
    ap.start = Rational(3);
    ap.step = Rational(Integer(1), Integer(2));
    CHECK(build_set(ga, ap, 5).size() == 5);

    SetBuilder gap;
    gap.kind = SetBuilder::Kind::Gap;
    gap.gap_steps = {GroupElement::add(1), GroupElement::add(10)};
    gap.gap_lengths = {3, 3};
    CHECK(build_set(ga, gap, 0).size() == 9);

    SetBuilder powers;
    powers.kind = SetBuilder::Kind::Powers;
    powers.gamma = Rational(2);
    powers.extras = {Rational(3)};
    CHECK(build_set(gm, powers, 3).size() == 8);
}
