#include "agl/json_io.hpp"

#include "agl/errors.hpp"
#include "agl/experiment.hpp"

#include <doctest.h>

using namespace agl;

TEST_CASE("rational and element JSON") {
    CHECK(rational_to_json(Rational(Integer(-3), Integer(4))) == "-3/4");
    CHECK(rational_from_json(Json("5/6")) == Rational(Integer(5), Integer(6)));
    CHECK(rational_from_json(Json(7)) == Rational(7));
    CHECK_THROWS_AS(rational_from_json(Json(true)), MalformedConfig);

    const auto e = GroupDescriptor::elliptic(0, 1);
    const auto p = GroupElement::ec_affine(2, -3);
    CHECK(element_from_json(e, element_to_json(p)) == p);
    CHECK(element_from_json(e, Json("infinity")) == GroupElement::ec_infinity());
    CHECK(element_from_json(GroupDescriptor::multiplicative(), Json("2/3")) ==
          GroupElement::mul(Rational(Integer(2), Integer(3))));
}

TEST_CASE("descriptor JSON") {
    CHECK(group_from_json(Json("Gm")) == GroupDescriptor::multiplicative());
    CHECK(group_from_json(Json("Ga")) == GroupDescriptor::additive());
    const auto e = GroupDescriptor::elliptic(Rational(Integer(-2), Integer(7)), 5);
    CHECK(group_from_json(group_to_json(e)) == e);
    CHECK_THROWS_AS(group_from_json(Json("Gq")), MalformedConfig);
}

TEST_CASE("set JSON round-trip") {
    const auto gm = GroupDescriptor::multiplicative();
    const auto s = set_from_json(gm, Json::parse(R"(["1","2","1/2","-4"])"));
    CHECK(s.size() == 4);
    CHECK(set_from_json(gm, set_to_json(s)) == s);
}

TEST_CASE("correspondence specs parse") {
    const auto g = correspondence_from_json(Json::parse(R"({"kind":"graph","phi":"x^2+1","source":"Gm","target":"Ga"})"));
    CHECK(g.kind() == Correspondence::Kind::Graph);
    CHECK(g.degree() == 3);

    const auto cp = correspondence_from_json(
        Json::parse(R"({"kind":"coordproj","axis":"y","source":{"kind":"elliptic","a":"0","b":"1"}})"));
    CHECK(cp.kind() == Correspondence::Kind::CoordProj);
    CHECK(cp.d_target() == 3);

    const auto ss = correspondence_from_json(Json::parse(R"({"kind":"squareshift","u":"1/2","source":"Gm"})"));
    CHECK(ss.shift() == Rational(Integer(1), Integer(2)));

    const auto im = correspondence_from_json(Json::parse(R"({"kind":"implicit","p":"y^2 - x","source":"Gm","target":"Gm"})"));
    CHECK(im.d_source() == 2);
    CHECK(im.d_target() == 1);

    CHECK_THROWS_AS(correspondence_from_json(Json::parse(R"({"kind":"mystery"})")), MalformedConfig);
}

TEST_CASE("variety specs parse") {
    const auto v = variety_from_json(Json::parse(R"({"equations":["X2X3 - X1 + 1"],"dim":2})"),
                                     GroupDescriptor::multiplicative(), 0);
    CHECK(v.num_vars == 3);
    REQUIRE(v.declared_dim.has_value());
    CHECK(*v.declared_dim == 2);
    CHECK_THROWS_AS(variety_from_json(Json::parse(R"({})"), GroupDescriptor::additive(), 0), MalformedConfig);
}

TEST_CASE("pattern report JSON round-trip") {
    PatternReport r{PatternKind::SquareAP, 3, Rational(1), Rational(2)};
    CHECK(pattern_report_from_json(pattern_report_to_json(r)) == r);
}

TEST_CASE("report CSV and JSON round-trips are exact") {
    Report rows;
    rows.push_back(ReportRow{"iterated", 10, Rational(Integer(19), Integer(10)), 100, 2.0, 13});
    rows.push_back(ReportRow{"image_sum", 10, Rational(Integer(19), Integer(10)), 55, 1.7404573965110527, 4});
    rows.push_back(ReportRow{"x_ap", 1, Rational(1), 1, std::nullopt, 0});

    const auto csv = report_to_csv(rows);
    const auto back = report_from_csv(csv);
    REQUIRE(back.size() == rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(back[i].label == rows[i].label);
        CHECK(back[i].set_size == rows[i].set_size);
        CHECK(back[i].doubling == rows[i].doubling);
        CHECK(back[i].result == rows[i].result);
        CHECK(back[i].exponent == rows[i].exponent);
        CHECK(back[i].runtime_ms == rows[i].runtime_ms);
    }

    const auto jback = report_from_json(report_to_json(rows));
    REQUIRE(jback.size() == rows.size());
    CHECK(rows_equal_ignoring_runtime(jback, rows));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        CHECK(jback[i].exponent == rows[i].exponent);
        CHECK(jback[i].runtime_ms == rows[i].runtime_ms);
    }

    CHECK_THROWS_AS(report_from_csv("bad header\n"), MalformedConfig);
}

TEST_CASE("config parsing") {
    const auto cfg = config_from_json(Json::parse(R"({
        "experiment": "expansion",
        "group": "Gm",
        "set": {"builder": "gp", "start": "1", "ratio": "2", "length": 10},
        "correspondences": [{"kind":"graph","phi":"x+1","source":"Gm","target":"Ga"}],
        "g": 2,
        "sweep": [10, 20],
        "budgets": {"tuples": 1000, "factor_rho_steps": 77},
        "threads": 2
    })"));
    CHECK(cfg.experiment == "expansion");
    CHECK(cfg.fold == 2);
    CHECK(cfg.sweep == std::vector<std::uint64_t>{10, 20});
    CHECK(cfg.budgets.tuples == 1000);
    CHECK(cfg.budgets.factor.rho_steps == 77);
    CHECK(cfg.threads == 2);

    // A bare array is the patterns short form.
    const auto pats = config_from_json(Json::parse(R"(["1","3","5"])"));
    CHECK(pats.experiment == "patterns");
    CHECK(pats.pattern_values.size() == 3);

    CHECK_THROWS_AS(config_from_json(Json("nope")), MalformedConfig);
}
