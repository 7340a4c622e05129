#include "agl/experiment.hpp"

#include "agl/degeneracy.hpp"
#include "agl/errors.hpp"
#include "agl/patterns.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace agl {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::optional<double> measured_exponent(std::uint64_t set_size, std::uint64_t result) {
    if (set_size < 2 || result == 0) return std::nullopt;
    return std::log(static_cast<double>(result)) / std::log(static_cast<double>(set_size));
}

GroupElement field_element(const GroupDescriptor& g, const Rational& v) {
    switch (g.kind()) {
        case GroupKind::Additive: return GroupElement::add(v);
        case GroupKind::Multiplicative: return GroupElement::mul(v);
        case GroupKind::Elliptic: break;
    }
    throw MalformedConfig("a field-valued set builder needs Ga or Gm");
}

SetBuilder builder_from_json(const GroupDescriptor& group, const Json& j) {
    SetBuilder b;
    const std::string kind = j.value("builder", "explicit");
    auto element = [&group](const Json& x) { return element_from_json(group, x); };
    if (kind == "explicit") {
        b.kind = SetBuilder::Kind::Explicit;
        for (const auto& x : j.at("elements")) b.elements.push_back(element(x));
    } else if (kind == "ap" || kind == "gp") {
        b.kind = kind == "ap" ? SetBuilder::Kind::Ap : SetBuilder::Kind::Gp;
        b.start = rational_from_json(j.at("start"));
        b.step = rational_from_json(j.at(kind == "ap" ? "step" : "ratio"));
        b.length = j.value("length", 1ul);
    } else if (kind == "box") {
        b.kind = SetBuilder::Kind::Box;
        for (const auto& x : j.at("generators")) b.generators.push_back(element(x));
        b.side = j.value("L", 1ul);
        if (j.contains("base")) b.base = element(j.at("base"));
    } else if (kind == "gap") {
        b.kind = SetBuilder::Kind::Gap;
        for (const auto& x : j.at("steps")) b.gap_steps.push_back(element(x));
        for (const auto& x : j.at("lengths")) b.gap_lengths.push_back(x.get<unsigned long>());
        if (j.contains("base")) b.base = element(j.at("base"));
    } else if (kind == "powers") {
        b.kind = SetBuilder::Kind::Powers;
        b.gamma = rational_from_json(j.at("gamma"));
        b.side = j.value("N", 1ul);
        if (j.contains("extras"))
            for (const auto& x : j.at("extras")) b.extras.push_back(rational_from_json(x));
    } else {
        throw MalformedConfig("unknown set builder '" + kind + "'");
    }
    return b;
}

} // namespace

ExperimentConfig config_from_json(const Json& j) {
    try {
        ExperimentConfig cfg;
        if (j.is_array()) {
            // A bare JSON array is the `patterns` short form.
            cfg.experiment = "patterns";
            for (const auto& x : j) cfg.pattern_values.push_back(rational_from_json(x));
            return cfg;
        }
        if (!j.is_object()) throw MalformedConfig("config must be a JSON object");
        cfg.experiment = j.value("experiment", "");
        if (j.contains("group")) cfg.group = group_from_json(j.at("group"));
        if (j.contains("curve")) cfg.group = group_from_json(Json{{"kind", "elliptic"},
                                                                  {"a", j.at("curve").at("a")},
                                                                  {"b", j.at("curve").at("b")}});
        if (j.contains("set")) cfg.set = builder_from_json(cfg.group, j.at("set"));
        if (j.contains("correspondences"))
            for (const auto& c : j.at("correspondences")) cfg.correspondences.push_back(correspondence_from_json(c));
        cfg.fold = j.value("g", cfg.correspondences.empty() ? 1u : static_cast<unsigned>(cfg.correspondences.size()));
        if (j.contains("variety")) cfg.variety_json = j.at("variety");
        if (j.contains("polynomial")) cfg.polynomial = MultiPoly::parse(j.at("polynomial").get<std::string>());
        if (j.contains("sweep"))
            for (const auto& x : j.at("sweep")) cfg.sweep.push_back(x.get<std::uint64_t>());
        if (j.contains("generators"))
            for (const auto& x : j.at("generators")) cfg.generators.push_back(element_from_json(cfg.group, x));
        if (j.contains("values"))
            for (const auto& x : j.at("values")) cfg.pattern_values.push_back(rational_from_json(x));
        if (j.contains("budgets")) {
            const auto& bj = j.at("budgets");
            cfg.budgets.tuples = bj.value("tuples", cfg.budgets.tuples);
            cfg.budgets.factor.trial_limit = bj.value("factor_trial_limit", cfg.budgets.factor.trial_limit);
            cfg.budgets.factor.rho_steps = bj.value("factor_rho_steps", cfg.budgets.factor.rho_steps);
        }
        cfg.threads = j.value("threads", 1u);
        cfg.point_cache_path = j.value("point_cache", "");
        cfg.out_path = j.value("out", "");
        cfg.format = j.value("format", "csv");
        return cfg;
    } catch (const Json::exception& e) {
        throw MalformedConfig(std::string("bad config: ") + e.what());
    }
}

FiniteSet build_set(const GroupDescriptor& group, const SetBuilder& b, std::uint64_t sweep_value) {
    switch (b.kind) {
        case SetBuilder::Kind::Explicit:
            return FiniteSet::from_elements(group, b.elements);
        case SetBuilder::Kind::Ap: {
            const unsigned long n = sweep_value ? sweep_value : b.length;
            std::vector<GroupElement> elems;
            Rational v = b.start;
            for (unsigned long i = 0; i < n; ++i, v += b.step) elems.push_back(field_element(group, v));
            return FiniteSet::from_elements(group, std::move(elems));
        }
        case SetBuilder::Kind::Gp: {
            const unsigned long n = sweep_value ? sweep_value : b.length;
            std::vector<GroupElement> elems;
            Rational v = b.start;
            for (unsigned long i = 0; i < n; ++i, v *= b.step) elems.push_back(field_element(group, v));
            return FiniteSet::from_elements(group, std::move(elems));
        }
        case SetBuilder::Kind::Box: {
            const unsigned long side = sweep_value ? sweep_value : b.side;
            return box(SubgroupBasis(group, b.generators), side, b.base);
        }
        case SetBuilder::Kind::Gap: {
            const GroupElement base = b.base ? *b.base : identity_element(group);
            return gap_enumerate(GapSpec(group, base, b.gap_steps, b.gap_lengths)).first;
        }
        case SetBuilder::Kind::Powers: {
            const long n = static_cast<long>(sweep_value ? sweep_value : b.side);
            std::vector<GroupElement> elems;
            for (long i = -n; i <= n; ++i) elems.push_back(field_element(group, b.gamma.pow(i)));
            for (const auto& x : b.extras) elems.push_back(field_element(group, x));
            return FiniteSet::from_elements(group, std::move(elems));
        }
    }
    throw MalformedConfig("bad set builder");
}

bool rows_equal_ignoring_runtime(const Report& a, const Report& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].label != b[i].label || a[i].set_size != b[i].set_size || a[i].doubling != b[i].doubling ||
            a[i].result != b[i].result || a[i].exponent.has_value() != b[i].exponent.has_value())
            return false;
        if (a[i].exponent && *a[i].exponent != *b[i].exponent) return false;
    }
    return true;
}

std::string report_to_csv(const Report& report) {
    std::ostringstream os;
    os << "label,set_size,doubling,result,exponent,runtime_ms\n";
    for (const auto& r : report) {
        os << r.label << "," << r.set_size << "," << r.doubling.str() << "," << r.result << ",";
        if (r.exponent) {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", *r.exponent);
            os << buf;
        }
        os << "," << r.runtime_ms << "\n";
    }
    return os.str();
}

Report report_from_csv(const std::string& csv) {
    std::istringstream is(csv);
    std::string line;
    if (!std::getline(is, line) || line != "label,set_size,doubling,result,exponent,runtime_ms")
        throw MalformedConfig("report CSV: bad header");
    Report out;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::array<std::string, 6> cells;
        std::size_t cell = 0, start = 0;
        for (std::size_t i = 0; i <= line.size(); ++i) {
            if (i == line.size() || line[i] == ',') {
                if (cell >= cells.size()) throw MalformedConfig("report CSV: too many columns");
                cells[cell++] = line.substr(start, i - start);
                start = i + 1;
            }
        }
        if (cell != cells.size()) throw MalformedConfig("report CSV: too few columns");
        ReportRow r;
        r.label = cells[0];
        r.set_size = std::stoull(cells[1]);
        r.doubling = Rational::parse(cells[2]);
        r.result = std::stoull(cells[3]);
        if (!cells[4].empty()) r.exponent = std::stod(cells[4]);
        r.runtime_ms = std::stoll(cells[5]);
        out.push_back(std::move(r));
    }
    return out;
}

Json report_to_json(const Report& report) {
    Json arr = Json::array();
    for (const auto& r : report) {
        Json row{{"label", r.label},
                 {"set_size", r.set_size},
                 {"doubling", rational_to_json(r.doubling)},
                 {"result", r.result},
                 {"runtime_ms", r.runtime_ms}};
        row["exponent"] = r.exponent ? Json(*r.exponent) : Json(nullptr);
        arr.push_back(std::move(row));
    }
    return arr;
}

Report report_from_json(const Json& j) {
    Report out;
    for (const auto& row : j) {
        ReportRow r;
        r.label = row.at("label").get<std::string>();
        r.set_size = row.at("set_size").get<std::uint64_t>();
        r.doubling = rational_from_json(row.at("doubling"));
        r.result = row.at("result").get<std::uint64_t>();
        if (!row.at("exponent").is_null()) r.exponent = row.at("exponent").get<double>();
        r.runtime_ms = row.at("runtime_ms").get<std::int64_t>();
        out.push_back(std::move(r));
    }
    return out;
}

namespace {

// On-disk cache of scalar multiples of curve generators, keyed by the curve,
// the generator and the multiplier.
class PointCache {
public:
    explicit PointCache(std::string path) : path_(std::move(path)) {
        if (path_.empty()) return;
        std::ifstream in(path_);
        if (in) {
            try {
                in >> data_;
            } catch (const Json::exception&) {
                data_ = Json::object(); // unreadable cache: start over
            }
        }
        if (!data_.is_object()) data_ = Json::object();
    }

    std::optional<GroupElement> lookup(const GroupDescriptor& g, const GroupElement& gen, long n) const {
        if (path_.empty()) return std::nullopt;
        const auto it = data_.find(key(g, gen, n));
        if (it == data_.end()) return std::nullopt;
        return element_from_json(g, *it);
    }

    void store(const GroupDescriptor& g, const GroupElement& gen, long n, const GroupElement& value) {
        if (path_.empty()) return;
        data_[key(g, gen, n)] = element_to_json(value);
        dirty_ = true;
    }

    void save() {
        if (path_.empty() || !dirty_) return;
        std::ofstream out(path_);
        out << data_.dump();
    }

private:
    static std::string key(const GroupDescriptor& g, const GroupElement& gen, long n) {
        return g.str() + "|" + gen.str() + "|" + std::to_string(n);
    }
    std::string path_;
    Json data_ = Json::object();
    bool dirty_ = false;
};

FiniteSet cached_point_box(const GroupDescriptor& g, const std::vector<GroupElement>& generators,
                           unsigned long side, PointCache& cache) {
    const long l = static_cast<long>(side);
    std::vector<std::vector<GroupElement>> multiples;
    for (const auto& gen : generators) {
        std::vector<GroupElement> m(2 * side + 1, identity_element(g));
        for (long n = 1; n <= l; ++n) {
            if (auto hit = cache.lookup(g, gen, n)) {
                m[static_cast<std::size_t>(l + n)] = *hit;
            } else {
                m[static_cast<std::size_t>(l + n)] = op(g, m[static_cast<std::size_t>(l + n - 1)], gen);
                cache.store(g, gen, n, m[static_cast<std::size_t>(l + n)]);
            }
            m[static_cast<std::size_t>(l - n)] = inverse(g, m[static_cast<std::size_t>(l + n)]);
        }
        multiples.push_back(std::move(m));
    }
    std::vector<GroupElement> combos{identity_element(g)};
    for (const auto& m : multiples) {
        std::vector<GroupElement> next;
        next.reserve(combos.size() * m.size());
        for (const auto& p : combos)
            for (const auto& q : m) next.push_back(op(g, p, q));
        combos = std::move(next);
    }
    return FiniteSet::from_elements(g, std::move(combos));
}

std::vector<Rational> rationals_of(const FiniteSet& s) {
    std::vector<Rational> out;
    out.reserve(s.size());
    for (const auto& e : s) out.push_back(e.value());
    return out;
}

void pattern_rows(Report& report, const std::string& prefix, const FiniteSet& coords,
                  unsigned threads, Clock::time_point start) {
    const std::uint64_t size = coords.size();
    const Rational k = coords.empty() ? Rational(0) : doubling(coords, threads);
    auto push = [&](const std::string& name, std::size_t length) {
        ReportRow row;
        row.label = prefix + "_" + name;
        row.set_size = size;
        row.doubling = k;
        row.result = length;
        row.exponent = measured_exponent(size, length);
        row.runtime_ms = ms_since(start);
        report.push_back(std::move(row));
    };
    if (coords.empty()) {
        push("ap", 0);
        push("gp", 0);
        push("square", 0);
        return;
    }
    const auto values = rationals_of(coords);
    push("ap", longest_ap(values).length);
    push("gp", longest_gp(values).length);
    push("square", longest_square_ap(values).length);
}

} // namespace

Report run_bremner(const ExperimentConfig& config) {
    if (!config.group.is_elliptic()) throw MalformedConfig("bremner needs an elliptic curve group");
    for (const auto& gen : config.generators)
        if (!on_group(config.group, gen))
            throw OffCurveGenerator("generator " + gen.str() + " is not on " + config.group.str());
    if (config.sweep.empty()) throw MalformedConfig("bremner needs a sweep of L values");

    PointCache cache(config.point_cache_path);
    Report report;
    for (const auto L : config.sweep) {
        const auto start = Clock::now();
        const FiniteSet points = cached_point_box(config.group, config.generators,
                                                  static_cast<unsigned long>(L), cache);
        const FiniteSet xs = Correspondence::coord_proj(config.group, CoordAxis::X)
                                 .image(points, config.budgets.factor, config.threads);
        const FiniteSet ys = Correspondence::coord_proj(config.group, CoordAxis::Y)
                                 .image(points, config.budgets.factor, config.threads);
        pattern_rows(report, "x", xs, config.threads, start);
        pattern_rows(report, "y", ys, config.threads, start);
    }
    cache.save();
    return report;
}

Report run_expansion(const ExperimentConfig& config) {
    if (!config.set) throw MalformedConfig("expansion needs a set builder");
    if (config.correspondences.empty()) throw MalformedConfig("expansion needs at least one correspondence");

    std::vector<Correspondence> cs = config.correspondences;
    if (cs.size() == 1)
        while (cs.size() < config.fold) cs.push_back(cs.front());
    if (cs.size() != config.fold)
        throw MalformedConfig("expansion: list either one correspondence (replicated g times) or exactly g of them");

    // Hypothesis guard: refuse classifiable subgroup translates.
    for (const auto& c : cs) {
        bool translate = false;
        try {
            translate = c.is_subgroup_translate();
        } catch (const Unsupported&) {
            continue; // implicit correspondences are not classifiable
        }
        if (translate) throw TranslateCorrespondence(c.str() + " is a translate of an algebraic subgroup");
    }

    Report report;
    for (const auto n : config.sweep) {
        const auto start = Clock::now();
        const FiniteSet a = build_set(config.group, *config.set, n);
        const Rational k = doubling(a, config.threads);

        const FiniteSet iter = iterated(a, config.fold, config.threads);
        ReportRow r1{"iterated", a.size(), k, iter.size(), measured_exponent(a.size(), iter.size()), ms_since(start)};
        report.push_back(std::move(r1));

        const auto mid = Clock::now();
        const FiniteSet img = image_sum(cs, a, config.budgets.factor, config.threads);
        ReportRow r2{"image_sum", a.size(), k, img.size(), measured_exponent(a.size(), img.size()), ms_since(mid)};
        report.push_back(std::move(r2));
    }
    return report;
}

Report run_eszabo(const ExperimentConfig& config) {
    if (!config.set) throw MalformedConfig("eszabo needs a set builder");
    if (config.variety_json.is_null()) throw MalformedConfig("eszabo needs a variety spec");

    const VarietySpec v = variety_from_json(config.variety_json, config.group, 0);
    Report report;
    for (const auto n : config.sweep) {
        const auto start = Clock::now();
        const FiniteSet a = build_set(config.group, *config.set, n);
        const Rational k = doubling(a, config.threads);
        const std::uint64_t count = count_points(v, a, config.budgets.tuples, config.threads);
        report.push_back(ReportRow{"count", a.size(), k, count, measured_exponent(a.size(), count), ms_since(start)});
        if (v.declared_dim && *v.declared_dim >= 1) {
            std::uint64_t ref = 1;
            for (std::size_t i = 0; i + 1 < *v.declared_dim; ++i) ref *= a.size();
            report.push_back(ReportRow{"size_pow_dim_minus_1", a.size(), k, ref,
                                       measured_exponent(a.size(), ref), ms_since(start)});
        }
    }
    return report;
}

Report run_elekes_ronyai(const ExperimentConfig& config) {
    if (!config.set) throw MalformedConfig("elekes_ronyai needs a set builder");
    if (!config.polynomial) throw MalformedConfig("elekes_ronyai needs a polynomial");
    const MultiPoly& p = *config.polynomial;

    // Hypothesis guard per group kind.
    if (config.group.kind() == GroupKind::Multiplicative) {
        if (gm_degeneracy(p)) throw DegenerateInput("polynomial " + p.str() + " is degenerate for Gm^g");
    } else if (config.group.kind() == GroupKind::Additive) {
        if (ga_degeneracy(p)) throw DegenerateInput("polynomial " + p.str() + " is degenerate for Ga^g");
    } else {
        throw MalformedConfig("elekes_ronyai needs Ga or Gm");
    }

    const std::size_t g = p.num_vars();
    Report report;
    for (const auto n : config.sweep) {
        const auto start = Clock::now();
        const FiniteSet a = build_set(config.group, *config.set, n);
        Integer tuples;
        mpz_ui_pow_ui(tuples.get_mpz_t(), static_cast<unsigned long>(a.size()), static_cast<unsigned long>(g));
        if (cmp(tuples, Integer(static_cast<unsigned long>(config.budgets.tuples))) > 0)
            throw BudgetExceeded("elekes_ronyai: |A|^g exceeds the tuple budget");

        // Exact image set P(A, ..., A) by odometer enumeration.
        std::vector<Rational> tuple(g, Rational(0));
        std::vector<std::size_t> idx(g, 0);
        std::vector<Rational> image;
        const auto& elems = a.elements();
        if (!elems.empty()) {
            for (std::size_t i = 0; i < g; ++i) tuple[i] = elems[0].value();
            for (;;) {
                image.push_back(p.eval(tuple));
                std::size_t pos = 0;
                while (pos < g) {
                    if (++idx[pos] < elems.size()) {
                        tuple[pos] = elems[idx[pos]].value();
                        break;
                    }
                    idx[pos] = 0;
                    tuple[pos] = elems[0].value();
                    ++pos;
                }
                if (pos == g) break;
            }
        }
        std::sort(image.begin(), image.end(), [](const Rational& x, const Rational& y) { return canonical_cmp(x, y) < 0; });
        image.erase(std::unique(image.begin(), image.end()), image.end());

        const Rational k = doubling(a, config.threads);
        report.push_back(ReportRow{"image", a.size(), k, image.size(),
                                   measured_exponent(a.size(), image.size()), ms_since(start)});
    }
    return report;
}

Json run_patterns(const ExperimentConfig& config) {
    if (config.pattern_values.empty()) throw MalformedConfig("patterns needs a JSON array of rationals");
    return Json{{"ap", pattern_report_to_json(longest_ap(config.pattern_values))},
                {"gp", pattern_report_to_json(longest_gp(config.pattern_values))},
                {"square_ap", pattern_report_to_json(longest_square_ap(config.pattern_values))}};
}

Json run_degeneracy(const ExperimentConfig& config) {
    if (!config.polynomial) throw MalformedConfig("degeneracy needs a polynomial");
    const MultiPoly& p = *config.polynomial;
    Json out;
    out["polynomial"] = p.str();
    const auto v = ga_degeneracy(p);
    Json ga;
    ga["degenerate"] = v.has_value();
    if (v) {
        Json dir = Json::array();
        for (const auto& x : *v) dir.push_back(rational_to_json(x));
        ga["direction"] = dir;
        ga["certified"] = translation_invariance_certificate(p, *v);
    } else {
        ga["direction"] = nullptr;
    }
    out["ga"] = ga;
    out["gm"] = Json{{"degenerate", gm_degeneracy(p)}};
    out["hypersurface_degree"] = hypersurface_degree(p);
    return out;
}

} // namespace agl
