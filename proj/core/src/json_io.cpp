#include "agl/json_io.hpp"

#include "agl/errors.hpp"

#include <algorithm>

namespace agl {

Json rational_to_json(const Rational& r) {
    return r.str();
}

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    throw MalformedConfig("expected a rational as string or integer, got " + j.dump());
}

Json group_to_json(const GroupDescriptor& g) {
    switch (g.kind()) {
        case GroupKind::Additive: return "Ga";
        case GroupKind::Multiplicative: return "Gm";
        case GroupKind::Elliptic:
            return Json{{"kind", "elliptic"}, {"a", rational_to_json(g.a())}, {"b", rational_to_json(g.b())}};
    }
    throw MalformedConfig("bad group descriptor");
}

GroupDescriptor group_from_json(const Json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "Ga" || s == "ga" || s == "additive") return GroupDescriptor::additive();
        if (s == "Gm" || s == "gm" || s == "multiplicative") return GroupDescriptor::multiplicative();
        throw MalformedConfig("unknown group '" + s + "'");
    }
    if (j.is_object()) {
        const std::string kind = j.value("kind", "");
        if (kind == "Ga" || kind == "additive") return GroupDescriptor::additive();
        if (kind == "Gm" || kind == "multiplicative") return GroupDescriptor::multiplicative();
        if (kind == "elliptic") {
            if (!j.contains("a") || !j.contains("b")) throw MalformedConfig("elliptic group needs a and b");
            return GroupDescriptor::elliptic(rational_from_json(j.at("a")), rational_from_json(j.at("b")));
        }
        throw MalformedConfig("unknown group kind '" + kind + "'");
    }
    throw MalformedConfig("expected a group descriptor, got " + j.dump());
}

Json element_to_json(const GroupElement& e) {
    switch (e.kind()) {
        case ElemKind::Add:
        case ElemKind::Mul: return rational_to_json(e.value());
        case ElemKind::EcInfinity: return "infinity";
        case ElemKind::EcAffine:
            return Json{{"x", rational_to_json(e.x())}, {"y", rational_to_json(e.y())}};
    }
    throw MalformedConfig("bad group element");
}

GroupElement element_from_json(const GroupDescriptor& g, const Json& j) {
    switch (g.kind()) {
        case GroupKind::Additive: return GroupElement::add(rational_from_json(j));
        case GroupKind::Multiplicative: return GroupElement::mul(rational_from_json(j));
        case GroupKind::Elliptic: {
            if (j.is_string() && j.get<std::string>() == "infinity") return GroupElement::ec_infinity();
            if (j.is_object() && j.contains("x") && j.contains("y"))
                return GroupElement::ec_affine(rational_from_json(j.at("x")), rational_from_json(j.at("y")));
            throw MalformedConfig("expected an elliptic point {\"x\":..,\"y\":..} or \"infinity\", got " + j.dump());
        }
    }
    throw MalformedConfig("bad group descriptor");
}

Json set_to_json(const FiniteSet& s) {
    Json arr = Json::array();
    for (const auto& e : s) arr.push_back(element_to_json(e));
    return arr;
}

FiniteSet set_from_json(const GroupDescriptor& g, const Json& j) {
    if (!j.is_array()) throw MalformedConfig("expected a JSON array of elements");
    std::vector<GroupElement> elems;
    elems.reserve(j.size());
    for (const auto& x : j) elems.push_back(element_from_json(g, x));
    return FiniteSet::from_elements(g, std::move(elems));
}

Correspondence correspondence_from_json(const Json& j) {
    if (!j.is_object()) throw MalformedConfig("correspondence spec must be an object");
    const std::string kind = j.value("kind", "");
    if (kind == "graph") {
        const GroupDescriptor src = group_from_json(j.at("source"));
        const GroupDescriptor tgt = group_from_json(j.at("target"));
        return Correspondence::graph(src, tgt, MultiPoly::parse(j.at("phi").get<std::string>(), 1));
    }
    if (kind == "coordproj") {
        const GroupDescriptor src = group_from_json(j.at("source"));
        const std::string axis = j.value("axis", "x");
        return Correspondence::coord_proj(src, axis == "y" || axis == "Y" ? CoordAxis::Y : CoordAxis::X);
    }
    if (kind == "squareshift") {
        const GroupDescriptor src = group_from_json(j.at("source"));
        return Correspondence::square_shift(src, rational_from_json(j.at("u")));
    }
    if (kind == "implicit") {
        const GroupDescriptor src = group_from_json(j.at("source"));
        const GroupDescriptor tgt = group_from_json(j.at("target"));
        return Correspondence::implicit(src, tgt, MultiPoly::parse(j.at("p").get<std::string>(), 2));
    }
    throw MalformedConfig("unknown correspondence kind '" + kind + "'");
}

VarietySpec variety_from_json(const Json& j, const GroupDescriptor& group, std::size_t num_vars) {
    if (!j.is_object() || !j.contains("equations")) throw MalformedConfig("variety spec needs an equations list");
    if (num_vars == 0) {
        if (j.contains("g")) {
            num_vars = j.at("g").get<std::size_t>();
        } else {
            for (const auto& s : j.at("equations"))
                num_vars = std::max(num_vars, MultiPoly::parse(s.get<std::string>()).num_vars());
        }
    }
    std::vector<MultiPoly> eqs;
    for (const auto& s : j.at("equations")) eqs.push_back(MultiPoly::parse(s.get<std::string>(), num_vars));
    std::optional<std::size_t> dim;
    if (j.contains("dim")) dim = j.at("dim").get<std::size_t>();
    return VarietySpec(num_vars, std::move(eqs), dim, group);
}

namespace {

std::string kind_name(PatternKind k) {
    switch (k) {
        case PatternKind::AP: return "AP";
        case PatternKind::GP: return "GP";
        case PatternKind::SquareAP: return "SquareAP";
    }
    return "?";
}

} // namespace

Json pattern_report_to_json(const PatternReport& r) {
    return Json{{"kind", kind_name(r.kind)},
                {"length", r.length},
                {"u", rational_to_json(r.first)},
                {"d", rational_to_json(r.step)}};
}

PatternReport pattern_report_from_json(const Json& j) {
    PatternReport r;
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "AP")
        r.kind = PatternKind::AP;
    else if (kind == "GP")
        r.kind = PatternKind::GP;
    else if (kind == "SquareAP")
        r.kind = PatternKind::SquareAP;
    else
        throw MalformedConfig("unknown pattern kind '" + kind + "'");
    r.length = j.at("length").get<std::size_t>();
    r.first = rational_from_json(j.at("u"));
    r.step = rational_from_json(j.at("d"));
    return r;
}

} // namespace agl
