#include "agl/group.hpp"

#include "agl/errors.hpp"

#include <stdexcept>

namespace agl {

GroupDescriptor GroupDescriptor::elliptic(const Rational& a, const Rational& b) {
    const Rational disc = Rational(4) * a.pow(3) + Rational(27) * b.pow(2);
    if (disc.is_zero()) throw std::invalid_argument("GroupDescriptor::elliptic: singular curve (4a^3 + 27b^2 = 0)");
    return GroupDescriptor(GroupKind::Elliptic, a, b);
}

std::string GroupDescriptor::str() const {
    switch (kind_) {
        case GroupKind::Additive: return "Ga";
        case GroupKind::Multiplicative: return "Gm";
        case GroupKind::Elliptic: return "E(a=" + a_.str() + ",b=" + b_.str() + ")";
    }
    return "?";
}

const Rational& GroupElement::value() const {
    if (kind_ != ElemKind::Add && kind_ != ElemKind::Mul)
        throw std::logic_error("GroupElement::value: not a field-valued element");
    return x_;
}

const Rational& GroupElement::x() const {
    if (kind_ != ElemKind::EcAffine) throw std::logic_error("GroupElement::x: not an affine point");
    return x_;
}

const Rational& GroupElement::y() const {
    if (kind_ != ElemKind::EcAffine) throw std::logic_error("GroupElement::y: not an affine point");
    return y_;
}

std::string GroupElement::str() const {
    switch (kind_) {
        case ElemKind::Add:
        case ElemKind::Mul: return x_.str();
        case ElemKind::EcInfinity: return "infinity";
        case ElemKind::EcAffine: return "(" + x_.str() + "," + y_.str() + ")";
    }
    return "?";
}

int canonical_cmp(const GroupElement& p, const GroupElement& q) {
    if (p.kind() != q.kind()) return static_cast<int>(p.kind()) < static_cast<int>(q.kind()) ? -1 : 1;
    switch (p.kind()) {
        case ElemKind::EcInfinity: return 0;
        case ElemKind::Add:
        case ElemKind::Mul: return canonical_cmp(p.value(), q.value());
        case ElemKind::EcAffine: {
            const int c = canonical_cmp(p.x(), q.x());
            if (c != 0) return c;
            return canonical_cmp(p.y(), q.y());
        }
    }
    return 0;
}

GroupElement identity_element(const GroupDescriptor& g) {
    switch (g.kind()) {
        case GroupKind::Additive: return GroupElement::add(0);
        case GroupKind::Multiplicative: return GroupElement::mul(1);
        case GroupKind::Elliptic: return GroupElement::ec_infinity();
    }
    throw std::logic_error("identity_element: bad descriptor");
}

bool on_group(const GroupDescriptor& g, const GroupElement& p) {
    switch (g.kind()) {
        case GroupKind::Additive:
            return p.kind() == ElemKind::Add;
        case GroupKind::Multiplicative:
            return p.kind() == ElemKind::Mul && !p.value().is_zero();
        case GroupKind::Elliptic: {
            if (p.kind() == ElemKind::EcInfinity) return true;
            if (p.kind() != ElemKind::EcAffine) return false;
            // y^2 = x^3 + a x + b, checked exactly.
            return p.y() * p.y() == p.x().pow(3) + g.a() * p.x() + g.b();
        }
    }
    return false;
}

namespace {

bool kind_matches(const GroupDescriptor& g, const GroupElement& p) {
    switch (g.kind()) {
        case GroupKind::Additive: return p.kind() == ElemKind::Add;
        case GroupKind::Multiplicative: return p.kind() == ElemKind::Mul;
        case GroupKind::Elliptic: return p.kind() == ElemKind::EcInfinity || p.kind() == ElemKind::EcAffine;
    }
    return false;
}

void require_member(const GroupDescriptor& g, const GroupElement& p) {
    if (!kind_matches(g, p))
        throw MixedGroups("element " + p.str() + " does not belong to " + g.str());
}

GroupElement ec_add(const GroupDescriptor& g, const GroupElement& p, const GroupElement& q) {
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;
    const Rational &x1 = p.x(), &y1 = p.y(), &x2 = q.x(), &y2 = q.y();
    Rational lambda(0);
    if (x1 == x2) {
        if (y1 == -y2) return GroupElement::ec_infinity(); // includes doubling at y = 0
        lambda = (Rational(3) * x1 * x1 + g.a()) / (Rational(2) * y1);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const Rational x3 = lambda * lambda - x1 - x2;
    const Rational y3 = lambda * (x1 - x3) - y1;
    return GroupElement::ec_affine(x3, y3);
}

} // namespace

GroupElement op(const GroupDescriptor& g, const GroupElement& p, const GroupElement& q) {
    require_member(g, p);
    require_member(g, q);
    switch (g.kind()) {
        case GroupKind::Additive: return GroupElement::add(p.value() + q.value());
        case GroupKind::Multiplicative: return GroupElement::mul(p.value() * q.value());
        case GroupKind::Elliptic: return ec_add(g, p, q);
    }
    throw std::logic_error("op: bad descriptor");
}

GroupElement inverse(const GroupDescriptor& g, const GroupElement& p) {
    require_member(g, p);
    switch (g.kind()) {
        case GroupKind::Additive: return GroupElement::add(-p.value());
        case GroupKind::Multiplicative: return GroupElement::mul(Rational(1) / p.value());
        case GroupKind::Elliptic:
            if (p.is_infinity()) return p;
            return GroupElement::ec_affine(p.x(), -p.y());
    }
    throw std::logic_error("inverse: bad descriptor");
}

GroupElement scalar_mul(const GroupDescriptor& g, long long n, const GroupElement& p) {
    require_member(g, p);
    if (n == 0) return identity_element(g);
    GroupElement base = n < 0 ? inverse(g, p) : p;
    unsigned long long k = n < 0 ? static_cast<unsigned long long>(-(n + 1)) + 1ull : static_cast<unsigned long long>(n);
    GroupElement acc = identity_element(g);
    while (k > 0) {
        if (k & 1ull) acc = op(g, acc, base);
        k >>= 1;
        if (k > 0) base = op(g, base, base);
    }
    return acc;
}

} // namespace agl
