#include "agl/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace agl {

MultiPoly MultiPoly::constant(std::size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    if (!c.is_zero()) p.terms_[Exponents(num_vars, 0)] = c;
    return p;
}

MultiPoly MultiPoly::variable(std::size_t num_vars, std::size_t index) {
    if (index >= num_vars) throw std::invalid_argument("MultiPoly::variable: index out of range");
    MultiPoly p(num_vars);
    Exponents e(num_vars, 0);
    e[index] = 1;
    p.terms_[e] = Rational(1);
    return p;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    return terms_.size() == 1 && terms_.begin()->first == Exponents(nvars_, 0);
}

Rational MultiPoly::coeff(const Exponents& e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::set_coeff(const Exponents& e, const Rational& c) {
    if (e.size() != nvars_) throw std::invalid_argument("MultiPoly::set_coeff: bad exponent vector length");
    if (c.is_zero())
        terms_.erase(e);
    else
        terms_[e] = c;
}

std::uint32_t MultiPoly::degree_in(std::size_t i) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.at(i));
    return d;
}

std::uint32_t MultiPoly::total_degree() const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) {
        std::uint32_t s = 0;
        for (auto x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

Rational MultiPoly::eval(const std::vector<Rational>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("MultiPoly::eval: bad point dimension");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < nvars_; ++i)
            if (e[i] > 0) term *= point[i].pow(static_cast<long>(e[i]));
        acc += term;
    }
    return acc;
}

MultiPoly MultiPoly::partial(std::size_t i) const {
    if (i >= nvars_) throw std::invalid_argument("MultiPoly::partial: index out of range");
    MultiPoly d(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i] == 0) continue;
        Exponents f = e;
        f[i] -= 1;
        d.set_coeff(f, d.coeff(f) + c * Rational(static_cast<long>(e[i])));
    }
    return d;
}

MultiPoly MultiPoly::widen(std::size_t new_num_vars) const {
    if (new_num_vars < nvars_) throw std::invalid_argument("MultiPoly::widen: shrinking not allowed");
    MultiPoly p(new_num_vars);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f.resize(new_num_vars, 0);
        p.terms_[f] = c;
    }
    return p;
}

MultiPoly MultiPoly::shift_by_direction(const std::vector<Rational>& v) const {
    if (v.size() != nvars_) throw std::invalid_argument("MultiPoly::shift_by_direction: bad direction length");
    const std::size_t wide = nvars_ + 1; // t is the last variable
    MultiPoly result(wide);
    for (const auto& [e, c] : terms_) {
        MultiPoly term = MultiPoly::constant(wide, c);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            // (x_i + t v_i)^{e_i} expanded by the binomial theorem.
            MultiPoly binom(wide);
            for (std::uint32_t k = 0; k <= e[i]; ++k) {
                Integer bc;
                mpz_bin_uiui(bc.get_mpz_t(), e[i], k);
                const Rational coef = Rational(bc) * v[i].pow(static_cast<long>(k));
                if (coef.is_zero()) continue;
                Exponents f(wide, 0);
                f[i] = e[i] - k;
                f[wide - 1] = k;
                binom.set_coeff(f, binom.coeff(f) + coef);
            }
            term = term * binom;
        }
        result = result + term;
    }
    return result;
}

MultiPoly MultiPoly::substitute(std::size_t i, const Rational& value) const {
    if (i >= nvars_) throw std::invalid_argument("MultiPoly::substitute: index out of range");
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) {
        Exponents f = e;
        f[i] = 0;
        const Rational scaled = c * value.pow(static_cast<long>(e[i]));
        p.set_coeff(f, p.coeff(f) + scaled);
    }
    return p;
}

std::vector<Rational> MultiPoly::univariate_coeffs(std::size_t i) const {
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree_in(i)) + 1, Rational(0));
    for (const auto& [e, c] : terms_) {
        for (std::size_t j = 0; j < nvars_; ++j)
            if (j != i && e[j] != 0)
                throw std::invalid_argument("MultiPoly::univariate_coeffs: polynomial involves another variable");
        coeffs[e[i]] = c;
    }
    return coeffs;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly p(nvars_);
    for (const auto& [e, c] : terms_) p.terms_[e] = -c;
    return p;
}

MultiPoly operator+(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars_ != q.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly r = p;
    for (const auto& [e, c] : q.terms_) r.set_coeff(e, r.coeff(e) + c);
    return r;
}

MultiPoly operator-(const MultiPoly& p, const MultiPoly& q) {
    return p + (-q);
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars_ != q.nvars_) throw std::invalid_argument("MultiPoly: mixed variable counts");
    MultiPoly r(p.nvars_);
    for (const auto& [e1, c1] : p.terms_) {
        for (const auto& [e2, c2] : q.terms_) {
            MultiPoly::Exponents e = e1;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += e2[i];
            r.set_coeff(e, r.coeff(e) + c1 * c2);
        }
    }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& c) const {
    MultiPoly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
    return r;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest-degree-first reads better; map order is fine and deterministic.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const Rational a = c.abs();
        if (first) {
            if (c.sign() < 0) os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        bool printed = false;
        if (a != Rational(1)) {
            os << a.str();
            printed = true;
        }
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << a.str();
    }
    return os.str();
}

namespace {

struct Lexer {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    char get() {
        skip_ws();
        return s[pos++];
    }
    std::string number() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("MultiPoly::parse: expected a number near '" + s.substr(start) + "'");
        return s.substr(start, pos - start);
    }
    // A variable token is one letter plus optional digits: x, y, z, w, x7, X12.
    std::size_t variable_index() {
        const char letter = s[pos++];
        std::string digits;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) digits += s[pos++];
        if (!digits.empty()) {
            if (letter != 'x' && letter != 'X')
                throw std::invalid_argument("MultiPoly::parse: indexed variables must be named x<k>");
            const unsigned long k = std::stoul(digits);
            if (k == 0) throw std::invalid_argument("MultiPoly::parse: variable indices start at 1");
            return k - 1;
        }
        switch (letter) {
            case 'x': case 'X': return 0;
            case 'y': case 'Y': return 1;
            case 'z': case 'Z': return 2;
            case 'w': case 'W': return 3;
            default:
                throw std::invalid_argument(std::string("MultiPoly::parse: unknown variable '") + letter + "'");
        }
    }
};

struct RawTerm {
    Rational coeff = Rational(1);
    std::map<std::size_t, std::uint32_t> exps;
};

} // namespace

MultiPoly MultiPoly::parse(const std::string& text, std::size_t num_vars) {
    Lexer lx{text};
    std::vector<RawTerm> parsed;
    std::size_t max_index = 0;

    bool expect_term = true;
    int pending_sign = 1;
    while (!lx.eof()) {
        if (expect_term) {
            // optional leading signs
            while (lx.peek() == '+' || lx.peek() == '-') {
                if (lx.get() == '-') pending_sign = -pending_sign;
            }
            if (lx.eof()) throw std::invalid_argument("MultiPoly::parse: dangling sign");
            RawTerm term;
            term.coeff = Rational(pending_sign);
            bool saw_factor = false;
            for (;;) {
                const char c = lx.peek();
                if (std::isdigit(static_cast<unsigned char>(c))) {
                    Integer n(lx.number());
                    if (lx.peek() == '/') {
                        lx.get();
                        Integer d(lx.number());
                        term.coeff = term.coeff * Rational(n, d);
                    } else {
                        term.coeff = term.coeff * Rational(n);
                    }
                    saw_factor = true;
                } else if (std::isalpha(static_cast<unsigned char>(c))) {
                    const std::size_t idx = lx.variable_index();
                    std::uint32_t e = 1;
                    if (lx.peek() == '^') {
                        lx.get();
                        e = static_cast<std::uint32_t>(std::stoul(lx.number()));
                    }
                    term.exps[idx] += e;
                    max_index = std::max(max_index, idx + 1);
                    saw_factor = true;
                } else if (c == '*') {
                    lx.get();
                    continue;
                } else {
                    break;
                }
            }
            if (!saw_factor) throw std::invalid_argument("MultiPoly::parse: empty term");
            parsed.push_back(std::move(term));
            expect_term = false;
            pending_sign = 1;
        } else {
            const char c = lx.get();
            if (c == '+') {
                pending_sign = 1;
            } else if (c == '-') {
                pending_sign = -1;
            } else {
                throw std::invalid_argument(std::string("MultiPoly::parse: unexpected character '") + c + "'");
            }
            expect_term = true;
        }
    }
    if (parsed.empty()) throw std::invalid_argument("MultiPoly::parse: empty polynomial text");
    if (expect_term) throw std::invalid_argument("MultiPoly::parse: trailing operator");

    const std::size_t g = num_vars > 0 ? num_vars : std::max<std::size_t>(max_index, 1);
    if (max_index > g) throw std::invalid_argument("MultiPoly::parse: variable index exceeds num_vars");
    MultiPoly p(g);
    for (const auto& t : parsed) {
        Exponents e(g, 0);
        for (const auto& [i, k] : t.exps) e[i] = k;
        p.set_coeff(e, p.coeff(e) + t.coeff);
    }
    return p;
}

} // namespace agl
