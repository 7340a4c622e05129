#include "agl/linalg.hpp"

#include <stdexcept>

namespace agl {

namespace {

std::vector<std::vector<Integer>> clear_denominators(const std::vector<std::vector<Rational>>& m) {
    std::vector<std::vector<Integer>> out;
    out.reserve(m.size());
    for (const auto& row : m) {
        Integer l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        std::vector<Integer> irow;
        irow.reserve(row.size());
        for (const auto& x : row) irow.push_back(x.num() * (l / x.den()));
        out.push_back(std::move(irow));
    }
    return out;
}

// Fraction-free forward elimination.  Returns the pivot column of each pivot
// row; rows below and to the left of each pivot are zeroed.  The matrix is
// modified in place into an upper-echelon integer form.
std::vector<std::size_t> bareiss_echelon(std::vector<std::vector<Integer>>& a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_cols;
    Integer prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c] != 0) {
                pivot = i;
                break;
            }
        }
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        pivot_cols.push_back(c);
        ++r;
    }
    return pivot_cols;
}

} // namespace

std::size_t rank_bareiss(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    return bareiss_echelon(m).size();
}

std::size_t rank_exact(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return 0;
    return rank_bareiss(clear_denominators(m));
}

std::optional<std::vector<Rational>> nullspace_vector(const std::vector<std::vector<Rational>>& m) {
    if (m.empty()) return std::nullopt;
    const std::size_t cols = m[0].size();
    for (const auto& row : m)
        if (row.size() != cols) throw std::invalid_argument("nullspace_vector: ragged matrix");
    if (cols == 0) return std::nullopt;

    auto a = clear_denominators(m);
    const auto pivot_cols = bareiss_echelon(a);
    if (pivot_cols.size() >= cols) return std::nullopt;

    // First free column; set its variable to 1, remaining free variables to 0.
    std::size_t free_col = cols;
    for (std::size_t c = 0; c < cols; ++c) {
        bool is_pivot = false;
        for (auto p : pivot_cols)
            if (p == c) is_pivot = true;
        if (!is_pivot) {
            free_col = c;
            break;
        }
    }

    std::vector<Rational> v(cols, Rational(0));
    v[free_col] = Rational(1);
    // Back-substitute the pivot variables from the echelon rows.
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t pc = pivot_cols[k];
        Rational acc(0);
        for (std::size_t j = pc + 1; j < cols; ++j)
            if (!v[j].is_zero()) acc += Rational(a[k][j]) * v[j];
        v[pc] = -acc / Rational(a[k][pc]);
    }

    // Normalize to a primitive integer vector with positive leading entry.
    Integer l = 1;
    for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
    Integer g = 0;
    std::vector<Integer> iv;
    iv.reserve(cols);
    for (const auto& x : v) {
        Integer t = x.num() * (l / x.den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.get_mpz_t());
        iv.push_back(std::move(t));
    }
    int lead = 0;
    for (const auto& t : iv) {
        if (t != 0) {
            lead = sgn(t);
            break;
        }
    }
    std::vector<Rational> out;
    out.reserve(cols);
    for (auto& t : iv) out.push_back(Rational(lead < 0 ? Integer(-t / g) : Integer(t / g)));
    return out;
}

} // namespace agl
