#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

namespace derivlab {

using VarIndex = std::uint32_t;

/// Commutative power product x_{i1}^{e1} ... x_{ik}^{ek}, stored as a sparse
/// exponent list sorted by variable index. No zero exponents are stored;
/// the empty list is the constant monomial 1.
class Monomial {
public:
    using Factor = std::pair<VarIndex, std::uint32_t>;

    Monomial() = default;

    static Monomial variable(VarIndex i, std::uint32_t exp = 1) {
        Monomial m;
        if (exp > 0) m.factors_.emplace_back(i, exp);
        return m;
    }

    const std::vector<Factor>& factors() const { return factors_; }
    bool is_one() const { return factors_.empty(); }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [v, e] : factors_) d += e;
        return d;
    }

    std::uint32_t exponent(VarIndex i) const {
        for (const auto& [v, e] : factors_)
            if (v == i) return e;
        return 0;
    }

    Monomial operator*(const Monomial& other) const {
        Monomial r;
        auto a = factors_.begin(), b = other.factors_.begin();
        while (a != factors_.end() && b != other.factors_.end()) {
            if (a->first < b->first) r.factors_.push_back(*a++);
            else if (b->first < a->first) r.factors_.push_back(*b++);
            else {
                r.factors_.emplace_back(a->first, a->second + b->second);
                ++a, ++b;
            }
        }
        r.factors_.insert(r.factors_.end(), a, factors_.end());
        r.factors_.insert(r.factors_.end(), b, other.factors_.end());
        return r;
    }

    /// Exponent of x_i reduced by one; the multiplier e is returned through
    /// `exp_out`. Yields (1, 0) when x_i does not occur.
    Monomial divide_by_var(VarIndex i, std::uint32_t& exp_out) const {
        Monomial r;
        exp_out = 0;
        for (const auto& f : factors_) {
            if (f.first == i) {
                exp_out = f.second;
                if (f.second > 1) r.factors_.emplace_back(f.first, f.second - 1);
            } else {
                r.factors_.push_back(f);
            }
        }
        return r;
    }

    bool operator==(const Monomial& other) const { return factors_ == other.factors_; }

    /// Graded lexicographic order: first by total degree, ties broken by the
    /// exponent vector read in increasing variable order (larger exponent on
    /// the earlier variable wins).
    static int cmp_grlex(const Monomial& a, const Monomial& b) {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        auto ia = a.factors_.begin(), ib = b.factors_.begin();
        while (ia != a.factors_.end() && ib != b.factors_.end()) {
            if (ia->first != ib->first)
                return ia->first < ib->first ? 1 : -1;  // earlier variable present => larger
            if (ia->second != ib->second)
                return ia->second > ib->second ? 1 : -1;
            ++ia, ++ib;
        }
        if (ia != a.factors_.end()) return 1;
        if (ib != b.factors_.end()) return -1;
        return 0;
    }

    bool operator<(const Monomial& other) const { return cmp_grlex(*this, other) < 0; }

private:
    std::vector<Factor> factors_;
};

struct MonomialGrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return Monomial::cmp_grlex(a, b) < 0;
    }
};

}  // namespace derivlab
