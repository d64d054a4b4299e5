#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "derivlab/linop.hpp"

namespace derivlab {

/// Noncommutative monomial x_{i1}...x_{in} in variables indexed from 1.
/// Ordered by length, then lexicographically.
struct NcMonomial {
    std::vector<std::uint32_t> letters;

    bool empty() const { return letters.empty(); }
    std::size_t length() const { return letters.size(); }
    std::uint32_t last() const { return letters.back(); }

    NcMonomial concat(const NcMonomial& right) const {
        NcMonomial r = *this;
        r.letters.insert(r.letters.end(), right.letters.begin(), right.letters.end());
        return r;
    }

    bool operator<(const NcMonomial& o) const {
        if (letters.size() != o.letters.size()) return letters.size() < o.letters.size();
        return letters < o.letters;
    }
    bool operator==(const NcMonomial& o) const { return letters == o.letters; }

    std::string str() const {
        std::string s;
        for (auto i : letters) {
            if (!s.empty()) s += "*";
            s += "x" + std::to_string(i);
        }
        return s;
    }
};

/// A nonempty monomial is admissible when its length exceeds its last index.
/// Admissible monomials span the left ideal the quotient module kills.
inline bool is_admissible(const NcMonomial& w) {
    return !w.empty() && w.length() > w.last();
}

/// Truncation of the free-algebra module V = A/A_0: the basis consists of
/// the non-admissible nonempty monomials with indices ≤ max_var and length
/// ≤ max_len. Non-admissibility forces length ≤ last index ≤ max_var, so
/// with max_len ≥ max_var + 1 every single-generator action stays
/// representable; longer products that would leave the range raise
/// truncation_overflow_error.
template <class F>
class FreeAlgebraModule {
public:
    FreeAlgebraModule(F field, std::uint32_t max_var, std::size_t max_len)
        : field_(std::move(field)), max_var_(max_var), max_len_(max_len) {
        if (max_var < 1) throw std::invalid_argument("FreeAlgebraModule: need at least one variable");
        NcMonomial w;
        enumerate(w);
        std::sort(basis_.begin(), basis_.end());  // by length, then lex
        index_.clear();
        for (std::size_t i = 0; i < basis_.size(); ++i) index_.emplace(basis_[i], i);
    }

    const F& field() const { return field_; }
    std::uint32_t max_var() const { return max_var_; }
    std::size_t max_len() const { return max_len_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<NcMonomial>& basis() const { return basis_; }
    const NcMonomial& basis_monomial(std::size_t i) const { return basis_.at(i); }

    /// Class of a monomial in the quotient, as a coordinate vector. Zero for
    /// admissible monomials; overflow when the monomial is non-admissible
    /// but not representable in the truncation.
    Vec<F> class_of(const NcMonomial& w) const {
        Vec<F> v(dim(), field_.zero());
        if (w.empty()) throw std::invalid_argument("class_of: empty monomial");
        if (is_admissible(w)) return v;
        auto it = index_.find(w);
        if (it == index_.end())
            throw truncation_overflow_error("monomial " + w.str() + " leaves the truncation");
        v[it->second] = field_.one();
        return v;
    }

    /// Left action of a monomial on a quotient element.
    Vec<F> act(const NcMonomial& m, const Vec<F>& v) const {
        if (m.empty()) throw std::invalid_argument("act: empty monomial");
        if (v.size() != dim()) throw dimension_mismatch_error("act: bad coordinate length");
        Vec<F> r(dim(), field_.zero());
        for (std::size_t j = 0; j < dim(); ++j) {
            if (field_.is_zero(v[j])) continue;
            NcMonomial prod = m.concat(basis_[j]);
            if (is_admissible(prod)) continue;
            auto it = index_.find(prod);
            if (it == index_.end())
                throw truncation_overflow_error("product " + prod.str() +
                                                " leaves the truncation");
            r[it->second] = field_.add(r[it->second], v[j]);
        }
        return r;
    }

    /// Left action of a free-algebra element given as monomial -> coefficient.
    Vec<F> act_element(const std::map<NcMonomial, typename F::Elem>& elem,
                       const Vec<F>& v) const {
        Vec<F> r(dim(), field_.zero());
        for (const auto& [m, c] : elem) {
            if (field_.is_zero(c)) continue;
            Vec<F> part = act(m, v);
            for (std::size_t i = 0; i < dim(); ++i)
                r[i] = field_.add(r[i], field_.mul(c, part[i]));
        }
        return r;
    }

    /// The action of the generator x_var as a matrix on the truncated
    /// quotient. Always representable when max_len > max_var.
    LinearOperator<F> generator_operator(std::uint32_t var) const {
        if (var < 1 || var > max_var_) throw std::out_of_range("generator index out of range");
        LinearOperator<F> op(field_, dim());
        NcMonomial g{{var}};
        for (std::size_t j = 0; j < dim(); ++j) {
            Vec<F> col(dim(), field_.zero());
            col[j] = field_.one();
            Vec<F> img = act(g, col);
            for (std::size_t i = 0; i < dim(); ++i) op.at(i, j) = img[i];
        }
        return op;
    }

private:
    void enumerate(NcMonomial& w) {
        if (!w.empty() && !is_admissible(w)) basis_.push_back(w);
        if (w.length() >= max_len_) return;
        for (std::uint32_t v = 1; v <= max_var_; ++v) {
            w.letters.push_back(v);
            enumerate(w);
            w.letters.pop_back();
        }
    }

    F field_;
    std::uint32_t max_var_;
    std::size_t max_len_;
    std::vector<NcMonomial> basis_;
    std::map<NcMonomial, std::size_t> index_;
};

}  // namespace derivlab
