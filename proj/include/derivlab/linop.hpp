#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "derivlab/errors.hpp"
#include "derivlab/field.hpp"

namespace derivlab {

template <class F>
using Vec = std::vector<typename F::Elem>;

template <class F>
bool vec_is_zero(const F& f, const Vec<F>& v) {
    for (const auto& x : v)
        if (!f.is_zero(x)) return false;
    return true;
}

template <class F>
int vec_cmp(const F& f, const Vec<F>& a, const Vec<F>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = 0; i < a.size(); ++i) {
        int c = f.cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

template <class F>
Vec<F> vec_add(const F& f, const Vec<F>& a, const Vec<F>& b) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
    return r;
}

template <class F>
Vec<F> vec_scale(const F& f, const typename F::Elem& c, const Vec<F>& a) {
    Vec<F> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
    return r;
}

/// Exact square matrix acting on a finite-dimensional space with indexed
/// basis e_0..e_{d-1}. Entry (i, j) is the e_i-coordinate of the image of
/// e_j, so columns are basis images and apply() is matrix-times-vector.
template <class F>
class LinearOperator {
public:
    using Elem = typename F::Elem;

    LinearOperator(F field, std::size_t dim)
        : field_(std::move(field)), dim_(dim), m_(dim * dim, field_.zero()) {}

    static LinearOperator identity(F field, std::size_t dim) {
        LinearOperator r(std::move(field), dim);
        for (std::size_t i = 0; i < dim; ++i) r.at(i, i) = r.field_.one();
        return r;
    }

    const F& field() const { return field_; }
    std::size_t dim() const { return dim_; }

    Elem& at(std::size_t i, std::size_t j) { return m_[i * dim_ + j]; }
    const Elem& at(std::size_t i, std::size_t j) const { return m_[i * dim_ + j]; }

    Vec<F> apply(const Vec<F>& v) const {
        if (v.size() != dim_) throw dimension_mismatch_error("operator apply: bad vector size");
        Vec<F> r(dim_, field_.zero());
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!field_.is_zero(at(i, j)) && !field_.is_zero(v[j]))
                    r[i] = field_.add(r[i], field_.mul(at(i, j), v[j]));
        return r;
    }

    /// Composition this∘other: `other` is applied first.
    LinearOperator operator*(const LinearOperator& other) const {
        check_same(other, "operator compose");
        LinearOperator r(field_, dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t k = 0; k < dim_; ++k) {
                const Elem& a = at(i, k);
                if (field_.is_zero(a)) continue;
                for (std::size_t j = 0; j < dim_; ++j) {
                    const Elem& b = other.at(k, j);
                    if (field_.is_zero(b)) continue;
                    r.at(i, j) = field_.add(r.at(i, j), field_.mul(a, b));
                }
            }
        return r;
    }

    LinearOperator operator+(const LinearOperator& other) const {
        check_same(other, "operator add");
        LinearOperator r(field_, dim_);
        for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = field_.add(m_[i], other.m_[i]);
        return r;
    }

    LinearOperator operator-(const LinearOperator& other) const {
        check_same(other, "operator sub");
        LinearOperator r(field_, dim_);
        for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = field_.sub(m_[i], other.m_[i]);
        return r;
    }

    LinearOperator scaled(const Elem& c) const {
        LinearOperator r(field_, dim_);
        for (std::size_t i = 0; i < m_.size(); ++i) r.m_[i] = field_.mul(c, m_[i]);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : m_)
            if (!field_.is_zero(x)) return false;
        return true;
    }

    bool operator==(const LinearOperator& other) const {
        if (dim_ != other.dim_ || !(field_ == other.field_)) return false;
        for (std::size_t i = 0; i < m_.size(); ++i)
            if (!field_.equal(m_[i], other.m_[i])) return false;
        return true;
    }
    bool operator!=(const LinearOperator& other) const { return !(*this == other); }

    static int cmp(const LinearOperator& a, const LinearOperator& b) {
        if (a.dim_ != b.dim_) return a.dim_ < b.dim_ ? -1 : 1;
        for (std::size_t i = 0; i < a.m_.size(); ++i) {
            int c = a.field_.cmp(a.m_[i], b.m_[i]);
            if (c != 0) return c;
        }
        return 0;
    }

    const std::vector<Elem>& entries() const { return m_; }

private:
    void check_same(const LinearOperator& other, const char* what) const {
        if (dim_ != other.dim_ || !(field_ == other.field_))
            throw dimension_mismatch_error(std::string(what) + ": dimension mismatch");
    }

    F field_;
    std::size_t dim_;
    std::vector<Elem> m_;  // row-major
};

template <class F>
LinearOperator<F> op_bracket(const LinearOperator<F>& a, const LinearOperator<F>& b) {
    return a * b - b * a;
}

/// Least k with M^k = 0, or nullopt if M is not nilpotent. In finite
/// dimension local nilpotence equals nilpotence, and the index never
/// exceeds the dimension.
template <class F>
std::optional<std::size_t> nilpotency_index(const LinearOperator<F>& m) {
    LinearOperator<F> p = m;
    for (std::size_t k = 1; k <= m.dim(); ++k) {
        if (p.is_zero()) return k;
        p = p * m;
    }
    return std::nullopt;
}

template <class F>
struct LinearOperatorLess {
    bool operator()(const LinearOperator<F>& a, const LinearOperator<F>& b) const {
        return LinearOperator<F>::cmp(a, b) < 0;
    }
};

}  // namespace derivlab
