#pragma once

#include <string>
#include <vector>

#include "derivlab/linalg.hpp"

namespace derivlab {

enum class AlgebraKind { Associative, Lie };

inline const char* kind_name(AlgebraKind k) {
    return k == AlgebraKind::Associative ? "associative" : "lie";
}

/// Structure-constant table entry: e_i · e_j = sum_k c * e_k.
template <class F>
struct TableEntry {
    std::size_t i, j, k;
    typename F::Elem c;
};

/// Finite-dimensional algebra given by structure constants. The table is
/// validated at construction (associativity, or alternation plus Jacobi)
/// unless explicitly skipped.
template <class F>
class StructureAlgebra {
public:
    using Elem = typename F::Elem;

    StructureAlgebra(F field, AlgebraKind kind, std::vector<std::string> basis_names,
                     const std::vector<TableEntry<F>>& entries, bool validate = true)
        : field_(std::move(field)),
          kind_(kind),
          dim_(basis_names.size()),
          names_(std::move(basis_names)),
          table_(dim_ * dim_) {
        for (const auto& e : entries) {
            if (e.i >= dim_ || e.j >= dim_ || e.k >= dim_)
                throw invalid_algebra_error("structure table index out of range");
            if (field_.is_zero(e.c)) continue;
            set_entry(e.i, e.j, e.k, e.c);
        }
        if (validate) this->validate();
    }

    const F& field() const { return field_; }
    AlgebraKind kind() const { return kind_; }
    std::size_t dim() const { return dim_; }
    const std::vector<std::string>& basis_names() const { return names_; }

    /// e_i · e_j as a coordinate vector.
    Vec<F> basis_product(std::size_t i, std::size_t j) const {
        Vec<F> r(dim_, field_.zero());
        for (const auto& [k, c] : table_[i * dim_ + j]) r[k] = c;
        return r;
    }

    Vec<F> basis_element(std::size_t i) const {
        Vec<F> r(dim_, field_.zero());
        r[i] = field_.one();
        return r;
    }

    Vec<F> multiply(const Vec<F>& a, const Vec<F>& b) const {
        if (a.size() != dim_ || b.size() != dim_)
            throw dimension_mismatch_error("algebra multiply: bad coordinate length");
        Vec<F> r(dim_, field_.zero());
        for (std::size_t i = 0; i < dim_; ++i) {
            if (field_.is_zero(a[i])) continue;
            for (std::size_t j = 0; j < dim_; ++j) {
                if (field_.is_zero(b[j])) continue;
                Elem ab = field_.mul(a[i], b[j]);
                for (const auto& [k, c] : table_[i * dim_ + j])
                    r[k] = field_.add(r[k], field_.mul(ab, c));
            }
        }
        return r;
    }

    /// Left multiplication operator phi(a): x -> a·x. For a Lie algebra this
    /// is ad(a).
    LinearOperator<F> left_multiplication(const Vec<F>& a) const {
        if (a.size() != dim_)
            throw dimension_mismatch_error("left_multiplication: bad coordinate length");
        LinearOperator<F> op(field_, dim_);
        for (std::size_t j = 0; j < dim_; ++j) {
            Vec<F> col = multiply(a, basis_element(j));
            for (std::size_t i = 0; i < dim_; ++i) op.at(i, j) = col[i];
        }
        return op;
    }

    /// The Lie algebra A_L on the same space, with x*y = x·y - y·x.
    /// Requires kind = associative; the result is validated.
    StructureAlgebra antisymmetrized() const {
        if (kind_ != AlgebraKind::Associative)
            throw invalid_algebra_error("antisymmetrized: input must be associative");
        std::vector<TableEntry<F>> entries;
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) {
                Vec<F> v = vec_add(field_, basis_product(i, j),
                                   vec_scale(field_, field_.neg(field_.one()), basis_product(j, i)));
                for (std::size_t k = 0; k < dim_; ++k)
                    if (!field_.is_zero(v[k])) entries.push_back({i, j, k, v[k]});
            }
        return StructureAlgebra(field_, AlgebraKind::Lie, names_, entries, true);
    }

    void validate() const {
        if (kind_ == AlgebraKind::Associative) {
            for (std::size_t i = 0; i < dim_; ++i)
                for (std::size_t j = 0; j < dim_; ++j) {
                    Vec<F> ij = basis_product(i, j);
                    for (std::size_t k = 0; k < dim_; ++k) {
                        Vec<F> lhs = multiply(ij, basis_element(k));
                        Vec<F> rhs = multiply(basis_element(i), basis_product(j, k));
                        if (vec_cmp(field_, lhs, rhs) != 0)
                            throw invalid_algebra_error(
                                "associativity fails on basis triple (" + std::to_string(i) +
                                "," + std::to_string(j) + "," + std::to_string(k) + ")");
                    }
                }
            return;
        }
        // Lie: x·x = 0 on basis plus antisymmetry, then the Jacobi identity.
        for (std::size_t i = 0; i < dim_; ++i)
            if (!vec_is_zero(field_, basis_product(i, i)))
                throw invalid_algebra_error("alternation fails: e" + std::to_string(i) +
                                            "·e" + std::to_string(i) + " != 0");
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = i + 1; j < dim_; ++j) {
                Vec<F> s = vec_add(field_, basis_product(i, j), basis_product(j, i));
                if (!vec_is_zero(field_, s))
                    throw invalid_algebra_error("antisymmetry fails on basis pair (" +
                                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                for (std::size_t k = 0; k < dim_; ++k) {
                    Vec<F> sum = multiply(basis_element(i), basis_product(j, k));
                    sum = vec_add(field_, sum, multiply(basis_element(j), basis_product(k, i)));
                    sum = vec_add(field_, sum, multiply(basis_element(k), basis_product(i, j)));
                    if (!vec_is_zero(field_, sum))
                        throw invalid_algebra_error(
                            "Jacobi identity fails on basis triple (" + std::to_string(i) + "," +
                            std::to_string(j) + "," + std::to_string(k) + ")");
                }
    }

private:
    void set_entry(std::size_t i, std::size_t j, std::size_t k, const Elem& c) {
        auto& cell = table_[i * dim_ + j];
        for (auto& [kk, cc] : cell) {
            if (kk == k) {
                cc = field_.add(cc, c);
                return;
            }
        }
        cell.emplace_back(k, c);
    }

    F field_;
    AlgebraKind kind_;
    std::size_t dim_;
    std::vector<std::string> names_;
    std::vector<std::vector<std::pair<std::size_t, Elem>>> table_;
};

struct SeriesResult {
    std::vector<std::size_t> dims;  // dim A, dim A·A, dim A·(A·A), ... until 0 or repeat
    bool nilpotent;
    std::size_t index;  // when nilpotent: least n with all right-nested length-n products zero
};

/// Dimensions of the chain A ⊇ A·A ⊇ A·(A·A) ⊇ ... (right-nested products,
/// which is what the nilpotency conditions are stated in). Nilpotent iff the
/// chain reaches 0; otherwise it stabilizes at a positive dimension.
template <class F>
SeriesResult lower_central_series(const StructureAlgebra<F>& a) {
    const F& f = a.field();
    SeriesResult res{{a.dim()}, false, 0};
    std::vector<Vec<F>> current;
    for (std::size_t i = 0; i < a.dim(); ++i) current.push_back(a.basis_element(i));
    std::size_t prev_dim = a.dim();
    for (std::size_t step = 2;; ++step) {
        RowReducer<F> red(f, a.dim());
        std::vector<Vec<F>> next;
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (const auto& w : current) {
                Vec<F> pr = a.multiply(a.basis_element(i), w);
                if (red.insert(pr)) next.push_back(std::move(pr));
            }
        res.dims.push_back(red.rank());
        if (red.rank() == 0) {
            res.nilpotent = true;
            res.index = step;
            return res;
        }
        if (red.rank() == prev_dim) return res;  // stabilized above zero
        prev_dim = red.rank();
        current = std::move(next);
    }
}

template <class F>
struct ClosureResult {
    std::vector<LinearOperator<F>> basis;
    bool complete;  // false when dim_bound was exceeded (basis is partial)
};

namespace detail {

template <class F, class Prod>
ClosureResult<F> span_closure(const std::vector<LinearOperator<F>>& gens,
                              std::size_t dim_bound, Prod prod) {
    if (gens.empty()) return {{}, true};
    const F& f = gens.front().field();
    const std::size_t d = gens.front().dim();
    RowReducer<F> red(f, d * d);
    ClosureResult<F> res{{}, true};
    auto try_add = [&](const LinearOperator<F>& op) {
        if (op.is_zero()) return false;
        if (!red.insert(op.entries())) return false;
        res.basis.push_back(op);
        return true;
    };
    for (const auto& g : gens) {
        if (g.dim() != d) throw dimension_mismatch_error("closure: mixed dimensions");
        try_add(g);
    }
    std::size_t frontier = 0;
    while (frontier < res.basis.size()) {
        if (res.basis.size() > dim_bound) {
            res.complete = false;
            return res;
        }
        std::size_t upto = res.basis.size();
        for (std::size_t n = frontier; n < upto; ++n)
            for (std::size_t b = 0; b < upto; ++b) {
                try_add(prod(res.basis[n], res.basis[b]));
                if (b != n) try_add(prod(res.basis[b], res.basis[n]));
            }
        frontier = upto;
        if (res.basis.size() > dim_bound) {
            res.complete = false;
            return res;
        }
    }
    return res;
}

}  // namespace detail

/// Basis of the Lie algebra generated by the given operators, by saturating
/// brackets under exact row reduction. Exceeding dim_bound aborts with the
/// partial basis.
template <class F>
ClosureResult<F> lie_span_closure(const std::vector<LinearOperator<F>>& gens,
                                  std::size_t dim_bound) {
    return detail::span_closure(gens, dim_bound,
                                [](const auto& a, const auto& b) { return op_bracket(a, b); });
}

/// Basis of the (non-unital) associative algebra generated by the operators.
template <class F>
ClosureResult<F> associative_span_closure(const std::vector<LinearOperator<F>>& gens,
                                          std::size_t dim_bound) {
    return detail::span_closure(gens, dim_bound,
                                [](const auto& a, const auto& b) { return a * b; });
}

/// Structure algebra of a product-closed list of independent operators; the
/// multiplication is composition (associative) or the commutator (lie).
template <class F>
StructureAlgebra<F> structure_from_operator_basis(const std::vector<LinearOperator<F>>& basis,
                                                  AlgebraKind kind,
                                                  std::vector<std::string> names = {}) {
    if (basis.empty()) throw invalid_algebra_error("structure_from_operator_basis: empty basis");
    const F& f = basis.front().field();
    std::vector<Vec<F>> flat;
    for (const auto& b : basis) flat.push_back(b.entries());
    if (names.empty())
        for (std::size_t i = 0; i < basis.size(); ++i) names.push_back("b" + std::to_string(i));
    std::vector<TableEntry<F>> entries;
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < basis.size(); ++j) {
            LinearOperator<F> p = kind == AlgebraKind::Associative
                                      ? basis[i] * basis[j]
                                      : op_bracket(basis[i], basis[j]);
            auto coords = coords_in_span(f, flat, p.entries());
            if (!coords)
                throw invalid_algebra_error("operator basis is not closed under the product");
            for (std::size_t k = 0; k < coords->size(); ++k)
                if (!f.is_zero((*coords)[k])) entries.push_back({i, j, k, (*coords)[k]});
        }
    return StructureAlgebra<F>(f, kind, std::move(names), entries, true);
}

}  // namespace derivlab
