#pragma once

#include <optional>
#include <vector>

#include "derivlab/linop.hpp"

namespace derivlab {

/// Incremental exact row reduction (reduced echelon form) with deterministic
/// pivoting: pivot is always the first nonzero column, rows kept sorted by
/// pivot. Used for all span and closure computations.
template <class F>
class RowReducer {
public:
    RowReducer(F field, std::size_t width) : field_(std::move(field)), width_(width) {}

    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }
    const std::vector<Vec<F>>& rows() const { return rows_; }

    /// Residue of v after eliminating all current pivots.
    Vec<F> reduce(Vec<F> v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = v[pivots_[r]];
            if (field_.is_zero(c)) continue;
            typename F::Elem k = c;  // row is normalized, pivot entry is 1
            for (std::size_t j = 0; j < width_; ++j)
                v[j] = field_.sub(v[j], field_.mul(k, rows_[r][j]));
        }
        return v;
    }

    bool contains(const Vec<F>& v) const { return vec_is_zero(field_, reduce(v)); }

    /// Inserts v if independent of the current span; returns true on growth.
    bool insert(const Vec<F>& v) {
        Vec<F> w = reduce(v);
        std::size_t p = 0;
        while (p < width_ && field_.is_zero(w[p])) ++p;
        if (p == width_) return false;
        typename F::Elem inv = field_.inv(w[p]);
        for (auto& x : w) x = field_.mul(x, inv);
        // keep earlier rows fully reduced against the new pivot
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto& c = rows_[r][p];
            if (field_.is_zero(c)) continue;
            typename F::Elem k = c;
            for (std::size_t j = 0; j < width_; ++j)
                rows_[r][j] = field_.sub(rows_[r][j], field_.mul(k, w[j]));
        }
        std::size_t pos = 0;
        while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
        rows_.insert(rows_.begin() + pos, std::move(w));
        pivots_.insert(pivots_.begin() + pos, p);
        return true;
    }

private:
    F field_;
    std::size_t width_;
    std::vector<Vec<F>> rows_;
    std::vector<std::size_t> pivots_;
};

/// Coordinates of v as a combination of the given (independent) vectors,
/// or nullopt when v lies outside their span.
template <class F>
std::optional<Vec<F>> coords_in_span(const F& f, const std::vector<Vec<F>>& basis,
                                     const Vec<F>& v) {
    if (basis.empty()) return vec_is_zero(f, v) ? std::optional<Vec<F>>(Vec<F>{}) : std::nullopt;
    const std::size_t n = basis.size(), w = basis.front().size();
    // augmented system: columns are basis vectors, RHS is v
    std::vector<Vec<F>> m(w, Vec<F>(n + 1, f.zero()));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < w; ++i) m[i][j] = basis[j][i];
    for (std::size_t i = 0; i < w; ++i) m[i][n] = v[i];

    std::size_t row = 0;
    std::vector<std::size_t> pivot_of_col(n, SIZE_MAX);
    for (std::size_t col = 0; col < n && row < w; ++col) {
        std::size_t sel = SIZE_MAX;
        for (std::size_t r = row; r < w; ++r)
            if (!f.is_zero(m[r][col])) { sel = r; break; }
        if (sel == SIZE_MAX) continue;
        std::swap(m[row], m[sel]);
        typename F::Elem inv = f.inv(m[row][col]);
        for (auto& x : m[row]) x = f.mul(x, inv);
        for (std::size_t r = 0; r < w; ++r) {
            if (r == row || f.is_zero(m[r][col])) continue;
            typename F::Elem k = m[r][col];
            for (std::size_t j = col; j <= n; ++j)
                m[r][j] = f.sub(m[r][j], f.mul(k, m[row][j]));
        }
        pivot_of_col[col] = row;
        ++row;
    }
    for (std::size_t r = row; r < w; ++r)
        if (!f.is_zero(m[r][n])) return std::nullopt;
    Vec<F> coords(n, f.zero());
    for (std::size_t col = 0; col < n; ++col)
        if (pivot_of_col[col] != SIZE_MAX) coords[col] = m[pivot_of_col[col]][n];
    return coords;
}

}  // namespace derivlab
