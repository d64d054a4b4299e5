#pragma once

#include <map>
#include <vector>

#include "derivlab/linop.hpp"
#include "derivlab/polynomial.hpp"

namespace derivlab {

/// k-derivation of a polynomial ring, determined by the images of the
/// variables and extended by the Leibniz rule. Only nonzero images are
/// stored; D(x_i) = 0 for every variable outside the stored support.
template <class F>
class Derivation {
public:
    using Elem = typename F::Elem;

    explicit Derivation(RingPtr<F> ring) : ring_(std::move(ring)) {}

    /// images: variable index -> polynomial. Zero images are dropped.
    Derivation(RingPtr<F> ring, std::map<VarIndex, Polynomial<F>> images)
        : ring_(std::move(ring)) {
        for (auto& [v, p] : images) {
            require_same_ring(ring_, p.ring(), "derivation image");
            if (v >= ring_->var_count()) throw std::out_of_range("derivation image: bad variable");
            if (!p.is_zero()) images_.emplace(v, std::move(p));
        }
    }

    static Derivation zero(RingPtr<F> ring) { return Derivation(std::move(ring)); }

    /// The coordinate derivation d/dx_i.
    static Derivation partial(RingPtr<F> ring, VarIndex i) {
        Derivation d(ring);
        d.images_.emplace(i, Polynomial<F>::one(ring));
        return d;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const std::map<VarIndex, Polynomial<F>>& images() const { return images_; }

    Polynomial<F> image(VarIndex i) const {
        auto it = images_.find(i);
        return it == images_.end() ? Polynomial<F>::zero(ring_) : it->second;
    }

    bool is_zero() const { return images_.empty(); }

    /// D(p) = sum_i (dp/dx_i) * D(x_i), over the finitely many variables
    /// common to p and the support of D.
    Polynomial<F> operator()(const Polynomial<F>& p) const {
        require_same_ring(ring_, p.ring(), "derivation apply");
        Polynomial<F> r = Polynomial<F>::zero(ring_);
        for (const auto& [v, img] : images_) {
            Polynomial<F> dp = p.derivative(v);
            if (!dp.is_zero()) r = r + dp * img;
        }
        return r;
    }

    Derivation operator+(const Derivation& other) const {
        require_same_ring(ring_, other.ring_, "derivation add");
        Derivation r = *this;
        for (const auto& [v, img] : other.images_) r.add_image(v, img);
        return r;
    }

    Derivation scaled(const Elem& c) const {
        Derivation r(ring_);
        if (field().is_zero(c)) return r;
        for (const auto& [v, img] : images_) r.images_.emplace(v, img.scaled(c));
        return r;
    }

    bool operator==(const Derivation& other) const {
        return same_ring(ring_, other.ring_) && images_ == other.images_;
    }
    bool operator!=(const Derivation& other) const { return !(*this == other); }

    static int cmp(const Derivation& a, const Derivation& b) {
        auto ia = a.images_.begin(), ib = b.images_.begin();
        while (ia != a.images_.end() && ib != b.images_.end()) {
            if (ia->first != ib->first) return ia->first < ib->first ? -1 : 1;
            int c = Polynomial<F>::cmp(ia->second, ib->second);
            if (c != 0) return c;
            ++ia, ++ib;
        }
        if (ia != a.images_.end()) return 1;
        if (ib != b.images_.end()) return -1;
        return 0;
    }

private:
    void add_image(VarIndex v, const Polynomial<F>& p) {
        auto it = images_.find(v);
        if (it == images_.end()) {
            if (!p.is_zero()) images_.emplace(v, p);
        } else {
            Polynomial<F> s = it->second + p;
            if (s.is_zero()) images_.erase(it);
            else it->second = std::move(s);
        }
    }

    RingPtr<F> ring_;
    std::map<VarIndex, Polynomial<F>> images_;
};

template <class F>
struct DerivationLess {
    bool operator()(const Derivation<F>& a, const Derivation<F>& b) const {
        return Derivation<F>::cmp(a, b) < 0;
    }
};

/// [D, E] = D∘E - E∘D, itself a derivation; computed on the union of the
/// supports via [D,E](x_i) = D(E(x_i)) - E(D(x_i)).
template <class F>
Derivation<F> lie_bracket(const Derivation<F>& d, const Derivation<F>& e) {
    require_same_ring(d.ring(), e.ring(), "lie bracket");
    std::map<VarIndex, Polynomial<F>> images;
    auto touch = [&](VarIndex v) {
        if (images.count(v)) return;
        images.emplace(v, d(e.image(v)) - e(d.image(v)));
    };
    for (const auto& [v, img] : d.images()) touch(v);
    for (const auto& [v, img] : e.images()) touch(v);
    return Derivation<F>(d.ring(), std::move(images));
}

/// Pointwise linear combination sum_i coeffs[i] * ds[i].
template <class F>
Derivation<F> linear_combination(const std::vector<typename F::Elem>& coeffs,
                                 const std::vector<Derivation<F>>& ds) {
    if (coeffs.size() != ds.size())
        throw std::invalid_argument("linear_combination: length mismatch");
    if (ds.empty()) throw std::invalid_argument("linear_combination: empty input");
    Derivation<F> acc = Derivation<F>::zero(ds.front().ring());
    for (std::size_t i = 0; i < ds.size(); ++i) acc = acc + ds[i].scaled(coeffs[i]);
    return acc;
}

/// Trace of a composite applied to an element. The word (D_0, ..., D_n) is
/// applied with D_0 first, i.e. the composite D_n∘...∘D_0. trace[j] is the
/// value after applying word[j].
template <class F>
struct WordApplication {
    std::vector<Derivation<F>> word;
    Polynomial<F> input;
    std::vector<Polynomial<F>> trace;

    const Polynomial<F>& result() const { return trace.back(); }
};

template <class F>
WordApplication<F> apply_word(const std::vector<Derivation<F>>& word, const Polynomial<F>& p) {
    if (word.empty()) throw std::invalid_argument("apply_word: empty word");
    WordApplication<F> wa{word, p, {}};
    Polynomial<F> cur = p;
    for (const auto& d : word) {
        cur = d(cur);
        wa.trace.push_back(cur);
    }
    return wa;
}

/// Right-associated nested bracket [seq[k], seq[k-1], ..., seq[0]]; seq[0]
/// is the innermost entry, so a single element is returned unchanged and
/// iterated_bracket({E, D}) = lie_bracket(D, E).
template <class F>
Derivation<F> iterated_bracket(const std::vector<Derivation<F>>& seq) {
    if (seq.empty()) throw std::invalid_argument("iterated_bracket: empty sequence");
    Derivation<F> acc = seq.front();
    for (std::size_t i = 1; i < seq.size(); ++i) acc = lie_bracket(seq[i], acc);
    return acc;
}

/// Unique derivation D_F with D_F(x_i) = F(x_i) for a linear operator F on
/// the span of the listed variables; the map F -> D_F is linear and
/// preserves brackets.
template <class F>
Derivation<F> derivation_from_operator(const LinearOperator<F>& op,
                                       const std::vector<VarIndex>& vars,
                                       const RingPtr<F>& ring) {
    if (op.dim() != vars.size())
        throw dimension_mismatch_error("derivation_from_operator: operator/variable count mismatch");
    std::map<VarIndex, Polynomial<F>> images;
    for (std::size_t j = 0; j < vars.size(); ++j) {
        Polynomial<F> img = Polynomial<F>::zero(ring);
        for (std::size_t i = 0; i < vars.size(); ++i) {
            const auto& c = op.at(i, j);
            if (!ring->field().is_zero(c))
                img = img + Polynomial<F>::variable(ring, vars[i]).scaled(c);
        }
        images.emplace(vars[j], std::move(img));
    }
    return Derivation<F>(ring, std::move(images));
}

}  // namespace derivlab
