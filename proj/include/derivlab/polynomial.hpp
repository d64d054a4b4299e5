#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "derivlab/monomial.hpp"
#include "derivlab/ring.hpp"

namespace derivlab {

/// Exact sparse multivariate polynomial over the ring's coefficient field.
/// Canonical form: no zero coefficients; terms ordered graded-lex. Two
/// polynomials are equal iff their term maps are equal. Immutable in spirit:
/// all operations return new values.
template <class F>
class Polynomial {
public:
    using Elem = typename F::Elem;
    using TermMap = std::map<Monomial, Elem, MonomialGrlexLess>;

    explicit Polynomial(RingPtr<F> ring) : ring_(std::move(ring)) {}

    static Polynomial zero(RingPtr<F> ring) { return Polynomial(std::move(ring)); }

    static Polynomial constant(RingPtr<F> ring, Elem c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.emplace(Monomial(), std::move(c));
        return p;
    }

    static Polynomial one(RingPtr<F> ring) {
        auto f = ring->field();
        return constant(std::move(ring), f.one());
    }

    static Polynomial variable(RingPtr<F> ring, VarIndex i) {
        if (i >= ring->var_count())
            throw std::out_of_range("variable index out of range");
        Polynomial p(ring);
        p.terms_.emplace(Monomial::variable(i), ring->field().one());
        return p;
    }

    static Polynomial term(RingPtr<F> ring, Monomial m, Elem c) {
        Polynomial p(std::move(ring));
        if (!p.field().is_zero(c)) p.terms_.emplace(std::move(m), std::move(c));
        return p;
    }

    const RingPtr<F>& ring() const { return ring_; }
    const F& field() const { return ring_->field(); }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    /// Indices of the variables that actually occur.
    std::set<VarIndex> support() const {
        std::set<VarIndex> s;
        for (const auto& [m, c] : terms_)
            for (const auto& [v, e] : m.factors()) s.insert(v);
        return s;
    }

    Elem coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field().zero() : it->second;
    }

    Polynomial operator+(const Polynomial& other) const {
        require_same_ring(ring_, other.ring_, "poly add");
        Polynomial r = *this;
        for (const auto& [m, c] : other.terms_) r.add_term(m, c);
        return r;
    }

    Polynomial operator-() const {
        Polynomial r(ring_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, field().neg(c));
        return r;
    }

    Polynomial operator-(const Polynomial& other) const {
        require_same_ring(ring_, other.ring_, "poly sub");
        Polynomial r = *this;
        const F& f = field();
        for (const auto& [m, c] : other.terms_) r.add_term(m, f.neg(c));
        return r;
    }

    Polynomial operator*(const Polynomial& other) const {
        require_same_ring(ring_, other.ring_, "poly mul");
        Polynomial r(ring_);
        const F& f = field();
        for (const auto& [ma, ca] : terms_)
            for (const auto& [mb, cb] : other.terms_) r.add_term(ma * mb, f.mul(ca, cb));
        return r;
    }

    Polynomial scaled(const Elem& c) const {
        Polynomial r(ring_);
        const F& f = field();
        if (f.is_zero(c)) return r;
        for (const auto& [m, k] : terms_) r.terms_.emplace(m, f.mul(k, c));
        return r;
    }

    /// Formal partial derivative with respect to x_i. In characteristic p the
    /// exponent multiple reduces mod p, so e.g. d(x^p)/dx = 0.
    Polynomial derivative(VarIndex i) const {
        Polynomial r(ring_);
        const F& f = field();
        for (const auto& [m, c] : terms_) {
            std::uint32_t e = 0;
            Monomial q = m.divide_by_var(i, e);
            if (e == 0) continue;
            Elem k = f.mul(c, f.from_long(static_cast<long long>(e)));
            r.add_term(q, k);
        }
        return r;
    }

    bool operator==(const Polynomial& other) const {
        return same_ring(ring_, other.ring_) && terms_ == other.terms_;
    }
    bool operator!=(const Polynomial& other) const { return !(*this == other); }

    /// Total order (used for deterministic de-duplication in searches):
    /// term-by-term graded-lex, coefficients compared in the field.
    static int cmp(const Polynomial& a, const Polynomial& b) {
        const F& f = a.field();
        auto ia = a.terms_.begin(), ib = b.terms_.begin();
        while (ia != a.terms_.end() && ib != b.terms_.end()) {
            int mc = Monomial::cmp_grlex(ia->first, ib->first);
            if (mc != 0) return mc;
            int cc = f.cmp(ia->second, ib->second);
            if (cc != 0) return cc;
            ++ia, ++ib;
        }
        if (ia != a.terms_.end()) return 1;
        if (ib != b.terms_.end()) return -1;
        return 0;
    }

private:
    void add_term(const Monomial& m, const Elem& c) {
        const F& f = field();
        if (f.is_zero(c)) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second = f.add(it->second, c);
            if (f.is_zero(it->second)) terms_.erase(it);
        }
    }

    RingPtr<F> ring_;
    TermMap terms_;
};

template <class F>
struct PolynomialLess {
    bool operator()(const Polynomial<F>& a, const Polynomial<F>& b) const {
        return Polynomial<F>::cmp(a, b) < 0;
    }
};

}  // namespace derivlab
