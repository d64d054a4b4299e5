#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "derivlab/nilcert.hpp"
#include "derivlab/rng.hpp"
#include "derivlab/structure.hpp"

namespace derivlab {

// ---------------------------------------------------------------------------
// Nil'/UNil'/deg' for abstract algebras, reduced through left multiplication:
// a_n ... a_0 · x = (phi(a_n) ∘ ... ∘ phi(a_0))(x), so every question about
// H ⊆ A becomes a question about the operator set phi(H).
// ---------------------------------------------------------------------------

/// Membership certificate for x in Nil'(H) (= UNil'(H) for finite H).
template <class F>
Certificate nil_prime_membership(const StructureAlgebra<F>& a, const std::vector<Vec<F>>& h,
                                 const Vec<F>& x, const SearchLimits& lim = {},
                                 const std::optional<Schedule>& schedule = std::nullopt) {
    OperatorAction<F> act{a.field()};
    std::vector<LinearOperator<F>> actors;
    actors.reserve(h.size());
    for (const auto& v : h) actors.push_back(a.left_multiplication(v));
    return nil_membership(act, actors, x, lim, schedule);
}

/// s(H) = sup of deg'_H over H; -inf when H ⊆ {0}.
struct SValue {
    enum class Kind { NegInf, Finite, Infinite, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::size_t value = 0;

    std::string str() const {
        switch (kind) {
            case Kind::NegInf: return "-inf";
            case Kind::Finite: return std::to_string(value);
            case Kind::Infinite: return "inf";
            default: return "inconclusive";
        }
    }
};

template <class F>
struct SValueResult {
    SValue s;
    std::vector<Certificate> per_element;  // deg'_H(h) for each h in H
};

template <class F>
SValueResult<F> s_value(const StructureAlgebra<F>& a, const std::vector<Vec<F>>& h,
                        const SearchLimits& lim = {}) {
    SValueResult<F> res;
    OperatorAction<F> act{a.field()};
    std::vector<LinearOperator<F>> actors;
    for (const auto& v : h) actors.push_back(a.left_multiplication(v));
    bool any_inconclusive = false, any_infinite = false, any_finite = false;
    std::size_t best = 0;
    for (const auto& v : h) {
        Certificate c = compute_degree(act, actors, v, lim);
        if (c.verdict == Verdict::Refuted) any_infinite = true;
        else if (c.verdict == Verdict::Inconclusive) any_inconclusive = true;
        else if (c.degree.is_finite()) {
            any_finite = true;
            best = std::max(best, c.degree.value);
        }
        res.per_element.push_back(std::move(c));
    }
    if (any_infinite) res.s = {SValue::Kind::Infinite, 0};
    else if (any_inconclusive) res.s = {SValue::Kind::Inconclusive, 0};
    else if (any_finite) res.s = {SValue::Kind::Finite, best};
    else res.s = {SValue::Kind::NegInf, 0};  // H empty or H ⊆ {0}
    return res;
}

// ---------------------------------------------------------------------------
// Classification against (N), (SN), (LN), (nil), (Lnil)
// ---------------------------------------------------------------------------

/// Classification of a finite-dimensional algebra. In finite dimension the
/// five conditions are equivalent, so every verdict is decided by the
/// lower central series; the remaining fields are independently computed
/// evidence that must agree (a disagreement is an internal error).
struct NilpotencyReport {
    Verdict n = Verdict::Inconclusive;
    Verdict sn = Verdict::Inconclusive;
    Verdict ln = Verdict::Inconclusive;
    Verdict nil = Verdict::Inconclusive;
    Verdict lnil = Verdict::Inconclusive;

    SeriesResult series;

    // (nil) evidence: nilpotency index of phi(e_i) per basis element
    // (nullopt = not nilpotent), plus seeded random elements.
    std::vector<std::optional<std::size_t>> basis_phi_index;
    std::size_t sampled_elements = 0;
    bool sampled_phi_all_nilpotent = true;
    std::optional<std::string> phi_counterexample;

    // (SN) evidence: seeded random schedules replayed to depth_bound.
    std::size_t schedules_replayed = 0;
    std::size_t schedule_max_death_step = 0;
    std::size_t schedules_survived = 0;

    SValue s;

    std::size_t depth_bound = kDefaultDepthBound;
    std::size_t sample_count = 0;
    std::uint64_t seed = 0;

    bool all_certified() const {
        return n == Verdict::Certified && sn == Verdict::Certified && ln == Verdict::Certified &&
               nil == Verdict::Certified && lnil == Verdict::Certified;
    }

    /// Implication lattice (N)=>(SN)=>(LN)=>(Lnil) and (N)=>(nil)=>(Lnil).
    bool lattice_consistent() const {
        auto cert = [](Verdict v) { return v == Verdict::Certified; };
        auto ref = [](Verdict v) { return v == Verdict::Refuted; };
        if (cert(n) && !(cert(sn) && cert(nil))) return false;
        if (cert(sn) && !cert(ln)) return false;
        if (cert(ln) && !cert(lnil)) return false;
        if (cert(nil) && !cert(lnil)) return false;
        if (ref(lnil) && !(ref(ln) && ref(nil))) return false;
        if (ref(ln) && !ref(sn)) return false;
        if (ref(sn) && !ref(n)) return false;
        if (ref(nil) && !ref(n)) return false;
        return true;
    }
};

namespace detail {

template <class F>
Vec<F> random_element(const F& f, std::size_t dim, Rng& rng) {
    Vec<F> v(dim, f.zero());
    for (auto& c : v) c = f.from_long(rng.range(-2, 2));
    return v;
}

}  // namespace detail

/// Classify a finite-dimensional associative or Lie algebra. `generators`
/// defaults to the basis; it only affects the reported s(H).
template <class F>
NilpotencyReport classify(const StructureAlgebra<F>& a,
                          std::vector<Vec<F>> generators = {}, std::size_t sample_count = 20,
                          const SearchLimits& lim = {}, std::uint64_t seed = 1) {
    const F& f = a.field();
    if (generators.empty())
        for (std::size_t i = 0; i < a.dim(); ++i) generators.push_back(a.basis_element(i));

    NilpotencyReport rep;
    rep.depth_bound = lim.depth_bound;
    rep.sample_count = sample_count;
    rep.seed = seed;

    rep.series = lower_central_series(a);
    Verdict v = rep.series.nilpotent ? Verdict::Certified : Verdict::Refuted;
    rep.n = rep.sn = rep.ln = rep.nil = rep.lnil = v;

    // cross-check (nil): phi(x) nilpotent on basis and sampled elements
    for (std::size_t i = 0; i < a.dim(); ++i) {
        auto idx = nilpotency_index(a.left_multiplication(a.basis_element(i)));
        if (!idx && !rep.phi_counterexample)
            rep.phi_counterexample = a.basis_names()[i];
        rep.basis_phi_index.push_back(idx);
    }
    Rng rng(seed);
    for (std::size_t s = 0; s < sample_count; ++s) {
        Vec<F> x = detail::random_element(f, a.dim(), rng);
        ++rep.sampled_elements;
        if (!nilpotency_index(a.left_multiplication(x))) {
            rep.sampled_phi_all_nilpotent = false;
            if (!rep.phi_counterexample) rep.phi_counterexample = "sampled element";
        }
    }
    bool basis_all_nilpotent =
        std::all_of(rep.basis_phi_index.begin(), rep.basis_phi_index.end(),
                    [](const auto& o) { return o.has_value(); });
    if (rep.series.nilpotent && (!basis_all_nilpotent || !rep.sampled_phi_all_nilpotent))
        throw std::logic_error("classify: series certifies (N) but phi evidence disagrees");

    // cross-check (SN): seeded random schedules of elements, replayed as
    // right-nested products until they die or reach depth_bound
    for (std::size_t s = 0; s < sample_count; ++s) {
        Vec<F> acc = detail::random_element(f, a.dim(), rng);
        ++rep.schedules_replayed;
        bool died = vec_is_zero(f, acc);
        std::size_t step = 1;
        while (!died && step < lim.depth_bound) {
            acc = a.multiply(detail::random_element(f, a.dim(), rng), acc);
            ++step;
            died = vec_is_zero(f, acc);
        }
        if (died) rep.schedule_max_death_step = std::max(rep.schedule_max_death_step, step);
        else ++rep.schedules_survived;
    }
    if (rep.series.nilpotent && lim.depth_bound >= rep.series.index &&
        rep.schedules_survived > 0)
        throw std::logic_error("classify: series certifies (N) but a schedule survived");

    rep.s = s_value(a, generators, lim).s;
    if (!rep.lattice_consistent())
        throw std::logic_error("classify: implication lattice violated");
    return rep;
}

// ---------------------------------------------------------------------------
// A versus A_L
// ---------------------------------------------------------------------------

/// Replay of one explicit element sequence (s_0, s_1, ...) as right-nested
/// products s_k · ( ... · (s_1 · s_0)); `died_at` is the first k giving zero.
struct SequenceReplay {
    std::optional<std::size_t> died_at;
    std::size_t length = 0;
    bool survived() const { return !died_at.has_value(); }
};

template <class F>
SequenceReplay replay_product_sequence(const StructureAlgebra<F>& a,
                                       const std::vector<Vec<F>>& seq) {
    SequenceReplay r;
    r.length = seq.size();
    if (seq.empty()) return r;
    Vec<F> acc = seq[0];
    if (vec_is_zero(a.field(), acc)) {
        r.died_at = 0;
        return r;
    }
    for (std::size_t k = 1; k < seq.size(); ++k) {
        acc = a.multiply(seq[k], acc);
        if (vec_is_zero(a.field(), acc)) {
            r.died_at = k;
            return r;
        }
    }
    return r;
}

/// Classifies an associative algebra A and its antisymmetrization A_L, and
/// checks the one-way transfers: if A is certified for a condition in
/// {N, nil, LN, Lnil} then A_L must be certified too. (SN) does not
/// transfer; both sides' sequence evidence is reported unasserted.
struct AvsALReport {
    NilpotencyReport assoc;
    NilpotencyReport lie;
    bool transfers_ok = true;
    std::vector<std::string> transfer_notes;
    std::vector<std::pair<SequenceReplay, SequenceReplay>> probe_replays;  // (A, A_L)
};

template <class F>
AvsALReport check_A_vs_AL(const StructureAlgebra<F>& a,
                             const std::vector<std::vector<Vec<F>>>& probe_sequences = {},
                             std::size_t sample_count = 20, const SearchLimits& lim = {},
                             std::uint64_t seed = 1) {
    if (a.kind() != AlgebraKind::Associative)
        throw invalid_algebra_error("check_A_vs_AL: input must be associative");
    AvsALReport rep;
    StructureAlgebra<F> al = a.antisymmetrized();
    rep.assoc = classify(a, {}, sample_count, lim, seed);
    rep.lie = classify(al, {}, sample_count, lim, seed);

    auto check_transfer = [&](const char* name, Verdict from, Verdict to) {
        if (from == Verdict::Certified && to != Verdict::Certified) {
            rep.transfers_ok = false;
            rep.transfer_notes.push_back(std::string(name) + ": A certified but A_L is not");
        }
    };
    check_transfer("N", rep.assoc.n, rep.lie.n);
    check_transfer("nil", rep.assoc.nil, rep.lie.nil);
    check_transfer("LN", rep.assoc.ln, rep.lie.ln);
    check_transfer("Lnil", rep.assoc.lnil, rep.lie.lnil);

    for (const auto& seq : probe_sequences)
        rep.probe_replays.emplace_back(replay_product_sequence(a, seq),
                                       replay_product_sequence(al, seq));
    return rep;
}

}  // namespace derivlab
