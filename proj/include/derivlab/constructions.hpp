#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "derivlab/derfinite.hpp"
#include "derivlab/freemod.hpp"
#include "derivlab/nilclass.hpp"
#include "derivlab/nilcert.hpp"
#include "derivlab/poly_io.hpp"
#include "derivlab/rng.hpp"

namespace derivlab {

// ---------------------------------------------------------------------------
// Factories for the concrete families used throughout the test and claim
// suites. Infinite families are built at an explicit truncation size; the
// claim texts state what the bounded versions assert.
// ---------------------------------------------------------------------------

/// Δ = {D, E} on k[x,y,z] with D = x∂/∂y + y∂/∂z and E = y∂/∂x - z∂/∂y.
/// The span of Δ consists of locally nilpotent derivations, yet D(E(x)) = x.
template <class F>
struct IntroPair {
    RingPtr<F> ring;
    Derivation<F> d, e;
};

template <class F>
IntroPair<F> make_intro_pair(F field) {
    auto ring = make_ring(field, {"x", "y", "z"});
    auto var = [&](VarIndex i) { return Polynomial<F>::variable(ring, i); };
    Derivation<F> d(ring, {{1, var(0)}, {2, var(1)}});
    Derivation<F> e(ring, {{0, var(1)}, {1, -var(2)}});
    return {ring, d, e};
}

/// D_n on k[x_lo..x_hi]: x_i -> x_{i+1} for i ≤ n, 0 above. Requires
/// n < hi so the image stays inside the truncation.
template <class F>
Derivation<F> make_chain_derivation(const RingPtr<F>& ring, std::size_t n, std::size_t lo) {
    std::map<VarIndex, Polynomial<F>> images;
    for (std::size_t i = lo; i <= n && i + 1 - lo < ring->var_count(); ++i)
        images.emplace(static_cast<VarIndex>(i - lo),
                       Polynomial<F>::variable(ring, static_cast<VarIndex>(i + 1 - lo)));
    return Derivation<F>(ring, std::move(images));
}

/// Truncation of the chain family: variables x_0..x_{n+2} and generators
/// D_0..D_n.
template <class F>
struct ChainFamily {
    RingPtr<F> ring;
    std::vector<Derivation<F>> gens;
};

template <class F>
ChainFamily<F> make_chain_family(F field, std::size_t n) {
    if (n < 2) throw std::invalid_argument("chain family: truncation must be >= 2");
    std::vector<std::string> names;
    for (std::size_t i = 0; i <= n + 2; ++i) names.push_back("x" + std::to_string(i));
    auto ring = make_ring(field, names);
    ChainFamily<F> fam{ring, {}};
    for (std::size_t k = 0; k <= n; ++k) fam.gens.push_back(make_chain_derivation(ring, k, 0));
    return fam;
}

/// Shift-to-e_n family on span(e_0..e_K): F_n kills e_1..e_n and sends every
/// other basis vector to e_n. Satisfies F_n ∘ F_m = 0 for m ≤ n while the
/// nested brackets [F_n,...,F_1] never vanish at e_0.
template <class F>
std::vector<LinearOperator<F>> make_shift_family(F field, std::size_t max_index) {
    if (max_index < 2) throw std::invalid_argument("shift family: truncation must be >= 2");
    std::size_t dim = max_index + 1;  // e_0..e_K
    std::vector<LinearOperator<F>> ops;
    for (std::size_t n = 1; n + 1 <= max_index; ++n) {
        LinearOperator<F> op(field, dim);
        for (std::size_t i = 0; i < dim; ++i) {
            if (i >= 1 && i <= n) continue;
            op.at(n, i) = field.one();
        }
        ops.push_back(std::move(op));
    }
    return ops;
}

/// The T_{i,j} family (i ≥ j): T_{i,j} kills e_0..e_i and sends e_k (k > i)
/// to e_j. Closed under composition: T_{i2,j2}∘T_{i1,j1} is 0 when j1 ≤ i2
/// and T_{i1,j2} when j1 > i2.
template <class F>
struct TriangularShiftFamily {
    std::vector<std::pair<std::size_t, std::size_t>> index_pairs;  // (i, j), i >= j
    std::vector<LinearOperator<F>> ops;
    std::size_t dim;  // basis e_0..e_{imax+1}

    std::size_t find(std::size_t i, std::size_t j) const {
        for (std::size_t k = 0; k < index_pairs.size(); ++k)
            if (index_pairs[k] == std::make_pair(i, j)) return k;
        throw std::out_of_range("T index pair out of range");
    }
};

template <class F>
TriangularShiftFamily<F> make_triangular_shift_family(F field, std::size_t imax) {
    if (imax < 1) throw std::invalid_argument("triangular shift family: truncation must be >= 1");
    TriangularShiftFamily<F> fam;
    fam.dim = imax + 2;
    for (std::size_t i = 0; i <= imax; ++i)
        for (std::size_t j = 0; j <= i; ++j) {
            LinearOperator<F> op(field, fam.dim);
            for (std::size_t k = i + 1; k < fam.dim; ++k) op.at(j, k) = field.one();
            fam.index_pairs.emplace_back(i, j);
            fam.ops.push_back(std::move(op));
        }
    return fam;
}

/// Structure algebra spanned by the T_{i,j} with composition as product.
template <class F>
StructureAlgebra<F> triangular_shift_algebra(const F& field,
                                             const TriangularShiftFamily<F>& fam) {
    std::vector<std::string> names;
    for (const auto& [i, j] : fam.index_pairs)
        names.push_back("T" + std::to_string(i) + "_" + std::to_string(j));
    std::vector<TableEntry<F>> entries;
    for (std::size_t a = 0; a < fam.index_pairs.size(); ++a)
        for (std::size_t b = 0; b < fam.index_pairs.size(); ++b) {
            auto [i1, j1] = fam.index_pairs[b];  // inner (applied first)
            auto [i2, j2] = fam.index_pairs[a];  // outer
            if (j1 > i2) entries.push_back({a, b, fam.find(i1, j2), field.one()});
        }
    return StructureAlgebra<F>(field, AlgebraKind::Associative, names, entries, true);
}

/// Triangular derivation family on k[X_1..X_n]: D_f^j = f ∂/∂X_j with
/// f in k[X_1..X_{j-1}].
template <class F>
struct TriangularRing {
    RingPtr<F> ring;

    Derivation<F> d_f(const Polynomial<F>& f, VarIndex j) const {
        return Derivation<F>(ring, {{j, f}});
    }

    /// Random monomial in X_1..X_{j-1} (a constant when j = 0-indexed first
    /// variable), with total degree ≤ max_deg.
    Polynomial<F> random_lower_monomial(VarIndex j, std::uint64_t max_deg, Rng& rng) const {
        Monomial m;
        if (j > 0) {
            std::uint64_t deg = rng.below(max_deg + 1);
            for (std::uint64_t t = 0; t < deg; ++t) {
                VarIndex v = static_cast<VarIndex>(rng.below(j));
                m = m * Monomial::variable(v);
            }
        }
        long long c = rng.range(1, 3);
        return Polynomial<F>::term(ring, m, ring->field().from_long(c));
    }
};

template <class F>
TriangularRing<F> make_triangular_ring(F field, std::size_t n) {
    if (n < 2) throw std::invalid_argument("triangular ring: need at least 2 variables");
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
    return {make_ring(field, names)};
}

/// Strictly upper triangular d×d matrix units e_{ij} (i < j) as a structure
/// algebra; e_{ij}·e_{kl} = [j=k] e_{il}.
template <class F>
StructureAlgebra<F> upper_triangular_algebra(F field, std::size_t d) {
    if (d < 2) throw std::invalid_argument("upper_triangular_algebra: need d >= 2");
    std::vector<std::string> names;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> idx;
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= d; ++j) {
            idx[{i, j}] = names.size();
            names.push_back("e" + std::to_string(i) + std::to_string(j));
        }
    std::vector<TableEntry<F>> entries;
    for (const auto& [ij, a] : idx)
        for (const auto& [kl, b] : idx)
            if (ij.second == kl.first) entries.push_back({a, b, idx.at({ij.first, kl.second}),
                                                          field.one()});
    return StructureAlgebra<F>(field, AlgebraKind::Associative, names, entries, true);
}

/// The 2-dimensional nonabelian Lie algebra [e1, e2] = e2.
template <class F>
StructureAlgebra<F> two_dim_nonabelian(F field) {
    return StructureAlgebra<F>(field, AlgebraKind::Lie, {"e1", "e2"},
                               {{0, 1, 1, field.one()}, {1, 0, 1, field.neg(field.one())}},
                               true);
}

// ---------------------------------------------------------------------------
// Example reproduction: every shipped example carries a list of claims that
// replay its defining identities at the chosen truncation.
// ---------------------------------------------------------------------------

struct ClaimResult {
    std::string name;
    bool passed;
    std::string evidence;
};

struct ReproduceOutcome {
    std::string example;
    std::size_t n = 0;
    std::uint64_t characteristic = 0;
    std::uint64_t seed = 1;
    std::size_t depth_bound = kDefaultDepthBound;
    std::vector<ClaimResult> claims;

    bool all_passed() const {
        for (const auto& c : claims)
            if (!c.passed) return false;
        return true;
    }
};

namespace detail {

class ClaimList {
public:
    void check(const std::string& name, bool ok, const std::string& evidence) {
        results_.push_back({name, ok, evidence});
    }
    std::vector<ClaimResult> take() { return std::move(results_); }

private:
    std::vector<ClaimResult> results_;
};

template <class F>
std::vector<ClaimResult> intro_claims(F field, std::uint64_t seed, const SearchLimits& lim) {
    auto [ring, d, e] = make_intro_pair(field);
    ClaimList cl;
    auto x = Polynomial<F>::variable(ring, 0);

    Polynomial<F> dex = d(e(x));
    cl.check("D(E(x)) = x", dex == x, to_string(dex));

    Polynomial<F> bx = lie_bracket(d, e)(x);
    cl.check("[D,E](x) = x", bx == x, to_string(bx));

    Rng rng(seed);
    bool cubes_ok = true;
    std::string bad;
    for (int t = 0; t < 20; ++t) {
        auto draw = [&]() {
            while (true) {
                bool neg = rng.chance(1, 2);
                std::string num = std::to_string(rng.range(1, 9));
                std::string den = std::to_string(rng.range(1, 9));
                try {
                    return field.from_fraction(neg, num, den);
                } catch (const std::domain_error&) {
                    // denominator divisible by the characteristic; redraw
                }
            }
        };
        typename F::Elem a = draw();
        typename F::Elem b = draw();
        Derivation<F> comb = linear_combination<F>({a, b}, {d, e});
        LinearOperator<F> m(field, 3);
        for (VarIndex j = 0; j < 3; ++j) {
            Polynomial<F> img = comb.image(j);
            for (VarIndex i = 0; i < 3; ++i)
                m.at(i, j) = img.coefficient(Monomial::variable(i));
        }
        if (!(m * m * m).is_zero()) {
            cubes_ok = false;
            bad = "a=" + field.str(a) + " b=" + field.str(b);
            break;
        }
    }
    cl.check("matrix of aD+bE on span(x,y,z) cubes to zero (20 seeded pairs)", cubes_ok,
             cubes_ok ? "all zero" : bad);

    DerivationAction<F> act;
    Certificate c = nil_membership(act, std::vector<Derivation<F>>{d, e}, x, lim);
    bool refuted = c.verdict == Verdict::Refuted && c.periodic &&
                   c.periodic->preperiod.empty() &&
                   c.periodic->period == std::vector<std::size_t>{1, 0};
    std::string ev = std::string(verdict_name(c.verdict));
    if (c.periodic) {
        ev += " period=[";
        for (auto i : c.periodic->period) ev += std::to_string(i) + ",";
        ev += "]";
    }
    cl.check("nil membership of x refuted by the periodic schedule (E,D)", refuted, ev);
    return cl.take();
}

template <class F>
std::vector<ClaimResult> chain_claims(F field, std::size_t n, const SearchLimits& lim) {
    auto fam = make_chain_family(field, n);
    ClaimList cl;
    DerivationAction<F> act;

    std::vector<Polynomial<F>> probes;
    for (VarIndex v = 0; v < fam.ring->var_count(); ++v)
        probes.push_back(Polynomial<F>::variable(fam.ring, v));

    auto van_hi = word_vanishing_depth(act, fam.gens, n + 2, probes);
    cl.check("every word of length n+2 kills every variable", van_hi.vanishes, "length " +
             std::to_string(n + 2));
    auto van_lo = word_vanishing_depth(act, fam.gens, n + 1, probes);
    std::string wit;
    for (auto i : van_lo.witness) wit += "D" + std::to_string(i) + " ";
    cl.check("some word of length n+1 survives (witness recorded)", !van_lo.vanishes, wit);

    // (D_N ∘ ... ∘ D_k)(x_k) = x_{N+1} for k ≤ N ≤ n
    bool chain_ok = true;
    std::string bad;
    for (std::size_t k = 0; k <= n && chain_ok; ++k)
        for (std::size_t N = k; N <= n; ++N) {
            std::vector<Derivation<F>> word(fam.gens.begin() + k, fam.gens.begin() + N + 1);
            auto wa = apply_word(word, Polynomial<F>::variable(fam.ring, static_cast<VarIndex>(k)));
            if (wa.result() != Polynomial<F>::variable(fam.ring, static_cast<VarIndex>(N + 1))) {
                chain_ok = false;
                bad = "k=" + std::to_string(k) + " N=" + std::to_string(N);
                break;
            }
        }
    cl.check("(D_N ∘ ... ∘ D_k)(x_k) = x_{N+1} for k ≤ N ≤ n", chain_ok, chain_ok ? "all" : bad);

    std::vector<VarIndex> gens_vars;
    for (VarIndex v = 0; v < fam.ring->var_count(); ++v) gens_vars.push_back(v);
    auto sc = set_locally_nilpotent(fam.gens, gens_vars, fam.ring, lim);
    cl.check("the truncated set is certified uniformly locally nilpotent",
             sc.overall.verdict == Verdict::Certified,
             std::string(verdict_name(sc.overall.verdict)));
    return cl.take();
}

template <class F>
std::vector<ClaimResult> triangular_claims(F field, std::size_t n, std::uint64_t seed,
                                           const SearchLimits& lim) {
    auto tri = make_triangular_ring(field, n);
    ClaimList cl;
    const RingPtr<F>& ring = tri.ring;
    auto X = [&](VarIndex i) { return Polynomial<F>::variable(ring, i); };
    Derivation<F> e = Derivation<F>::partial(ring, 0);  // ∂/∂X_1

    // (E^m ∘ D_m)(X_2) = m! and the matching nested bracket, m = 1..5
    bool pow_ok = true, br_ok = true, notnil_ok = true;
    std::string bad_pow, bad_br, bad_nn;
    for (std::size_t m = 1; m <= 5; ++m) {
        Monomial mono = Monomial::variable(0, static_cast<std::uint32_t>(m));
        Polynomial<F> f = Polynomial<F>::term(ring, mono, field.one());
        Derivation<F> dm = tri.d_f(f, 1);  // X_1^m ∂/∂X_2
        long long fact = 1;
        for (std::size_t t = 2; t <= m; ++t) fact *= static_cast<long long>(t);
        Polynomial<F> expect = Polynomial<F>::constant(ring, field.from_long(fact));

        std::vector<Derivation<F>> word{dm};
        word.insert(word.end(), m, e);
        if (apply_word(word, X(1)).result() != expect) {
            pow_ok = false;
            bad_pow = "m=" + std::to_string(m);
        }
        std::vector<Derivation<F>> seq{dm};
        seq.insert(seq.end(), m, e);
        Derivation<F> nested = iterated_bracket(seq);  // [E,...,E,D_m]
        if (nested(X(1)) != expect) {
            br_ok = false;
            bad_br = "m=" + std::to_string(m);
        }
        if (nested.is_zero()) {
            notnil_ok = false;
            bad_nn = "m=" + std::to_string(m);
        }
    }
    cl.check("(E^m ∘ D_m)(X_2) = m! for m = 1..5", pow_ok, pow_ok ? "all" : bad_pow);
    cl.check("[E,...,E,D_m](X_2) = m! for m = 1..5", br_ok, br_ok ? "all" : bad_br);
    cl.check("ad(E)^m(D_m) != 0 for m = 1..5 (not nil)", notnil_ok, notnil_ok ? "all" : bad_nn);

    // bracket law [D_f^j, D_g^k] = D^k_{D_f^j(g)} for j ≤ k, 100 seeded pairs
    Rng rng(seed);
    bool law_ok = true;
    std::string bad_law;
    for (int t = 0; t < 100 && law_ok; ++t) {
        VarIndex j = static_cast<VarIndex>(rng.below(ring->var_count()));
        VarIndex k = static_cast<VarIndex>(j + rng.below(ring->var_count() - j));
        Polynomial<F> f = tri.random_lower_monomial(j, 3, rng);
        Polynomial<F> g = tri.random_lower_monomial(k, 3, rng);
        Derivation<F> lhs = lie_bracket(tri.d_f(f, j), tri.d_f(g, k));
        Derivation<F> rhs = tri.d_f(tri.d_f(f, j)(g), k);
        if (!(lhs == rhs)) {
            law_ok = false;
            bad_law = "j=" + std::to_string(j + 1) + " k=" + std::to_string(k + 1) +
                      " f=" + to_string(f) + " g=" + to_string(g);
        }
    }
    cl.check("[D_f^j, D_g^k] = D^k_{D_f^j(g)} for j ≤ k (100 seeded pairs)", law_ok,
             law_ok ? "all" : bad_law);

    // 100 seeded generator sequences reach a zero iterated bracket (SN evidence)
    bool sn_ok = true;
    std::size_t max_death = 0;
    std::string bad_sn;
    for (int t = 0; t < 100 && sn_ok; ++t) {
        VarIndex j = static_cast<VarIndex>(rng.below(ring->var_count()));
        Derivation<F> acc = tri.d_f(tri.random_lower_monomial(j, 2, rng), j);
        bool died = acc.is_zero();
        std::size_t step = 1;
        while (!died && step < 20) {
            VarIndex jj = static_cast<VarIndex>(rng.below(ring->var_count()));
            acc = lie_bracket(tri.d_f(tri.random_lower_monomial(jj, 2, rng), jj), acc);
            ++step;
            died = acc.is_zero();
        }
        if (died) max_death = std::max(max_death, step);
        else {
            sn_ok = false;
            bad_sn = "sequence " + std::to_string(t) + " survived to depth 20";
        }
    }
    cl.check("100 seeded generator sequences reach a zero iterated bracket within depth 20",
             sn_ok, sn_ok ? "max death step " + std::to_string(max_death) : bad_sn);
    (void)lim;
    return cl.take();
}

template <class F>
std::vector<ClaimResult> shift_claims(F field, std::size_t max_index, const SearchLimits& lim) {
    auto ops = make_shift_family(field, max_index);  // F_1..F_{K-1} on e_0..e_K
    ClaimList cl;
    const std::size_t count = ops.size();

    bool comp_ok = true;
    std::string bad;
    for (std::size_t n = 0; n < count && comp_ok; ++n)
        for (std::size_t m = 0; m <= n; ++m)
            if (!(ops[n] * ops[m]).is_zero()) {
                comp_ok = false;
                bad = "F" + std::to_string(n + 1) + "∘F" + std::to_string(m + 1);
                break;
            }
    cl.check("F_n ∘ F_m = 0 for m ≤ n", comp_ok, comp_ok ? "all" : bad);

    // [F_n,...,F_1] = (-1)^{n+1} F_1 ∘ F_2 ∘ ... ∘ F_n exactly
    bool br_ok = true;
    std::string bad_br;
    for (std::size_t n = 1; n <= count && br_ok; ++n) {
        LinearOperator<F> nested = ops[0];
        for (std::size_t k = 1; k < n; ++k) nested = op_bracket(ops[k], nested);
        LinearOperator<F> prod = ops[n - 1];
        for (std::size_t k = n - 1; k >= 1; --k) prod = ops[k - 1] * prod;
        if ((n + 1) % 2 == 1) prod = prod.scaled(field.neg(field.one()));
        if (!(nested == prod)) {
            br_ok = false;
            bad_br = "n=" + std::to_string(n);
        }
    }
    cl.check("[F_n,...,F_1] = (-1)^{n+1} F_1∘...∘F_n as exact matrices", br_ok,
             br_ok ? "all n ≤ " + std::to_string(count) : bad_br);

    // [F_n,...,F_1](e_0) = ±e_1 != 0
    const F& f = field;
    bool pt_ok = true;
    std::string bad_pt;
    Vec<F> e0(max_index + 1, f.zero());
    e0[0] = f.one();
    for (std::size_t n = 1; n <= count && pt_ok; ++n) {
        LinearOperator<F> nested = ops[0];
        for (std::size_t k = 1; k < n; ++k) nested = op_bracket(ops[k], nested);
        Vec<F> v = nested.apply(e0);
        Vec<F> e1(max_index + 1, f.zero());
        e1[1] = (n + 1) % 2 == 0 ? f.one() : f.neg(f.one());
        if (vec_cmp(f, v, e1) != 0) {
            pt_ok = false;
            bad_pt = "n=" + std::to_string(n);
        }
    }
    cl.check("[F_n,...,F_1](e_0) = ±e_1 ≠ 0", pt_ok, pt_ok ? "all" : bad_pt);

    // Lie membership at e_0: stays inconclusive for lengths up to the actor
    // count (beyond that the truncation itself forces a cutoff).
    OperatorLieAction<F> lact{field};
    SearchLimits lie_lim = lim;
    lie_lim.depth_bound = count;
    auto lie = lie_unil_membership(lact, ops, e0, lie_lim);
    bool inconclusive_with_pattern = lie.cert.verdict == Verdict::Inconclusive &&
                                     lie.pattern.size() == count;
    for (const auto& ev : lie.pattern)
        if (!ev.nonzero_at_x) inconclusive_with_pattern = false;
    cl.check("Lie membership of e_0 inconclusive: brackets survive at every checked length",
             inconclusive_with_pattern,
             "pattern length " + std::to_string(lie.pattern.size()));
    return cl.take();
}

template <class F>
std::vector<ClaimResult> triangular_shift_claims(F field, std::size_t imax,
                                                 std::uint64_t seed, const SearchLimits& lim) {
    auto fam = make_triangular_shift_family(field, imax);
    ClaimList cl;
    const F& f = field;

    // relations (composition is 0 or another family member) on all pairs
    bool rel_ok = true;
    std::string bad;
    for (std::size_t a = 0; a < fam.ops.size() && rel_ok; ++a)
        for (std::size_t b = 0; b < fam.ops.size(); ++b) {
            auto [i2, j2] = fam.index_pairs[a];
            auto [i1, j1] = fam.index_pairs[b];
            LinearOperator<F> comp = fam.ops[a] * fam.ops[b];
            bool ok;
            if (j1 <= i2) ok = comp.is_zero();
            else ok = comp == fam.ops[fam.find(i1, j2)];
            if (!ok) {
                rel_ok = false;
                bad = "T(" + std::to_string(i2) + "," + std::to_string(j2) + ")∘T(" +
                      std::to_string(i1) + "," + std::to_string(j1) + ")";
                break;
            }
        }
    cl.check("composition relations hold on all index pairs", rel_ok, rel_ok ? "all" : bad);

    // S_i = T_{i,i}: [S_n,...,S_0] = (-1)^n S_0...S_n and (S_0...S_n)(e_{n+1}) = e_0
    bool chain_ok = true;
    std::string bad_chain;
    for (std::size_t n = 0; n + 1 <= imax && chain_ok; ++n) {
        LinearOperator<F> nested = fam.ops[fam.find(0, 0)];
        LinearOperator<F> prod = fam.ops[fam.find(n, n)];
        for (std::size_t k = 1; k <= n; ++k)
            nested = op_bracket(fam.ops[fam.find(k, k)], nested);
        for (std::size_t k = n; k >= 1; --k)
            prod = fam.ops[fam.find(k - 1, k - 1)] * prod;
        LinearOperator<F> signed_prod = (n % 2 == 0) ? prod : prod.scaled(f.neg(f.one()));
        if (!(nested == signed_prod)) {
            chain_ok = false;
            bad_chain = "bracket identity at n=" + std::to_string(n);
            break;
        }
        Vec<F> v(fam.dim, f.zero());
        v[n + 1] = f.one();
        Vec<F> img = prod.apply(v);
        Vec<F> e0(fam.dim, f.zero());
        e0[0] = f.one();
        if (vec_cmp(f, img, e0) != 0) {
            chain_ok = false;
            bad_chain = "(S_0...S_n)(e_{n+1}) at n=" + std::to_string(n);
        }
    }
    cl.check("[S_n,...,S_0] = (-1)^n S_0...S_n and (S_0...S_n)(e_{n+1}) = e_0", chain_ok,
             chain_ok ? "all n ≤ " + std::to_string(imax - 1) : bad_chain);

    // deg_Δ(e_k) ≤ k for every basis vector of the truncation
    OperatorAction<F> act{f};
    bool deg_ok = true;
    std::string bad_deg;
    for (std::size_t k = 0; k < fam.dim && deg_ok; ++k) {
        Vec<F> ek(fam.dim, f.zero());
        ek[k] = f.one();
        Certificate c = compute_degree(act, fam.ops, ek, lim);
        if (c.verdict != Verdict::Certified || !c.degree.is_finite() || c.degree.value > k) {
            deg_ok = false;
            bad_deg = "e_" + std::to_string(k);
        }
    }
    cl.check("deg_Δ(e_k) ≤ k on the truncation", deg_ok, deg_ok ? "all" : bad_deg);

    // classification of the spanned algebra, and the A_L bracket chain
    auto alg = triangular_shift_algebra(f, fam);
    auto rep = classify(alg, {}, 20, lim, seed);
    cl.check("the truncated span certifies (N)", rep.n == Verdict::Certified,
             "series index " + std::to_string(rep.series.index));

    std::vector<Vec<F>> s_chain;
    for (std::size_t i = 0; i <= imax; ++i) {
        Vec<F> v(alg.dim(), f.zero());
        v[fam.find(i, i)] = f.one();
        s_chain.push_back(std::move(v));
    }
    auto avl = check_A_vs_AL(alg, {s_chain}, 20, lim, seed);
    bool probe_ok = avl.transfers_ok && !avl.probe_replays.empty() &&
                    avl.probe_replays[0].first.died_at.has_value() &&
                    avl.probe_replays[0].second.survived();
    std::string ev = "A died at step " +
                     (avl.probe_replays[0].first.died_at
                          ? std::to_string(*avl.probe_replays[0].first.died_at)
                          : std::string("-")) +
                     ", A_L survived all " + std::to_string(imax + 1) + " brackets";
    cl.check("the S-chain dies under composition but survives as nested brackets", probe_ok, ev);
    return cl.take();
}

template <class F>
std::vector<ClaimResult> freemod_claims(F field, std::uint32_t max_var, std::size_t max_len,
                                        std::uint64_t seed, const SearchLimits& lim) {
    FreeAlgebraModule<F> mod(field, max_var, max_len);
    ClaimList cl;
    const F& f = field;

    // admissibility matches brute force over all monomials in range
    bool adm_ok = true;
    std::size_t checked = 0;
    std::function<void(NcMonomial&)> walk = [&](NcMonomial& w) {
        if (!w.empty()) {
            ++checked;
            bool brute = w.letters.size() > w.letters.back();
            if (is_admissible(w) != brute) adm_ok = false;
        }
        if (w.length() >= max_len) return;
        for (std::uint32_t v = 1; v <= max_var; ++v) {
            w.letters.push_back(v);
            walk(w);
            w.letters.pop_back();
        }
    };
    NcMonomial root;
    walk(root);
    cl.check("admissibility predicate matches brute force", adm_ok,
             std::to_string(checked) + " monomials");

    // every basis monomial w with last index i_m is killed by all length-i_m
    // generator words
    std::vector<LinearOperator<F>> gens;
    for (std::uint32_t v = 1; v <= max_var; ++v) gens.push_back(mod.generator_operator(v));
    OperatorAction<F> act{f};
    bool kill_ok = true;
    std::string bad;
    for (std::size_t b = 0; b < mod.dim() && kill_ok; ++b) {
        const NcMonomial& w = mod.basis_monomial(b);
        std::size_t im = w.last();
        Vec<F> cls(mod.dim(), f.zero());
        cls[b] = f.one();
        auto van = word_vanishing_depth(act, gens, im, {cls});
        if (!van.vanishes) {
            kill_ok = false;
            bad = w.str();
        }
    }
    cl.check("all length-i_m generator words annihilate each basis monomial", kill_ok,
             kill_ok ? "all " + std::to_string(mod.dim()) + " basis monomials" : bad);

    // injectivity spot check: a·x_{m+1} != 0 for seeded nonzero a of bounded length
    Rng rng(seed);
    bool inj_ok = true;
    std::string bad_inj;
    std::size_t len_cap = std::min<std::size_t>(3, max_var - 1);  // keep x_{m+1} in range
    for (int t = 0; t < 50 && inj_ok; ++t) {
        std::map<NcMonomial, typename F::Elem> a;
        std::size_t m = 1;  // max length among the monomials of a
        std::size_t terms = 1 + rng.below(3);
        for (std::size_t u = 0; u < terms; ++u) {
            NcMonomial w;
            std::size_t len = 1 + rng.below(len_cap);
            for (std::size_t l = 0; l < len; ++l)
                w.letters.push_back(1 + static_cast<std::uint32_t>(rng.below(max_var)));
            m = std::max(m, w.length());
            a[w] = f.from_long(rng.range(1, 5));
        }
        NcMonomial xm1{{static_cast<std::uint32_t>(m + 1)}};
        Vec<F> img = mod.act_element(a, mod.class_of(xm1));
        if (vec_is_zero(f, img)) {
            inj_ok = false;
            bad_inj = "trial " + std::to_string(t);
        }
    }
    cl.check("a·x_{m+1} != 0 in the quotient for 50 seeded nonzero a", inj_ok,
             inj_ok ? "all" : bad_inj);

    // module law (ab)·v = a·(b·v) on seeded monomial pairs within bounds
    bool assoc_ok = true;
    for (int t = 0; t < 50 && assoc_ok; ++t) {
        NcMonomial p, q;
        std::size_t lp = 1 + rng.below(2), lq = 1 + rng.below(2);
        for (std::size_t l = 0; l < lp; ++l)
            p.letters.push_back(1 + static_cast<std::uint32_t>(rng.below(max_var)));
        for (std::size_t l = 0; l < lq; ++l)
            q.letters.push_back(1 + static_cast<std::uint32_t>(rng.below(max_var)));
        std::size_t b = rng.below(mod.dim());
        if (p.length() + q.length() + mod.basis_monomial(b).length() > max_len) continue;
        Vec<F> v(mod.dim(), f.zero());
        v[b] = f.one();
        try {
            if (vec_cmp(f, mod.act(p.concat(q), v), mod.act(p, mod.act(q, v))) != 0)
                assoc_ok = false;
        } catch (const truncation_overflow_error&) {
            // product not representable; outside the claim's range
        }
    }
    cl.check("(ab)·v = a·(b·v) within the truncation", assoc_ok, "seeded pairs");
    (void)lim;
    return cl.take();
}

template <class F>
std::vector<ClaimResult> transported_claims(F field, std::uint32_t max_var, std::size_t max_len,
                                            std::uint64_t seed, const SearchLimits& lim) {
    FreeAlgebraModule<F> mod(field, max_var, max_len);
    ClaimList cl;
    const F& f = field;

    // transport the generator actions to derivations on k[v_1..v_N]
    std::vector<std::string> names;
    for (std::size_t i = 0; i < mod.dim(); ++i) names.push_back("v" + std::to_string(i + 1));
    auto ring = make_ring(field, names);
    std::vector<LinearOperator<F>> gen_ops;
    std::vector<Derivation<F>> gen_ders;
    std::vector<VarIndex> vars;
    for (VarIndex i = 0; i < mod.dim(); ++i) vars.push_back(i);
    for (std::uint32_t v = 1; v <= max_var; ++v) {
        gen_ops.push_back(mod.generator_operator(v));
        gen_ders.push_back(derivation_from_operator(gen_ops.back(), vars, ring));
    }

    // deg bounds transfer: deg of e_w under the operators equals deg of the
    // matching variable under the transported derivations
    OperatorAction<F> oact{f};
    DerivationAction<F> dact;
    Rng rng(seed);
    bool deg_ok = true;
    std::string bad;
    for (int t = 0; t < 20 && deg_ok; ++t) {
        std::size_t b = rng.below(mod.dim());
        Vec<F> eb(mod.dim(), f.zero());
        eb[b] = f.one();
        Certificate c1 = compute_degree(oact, gen_ops, eb, lim);
        Certificate c2 =
            compute_degree(dact, gen_ders, Polynomial<F>::variable(ring, static_cast<VarIndex>(b)),
                           lim);
        bool same = c1.verdict == Verdict::Certified && c2.verdict == Verdict::Certified &&
                    c1.degree.is_finite() && c2.degree.is_finite() &&
                    c1.degree.value == c2.degree.value;
        std::size_t im = mod.basis_monomial(b).last();
        if (!same || c1.degree.value >= im) {
            deg_ok = false;
            bad = mod.basis_monomial(b).str();
        }
    }
    cl.check("degree bounds transfer through the derivation embedding", deg_ok,
             deg_ok ? "20 sampled basis classes" : bad);

    // every transported generator word of length i_m kills v_w
    bool kill_ok = true;
    std::string bad_kill;
    for (int t = 0; t < 10 && kill_ok; ++t) {
        std::size_t b = rng.below(mod.dim());
        std::size_t im = mod.basis_monomial(b).last();
        auto van = word_vanishing_depth(dact, gen_ders, im,
                                        {Polynomial<F>::variable(ring, static_cast<VarIndex>(b))});
        if (!van.vanishes) {
            kill_ok = false;
            bad_kill = mod.basis_monomial(b).str();
        }
    }
    cl.check("transported words of length i_m kill the matching variable", kill_ok,
             kill_ok ? "10 sampled" : bad_kill);

    // bounded freeness evidence: nested brackets of the first three
    // transported generators span the free-Lie dimensions 3, 3, 8 in
    // lengths 1..3
    if (max_var >= 3 && max_len >= 4) {
        std::vector<Derivation<F>> g3(gen_ders.begin(), gen_ders.begin() + 3);
        std::vector<std::size_t> want{3, 3, 8};
        std::vector<std::size_t> got;
        std::vector<Derivation<F>> prev = g3;
        detail::SparseDerivReducer<F> red1(f);
        for (const auto& d : g3) red1.insert(d);
        got.push_back(red1.rank());
        std::vector<Derivation<F>> layer = g3;
        for (std::size_t len = 2; len <= 3; ++len) {
            std::vector<Derivation<F>> next;
            detail::SparseDerivReducer<F> red(f);
            for (const auto& w : layer)
                for (const auto& g : g3) {
                    Derivation<F> b = lie_bracket(g, w);
                    if (!b.is_zero() && red.insert(b)) next.push_back(b);
                }
            got.push_back(red.rank());
            layer = std::move(next);
        }
        bool free_ok = got == want;
        std::string ev = "ranks";
        for (auto r : got) ev += " " + std::to_string(r);
        cl.check("nested brackets of 3 generators span free-Lie ranks 3,3,8 (bounded evidence)",
                 free_ok, ev);
    }
    return cl.take();
}

}  // namespace detail

inline const std::vector<std::string>& example_ids() {
    static const std::vector<std::string> ids = {
        "intro-DE", "ex-298", "ex-928349", "ex-ckj029", "ex-PpPP", "ex-Zf24", "ex-2ndPart"};
    return ids;
}

/// Builds the example at the given truncation and replays its claims.
/// Unknown ids and out-of-range parameters throw std::invalid_argument.
/// Default truncation for each example when the caller passes n = 0.
inline std::size_t default_truncation(const std::string& id) {
    if (id == "ex-ckj029") return 8;  // basis e_0..e_8
    if (id == "ex-PpPP") return 6;    // index pairs with i ≤ 6
    return 4;
}

template <class F>
ReproduceOutcome reproduce_example(F field, const std::string& id, std::size_t n,
                                   std::uint64_t seed, const SearchLimits& lim = {}) {
    if (n == 0) n = default_truncation(id);
    ReproduceOutcome out;
    out.example = id;
    out.n = n;
    out.characteristic = field.characteristic();
    out.seed = seed;
    out.depth_bound = lim.depth_bound;
    if (id == "intro-DE") out.claims = detail::intro_claims(field, seed, lim);
    else if (id == "ex-298") out.claims = detail::chain_claims(field, n, lim);
    else if (id == "ex-928349") {
        if (field.characteristic() != 0)
            throw std::invalid_argument("ex-928349 requires characteristic 0");
        out.claims = detail::triangular_claims(field, n, seed, lim);
    } else if (id == "ex-ckj029") out.claims = detail::shift_claims(field, n, lim);
    else if (id == "ex-PpPP") out.claims = detail::triangular_shift_claims(field, n, seed, lim);
    else if (id == "ex-Zf24")
        out.claims = detail::freemod_claims(field, static_cast<std::uint32_t>(n), n + 1, seed, lim);
    else if (id == "ex-2ndPart")
        out.claims = detail::transported_claims(field, static_cast<std::uint32_t>(n), n + 1, seed,
                                                lim);
    else throw std::invalid_argument("unknown example id: " + id);
    return out;
}

}  // namespace derivlab
