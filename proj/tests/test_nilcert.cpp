#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace derivlab;
using testsupport::oracle_all_words_vanish;
using testsupport::oracle_degree;
using testsupport::random_poly;
using testsupport::random_triangular_derivation;
using Q = RationalField;

namespace {
DerivationAction<Q> act;
}

TEST_CASE("degree certificates") {
    auto r = make_ring(Q{}, std::vector<std::string>{"x"});
    auto ddx = Derivation<Q>::partial(r, 0);
    std::vector<Derivation<Q>> actors{ddx};

    auto c = compute_degree(act, actors, parse_polynomial("x^2", r));
    REQUIRE(c.verdict == Verdict::Certified);
    CHECK(c.degree.value == 2);
    CHECK(c.witness.size() == 2);

    auto c0 = compute_degree(act, actors, Polynomial<Q>::zero(r));
    CHECK(c0.verdict == Verdict::Certified);
    CHECK(c0.degree.is_neg_inf());

    // empty set: degree 0 for nonzero elements
    auto ce = compute_degree(act, std::vector<Derivation<Q>>{}, parse_polynomial("x", r));
    CHECK(ce.verdict == Verdict::Certified);
    CHECK(ce.degree.value == 0);
}

TEST_CASE("certified degrees replay against the oracle") {
    auto r = make_ring(Q{}, {"x", "y", "z"});
    Rng rng(31);
    std::size_t checked = 0;
    for (int t = 0; t < 40; ++t) {
        std::vector<Derivation<Q>> actors;
        std::size_t k = 1 + rng.below(3);
        for (std::size_t i = 0; i < k; ++i) actors.push_back(random_triangular_derivation(r, rng));
        auto x = random_poly(r, rng, 2, 2);
        auto cert = compute_degree(act, actors, x);
        auto oracle = oracle_degree(actors, x, 24);
        if (cert.verdict == Verdict::Certified && !x.is_zero() && oracle) {
            ++checked;
            REQUIRE(cert.degree.is_finite());
            REQUIRE(cert.degree.value == *oracle);
            // the stored witness word replays to a nonzero value
            if (!cert.witness.empty()) {
                std::vector<Derivation<Q>> word;
                for (auto i : cert.witness) word.push_back(actors[i]);
                REQUIRE(!apply_word(word, x).result().is_zero());
            }
            // every word one longer annihilates
            REQUIRE(oracle_all_words_vanish(actors, x, cert.degree.value + 1));
        }
    }
    REQUIRE(checked >= 20);
}

TEST_CASE("refutation by discovered cycles") {
    auto r = make_ring(Q{}, std::vector<std::string>{"x"});
    auto euler = Derivation<Q>(r, {{0, parse_polynomial("x", r)}});
    auto c = nil_membership(act, std::vector<Derivation<Q>>{euler},
                            Polynomial<Q>::variable(r, 0));
    REQUIRE(c.verdict == Verdict::Refuted);
    REQUIRE(c.periodic);
    CHECK(c.periodic->preperiod.empty());
    CHECK(c.periodic->period == std::vector<std::size_t>{0});
}

TEST_CASE("intro example: refuted with the (E,D) schedule and a 2-cycle") {
    auto in = make_intro_pair(Q{});
    std::vector<Derivation<Q>> actors{in.d, in.e};
    auto x = Polynomial<Q>::variable(in.ring, 0);

    auto c = nil_membership(act, actors, x);
    REQUIRE(c.verdict == Verdict::Refuted);
    REQUIRE(c.periodic);
    CHECK(c.periodic->preperiod.empty());
    CHECK(c.periodic->period == std::vector<std::size_t>{1, 0});

    // replay: the trace cycles through two nonzero values x -> y -> x
    auto y = in.e(x);
    CHECK(!y.is_zero());
    CHECK(in.d(y) == x);

    // a caller-supplied schedule is honored too
    Schedule sched{{}, {1, 0}};
    auto c2 = nil_membership(act, actors, x, {}, sched);
    REQUIRE(c2.verdict == Verdict::Refuted);
    CHECK(c2.periodic->period == sched.period);

    // a schedule that dies does not refute
    Schedule dead{{}, {0}};  // D alone kills x immediately
    auto c3 = replay_schedule(act, actors, x, dead);
    CHECK(!c3.has_value());
}

TEST_CASE("set-level verdicts") {
    // chain family: certified
    auto fam = make_chain_family(Q{}, 4);
    std::vector<VarIndex> gens;
    for (VarIndex v = 0; v < fam.ring->var_count(); ++v) gens.push_back(v);
    auto sc = set_locally_nilpotent(fam.gens, gens, fam.ring);
    CHECK(sc.overall.verdict == Verdict::Certified);
    CHECK(sc.per_generator.size() == fam.ring->var_count());
    // x_0 admits the longest surviving word: length n+1 = 5
    CHECK(sc.per_generator[0].second.degree.value == 5);

    // {x d/dx}: refuted on the generator x with a period-1 schedule
    auto r = make_ring(Q{}, std::vector<std::string>{"x"});
    auto euler = Derivation<Q>(r, {{0, parse_polynomial("x", r)}});
    auto sc2 = set_locally_nilpotent<Q>({euler}, {0}, r);
    REQUIRE(sc2.overall.verdict == Verdict::Refuted);
    REQUIRE(sc2.overall.periodic);
    CHECK(sc2.overall.periodic->period.size() == 1);

    // the empty set is certified
    auto sc3 = set_locally_nilpotent<Q>({}, {0}, r);
    CHECK(sc3.overall.verdict == Verdict::Certified);
}

TEST_CASE("word vanishing depth") {
    auto fam = make_chain_family(Q{}, 4);
    std::vector<Polynomial<Q>> probes;
    for (VarIndex v = 0; v < fam.ring->var_count(); ++v)
        probes.push_back(Polynomial<Q>::variable(fam.ring, v));

    auto at5 = word_vanishing_depth(act, fam.gens, 5, probes);
    REQUIRE(!at5.vanishes);
    CHECK(at5.witness.size() == 5);
    // the witness replays: the word survives on the reported probe
    std::vector<Derivation<Q>> word;
    for (auto i : at5.witness) word.push_back(fam.gens[i]);
    CHECK(!apply_word(word, probes[at5.probe]).result().is_zero());

    auto at6 = word_vanishing_depth(act, fam.gens, 6, probes);
    CHECK(at6.vanishes);

    // {0} vanishes at length 1
    auto r = make_ring(Q{}, std::vector<std::string>{"x"});
    auto z = Derivation<Q>::zero(r);
    CHECK(word_vanishing_depth(act, std::vector<Derivation<Q>>{z}, 1,
                               {Polynomial<Q>::variable(r, 0)})
              .vanishes);
}

TEST_CASE("word vanishing is monotone and matches the oracle") {
    auto r = make_ring(Q{}, {"x", "y", "z"});
    Rng rng(37);
    for (int t = 0; t < 25; ++t) {
        std::vector<Derivation<Q>> actors;
        std::size_t k = 1 + rng.below(2);
        for (std::size_t i = 0; i < k; ++i) actors.push_back(random_triangular_derivation(r, rng));
        std::vector<Polynomial<Q>> probes;
        for (VarIndex v = 0; v < 3; ++v) probes.push_back(Polynomial<Q>::variable(r, v));
        bool prev = false;
        for (std::size_t n = 1; n <= 6; ++n) {
            bool now = word_vanishing_depth(act, actors, n, probes).vanishes;
            bool oracle = true;
            for (const auto& p : probes) oracle = oracle && oracle_all_words_vanish(actors, p, n);
            REQUIRE(now == oracle);
            if (prev) REQUIRE(now);  // monotone in n
            prev = now;
        }
    }
}

TEST_CASE("lie membership: commuting pair certifies at length 2") {
    auto r = make_ring(Q{}, {"x", "y"});
    auto d0 = Derivation<Q>::partial(r, 0);
    auto d1 = Derivation<Q>::partial(r, 1);
    auto lc = lie_unil_membership(DerivationLieAction<Q>{}, std::vector<Derivation<Q>>{d0, d1},
                                  Polynomial<Q>::variable(r, 0));
    REQUIRE(lc.cert.verdict == Verdict::Certified);
    CHECK(lc.cutoff == std::optional<std::size_t>(2));
}

TEST_CASE("lie membership: shift family stays inconclusive with a surviving pattern") {
    Q f;
    auto ops = make_shift_family(f, 8);
    Vec<Q> e0(9, f.zero());
    e0[0] = f.one();
    SearchLimits lim;
    lim.depth_bound = 7;
    auto lc = lie_unil_membership(OperatorLieAction<Q>{f}, ops, e0, lim);
    REQUIRE(lc.cert.verdict == Verdict::Inconclusive);
    REQUIRE(lc.pattern.size() == 7);
    for (const auto& ev : lc.pattern) REQUIRE(ev.nonzero_at_x);
    // but the truncation forces an operator-level cutoff at length 8
    SearchLimits lim2;
    lim2.depth_bound = 16;
    auto lc2 = lie_unil_membership(OperatorLieAction<Q>{f}, ops, e0, lim2);
    REQUIRE(lc2.cert.verdict == Verdict::Certified);
    CHECK(lc2.cutoff == std::optional<std::size_t>(8));
}

TEST_CASE("lie membership: triangular shift truncation certifies by dimension cutoff") {
    Q f;
    auto fam = make_triangular_shift_family(f, 3);
    Vec<Q> e2(fam.dim, f.zero());
    e2[2] = f.one();
    auto lc = lie_unil_membership(OperatorLieAction<Q>{f}, fam.ops, e2);
    REQUIRE(lc.cert.verdict == Verdict::Certified);
    REQUIRE(lc.cutoff.has_value());
    CHECK(*lc.cutoff <= fam.dim + 1);
}

TEST_CASE("UNil is contained in UNil^L: pointwise brackets vanish past the degree") {
    auto fam = make_chain_family(Q{}, 2);  // D_0..D_2 on x_0..x_4
    std::vector<Derivation<Q>> actors{fam.gens[0], fam.gens[1]};
    auto x = Polynomial<Q>::variable(fam.ring, 0);
    auto c = compute_degree(act, actors, x);
    REQUIRE(c.verdict == Verdict::Certified);
    auto lc = lie_unil_membership(DerivationLieAction<Q>{}, actors, x);
    for (const auto& ev : lc.pattern)
        if (ev.length > c.degree.value) REQUIRE(!ev.nonzero_at_x);
}

TEST_CASE("certified elements form a subalgebra") {
    auto fam = make_chain_family(Q{}, 3);
    Rng rng(41);
    Q f;
    SearchLimits lim;
    lim.depth_bound = 24;  // products of the samples can reach degree 16
    for (int t = 0; t < 30; ++t) {
        auto x = random_poly(fam.ring, rng, 2, 2);
        auto y = random_poly(fam.ring, rng, 2, 2);
        auto cx = compute_degree(act, fam.gens, x, lim);
        auto cy = compute_degree(act, fam.gens, y, lim);
        REQUIRE(cx.verdict == Verdict::Certified);
        REQUIRE(cy.verdict == Verdict::Certified);
        std::size_t dx = cx.degree.is_finite() ? cx.degree.value : 0;
        std::size_t dy = cy.degree.is_finite() ? cy.degree.value : 0;

        auto cp = compute_degree(act, fam.gens, x * y, lim);
        REQUIRE(cp.verdict == Verdict::Certified);
        if (cp.degree.is_finite()) REQUIRE(cp.degree.value <= dx + dy);

        auto cs = compute_degree(act, fam.gens, x + y.scaled(f.from_long(3)), lim);
        REQUIRE(cs.verdict == Verdict::Certified);
        if (cs.degree.is_finite()) REQUIRE(cs.degree.value <= std::max(dx, dy));
    }
}

TEST_CASE("degree is invariant under bracket enrichment") {
    auto fam = make_chain_family(Q{}, 3);
    std::vector<Derivation<Q>> base{fam.gens[0], fam.gens[1]};
    std::vector<Derivation<Q>> enrich{lie_bracket(fam.gens[0], fam.gens[1])};
    std::vector<Polynomial<Q>> samples;
    auto var = [&](VarIndex v) { return Polynomial<Q>::variable(fam.ring, v); };
    samples.push_back(var(0));
    samples.push_back(var(1));
    samples.push_back(var(0) * var(1));
    Rng rng(43);
    for (int t = 0; t < 10; ++t) samples.push_back(random_poly(fam.ring, rng, 2, 2));

    auto rep = check_generated_set_invariance(base, enrich, samples);
    CHECK(rep.violations.empty());
    CHECK(rep.both_certified == samples.size());

    auto rep2 = check_generated_set_invariance(base, {}, samples);
    CHECK(rep2.violations.empty());

    // the triangular family with a bracket enrichment, sampled on monomials
    auto tri = make_triangular_ring(Q{}, 3);
    auto e = Derivation<Q>::partial(tri.ring, 0);
    auto d2 = tri.d_f(parse_polynomial("X1^2", tri.ring), 1);
    auto d3 = tri.d_f(parse_polynomial("X1*X2", tri.ring), 2);
    std::vector<Derivation<Q>> tbase{e, d2, d3};
    std::vector<Derivation<Q>> tenrich{lie_bracket(e, d2)};
    std::vector<Polynomial<Q>> tsamples;
    for (const char* s : {"X1", "X2", "X3", "X1*X2", "X2^2", "X1*X3"})
        tsamples.push_back(parse_polynomial(s, tri.ring));
    auto rep3 = check_generated_set_invariance(tbase, tenrich, tsamples);
    CHECK(rep3.violations.empty());
    CHECK(rep3.both_certified == tsamples.size());
}

TEST_CASE("degree laws") {
    auto r = make_ring(Q{}, std::vector<std::string>{"x"});
    auto ddx = Derivation<Q>::partial(r, 0);
    std::vector<Derivation<Q>> actors{ddx};

    // frozen: deg(x^2 · x^3) = 5 ≤ 2 + 3
    auto c = compute_degree(act, actors, parse_polynomial("x^2", r) * parse_polynomial("x^3", r));
    REQUIRE(c.verdict == Verdict::Certified);
    CHECK(c.degree.value == 5);

    // cancellation: x^2 + (-x^2) has degree -inf, bounded by the max law
    auto cz = compute_degree(act, actors,
                             parse_polynomial("x^2", r) + parse_polynomial("-1*x^2", r));
    CHECK(cz.degree.is_neg_inf());

    std::vector<Polynomial<Q>> samples;
    for (int e = 0; e <= 4; ++e)
        samples.push_back(parse_polynomial(e == 0 ? "1" : "x^" + std::to_string(e), r));
    samples.push_back(parse_polynomial("x^2 + x", r));
    auto rep = check_degree_laws(actors, samples);
    CHECK(rep.violations.empty());
    CHECK(rep.decrease_checked > 0);
    CHECK(rep.product_checked > 0);

    auto fam = make_chain_family(Q{}, 3);
    Rng rng(47);
    std::vector<Polynomial<Q>> samples2;
    for (int t = 0; t < 6; ++t) samples2.push_back(random_poly(fam.ring, rng, 2, 1));
    SearchLimits wide;
    wide.depth_bound = 24;
    auto rep2 = check_degree_laws(fam.gens, samples2, wide);
    CHECK(rep2.violations.empty());
    CHECK(rep2.sum_checked + rep2.product_checked >= 50);
}

TEST_CASE("memoization does not change verdicts") {
    // the engine's value-graph memoization must agree with the plain tree
    // search on whole small families
    auto r = make_ring(Q{}, {"x", "y", "z"});
    Rng rng(53);
    for (int t = 0; t < 30; ++t) {
        std::vector<Derivation<Q>> actors;
        for (std::size_t i = 0; i < 2; ++i) actors.push_back(random_triangular_derivation(r, rng));
        auto x = random_poly(r, rng, 2, 2);
        if (x.is_zero()) continue;
        auto cert = compute_degree(act, actors, x);
        auto oracle = oracle_degree(actors, x, 20);
        if (oracle) {
            REQUIRE(cert.verdict == Verdict::Certified);
            REQUIRE(cert.degree.value == *oracle);
        }
    }
}
