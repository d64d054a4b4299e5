#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace derivlab;
using testsupport::oracle_products_vanish;
using testsupport::random_nilpotent_associative;
using Q = RationalField;

TEST_CASE("nil prime membership") {
    Q f;
    auto a = upper_triangular_algebra(f, 4);

    // H = {0}: every element is certified with degree 0
    std::vector<Vec<Q>> zero_set{Vec<Q>(a.dim(), f.zero())};
    auto c0 = nil_prime_membership(a, zero_set, a.basis_element(2));
    CHECK(c0.verdict == Verdict::Certified);
    CHECK(c0.degree.value == 0);

    // H = basis, x = e34: degree 2 (e12·(e23·e34) != 0, all longer products die)
    std::vector<Vec<Q>> basis;
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));
    auto c = nil_prime_membership(a, basis, a.basis_element(5));
    REQUIRE(c.verdict == Verdict::Certified);
    CHECK(c.degree.value == 2);

    // 2-dim nonabelian, H = {e1}, x = e2: refuted with the period-1 schedule
    auto na = two_dim_nonabelian(f);
    auto cr = nil_prime_membership(na, {na.basis_element(0)}, na.basis_element(1));
    REQUIRE(cr.verdict == Verdict::Refuted);
    REQUIRE(cr.periodic);
    CHECK(cr.periodic->period == std::vector<std::size_t>{0});
}

TEST_CASE("s values") {
    Q f;
    auto a = upper_triangular_algebra(f, 4);
    // s({}) = -inf
    CHECK(s_value(a, {}).s.kind == SValue::Kind::NegInf);
    // s(basis) = 2 for the strictly upper triangular 4x4
    std::vector<Vec<Q>> basis;
    for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));
    auto sv = s_value(a, basis);
    CHECK(sv.s.kind == SValue::Kind::Finite);
    CHECK(sv.s.value == 2);
    // abelian: every product vanishes, s = 0
    StructureAlgebra<Q> ab(f, AlgebraKind::Lie, {"a", "b"}, {});
    auto sab = s_value(ab, {ab.basis_element(0), ab.basis_element(1)});
    CHECK(sab.s.kind == SValue::Kind::Finite);
    CHECK(sab.s.value == 0);
    // the nonabelian 2-dim algebra has unbounded products: s = inf
    auto na = two_dim_nonabelian(f);
    auto sna = s_value(na, {na.basis_element(0), na.basis_element(1)});
    CHECK(sna.s.kind == SValue::Kind::Infinite);
}

TEST_CASE("classification of standard examples") {
    Q f;
    for (std::size_t d : {3, 4, 5}) {
        auto a = upper_triangular_algebra(f, d);
        auto rep = classify(a);
        CHECK(rep.all_certified());
        CHECK(rep.series.index == d);
        CHECK(rep.s.kind == SValue::Kind::Finite);
        CHECK(rep.s.value == d - 2);
        CHECK(rep.lattice_consistent());
    }

    auto na = two_dim_nonabelian(f);
    auto rep = classify(na);
    CHECK(rep.n == Verdict::Refuted);
    CHECK(rep.sn == Verdict::Refuted);
    CHECK(rep.ln == Verdict::Refuted);
    CHECK(rep.nil == Verdict::Refuted);
    CHECK(rep.lnil == Verdict::Refuted);
    CHECK(rep.phi_counterexample.has_value());
    CHECK(rep.lattice_consistent());

    // 1-dim algebra with e·e = 0
    StructureAlgebra<Q> one(f, AlgebraKind::Associative, {"e"}, {});
    auto rep1 = classify(one);
    CHECK(rep1.all_certified());
}

TEST_CASE("generator-level vanishing agrees with basis-word brute force") {
    Rng rng(61);
    for (int t = 0; t < 50; ++t) {
        auto a = random_nilpotent_associative(rng, 2 + rng.below(3), 1 + rng.below(2));
        if (a.dim() > 5) continue;
        std::vector<Vec<Q>> basis;
        for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));
        auto sv = s_value(a, basis);
        REQUIRE(sv.s.kind == SValue::Kind::Finite);
        // all right-nested words of length s+2 vanish, some of length s+1 does not
        REQUIRE(oracle_products_vanish(a, basis, sv.s.value + 2));
        REQUIRE(!oracle_products_vanish(a, basis, sv.s.value + 1));
    }
}

TEST_CASE("s is invariant under passing to the generated subalgebra") {
    Rng rng(67);
    for (int t = 0; t < 25; ++t) {
        // build a closure algebra from generators; the generators' image
        // inside it generates the whole algebra
        std::vector<LinearOperator<Q>> gens;
        std::size_t md = 3 + rng.below(2);
        for (std::size_t g = 0; g < 2; ++g) {
            LinearOperator<Q> m(Q{}, md);
            for (std::size_t i = 0; i < md; ++i)
                for (std::size_t j = i + 1; j < md; ++j) m.at(i, j) = Q{}.from_long(rng.range(-1, 1));
            if (!m.is_zero()) gens.push_back(std::move(m));
        }
        if (gens.empty()) continue;
        auto closure = associative_span_closure(gens, 32);
        REQUIRE(closure.complete);
        if (closure.basis.empty()) continue;
        auto a = structure_from_operator_basis(closure.basis, AlgebraKind::Associative);

        std::vector<Vec<Q>> flat;
        for (const auto& b : closure.basis) flat.push_back(b.entries());
        std::vector<Vec<Q>> h;
        for (const auto& g : gens) {
            auto coords = coords_in_span(Q{}, flat, g.entries());
            REQUIRE(coords);
            h.push_back(*coords);
        }
        std::vector<Vec<Q>> basis;
        for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));

        auto sh = s_value(a, h);
        auto sa = s_value(a, basis);
        REQUIRE(sh.s.kind == SValue::Kind::Finite);
        REQUIRE(sa.s.kind == SValue::Kind::Finite);
        REQUIRE(sh.s.value == sa.s.value);
    }
}

TEST_CASE("deg' is subadditive on Lie algebras") {
    Q f;
    auto al = upper_triangular_algebra(f, 4).antisymmetrized();
    std::vector<Vec<Q>> basis;
    for (std::size_t i = 0; i < al.dim(); ++i) basis.push_back(al.basis_element(i));
    std::vector<LinearOperator<Q>> actors;
    for (const auto& h : basis) actors.push_back(al.left_multiplication(h));
    OperatorAction<Q> act{f};
    Rng rng(71);
    for (int t = 0; t < 40; ++t) {
        Vec<Q> x(al.dim(), f.zero()), y(al.dim(), f.zero());
        for (auto& c : x) c = f.from_long(rng.range(-1, 1));
        for (auto& c : y) c = f.from_long(rng.range(-1, 1));
        auto cx = compute_degree(act, actors, x);
        auto cy = compute_degree(act, actors, y);
        auto cp = compute_degree(act, actors, al.multiply(x, y));
        REQUIRE(cx.verdict == Verdict::Certified);
        REQUIRE(cy.verdict == Verdict::Certified);
        REQUIRE(cp.verdict == Verdict::Certified);
        if (cp.degree.is_finite()) {
            REQUIRE(cx.degree.is_finite());
            REQUIRE(cy.degree.is_finite());
            REQUIRE(cp.degree.value <= cx.degree.value + cy.degree.value);
        }
    }
}

TEST_CASE("A versus A_L transfers") {
    Q f;
    // commutative associative algebra: A_L is abelian, everything certifies
    StructureAlgebra<Q> comm(f, AlgebraKind::Associative, {"t", "t2"},
                             {{0, 0, 1, f.one()}});  // t·t = t2, everything else 0
    auto rep = check_A_vs_AL(comm);
    CHECK(rep.transfers_ok);
    CHECK(rep.lie.all_certified());

    auto ut = upper_triangular_algebra(f, 4);
    auto rep2 = check_A_vs_AL(ut);
    CHECK(rep2.transfers_ok);
    CHECK(rep2.assoc.n == Verdict::Certified);
    CHECK(rep2.lie.n == Verdict::Certified);

    // the triangular shift truncation: composition schedules die while the
    // bracket chain survives the whole truncation
    auto fam = make_triangular_shift_family(f, 5);
    auto alg = triangular_shift_algebra(f, fam);
    std::vector<Vec<Q>> s_chain;
    for (std::size_t i = 0; i <= 5; ++i) {
        Vec<Q> v(alg.dim(), f.zero());
        v[fam.find(i, i)] = f.one();
        s_chain.push_back(std::move(v));
    }
    auto rep3 = check_A_vs_AL(alg, {s_chain});
    CHECK(rep3.transfers_ok);
    REQUIRE(rep3.probe_replays.size() == 1);
    CHECK(rep3.probe_replays[0].first.died_at.has_value());
    CHECK(rep3.probe_replays[0].second.survived());
    CHECK_THROWS_AS(check_A_vs_AL(alg.antisymmetrized()), invalid_algebra_error);
}

TEST_CASE("classify rejects invalid input") {
    Q f;
    std::vector<TableEntry<Q>> bad = {{0, 0, 1, f.one()}, {1, 0, 0, f.one()}};
    CHECK_THROWS_AS(StructureAlgebra<Q>(f, AlgebraKind::Associative, {"a", "b"}, bad),
                    invalid_algebra_error);
}
