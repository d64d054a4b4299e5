// Acceptance suite: replays the library's contract end to end and prints
// one PASS/FAIL line per criterion. Exits nonzero if any criterion fails.
//
//  1  intro pair identities, seeded cube checks, periodic refutation
//  2  chain family: word vanishing threshold, word identity, set verdict
//  3  triangular family: factorial identities, bracket law, SN evidence
//  4  shift family: composition/bracket/pointwise identities
//  5  triangular shift family: relations, chains, degrees, classification
//  6  free-algebra module: admissibility, annihilation, injectivity
//  7  generalized Leibniz identity on seeded random words
//  8  degree laws and generated-set invariance
//  9  classification suite and generator-level reduction
// 10  derivation-finite suite: ad indices and fg nilpotency
// 11  determinism: every report above is byte-identical on rerun

#include "test_support.hpp"

#include <functional>
#include <iostream>

using namespace derivlab;
using testsupport::oracle_products_vanish;
using testsupport::random_nilpotent_associative;
using testsupport::random_poly;
using testsupport::random_triangular_derivation;
using Q = RationalField;

namespace {

struct Criterion {
    bool pass = true;
    Json report;

    void check(const std::string& what, bool ok) {
        report["checks"].push_back(Json{{"check", what}, {"ok", ok}});
        pass = pass && ok;
    }
};

Json claims_report(const ReproduceOutcome& out, Criterion& c) {
    for (const auto& claim : out.claims) c.check(claim.name, claim.passed);
    return reproduce_outcome_to_json(out);
}

Criterion criterion1() {
    Criterion c;
    c.report["criterion"] = 1;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "intro-DE", 0, 1), c);

    // the refutation certificate replays a length-2 value cycle
    auto in = make_intro_pair(Q{});
    DerivationAction<Q> act;
    auto cert = nil_membership(act, std::vector<Derivation<Q>>{in.d, in.e},
                               Polynomial<Q>::variable(in.ring, 0));
    bool cycle2 = false;
    if (cert.verdict == Verdict::Refuted && cert.periodic) {
        auto x = Polynomial<Q>::variable(in.ring, 0);
        auto y = in.e(x);
        cycle2 = !y.is_zero() && in.d(y) == x && cert.periodic->period.size() == 2;
    }
    c.check("refutation carries a length-2 value cycle", cycle2);
    c.report["certificate"] = certificate_to_json(cert);
    return c;
}

Criterion criterion2() {
    Criterion c;
    c.report["criterion"] = 2;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "ex-298", 4, 1), c);

    // (D_10 ∘ ... ∘ D_2)(x_2) = x_11 on the 11-variable truncation x_2..x_12
    std::vector<std::string> names;
    for (int i = 2; i <= 12; ++i) names.push_back("x" + std::to_string(i));
    auto ring = make_ring(Q{}, names);
    std::vector<Derivation<Q>> word;
    for (std::size_t k = 2; k <= 10; ++k) word.push_back(make_chain_derivation(ring, k, 2));
    auto wa = apply_word(word, Polynomial<Q>::variable(ring, 0));
    bool ok = wa.result() == Polynomial<Q>::variable(ring, 9);
    c.check("(D_10 ∘ ... ∘ D_2)(x_2) = x_11 on 11 variables", ok);
    c.report["word_result"] = to_string(wa.result());
    return c;
}

Criterion criterion3() {
    Criterion c;
    c.report["criterion"] = 3;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "ex-928349", 4, 1), c);
    return c;
}

Criterion criterion4() {
    Criterion c;
    c.report["criterion"] = 4;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "ex-ckj029", 8, 1), c);
    return c;
}

Criterion criterion5() {
    Criterion c;
    c.report["criterion"] = 5;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "ex-PpPP", 6, 1), c);
    return c;
}

Criterion criterion6() {
    Criterion c;
    c.report["criterion"] = 6;
    c.report["claims"] = claims_report(reproduce_example(Q{}, "ex-Zf24", 4, 1), c);
    return c;
}

Criterion criterion7() {
    Criterion c;
    c.report["criterion"] = 7;
    auto ring = make_ring(Q{}, {"x", "y", "z"});
    Rng rng(2024);
    bool all = true;
    for (int t = 0; t < 500 && all; ++t) {
        std::size_t n = rng.below(5);  // up to five derivations in the word
        std::vector<Derivation<Q>> ds;
        for (std::size_t i = 0; i <= n; ++i) ds.push_back(random_triangular_derivation(ring, rng));
        auto x = random_poly(ring, rng, 3, 3);
        auto y = random_poly(ring, rng, 3, 3);
        auto lhs = apply_word(ds, x * y).result();
        Polynomial<Q> rhs = Polynomial<Q>::zero(ring);
        for (std::size_t mask = 0; mask < (1u << (n + 1)); ++mask) {
            Polynomial<Q> dx = x, dy = y;
            for (std::size_t i = 0; i <= n; ++i) {
                if (mask & (1u << i)) dx = ds[i](dx);
                else dy = ds[i](dy);
            }
            rhs = rhs + dx * dy;
        }
        all = lhs == rhs;
    }
    c.check("500 seeded generalized Leibniz instances agree exactly", all);
    c.report["instances"] = 500;
    return c;
}

Criterion criterion8() {
    Criterion c;
    c.report["criterion"] = 8;
    DerivationAction<Q> act;
    SearchLimits lim;
    lim.depth_bound = 40;

    // setting A: powers of x under d/dx; setting B: the chain family at n=3
    auto r1 = make_ring(Q{}, std::vector<std::string>{"x"});
    std::vector<Derivation<Q>> d1{Derivation<Q>::partial(r1, 0)};
    auto fam = make_chain_family(Q{}, 3);

    Rng rng(2025);
    std::size_t pairs = 0, decreases = 0;
    bool laws_ok = true;
    auto deg_of = [&](const std::vector<Derivation<Q>>& actors,
                      const Polynomial<Q>& p) -> std::optional<DegreeValue> {
        auto cert = compute_degree(act, actors, p, lim);
        if (cert.verdict != Verdict::Certified) return std::nullopt;
        return cert.degree;
    };
    auto check_pair = [&](const std::vector<Derivation<Q>>& actors, const Polynomial<Q>& x,
                          const Polynomial<Q>& y) {
        auto dx = deg_of(actors, x), dy = deg_of(actors, y);
        if (!dx || !dy) return;
        ++pairs;
        // strict decrease on both elements
        for (const auto& f : actors) {
            for (const auto* p : {&x, &y}) {
                auto dp = *p == x ? dx : dy;
                if (dp->is_neg_inf()) continue;
                auto dfp = deg_of(actors, f(*p));
                ++decreases;
                if (!dfp || !(*dfp <= *dp) ||
                    (dfp->is_finite() && dp->is_finite() && dfp->value >= dp->value))
                    laws_ok = false;
            }
        }
        auto ds = deg_of(actors, x + y);
        DegreeValue mx = *dx <= *dy ? *dy : *dx;
        if (!ds || !(*ds <= mx)) laws_ok = false;
        auto dprod = deg_of(actors, x * y);
        if (!dprod) laws_ok = false;
        else if (dprod->is_finite()) {
            if (!dx->is_finite() || !dy->is_finite()) laws_ok = false;
            else if (dprod->value > dx->value + dy->value) laws_ok = false;
        }
    };
    while (pairs < 100) {  // powers of x and small univariate samples
        auto x = random_poly(r1, rng, 2, 4);
        auto y = random_poly(r1, rng, 2, 4);
        check_pair(d1, x, y);
    }
    while (pairs < 200) {
        auto x = random_poly(fam.ring, rng, 2, 2);
        auto y = random_poly(fam.ring, rng, 2, 2);
        check_pair(fam.gens, x, y);
    }
    c.check("degree laws hold on 200 seeded certified pairs", laws_ok);
    c.report["pairs"] = pairs;
    c.report["decrease_checks"] = decreases;

    // invariance under bracket enrichment on 50 samples
    std::vector<Derivation<Q>> base{fam.gens[0], fam.gens[1], fam.gens[2]};
    std::vector<Derivation<Q>> enrich{lie_bracket(fam.gens[0], fam.gens[1]),
                                      lie_bracket(fam.gens[1], fam.gens[2])};
    std::vector<Polynomial<Q>> samples;
    for (int t = 0; t < 50; ++t) samples.push_back(random_poly(fam.ring, rng, 2, 2));
    auto rep = check_generated_set_invariance(base, enrich, samples, lim);
    c.check("zero invariance violations on 50 enriched samples",
            rep.violations.empty() && rep.both_certified == 50);
    c.report["invariance"] = {{"checked", rep.checked},
                              {"both_certified", rep.both_certified},
                              {"violations", rep.violations.size()}};
    return c;
}

Criterion criterion9() {
    Criterion c;
    c.report["criterion"] = 9;
    Q f;
    for (std::size_t d : {3, 4, 5}) {
        auto a = upper_triangular_algebra(f, d);
        auto rep = classify(a);
        c.check("strictly upper triangular " + std::to_string(d) + "x" + std::to_string(d) +
                    " certifies all five conditions",
                rep.all_certified());
        c.check("s = d-2 for d = " + std::to_string(d),
                rep.s.kind == SValue::Kind::Finite && rep.s.value == d - 2);
        c.report["upper_triangular"].push_back(nilpotency_report_to_json(rep));
    }
    auto na = classify(two_dim_nonabelian(f));
    bool all_refuted = na.n == Verdict::Refuted && na.sn == Verdict::Refuted &&
                       na.ln == Verdict::Refuted && na.nil == Verdict::Refuted &&
                       na.lnil == Verdict::Refuted;
    c.check("the 2-dim nonabelian Lie algebra refutes all five conditions", all_refuted);
    c.report["nonabelian"] = nilpotency_report_to_json(na);

    // generator-level vanishing (via s on the basis) agrees with basis-word
    // brute force on 50 random algebras of dimension <= 4
    Rng rng(2026);
    std::size_t agreed = 0, tested = 0;
    while (tested < 50) {
        auto a = random_nilpotent_associative(rng, 2 + rng.below(3), 1 + rng.below(2));
        if (a.dim() > 4) continue;
        ++tested;
        std::vector<Vec<Q>> basis;
        for (std::size_t i = 0; i < a.dim(); ++i) basis.push_back(a.basis_element(i));
        auto sv = s_value(a, basis);
        bool ok = sv.s.kind == SValue::Kind::Finite &&
                  oracle_products_vanish(a, basis, sv.s.value + 2) &&
                  !oracle_products_vanish(a, basis, sv.s.value + 1);
        if (ok) ++agreed;
    }
    c.check("generator-level vanishing matches brute force on 50 random algebras",
            agreed == 50);
    c.report["random_algebras"] = {{"tested", tested}, {"agreed", agreed}};
    return c;
}

Criterion criterion10() {
    Criterion c;
    c.report["criterion"] = 10;
    auto tri = make_triangular_ring(Q{}, 2);
    auto d = Derivation<Q>::partial(tri.ring, 0);
    std::vector<Polynomial<Q>> xs{Polynomial<Q>::variable(tri.ring, 0),
                                  Polynomial<Q>::variable(tri.ring, 1)};
    bool idx_ok = true;
    for (std::size_t m = 1; m <= 5; ++m) {
        auto e = tri.d_f(Polynomial<Q>::term(tri.ring,
                                             Monomial::variable(0, static_cast<std::uint32_t>(m)),
                                             Q{}.one()),
                         1);
        auto res = ad_nilpotence_index(d, e, xs);
        bool ok = res.cert.verdict == Verdict::Certified && res.cert.degree.value == m + 1 &&
                  res.cert.degree.value <= res.envelope;
        idx_ok = idx_ok && ok;
        c.report["ad_indices"].push_back(ad_result_to_json(res));
    }
    c.check("ad index of the power family is m+1 within the envelope", idx_ok);

    auto r = make_ring(Q{}, {"x", "y"});
    auto dx = Derivation<Q>::partial(r, 0);
    auto xdy = Derivation<Q>(r, {{1, parse_polynomial("x", r)}});
    auto xdx = Derivation<Q>(r, {{0, parse_polynomial("x", r)}});

    auto heis = fg_lie_nilpotency(DerivationLieAlgebra<Q>::over_variables({dx, xdy}));
    c.check("the Heisenberg pair certifies fg nilpotency", heis.verdict == Verdict::Certified);
    c.report["heisenberg"] = fg_result_to_json(heis);

    auto aff = fg_lie_nilpotency(DerivationLieAlgebra<Q>::over_variables({dx, xdx}));
    c.check("the affine pair refutes fg nilpotency", aff.verdict == Verdict::Refuted);
    c.report["affine"] = fg_result_to_json(aff);

    auto sc_heis = set_locally_nilpotent<Q>({dx, xdy}, {0, 1}, r);
    auto sc_aff = set_locally_nilpotent<Q>({dx, xdx}, {0, 1}, r);
    bool cross = sc_heis.overall.verdict == Verdict::Certified &&
                 sc_aff.overall.verdict == Verdict::Refuted;
    c.check("set verdicts are consistent with the fg verdicts", cross);
    c.report["set_cross"] = {{"heisenberg", verdict_name(sc_heis.overall.verdict)},
                             {"affine", verdict_name(sc_aff.overall.verdict)}};
    return c;
}

}  // namespace

int main() {
    using Builder = std::function<Criterion()>;
    std::vector<std::pair<std::string, Builder>> criteria = {
        {"intro example identities and periodic refutation", criterion1},
        {"chain family truncation", criterion2},
        {"triangular derivation family", criterion3},
        {"shift family truncation", criterion4},
        {"triangular shift family truncation", criterion5},
        {"free-algebra module truncation", criterion6},
        {"generalized Leibniz identity", criterion7},
        {"degree laws and invariance", criterion8},
        {"classification suite", criterion9},
        {"derivation-finite suite", criterion10},
    };

    bool all = true;
    std::vector<std::string> first_runs;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.pass = false;
            c.report["error"] = e.what();
        }
        first_runs.push_back(c.report.dump(2));
        std::cout << "criterion " << (i + 1) << ": " << (c.pass ? "PASS" : "FAIL") << " - "
                  << criteria[i].first << "\n";
        if (!c.pass) {
            std::cout << c.report.dump(2) << "\n";
            all = false;
        }
    }

    // criterion 11: rerun everything; reports must be byte-identical
    bool identical = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        try {
            c = criteria[i].second();
        } catch (const std::exception& e) {
            c.pass = false;
            c.report["error"] = e.what();
        }
        if (c.report.dump(2) != first_runs[i]) {
            identical = false;
            std::cout << "criterion 11: report " << (i + 1) << " differs between runs\n";
        }
    }
    std::cout << "criterion 11: " << (identical ? "PASS" : "FAIL")
              << " - byte-identical reports on rerun\n";
    all = all && identical;

    return all ? 0 : 1;
}
