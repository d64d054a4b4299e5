#pragma once

#include <optional>
#include <string>

#include "derivlab/json_io.hpp"

namespace derivlab {

/// Outcome of one CLI task: the report document plus the process exit code.
/// Exit codes: 0 certified / all claims pass, 1 refuted / claim failure,
/// 2 inconclusive at the bound, 3 input error (raised as input_error before
/// an outcome exists).
struct TaskOutcome {
    Json report;
    int exit_code = 0;
};

inline int exit_code_for(Verdict v) {
    switch (v) {
        case Verdict::Certified: return 0;
        case Verdict::Refuted: return 1;
        default: return 2;
    }
}

namespace detail {

inline const Json& require(const Json& obj, const std::string& key, const std::string& ctx) {
    if (!obj.is_object() || !obj.contains(key)) throw input_error(ctx + "." + key, "missing");
    return obj[key];
}

inline std::size_t get_size(const Json& obj, const std::string& key, std::size_t fallback,
                            const std::string& ctx) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer() || obj[key].template get<long long>() <= 0)
        throw input_error(ctx + "." + key, "expected a positive integer");
    return obj[key].template get<std::size_t>();
}

inline std::uint64_t get_seed(const Json& obj, const std::string& key, std::uint64_t fallback) {
    if (!obj.contains(key)) return fallback;
    if (!obj[key].is_number_integer() || obj[key].template get<long long>() < 0)
        throw input_error("task." + key, "expected a nonnegative integer");
    return obj[key].template get<std::uint64_t>();
}

/// Resolves task.set against the named derivations; every name must exist.
template <class F>
std::vector<Derivation<F>> resolve_derivation_set(
    const Json& names, const std::map<std::string, Derivation<F>>& derivs) {
    if (!names.is_array() || names.empty())
        throw input_error("task.set", "expected a nonempty array of derivation names");
    std::vector<Derivation<F>> out;
    for (const auto& n : names) {
        auto it = derivs.find(n.template get<std::string>());
        if (it == derivs.end())
            throw input_error("task.set",
                              "unknown derivation '" + n.template get<std::string>() + "'");
        out.push_back(it->second);
    }
    return out;
}

inline std::optional<Schedule> schedule_from_json(const Json& task, const Json& set_names) {
    if (!task.contains("schedule")) return std::nullopt;
    const Json& s = task["schedule"];
    if (!s.is_object() || !s.contains("period"))
        throw input_error("task.schedule", "expected {\"preperiod\": [...], \"period\": [...]}");
    auto index_of = [&](const Json& name, const char* where) -> std::size_t {
        for (std::size_t i = 0; i < set_names.size(); ++i)
            if (set_names[i] == name) return i;
        throw input_error(std::string("task.schedule.") + where,
                          "name '" + name.template get<std::string>() + "' is not in task.set");
    };
    Schedule sched;
    if (s.contains("preperiod"))
        for (const auto& n : s["preperiod"]) sched.preperiod.push_back(index_of(n, "preperiod"));
    for (const auto& n : s["period"]) sched.period.push_back(index_of(n, "period"));
    if (sched.period.empty()) throw input_error("task.schedule.period", "must be nonempty");
    return sched;
}

template <class F>
TaskOutcome run_spec_with_field(F field, const Json& spec) {
    const Json& task = require(spec, "task", "spec");
    std::string kind = require(task, "kind", "task").template get<std::string>();

    SearchLimits lim;
    lim.depth_bound = get_size(task, "depth_bound", kDefaultDepthBound, "task");
    std::size_t dim_bound = get_size(task, "dim_bound", kDefaultDimBound, "task");
    std::uint64_t seed = get_seed(task, "seed", 1);

    Json report;
    report["schema"] = "derivlab/1";
    report["kind"] = kind;
    report["bounds"] = {{"depth", lim.depth_bound}, {"dim", dim_bound}};
    report["seed"] = seed;

    // classify works directly on a structure algebra; everything else needs a ring
    if (kind == "classify") {
        StructureAlgebra<F> alg = algebra_from_json(field, require(spec, "algebra", "spec"));
        std::vector<Vec<F>> gens;
        if (task.contains("generators")) {
            for (std::size_t i = 0; i < task["generators"].size(); ++i)
                gens.push_back(coords_from_json(field, task["generators"][i], alg.dim(),
                                                "task.generators[" + std::to_string(i) + "]"));
        }
        std::size_t samples = get_size(task, "sample_count", 20, "task");
        NilpotencyReport rep = classify(alg, gens, samples, lim, seed);
        report["report"] = nilpotency_report_to_json(rep);
        int code = rep.all_certified() ? 0 : (rep.n == Verdict::Refuted ? 1 : 2);
        return {report, code};
    }

    if (kind == "reproduce") {
        std::string id = require(task, "example", "task").template get<std::string>();
        std::size_t n = get_size(task, "n", 0 /* default per example */, "task");
        ReproduceOutcome out;
        try {
            out = reproduce_example(field, id, n, seed, lim);
        } catch (const std::invalid_argument& e) {
            throw input_error("task.example", e.what());
        }
        report["report"] = reproduce_outcome_to_json(out);
        return {report, out.all_passed() ? 0 : 1};
    }

    RingPtr<F> ring = ring_from_json(field, require(spec, "ring", "spec"));
    std::map<std::string, Derivation<F>> derivs;
    if (spec.contains("derivations")) {
        if (!spec["derivations"].is_object())
            throw input_error("derivations", "expected an object name -> derivation");
        for (const auto& [name, obj] : spec["derivations"].items())
            derivs.emplace(name, derivation_from_json(ring, obj, "derivations." + name));
    }
    std::map<std::string, LinearOperator<F>> operators;
    if (spec.contains("operators")) {
        if (!spec["operators"].is_object())
            throw input_error("operators", "expected an object name -> matrix");
        for (const auto& [name, m] : spec["operators"].items())
            operators.emplace(name, operator_from_json(field, m, "operators." + name));
    }

    // a set is homogeneous: all names resolve among the derivations, or all
    // among the operators
    auto set_is_operators = [&](const Json& names) {
        if (!names.is_array() || names.empty()) return false;
        for (const auto& n : names)
            if (!n.is_string() || !operators.count(n.template get<std::string>())) return false;
        return true;
    };
    auto resolve_operator_set = [&](const Json& names) {
        std::vector<LinearOperator<F>> out;
        std::size_t dim = 0;
        for (const auto& n : names) {
            out.push_back(operators.at(n.template get<std::string>()));
            if (dim == 0) dim = out.back().dim();
            else if (out.back().dim() != dim)
                throw input_error("task.set", "operators have mismatched dimensions");
        }
        return out;
    };

    auto parse_element = [&](const Json& j, const std::string& field_name) {
        if (!j.is_string()) throw input_error(field_name, "expected a polynomial expression");
        try {
            return parse_polynomial(j.template get<std::string>(), ring);
        } catch (const parse_error& e) {
            throw input_error(field_name, e.what());
        }
    };

    if (kind == "deg" || kind == "nil-membership") {
        const Json& set_names = require(task, "set", "task");
        Certificate c;
        if (set_is_operators(set_names)) {
            auto actors = resolve_operator_set(set_names);
            Vec<F> x = coords_from_json(field, require(task, "element", "task"),
                                        actors.front().dim(), "task.element");
            OperatorAction<F> act{field};
            if (kind == "deg") c = compute_degree(act, actors, x, lim);
            else c = nil_membership(act, actors, x, lim, schedule_from_json(task, set_names));
        } else {
            auto actors = resolve_derivation_set(set_names, derivs);
            Polynomial<F> x = parse_element(require(task, "element", "task"), "task.element");
            DerivationAction<F> act;
            if (kind == "deg") c = compute_degree(act, actors, x, lim);
            else c = nil_membership(act, actors, x, lim, schedule_from_json(task, set_names));
        }
        report["certificate"] = certificate_to_json(c);
        return {report, exit_code_for(c.verdict)};
    }

    if (kind == "set-lnd") {
        const Json& set_names = require(task, "set", "task");
        auto actors = resolve_derivation_set(set_names, derivs);
        std::vector<VarIndex> gens;
        if (task.contains("generators")) {
            for (const auto& g : task["generators"]) {
                auto idx = ring->find_var(g.template get<std::string>());
                if (!idx)
                    throw input_error("task.generators",
                                      "unknown variable '" + g.template get<std::string>() + "'");
                gens.push_back(*idx);
            }
        } else {
            for (VarIndex v = 0; v < ring->var_count(); ++v) gens.push_back(v);
        }
        auto sc = set_locally_nilpotent(actors, gens, ring, lim);
        report["set"] = set_certificate_to_json(sc, ring);
        return {report, exit_code_for(sc.overall.verdict)};
    }

    if (kind == "lie-unil") {
        const Json& set_names = require(task, "set", "task");
        if (set_is_operators(set_names)) {
            auto actors = resolve_operator_set(set_names);
            Vec<F> x = coords_from_json(field, require(task, "element", "task"),
                                        actors.front().dim(), "task.element");
            auto lc = lie_unil_membership(OperatorLieAction<F>{field}, actors, x, lim);
            report["lie"] = lie_certificate_to_json(lc);
            return {report, exit_code_for(lc.cert.verdict)};
        }
        auto actors = resolve_derivation_set(set_names, derivs);
        Polynomial<F> x = parse_element(require(task, "element", "task"), "task.element");
        auto lc = lie_unil_membership(DerivationLieAction<F>{}, actors, x, lim);
        report["lie"] = lie_certificate_to_json(lc);
        return {report, exit_code_for(lc.cert.verdict)};
    }

    if (kind == "ad-index") {
        std::string dname = require(task, "derivation", "task").template get<std::string>();
        std::string ename = require(task, "target", "task").template get<std::string>();
        if (!derivs.count(dname)) throw input_error("task.derivation", "unknown name '" + dname + "'");
        if (!derivs.count(ename)) throw input_error("task.target", "unknown name '" + ename + "'");
        std::vector<Polynomial<F>> sep;
        if (task.contains("separating")) {
            for (std::size_t i = 0; i < task["separating"].size(); ++i)
                sep.push_back(parse_element(task["separating"][i],
                                            "task.separating[" + std::to_string(i) + "]"));
        } else {
            for (VarIndex v = 0; v < ring->var_count(); ++v)
                sep.push_back(Polynomial<F>::variable(ring, v));
        }
        AdIndexResult r = ad_nilpotence_index(derivs.at(dname), derivs.at(ename), sep, lim);
        report["ad"] = ad_result_to_json(r);
        return {report, exit_code_for(r.cert.verdict)};
    }

    if (kind == "fg-nilpotency") {
        const Json& set_names = require(task, "set", "task");
        auto actors = resolve_derivation_set(set_names, derivs);
        auto dla = DerivationLieAlgebra<F>::over_variables(actors);
        FgNilpotencyResult r = fg_lie_nilpotency(dla, dim_bound);
        report["fg"] = fg_result_to_json(r);
        return {report, exit_code_for(r.verdict)};
    }

    throw input_error("task.kind", "unknown task kind '" + kind + "'");
}

}  // namespace detail

/// Runs a self-describing task specification (the `check` command input).
/// The ring's coefficient field (default Q) selects the arithmetic for the
/// whole task.
inline TaskOutcome run_task(const Json& spec) {
    if (!spec.is_object()) throw input_error("spec", "expected a JSON object");
    if (!spec.contains("schema") || spec["schema"] != "derivlab/1")
        throw input_error("schema", "expected \"derivlab/1\"");
    Json coeffs = Json("Q");
    if (spec.contains("ring")) {
        if (!spec["ring"].is_object()) throw input_error("ring", "expected an object");
        if (spec["ring"].contains("coefficients")) coeffs = spec["ring"]["coefficients"];
    }
    if (coeffs == "Q") return detail::run_spec_with_field(RationalField{}, spec);
    if (coeffs.is_object() && coeffs.contains("Fp")) {
        if (!coeffs["Fp"].is_number_integer() || coeffs["Fp"].template get<long long>() < 2)
            throw input_error("ring.coefficients.Fp", "expected a prime number");
        try {
            return detail::run_spec_with_field(PrimeField(coeffs["Fp"].get<std::uint64_t>()),
                                               spec);
        } catch (const std::invalid_argument& e) {
            throw input_error("ring.coefficients.Fp", e.what());
        }
    }
    throw input_error("ring.coefficients", "expected \"Q\" or {\"Fp\": p}");
}

/// The `reproduce` command.
inline TaskOutcome run_reproduce(const std::string& id, std::size_t n,
                                 std::uint64_t characteristic, std::uint64_t seed,
                                 const SearchLimits& lim = {}) {
    ReproduceOutcome out;
    try {
        if (characteristic == 0) out = reproduce_example(RationalField{}, id, n, seed, lim);
        else out = reproduce_example(PrimeField(characteristic), id, n, seed, lim);
    } catch (const std::invalid_argument& e) {
        throw input_error("example", e.what());
    }
    return {reproduce_outcome_to_json(out), out.all_passed() ? 0 : 1};
}

/// The `classify` command: a bare structure-algebra document
/// {"coefficients": ..., "algebra": {...}} or just the algebra object (Q).
inline TaskOutcome run_classify_document(const Json& doc, std::size_t sample_count,
                                         const SearchLimits& lim, std::uint64_t seed) {
    const Json& alg = doc.contains("algebra") ? doc["algebra"] : doc;
    Json coeffs = doc.contains("coefficients") ? doc["coefficients"] : Json("Q");
    auto run = [&](auto field) -> TaskOutcome {
        auto a = algebra_from_json(field, alg);
        NilpotencyReport rep = classify(a, {}, sample_count, lim, seed);
        Json report;
        report["schema"] = "derivlab/1";
        report["kind"] = "classify";
        report["bounds"] = {{"depth", lim.depth_bound}, {"dim", kDefaultDimBound}};
        report["seed"] = seed;
        report["report"] = nilpotency_report_to_json(rep);
        int code = rep.all_certified() ? 0 : (rep.n == Verdict::Refuted ? 1 : 2);
        return {report, code};
    };
    if (coeffs == "Q") return run(RationalField{});
    if (coeffs.is_object() && coeffs.contains("Fp")) {
        try {
            return run(PrimeField(coeffs["Fp"].get<std::uint64_t>()));
        } catch (const std::invalid_argument& e) {
            throw input_error("coefficients.Fp", e.what());
        }
    }
    throw input_error("coefficients", "expected \"Q\" or {\"Fp\": p}");
}

}  // namespace derivlab
