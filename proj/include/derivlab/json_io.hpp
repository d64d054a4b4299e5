#pragma once

#include <json.hpp>

#include <cctype>
#include <string>

#include "derivlab/certificate.hpp"
#include "derivlab/constructions.hpp"
#include "derivlab/derfinite.hpp"
#include "derivlab/nilclass.hpp"
#include "derivlab/poly_io.hpp"

namespace derivlab {

/// All reports use insertion-ordered JSON so identical inputs produce
/// byte-identical output.
using Json = nlohmann::ordered_json;

/// Input validation failure; `field` names the offending entry.
struct input_error : std::runtime_error {
    std::string field;
    input_error(std::string field_name, const std::string& msg)
        : std::runtime_error("invalid field '" + field_name + "': " + msg),
          field(std::move(field_name)) {}
};

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

inline Json schedule_to_json(const Schedule& s) {
    return Json{{"preperiod", s.preperiod}, {"period", s.period}};
}

inline Json certificate_to_json(const Certificate& c) {
    Json j;
    j["verdict"] = verdict_name(c.verdict);
    if (c.verdict == Verdict::Certified) {
        if (c.degree.is_neg_inf()) j["degree"] = "neg-inf";
        else if (c.degree.is_finite()) j["degree"] = c.degree.value;
        else j["degree"] = nullptr;
    } else {
        j["degree"] = nullptr;
    }
    j["bound"] = c.bound;
    j["witness"] = c.witness;
    j["periodic"] = c.periodic ? schedule_to_json(*c.periodic) : Json(nullptr);
    return j;
}

// ---------------------------------------------------------------------------
// Coefficients, rings, derivations, operators, algebras
// ---------------------------------------------------------------------------

/// Coefficient literal: an integer or a string "[-]a" / "[-]a/b".
template <class F>
typename F::Elem coeff_from_json(const F& f, const Json& v, const std::string& field) {
    if (v.is_number_integer()) return f.from_long(v.template get<long long>());
    if (!v.is_string()) throw input_error(field, "expected an integer or a fraction string");
    std::string s = v.template get<std::string>();
    std::size_t pos = 0;
    bool neg = false;
    if (pos < s.size() && s[pos] == '-') {
        neg = true;
        ++pos;
    }
    std::size_t num_start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == num_start) throw input_error(field, "malformed coefficient '" + s + "'");
    std::string num = s.substr(num_start, pos - num_start), den = "1";
    if (pos < s.size()) {
        if (s[pos] != '/') throw input_error(field, "malformed coefficient '" + s + "'");
        ++pos;
        std::size_t den_start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == den_start || pos != s.size())
            throw input_error(field, "malformed coefficient '" + s + "'");
        den = s.substr(den_start);
    }
    try {
        return f.from_fraction(neg, num, den);
    } catch (const std::domain_error& e) {
        throw input_error(field, e.what());
    }
}

template <class F>
RingPtr<F> ring_from_json(F field, const Json& spec) {
    if (!spec.is_object() || !spec.contains("variables") || !spec["variables"].is_array())
        throw input_error("ring.variables", "expected an array of variable names");
    std::vector<std::string> names;
    for (const auto& v : spec["variables"]) {
        if (!v.is_string()) throw input_error("ring.variables", "names must be strings");
        names.push_back(v.template get<std::string>());
    }
    try {
        return make_ring(std::move(field), std::move(names));
    } catch (const std::invalid_argument& e) {
        throw input_error("ring.variables", e.what());
    }
}

/// Derivation JSON form: object mapping variable name to a polynomial
/// expression; absent variables map to 0.
template <class F>
Derivation<F> derivation_from_json(const RingPtr<F>& ring, const Json& obj,
                                   const std::string& field) {
    if (!obj.is_object()) throw input_error(field, "expected an object variable -> expression");
    std::map<VarIndex, Polynomial<F>> images;
    for (const auto& [name, expr] : obj.items()) {
        auto idx = ring->find_var(name);
        if (!idx) throw input_error(field, "unknown variable '" + name + "'");
        if (!expr.is_string()) throw input_error(field + "." + name, "expected an expression string");
        try {
            images.emplace(*idx, parse_polynomial(expr.template get<std::string>(), ring));
        } catch (const parse_error& e) {
            throw input_error(field + "." + name, e.what());
        }
    }
    return Derivation<F>(ring, std::move(images));
}

template <class F>
Json derivation_to_json(const Derivation<F>& d) {
    Json j = Json::object();
    for (const auto& [v, img] : d.images()) j[d.ring()->var_name(v)] = to_string(img);
    return j;
}

template <class F>
LinearOperator<F> operator_from_json(const F& f, const Json& rows, const std::string& field) {
    if (!rows.is_array() || rows.empty())
        throw input_error(field, "expected a nonempty square matrix");
    std::size_t d = rows.size();
    LinearOperator<F> op(f, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (!rows[i].is_array() || rows[i].size() != d)
            throw input_error(field, "matrix is not square");
        for (std::size_t j = 0; j < d; ++j)
            op.at(i, j) = coeff_from_json(f, rows[i][j],
                                          field + "[" + std::to_string(i) + "][" +
                                              std::to_string(j) + "]");
    }
    return op;
}

/// StructureAlgebra JSON form:
///   {"kind": "lie"|"associative", "basis": [names],
///    "table": [{"i": i, "j": j, "k": k, "c": coeff}, ...]}
template <class F>
StructureAlgebra<F> algebra_from_json(const F& f, const Json& spec) {
    if (!spec.is_object()) throw input_error("algebra", "expected an object");
    if (!spec.contains("kind") || !spec["kind"].is_string())
        throw input_error("algebra.kind", "expected \"lie\" or \"associative\"");
    std::string kind_s = spec["kind"].template get<std::string>();
    AlgebraKind kind;
    if (kind_s == "lie") kind = AlgebraKind::Lie;
    else if (kind_s == "associative") kind = AlgebraKind::Associative;
    else throw input_error("algebra.kind", "expected \"lie\" or \"associative\"");
    if (!spec.contains("basis") || !spec["basis"].is_array() || spec["basis"].empty())
        throw input_error("algebra.basis", "expected a nonempty array of names");
    std::vector<std::string> names;
    for (const auto& b : spec["basis"]) names.push_back(b.template get<std::string>());
    std::vector<TableEntry<F>> entries;
    if (spec.contains("table")) {
        if (!spec["table"].is_array()) throw input_error("algebra.table", "expected an array");
        for (std::size_t t = 0; t < spec["table"].size(); ++t) {
            const auto& e = spec["table"][t];
            std::string at = "algebra.table[" + std::to_string(t) + "]";
            if (!e.is_object() || !e.contains("i") || !e.contains("j") || !e.contains("k") ||
                !e.contains("c"))
                throw input_error(at, "expected {i, j, k, c}");
            entries.push_back({e["i"].template get<std::size_t>(),
                               e["j"].template get<std::size_t>(),
                               e["k"].template get<std::size_t>(),
                               coeff_from_json(f, e["c"], at + ".c")});
        }
    }
    try {
        return StructureAlgebra<F>(f, kind, std::move(names), entries, true);
    } catch (const invalid_algebra_error& e) {
        throw input_error("algebra.table", e.what());
    }
}

template <class F>
Vec<F> coords_from_json(const F& f, const Json& arr, std::size_t dim, const std::string& field) {
    if (!arr.is_array() || arr.size() != dim)
        throw input_error(field, "expected a coordinate array of length " + std::to_string(dim));
    Vec<F> v;
    for (std::size_t i = 0; i < dim; ++i)
        v.push_back(coeff_from_json(f, arr[i], field + "[" + std::to_string(i) + "]"));
    return v;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

inline Json series_to_json(const SeriesResult& s) {
    Json j;
    j["dims"] = s.dims;
    j["nilpotent"] = s.nilpotent;
    j["index"] = s.nilpotent ? Json(s.index) : Json(nullptr);
    return j;
}

inline Json svalue_to_json(const SValue& s) {
    switch (s.kind) {
        case SValue::Kind::NegInf: return Json("neg-inf");
        case SValue::Kind::Finite: return Json(s.value);
        case SValue::Kind::Infinite: return Json("inf");
        default: return Json(nullptr);
    }
}

inline Json nilpotency_report_to_json(const NilpotencyReport& r) {
    Json j;
    Json verdicts;
    verdicts["N"] = verdict_name(r.n);
    verdicts["SN"] = verdict_name(r.sn);
    verdicts["LN"] = verdict_name(r.ln);
    verdicts["nil"] = verdict_name(r.nil);
    verdicts["Lnil"] = verdict_name(r.lnil);
    j["verdicts"] = verdicts;
    j["lower_central_series"] = series_to_json(r.series);
    j["s_value"] = svalue_to_json(r.s);
    Json phi = Json::array();
    for (const auto& idx : r.basis_phi_index) phi.push_back(idx ? Json(*idx) : Json(nullptr));
    j["evidence"] = {
        {"phi_nilpotency_index_per_basis", phi},
        {"phi_counterexample", r.phi_counterexample ? Json(*r.phi_counterexample) : Json(nullptr)},
        {"sampled_elements", r.sampled_elements},
        {"sampled_phi_all_nilpotent", r.sampled_phi_all_nilpotent},
        {"schedules_replayed", r.schedules_replayed},
        {"schedules_survived", r.schedules_survived},
        {"schedule_max_death_step", r.schedule_max_death_step},
    };
    j["sample_count"] = r.sample_count;
    j["seed"] = r.seed;
    return j;
}

inline Json replay_to_json(const SequenceReplay& r) {
    Json j;
    j["length"] = r.length;
    j["died_at"] = r.died_at ? Json(*r.died_at) : Json(nullptr);
    j["survived"] = r.survived();
    return j;
}

inline Json avsal_report_to_json(const AvsALReport& r) {
    Json j;
    j["associative"] = nilpotency_report_to_json(r.assoc);
    j["lie"] = nilpotency_report_to_json(r.lie);
    j["transfers_ok"] = r.transfers_ok;
    j["transfer_notes"] = r.transfer_notes;
    Json probes = Json::array();
    for (const auto& [a, al] : r.probe_replays)
        probes.push_back(Json{{"associative", replay_to_json(a)}, {"lie", replay_to_json(al)}});
    j["probe_replays"] = probes;
    return j;
}

template <class LieAction>
Json lie_certificate_to_json(const LieCertificateT<LieAction>& r) {
    Json j;
    j["certificate"] = certificate_to_json(r.cert);
    j["cutoff"] = r.cutoff ? Json(*r.cutoff) : Json(nullptr);
    Json pattern = Json::array();
    for (const auto& ev : r.pattern)
        pattern.push_back(Json{{"length", ev.length},
                               {"distinct_words", ev.distinct_words},
                               {"nonzero_at_x", ev.nonzero_at_x},
                               {"witness", ev.witness}});
    j["pattern"] = pattern;
    j["budget_exceeded"] = r.budget_exceeded;
    return j;
}

template <class F>
Json set_certificate_to_json(const SetCertificate<F>& s, const RingPtr<F>& ring) {
    Json j;
    j["certificate"] = certificate_to_json(s.overall);
    Json per = Json::array();
    for (const auto& [v, c] : s.per_generator)
        per.push_back(Json{{"generator", ring->var_name(v)}, {"certificate",
                                                              certificate_to_json(c)}});
    j["per_generator"] = per;
    return j;
}

inline Json reproduce_outcome_to_json(const ReproduceOutcome& out) {
    Json j;
    j["schema"] = "derivlab/1";
    j["example"] = out.example;
    j["params"] = {{"n", out.n},
                   {"char", out.characteristic},
                   {"seed", out.seed},
                   {"depth_bound", out.depth_bound}};
    Json claims = Json::array();
    for (const auto& c : out.claims)
        claims.push_back(Json{{"name", c.name},
                              {"status", c.passed ? "pass" : "fail"},
                              {"evidence", c.evidence}});
    j["claims"] = claims;
    j["all_passed"] = out.all_passed();
    return j;
}

inline Json fg_result_to_json(const FgNilpotencyResult& r) {
    Json j;
    j["verdict"] = verdict_name(r.verdict);
    j["closure_dim"] = r.closure_dim;
    j["closure_complete"] = r.closure_complete;
    j["degree_capped"] = r.degree_capped;
    j["lower_central_series"] =
        r.closure_complete ? series_to_json(r.series) : Json(nullptr);
    return j;
}

inline Json ad_result_to_json(const AdIndexResult& r) {
    Json j;
    j["certificate"] = certificate_to_json(r.cert);
    j["envelope"] = r.envelope;
    j["vanishing_order_on_separating_set"] = r.order_on_x;
    j["vanishing_order_on_images"] = r.order_on_y;
    return j;
}

}  // namespace derivlab
