#pragma once

#include <deque>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "derivlab/certificate.hpp"
#include "derivlab/derivation.hpp"
#include "derivlab/linop.hpp"

namespace derivlab {

// ---------------------------------------------------------------------------
// Action policies: how a homogeneous operator set acts on elements.
// ---------------------------------------------------------------------------

template <class F>
struct DerivationAction {
    using Actor = Derivation<F>;
    using Value = Polynomial<F>;
    Value apply(const Actor& a, const Value& v) const { return a(v); }
    bool is_zero(const Value& v) const { return v.is_zero(); }
    int cmp(const Value& a, const Value& b) const { return Polynomial<F>::cmp(a, b); }
};

template <class F>
struct OperatorAction {
    F field;
    using Actor = LinearOperator<F>;
    using Value = Vec<F>;
    Value apply(const Actor& a, const Value& v) const { return a.apply(v); }
    bool is_zero(const Value& v) const { return vec_is_zero(field, v); }
    int cmp(const Value& a, const Value& b) const { return vec_cmp(field, a, b); }
};

struct SearchLimits {
    std::size_t depth_bound = kDefaultDepthBound;
    std::size_t node_budget = kDefaultNodeBudget;
    std::size_t replay_steps = kDefaultReplaySteps;
};

// ---------------------------------------------------------------------------
// Value graph: the tree of surviving words compressed by exact value.
//
// Nodes are the distinct nonzero values reachable from the start element;
// an edge u --actor--> w records actor(value(u)) = value(w). The word tree
// of the finiteness argument is finite iff this graph is finite and acyclic,
// and the degree of the element equals the longest path from the root.
// Memoizing by value never changes verdicts: it only shares identical
// subtrees.
// ---------------------------------------------------------------------------

template <class Action>
struct ValueGraph {
    using Value = typename Action::Value;
    struct Node {
        Value value;
        std::size_t depth;   // BFS discovery depth = shortest word length
        std::size_t parent;  // tree parent (SIZE_MAX at root)
        std::size_t via;     // actor index on the tree edge
    };
    struct Edge {
        std::size_t from, actor, to;
    };
    std::vector<Node> nodes;  // node 0 is the root
    std::vector<Edge> edges;
    bool complete = false;  // whole reachable graph explored
    bool budget_exceeded = false;
    std::size_t max_depth = 0;

    std::vector<std::vector<std::size_t>> adjacency() const {
        std::vector<std::vector<std::size_t>> adj(nodes.size());
        for (std::size_t e = 0; e < edges.size(); ++e) adj[edges[e].from].push_back(e);
        return adj;
    }

    /// Tree word from the root to `node`, in application order.
    std::vector<std::size_t> word_to(std::size_t node) const {
        std::vector<std::size_t> w;
        while (node != 0) {
            w.push_back(nodes[node].via);
            node = nodes[node].parent;
        }
        std::reverse(w.begin(), w.end());
        return w;
    }
};

template <class Action>
ValueGraph<Action> explore_value_graph(const Action& act,
                                       const std::vector<typename Action::Actor>& actors,
                                       const typename Action::Value& start,
                                       const SearchLimits& lim) {
    using Graph = ValueGraph<Action>;
    Graph g;
    auto less = [&act](const typename Action::Value& a, const typename Action::Value& b) {
        return act.cmp(a, b) < 0;
    };
    std::map<typename Action::Value, std::size_t, decltype(less)> index(less);

    g.nodes.push_back({start, 0, SIZE_MAX, SIZE_MAX});
    index.emplace(start, 0);
    std::deque<std::size_t> frontier{0};
    bool depth_capped = false;

    while (!frontier.empty()) {
        std::size_t u = frontier.front();
        frontier.pop_front();
        if (g.nodes[u].depth >= lim.depth_bound) {
            depth_capped = true;
            continue;
        }
        for (std::size_t a = 0; a < actors.size(); ++a) {
            typename Action::Value w = act.apply(actors[a], g.nodes[u].value);
            if (act.is_zero(w)) continue;  // dead branch: prune
            auto it = index.find(w);
            if (it != index.end()) {
                g.edges.push_back({u, a, it->second});
                continue;
            }
            if (g.nodes.size() >= lim.node_budget) {
                g.budget_exceeded = true;
                g.complete = false;
                return g;
            }
            std::size_t id = g.nodes.size();
            std::size_t d = g.nodes[u].depth + 1;
            g.nodes.push_back({std::move(w), d, u, a});
            index.emplace(g.nodes.back().value, id);
            g.edges.push_back({u, a, id});
            g.max_depth = std::max(g.max_depth, d);
            frontier.push_back(id);
        }
    }
    g.complete = !depth_capped;
    return g;
}

namespace detail {

/// First cycle reachable from the root, as an eventually-periodic schedule
/// (path to the cycle, then the cycle). Deterministic: DFS in edge insertion
/// order.
template <class Action>
std::optional<Schedule> find_cycle(const ValueGraph<Action>& g) {
    const auto adj = g.adjacency();
    enum : unsigned char { White, Gray, Black };
    std::vector<unsigned char> color(g.nodes.size(), White);
    struct Frame {
        std::size_t node;
        std::size_t next_edge;  // index into adj[node]
        std::size_t via_actor;  // actor on the edge that entered this node
    };
    std::vector<Frame> stack;
    stack.push_back({0, 0, SIZE_MAX});
    color[0] = Gray;
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next_edge >= adj[fr.node].size()) {
            color[fr.node] = Black;
            stack.pop_back();
            continue;
        }
        const auto& e = g.edges[adj[fr.node][fr.next_edge++]];
        if (color[e.to] == Gray) {
            // stack holds the DFS path; locate e.to on it
            Schedule s;
            std::size_t pos = 0;
            while (stack[pos].node != e.to) ++pos;
            for (std::size_t i = 1; i <= pos; ++i) s.preperiod.push_back(stack[i].via_actor);
            for (std::size_t i = pos + 1; i < stack.size(); ++i)
                s.period.push_back(stack[i].via_actor);
            s.period.push_back(e.actor);
            return s;
        }
        if (color[e.to] == White) {
            color[e.to] = Gray;
            stack.push_back({e.to, 0, e.actor});
        }
    }
    return std::nullopt;
}

/// Topological order of a complete acyclic value graph (DFS postorder,
/// reversed). All nodes are reachable from the root.
template <class Action>
std::vector<std::size_t> topo_order(const ValueGraph<Action>& g) {
    const auto adj = g.adjacency();
    std::vector<unsigned char> seen(g.nodes.size(), 0);
    std::vector<std::size_t> post;
    struct Frame {
        std::size_t node, next;
    };
    std::vector<Frame> stack{{0, 0}};
    seen[0] = 1;
    while (!stack.empty()) {
        Frame& fr = stack.back();
        if (fr.next >= adj[fr.node].size()) {
            post.push_back(fr.node);
            stack.pop_back();
            continue;
        }
        const auto& e = g.edges[adj[fr.node][fr.next++]];
        if (!seen[e.to]) {
            seen[e.to] = 1;
            stack.push_back({e.to, 0});
        }
    }
    std::reverse(post.begin(), post.end());
    return post;
}

struct LongestPath {
    std::size_t length = 0;
    std::vector<std::size_t> word;  // actors in application order
};

/// Longest path from the root of a complete acyclic value graph; its length
/// is the exact degree and the path is a replayable witness word.
template <class Action>
LongestPath longest_path(const ValueGraph<Action>& g) {
    const auto order = topo_order(g);
    const auto adj = g.adjacency();
    std::vector<std::size_t> dist(g.nodes.size(), 0);
    std::vector<std::size_t> pred_edge(g.nodes.size(), SIZE_MAX);
    for (std::size_t u : order) {
        for (std::size_t ei : adj[u]) {
            const auto& e = g.edges[ei];
            if (dist[u] + 1 > dist[e.to]) {
                dist[e.to] = dist[u] + 1;
                pred_edge[e.to] = ei;
            }
        }
    }
    LongestPath lp;
    std::size_t best = 0;
    for (std::size_t n = 0; n < g.nodes.size(); ++n)
        if (dist[n] > dist[best]) best = n;
    lp.length = dist[best];
    std::size_t cur = best;
    while (pred_edge[cur] != SIZE_MAX) {
        const auto& e = g.edges[pred_edge[cur]];
        lp.word.push_back(e.actor);
        cur = e.from;
    }
    std::reverse(lp.word.begin(), lp.word.end());
    return lp;
}

/// reach[node][len] = true iff some length-`len` word from the root reaches
/// `node` through nonzero values. Only lengths up to `max_len`.
template <class Action>
std::vector<std::vector<char>> exact_length_reach(const ValueGraph<Action>& g,
                                                  std::size_t max_len) {
    const auto order = topo_order(g);
    const auto adj = g.adjacency();
    std::vector<std::vector<char>> reach(g.nodes.size(),
                                         std::vector<char>(max_len + 1, 0));
    reach[0][0] = 1;
    for (std::size_t u : order)
        for (std::size_t ei : adj[u]) {
            const auto& e = g.edges[ei];
            for (std::size_t l = 0; l < max_len; ++l)
                if (reach[u][l]) reach[e.to][l + 1] = 1;
        }
    return reach;
}

/// A surviving word of exact length n (requires such a word to exist per the
/// reach table).
template <class Action>
std::vector<std::size_t> extract_exact_word(const ValueGraph<Action>& g,
                                            const std::vector<std::vector<char>>& reach,
                                            std::size_t n) {
    std::size_t node = SIZE_MAX;
    for (std::size_t i = 0; i < g.nodes.size(); ++i)
        if (reach[i][n]) { node = i; break; }
    std::vector<std::size_t> word;
    std::size_t len = n;
    while (len > 0) {
        for (const auto& e : g.edges) {
            if (e.to == node && reach[e.from][len - 1]) {
                word.push_back(e.actor);
                node = e.from;
                --len;
                break;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Degree and membership
// ---------------------------------------------------------------------------

/// deg_Δ(x) by bounded tree search. Certified means exact: a witness word of
/// the stated length survives and every longer word annihilates x. A proven
/// nonvanishing cycle refutes membership (deg = infinity). Otherwise
/// inconclusive at the bound.
template <class Action>
Certificate compute_degree(const Action& act,
                           const std::vector<typename Action::Actor>& actors,
                           const typename Action::Value& x, const SearchLimits& lim = {}) {
    if (act.is_zero(x)) return Certificate::certified(DegreeValue::neg_inf(), lim.depth_bound);
    if (actors.empty())
        return Certificate::certified(DegreeValue::finite(0), lim.depth_bound);
    auto g = explore_value_graph(act, actors, x, lim);
    if (auto cyc = detail::find_cycle(g)) return Certificate::refuted(*cyc, lim.depth_bound);
    if (!g.complete) {
        // deepest node discovered first, via tree path
        std::size_t deepest = 0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i)
            if (g.nodes[i].depth > g.nodes[deepest].depth) deepest = i;
        return Certificate::inconclusive(lim.depth_bound, g.word_to(deepest));
    }
    auto lp = detail::longest_path(g);
    return Certificate::certified(DegreeValue::finite(lp.length), lim.depth_bound,
                                  std::move(lp.word));
}

/// Replays an eventually-periodic schedule; returns a refutation when the
/// trace provably enters a cycle of nonzero values.
template <class Action>
std::optional<Certificate> replay_schedule(const Action& act,
                                           const std::vector<typename Action::Actor>& actors,
                                           const typename Action::Value& x,
                                           const Schedule& sched, const SearchLimits& lim = {}) {
    if (sched.period.empty()) return std::nullopt;
    for (std::size_t a : sched.preperiod)
        if (a >= actors.size()) throw std::out_of_range("schedule actor index out of range");
    for (std::size_t a : sched.period)
        if (a >= actors.size()) throw std::out_of_range("schedule actor index out of range");

    typename Action::Value v = x;
    if (act.is_zero(v)) return std::nullopt;
    for (std::size_t a : sched.preperiod) {
        v = act.apply(actors[a], v);
        if (act.is_zero(v)) return std::nullopt;
    }
    auto less = [&act](const std::pair<std::size_t, typename Action::Value>& a,
                       const std::pair<std::size_t, typename Action::Value>& b) {
        if (a.first != b.first) return a.first < b.first;
        return act.cmp(a.second, b.second) < 0;
    };
    std::map<std::pair<std::size_t, typename Action::Value>, std::size_t, decltype(less)>
        seen(less);
    for (std::size_t step = 0; step < lim.replay_steps; ++step) {
        std::size_t phase = step % sched.period.size();
        if (!seen.emplace(std::make_pair(phase, v), step).second)
            return Certificate::refuted(sched, lim.depth_bound);
        v = act.apply(actors[sched.period[phase]], v);
        if (act.is_zero(v)) return std::nullopt;
    }
    return std::nullopt;
}

/// Membership of x in Nil(Δ) for finite Δ (where Nil = UNil). A caller
/// supplied schedule is replayed first; the search itself also refutes when
/// it discovers a nonvanishing value cycle.
template <class Action>
Certificate nil_membership(const Action& act,
                           const std::vector<typename Action::Actor>& actors,
                           const typename Action::Value& x, const SearchLimits& lim = {},
                           const std::optional<Schedule>& schedule = std::nullopt) {
    if (schedule) {
        if (auto r = replay_schedule(act, actors, x, *schedule, lim)) return *r;
    }
    return compute_degree(act, actors, x, lim);
}

/// Aggregated verdict for a set of derivations on a polynomial ring: the set
/// is (uniformly) locally nilpotent iff every generator is certified, since
/// Nil and UNil are subalgebras containing the constants.
template <class F>
struct SetCertificate {
    Certificate overall;
    std::vector<std::pair<VarIndex, Certificate>> per_generator;
};

template <class F>
SetCertificate<F> set_locally_nilpotent(const std::vector<Derivation<F>>& actors,
                                        const std::vector<VarIndex>& generators,
                                        const RingPtr<F>& ring, const SearchLimits& lim = {}) {
    for (const auto& d : actors) require_same_ring(d.ring(), ring, "set_locally_nilpotent");
    DerivationAction<F> act;
    SetCertificate<F> res;
    bool any_inconclusive = false;
    DegreeValue max_deg = DegreeValue::neg_inf();
    for (VarIndex v : generators) {
        Certificate c =
            nil_membership(act, actors, Polynomial<F>::variable(ring, v), lim);
        if (c.verdict == Verdict::Refuted && res.overall.verdict != Verdict::Refuted) {
            res.overall = c;
        } else if (c.verdict == Verdict::Inconclusive) {
            any_inconclusive = true;
        } else if (c.verdict == Verdict::Certified) {
            if (max_deg <= c.degree) max_deg = c.degree;
        }
        res.per_generator.emplace_back(v, std::move(c));
    }
    if (res.overall.verdict == Verdict::Refuted) return res;
    if (any_inconclusive) {
        res.overall = Certificate::inconclusive(lim.depth_bound);
        return res;
    }
    res.overall = Certificate::certified(max_deg, lim.depth_bound);
    return res;
}

// ---------------------------------------------------------------------------
// Word-level vanishing
// ---------------------------------------------------------------------------

struct VanishingResult {
    bool vanishes;
    std::vector<std::size_t> witness;  // surviving length-n word when false
    std::size_t probe = SIZE_MAX;      // probe index the witness survives on
};

/// True iff every length-n word of the actors annihilates every probe
/// element. For derivations the probes are the ring generators; for
/// operators, the basis vectors. Monotone in n.
template <class Action>
VanishingResult word_vanishing_depth(const Action& act,
                                     const std::vector<typename Action::Actor>& actors,
                                     std::size_t n,
                                     const std::vector<typename Action::Value>& probes,
                                     std::size_t node_budget = kDefaultNodeBudget) {
    if (n == 0) {
        for (std::size_t p = 0; p < probes.size(); ++p)
            if (!act.is_zero(probes[p])) return {false, {}, p};
        return {true, {}};
    }
    for (std::size_t p = 0; p < probes.size(); ++p) {
        if (act.is_zero(probes[p])) continue;
        SearchLimits lim;
        lim.depth_bound = n;
        lim.node_budget = node_budget;
        auto g = explore_value_graph(act, actors, probes[p], lim);
        if (g.budget_exceeded)
            throw std::runtime_error("word_vanishing_depth: node budget exceeded");
        if (auto cyc = detail::find_cycle(g)) {
            // a nonvanishing cycle yields surviving words of every length
            std::vector<std::size_t> w;
            std::size_t i = 0;
            while (w.size() < n && i < cyc->preperiod.size()) w.push_back(cyc->preperiod[i++]);
            while (w.size() < n)
                w.push_back(cyc->period[(w.size() - cyc->preperiod.size()) % cyc->period.size()]);
            return {false, std::move(w), p};
        }
        auto reach = detail::exact_length_reach(g, n);
        for (std::size_t node = 0; node < g.nodes.size(); ++node)
            if (reach[node][n])
                return {false, detail::extract_exact_word(g, reach, n), p};
    }
    return {true, {}};
}

// ---------------------------------------------------------------------------
// Lie (bracket-word) membership
// ---------------------------------------------------------------------------

template <class F>
struct DerivationLieAction {
    using Actor = Derivation<F>;
    using Point = Polynomial<F>;
    Actor bracket(const Actor& a, const Actor& b) const { return lie_bracket(a, b); }
    bool actor_zero(const Actor& a) const { return a.is_zero(); }
    int actor_cmp(const Actor& a, const Actor& b) const { return Derivation<F>::cmp(a, b); }
    Point at(const Actor& a, const Point& x) const { return a(x); }
    bool point_zero(const Point& p) const { return p.is_zero(); }
};

template <class F>
struct OperatorLieAction {
    F field;
    using Actor = LinearOperator<F>;
    using Point = Vec<F>;
    Actor bracket(const Actor& a, const Actor& b) const { return op_bracket(a, b); }
    bool actor_zero(const Actor& a) const { return a.is_zero(); }
    int actor_cmp(const Actor& a, const Actor& b) const { return LinearOperator<F>::cmp(a, b); }
    Point at(const Actor& a, const Point& x) const { return a.apply(x); }
    bool point_zero(const Point& p) const { return vec_is_zero(field, p); }
};

struct LieLengthEvidence {
    std::size_t length;
    std::size_t distinct_words;       // distinct nonzero bracket-word values
    bool nonzero_at_x;                // some value is nonzero at the element
    std::vector<std::size_t> witness; // word achieving it (application order)
};

/// Evidence and verdict for membership in UNil^L(Δ). Certification is
/// operator-level only: some length n ≤ bound at which every length-n
/// bracket word [F_n, ..., F_1] is the zero map (then all longer bracket
/// words are zero maps too). Pointwise vanishing at x is reported as
/// evidence but never certifies, because bracket-word vanishing at a point
/// is not monotone in the word length.
template <class LieAction>
struct LieCertificateT {
    Certificate cert;
    std::vector<LieLengthEvidence> pattern;
    std::optional<std::size_t> cutoff;
    bool budget_exceeded = false;
};

template <class LieAction>
LieCertificateT<LieAction> lie_unil_membership(
    const LieAction& act, const std::vector<typename LieAction::Actor>& actors,
    const typename LieAction::Point& x, const SearchLimits& lim = {}) {
    LieCertificateT<LieAction> res;
    if (act.point_zero(x)) {
        res.cert = Certificate::certified(DegreeValue::neg_inf(), lim.depth_bound);
        return res;
    }
    if (actors.empty()) {
        res.cutoff = 1;
        res.cert = Certificate::certified(DegreeValue::finite(1), lim.depth_bound);
        return res;
    }

    struct Item {
        typename LieAction::Actor value;
        std::size_t parent;  // index into the previous layer, SIZE_MAX for roots
        std::size_t via;     // actor index
    };
    std::vector<std::vector<Item>> layers;
    auto word_of = [&](std::size_t layer, std::size_t item) {
        std::vector<std::size_t> w;
        while (layer != SIZE_MAX && item != SIZE_MAX) {
            w.push_back(layers[layer][item].via);
            item = layers[layer][item].parent;
            layer = (layer == 0) ? SIZE_MAX : layer - 1;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };

    std::size_t total_items = 0;
    for (std::size_t n = 1; n <= lim.depth_bound; ++n) {
        auto less = [&act](const typename LieAction::Actor& a,
                           const typename LieAction::Actor& b) {
            return act.actor_cmp(a, b) < 0;
        };
        std::map<typename LieAction::Actor, std::size_t, decltype(less)> dedup(less);
        std::vector<Item> layer;
        auto push = [&](typename LieAction::Actor v, std::size_t parent, std::size_t via) {
            if (act.actor_zero(v)) return;
            if (dedup.count(v)) return;
            dedup.emplace(v, layer.size());
            layer.push_back({std::move(v), parent, via});
        };
        if (n == 1) {
            for (std::size_t a = 0; a < actors.size(); ++a) push(actors[a], SIZE_MAX, a);
        } else {
            const auto& prev = layers.back();
            for (std::size_t i = 0; i < prev.size(); ++i)
                for (std::size_t a = 0; a < actors.size(); ++a)
                    push(act.bracket(actors[a], prev[i].value), i, a);
        }
        total_items += layer.size();
        if (layer.empty()) {
            res.cutoff = n;
            layers.push_back(std::move(layer));
            res.cert = Certificate::certified(DegreeValue::finite(n), lim.depth_bound);
            // witness: last length with a pointwise-nonzero word, if any
            for (auto it = res.pattern.rbegin(); it != res.pattern.rend(); ++it)
                if (it->nonzero_at_x) {
                    res.cert.witness = it->witness;
                    break;
                }
            return res;
        }
        LieLengthEvidence ev{n, layer.size(), false, {}};
        layers.push_back(std::move(layer));
        for (std::size_t i = 0; i < layers.back().size(); ++i) {
            if (!act.point_zero(act.at(layers.back()[i].value, x))) {
                ev.nonzero_at_x = true;
                ev.witness = word_of(layers.size() - 1, i);
                break;
            }
        }
        res.pattern.push_back(std::move(ev));
        if (total_items > lim.node_budget) {
            res.budget_exceeded = true;
            break;
        }
    }
    res.cert = Certificate::inconclusive(lim.depth_bound);
    for (auto it = res.pattern.rbegin(); it != res.pattern.rend(); ++it)
        if (it->nonzero_at_x) {
            res.cert.witness = it->witness;
            break;
        }
    return res;
}

// ---------------------------------------------------------------------------
// Derived checks built on the degree search
// ---------------------------------------------------------------------------

struct InvarianceReport {
    std::size_t checked = 0;
    std::size_t both_certified = 0;
    std::vector<std::size_t> skipped;  // sample indices not certified on both sides
    struct Violation {
        std::size_t sample;
        std::size_t base_degree, enriched_degree;
    };
    std::vector<Violation> violations;
};

/// deg_Δ must agree with deg_{Δ ∪ enrichment} when the enrichment consists
/// of iterated brackets of Δ members (degree is invariant under the
/// generated subalgebra). A violation would falsify the implementation.
template <class F>
InvarianceReport check_generated_set_invariance(const std::vector<Derivation<F>>& actors,
                                                const std::vector<Derivation<F>>& enrichment,
                                                const std::vector<Polynomial<F>>& samples,
                                                const SearchLimits& lim = {}) {
    DerivationAction<F> act;
    std::vector<Derivation<F>> enriched = actors;
    enriched.insert(enriched.end(), enrichment.begin(), enrichment.end());
    InvarianceReport rep;
    for (std::size_t s = 0; s < samples.size(); ++s) {
        ++rep.checked;
        Certificate a = compute_degree(act, actors, samples[s], lim);
        Certificate b = compute_degree(act, enriched, samples[s], lim);
        if (a.verdict != Verdict::Certified || b.verdict != Verdict::Certified) {
            rep.skipped.push_back(s);
            continue;
        }
        ++rep.both_certified;
        bool equal = a.degree.kind == b.degree.kind &&
                     (!a.degree.is_finite() || a.degree.value == b.degree.value);
        if (!equal)
            rep.violations.push_back({s, a.degree.is_finite() ? a.degree.value : SIZE_MAX,
                                      b.degree.is_finite() ? b.degree.value : SIZE_MAX});
    }
    return rep;
}

struct DegreeLawsReport {
    std::size_t decrease_checked = 0, sum_checked = 0, product_checked = 0;
    std::size_t skipped = 0;  // samples or pairs without certified degrees
    std::vector<std::string> violations;
};

/// Degree calculus on certified samples: strict decrease under each actor,
/// the max law for sums, and subadditivity for products.
template <class F>
DegreeLawsReport check_degree_laws(const std::vector<Derivation<F>>& actors,
                                   const std::vector<Polynomial<F>>& samples,
                                   const SearchLimits& lim = {}) {
    DerivationAction<F> act;
    DegreeLawsReport rep;
    std::vector<std::optional<DegreeValue>> degs(samples.size());
    auto deg_of = [&](const Polynomial<F>& p) -> std::optional<DegreeValue> {
        Certificate c = compute_degree(act, actors, p, lim);
        if (c.verdict != Verdict::Certified) return std::nullopt;
        return c.degree;
    };
    for (std::size_t i = 0; i < samples.size(); ++i) degs[i] = deg_of(samples[i]);

    auto str_deg = [](const DegreeValue& d) {
        return d.is_neg_inf() ? std::string("-inf") : std::to_string(d.value);
    };
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (!degs[i]) {
            ++rep.skipped;
            continue;
        }
        // (d) strict decrease, for x in UNil \ {0}
        if (!degs[i]->is_neg_inf()) {
            for (std::size_t a = 0; a < actors.size(); ++a) {
                auto da = deg_of(actors[a](samples[i]));
                ++rep.decrease_checked;
                if (!da) {
                    ++rep.skipped;
                    continue;
                }
                bool ok = da->is_neg_inf() ||
                          (!degs[i]->is_neg_inf() && da->value < degs[i]->value);
                if (!ok)
                    rep.violations.push_back("decrease fails on sample " + std::to_string(i) +
                                             " actor " + std::to_string(a));
            }
        }
        for (std::size_t j = 0; j < samples.size(); ++j) {
            if (!degs[j]) continue;
            // (e) deg(x+y) <= max(deg x, deg y)
            auto ds = deg_of(samples[i] + samples[j]);
            ++rep.sum_checked;
            if (ds) {
                DegreeValue mx = *degs[i] <= *degs[j] ? *degs[j] : *degs[i];
                if (!(*ds <= mx))
                    rep.violations.push_back("sum law fails on samples " + std::to_string(i) +
                                             "," + std::to_string(j) + ": deg=" + str_deg(*ds));
            } else {
                ++rep.skipped;
            }
            // deg(x·y) <= deg(x) + deg(y)
            auto dp = deg_of(samples[i] * samples[j]);
            ++rep.product_checked;
            if (dp) {
                bool ok;
                if (degs[i]->is_neg_inf() || degs[j]->is_neg_inf()) ok = dp->is_neg_inf();
                else ok = dp->is_neg_inf() || dp->value <= degs[i]->value + degs[j]->value;
                if (!ok)
                    rep.violations.push_back("product law fails on samples " +
                                             std::to_string(i) + "," + std::to_string(j) +
                                             ": deg=" + str_deg(*dp));
            } else {
                ++rep.skipped;
            }
        }
    }
    return rep;
}

}  // namespace derivlab
