#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace derivlab {

enum class Verdict { Certified, Refuted, Inconclusive };

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Certified: return "certified";
        case Verdict::Refuted: return "refuted";
        default: return "inconclusive";
    }
}

/// Eventually-periodic actor schedule: preperiod followed by the period
/// repeated forever. Entries are actor indices, listed in application order
/// (first entry is applied first).
struct Schedule {
    std::vector<std::size_t> preperiod;
    std::vector<std::size_t> period;
};

/// Degree values live in N ∪ {-inf}; "unknown" marks certificates that do
/// not carry a degree (refuted or inconclusive).
struct DegreeValue {
    enum class Kind { NegInf, Finite, Unknown };
    Kind kind = Kind::Unknown;
    std::size_t value = 0;

    static DegreeValue neg_inf() { return {Kind::NegInf, 0}; }
    static DegreeValue finite(std::size_t n) { return {Kind::Finite, n}; }
    static DegreeValue unknown() { return {Kind::Unknown, 0}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_neg_inf() const { return kind == Kind::NegInf; }

    /// -inf acts as the additive/maximum identity of the degree calculus.
    friend bool operator<=(const DegreeValue& a, const DegreeValue& b) {
        if (a.kind == Kind::NegInf) return true;
        if (b.kind == Kind::NegInf) return false;
        return a.value <= b.value;
    }
};

/// Replayable outcome of a membership or degree search.
///  - Certified: `degree` is exact; `witness` is a surviving word of that
///    length (empty when degree is 0 or -inf) and every longer word
///    annihilates the element.
///  - Refuted: `periodic` is an eventually-periodic schedule whose trace
///    provably cycles through nonzero values.
///  - Inconclusive: the search hit `bound`; `witness` is a longest
///    surviving word found.
struct Certificate {
    Verdict verdict = Verdict::Inconclusive;
    DegreeValue degree;
    std::size_t bound = 0;
    std::vector<std::size_t> witness;
    std::optional<Schedule> periodic;

    static Certificate certified(DegreeValue deg, std::size_t bound,
                                 std::vector<std::size_t> witness = {}) {
        Certificate c;
        c.verdict = Verdict::Certified;
        c.degree = deg;
        c.bound = bound;
        c.witness = std::move(witness);
        return c;
    }

    static Certificate refuted(Schedule sched, std::size_t bound) {
        Certificate c;
        c.verdict = Verdict::Refuted;
        c.bound = bound;
        c.periodic = std::move(sched);
        return c;
    }

    static Certificate inconclusive(std::size_t bound, std::vector<std::size_t> witness = {}) {
        Certificate c;
        c.verdict = Verdict::Inconclusive;
        c.bound = bound;
        c.witness = std::move(witness);
        return c;
    }
};

/// Library-wide default bounds; every report echoes the values in effect.
inline constexpr std::size_t kDefaultDepthBound = 16;
inline constexpr std::size_t kDefaultDimBound = 64;
inline constexpr std::size_t kDefaultNodeBudget = 1u << 20;
inline constexpr std::size_t kDefaultReplaySteps = 4096;

}  // namespace derivlab
