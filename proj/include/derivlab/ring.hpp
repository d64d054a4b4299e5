#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "derivlab/errors.hpp"
#include "derivlab/field.hpp"
#include "derivlab/monomial.hpp"

namespace derivlab {

/// Ambient polynomial ring descriptor: coefficient field plus the named
/// variables in use. Variables are indexed 0..var_count()-1 internally;
/// names are presentation only. Rings with infinitely many variables are
/// always handled through a finite truncation that lists every variable a
/// computation can touch.
template <class F>
class Ring {
public:
    Ring(F field, std::vector<std::string> variable_names)
        : field_(std::move(field)), names_(std::move(variable_names)) {
        for (VarIndex i = 0; i < names_.size(); ++i) {
            if (!index_.emplace(names_[i], i).second)
                throw std::invalid_argument("duplicate variable name: " + names_[i]);
        }
    }

    const F& field() const { return field_; }
    std::size_t var_count() const { return names_.size(); }
    const std::string& var_name(VarIndex i) const { return names_.at(i); }
    const std::vector<std::string>& var_names() const { return names_; }

    std::optional<VarIndex> find_var(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    bool operator==(const Ring& other) const {
        return field_ == other.field_ && names_ == other.names_;
    }

private:
    F field_;
    std::vector<std::string> names_;
    std::map<std::string, VarIndex> index_;
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(F field, std::vector<std::string> variable_names) {
    return std::make_shared<const Ring<F>>(std::move(field), std::move(variable_names));
}

template <class F>
bool same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
    return a == b || (a && b && *a == *b);
}

template <class F>
void require_same_ring(const RingPtr<F>& a, const RingPtr<F>& b, const char* what) {
    if (!same_ring(a, b))
        throw ring_mismatch_error(std::string(what) + ": operands live in different rings");
}

}  // namespace derivlab
