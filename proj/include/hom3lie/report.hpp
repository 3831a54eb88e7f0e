#pragma once

#include <string>
#include <vector>

namespace hom3lie {

/// One violated identity: which one, at which basis tuple, and the two sides
/// that failed to agree.
struct Violation {
    std::string identity;
    std::string witness;
    std::string left;
    std::string right;
};

/// Outcome of a validator. pass() iff no violations were recorded; failure is
/// data, not an error.
struct Report {
    std::vector<Violation> violations;

    bool pass() const { return violations.empty(); }
    void add(std::string identity, std::string witness, std::string left, std::string right) {
        violations.push_back({std::move(identity), std::move(witness), std::move(left), std::move(right)});
    }
    void merge(const Report& other) {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
    std::string summary() const;
};

} // namespace hom3lie
