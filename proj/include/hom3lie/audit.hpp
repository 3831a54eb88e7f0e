#pragma once

#include <string>
#include <vector>

#include "hom3lie/rational.hpp"

namespace hom3lie {

/// One audited claim from the worked examples, with the verdict and a
/// localized identity/witness when the printed data disagrees with the
/// recomputation.
struct AuditFinding {
    std::string claim;
    bool confirmed = false;
    std::string detail;
};

/// Recomputes every worked-example claim from the fixture files under
/// fixtures_dir (fix_a.genrep, fix_b.genrep, fix_c.genrep, fix_a.3hl) over
/// the default instantiation grid. Deterministic output order.
std::vector<AuditFinding> audit_paper(const std::string& fixtures_dir);

/// The parameter binding the audit selects for the fix_c cohomology runs:
/// the first grid point at which the generalized representation validates.
std::map<std::string, Rational> fixc_selected_binding(const std::string& fixtures_dir);

} // namespace hom3lie
