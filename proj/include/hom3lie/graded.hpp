#pragma once

#include "hom3lie/cochain.hpp"
#include "hom3lie/representation.hpp"

namespace hom3lie {

/// pi + rho-bar + nu-bar as a degree-1 dense cochain on h = g (+) V valued in
/// h. Restricting every slot to g recovers the bracket; pure-V slots give 0.
DenseCochain lift_structure(const HomAlgebra& a, const GeneralizedRep& g);

/// The composition phi o_alpha psi underlying the graded bracket. For each
/// p-subset J of the p+q slots (psi eats the J slots) the inner value is
/// inserted, via the bullet product, into every remaining slot above max J
/// (every slot when J is empty), plus the final-slot substitution term; both
/// carry the shuffle sign of (J, I). Surviving slots, bullet partners and the
/// first-sum final argument are decorated with alpha^max(p,1).
DenseCochain graded_compose(const DenseCochain& phi, const DenseCochain& psi, const Matrix& alpha_h);

/// [phi,psi] = (-1)^{pq} phi o psi - psi o phi.
DenseCochain graded_bracket(const DenseCochain& phi, const DenseCochain& psi, const Matrix& alpha_h);

/// Canonical-structure test for a degree-1 cochain s valued in the host:
/// s must lie in the alpha-compatible cochain space and satisfy [s,s] = 0.
/// Both failure modes are reported with witness keys.
Report is_canonical(const DenseCochain& s, const Matrix& alpha_h);

/// Ordinary coboundary operator on cochains over g valued in the carrier of
/// r. Requires the compatibility constraint (A o phi = phi o alpha-shift);
/// output has one more wedge-square slot and satisfies the constraint again.
DenseCochain delta_rho(const HomAlgebra& a, const Representation& r, const DenseCochain& phi);

/// Generalized differential d(phi) = [pi + rho-bar + nu-bar, phi] with the
/// target projected back to V. phi lives on g (+) V, is valued in V, must
/// vanish on all-V keys and satisfy the compatibility constraint.
DenseCochain differential_d(const HomAlgebra& a, const GeneralizedRep& g, const DenseCochain& phi);

/// Basis of the space of degree-p cochains (p wedge-square slots) satisfying
/// {compatibility, all-V-keys = 0, d(phi) = 0}. Supported degrees: 0, 1, 2.
std::vector<DenseCochain> cocycle_space(const HomAlgebra& a, const GeneralizedRep& g, int degree);

enum class CohomologyFlavor { ordinary, generalized };

struct CohomologyDims {
    int z = 0;
    int b = 0;
    int h = 0;
};

/// Dimensions (dim Z^p, dim B^p, dim H^p) of the p-th cohomology group,
/// where p counts cocycles in the paper's grading (a p-cocycle is a cochain
/// with p-1 wedge-square slots killed by the differential). Generalized
/// flavor supports p in {1,2,3}; ordinary supports p in {1,2,3}.
CohomologyDims cohomology_dims(const HomAlgebra& a, const GeneralizedRep& g, int p, CohomologyFlavor flavor);

/// Basis of {compatibility and membership} at the given degree; the solve
/// space behind cocycle_space and the coboundary ranks (exposed for tests).
std::vector<DenseCochain> admissible_cochain_basis(const HomAlgebra& a, const GeneralizedRep& g, int degree);
std::vector<DenseCochain> ordinary_cochain_basis(const HomAlgebra& a, const Representation& r, int degree);

/// Flattens a cochain table into one coefficient vector (tests, span checks).
Vec flatten(const DenseCochain& phi);

} // namespace hom3lie
