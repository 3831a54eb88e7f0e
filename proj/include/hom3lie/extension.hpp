#pragma once

#include "hom3lie/representation.hpp"

namespace hom3lie {

/// Abelian-extension data on g (+) V coordinates: the base algebra, a
/// generalized-representation candidate and a fully skew omega on ^3 g valued
/// in V (stored as a SkewTensor3 of the base dimension whose cells have
/// fiber length).
struct ExtensionData {
    HomAlgebra base;
    int fiber_dim = 0;
    GeneralizedRep genrep;
    SkewTensor3 omega; // dim = base dim; cell vectors have length fiber_dim

    /// omega(x, y, z) for coefficient vectors over the base.
    Vec omega_v(const Vec& x, const Vec& y, const Vec& z) const;
};

/// Section data for splitting an extension living on a possibly rearranged
/// copy of g (+) V: sigma embeds the base, projection kills the fiber,
/// inclusion embeds the fiber.
struct SectionWitness {
    Matrix sigma;      // (n+m) x n
    Matrix projection; // n x (n+m)
    Matrix inclusion;  // (n+m) x m
};

/// Morphism candidate between two extensions on g (+) V coordinates.
struct ExtensionMorphism {
    Matrix phi; // (n+m) x (n+m)
};

/// Brute-force check of the extension identities: (t1), (t2), (t3) plus the
/// nu families eq3..eq6, tagged per identity.
Report validate_extension_triple(const ExtensionData& e);

/// The (rho, nu, omega) bracket on g (+) V with twist alpha (+) A.
HomAlgebra build_extension_bracket(const ExtensionData& e);

/// Extracts (rho, nu, omega, A) from an extension algebra through a section.
/// Input errors on violated witness invariants; precondition error when the
/// fiber is not an abelian ideal.
ExtensionData split_extension_data(const HomAlgebra& ext, const SectionWitness& w);

/// Checks that phi is a 3-Hom-Lie morphism intertwining the twists and makes
/// the two extension squares commute (phi o i1 = i2, p2 o phi = p1 for the
/// canonical block maps).
Report check_extension_equivalence(const HomAlgebra& e1, const HomAlgebra& e2, int base_dim,
                                   const ExtensionMorphism& m);

} // namespace hom3lie
