#pragma once

#include <map>
#include <utility>

#include "hom3lie/algebra.hpp"

namespace hom3lie {

/// rho table: canonical g-pair (i<j) -> m x m matrix. Lookups at swapped or
/// repeated indices are sign-extended / zero.
using RhoTable = std::map<std::pair<int, int>, Matrix>;

/// nu table: generator index -> skew bilinear map on the carrier, stored on
/// canonical carrier pairs (a<b) as coefficient vectors.
using NuTable = std::map<int, std::map<std::pair<int, int>, Vec>>;

Matrix rho_at(const RhoTable& rho, int m, int i, int j);
/// rho(a, b) for coefficient vectors a, b over the algebra.
Matrix rho_apply(const RhoTable& rho, int m, const Vec& a, const Vec& b);
Vec    nu_at(const NuTable& nu, int m, int x, int a, int b);
/// nu(x)(u, w) for a coefficient vector x over the algebra and u, w over the
/// carrier.
Vec    nu_apply(const NuTable& nu, int m, const Vec& x, const Vec& u, const Vec& w);
/// nu at a fixed generator applied to carrier vectors.
Vec    nu_gen_apply(const NuTable& nu, int m, int gen, const Vec& u, const Vec& w);

/// Representation candidate (V, rho, A) of Definition 2.2.
struct Representation {
    int carrier_dim = 0;
    RhoTable rho;
    Matrix endo;

    Matrix rho_matrix(int i, int j) const { return rho_at(rho, carrier_dim, i, j); }
    Matrix rho_vectors(const Vec& a, const Vec& b) const { return rho_apply(rho, carrier_dim, a, b); }
};

/// Generalized representation candidate (V, rho, nu, A).
struct GeneralizedRep {
    int carrier_dim = 0;
    RhoTable rho;
    NuTable nu;
    Matrix endo;

    Matrix rho_matrix(int i, int j) const { return rho_at(rho, carrier_dim, i, j); }
    Matrix rho_vectors(const Vec& a, const Vec& b) const { return rho_apply(rho, carrier_dim, a, b); }
    Vec nu_value(int x, int a, int b) const { return nu_at(nu, carrier_dim, x, a, b); }
    Vec nu_vectors(const Vec& x, const Vec& u, const Vec& w) const { return nu_apply(nu, carrier_dim, x, u, w); }

    bool nu_is_zero() const;
};

GeneralizedRep with_zero_nu(const Representation& r);
Representation forget_nu(const GeneralizedRep& g);

/// Invertible carrier map T witnessing equivalence of two generalized
/// representations.
struct EquivalenceWitness {
    Matrix t;
};

/// ad(x1,x2)y = [x1,x2,y] on carrier g with endomorphism alpha. Requires a
/// valid algebra.
Representation adjoint_rep(const HomAlgebra& a);

/// Checks Definition 2.2: Eq. (5) on canonical pairs plus Eqs. (6), (7) on
/// basis 4-tuples. Violations are tagged Def2.2-Eq(5|6|7).
Report validate_representation(const HomAlgebra& a, const Representation& r);

/// Twists a representation of a 3-Lie algebra along a morphism: returns
/// (A o rho, A) for the twisted algebra alpha o bracket. Preconditions:
/// bracket is 3-Lie, alpha is a morphism, (rho) is a 3-Lie representation,
/// and A o rho(x1,x2) = rho(alpha x1, alpha x2) o A on all canonical pairs.
Representation twist_representation(const SkewTensor3& bracket, const Representation& r, const Matrix& alpha);

/// Semidirect-product bracket on g (+) V with twist alpha (+) A. Validity of
/// r is deliberately not required (the equivalence with
/// validate_representation is a theorem, exercised by the property suite).
HomAlgebra semidirect(const HomAlgebra& a, const Representation& r);

/// Checks the generalized-representation conditions: the rho and nu
/// compatibility with A (the cochain-space membership of pi+rho-bar+nu-bar)
/// plus the six equation families, tagged GenRep-eq1..eq6.
Report validate_generalized_rep(const HomAlgebra& a, const GeneralizedRep& g);

/// Generalized semidirect product bracket on g (+) V, twist alpha (+) A.
HomAlgebra generalized_semidirect(const HomAlgebra& a, const GeneralizedRep& g);

struct TwistedGenRep {
    HomAlgebra algebra; // ([.,.,.] o beta^x3, beta o alpha)
    GeneralizedRep rep; // (B o rho, B o nu, B)
};

/// Twist of a generalized representation along (beta, B). Preconditions
/// (each reported with its witness on failure): beta is a morphism of a's
/// bracket, B o rho = rho(beta.,beta.) o B, B o nu = nu(beta.) o (B x B),
/// and B o A = A o B.
TwistedGenRep twist_generalized_rep(const HomAlgebra& a, const GeneralizedRep& g, const Matrix& beta,
                                    const Matrix& b);

/// Checks T rho1 = rho2 T, T nu1 = nu2 (T x T), T A1 = A2 T.
/// A singular witness is an input error.
Report equivalent_genreps(const GeneralizedRep& g1, const GeneralizedRep& g2, const EquivalenceWitness& w);

namespace detail {
/// Generalized semidirect bracket with an omega correction on the all-g
/// cells (the extension bracket); omega cells are fiber-valued.
HomAlgebra product_with_omega(const HomAlgebra& a, const GeneralizedRep& g, const SkewTensor3& omega);
} // namespace detail

} // namespace hom3lie
