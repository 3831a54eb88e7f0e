#pragma once

#include <map>
#include <utility>

#include "hom3lie/matrix.hpp"
#include "hom3lie/report.hpp"
#include "hom3lie/skew_tensor.hpp"

namespace hom3lie {

/// A 3-Hom-Lie algebra candidate: skew bracket tensor plus twist map.
/// Validity under the Hom-Filippov-Jacobi identity is not a type invariant;
/// it is established by validate_hom_algebra, so the same type can carry
/// inconsistent data for auditing.
struct HomAlgebra {
    SkewTensor3 bracket;
    Matrix alpha;

    int dim() const { return bracket.dim(); }
};

/// Element of the wedge square of the algebra, stored on the s<t pair basis.
class FundamentalObject {
public:
    FundamentalObject() = default;
    explicit FundamentalObject(int dim) : dim_(dim) {}

    int dim() const { return dim_; }

    /// Adds c * (e_s ^ e_t); indices in either order, zero when s == t.
    void add_term(int s, int t, const Rational& c);
    Rational component(int s, int t) const;

    const std::map<std::pair<int, int>, Rational>& components() const { return comps_; }

    bool is_zero() const;
    bool operator==(const FundamentalObject& other) const = default;
    std::string to_string() const;

private:
    int dim_ = 0;
    std::map<std::pair<int, int>, Rational> comps_;
};

/// a ^ b expanded on the pair basis.
FundamentalObject wedge(const Vec& a, const Vec& b);

/// Exhaustive Filippov-Jacobi check (Eq. with alpha = id) over canonical
/// 5-tuples u<v, x<y<z.
Report validate_filippov(const SkewTensor3& bracket);

/// Checks (i) alpha is an algebra map on all basis triples and (ii) the
/// Hom-Filippov-Jacobi identity over canonical 5-tuples.
Report validate_hom_algebra(const HomAlgebra& a);

/// Yau twist: bracket_alpha = alpha o bracket. Preconditions: the bracket
/// satisfies Filippov-Jacobi and alpha is a morphism of it; violations throw
/// PreconditionError naming the witness triple.
HomAlgebra twist_algebra(const SkewTensor3& bracket, const Matrix& alpha);

/// [X,Y]_L = [x1,x2,y1] ^ alpha(y2) + alpha(y1) ^ [x1,x2,y2], extended
/// bilinearly over the stored components.
FundamentalObject fundamental_bracket(const HomAlgebra& a, const FundamentalObject& x,
                                      const FundamentalObject& y);

/// Checks that (wedge^2 g, [.,.]_L, alpha-bar) is a multiplicative
/// Hom-Leibniz algebra on all basis fundamental objects.
Report validate_hom_leibniz(const HomAlgebra& a);

} // namespace hom3lie
