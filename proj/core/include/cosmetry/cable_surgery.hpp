#pragma once

#include <cosmetry/dedekind.hpp>
#include <cosmetry/seifert.hpp>
#include <cosmetry/slope.hpp>

#include <string>
#include <variant>

namespace cosmetry {

/// Expresses the outer torus basis ([M], [L]) of a cable space in the
/// section-regular-fiber basis ([c2], [h]):
///   [M] = q [c2] - r [h],  [L] = p [c2] + s [h],  with p r + q s = 1.
/// Always unimodular with determinant +1.
struct OuterBasisMap {
    Int m_c2, m_h;  // row for [M]
    Int l_c2, l_h;  // row for [L]

    Int det() const { return m_c2 * l_h - m_h * l_c2; }
};

/// Writes the peripheral slope m[mu] + n[lambda] of the cabled solid torus
/// in the section-regular-fiber basis of the inner boundary:
/// returns (npq - m, n), the coefficients of [c1] and [h].
std::pair<Int, Int> peripheral_to_fiber(const Int& p, const Int& q, const Int& m,
                                        const Int& n);

/// Basis map for the outer boundary of the cable space C_{p,q}.
OuterBasisMap outer_basis(const Int& p, const Int& q);

/// m/n surgery on the cable is a connected sum with a lens space:
/// companion surgery S^3_K(p/q) # L(q, p).
struct ReducibleSum {
    Slope companion_slope;
    Int lens_q, lens_p;  // symbolic label L(q, p); not classified further
};

/// m/n surgery on the cable is the companion surgery S^3_K(m/(n q^2)).
struct CompanionSurgery {
    Slope slope;
};

/// m/n surgery on the cable is a graph manifold: the companion exterior
/// glued to the Seifert piece M(0,1; r/q, n/(npq-m)) along the outer basis.
struct GraphPiece {
    std::string exterior_label;
    SeifertPiece piece;
    OuterBasisMap gluing;
};

using SurgeryDescription = std::variant<ReducibleSum, CompanionSurgery, GraphPiece>;

/// The trichotomy for surgery on a (p,q)-cable, split on |npq - m|:
/// 0 -> reducible sum, 1 -> companion surgery, >1 -> graph manifold.
SurgeryDescription describe_cable_surgery(const Int& p, const Int& q, const Slope& slope);

/// The Seifert piece M(0,1; r/q, n/(npq-m)) alone; requires |npq - m| > 1.
SeifertPiece surgery_piece(const Int& p, const Int& q, const Int& m, const Int& n);

}  // namespace cosmetry
