#pragma once

#include <cosmetry/rational.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cosmetry {

/// Seifert fibered piece M(0, b; rho_1, ..., rho_n) over a genus-0 base.
///
/// Convention: each fiber fraction rho = beta/alpha is stored exactly; the
/// multiplicity of the exceptional fiber is the positive denominator alpha
/// of rho in lowest terms, and the filling slope is alpha*c + beta*h in the
/// section-regular-fiber basis. Orientation is folded into the signs of the
/// fractions; reversing orientation negates every rho.
struct SeifertPiece {
    int genus = 0;
    int boundary_components = 1;
    std::vector<Rational> fibers;

    std::string str() const;
};

/// M(0, 1; fractions...).
SeifertPiece sfs_disk(std::vector<Rational> fibers);

/// One exceptional fiber reduced mod 1: (multiplicity, residue) with
/// 0 <= residue < multiplicity.
using FiberResidue = std::pair<Int, Int>;

/// Multiset of (multiplicity, residue) pairs, sorted. Fibers with
/// multiplicity 1 are regular and are dropped. Integer parts of the
/// fractions are absorbed by section changes, so only residues mod 1
/// matter for comparison.
std::vector<FiberResidue> sfs_normal_form(const SeifertPiece& piece);

enum class Orientation { Same, Reversed };

/// Compares two one-boundary genus-0 pieces by their fiber residues.
/// Orientation::Reversed negates every fraction of the second piece first.
bool sfs_equivalent(const SeifertPiece& a, const SeifertPiece& b, Orientation how);

/// Recognizes a disk-base piece with exactly two exceptional fibers as an
/// oriented torus knot exterior. Returns (P, Q) such that the piece is
/// E(T_{P,Q}): the residues (R, S) read off the two fibers must satisfy
/// P*R = 1 (mod Q) and Q*S = 1 (mod P). When instead the negated residues
/// satisfy the congruences the piece is the mirror and (-P, Q) is returned.
/// Returns nothing when the multiplicities are not coprime or no
/// orientation matches.
std::optional<std::pair<Int, Int>> recognize_torus_exterior(const SeifertPiece& piece);

}  // namespace cosmetry
