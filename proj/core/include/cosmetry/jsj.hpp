#pragma once

#include <cosmetry/seifert.hpp>

#include <string>
#include <variant>
#include <vector>

namespace cosmetry {

/// Oriented torus knot exterior E(T_{p,q}) as a JSJ piece.
///
/// Identifications: E(T_{p,q}) = E(T_{q,p}) = E(T_{-p,-q}) as oriented
/// manifolds; the mirror E(T_{-p,q}) is a different oriented piece. Stored
/// canonically with the smaller multiplicity second and the orientation
/// sign carried by the first parameter.
class TorusExteriorPiece {
public:
    TorusExteriorPiece(Int p, Int q);

    const Int& p() const { return p_; }
    const Int& q() const { return q_; }
    TorusExteriorPiece mirrored() const { return TorusExteriorPiece(-p_, q_); }
    bool has_multiplicity_two() const { return q_ == 2; }
    bool same_unoriented(const TorusExteriorPiece& o) const {
        return abs(p_) == abs(o.p_) && q_ == o.q_;
    }
    friend bool operator==(const TorusExteriorPiece& a, const TorusExteriorPiece& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    std::string str() const;

private:
    Int p_;  // sign(p) is the orientation; |p| is the larger multiplicity
    Int q_;  // smaller multiplicity, >= 2
};

struct CableSpacePiece {
    Int p;
    Int q;
    friend bool operator==(const CableSpacePiece&, const CableSpacePiece&) = default;
    std::string str() const;
};

struct HyperbolicPiece {
    std::string label;
    friend bool operator==(const HyperbolicPiece&, const HyperbolicPiece&) = default;
    std::string str() const;
};

/// Seifert fibered piece over a disk carried verbatim (used for surgery
/// pieces that are not torus knot exteriors).
struct SeifertDisk2Piece {
    SeifertPiece piece;
    friend bool operator==(const SeifertDisk2Piece& a, const SeifertDisk2Piece& b) {
        return sfs_normal_form(a.piece) == sfs_normal_form(b.piece);
    }
    std::string str() const { return piece.str(); }
};

using JsjPiece =
    std::variant<TorusExteriorPiece, CableSpacePiece, HyperbolicPiece, SeifertDisk2Piece>;

std::string piece_str(const JsjPiece& piece);

/// JSJ pieces of a knot exterior ordered from innermost (containing no
/// other piece) to outermost (containing the boundary of the exterior).
using JsjGraph = std::vector<JsjPiece>;

/// Containment queries over a JSJ graph.
class TorusPattern {
public:
    /// Exact oriented piece E(T_{p,q}).
    static TorusPattern exact(const Int& p, const Int& q);
    /// Either orientation of E(T_{p,q}).
    static TorusPattern exact_unoriented(const Int& p, const Int& q);
    /// E(T_{r,2}) for any r, either orientation.
    static TorusPattern any_multiplicity_two();

    bool matches(const JsjPiece& piece) const;

private:
    enum class Kind { Exact, ExactUnoriented, AnyMultiplicityTwo };
    TorusPattern(Kind kind, std::optional<TorusExteriorPiece> target)
        : kind_(kind), target_(std::move(target)) {}
    Kind kind_;
    std::optional<TorusExteriorPiece> target_;
};

bool jsj_contains(const JsjGraph& graph, const TorusPattern& pattern);

}  // namespace cosmetry
