#pragma once

#include <cosmetry/jsj.hpp>
#include <cosmetry/laurent.hpp>

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace cosmetry {

/// Declared invariants of a knot the library cannot look inside.
struct OpaqueData {
    std::string name;
    std::optional<Int> a2;
    std::optional<LaurentPoly> alexander;
    bool hyperbolic = false;
    std::vector<JsjPiece> declared_jsj;
};

/// Recursive knot description: unknot, torus knot, cable of a knot, or an
/// opaque companion with declared invariants.
///
/// Normalizations applied at construction: torus knots with a trivial
/// parameter collapse to the unknot, T_{p,q} = T_{-p,-q}, and cables must
/// have wrapping number q >= 2 (a q = 1 cable would be the companion
/// itself and is rejected).
class KnotExpr {
public:
    enum class Kind { Unknot, Torus, Cable, Opaque };

    static KnotExpr unknot();
    static KnotExpr torus(Int p, Int q);
    static KnotExpr cable(const Int& p, const Int& q, KnotExpr companion);
    static KnotExpr opaque(OpaqueData data);

    Kind kind() const;
    bool is_trivial() const { return kind() == Kind::Unknot; }

    /// Torus or cable parameters.
    const Int& p() const;
    const Int& q() const;
    KnotExpr companion() const;
    const OpaqueData& opaque_data() const;

    /// Grammar text this expression parses back from.
    std::string str() const;

    friend bool operator==(const KnotExpr& a, const KnotExpr& b);

private:
    struct Node;
    explicit KnotExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// Parses the knot-expression grammar:
///   knot    := "unknot" | "torus(" int "," int ")"
///            | "cable(" int "," int ";" knot ")" | opaque
///   opaque  := "opaque(" name { ";" attr } ")"
///   attr    := "a2=" int | "hyperbolic" | "jsj=[" piece {"," piece} "]"
///   piece   := "torus_ext(" int "," int ")" | "cable_space(" int "," int ")" | "hyp"
/// Whitespace is insignificant; integers may be negative. "," is accepted
/// as an attribute separator alongside ";", and a leading attribute in
/// place of the name is allowed.
KnotExpr parse_knot(const std::string& expr);

/// JSJ pieces of the knot exterior E(K), innermost first:
///   unknot -> [];  torus(p,q) -> [E(T_{p,q})];
///   cable(p,q; J) -> jsj_graph(J) ++ [C_{p,q}];
///   opaque -> declared pieces (or a single hyperbolic piece).
JsjGraph jsj_graph(const KnotExpr& knot);

}  // namespace cosmetry
