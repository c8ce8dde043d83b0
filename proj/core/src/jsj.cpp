#include <cosmetry/jsj.hpp>

#include <sstream>

namespace cosmetry {

TorusExteriorPiece::TorusExteriorPiece(Int p, Int q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    int orient = sgn(p);
    Int a = abs(p);
    require(orient != 0 && q != 0, "torus exterior: parameters must be nonzero");
    require(a >= 2 && q >= 2, "torus exterior: both multiplicities must be >= 2");
    require(igcd(a, q) == 1, "torus exterior: multiplicities must be coprime");
    if (a < q) std::swap(a, q);
    p_ = orient == 1 ? a : Int(-a);
    q_ = q;
}

std::string TorusExteriorPiece::str() const {
    return "torus_ext(" + p_.get_str() + "," + q_.get_str() + ")";
}

std::string CableSpacePiece::str() const {
    return "cable_space(" + p.get_str() + "," + q.get_str() + ")";
}

std::string HyperbolicPiece::str() const {
    return label.empty() ? "hyp" : "hyp(" + label + ")";
}

std::string piece_str(const JsjPiece& piece) {
    return std::visit([](const auto& p) { return p.str(); }, piece);
}

TorusPattern TorusPattern::exact(const Int& p, const Int& q) {
    return TorusPattern(Kind::Exact, TorusExteriorPiece(p, q));
}

TorusPattern TorusPattern::exact_unoriented(const Int& p, const Int& q) {
    return TorusPattern(Kind::ExactUnoriented, TorusExteriorPiece(p, q));
}

TorusPattern TorusPattern::any_multiplicity_two() {
    return TorusPattern(Kind::AnyMultiplicityTwo, std::nullopt);
}

bool TorusPattern::matches(const JsjPiece& piece) const {
    const auto* te = std::get_if<TorusExteriorPiece>(&piece);
    if (te == nullptr) return false;
    switch (kind_) {
        case Kind::Exact:
            return *te == *target_;
        case Kind::ExactUnoriented:
            return te->same_unoriented(*target_);
        case Kind::AnyMultiplicityTwo:
            return te->has_multiplicity_two();
    }
    return false;
}

bool jsj_contains(const JsjGraph& graph, const TorusPattern& pattern) {
    for (const JsjPiece& piece : graph) {
        if (pattern.matches(piece)) return true;
    }
    return false;
}

}  // namespace cosmetry
