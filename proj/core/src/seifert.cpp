#include <cosmetry/seifert.hpp>

#include <algorithm>
#include <sstream>

namespace cosmetry {

namespace {

void check_disk_piece(const SeifertPiece& p) {
    require(p.genus == 0, "seifert: only genus-0 pieces are supported");
    require(p.boundary_components >= 1, "seifert: boundary_components >= 1 violated");
}

SeifertPiece negated(const SeifertPiece& p) {
    SeifertPiece q = p;
    for (auto& rho : q.fibers) rho = -rho;
    return q;
}

bool congruence_holds(const Int& factor, const Int& residue, const Int& modulus) {
    return mod_floor(factor * residue, modulus) == mod_floor(Int(1), modulus);
}

}  // namespace

std::string SeifertPiece::str() const {
    std::ostringstream os;
    os << "M(" << genus << "," << boundary_components << ";";
    for (std::size_t i = 0; i < fibers.size(); ++i) {
        if (i) os << ",";
        os << fibers[i].str();
    }
    os << ")";
    return os.str();
}

SeifertPiece sfs_disk(std::vector<Rational> fibers) {
    SeifertPiece p;
    p.genus = 0;
    p.boundary_components = 1;
    p.fibers = std::move(fibers);
    return p;
}

std::vector<FiberResidue> sfs_normal_form(const SeifertPiece& piece) {
    check_disk_piece(piece);
    std::vector<FiberResidue> nf;
    for (const Rational& rho : piece.fibers) {
        Int alpha = rho.denominator();
        if (alpha == 1) continue;  // regular fiber
        nf.emplace_back(alpha, mod_floor(rho.numerator(), alpha));
    }
    std::sort(nf.begin(), nf.end());
    return nf;
}

bool sfs_equivalent(const SeifertPiece& a, const SeifertPiece& b, Orientation how) {
    check_disk_piece(a);
    check_disk_piece(b);
    require(a.boundary_components == 1 && b.boundary_components == 1,
            "seifert: equivalence implemented for one boundary component only");
    if (how == Orientation::Same) return sfs_normal_form(a) == sfs_normal_form(b);
    return sfs_normal_form(a) == sfs_normal_form(negated(b));
}

std::optional<std::pair<Int, Int>> recognize_torus_exterior(const SeifertPiece& piece) {
    check_disk_piece(piece);
    require(piece.boundary_components == 1,
            "seifert: torus exterior recognition needs one boundary component");

    // Exceptional fibers in input order; the first is matched to the
    // Q-fiber so reconstruction is deterministic.
    std::vector<FiberResidue> ex;
    for (const Rational& rho : piece.fibers) {
        Int alpha = rho.denominator();
        if (alpha == 1) continue;
        ex.emplace_back(alpha, mod_floor(rho.numerator(), alpha));
    }
    require(ex.size() == 2, "seifert: recognition needs exactly two exceptional fibers");

    const Int& Q = ex[0].first;
    const Int& P = ex[1].first;
    if (igcd(P, Q) != 1) return std::nullopt;

    for (int orient : {1, -1}) {
        Int R = orient == 1 ? ex[0].second : mod_floor(-ex[0].second, Q);
        Int S = orient == 1 ? ex[1].second : mod_floor(-ex[1].second, P);
        if (congruence_holds(P, R, Q) && congruence_holds(Q, S, P)) {
            return std::make_pair(Int(orient * P), Q);
        }
    }
    return std::nullopt;
}

}  // namespace cosmetry
