#include <cosmetry/knot.hpp>

#include <cctype>
#include <sstream>

namespace cosmetry {

struct KnotExpr::Node {
    Kind kind = Kind::Unknot;
    Int p = 0;
    Int q = 0;
    std::shared_ptr<const Node> companion;
    OpaqueData opaque;
};

KnotExpr KnotExpr::unknot() {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Unknot;
    return KnotExpr(std::move(node));
}

KnotExpr KnotExpr::torus(Int p, Int q) {
    if (q < 0) {
        p = -p;
        q = -q;
    }
    // T_{p,q} = T_{q,p}; a parameter of absolute value <= 1 gives the unknot.
    if (q == 0) {
        require(abs(p) == 1, "torus knot: gcd(p, q) = 1 violated");
        return unknot();
    }
    if (q == 1 || abs(p) <= 1) {
        require(igcd(p, q) == 1, "torus knot: gcd(p, q) = 1 violated");
        return unknot();
    }
    require(igcd(p, q) == 1, "torus knot: gcd(p, q) = 1 violated");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Torus;
    node->p = p;
    node->q = q;
    return KnotExpr(std::move(node));
}

KnotExpr KnotExpr::cable(const Int& p, const Int& q, KnotExpr companion) {
    require(q >= 2, "cable: wrapping number q >= 2 violated");
    require(igcd(p, q) == 1, "cable: gcd(p, q) = 1 violated");
    auto node = std::make_shared<Node>();
    node->kind = Kind::Cable;
    node->p = p;
    node->q = q;
    node->companion = companion.node_;
    return KnotExpr(std::move(node));
}

KnotExpr KnotExpr::opaque(OpaqueData data) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Opaque;
    node->opaque = std::move(data);
    return KnotExpr(std::move(node));
}

KnotExpr::Kind KnotExpr::kind() const { return node_->kind; }

const Int& KnotExpr::p() const {
    require(node_->kind == Kind::Torus || node_->kind == Kind::Cable,
            "knot: p is defined for torus and cable expressions only");
    return node_->p;
}

const Int& KnotExpr::q() const {
    require(node_->kind == Kind::Torus || node_->kind == Kind::Cable,
            "knot: q is defined for torus and cable expressions only");
    return node_->q;
}

KnotExpr KnotExpr::companion() const {
    require(node_->kind == Kind::Cable, "knot: only cables have companions");
    return KnotExpr(node_->companion);
}

const OpaqueData& KnotExpr::opaque_data() const {
    require(node_->kind == Kind::Opaque, "knot: not an opaque expression");
    return node_->opaque;
}

std::string KnotExpr::str() const {
    switch (node_->kind) {
        case Kind::Unknot:
            return "unknot";
        case Kind::Torus:
            return "torus(" + node_->p.get_str() + "," + node_->q.get_str() + ")";
        case Kind::Cable:
            return "cable(" + node_->p.get_str() + "," + node_->q.get_str() + ";" +
                   KnotExpr(node_->companion).str() + ")";
        case Kind::Opaque: {
            std::ostringstream os;
            os << "opaque(" << node_->opaque.name;
            if (node_->opaque.a2) os << ";a2=" << node_->opaque.a2->get_str();
            if (node_->opaque.hyperbolic) os << ";hyperbolic";
            if (!node_->opaque.declared_jsj.empty()) {
                os << ";jsj=[";
                for (std::size_t i = 0; i < node_->opaque.declared_jsj.size(); ++i) {
                    if (i) os << ",";
                    os << piece_str(node_->opaque.declared_jsj[i]);
                }
                os << "]";
            }
            os << ")";
            return os.str();
        }
    }
    return {};
}

bool operator==(const KnotExpr& a, const KnotExpr& b) { return a.str() == b.str(); }

namespace {

// Minimal recursive-descent parser for the knot grammar.
class Parser {
public:
    explicit Parser(const std::string& text) : text_(text) {}

    KnotExpr parse() {
        KnotExpr k = knot();
        skip_ws();
        require(pos_ == text_.size(), "knot parse: trailing input after expression");
        return k;
    }

private:
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) {
            throw domain_error(std::string("knot parse: expected '") + c + "'");
        }
        ++pos_;
    }

    bool try_consume(char c) {
        if (!peek_is(c)) return false;
        ++pos_;
        return true;
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' ||
                text_[pos_] == '-')) {
            // A bare '-' starts an integer, not an identifier.
            if (text_[pos_] == '-' && pos_ == start) break;
            ++pos_;
        }
        require(pos_ > start, "knot parse: identifier expected");
        return text_.substr(start, pos_ - start);
    }

    Int integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        require(pos_ > start && std::isdigit(static_cast<unsigned char>(text_[pos_ - 1])),
                "knot parse: integer expected");
        return Int(text_.substr(start, pos_ - start));
    }

    KnotExpr knot() {
        std::string head = ident();
        if (head == "unknot") return KnotExpr::unknot();
        if (head == "torus") {
            expect('(');
            Int p = integer();
            expect(',');
            Int q = integer();
            expect(')');
            return KnotExpr::torus(p, q);
        }
        if (head == "cable") {
            expect('(');
            Int p = integer();
            expect(',');
            Int q = integer();
            expect(';');
            KnotExpr companion = knot();
            expect(')');
            return KnotExpr::cable(p, q, companion);
        }
        if (head == "opaque") return opaque();
        throw domain_error("knot parse: unknown expression '" + head + "'");
    }

    JsjPiece jsj_piece() {
        std::string head = ident();
        if (head == "hyp") return HyperbolicPiece{};
        if (head == "torus_ext") {
            expect('(');
            Int p = integer();
            expect(',');
            Int q = integer();
            expect(')');
            return TorusExteriorPiece(p, q);
        }
        if (head == "cable_space") {
            expect('(');
            Int p = integer();
            expect(',');
            Int q = integer();
            expect(')');
            require(q >= 2, "cable space: q >= 2 violated");
            require(igcd(p, q) == 1, "cable space: gcd(p, q) = 1 violated");
            return CableSpacePiece{p, q};
        }
        throw domain_error("knot parse: unknown JSJ piece '" + head + "'");
    }

    void attribute(OpaqueData& data, const std::string& key) {
        if (key == "hyperbolic") {
            data.hyperbolic = true;
            return;
        }
        if (key == "a2") {
            expect('=');
            data.a2 = integer();
            return;
        }
        if (key == "jsj") {
            expect('=');
            expect('[');
            data.declared_jsj.push_back(jsj_piece());
            while (try_consume(',')) data.declared_jsj.push_back(jsj_piece());
            expect(']');
            return;
        }
        throw domain_error("knot parse: unknown opaque attribute '" + key + "'");
    }

    KnotExpr opaque() {
        expect('(');
        OpaqueData data;
        std::string head = ident();
        if (head == "hyperbolic" || head == "a2" || head == "jsj") {
            data.name = "opaque";
            attribute(data, head);
        } else {
            data.name = head;
        }
        while (try_consume(';') || try_consume(',')) {
            attribute(data, ident());
        }
        expect(')');
        return KnotExpr::opaque(std::move(data));
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_knot(const std::string& expr) { return Parser(expr).parse(); }

JsjGraph jsj_graph(const KnotExpr& knot) {
    switch (knot.kind()) {
        case KnotExpr::Kind::Unknot:
            return {};
        case KnotExpr::Kind::Torus:
            return {TorusExteriorPiece(knot.p(), knot.q())};
        case KnotExpr::Kind::Cable: {
            JsjGraph g = jsj_graph(knot.companion());
            g.push_back(CableSpacePiece{knot.p(), knot.q()});
            return g;
        }
        case KnotExpr::Kind::Opaque: {
            const OpaqueData& data = knot.opaque_data();
            if (!data.declared_jsj.empty()) return data.declared_jsj;
            require(data.hyperbolic,
                    "jsj: opaque companion needs hyperbolic=true or a declared JSJ list");
            return {HyperbolicPiece{data.name}};
        }
    }
    return {};
}

}  // namespace cosmetry
