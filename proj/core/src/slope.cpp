#include <cosmetry/slope.hpp>

namespace cosmetry {

Slope Slope::reduced(const Int& m, const Int& n) {
    require(m != 0 || n != 0, "slope: (0, 0) is not a slope");
    require(n != 0, "slope: n = 0 is the infinity label; use Slope::infinity()");
    Int g = igcd(m, n);
    Int rm = m / g;
    Int rn = n / g;
    if (rn < 0) {
        rm = -rm;
        rn = -rn;
    }
    return Slope(std::move(rm), std::move(rn));
}

Slope Slope::parse(const std::string& text) {
    if (text == "inf" || text == "infinity") return infinity();
    auto slash = text.find('/');
    if (slash == std::string::npos) return reduced(Int(text), 1);
    Int m(text.substr(0, slash));
    Int n(text.substr(slash + 1));
    return reduced(m, n);
}

std::string Slope::str() const {
    if (is_infinity()) return "inf";
    return m_.get_str() + "/" + n_.get_str();
}

Slope reduce_slope(const Int& m, const Int& n) { return Slope::reduced(m, n); }

}  // namespace cosmetry
