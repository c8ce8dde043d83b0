#pragma once

#include <cosmetry/integer.hpp>

#include <string>

namespace cosmetry {

/// Surgery slope m/n in lowest terms. Canonical form has n >= 1 with the
/// sign carried by m; n = 0 encodes the infinity label only and is never
/// produced by reduction.
class Slope {
public:
    Slope() : m_(1), n_(0) {}

    static Slope reduced(const Int& m, const Int& n);
    static Slope infinity() { return Slope(); }
    /// Parses "m/n", a bare integer "m", or "inf". Unreduced input is
    /// accepted and reduced.
    static Slope parse(const std::string& text);

    const Int& m() const { return m_; }
    const Int& n() const { return n_; }
    bool is_infinity() const { return n_ == 0; }

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.m_ == b.m_ && a.n_ == b.n_;
    }

    std::string str() const;

private:
    Slope(Int m, Int n) : m_(std::move(m)), n_(std::move(n)) {}
    Int m_;
    Int n_;
};

/// Reduces (m, n) to lowest terms with n >= 1. Rejects (0, 0) and, unless
/// the caller asks for the infinity label explicitly, n = 0.
Slope reduce_slope(const Int& m, const Int& n);

}  // namespace cosmetry
