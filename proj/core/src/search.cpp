#include <cosmetry/search.hpp>

#include <cosmetry/alexander.hpp>
#include <cosmetry/casson_walker.hpp>

#include <atomic>
#include <thread>

namespace cosmetry {

namespace {

/// The odd parameter r when the knot is a multiplicity-2 torus knot.
std::optional<Int> torus_two_parameter(const KnotExpr& knot) {
    if (knot.kind() != KnotExpr::Kind::Torus) return std::nullopt;
    Int a = abs(knot.p());
    if (knot.q() == 2) return sgn(knot.p()) > 0 ? a : Int(-a);
    if (a == 2) return sgn(knot.p()) > 0 ? knot.q() : Int(-knot.q());
    return std::nullopt;
}

/// (r, k) when (m; n, n') is exactly a reduced family (b) pair for r.
/// Mirrors (negative r) carry the family at negative slopes only, so they
/// never match the positive enumeration range.
std::optional<std::pair<Int, Int>> family_b_annotation(const std::optional<Int>& r,
                                                       const Int& m, const Int& n,
                                                       const Int& nprime) {
    if (!r) return std::nullopt;
    Int rr = *r;
    if (rr < 3) return std::nullopt;
    // m = r^2 (2k+1) after reduction by 2.
    Int r2 = rr * rr;
    if (m % r2 != 0) return std::nullopt;
    Int odd = m / r2;
    if (odd <= 0 || odd % 2 == 0) return std::nullopt;
    Int k = (odd - 1) / 2;
    Int d = rr * odd;  // r(2k+1)
    Int hi = (d + 1) / 2;
    Int lo = (d - 1) / 2;
    if (d % 2 == 0) return std::nullopt;
    if (n == hi && nprime == lo) return std::make_pair(rr, k);
    return std::nullopt;
}

}  // namespace

std::pair<Slope, Slope> family_b_pair(const Int& r, const Int& k) {
    require(abs(r) >= 3, "family_b_pair: |r| >= 3 violated");
    require(r % 2 != 0, "family_b_pair: r must be odd");
    require(k >= 0, "family_b_pair: k >= 0 violated");
    Int odd = 2 * k + 1;
    Int numerator = 2 * r * r * odd;
    Int d = r * odd;
    Slope plus = reduce_slope(numerator, d + 1);
    Slope minus = reduce_slope(numerator, d - 1);
    require(igcd(numerator, d + 1) == 2 && igcd(numerator, d - 1) == 2,
            "family_b_pair: slopes must reduce by exactly 2");
    return {plus, minus};
}

std::vector<CandidatePair> enumerate_candidates(const KnotExpr& knot, long m_max,
                                                long n_max, unsigned threads) {
    require(m_max >= 1 && n_max >= 1, "enumerate_candidates: bounds must be >= 1");
    if (threads == 0) threads = 1;
    Int a2 = a2_of(knot);
    std::optional<Int> r2 = torus_two_parameter(knot);

    // Independent m-slices; bucket per modulus keeps the merge deterministic.
    std::vector<std::vector<CandidatePair>> buckets(static_cast<std::size_t>(m_max) + 1);
    std::atomic<long> next_m{1};
    auto worker = [&] {
        for (;;) {
            long m_val = next_m.fetch_add(1);
            if (m_val > m_max) return;
            Int m(m_val);
            auto& bucket = buckets[static_cast<std::size_t>(m_val)];
            for (long n_val = 2; n_val <= n_max; ++n_val) {
                Int n(n_val);
                if (igcd(m, n) != 1) continue;
                for (long np_val = 1; np_val < n_val; ++np_val) {
                    Int np(np_val);
                    if (igcd(m, np) != 1) continue;
                    if (!cw_pair_test(a2, m, n, np)) continue;
                    CandidatePair cand;
                    cand.m = m;
                    cand.n = n;
                    cand.nprime = np;
                    cand.passed = {"h1", "cw"};
                    cand.family_b = family_b_annotation(r2, m, n, np);
                    bucket.push_back(std::move(cand));
                }
            }
        }
    };

    if (threads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    std::vector<CandidatePair> out;
    for (auto& bucket : buckets) {
        for (auto& cand : bucket) out.push_back(std::move(cand));
    }
    return out;
}

bool verify_family_b(const Int& r, long k_max) {
    require(k_max >= 0, "verify_family_b: k_max >= 0 violated");
    Int a2 = a2_of(KnotExpr::torus(r, 2));
    for (long k = 0; k <= k_max; ++k) {
        auto [plus, minus] = family_b_pair(r, Int(k));
        require(plus.m() == minus.m(), "verify_family_b: reduced numerators must agree");
        if (!cw_pair_test(a2, plus.m(), plus.n(), minus.n())) return false;
    }
    return true;
}

}  // namespace cosmetry
