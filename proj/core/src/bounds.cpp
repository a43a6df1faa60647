#include "planecount/bounds.hpp"

#include <string>

#include "planecount/structure.hpp"

namespace planecount {

namespace {

void require_m(int m) {
    if (m < 7)
        throw InvalidMError("bounds: m must be >= 7 (non-triangular faces shorter than "
                            "7 make the chain vacuous), got " + std::to_string(m));
}

}  // namespace

Theorem4Verdict theorem4_verdict(const PlaneGraph& g) {
    Theorem4Verdict v;
    v.counts = counts(g);
    v.connected = true;  // PlaneGraph construction rejects disconnected input
    v.min_degree_ok = min_degree(g) >= 3;
    v.diamond_free = !adjacent_triangles_exist(g.graph()).exists;
    v.hypotheses_hold = v.connected && v.min_degree_ok && v.diamond_free;
    v.conclusion_holds = 3 * v.counts.f3 < 2 * v.counts.f;
    v.slack = Rational(2 * v.counts.f, 3) - Rational(v.counts.f3);
    return v;
}

FaceCountBound face_count_bound(int m, long long e, long long f3) {
    require_m(m);
    if (e < 0 || f3 < 0)
        throw InvalidNError("face_count_bound: negative count");
    FaceCountBound b;
    b.raw_upper = Rational(f3) + Rational(2 * e - 3 * f3, m);
    b.strict_upper = Rational(6 * e, m + 6);
    return b;
}

Rational edge_upper_bound(int m, long long n) {
    require_m(m);
    if (n < 1)
        throw InvalidNError("edge_upper_bound: n must be >= 1");
    return Rational(static_cast<long long>(m) + 6) * Rational(n - 2) / Rational(m);
}

Rational ky_lower_bound(long long n) {
    if (n < 4)
        throw InvalidNError("ky_lower_bound: no 4-critical graph has fewer than 4 vertices");
    return Rational(5 * n - 2, 3);
}

BoundChain BoundChain::for_m(int m) {
    require_m(m);
    BoundChain c;
    c.m = m;
    c.face_coefficient = Rational(6, m + 6);
    c.edge_slope = Rational(static_cast<long long>(m) + 6, m);
    c.edge_offset = Rational(2 * (static_cast<long long>(m) + 6), m);
    return c;
}

ContradictionReport contradiction_report(int m) {
    require_m(m);
    ContradictionReport r;
    r.m = m;
    r.ky_slope = Rational(5, 3);
    r.upper_slope = Rational(static_cast<long long>(m) + 6, m);

    auto contradicts_at = [m](long long n) {
        return ky_lower_bound(n) >= edge_upper_bound(m, n);
    };

    if (r.upper_slope <= r.ky_slope) {
        // The gap ky(n) - upper(n) is nondecreasing in n, so checking the
        // smallest order settles every order.
        if (contradicts_at(4)) {
            r.always_contradicts = true;
            return r;
        }
        r.threshold_n = 4;
        return r;
    }
    // Upper bound grows faster: the contradiction must eventually fail.
    // ky(n) >= upper(n) rearranges to n*(2m-18) >= -4m-36 with 2m-18 < 0,
    // so it holds exactly for n <= (4m+36)/(18-2m).
    Rational last_covered = Rational(4 * static_cast<long long>(m) + 36, 18 - 2 * static_cast<long long>(m));
    long long first_fail = last_covered.floor() + 1;
    if (first_fail < 4)
        first_fail = 4;
    r.threshold_n = first_fail;
    return r;
}

}  // namespace planecount
