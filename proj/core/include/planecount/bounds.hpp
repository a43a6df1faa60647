#pragma once

#include <optional>
#include <stdexcept>

#include "planecount/plane_graph.hpp"
#include "planecount/rational.hpp"

namespace planecount {

struct InvalidMError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidNError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Verdict on the triangular-face density claim for one embedded graph:
/// under the hypotheses (connected, min degree >= 3, no edge in two
/// triangles), triangular faces number strictly less than 2/3 of all
/// faces, i.e. 3*f3 < 2*f.
///
/// Hypothesis failure is data, not an error: the verdict always carries
/// the counts and the conclusion test, plus a per-hypothesis breakdown.
struct Theorem4Verdict {
    bool hypotheses_hold = false;
    bool connected = false;
    bool min_degree_ok = false;  // min degree >= 3
    bool diamond_free = false;   // no edge lies in two triangles
    GraphCounts counts;
    bool conclusion_holds = false;  // 3*f3 < 2*f, compared in integers
    Rational slack;                 // 2f/3 - f3
};

Theorem4Verdict theorem4_verdict(const PlaneGraph& g);

/// Face-count bound for a plane graph whose non-triangular faces all
/// have length >= m, assuming each edge borders two face sides:
///   raw:    f <= f3 + (2e - 3*f3)/m
///   strict: f <  6e/(m+6), after folding in f3 < 2f/3.
/// Requires m >= 7; the chain degenerates below that.
struct FaceCountBound {
    Rational raw_upper;
    Rational strict_upper;
};

FaceCountBound face_count_bound(int m, long long e, long long f3);

/// Edge bound e < (m+6)(n-2)/m obtained by feeding the strict face bound
/// through Euler's formula e = n + f - 2. Requires m >= 7, n >= 1.
Rational edge_upper_bound(int m, long long n);

/// Minimum edge count of a 4-critical graph: e >= (5n-2)/3.
/// Requires n >= 4 (no 4-critical graph is smaller).
Rational ky_lower_bound(long long n);

/// The generalized bound family parameterized by the minimum
/// non-triangular face length m. Instantiating m = 12, 11, 9 reproduces
/// the classical coefficient triples exactly.
struct BoundChain {
    int m;
    Rational face_coefficient;  // f < face_coefficient * e, equals 6/(m+6)
    Rational edge_slope;        // e < edge_slope * n - edge_offset
    Rational edge_offset;       // slope (m+6)/m, offset 2(m+6)/m

    static BoundChain for_m(int m);
};

/// Compares the 4-critical lower bound (5n-2)/3 against the counting
/// upper bound (m+6)(n-2)/m. When the lower bound is >= the upper bound
/// for every n >= 4, no counterexample of any order survives and
/// always_contradicts is set. Otherwise threshold_n is the least n >= 4
/// at which the bounds stop contradicting, i.e. the order from which the
/// counting argument no longer excludes a counterexample.
struct ContradictionReport {
    int m;
    Rational ky_slope;     // 5/3
    Rational upper_slope;  // (m+6)/m
    bool always_contradicts = false;
    std::optional<long long> threshold_n;
};

ContradictionReport contradiction_report(int m);

}  // namespace planecount
