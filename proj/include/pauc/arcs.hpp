#pragma once

// Major arcs M(q, a) = { alpha in [0,1) : |q alpha - a| <= B^(delta-3) } for
// 0 <= a <= q <= B^delta with gcd(a, q) = 1, and their union.

#include <cstdint>
#include <vector>

#include "pauc/exponents.hpp"

namespace pauc {

struct MajorArc {
  u64 q;
  u64 a;
  double center;     // a / q
  double halfwidth;  // B^(delta-3) / q
  double lo;         // clipped to [0, 1)
  double hi;
};

struct Interval {
  double lo;
  double hi;
};

struct ArcDissection {
  double delta = 0;
  u64 B = 0;
  u64 max_q = 0;
  std::vector<MajorArc> arcs;   // sorted by (center, q)
  std::vector<Interval> union_; // disjoint, sorted
  double measure = 0;

  bool in_major(double alpha) const;
};

// Largest q with q <= B^delta.
u64 max_denominator(double delta, u64 B);

ArcDissection build_major_arcs(double delta, u64 B);

// (#first-block n-constraint solutions) * (#second-block m-constraint
// solutions) * mes(M): the triangle-inequality bound for the major-arc part.
struct MajorArcBound {
  u64 first_block = 0;
  u64 second_block = 0;
  double measure = 0;
  double bound = 0;
};

MajorArcBound major_arc_bound(const ExponentTriple& t, double delta, const BoxConfig& box);

struct WeylScan {
  double sup = 0;       // max |f_{3,1}(alpha, beta)| over accepted samples
  double arg_alpha = 0;
  double arg_beta = 0;
  u64 samples = 0;
  u64 rejected = 0;     // draws that fell in the major arcs
  u64 seed = 0;
};

// Sup of |f_{3,1}| over pseudo-random minor-arc alpha and uniform beta,
// deterministic for a fixed seed and independent of width.
WeylScan minor_arc_weyl_scan(double delta, u64 B, u64 samples, u64 seed, unsigned width = 1);

}  // namespace pauc

namespace pauc {

struct SamplePoint {
  double alpha;
  double beta;
};

// The (alpha, beta) draws used by minor_arc_weyl_scan: alpha rejected
// against the dissection, beta uniform, both from a 64-bit Mersenne Twister.
std::vector<SamplePoint> draw_minor_arc_points(const ArcDissection& arcs, u64 samples, u64 seed,
                                               u64* rejected = nullptr);

}  // namespace pauc
