#include "pauc/arcs.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"
#include "pauc/parallel.hpp"
#include "pauc/tally.hpp"
#include "pauc/weyl.hpp"

namespace pauc {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0 / 3.0)) throw ValidationError("delta must lie in (0, 1/3)");
}

double unit_draw(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

bool ArcDissection::in_major(double alpha) const {
  auto it = std::upper_bound(union_.begin(), union_.end(), alpha,
                             [](double a, const Interval& iv) { return a < iv.lo; });
  if (it == union_.begin()) return false;
  --it;
  return alpha <= it->hi;
}

u64 max_denominator(double delta, u64 B) {
  // Relative slack absorbs pow() rounding when B^delta is an integer.
  const double bound = std::pow(static_cast<double>(B), delta) * (1.0 + 1e-12);
  return std::max<u64>(1, static_cast<u64>(std::floor(bound)));
}

ArcDissection build_major_arcs(double delta, u64 B) {
  require_delta(delta);
  if (B < 1) throw ValidationError("box bound B must be >= 1");
  ArcDissection d;
  d.delta = delta;
  d.B = B;
  d.max_q = max_denominator(delta, B);
  const double width = std::pow(static_cast<double>(B), delta - 3.0);
  for (u64 q = 1; q <= d.max_q; ++q) {
    for (u64 a = 0; a <= q; ++a) {
      if (gcd(a, q) != 1) continue;
      const double center = static_cast<double>(a) / static_cast<double>(q);
      const double hw = width / static_cast<double>(q);
      d.arcs.push_back({q, a, center, hw, std::max(0.0, center - hw), std::min(1.0, center + hw)});
    }
  }
  std::sort(d.arcs.begin(), d.arcs.end(), [](const MajorArc& x, const MajorArc& y) {
    return x.center < y.center || (x.center == y.center && x.q < y.q);
  });

  std::vector<Interval> pieces;
  pieces.reserve(d.arcs.size());
  for (const auto& arc : d.arcs) pieces.push_back({arc.lo, arc.hi});
  std::sort(pieces.begin(), pieces.end(), [](const Interval& x, const Interval& y) { return x.lo < y.lo; });
  for (const auto& p : pieces) {
    if (!d.union_.empty() && p.lo <= d.union_.back().hi)
      d.union_.back().hi = std::max(d.union_.back().hi, p.hi);
    else
      d.union_.push_back(p);
  }
  std::vector<double> lengths;
  lengths.reserve(d.union_.size());
  for (const auto& iv : d.union_) lengths.push_back(iv.hi - iv.lo);
  d.measure = pairwise_sum(lengths);
  return d;
}

MajorArcBound major_arc_bound(const ExponentTriple& t, double delta, const BoxConfig& box) {
  box.validate();
  MajorArcBound r;
  r.first_block = count_single(t.n, 3, box);
  r.second_block = count_single(t.m, 2, box);
  r.measure = build_major_arcs(delta, box.B).measure;
  r.bound = static_cast<double>(r.first_block) * static_cast<double>(r.second_block) * r.measure;
  return r;
}

std::vector<SamplePoint> draw_minor_arc_points(const ArcDissection& arcs, u64 samples, u64 seed, u64* rejected) {
  std::mt19937_64 rng(seed);
  std::vector<SamplePoint> points;
  points.reserve(samples);
  u64 misses = 0;
  while (points.size() < samples) {
    const double alpha = unit_draw(rng);
    if (arcs.in_major(alpha)) {
      ++misses;
      continue;
    }
    points.push_back({alpha, unit_draw(rng)});
  }
  if (rejected != nullptr) *rejected = misses;
  return points;
}

WeylScan minor_arc_weyl_scan(double delta, u64 B, u64 samples, u64 seed, unsigned width) {
  require_delta(delta);
  if (samples < 1) throw ValidationError("samples must be >= 1");
  const auto arcs = build_major_arcs(delta, B);
  WeylScan scan;
  scan.samples = samples;
  scan.seed = seed;
  const auto points = draw_minor_arc_points(arcs, samples, seed, &scan.rejected);

  std::vector<double> sizes(points.size());
  const WeylSum ws{3, 1, B};
  parallel_chunks(points.size(), width, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) sizes[i] = std::abs(eval_weyl(ws, points[i].alpha, points[i].beta));
  });
  const auto best = std::max_element(sizes.begin(), sizes.end());
  const auto idx = static_cast<std::size_t>(best - sizes.begin());
  scan.sup = *best;
  scan.arg_alpha = points[idx].alpha;
  scan.arg_beta = points[idx].beta;
  return scan;
}

}  // namespace pauc
