#include "pauc/psi.hpp"

#include <algorithm>
#include <stdexcept>

#include "pauc/errors.hpp"
#include "pauc/int_math.hpp"

namespace pauc {

namespace {

using Poly = std::vector<i128>;

void trim(Poly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.empty()) p.push_back(0);
}

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = checked_add(out[i + j], checked_mul(a[i], b[j]));
  return out;
}

Poly pow(const Poly& base, int e) {
  Poly out{1};
  for (int i = 0; i < e; ++i) out = mul(out, base);
  return out;
}

Poly add(const Poly& a, const Poly& b, i128 sign = 1) {
  Poly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = checked_add(out[i], checked_mul(sign, b[i]));
  return out;
}

i128 binom(int n, int r) {
  i128 c = 1;
  for (int i = 1; i <= r; ++i) c = c * (n - r + i) / i;
  return c;
}

void require_args(int k, i128 d1, i128 d2) {
  if (k < 1) throw ValidationError("psi: exponent must be positive");
  if (d1 == 0 || d2 == 0) throw ValidationError("psi: d1 and d2 must be non-zero");
}

i128 sign_of(i128 v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

i128 PsiPolynomial::operator()(i128 x) const {
  i128 acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = checked_add(checked_mul(acc, x), *it);
  return acc;
}

PsiPolynomial build_psi1(int k, i128 d1, i128 d2) {
  require_args(k, d1, d2);
  if (k < 2) throw ValidationError("psi1 requires k >= 2");
  // Coefficient of x^(k-j) is C(k,j) ((d1+d2)^j - d1^j - d2^j) / (d1 d2),
  // and the quotient is sum_{0<i<j} C(j,i) d1^(i-1) d2^(j-i-1).
  Poly p(static_cast<std::size_t>(k - 1), 0);
  for (int j = 2; j <= k; ++j) {
    i128 inner = 0;
    for (int i = 1; i < j; ++i)
      inner = checked_add(inner, checked_mul(binom(j, i), checked_mul(ipow(d1, i - 1), ipow(d2, j - i - 1))));
    p[static_cast<std::size_t>(k - j)] = checked_mul(binom(k, j), inner);
  }
  trim(p);
  return PsiPolynomial{std::move(p)};
}

PsiPolynomial build_psi2(int k, i128 d1, i128 d2) {
  require_args(k, d1, d2);
  const Poly x{0, 1};
  const Poly y1{d1, 1};
  const Poly y2{d2, 1};
  const Poly squares = add(add(mul(y1, y1), mul(y2, y2)), mul(x, x), -1);
  const Poly kth = add(add(pow(y1, k), pow(y2, k)), pow(x, k), -1);
  Poly diff = add(pow(squares, k), mul(kth, kth), -1);
  const i128 d = checked_mul(d1, d2);
  for (auto& c : diff) {
    if (c % d != 0) throw std::logic_error("psi2: coefficient not divisible by d1*d2");
    c /= d;
  }
  trim(diff);
  return PsiPolynomial{std::move(diff)};
}

std::vector<i128> integer_roots(const PsiPolynomial& p, i128 target, i128 lo, i128 hi) {
  std::vector<i128> roots;
  if (hi < lo) return roots;
  auto q = [&](i128 x) { return p(x) - target; };
  auto scan = [&](i128 a, i128 b) {
    for (i128 x = a; x <= b; ++x)
      if (q(x) == 0) roots.push_back(x);
  };
  const int deg = p.degree();
  if (deg <= 0) {
    if (p.coefficients[0] == target) scan(lo, hi);
    return roots;
  }
  if (hi - lo < 64) {
    scan(lo, hi);
    return roots;
  }

  // Beyond the Cauchy bound of the derivative's roots, p is strictly monotone.
  i128 bound = 0;
  if (deg >= 2) {
    const i128 lead = p.coefficients[static_cast<std::size_t>(deg)] * deg;
    i128 worst = 0;
    for (int i = 1; i < deg; ++i) {
      i128 c = p.coefficients[static_cast<std::size_t>(i)] * i;
      if (c < 0) c = -c;
      worst = std::max(worst, c);
    }
    const i128 alead = lead < 0 ? -lead : lead;
    bound = 1 + (worst + alead - 1) / alead;
  }

  // Monotone stretch [a, b]: locate a root by bisection on the sign of q.
  auto bisect = [&](i128 a, i128 b) {
    if (b < a) return;
    const i128 qa = q(a);
    const i128 qb = q(b);
    if (qa == 0) roots.push_back(a);
    if (b == a || qb == 0) {
      if (b != a && qb == 0) roots.push_back(b);
      return;
    }
    if (sign_of(qa) == sign_of(qb)) return;
    i128 l = a, r = b;  // sign(q(l)) = sign(qa), sign(q(r)) = sign(qb)
    while (r - l > 1) {
      const i128 mid = l + (r - l) / 2;
      const i128 qm = q(mid);
      if (qm == 0) {
        roots.push_back(mid);
        return;
      }
      (sign_of(qm) == sign_of(qa) ? l : r) = mid;
    }
  };

  const i128 mid_lo = std::max(lo, -bound);
  const i128 mid_hi = std::min(hi, bound);
  bisect(lo, std::min(hi, mid_lo - 1));
  scan(mid_lo, mid_hi);
  bisect(std::max(lo, mid_hi + 1), hi);
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace pauc
