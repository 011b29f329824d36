#include "pauc/exponents.hpp"

#include <charconv>
#include <vector>

#include "pauc/errors.hpp"

namespace pauc {

ExponentTriple ExponentTriple::make(int k, int m, int n) {
  for (int e : {k, m, n})
    if (e < 1 || e > kMaxExponent)
      throw ValidationError("exponent out of range [1," + std::to_string(kMaxExponent) +
                            "]: " + std::to_string(e));
  return ExponentTriple{k, m, n};
}

TripleClass classify(const ExponentTriple& t) {
  const auto [k, m, n] = t;
  if (k == m || k == n) return TripleClass::Degenerate;
  if (k == 2 && n == 1) return TripleClass::ExcludedLog21;
  if (k == 1 && n == 2) return TripleClass::ExcludedLog12;
  if (k == 3 && m == 1 && n == 1) return TripleClass::Excluded311;
  if (m >= 3) return TripleClass::CaseI;
  // m is 1 or 2 from here on.
  if (n >= 3) return TripleClass::CaseII;
  if (n == 2) return TripleClass::CaseIII;  // k >= 3 since k not in {1, 2}
  if (k >= 4) return TripleClass::CaseIV;
  return TripleClass::CaseV;  // n = 1, k = 3, m = 2
}

std::string_view to_string(TripleClass c) {
  switch (c) {
    case TripleClass::Degenerate: return "Degenerate";
    case TripleClass::ExcludedLog21: return "ExcludedLog21";
    case TripleClass::ExcludedLog12: return "ExcludedLog12";
    case TripleClass::Excluded311: return "Excluded311";
    case TripleClass::CaseI: return "CaseI";
    case TripleClass::CaseII: return "CaseII";
    case TripleClass::CaseIII: return "CaseIII";
    case TripleClass::CaseIV: return "CaseIV";
    case TripleClass::CaseV: return "CaseV";
  }
  return "?";
}

bool is_paucity_case(TripleClass c) {
  switch (c) {
    case TripleClass::CaseI:
    case TripleClass::CaseII:
    case TripleClass::CaseIII:
    case TripleClass::CaseIV:
    case TripleClass::CaseV: return true;
    default: return false;
  }
}

std::string degeneracy_reason(const ExponentTriple& t) {
  if (t.k == t.m) return "k=m";
  if (t.k == t.n) return "k=n";
  return {};
}

ExponentTriple parse_triple(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view piece = text.substr(pos, comma - pos);
    int value = 0;
    auto [ptr, ec] = std::from_chars(piece.data(), piece.data() + piece.size(), value);
    if (ec != std::errc{} || ptr != piece.data() + piece.size() || piece.empty())
      throw ValidationError("malformed exponent triple: '" + std::string(text) + "'");
    parts.push_back(value);
    pos = comma + 1;
  }
  if (parts.size() != 3)
    throw ValidationError("exponent triple needs three values: '" + std::string(text) + "'");
  return ExponentTriple::make(parts[0], parts[1], parts[2]);
}

void BoxConfig::validate() const {
  if (B < 1) throw ValidationError("box bound B must be >= 1");
  if (parallel_width < 1) throw ValidationError("parallel width must be >= 1");
}

}  // namespace pauc
