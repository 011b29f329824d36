#pragma once

// JSON and CSV renderings of the result types. JSON keys are snake_case and
// emitted in a fixed order; integers beyond int64 are written as decimal
// strings.

#include <ostream>
#include <span>
#include <vector>

#include <json.hpp>

#include "pauc/arcs.hpp"
#include "pauc/freq_table.hpp"
#include "pauc/growth.hpp"
#include "pauc/pair_solver.hpp"
#include "pauc/paucity.hpp"
#include "pauc/psi.hpp"
#include "pauc/quadrature.hpp"
#include "pauc/tally.hpp"

namespace pauc {

using Json = nlohmann::ordered_json;

Json to_json(i128 v);
Json to_json(const ExponentTriple& t);
Json to_json(const CountReport& r);
Json to_json(const GrowthFit& f);
Json to_json(const PaucityReport& r);
Json to_json(const ArcDissection& d);
Json to_json(const WeylScan& s);
Json to_json(const QuadratureResult& q);
Json to_json(const PairSolution& s);
Json to_json(const PsiPolynomial& p);
Json to_json(const MajorArcBound& b);
Json to_json(const LogConstantFit& f);

// B,N,T,E,residual,u0,v0
void write_counts_csv(std::ostream& out, std::span<const CountReport> rows);
// q,a,center,halfwidth
void write_arcs_csv(std::ostream& out, const ArcDissection& d);
// key,count
void write_table_csv(std::ostream& out, const FreqTable& t);
// x1,x2,y1,y2
void write_pairs_csv(std::ostream& out, std::span<const PairSolution> sols);

// Shortest decimal that round-trips, as used throughout the CSV output.
std::string format_double(double v);

}  // namespace pauc
