#pragma once

#include <json.hpp>

#include "pcf/cf.hpp"
#include "pcf/convergence.hpp"
#include "pcf/families13.hpp"
#include "pcf/loci.hpp"
#include "pcf/pell.hpp"
#include "pcf/radical03.hpp"

namespace pcf {

// Field order is fixed and big integers are decimal strings, so dumping,
// parsing and dumping again is byte-identical.
using Json = nlohmann::ordered_json;

Json toJson(const Integer& n);
Json toJson(const Rational& x);
Json toJson(const PAdicApprox& x);
Json toJson(const P1Value& v);
Json toJson(const AlgebraicPoint& v);
Json toJson(const ProjPoint& z);
Json toJson(const QuadPoly& F);
Json toJson(const PCF& pcf);
Json toJson(const ConvergenceReport& r);
Json toJson(const LimitResult& r);
Json toJson(const OracleResult& r);
Json toJson(const LocusPoint& pt);
Json toJson(const LocusResult& r);
Json toJson(const PellPair& s);
Json toJson(const PellClassSet& s);
Json toJson(const Radical03Solution& s);
Json toJson(const Family13Report& r);

}  // namespace pcf
