#include "pcf/json.hpp"

#include "pcf/detail/overloaded.hpp"

namespace pcf {

namespace {

Json valuationJson(long v) { return v == kInfiniteValuation ? Json(nullptr) : Json(v); }

Json rationalList(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(toJson(x));
  return out;
}

}  // namespace

Json toJson(const Integer& n) { return n.get_str(); }
Json toJson(const Rational& x) { return x.str(); }

Json toJson(const PAdicApprox& x) {
  return Json{{"p", x.prime().str()},
              {"valuation", valuationJson(x.valuation())},
              {"unitDigits", toJson(x.unitDigits())},
              {"precision", x.precision()}};
}

Json toJson(const P1Value& v) {
  return std::visit(detail::Overloaded{
                        [](const Rational& x) { return Json{{"kind", "rational"}, {"value", toJson(x)}}; },
                        [](const Infinity&) { return Json{{"kind", "infinity"}}; },
                        [](const PAdicApprox& x) { return Json{{"kind", "padic"}, {"value", toJson(x)}}; },
                    },
                    v);
}

Json toJson(const AlgebraicPoint& v) { return str(v); }

Json toJson(const ProjPoint& z) { return Json{{"x", toJson(z.x)}, {"y", toJson(z.y)}}; }

Json toJson(const QuadPoly& F) { return Json{{"A", toJson(F.A)}, {"B", toJson(F.B)}, {"C", toJson(F.C)}}; }

Json toJson(const PCF& pcf) {
  return Json{{"p", pcf.prime().str()},
              {"preperiod", rationalList(pcf.preperiod())},
              {"period", rationalList(pcf.period())},
              {"text", pcf.str()}};
}

Json toJson(const ConvergenceReport& r) {
  Json failed;
  switch (r.failed) {
    case FailedCondition::None: failed = "none"; break;
    case FailedCondition::TraceTooSmall: failed = "trace"; break;
    case FailedCondition::ShiftCondition: failed = Json{{"shift", r.shift}}; break;
  }
  return Json{{"convergent", r.convergent},
              {"trace", toJson(r.trace)},
              {"traceValuation", valuationJson(r.traceValuation)},
              {"failedCondition", failed}};
}

Json toJson(const LimitResult& r) {
  const char* kind = r.kind == LimitKind::ExactRational ? "rational" : r.kind == LimitKind::Infinity ? "infinity" : "padic";
  Json value = std::visit(detail::Overloaded{
                              [](const Rational& x) { return toJson(x); },
                              [](const Infinity&) { return Json(nullptr); },
                              [](const PAdicApprox& x) { return toJson(x); },
                          },
                          r.value);
  return Json{{"kind", kind}, {"value", value}, {"exact", toJson(r.exact)}};
}

Json toJson(const OracleResult& r) {
  return Json{{"consistent", r.consistent},
              {"witness", toJson(r.witness)},
              {"minDistance", valuationJson(r.minDistance)},
              {"worstIndex", r.worstIndex}};
}

Json toJson(const LocusPoint& pt) {
  return Json{{"preperiod", rationalList(pt.preperiod)},
              {"period", rationalList(pt.period)},
              {"convergent", pt.convergent},
              {"zeroQuad", pt.zeroQuad},
              {"limit", pt.limit ? toJson(*pt.limit) : Json(nullptr)}};
}

Json toJson(const LocusResult& r) {
  Json points = Json::array(), families = Json::array();
  for (const auto& pt : r.points) points.push_back(toJson(pt));
  for (const auto& f : r.families)
    families.push_back(Json{{"name", f.name}, {"description", f.description}, {"convergent", f.convergent}});
  return Json{{"complete", r.complete}, {"points", points}, {"families", families}, {"notes", r.notes}};
}

Json toJson(const PellPair& s) { return Json{{"u", toJson(s.u)}, {"v", toJson(s.v)}}; }

Json toJson(const PellClassSet& s) {
  Json fund = Json::array();
  for (const auto& f : s.fundamentals) fund.push_back(toJson(f));
  return Json{{"d", toJson(s.d)}, {"n", toJson(s.n)}, {"unit", toJson(s.unit.unit())}, {"fundamentals", fund}};
}

Json toJson(const Radical03Solution& s) {
  return Json{{"d", toJson(s.d)},   {"p", toJson(s.p)},   {"s", s.s},
              {"a1", toJson(s.a1)}, {"a2", toJson(s.a2)}, {"a3", toJson(s.a3)},
              {"v", toJson(s.v)},   {"classGcd", toJson(s.classGcd)},
              {"limitCheck", s.limitVerified ? "ok" : "failed"}};
}

Json toJson(const Family13Report& r) {
  Json out{{"pcf", toJson(r.pcf)},
           {"a", toJson(r.a)},
           {"d", toJson(r.d)},
           {"criterion", toJson(r.criterion)},
           {"limit", r.limit ? toJson(*r.limit) : Json(nullptr)},
           {"limitCheck", r.limit ? Json(r.limitVerified ? "ok" : "failed") : Json(nullptr)}};
  if (r.conditionValue) {
    out["necessaryCondition"] = Json{{"value", toJson(*r.conditionValue)}, {"holds", *r.conditionHolds}};
  }
  return out;
}

}  // namespace pcf
