#include "pcf/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include "pcf/error.hpp"
#include "pcf/json.hpp"
#include "pcf/ntheory.hpp"

namespace pcf::cli {

namespace {

// Library errors raised while reading a flag are reported against it.
struct FlagError : std::runtime_error {
  FlagError(const std::string& flag, const Error& e) : std::runtime_error("--" + flag + ": " + e.what()) {}
};

template <class Fn>
auto readFlag(const std::string& flag, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw FlagError(flag, e);
  }
}

std::vector<Rational> parseList(const std::string& flag, const std::string& text) {
  return readFlag(flag, [&] {
    std::vector<Rational> out;
    if (text.find_first_not_of(" \t") == std::string::npos) return out;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = text.find(',', start);
      out.push_back(Rational::parse(std::string_view(text).substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return out;
  });
}

Rational parseRational(const std::string& flag, const std::string& text) {
  return readFlag(flag, [&] { return Rational::parse(text); });
}

Integer parseInteger(const std::string& flag, const std::string& text) {
  return readFlag(flag, [&] {
    const Rational x = Rational::parse(text);
    if (!x.isInteger()) throw Error(Errc::ParseError, "expected an integer, got " + text);
    return x.num();
  });
}

Prime parsePrime(const std::string& flag, const std::string& text) {
  return readFlag(flag, [&] { return Prime(parseInteger(flag, text)); });
}

QuadPoly parseQuad(const std::string& flag, const std::string& text) {
  const auto c = parseList(flag, text);
  if (c.size() != 3) throw FlagError(flag, Error(Errc::ParseError, "expected three coefficients A,B,C"));
  return {c[0], c[1], c[2]};
}

void printHuman(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_structured() && !value.empty()) {
        out << pad << key << ":\n";
        printHuman(value, out, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_structured() ? value.dump() : scalar(value)) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_structured() && !value.empty()) {
        out << pad << "-\n";
        printHuman(value, out, indent + 2);
      } else {
        out << pad << "- " << scalar(value) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

int exitCodeFor(Errc code) {
  switch (code) {
    case Errc::ZeroPolynomial:
    case Errc::NotConvergent:
    case Errc::NoNegativePell:
      return kEmpty;
    case Errc::InternalError:
    case Errc::PrecisionExhausted:
      return kInternal;
    default:
      return kInvalidInput;
  }
}

struct PcfFlags {
  std::string p, period, preperiod;

  void attach(CLI::App* cmd) {
    cmd->add_option("--p", p, "odd prime")->required();
    cmd->add_option("--period", period, "comma-separated period")->required();
    cmd->add_option("--preperiod", preperiod, "comma-separated preperiod");
  }
  PCF build() const {
    const Prime prime = parsePrime("p", p);
    auto pre = parseList("preperiod", preperiod);
    auto per = parseList("period", period);
    return readFlag("period", [&] { return PCF(prime, std::move(pre), std::move(per)); });
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic periodic continued fractions", "pcf"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  int threads = 0;
  long precision = 8;
  app.add_flag("--json", json, "JSON output");
  app.add_option("--threads", threads, "worker threads (default: PCF_THREADS or all cores)");

  // Each subcommand stores its action here; it returns the JSON result and
  // the exit code.
  std::function<std::pair<Json, int>()> action;

  PcfFlags pcfFlags;

  auto* check = app.add_subcommand("check", "decide p-adic convergence");
  pcfFlags.attach(check);
  check->callback([&] {
    action = [&] {
      const PCF pcf = pcfFlags.build();
      return std::pair{Json{{"pcf", toJson(pcf)}, {"report", toJson(isConvergent(pcf))}}, int(kOk)};
    };
  });

  auto* lim = app.add_subcommand("limit", "p-adic limit of a convergent PCF");
  pcfFlags.attach(lim);
  lim->add_option("--prec", precision, "p-adic digits");
  lim->callback([&] {
    action = [&] {
      const PCF pcf = pcfFlags.build();
      return std::pair{Json{{"pcf", toJson(pcf)}, {"limit", toJson(limit(pcf, precision))}}, int(kOk)};
    };
  });

  auto* quad = app.add_subcommand("quad", "Quad polynomial with the closed-form cross-check");
  pcfFlags.attach(quad);
  quad->callback([&] {
    action = [&] {
      const PCF pcf = pcfFlags.build();
      const QuadPoly q = quadOf(pcf);
      Json table = nullptr;
      if (const auto t = tableQuad(pcf.preperiod(), pcf.period())) {
        if (!(*t == q)) throw Error(Errc::InternalError, "closed form " + t->str() + " differs from " + q.str());
        table = Json{{"shape", "(" + std::to_string(pcf.preperiod().size()) + "," +
                                   std::to_string(pcf.period().size()) + ")"},
                     {"matches", true}};
      }
      return std::pair{Json{{"pcf", toJson(pcf)}, {"quad", toJson(q)}, {"table", table}}, int(kOk)};
    };
  });

  std::string fText;
  auto* member = app.add_subcommand("member", "membership in V(F)");
  pcfFlags.attach(member);
  member->add_option("--F,--poly", fText, "coefficients A,B,C of F")->required();
  member->callback([&] {
    action = [&] {
      const PCF pcf = pcfFlags.build();
      const QuadPoly F = parseQuad("F", fText);
      const Membership m = inVariety(pcf, F);
      return std::pair{Json{{"pcf", toJson(pcf)}, {"F", toJson(F)}, {"member", m.member}, {"zeroQuad", m.zeroQuad}},
                       int(kOk)};
    };
  });

  std::string type, pText, b1Text;
  ScanBounds bounds;
  long indexBound = 3;
  auto* locus = app.add_subcommand("locus", "convergent locus of V(F) of a given type");
  locus->add_option("--type", type, "0,1 | 1,1 | 2,1 | 0,2 | 1,2 | 0,3")->required();
  locus->add_option("--F,--poly", fText, "coefficients A,B,C of F")->required();
  locus->add_option("--p", pText, "odd prime")->required();
  locus->add_option("--b1", b1Text, "type 1,2: fixed b1");
  locus->add_option("--height", bounds.height, "scan height H");
  locus->add_option("--depth,--valdepth", bounds.valuationDepth, "scan depth J");
  locus->add_option("--index-bound", indexBound, "type 0,3: samples per family");
  locus->add_option("--prec", precision, "p-adic digits");
  locus->callback([&] {
    action = [&] {
      const QuadPoly F = parseQuad("F", fText);
      const Prime p = parsePrime("p", pText);
      LocusResult r;
      if (type == "0,1") r = locus01(F, p, precision);
      else if (type == "1,1") r = locus11(F, p, precision);
      else if (type == "2,1") r = locus21(F, p, bounds, precision);
      else if (type == "0,2") r = locus02(F, p, precision);
      else if (type == "1,2" && !b1Text.empty()) r = locus12At(F, p, parseRational("b1", b1Text), precision);
      else if (type == "1,2") r = locus12Scan(F, p, bounds, precision);
      else if (type == "0,3") r = degenerate03(F, p, indexBound, precision);
      else throw FlagError("type", Error(Errc::ParseError, "unknown type " + type));
      const bool empty = r.complete && r.points.empty() && r.families.empty();
      return std::pair{toJson(r), int(empty ? kEmpty : kOk)};
    };
  });

  std::string dText, maxClassText, primeBoundText;
  Search03Options searchOptions;
  auto* search = app.add_subcommand("search03", "type (0,3) expansions of sqrt(d)");
  search->add_option("--d", dText, "square-free d > 1")->required();
  search->add_option("--p", pText, "fixed prime");
  search->add_option("--max-index", searchOptions.maxIndex, "orbit index bound");
  search->add_option("--max-class-scan", maxClassText, "cap on v in the class rectangle");
  search->add_option("--prime-bound", primeBoundText, "only primes up to this bound");
  search->add_option("--prec", searchOptions.precision, "p-adic digits");
  search->callback([&] {
    action = [&] {
      const Integer d = parseInteger("d", dText);
      if (!pText.empty()) searchOptions.p = parsePrime("p", pText).value();
      if (!maxClassText.empty()) searchOptions.maxClassScan = parseInteger("max-class-scan", maxClassText);
      if (!primeBoundText.empty()) searchOptions.primeBound = parseInteger("prime-bound", primeBoundText);
      const auto sols = search03(d, searchOptions);
      Json rows = Json::array();
      for (const auto& s : sols) rows.push_back(toJson(s));
      return std::pair{Json{{"d", toJson(d)}, {"dFilter", dFilter(d)}, {"solutions", rows}},
                       int(dFilter(d) ? kOk : kEmpty)};
    };
  });

  std::string aText, a1Text;
  long k = 1;
  auto family13Action = [&]() -> std::pair<Json, int> {
    if (!pText.empty() && !a1Text.empty() && !aText.empty()) {
      const Prime p = parsePrime("p", pText);
      const Rational a = parseRational("a", aText), a1 = parseRational("a1", a1Text);
      return {toJson(family13General(a, a1, p, precision)), kOk};
    }
    if (!pText.empty() && aText.empty()) return {toJson(family13Prime(parsePrime("prime", pText), k, precision)), kOk};
    throw FlagError("a", Error(Errc::ParseError, "family13 needs --a, --a1, --p or --prime, --k"));
  };

  std::string kind;
  long maxN = 5;
  auto* family = app.add_subcommand("family", "explicit families: a2plus1, negpell, family13");
  family->add_option("--kind", kind, "a2plus1 | negpell | family13")->required();
  family->add_option("--a", aText, "a (a2plus1, family13)");
  family->add_option("--d", dText, "d (negpell)");
  family->add_option("--max-n", maxN, "last index n");
  family->add_option("--a1", a1Text, "a1 (family13)");
  family->add_option("--p,--prime", pText, "prime (family13)");
  family->add_option("--k", k, "exponent k (family13 --prime)");
  family->add_option("--prec", precision, "p-adic digits");
  family->callback([&] {
    action = [&]() -> std::pair<Json, int> {
      if (kind == "family13") return family13Action();
      std::vector<Radical03Solution> sols;
      if (kind == "a2plus1") sols = familyA2plus1(parseInteger("a", aText), maxN, precision);
      else if (kind == "negpell") sols = familyNegPell(parseInteger("d", dText), maxN, precision);
      else throw FlagError("kind", Error(Errc::ParseError, "unknown family " + kind));
      Json rows = Json::array();
      for (const auto& s : sols) rows.push_back(toJson(s));
      return {Json{{"kind", kind}, {"solutions", rows}}, kOk};
    };
  });

  auto* family13 = app.add_subcommand("family13", "type (1,3) families for d = a^2 + 1");
  family13->add_option("--a", aText, "b1 = a");
  family13->add_option("--a1", a1Text, "a1");
  family13->add_option("--p,--prime", pText, "prime");
  family13->add_option("--k", k, "exponent k (with --prime)");
  family13->add_option("--prec", precision, "p-adic digits");
  family13->callback([&] { action = family13Action; });

  std::string nText;
  long orbitIndex = -1;
  auto* pell = app.add_subcommand("pell", "Pell equations x^2 - d y^2 = n");
  pell->add_option("--d", dText, "non-square d >= 2")->required();
  pell->add_option("--n", nText, "right-hand side (default 1)");
  pell->add_option("--max-index", orbitIndex, "list each class for |i| <= max-index");
  pell->callback([&] {
    action = [&] {
      const Integer d = parseInteger("d", dText);
      const SqrtCf cf = readFlag("d", [&] { return sqrtCf(d); });
      Json cfJson{{"a0", toJson(cf.a0)}, {"period", Json::array()}};
      for (const auto& a : cf.period) cfJson["period"].push_back(toJson(a));
      const auto neg = negPell(d);
      Json result{{"d", toJson(d)},
                  {"sqrtCf", cfJson},
                  {"unit", toJson(fundamentalUnit(d).unit())},
                  {"negPell", neg ? toJson(*neg) : Json(nullptr)}};
      if (!nText.empty()) {
        const PellClassSet classes = pellClasses(d, parseInteger("n", nText));
        result["classes"] = toJson(classes);
        if (orbitIndex >= 0) {
          Json orbits = Json::array();
          for (const auto& f : classes.fundamentals) {
            Json orbit = Json::array();
            for (const auto& s : classOrbit(f, classes.unit, orbitIndex)) orbit.push_back(toJson(s));
            orbits.push_back(orbit);
          }
          result["orbits"] = orbits;
        }
      }
      return std::pair{result, int(kOk)};
    };
  });

  std::size_t n0 = 10, n1 = 60;
  auto* oracle = app.add_subcommand("oracle", "numeric cross-check of the criterion");
  pcfFlags.attach(oracle);
  oracle->add_option("--prec", precision, "required agreement in digits");
  oracle->add_option("--n0", n0, "window start");
  oracle->add_option("--n1", n1, "window end");
  oracle->callback([&] {
    action = [&] {
      const PCF pcf = pcfFlags.build();
      const ConvergenceReport report = isConvergent(pcf);
      const OracleResult o = oracleConverges(pcf, precision, n0, n1);
      return std::pair{Json{{"pcf", toJson(pcf)},
                            {"criterion", toJson(report)},
                            {"oracle", toJson(o)},
                            {"agree", o.consistent == report.convergent}},
                       int(kOk)};
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kInvalidInput;
  }

  if (threads <= 0) {
    if (const char* env = std::getenv("PCF_THREADS")) threads = std::atoi(env);
  }
  if (threads > 0) setThreadCount(threads);

  try {
    auto [result, code] = action();
    if (json) out << result.dump(2) << "\n";
    else printHuman(result, out, 0);
    return code;
  } catch (const FlagError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exitCodeFor(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace pcf::cli
