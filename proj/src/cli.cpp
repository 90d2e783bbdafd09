// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The eudoxos Authors

#include "eudoxos/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "eudoxos/error.hpp"
#include "eudoxos/exhaustion.hpp"
#include "eudoxos/polygon.hpp"
#include "eudoxos/positional.hpp"
#include "eudoxos/ratio.hpp"
#include "eudoxos/trig.hpp"

namespace eudoxos::cli {

namespace {

using nlohmann::json;

constexpr const char* kGrammar =
    "usage: eudoxos <pi|sin|cos|asin|measure|angle|ratio|xii2|check> [--depth N] [--base K] "
    "[--format text|json] [--bound N] [--suite NAME] [positional args...]";

struct Options {
  unsigned depth = 10;
  unsigned base = 10;
  std::string format = "text";
  std::uint64_t bound = 0;
  unsigned precision = 12;
  std::string suite = "all";
  std::vector<std::string> positional;
  std::string value;
  std::string unit = "1";
  std::string angle_unit = "d";
  std::string polygon_file;
  std::string region_file;
  unsigned windings = 0;
};

struct Outcome {
  std::optional<Interval> value;
  std::string status = "ok";
  json detail;
  std::vector<std::string> lines;
  int code = kExitOk;
};

unsigned default_depth() {
  if (const char* env = std::getenv("EUDOXOS_DEPTH")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v <= 1000) return static_cast<unsigned>(v);
  }
  return 10;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Point parse_point(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw Error(ErrorCode::InvalidInput, "point '" + text + "' is not x,y");
  return {parse_coordinate(text.substr(0, comma)), parse_coordinate(text.substr(comma + 1))};
}

Ratio parse_ratio(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return Ratio(Magnitude::segment(parse_real(text)), Magnitude::segment(Rational(1)));
  return Ratio(Magnitude::segment(parse_real(text.substr(0, colon))),
               Magnitude::segment(parse_real(text.substr(colon + 1))));
}

const std::string& arg(const Options& o, std::size_t i, const char* what) {
  if (i >= o.positional.size()) throw CLI::ValidationError(std::string("missing argument: ") + what);
  return o.positional[i];
}

std::string witness_text(const std::optional<Witness>& w) {
  if (!w) return "";
  return " (witness m=" + std::to_string(w->m) + ", n=" + std::to_string(w->n) + ")";
}

std::string lex_text(const LexPair& p) {
  return "(" + p.major.get_str() + "," + p.minor.get_str() + ")";
}

Outcome cmd_pi(const Options& o) {
  const PiEnclosure p = pi_enclosure(o.depth);
  Outcome out;
  out.value = Interval(p.lower, p.upper);
  out.detail = {{"sides", p.sides}};
  out.lines.push_back("pi " + render_interval(*out.value, o.precision) + " sides " + std::to_string(p.sides));
  return out;
}

Outcome cmd_trig(const Options& o, const std::string& which) {
  const std::string& x = arg(o, 0, "x");
  Outcome out;
  if (which == "asin") {
    if (x.rfind("sqrt(", 0) == 0 && x.back() == ')')
      out.value = asin_integral_of_sqrt(parse_rational(x.substr(5, x.size() - 6)), o.depth);
    else
      out.value = asin_integral(parse_rational(x), o.depth);
  } else if (which == "sin") {
    out.value = sin_analytic(parse_real(x), o.depth);
  } else {
    out.value = cos_analytic(parse_real(x), o.depth);
  }
  out.lines.push_back(which + "(" + x + ") " + render_interval(*out.value, o.precision));
  return out;
}

Outcome cmd_measure(const Options& o) {
  Outcome out;
  if (!o.region_file.empty()) {
    const Region r = parse_region_file(read_file(o.region_file));
    out.value = region_content(r).at(o.depth);
    out.lines.push_back("content " + render_interval(*out.value, o.precision));
    return out;
  }
  std::optional<DigitStream> stream;
  if (!o.polygon_file.empty()) {
    const Polygon p = parse_polygon_file(read_file(o.polygon_file));
    stream.emplace(measure_positional(polygon_magnitude(p), Magnitude::polygon_class(parse_rational(o.unit)), o.base));
    out.detail["content"] = to_fraction_string(content(p));
  } else {
    if (o.value.empty()) throw CLI::ValidationError("measure needs --value, --polygon or --region");
    stream.emplace(measure_positional(Magnitude::segment(parse_real(o.value)), Magnitude::segment(parse_real(o.unit)),
                                      o.base));
  }
  const std::string digits = render(*stream, o.precision);
  out.value = stream_to_enclosure(*stream, o.precision);
  out.detail["digits"] = digits;
  out.lines.push_back(digits);
  return out;
}

Outcome cmd_angle(const Options& o) {
  const Angle a = Angle::from_points(parse_point(arg(o, 0, "a")), parse_point(arg(o, 1, "b")),
                                     parse_point(arg(o, 2, "c")), o.windings);
  AngleMeasure m = measure_m(a);
  std::string label = "d";
  RealEnclosure shown = m.value;
  if (o.angle_unit == "e") {
    shown = measure_mu(a).value;
    label = "e";
  } else if (o.angle_unit == "right") {
    shown = m.in(AngleUnit::rightAngle).value;
    label = "right angles";
  } else if (o.angle_unit == "deg") {
    shown = to_degrees(m);
    label = "degrees";
  } else if (o.angle_unit != "d") {
    throw CLI::ValidationError("angle unit must be d, e, right or deg");
  }
  Outcome out;
  out.value = shown.at(o.depth);
  out.detail["unit"] = label;
  out.lines.push_back("measure " + render_interval(*out.value, o.precision) + " " + label);
  if (a.is_acute()) {
    const Interval s = sin_geometric(a).at(o.depth);
    out.detail["sin"] = {{"lo", to_fraction_string(s.lo())}, {"hi", to_fraction_string(s.hi())}};
    out.lines.push_back("Sin " + render_interval(s, o.precision));
  }
  return out;
}

Outcome cmd_ratio(const Options& o) {
  const std::string& op = arg(o, 0, "operation");
  const std::uint64_t bound = o.bound ? o.bound : kDefaultSearchBound;
  Outcome out;
  auto real_of = [&](const Ratio& r) {
    out.value = to_real(r).at(o.depth);
    out.lines.push_back(op + " " + render_interval(*out.value, o.precision));
  };
  if (op == "add" || op == "mul") {
    const Ratio a = parse_ratio(arg(o, 1, "first ratio"));
    const Ratio b = parse_ratio(arg(o, 2, "second ratio"));
    real_of(op == "add" ? add_ratio(a, b) : mul_ratio(a, b));
  } else if (op == "inverse") {
    real_of(inverse(parse_ratio(arg(o, 1, "ratio"))));
  } else if (op == "real") {
    real_of(parse_ratio(arg(o, 1, "ratio")));
  } else if (op == "eq") {
    const Ratio a = parse_ratio(arg(o, 1, "first ratio"));
    const Ratio b = parse_ratio(arg(o, 2, "second ratio"));
    const ProportionResult e = eq_E(a, b, bound);
    const ProportionResult l = eq_L(a, b, bound);
    out.detail = {{"eq_E", std::string(to_string(e.status))}, {"eq_L", std::string(to_string(l.status))}};
    out.lines.push_back("eq_E " + std::string(to_string(e.status)) + witness_text(e.witness));
    out.lines.push_back("eq_L " + std::string(to_string(l.status)) + witness_text(l.witness));
    if (e.status == ProportionResult::Status::Undecided) out.status = "undecided";
  } else if (op == "less") {
    const LessResult r = less_E(parse_ratio(arg(o, 1, "first ratio")), parse_ratio(arg(o, 2, "second ratio")), bound);
    out.detail = {{"less", std::string(to_string(r))}};
    out.lines.push_back("less " + std::string(to_string(r)));
    if (r == LessResult::Undecided) out.status = "undecided";
  } else {
    throw CLI::ValidationError("ratio operation must be add, mul, eq, less, inverse or real");
  }
  if (out.status == "undecided") out.code = kExitUndecided;
  return out;
}

Outcome cmd_xii2(const Options& o) {
  const Rational r1 = o.positional.size() > 0 ? parse_rational(o.positional[0]) : Rational(1);
  const Rational r2 = o.positional.size() > 1 ? parse_rational(o.positional[1]) : Rational(2);
  const Xii2Record rec = xii2_verify(r1, r2, o.depth, o.bound ? o.bound : 100);
  Outcome out;
  out.value = rec.circle_ratio.back();
  out.detail = {{"squares_ratio", to_fraction_string(rec.squares_ratio)},
                {"contains_squares_ratio", rec.ratio_contains_squares},
                {"polygons_similar", rec.polygons_similar},
                {"cases", rec.cases},
                {"refuted_by_squares", rec.refuted_by_squares},
                {"refuted_by_enclosure", rec.refuted_by_enclosure},
                {"exhaustion_steps", rec.exhaustion_steps},
                {"witnesses", rec.witnesses.size()},
                {"undecided", rec.undecided.size()},
                {"boundary_cases", rec.boundary.size()},
                {"boundary_margin", to_fraction_string(rec.boundary_margin)}};
  out.lines.push_back("circle ratio " + render_interval(*out.value, o.precision) + " squares ratio " +
                      to_fraction_string(rec.squares_ratio));
  out.lines.push_back("contains squares ratio at every depth: " + std::string(rec.ratio_contains_squares ? "yes" : "no"));
  out.lines.push_back("branch cases " + std::to_string(rec.cases) + ", refuted by squares " +
                      std::to_string(rec.refuted_by_squares) + ", by enclosures " +
                      std::to_string(rec.refuted_by_enclosure) + " within " + std::to_string(rec.exhaustion_steps) +
                      " doublings");
  out.lines.push_back("witnesses " + std::to_string(rec.witnesses.size()) + ", undecided " +
                      std::to_string(rec.undecided.size()) + ", boundary " + std::to_string(rec.boundary.size()) +
                      " (margin " + decimal(rec.boundary_margin, o.precision, true) + ")");
  if (!rec.verified()) {
    out.status = "failed";
    out.code = kExitDomain;
  } else if (!rec.undecided.empty()) {
    out.status = "undecided";
    out.code = kExitUndecided;
  }
  return out;
}

Outcome cmd_check(const Options& o) {
  Outcome out;
  const bool all = o.suite == "all";
  if (!all && o.suite != "proposition" && o.suite != "units" && o.suite != "limit")
    throw CLI::ValidationError("suite must be proposition, units, limit or all");
  bool passed = true;
  auto line = [&](bool ok, const std::string& text) {
    out.lines.push_back(std::string(ok ? "PASS " : "FAIL ") + text);
    passed = passed && ok;
  };
  if (all || o.suite == "proposition") {
    const PropositionReport rep = proposition_suite(o.bound ? o.bound : 30);
    for (const auto& c : rep.clauses)
      line(c.passed, c.clause + " [" + c.kind + "] " + std::to_string(c.cases) + " cases" +
                         (c.detail.empty() ? "" : ": " + c.detail));
    if (rep.separation) {
      const auto& w = *rep.separation;
      line(true, "LexPairs separation <" + lex_text(w.x) + "," + lex_text(w.y) + "> =_L <" + lex_text(w.z) + "," +
                     lex_text(w.w) + "> but not =_E");
    } else {
      line(false, "LexPairs separation witness not found");
    }
    if (rep.cancellation_failure) {
      const auto& w = *rep.cancellation_failure;
      line(true, "LexPairs cancellation fails: " + lex_text(w.x) + " != " + lex_text(w.y) + " with <x," +
                     lex_text(w.z) + "> =_E <y," + lex_text(w.z) + ">");
    }
    if (rep.empty_cut)
      line(true, "LexPairs empty cut " + lex_text(rep.empty_cut->first) + ":" + lex_text(rep.empty_cut->second));
    out.detail["proposition"] = rep.passed();
  }
  if (all || o.suite == "units") {
    const UnitRelationReport rep = unit_relation_check(o.depth);
    line(rep.passed(), "m = 2 mu on " + std::to_string(rep.cases) + " angles at depth " + std::to_string(o.depth) +
                           ", least overlap " + decimal(rep.min_overlap, o.precision, false));
    out.detail["units"] = rep.passed();
  }
  if (all || o.suite == "limit") {
    const LimitReport rep = celebrated_limit_check(halving_sequence(8), o.depth);
    for (const auto& s : rep.samples) out.lines.push_back("  Sin/m " + render_interval(s.ratio, o.precision));
    line(rep.passed(), "Sin/m increases toward 1 over " + std::to_string(rep.samples.size()) + " halvings");
    out.detail["limit"] = rep.passed();
  }
  if (!passed) {
    out.status = "failed";
    out.code = kExitDomain;
  }
  return out;
}

json interval_json(const Interval& i) {
  return {{"lo", to_fraction_string(i.lo())}, {"hi", to_fraction_string(i.hi())}};
}

void emit(const Outcome& o, const Options& opt, std::ostream& out) {
  if (opt.format == "json") {
    json j;
    j["value"] = o.value ? interval_json(*o.value) : json(nullptr);
    j["depth"] = opt.depth;
    j["status"] = o.status;
    if (!o.detail.is_null()) j["detail"] = o.detail;
    out << j.dump() << "\n";
    return;
  }
  for (const auto& l : o.lines) out << l << "\n";
}

int exit_code_for(ErrorCode code) {
  return code == ErrorCode::Indistinguishable || code == ErrorCode::UnknownAtResolution ? kExitUndecided
                                                                                        : kExitDomain;
}

}  // namespace

RealEnclosure parse_real(const std::string& text) {
  RealEnclosure value = RealEnclosure::exact(1);
  std::size_t start = 0;
  for (;;) {
    const std::size_t star = text.find('*', start);
    std::string factor = text.substr(start, star == std::string::npos ? std::string::npos : star - start);
    factor.erase(std::remove_if(factor.begin(), factor.end(), [](unsigned char c) { return std::isspace(c); }),
                 factor.end());
    if (factor == "pi") {
      value = value * pi_real();
    } else if (factor.rfind("pi/", 0) == 0) {
      value = value * pi_real().scaled(1 / parse_rational(factor.substr(3)));
    } else if (factor.rfind("sqrt(", 0) == 0 && !factor.empty() && factor.back() == ')') {
      value = value * RealEnclosure::sqrt(parse_rational(factor.substr(5, factor.size() - 6)));
    } else {
      const Rational q = parse_rational(factor);
      value = value.is_exact() ? RealEnclosure::exact(*value.exact_value() * q) : value.scaled(q);
    }
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return value;
}

std::string decimal(const Rational& q, unsigned digits, bool up) {
  if (q < 0) return "-" + decimal(-q, digits, !up);
  Rational rounded = 0;
  if (q > 0) {
    DigitStream stream(Ratio(Magnitude::natural(q.get_num()), Magnitude::natural(q.get_den())), 10, Resolution{});
    const Interval e = stream_to_enclosure(stream, digits);
    rounded = up ? e.hi() : e.lo();
  }
  const Integer scaled = floor_of(rounded * Rational(pow_int(10, digits)));
  std::string s = scaled.get_str();
  if (digits == 0) return s;
  if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
  s.insert(s.size() - digits, ".");
  return s;
}

std::string render_interval(const Interval& i, unsigned digits) {
  return "[" + decimal(i.lo(), digits, false) + ", " + decimal(i.hi(), digits, true) + "] (width " +
         decimal(i.width(), digits, true) + ")";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact ratios, certified enclosures and measures", "eudoxos"};
  app.require_subcommand(1);
  Options opt;
  opt.depth = default_depth();

  auto common = [&](CLI::App* sub) {
    sub->add_option("--depth", opt.depth, "refinement depth")->check(CLI::Range(0u, 1000u));
    sub->add_option("--base", opt.base, "positional base")->check(CLI::Range(2u, 1u << 20));
    sub->add_option("--format", opt.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--bound", opt.bound, "search bound");
    sub->add_option("--precision", opt.precision, "displayed digits")->check(CLI::Range(0u, 10000u));
    sub->add_option("args", opt.positional, "positional arguments");
  };
  std::map<std::string, CLI::App*> subs;
  for (const char* name : {"pi", "sin", "cos", "asin", "measure", "angle", "ratio", "xii2", "check"}) {
    subs[name] = app.add_subcommand(name);
    common(subs[name]);
  }
  subs["measure"]->add_option("--value", opt.value, "magnitude b");
  subs["measure"]->add_option("--unit", opt.unit, "unit u");
  subs["measure"]->add_option("--polygon", opt.polygon_file, "polygon file");
  subs["measure"]->add_option("--region", opt.region_file, "region file");
  subs["angle"]->add_option("--unit", opt.angle_unit, "d, e, right or deg");
  subs["angle"]->add_option("--windings", opt.windings, "full turns");
  subs["check"]->add_option("--suite", opt.suite, "proposition, units, limit or all");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  }

  try {
    Outcome result;
    const std::string name = app.get_subcommands().front()->get_name();
    if (name == "pi") result = cmd_pi(opt);
    else if (name == "sin" || name == "cos" || name == "asin") result = cmd_trig(opt, name);
    else if (name == "measure") result = cmd_measure(opt);
    else if (name == "angle") result = cmd_angle(opt);
    else if (name == "ratio") result = cmd_ratio(opt);
    else if (name == "xii2") result = cmd_xii2(opt);
    else result = cmd_check(opt);
    emit(result, opt, out);
    return result.code;
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n" << kGrammar << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    if (opt.format == "json") {
      out << json{{"value", nullptr}, {"depth", opt.depth}, {"status", "error"},
                  {"detail", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}}}
                 .dump()
          << "\n";
    }
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace eudoxos::cli
