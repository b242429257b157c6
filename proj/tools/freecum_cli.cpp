// Command-line front end. Exit status: 0 when every check passes, 1 when a
// verification fails, 2 for usage, parameter and input errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "freecum/bounds.hpp"
#include "freecum/cumulants.hpp"
#include "freecum/errors.hpp"
#include "freecum/incidence.hpp"
#include "freecum/json_io.hpp"
#include "freecum/partition.hpp"
#include "freecum/suites.hpp"

namespace {

using namespace freecum;

constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::string format = "text";
  std::string out;
  std::optional<int> n;
  std::optional<int> N;
  std::string lattice;
  std::string kind;
  std::string sigma;
  std::string pi;
  std::string in;
  std::string direction;
  std::string suite;
  std::optional<std::uint64_t> seed;
  int precision = 6;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Family require_lattice(const Options& o) {
  if (o.lattice.empty()) throw UsageError("--lattice {set|nc} is required");
  return parse_family(o.lattice);
}

int require_n(const std::optional<int>& v, const char* name) {
  if (!v) throw UsageError(std::string("--") + name + " is required");
  return *v;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + o.out + " for writing");
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

int cmd_enumerate(const Options& o) {
  const int n = require_n(o.n, "n");
  const Family lattice = require_lattice(o);
  const auto all = enumerate_partitions(n, lattice);
  std::string text;
  if (o.format == "json") {
    Json list = Json::array();
    for (const auto& pi : all) list.push_back(to_json(pi));
    text = dump({{"n", n}, {"lattice", family_name(lattice)}, {"count", all.size()}, {"partitions", list}});
  } else if (o.format == "csv") {
    text = "index,partition,blocks\n";
    for (std::size_t i = 0; i < all.size(); ++i) {
      text += std::to_string(i) + "," + csv_field(all[i].to_string()) + "," + std::to_string(all[i].block_count()) + "\n";
    }
  } else {
    for (const auto& pi : all) text += pi.to_string() + "\n";
  }
  emit(o, text);
  return 0;
}

int cmd_mobius(const Options& o) {
  const Family lattice = require_lattice(o);
  if (o.sigma.empty() || o.pi.empty()) throw UsageError("--sigma and --pi are required");
  const auto sigma = Partition::parse(o.sigma);
  const auto pi = Partition::parse(o.pi);
  const auto value = to_string(mobius(sigma, pi, lattice));
  if (o.format == "json") {
    emit(o, dump({{"sigma", sigma.to_string()}, {"pi", pi.to_string()}, {"lattice", family_name(lattice)}, {"mobius", value}}));
  } else if (o.format == "csv") {
    emit(o, "sigma,pi,lattice,mobius\n" + csv_field(sigma.to_string()) + "," + csv_field(pi.to_string()) + "," +
                family_name(lattice) + "," + value + "\n");
  } else {
    emit(o, value + "\n");
  }
  return 0;
}

int cmd_kreweras(const Options& o) {
  if (o.pi.empty()) throw UsageError("--pi is required");
  const auto pi = Partition::parse(o.pi);
  const auto k = kreweras(pi);
  if (o.format == "json") {
    emit(o, dump({{"pi", to_json(pi)}, {"kreweras", to_json(k)}}));
  } else if (o.format == "csv") {
    emit(o, "pi,kreweras\n" + csv_field(pi.to_string()) + "," + csv_field(k.to_string()) + "\n");
  } else {
    emit(o, k.to_string() + "\n");
  }
  return 0;
}

int cmd_transform(const Options& o) {
  const Family lattice = require_lattice(o);
  if (o.in.empty()) throw UsageError("--in PATH is required");
  if (o.direction != "m2k" && o.direction != "k2m") throw UsageError("--direction must be m2k or k2m");
  std::ifstream file(o.in, std::ios::binary);
  if (!file) throw UsageError("cannot read " + o.in);
  Json input;
  try {
    input = Json::parse(file);
  } catch (const Json::parse_error& e) {
    throw ParseError("/", std::string("invalid JSON: ") + e.what());
  }
  const auto doc = moments_from_json(input);
  const auto partitions = enumerate_partitions(doc.n, lattice);
  const auto result = o.direction == "m2k" ? cumulant_table(doc.values, doc.n, lattice)
                                           : moment_table(doc.values, doc.n, lattice);
  if (o.format == "csv") {
    std::string text = "partition,value\n";
    for (const auto& pi : partitions) text += csv_field(pi.to_string()) + "," + to_string(result.value(pi)) + "\n";
    emit(o, text);
  } else if (o.format == "json") {
    Json out = moments_to_json(doc.n, result, partitions);
    out["lattice"] = family_name(lattice);
    out["direction"] = o.direction;
    if (doc.values.is_sequence()) {
      Json seq = Json::array();
      for (int k = 1; k <= doc.n; ++k) {
        const auto top = Partition::coarsest(k);
        seq.push_back(to_string(o.direction == "m2k" ? moments_to_cumulants(doc.values, top, lattice)
                                                     : cumulants_to_moments(doc.values, top, lattice)));
      }
      out["sequence"] = seq;
    }
    emit(o, dump(out));
  } else {
    std::string text;
    for (const auto& pi : partitions) text += pi.to_string() + " " + to_string(result.value(pi)) + "\n";
    emit(o, text);
  }
  return 0;
}

int cmd_sequence(const Options& o) {
  if (o.kind.empty()) throw UsageError("--kind {a|atilde|b|btilde} is required");
  const auto kind = parse_sequence_kind(o.kind);
  const int n = require_n(o.n, "n");
  const int N = o.N.value_or(1);
  const auto r = sequence_report(kind, n, N);
  if (o.format == "json") {
    Json enumeration = Json::array();
    Json series = Json::array();
    for (const auto& v : r.enumeration) enumeration.push_back(to_string(v));
    for (const auto& v : r.series) series.push_back(to_string(v));
    emit(o, dump({{"kind", to_string(kind)}, {"N", r.N}, {"enumeration", enumeration}, {"series", series}, {"match", r.match}}));
  } else if (o.format == "csv") {
    std::string text = "kind,n,N,enumeration,series,match\n";
    for (std::size_t i = 0; i < r.series.size(); ++i) {
      const bool enumerated = i < r.enumeration.size();
      text += to_string(kind) + "," + std::to_string(i + 1) + "," + std::to_string(r.N) + "," +
              (enumerated ? to_string(r.enumeration[i]) : "") + "," + to_string(r.series[i]) + "," +
              ((!enumerated || r.enumeration[i] == r.series[i]) ? "true" : "false") + "\n";
    }
    emit(o, text);
  } else {
    std::string text;
    for (std::size_t i = 0; i < r.series.size(); ++i) text += (i ? "," : "") + to_string(r.series[i]);
    emit(o, text + "\n");
  }
  if (!r.match) {
    std::cerr << "error: enumeration and series disagree\n";
    return kExitFailed;
  }
  return 0;
}

std::string fixed(double v, int digits) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(digits);
  s << v;
  return s.str();
}

int cmd_constants(const Options& o) {
  const int N = o.N.value_or(1);
  const int digits = o.precision;
  if (digits < 0 || digits > 60) throw UsageError("--precision must be between 0 and 60");
  const auto c = growth_constants(N);
  std::optional<NegativityReport> neg;
  if (N >= 2) neg = negativity_check(N);
  const std::string z0_lo = decimal(c.z0.lo, digits);
  const std::string z0_hi = decimal(c.z0.hi, digits, Rounding::up);
  const std::string khinchin = c.khinchin ? decimal(c.khinchin->lo, digits) : "";
  const std::string certified = neg ? (neg->certified && neg->khinchin_holds ? "true" : "false") : "";
  const std::string b_growth = c.b_growth.exact() ? to_string(c.b_growth.lo) : decimal(c.b_growth.lo, digits);
  const std::string pisier = c.pisier ? fixed(*c.pisier, digits) : "";
  if (o.format == "json") {
    Json out = {{"N", N},
                {"z0", {{"lo", z0_lo}, {"hi", z0_hi}, {"approx", fixed(c.z0.approx, digits)}}},
                {"b_growth", b_growth},
                {"khinchin", c.khinchin ? Json(khinchin) : Json(nullptr)},
                {"pisier", c.pisier ? Json(pisier) : Json(nullptr)},
                {"certified", neg ? Json(certified == "true") : Json(nullptr)}};
    emit(o, dump(out));
  } else if (o.format == "csv") {
    emit(o, "N,z0_lo,z0_hi,khinchin,certified\n" + std::to_string(N) + "," + z0_lo + "," + z0_hi + "," + khinchin +
                "," + certified + "\n");
  } else {
    std::string text = "N=" + std::to_string(N) + "\n";
    text += "z0=" + fixed(c.z0.approx, digits) + " in [" + z0_lo + ", " + z0_hi + "]\n";
    text += "b_growth=" + b_growth + "\n";
    if (c.khinchin) text += "khinchin=" + khinchin + "\n";
    if (c.pisier) text += "pisier=" + pisier + "\n";
    if (neg) text += "certified=" + certified + "\n";
    emit(o, text);
  }
  return certified == "false" ? kExitFailed : 0;
}

int cmd_verify(const Options& o) {
  if (o.suite.empty()) throw UsageError("--suite is required");
  SuiteParams params;
  params.n = o.n;
  params.N = o.N;
  if (!o.lattice.empty()) params.lattice = parse_family(o.lattice);
  params.seed = o.seed;
  params.precision = o.precision;
  const auto report = run_suite(o.suite, params);
  if (o.format == "json") {
    emit(o, dump(report_to_json(report)));
  } else if (o.format == "csv") {
    emit(o, report_to_csv(report));
  } else {
    emit(o, report_to_text(report));
  }
  return report.passed ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Noncrossing partitions, free cumulants and Khinchin-type constants"};
  app.require_subcommand(1);
  Options o;

  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "Write output to PATH instead of standard output");
  };
  auto add_lattice = [&](CLI::App* sub) {
    sub->add_option("--lattice", o.lattice, "Partition lattice")->check(CLI::IsMember({"set", "nc"}));
  };

  auto* enumerate = app.add_subcommand("enumerate", "List the partitions of {1..n}");
  enumerate->add_option("--n", o.n, "Ground set size");
  add_lattice(enumerate);
  add_output(enumerate);

  auto* mobius_cmd = app.add_subcommand("mobius", "Möbius function μ(σ, π)");
  mobius_cmd->add_option("--sigma", o.sigma, "Lower partition, e.g. 1|2|3");
  mobius_cmd->add_option("--pi", o.pi, "Upper partition, e.g. 1,2,3");
  add_lattice(mobius_cmd);
  add_output(mobius_cmd);

  auto* kreweras_cmd = app.add_subcommand("kreweras", "Kreweras complement of a noncrossing partition");
  kreweras_cmd->add_option("--pi", o.pi, "Noncrossing partition, e.g. 1,4|2,3");
  add_output(kreweras_cmd);

  auto* transform = app.add_subcommand("transform", "Moments to cumulants and back");
  transform->add_option("--in", o.in, "Input file in the JSON moment format");
  transform->add_option("--direction", o.direction, "m2k (moments to cumulants) or k2m");
  add_lattice(transform);
  add_output(transform);

  auto* sequence = app.add_subcommand("sequence", "Counting sequences a, atilde, b, btilde");
  sequence->add_option("--kind", o.kind, "a | atilde | b | btilde");
  sequence->add_option("--n,--order", o.n, "Number of terms");
  sequence->add_option("--N", o.N, "Parameter N for b and btilde (default 1)");
  add_output(sequence);

  auto* constants = app.add_subcommand("constants", "Growth constants for a parameter N");
  constants->add_option("--N", o.N, "Parameter N (default 1)");
  constants->add_option("--precision", o.precision, "Digits shown for approximations");
  add_output(constants);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  std::string suites_help = "One of:";
  for (const auto& s : suite_names()) suites_help += " " + s;
  verify->add_option("--suite", o.suite, suites_help);
  verify->add_option("--n", o.n, "Size parameter");
  verify->add_option("--N", o.N, "Parameter N (range upper end)");
  add_lattice(verify);
  verify->add_option("--seed", o.seed, "Seed for randomized fixtures");
  verify->add_option("--precision", o.precision, "Digits shown for approximations");
  add_output(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) return cmd_enumerate(o);
    if (*mobius_cmd) return cmd_mobius(o);
    if (*kreweras_cmd) return cmd_kreweras(o);
    if (*transform) return cmd_transform(o);
    if (*sequence) return cmd_sequence(o);
    if (*constants) return cmd_constants(o);
    if (*verify) return cmd_verify(o);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {  // DomainError, SizeLimitError, OrderError
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {  // MissingDataError, SeriesError
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
