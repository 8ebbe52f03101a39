#include "skolem/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "skolem/errors.hpp"
#include "skolem/json_io.hpp"

namespace skolem::cli {

namespace {

struct Config {
  std::string input;
  std::string format = "json";
  int precision = 128;
  std::string problem = "sp";
  std::uint64_t cutoff = 1000000;
  std::string mode = "sharp";
  bool use_irreducibility = false;
  std::size_t count = 20;
  int degree = 2;
  long height = 1;
  std::string family = "monic";
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  unsigned threads = 0;
};

LRSpec load(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
    buffer << in.rdbuf();
  }
  return lrs_from_json_text(buffer.str());
}

Problem problem_of(const std::string& s) {
  if (s == "sp") return Problem::SP;
  if (s == "pp") return Problem::PP;
  return Problem::UPP;
}

DecideOptions decide_options(const Config& c) {
  DecideOptions o;
  o.cutoff = c.cutoff;
  o.mode = c.mode == "plain" ? Mode::Plain : Mode::Sharp;
  o.precision = static_cast<mp::Precision>(c.precision);
  o.use_irreducibility = c.use_irreducibility;
  return o;
}

void print_bound_text(const BoundReport& b, std::ostream& out, const std::string& indent = "") {
  out << indent << "theorem: " << b.theorem << " (" << to_string(b.bound_case) << ")\n";
  out << indent << "floor: " << b.bound.floor.get_str() << "\n";
  out << indent << "log10: " << b.bound.log10 << "\n";
  for (const auto& [name, value] : b.bound.components) out << indent << "  " << name << " <= " << upper_string(value) << "\n";
}

int cmd_classify(const Config& c, std::ostream& out) {
  Classification cl = classify_detailed(load(c.input), IsolationConfig{static_cast<mp::Precision>(c.precision)});
  if (c.format == "json") {
    out << to_json(cl).dump(2) << "\n";
    return kOk;
  }
  const RootProfile& p = cl.profile;
  out << "case: " << to_string(cl.tag) << "\n";
  out << "order: " << p.m << "\n";
  out << "f*: " << primitive_char_poly(cl.minimal).f_star.to_string() << "\n";
  out << "squarefree: " << (p.is_squarefree ? "yes" : "no") << "\n";
  out << "k_max: " << p.k_max << "\n";
  out << "dominant: " << (p.dominant ? "yes" : "no") << "\n";
  out << "dominant root sign: " << to_string(p.dominant_root_real_sign) << "\n";
  out << "maximal pair ratio root of unity: " << to_string(p.max_pair_ratio_unity) << "\n";
  out << "globally degenerate: " << to_string(p.globally_degenerate) << "\n";
  return kOk;
}

int cmd_bound(const Config& c, std::ostream& out) {
  Classification cl = classify_detailed(load(c.input), IsolationConfig{static_cast<mp::Precision>(c.precision)});
  std::optional<BoundReport> b = governing_bound(cl, decide_options(c));
  if (!b) {
    std::string reason = "no explicit bound for case " + std::string(to_string(cl.tag));
    if (cl.minimal.order() < 2) reason = "order-1 sequences are decided in closed form";
    if (c.format == "json") {
      ordered_json j;
      j["problem"] = std::string(to_string(problem_of(c.problem)));
      j["classification"] = std::string(to_string(cl.tag));
      j["theorem"] = nullptr;
      j["reason"] = reason;
      out << j.dump(2) << "\n";
    } else {
      out << "case: " << to_string(cl.tag) << "\n" << reason << "\n";
    }
    return kUnknown;
  }
  if (c.format == "json") {
    ordered_json j;
    j["problem"] = std::string(to_string(problem_of(c.problem)));
    j["classification"] = std::string(to_string(cl.tag));
    const ordered_json bound = to_json(*b);
    for (const auto& item : bound.items()) j[item.key()] = item.value();
    out << j.dump(2) << "\n";
  } else {
    out << "case: " << to_string(cl.tag) << "\n";
    print_bound_text(*b, out);
  }
  return kOk;
}

int cmd_decide(const Config& c, std::ostream& out) {
  Verdict v = decide(problem_of(c.problem), load(c.input), decide_options(c));
  if (c.format == "json") {
    out << to_json(v).dump(2) << "\n";
  } else {
    out << to_string(v.problem) << ": " << to_string(v.answer) << "\n";
    out << "case: " << to_string(v.case_tag) << "\n";
    out << "mode: " << to_string(v.mode) << "\n";
    if (v.witness) out << "witness: u_" << *v.witness << " = " << format_rational(*v.witness_value) << "\n";
    if (v.scanned) out << "scanned: " << v.scanned->first << ".." << v.scanned->second << "\n";
    if (v.n0) out << "n0: " << *v.n0 << "\n";
    if (v.sign_b1 != 0) out << "sign(b1): " << (v.sign_b1 > 0 ? "+" : "-") << "\n";
    if (v.bound) print_bound_text(*v.bound, out);
    out << "reason: " << v.reason << "\n";
  }
  return v.answer == Answer::Unknown ? kUnknown : kOk;
}

int cmd_terms(const Config& c, std::ostream& out) {
  std::vector<Rational> terms = iterate_terms(load(c.input), c.count);
  if (c.format == "json") {
    ordered_json j;
    j["count"] = c.count;
    j["terms"] = ordered_json::array();
    for (const auto& t : terms) j["terms"].push_back(format_rational(t));
    out << j.dump(2) << "\n";
  } else {
    for (std::size_t n = 0; n < terms.size(); ++n) out << n << " " << format_rational(terms[n]) << "\n";
  }
  return kOk;
}

int cmd_density(const Config& c, std::ostream& out) {
  DensityOptions o;
  o.m = c.degree;
  o.H = c.height;
  o.family = c.family == "general" ? Family::General : Family::Monic;
  o.samples = c.samples;
  o.seed = c.seed;
  o.threads = c.threads;
  DensityReport r = density_scan(o);
  ordered_json j = to_json(r);
  if (c.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    out << "family: " << to_string(r.family) << " m=" << r.m << " H=" << r.H
        << (r.exhaustive ? " exhaustive" : " sampled") << "\n";
    out << "total: " << r.total << "\n";
    for (const auto& [name, value] : j["counts"].items()) {
      out << name << ": " << value.get<std::uint64_t>() << " (" << j["fractions"][name].get<double>() << ")\n";
    }
  }
  return kOk;
}

void add_shared(CLI::App* sub, Config& c, bool needs_input) {
  if (needs_input) sub->add_option("--input", c.input, "LRS JSON file, '-' for stdin")->required();
  sub->add_option("--format", c.format, "Output format")->transform(CLI::IsMember({"json", "text"}, CLI::ignore_case));
  sub->add_option("--precision", c.precision, "Starting working precision in bits")->check(CLI::Range(32, 65536));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Skolem, Positivity and Ultimate Positivity for rational linear recurrences", "skolem"};
  app.require_subcommand(1);

  auto* classify_cmd = app.add_subcommand("classify", "Certified root classification of the minimal recurrence");
  add_shared(classify_cmd, c, true);

  auto* bound_cmd = app.add_subcommand("bound", "Explicit bound on the number of terms to test");
  add_shared(bound_cmd, c, true);
  bound_cmd->add_option("--problem", c.problem, "sp, pp or upp")->transform(CLI::IsMember({"sp", "pp", "upp"}, CLI::ignore_case));
  bound_cmd->add_flag("--use-irreducibility", c.use_irreducibility, "Use the sharper constant when f* is irreducible");

  auto* decide_cmd = app.add_subcommand("decide", "Decide SP, PP or UPP");
  add_shared(decide_cmd, c, true);
  decide_cmd->add_option("--problem", c.problem, "sp, pp or upp")->transform(CLI::IsMember({"sp", "pp", "upp"}, CLI::ignore_case));
  decide_cmd->add_option("--cutoff", c.cutoff, "Largest index scanned");
  decide_cmd->add_option("--mode", c.mode, "plain or sharp")->transform(CLI::IsMember({"plain", "sharp"}, CLI::ignore_case));
  decide_cmd->add_flag("--use-irreducibility", c.use_irreducibility, "Use the sharper constant when f* is irreducible");

  auto* terms_cmd = app.add_subcommand("terms", "Exact terms u_0, u_1, ...");
  add_shared(terms_cmd, c, true);
  terms_cmd->add_option("--count", c.count, "Number of terms")->check(CLI::Range(0, 1000000));

  auto* density_cmd = app.add_subcommand("density", "Root statistics over a family of integer polynomials");
  add_shared(density_cmd, c, false);
  density_cmd->add_option("--degree", c.degree)->check(CLI::Range(1, 12));
  density_cmd->add_option("--height", c.height)->check(CLI::Range(1L, 1000000L));
  density_cmd->add_option("--family", c.family)->transform(CLI::IsMember({"monic", "general"}, CLI::ignore_case));
  density_cmd->add_option("--samples", c.samples, "Sample size; exhaustive when omitted");
  density_cmd->add_option("--seed", c.seed);
  density_cmd->add_option("--threads", c.threads, "Worker threads, 0 for all cores");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    if (classify_cmd->parsed()) return cmd_classify(c, out);
    if (bound_cmd->parsed()) return cmd_bound(c, out);
    if (decide_cmd->parsed()) return cmd_decide(c, out);
    if (terms_cmd->parsed()) return cmd_terms(c, out);
    return cmd_density(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::PrecisionExhausted:
        return kUnknown;
      case ErrorCode::ParseError:
      case ErrorCode::ZeroTrailingCoefficient:
      case ErrorCode::AllInitialTermsZero:
      case ErrorCode::LengthMismatch:
      case ErrorCode::InvalidArgument:
        return kInvalidInput;
      default:
        return kFailure;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kFailure;
  }
}

}  // namespace skolem::cli
