#pragma once

// Case routing and verdicts for the Skolem, Positivity and Ultimate
// Positivity problems of rational linear recurrences.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skolem/bounds.hpp"
#include "skolem/lrs.hpp"
#include "skolem/poly_analysis.hpp"

namespace skolem {

enum class CaseTag { Dominant, TwoMaxNonDegenerate, DegenerateMaxPair, NotSimple, Inconclusive };
enum class Problem { SP, PP, UPP };
enum class Answer { Yes, No, ZeroAt, NoZero, Unknown };
enum class Mode { Plain, Sharp };

std::string_view to_string(CaseTag tag);
std::string_view to_string(Problem problem);
std::string_view to_string(Answer answer);
std::string_view to_string(Mode mode);

struct Classification {
  CaseTag tag = CaseTag::Inconclusive;
  RootProfile profile;  // of f* for the minimal recurrence
  LRSpec minimal;
};

Classification classify_detailed(const LRSpec& spec, IsolationConfig config = {});
CaseTag classify(const LRSpec& spec);

// u_n = sum_j b_j alpha_j^n for a simple recurrence.
struct CoefficientIntervals {
  std::vector<RootBox> roots;              // alpha_j
  std::vector<mp::ComplexInterval> b;      // b_j, none containing 0
  mp::Precision precision = 0;
};

// Throws Error{NotSimple} when f* has a repeated root.
CoefficientIntervals solve_coefficients_interval(const LRSpec& spec, mp::Precision precision = mp::kDefaultPrecision);

struct SharpCutoff {
  std::uint64_t n0 = 0;
  int sign_b1 = 0;      // certified sign of the dominant coefficient
  int sign_alpha1 = 0;  // sign of the dominant root
  CoefficientIntervals coefficients;  // dominant root first
};

// For n > n0, |b_1 alpha_1^n| > sum_{j >= 2} |b_j alpha_j^n|, hence
// sign(u_n) = sign(b_1) sign(alpha_1)^n. Needs a dominant root.
SharpCutoff sharp_cutoff(const LRSpec& spec, mp::Precision precision = mp::kDefaultPrecision);

struct DecideOptions {
  std::uint64_t cutoff = 1000000;
  Mode mode = Mode::Sharp;
  mp::Precision precision = mp::kDefaultPrecision;
  // Use C_2 (and the real-root N_1 variant) when irreducibility is certified.
  bool use_irreducibility = false;
};

struct Verdict {
  Problem problem = Problem::SP;
  Answer answer = Answer::Unknown;
  Mode mode = Mode::Sharp;
  CaseTag case_tag = CaseTag::Inconclusive;
  std::optional<std::uint64_t> witness;          // index n of the certificate term
  std::optional<Rational> witness_value;         // exact u_n
  std::optional<std::pair<std::uint64_t, std::uint64_t>> scanned;  // inclusive range
  std::optional<BoundReport> bound;
  std::optional<std::uint64_t> n0;
  int sign_b1 = 0;  // 0 when not certified
  std::string reason;
};

Verdict decide_skolem(const LRSpec& spec, const DecideOptions& options = {});
Verdict decide_positivity(const LRSpec& spec, const DecideOptions& options = {});
Verdict decide_upp(const LRSpec& spec, const DecideOptions& options = {});
Verdict decide(Problem problem, const LRSpec& spec, const DecideOptions& options = {});

// The bound that governs SP for this classification, when one exists.
std::optional<BoundReport> governing_bound(const Classification& c, const DecideOptions& options);

enum class Family { Monic, General };
std::string_view to_string(Family family);

struct DensityOptions {
  int m = 2;
  long H = 1;
  Family family = Family::Monic;
  std::optional<std::uint64_t> samples;  // exhaustive when empty
  std::uint64_t seed = 1;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct DensityReport {
  int m = 0;
  long H = 0;
  Family family = Family::Monic;
  bool exhaustive = true;
  std::uint64_t seed = 0;
  std::uint64_t total = 0;
  std::uint64_t k_max_1 = 0;
  std::uint64_t k_max_2 = 0;
  std::uint64_t k_max_3_plus = 0;
  std::uint64_t dominant = 0;
  std::uint64_t degenerate = 0;
  std::uint64_t non_degenerate_dominant = 0;
  // Neither dominant nor exactly two maximal roots.
  std::uint64_t residue = 0;
  std::uint64_t unresolved = 0;

  double fraction(std::uint64_t count) const { return total == 0 ? 0.0 : static_cast<double>(count) / static_cast<double>(total); }
};

DensityReport density_scan(const DensityOptions& options);

}  // namespace skolem
