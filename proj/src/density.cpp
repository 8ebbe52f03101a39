#include <algorithm>
#include <random>
#include <thread>

#include "skolem/decider.hpp"
#include "skolem/errors.hpp"

namespace skolem {

namespace {

void tally(DensityReport& r, const IntPolynomial& f) {
  ++r.total;
  RootProfile p;
  try {
    p = root_profile(f);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::PrecisionExhausted) throw;
    ++r.unresolved;
    return;
  }
  if (p.k_max == 1) {
    ++r.k_max_1;
  } else if (p.k_max == 2) {
    ++r.k_max_2;
  } else {
    ++r.k_max_3_plus;
  }
  if (p.dominant) ++r.dominant;
  if (p.globally_degenerate == Tri::Yes) ++r.degenerate;
  if (p.dominant && p.globally_degenerate == Tri::No) ++r.non_degenerate_dominant;
  if (!p.dominant && p.k_max != 2) ++r.residue;
}

void merge(DensityReport& into, const DensityReport& part) {
  into.total += part.total;
  into.k_max_1 += part.k_max_1;
  into.k_max_2 += part.k_max_2;
  into.k_max_3_plus += part.k_max_3_plus;
  into.dominant += part.dominant;
  into.degenerate += part.degenerate;
  into.non_degenerate_dominant += part.non_degenerate_dominant;
  into.residue += part.residue;
  into.unresolved += part.unresolved;
}

// Descending coefficients of the index-th member of the family.
IntPolynomial member(std::uint64_t index, const DensityOptions& o) {
  const std::uint64_t width = static_cast<std::uint64_t>(2 * o.H + 1);
  std::vector<mpz_class> desc;
  if (o.family == Family::Monic) {
    desc.emplace_back(1);
  } else {
    // a_0 ranges over [-H, H] \ {0}.
    const std::uint64_t lead_count = static_cast<std::uint64_t>(2 * o.H);
    long lead = static_cast<long>(index % lead_count) - o.H;
    if (lead >= 0) ++lead;
    desc.emplace_back(lead);
    index /= lead_count;
  }
  for (int i = 0; i < o.m; ++i) {
    desc.emplace_back(static_cast<long>(index % width) - o.H);
    index /= width;
  }
  return IntPolynomial::from_descending(std::move(desc));
}

}  // namespace

DensityReport density_scan(const DensityOptions& o) {
  if (o.m < 1 || o.H < 1) throw Error(ErrorCode::InvalidArgument, "density scan needs m >= 1 and H >= 1");
  DensityReport report;
  report.m = o.m;
  report.H = o.H;
  report.family = o.family;
  report.exhaustive = !o.samples.has_value();
  report.seed = o.seed;

  std::vector<IntPolynomial> sampled;
  std::uint64_t count = 0;
  if (o.samples) {
    std::mt19937_64 rng(o.seed);
    std::uniform_int_distribution<long> coeff(-o.H, o.H);
    sampled.reserve(*o.samples);
    for (std::uint64_t s = 0; s < *o.samples; ++s) {
      std::vector<mpz_class> desc;
      if (o.family == Family::Monic) {
        desc.emplace_back(1);
      } else {
        long lead = 0;
        while (lead == 0) lead = coeff(rng);
        desc.emplace_back(lead);
      }
      for (int i = 0; i < o.m; ++i) desc.emplace_back(coeff(rng));
      sampled.push_back(IntPolynomial::from_descending(std::move(desc)));
    }
    count = *o.samples;
  } else {
    count = 1;
    const std::uint64_t width = static_cast<std::uint64_t>(2 * o.H + 1);
    for (int i = 0; i < o.m; ++i) count *= width;
    if (o.family == Family::General) count *= static_cast<std::uint64_t>(2 * o.H);
  }

  unsigned threads = o.threads != 0 ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(count, 1)));
  std::vector<DensityReport> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        const std::uint64_t begin = count * t / threads;
        const std::uint64_t end = count * (t + 1) / threads;
        for (std::uint64_t i = begin; i < end; ++i) tally(parts[t], o.samples ? sampled[i] : member(i, o));
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const auto& part : parts) merge(report, part);
  return report;
}

}  // namespace skolem
