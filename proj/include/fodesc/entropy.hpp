#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fodesc/structures.hpp"

namespace fodesc {

// All values in bits.
double shannon_entropy(const TypeProfile& p);
double boltzmann_entropy(const TypeProfile& p);
double boltzmann_entropy_d(const ClassTuple& c);

struct EntropyReport {
  double shannon = 0;
  double boltzmann = 0;
  double boltzmann_over_n = 0;
  double gap = 0;        // shannon - boltzmann / n
  double gap_bound = 0;  // Stirling-derived bound on gap
};

// (t-1) log(sqrt(2 pi n)) / n - log(e) / 12n^2 + t log(e) / (12n^2 + n)
double gap_bound(std::size_t t, std::size_t n);

// Requires every count >= 1. Throws EvaluationError if gap >= gap_bound.
EntropyReport entropy_gap_check(const TypeProfile& p);
// Same report, no precondition and no assertion.
EntropyReport entropy_report(const TypeProfile& p);

// Entropy of (p, .., p, 1 - (t-1)p) with t-1 copies of p; p in [0, 1/t).
double f_curve(std::size_t t, double p);
// Entropy of (p, 1 - p); p in [0, 1/2].
double h_curve(double p);

struct CurveRow {
  double p = 0;
  std::optional<double> f;        // nullopt outside [0, 1/t)
  double h = 0;
  std::optional<double> lower;    // 3np - 3, clipped at 0 when requested
  std::optional<double> upper_f;  // min(3n(1 - (t-1)p), 2n) + c_tau
  double upper_h = 0;             // min(6np, 2n) + c_tau
};

struct CurveOptions {
  std::size_t samples = 512;
  bool clip = true;
};

// p sampled evenly on [0, 1/2], endpoints included.
std::vector<CurveRow> fo_bound_curves(const Vocabulary& vocab, std::size_t n,
                                      const CurveOptions& options = {});

struct StepRow {
  std::size_t h = 0;
  double lower_entropy = 0;  // log2 multinomial(n; h, .., h, n - (t-1)h)
  double upper_entropy = 0;  // log2 binomial(n, h)
  std::int64_t lower = 0;    // 3h - 3
  std::int64_t upper = 0;    // 6h + c_tau
};

// h = 1 .. d-1, skipping h with n < t h (no class realizes the lower step).
std::vector<StepRow> fod_bound_steps(const Vocabulary& vocab, std::size_t n, std::size_t d);

// Slack used when comparing a computed entropy against a curve value.
inline constexpr double entropy_tolerance = 1e-12;

struct RegionDiagnostics {
  double shannon = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;
  std::int64_t ceiling = 0;  // 2n + c_tau
  std::size_t checks = 0;    // sampled p values whose hypothesis applied
  std::vector<double> violations;  // p values where the bound interval escaped
  bool inside() const noexcept { return violations.empty() && upper <= ceiling; }
};

// Places (H_S, [lower, upper]) against the curve region, sampling p like
// fo_bound_curves.
RegionDiagnostics region_membership(const TypeProfile& p, std::size_t samples = 512);

struct SweepSummary {
  std::size_t cases = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
};

// Strict gap inequality over all all-positive profiles of size <= max_n.
SweepSummary sweep_gap(std::size_t type_count, std::size_t max_n);
// Region membership of every profile of size n.
SweepSummary sweep_region(std::size_t type_count, std::size_t n, std::size_t samples = 512);
// Every class tuple of size n: the step thresholds imply the lower and upper
// class bounds.
SweepSummary sweep_steps(std::size_t type_count, std::size_t n, std::size_t d);

// H_S / (H_B / n) for the most even profile of size n.
double balanced_entropy_ratio(std::size_t type_count, std::size_t n);

}  // namespace fodesc
