#include "fodesc/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "fodesc/error.hpp"
#include "fodesc/game.hpp"
#include "fodesc/synthesis.hpp"

namespace fodesc {

namespace {

double xlogx(double x) { return x > 0 ? x * std::log2(x) : 0.0; }

void require_nonempty(const TypeProfile& p) {
  if (p.n() == 0) throw InputError("entropy of an empty structure");
}

}  // namespace

double shannon_entropy(const TypeProfile& p) {
  require_nonempty(p);
  const double n = static_cast<double>(p.n());
  double h = 0;
  for (auto c : p.counts) h -= xlogx(static_cast<double>(c) / n);
  return std::max(h, 0.0);
}

double boltzmann_entropy(const TypeProfile& p) { return log2(multinomial(p)); }

double boltzmann_entropy_d(const ClassTuple& c) { return log2(class_size(c)); }

double gap_bound(std::size_t t, std::size_t n) {
  if (n == 0) throw InputError("n must be positive");
  const double nn = static_cast<double>(n);
  const double tt = static_cast<double>(t);
  const double log_e = std::numbers::log2e;
  return (tt - 1) * std::log2(std::sqrt(2 * std::numbers::pi * nn)) / nn -
         log_e / (12 * nn * nn) + tt * log_e / (12 * nn * nn + nn);
}

EntropyReport entropy_report(const TypeProfile& p) {
  EntropyReport r;
  r.shannon = shannon_entropy(p);
  r.boltzmann = boltzmann_entropy(p);
  r.boltzmann_over_n = r.boltzmann / static_cast<double>(p.n());
  r.gap = r.shannon - r.boltzmann_over_n;
  r.gap_bound = gap_bound(p.type_count(), p.n());
  return r;
}

EntropyReport entropy_gap_check(const TypeProfile& p) {
  if (std::any_of(p.counts.begin(), p.counts.end(), [](auto c) { return c == 0; }))
    throw InputError("the gap bound needs every type realized");
  auto r = entropy_report(p);
  if (!(r.gap < r.gap_bound)) {
    std::ostringstream msg;
    msg << "entropy gap " << r.gap << " not below " << r.gap_bound << " for counts "
        << format_counts(p.counts);
    throw EvaluationError(msg.str());
  }
  return r;
}

double f_curve(std::size_t t, double p) {
  if (t < 2) throw InputError("need at least two types");
  const double k = static_cast<double>(t - 1);
  if (!(p >= 0) || p >= 1.0 / static_cast<double>(t)) throw InputError("p outside [0, 1/t)");
  return -xlogx(1 - k * p) - k * xlogx(p);
}

double h_curve(double p) {
  if (!(p >= 0) || p > 0.5) throw InputError("p outside [0, 1/2]");
  return -xlogx(1 - p) - xlogx(p);
}

std::vector<CurveRow> fo_bound_curves(const Vocabulary& vocab, std::size_t n,
                                      const CurveOptions& options) {
  if (n == 0) throw InputError("n must be positive");
  if (options.samples < 2) throw InputError("need at least two samples");
  const auto t = vocab.type_count();
  const double nn = static_cast<double>(n);
  const double c = static_cast<double>(vocab.c_tau());
  const double ceiling = 2 * nn + c;
  std::vector<CurveRow> rows;
  for (std::size_t i = 0; i < options.samples; ++i) {
    CurveRow row;
    row.p = 0.5 * static_cast<double>(i) / static_cast<double>(options.samples - 1);
    row.h = h_curve(row.p);
    row.upper_h = std::min(6 * nn * row.p + c, ceiling);
    if (row.p < 1.0 / static_cast<double>(t)) {
      row.f = f_curve(t, row.p);
      double lower = 3 * nn * row.p - 3;
      if (options.clip) lower = std::max(lower, 0.0);
      row.lower = lower;
      row.upper_f = std::min(3 * nn * (1 - static_cast<double>(t - 1) * row.p) + c, ceiling);
    }
    rows.push_back(row);
  }
  return rows;
}

namespace {

std::vector<std::size_t> step_counts(std::size_t t, std::size_t n, std::size_t h) {
  std::vector<std::size_t> counts(t, h);
  counts.back() = n - (t - 1) * h;
  return counts;
}

}  // namespace

std::vector<StepRow> fod_bound_steps(const Vocabulary& vocab, std::size_t n, std::size_t d) {
  if (d < 2) throw InputError("d must be at least 2");
  const auto t = vocab.type_count();
  std::vector<StepRow> rows;
  for (std::size_t h = 1; h < d; ++h) {
    if (t * h > n) break;
    StepRow row;
    row.h = h;
    row.lower_entropy = log2(multinomial(n, step_counts(t, n, h)));
    row.upper_entropy = log2(binomial(n, h));
    row.lower = 3 * static_cast<std::int64_t>(h) - 3;
    row.upper = 6 * static_cast<std::int64_t>(h) + vocab.c_tau();
    rows.push_back(row);
  }
  return rows;
}

RegionDiagnostics region_membership(const TypeProfile& p, std::size_t samples) {
  require_nonempty(p);
  if (samples < 2) throw InputError("need at least two samples");
  const auto t = p.type_count();
  const auto vocab = Vocabulary::with_arity(arity_for_type_count(t));
  const double n = static_cast<double>(p.n());
  const double c = static_cast<double>(vocab.c_tau());

  RegionDiagnostics out;
  out.shannon = shannon_entropy(p);
  out.lower = lower_bound(p);
  out.upper = upper_bound(p);
  out.ceiling = 2 * static_cast<std::int64_t>(p.n()) + vocab.c_tau();
  const double lo = static_cast<double>(out.lower);
  const double up = static_cast<double>(out.upper);
  for (std::size_t i = 0; i < samples; ++i) {
    const double q = 0.5 * static_cast<double>(i) / static_cast<double>(samples - 1);
    bool ok = true;
    if (q < 1.0 / static_cast<double>(t) && out.shannon > f_curve(t, q) + entropy_tolerance) {
      ++out.checks;
      ok = ok && lo > 3 * n * q - 3 && up < 3 * n * (1 - static_cast<double>(t - 1) * q) + c;
    }
    if (out.shannon < h_curve(q) - entropy_tolerance) {
      ++out.checks;
      ok = ok && up < 6 * n * q + c;
    }
    if (!ok) out.violations.push_back(q);
  }
  return out;
}

SweepSummary sweep_gap(std::size_t type_count, std::size_t max_n) {
  SweepSummary s;
  for (std::size_t n = type_count; n <= max_n; ++n) {
    for_each_profile(type_count, n, [&](const TypeProfile& p) {
      if (std::any_of(p.counts.begin(), p.counts.end(), [](auto c) { return c == 0; }))
        return true;
      ++s.cases;
      ++s.checks;
      const auto r = entropy_report(p);
      if (!(r.gap < r.gap_bound)) ++s.violations;
      return true;
    });
  }
  return s;
}

SweepSummary sweep_region(std::size_t type_count, std::size_t n, std::size_t samples) {
  SweepSummary s;
  for_each_profile(type_count, n, [&](const TypeProfile& p) {
    const auto d = region_membership(p, samples);
    ++s.cases;
    s.checks += d.checks + 1;
    s.violations += d.violations.size() + (d.upper <= d.ceiling ? 0 : 1);
    return true;
  });
  return s;
}

SweepSummary sweep_steps(std::size_t type_count, std::size_t n, std::size_t d) {
  const auto vocab = Vocabulary::with_arity(arity_for_type_count(type_count));
  const auto c_tau = vocab.c_tau();
  // Thresholds compared as exact integers: no rounding at equality.
  struct Threshold {
    std::size_t h;
    BigInt lower, upper;
  };
  std::vector<Threshold> thresholds;
  for (std::size_t h = 1; h < d && type_count * h <= n; ++h)
    thresholds.push_back({h, multinomial(n, step_counts(type_count, n, h)), binomial(n, h)});

  SweepSummary s;
  for (const auto& c : enumerate_class_tuples(type_count, n, d)) {
    ++s.cases;
    const BigInt size = class_size(c);
    const auto lower = lower_bound_d(c);
    const auto upper = upper_bound_d(c);
    for (const auto& th : thresholds) {
      const auto h = static_cast<std::int64_t>(th.h);
      if (size > th.lower) {
        ++s.checks;
        if (!(lower > 3 * h - 3)) ++s.violations;
      }
      if (size < th.upper) {
        ++s.checks;
        if (!(upper < 6 * h + c_tau)) ++s.violations;
      }
    }
  }
  return s;
}

double balanced_entropy_ratio(std::size_t type_count, std::size_t n) {
  if (n < 2) throw InputError("n must be at least 2");
  TypeProfile p{std::vector<std::size_t>(type_count, n / type_count)};
  for (std::size_t j = 0; j < n % type_count; ++j) ++p.counts[j];
  const auto r = entropy_report(p);
  return r.shannon / r.boltzmann_over_n;
}

}  // namespace fodesc
