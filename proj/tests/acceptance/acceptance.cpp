// Acceptance suite: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: all)

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fodesc/entropy.hpp"
#include "fodesc/game.hpp"
#include "fodesc/oracle.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/structures.hpp"
#include "fodesc/synthesis.hpp"

using namespace fodesc;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  void require(bool ok, const std::string& why) {
    if (!ok && pass) note << "first failure: " << why << "; ";
    pass = pass && ok;
  }
};

std::string str(const std::vector<std::size_t>& v) { return "(" + format_counts(v) + ")"; }

// 1. Full synthesis: defines and stays under the closed-form bound.
void synthesis_soundness(Outcome& o) {
  std::size_t profiles = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& p : enumerate_profiles(std::size_t{1} << k, n)) {
        ++profiles;
        const auto f = synthesize_full(p);
        o.require(defines(representative(p), f), "defines fails at " + str(p.counts));
        o.require(static_cast<std::int64_t>(f.size()) <= upper_bound(p),
                  "size above bound at " + str(p.counts));
      }
    }
  }
  o.note << profiles << " profiles (k <= 2, n <= 8)";
}

// 2. FO_d synthesis: defines the class, rank <= d, both size bounds.
void synthesis_d_soundness(Outcome& o) {
  std::size_t classes = 0, six_branch = 0;
  for (std::size_t k = 1; k <= 2; ++k) {
    const std::size_t t = std::size_t{1} << k;
    const auto c_tau = Vocabulary::with_arity(k).c_tau();
    for (std::size_t n = 1; n <= 8; ++n) {
      for (std::size_t d = 1; d <= 4; ++d) {
        for (const auto& c : enumerate_class_tuples(t, n, d)) {
          ++classes;
          const auto f = synthesize_d(c);
          const auto size = static_cast<std::int64_t>(f.size());
          o.require(defines_class(c, f), "defines_class fails at " + str(c.m));
          o.require(f.qrank() <= d, "rank above d at " + str(c.m));
          std::int64_t m_r = 0;
          for (auto v : c.m)
            if (v < d) m_r = std::max(m_r, static_cast<std::int64_t>(v));
          o.require(size <= 3 * static_cast<std::int64_t>(d) + 3 * m_r + c_tau,
                    "3d + 3m_r bound fails at " + str(c.m));
          if (std::count(c.m.begin(), c.m.end(), d) == 1) {
            ++six_branch;
            auto sorted = c.m;
            std::sort(sorted.rbegin(), sorted.rend());
            o.require(size <= 6 * static_cast<std::int64_t>(sorted[1]) + c_tau,
                      "6 m bound fails at " + str(c.m));
          }
          o.require(size <= upper_bound_d(c), "closed-form bound fails at " + str(c.m));
        }
      }
    }
  }
  o.require(six_branch > 0, "6m branch never exercised");
  o.note << classes << " classes (k <= 2, n <= 8, d <= 4), " << six_branch
         << " with exactly one entry equal to d";
}

// 3. Exact complexity between the game lower bound and the synthesized size.
void oracle_bracketing(Outcome& o) {
  EnumerationBudget budget{8, 4, 4, 500'000'000};
  std::ostringstream values;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& p : enumerate_profiles(2, n)) {
      const auto r = exact_C(p, budget);
      const auto upper = synthesize_full(p).size();
      const auto lower = lower_bound(p);
      if (!r.size) {
        // Unsettled within the budget: C > 8 must still fit under the upper end.
        o.require(upper > budget.max_size, "no sentence up to 8 but synthesis is smaller");
        values << str(p.counts) << ">8 ";
        continue;
      }
      o.require(static_cast<std::int64_t>(*r.size) >= lower, "below lower bound at " + str(p.counts));
      o.require(*r.size <= upper, "above synthesized size at " + str(p.counts));
      o.require(defines(p, *r.witness), "witness does not define " + str(p.counts));
      values << str(p.counts) << "=" << *r.size << " ";
    }
  }
  o.note << "k = 1, n <= 3: " << values.str();
}

// 4. S wins FS(r, q, A, B) exactly when a prenex sentence of size <= r with
// <= q quantifiers separates A from B.
void game_equivalence(Outcome& o) {
  std::size_t positions = 0, s_wins = 0;
  for (std::size_t n = 1; n <= 2; ++n) {
    const auto profiles = enumerate_profiles(2, n);
    std::vector<std::vector<TypeProfile>> sets{{}};
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      sets.push_back({profiles[i]});
      for (std::size_t j = i + 1; j < profiles.size(); ++j) sets.push_back({profiles[i], profiles[j]});
    }
    for (const auto& A : sets) {
      for (const auto& B : sets) {
        for (std::size_t q = 0; q <= 3; ++q) {
          const auto oracle =
              min_separating_sentence(1, A, B, EnumerationBudget{6, q, q, 500'000'000});
          o.require(!oracle.budget_exhausted, "oracle budget exhausted");
          for (std::size_t r = 0; r <= 6; ++r) {
            GamePosition pos;
            pos.r = r;
            pos.q = q;
            pos.A = model_set(A);
            pos.B = model_set(B);
            const auto res = decide(pos);
            ++positions;
            const bool s = res.winner == Winner::S;
            s_wins += s;
            o.require(s == (oracle.size && *oracle.size <= r), "disagreement");
            if (s) {
              const Assignment empty;
              bool ok = res.strategy->size() <= r && quantifier_count(*res.strategy) <= q;
              for (const auto& p : A) ok = ok && eval(representative(p), empty, *res.strategy);
              for (const auto& p : B) ok = ok && !eval(representative(p), empty, *res.strategy);
              o.require(ok, "extracted strategy does not separate");
            }
          }
        }
      }
    }
  }
  o.note << positions << " positions (n <= 2, |A|,|B| <= 2, r <= 6, q <= 3), " << s_wins
         << " won by S";
}

// 5. Witness pairs with second largest count 2 need two quantifiers.
void quantifier_floor(Outcome& o) {
  std::size_t pairs = 0, separating = 0;
  const auto P = Vocabulary::with_arity(1);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (const auto& p : enumerate_profiles(2, n)) {
      const auto w = lower_bound_witness(p);
      const auto l = plan_full(p).counts;
      if (!w.other || l.size() < 2 || l[l.size() - 2] != 2) continue;
      ++pairs;
      const auto M = representative(P, p), W = representative(P, *w.other);
      const Assignment empty;
      enumerate_sentences(1, EnumerationBudget{8, 3, 3, 500'000'000}, [&](const PrenexFormula& f) {
        const auto g = f.to_formula();
        if (eval(M, empty, g) != eval(W, empty, g)) {
          ++separating;
          o.require(f.prefix.size() >= 2, "single-quantifier separator");
        }
        return true;
      });
      const auto one =
          min_separating_sentence(1, {p}, {*w.other}, EnumerationBudget{10, 1, 1, 500'000'000});
      o.require(!one.size && !one.budget_exhausted, "one quantifier separates");
      for (std::size_t r = 1; r <= 12; ++r) {
        GamePosition pos;
        pos.r = r;
        pos.q = 1;
        pos.A = model_set(std::vector<TypeProfile>{p});
        pos.B = model_set(std::vector<TypeProfile>{*w.other});
        o.require(decide(pos).winner == Winner::D, "S wins with one quantifier");
      }
      o.note << str(p.counts) << " vs " << str(w.other->counts) << "; ";
    }
  }
  o.require(pairs > 0, "no witness pairs");
  o.note << separating << " separating sentences of size <= 8, all with >= 2 quantifiers; S loses"
         << " FS(r, 1) for r <= 12";
}

// 6. Fraction of balanced samples.
void balancedness(Outcome& o) {
  const std::pair<std::size_t, std::size_t> cases[] = {{100, 1}, {100, 2}, {400, 2}};
  for (auto [n, k] : cases) {
    const auto vocab = Vocabulary::with_arity(k);
    const std::size_t samples = 10000;
    std::size_t balanced = 0;
    for (std::size_t s = 0; s < samples; ++s)
      balanced += is_balanced(sample_uniform(vocab, n, 1000 * n + 10 * k + s * 7919));
    const double fraction = static_cast<double>(balanced) / samples;
    const double floor = 1.0 - std::pow(2.0, static_cast<double>(k + 1)) / static_cast<double>(n);
    o.require(fraction >= floor, "fraction below floor");
    o.note << "(n=" << n << ", k=" << k << ") " << fraction << " >= " << floor << "; ";
  }
}

// 7. Mean synthesized size and mean lower bound near 3n/2 at k = 1.
void expected_complexity(Outcome& o) {
  const auto P = Vocabulary::with_arity(1);
  std::vector<double> gaps;
  for (std::size_t n : {500, 1000, 2000}) {
    double size = 0, lower = 0;
    const std::size_t samples = 10000;
    for (std::size_t s = 0; s < samples; ++s) {
      const auto p = profile_of(sample_uniform(P, n, 77 + s));
      size += static_cast<double>(synthesize_full(p).size());
      lower += static_cast<double>(lower_bound(p));
    }
    size /= samples;
    lower /= samples;
    const double target = 1.5 * static_cast<double>(n);
    gaps.push_back((size - lower) / static_cast<double>(n));
    if (n == 1000) {
      o.require(std::abs(size - target) <= 0.1 * target, "mean size not within 10%");
      o.require(std::abs(lower - target) <= 0.1 * target, "mean lower bound not within 10%");
    }
    o.note << "n=" << n << ": size " << size << ", lower " << lower << "; ";
  }
  o.require(gaps[1] < gaps[0] && gaps[2] < gaps[1], "relative gap does not shrink");
  o.note << "gap/n " << gaps[0] << " > " << gaps[1] << " > " << gaps[2];
}

// 8. Shannon minus normalized Boltzmann entropy stays below the Stirling bound.
void entropy_identity(Outcome& o) {
  for (std::size_t t : {2, 4}) {
    const auto s = sweep_gap(t, 30);
    o.require(s.violations == 0, "gap inequality violated");
    o.require(s.cases > 0, "empty sweep");
    o.note << "t=" << t << ": " << s.cases << " profiles, " << s.violations << " violations; ";
  }
  double prev = 1e9;
  for (std::size_t n : {10, 100, 1000, 10000}) {
    const double r = balanced_entropy_ratio(2, n);
    o.require(r < prev, "ratio not decreasing");
    prev = r;
  }
  o.require(std::abs(prev - 1.0) <= 0.02, "ratio not within 0.02 of 1");
  o.note << "ratio at n=10000: " << prev;
}

// 9. Region exclusion for full FO and FO_d.
void region_exclusion(Outcome& o) {
  const auto full = sweep_region(4, 60);
  o.require(full.violations == 0, "profile outside the region");
  const auto steps = sweep_steps(4, 20, 5);
  o.require(steps.violations == 0, "class outside the step region");
  o.require(full.checks > 0 && steps.checks > 0, "vacuous sweep");
  o.note << "n=60, t=4: " << full.cases << " profiles, " << full.checks << " checks; "
         << "n=20, d=5, t=4: " << steps.cases << " classes, " << steps.checks << " checks";
}

// 10. Landmarks: C = 2 for the all-P model, H_B = 0 for one realized type.
void landmarks(Outcome& o) {
  for (std::size_t n = 1; n <= 10; ++n) {
    const auto r = exact_C(TypeProfile{{0, n}}, EnumerationBudget{4, 2, 2, 50'000'000});
    o.require(r.size == 2u, "C of the all-P model is not 2");
    o.require(r.witness && defines(TypeProfile{{0, n}}, *r.witness), "witness fails");
    for (std::size_t t : {2, 4, 8}) {
      std::vector<std::size_t> counts(t, 0);
      counts[0] = n;
      o.require(boltzmann_entropy(TypeProfile{counts}) == 0.0, "H_B of one type is not 0");
    }
  }
  o.note << "C = 2 for n = 1..10, H_B = 0 for t in {2, 4, 8}";
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<void(Outcome&)>>> criteria{
      {"synthesis soundness", synthesis_soundness},
      {"FO_d synthesis soundness", synthesis_d_soundness},
      {"oracle bracketing", oracle_bracketing},
      {"game-formula equivalence", game_equivalence},
      {"quantifier floor", quantifier_floor},
      {"balancedness", balancedness},
      {"expected complexity", expected_complexity},
      {"entropy identity", entropy_identity},
      {"region exclusion", region_exclusion},
      {"exact landmarks", landmarks},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.note << "exception: " << e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %zu %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first,
                secs, o.note.str().c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
