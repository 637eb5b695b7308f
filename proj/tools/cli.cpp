#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "fodesc/entropy.hpp"
#include "fodesc/error.hpp"
#include "fodesc/game.hpp"
#include "fodesc/oracle.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/structures.hpp"
#include "fodesc/syntax.hpp"
#include "fodesc/synthesis.hpp"

namespace fodesc::cli {

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

// A structure given either as a CSV file or as a profile literal.
struct Input {
  Vocabulary vocab;
  TypeProfile profile;
  std::optional<UnaryStructure> structure;
};

Input load_input(const std::string& source) {
  if (source.find("counts=") != std::string::npos) {
    auto lit = parse_profile_literal(source);
    return {lit.vocab, lit.profile, std::nullopt};
  }
  auto s = read_csv_file(source);
  return {s.vocab(), profile_of(s), s};
}

Vocabulary parse_vocab(const std::string& source) {
  if (!source.empty() && std::all_of(source.begin(), source.end(), ::isdigit)) {
    const auto k = std::stoul(source);
    if (k == 0) throw InputError("--vocab needs at least one predicate");
    return Vocabulary::with_arity(k);
  }
  std::vector<std::string> names;
  std::stringstream ss(source);
  for (std::string name; std::getline(ss, name, ',');) names.push_back(name);
  return Vocabulary(names);
}

// Output goes to --out when given, else to the command stream.
class Sink {
 public:
  Sink(std::ostream& fallback, const std::string& path) : stream_(&fallback) {
    if (!path.empty()) {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
      stream_ = file_.get();
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

// ---- svg ----------------------------------------------------------------

class Plot {
 public:
  Plot(double x_max, double y_max) : x_max_(x_max), y_max_(y_max) {}

  void line(const std::vector<std::pair<double, double>>& pts, const std::string& color) {
    if (pts.empty()) return;
    body_ << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (auto [x, y] : pts) body_ << num(sx(x)) << ',' << num(sy(y)) << ' ';
    body_ << "\"/>\n";
  }
  void dot(double x, double y, const std::string& color) {
    body_ << "<circle cx=\"" << num(sx(x)) << "\" cy=\"" << num(sy(y)) << "\" r=\"1.5\" fill=\""
          << color << "\"/>\n";
  }
  void xtick(double x, const std::string& label) {
    body_ << "<line x1=\"" << num(sx(x)) << "\" y1=\"" << num(sy(0)) << "\" x2=\"" << num(sx(x))
          << "\" y2=\"" << num(sy(0) + 5) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << num(sx(x)) << "\" y=\"" << num(sy(0) + 18)
          << "\" font-size=\"11\" text-anchor=\"middle\">" << label << "</text>\n";
  }
  void ytick(double y, const std::string& label) {
    body_ << "<line x1=\"" << num(sx(0) - 5) << "\" y1=\"" << num(sy(y)) << "\" x2=\"" << num(sx(0))
          << "\" y2=\"" << num(sy(y)) << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << num(sx(0) - 8) << "\" y=\"" << num(sy(y) + 4)
          << "\" font-size=\"11\" text-anchor=\"end\">" << label << "</text>\n";
  }
  void write(std::ostream& out, const std::string& xlabel, const std::string& ylabel) const {
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
        << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << height - bottom << "\" x2=\"" << width - right
        << "\" y2=\"" << height - bottom << "\" stroke=\"black\"/>\n"
        << "<line x1=\"" << left << "\" y1=\"" << top << "\" x2=\"" << left << "\" y2=\""
        << height - bottom << "\" stroke=\"black\"/>\n"
        << "<text x=\"" << width - right << "\" y=\"" << height - 8
        << "\" font-size=\"12\" text-anchor=\"end\">" << xlabel << "</text>\n"
        << "<text x=\"12\" y=\"" << top - 8 << "\" font-size=\"12\">" << ylabel << "</text>\n"
        << body_.str() << "</svg>\n";
  }

 private:
  static constexpr double width = 640, height = 440, left = 70, right = 20, top = 30, bottom = 45;
  double sx(double x) const { return left + x / x_max_ * (width - left - right); }
  double sy(double y) const { return height - bottom - y / y_max_ * (height - top - bottom); }

  double x_max_, y_max_;
  std::ostringstream body_;
};

// ---- commands -------------------------------------------------------------

struct Common {
  std::string input;
  std::string vocab = "2";
  std::size_t n = 0;
  std::size_t d = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t samples = 0;
  std::string format = "text";
  std::string out;
  std::uint64_t budget_nodes = 0;
  std::size_t budget_size = 8;
  std::size_t verify_max_n = 10;
};

int cmd_synthesize(const Common& o, std::ostream& out) {
  const auto in = load_input(o.input);
  const bool verify = in.profile.n() <= o.verify_max_n;
  std::string variant, verdict = "unverified";
  std::int64_t bound = 0;
  std::optional<Formula> f;
  if (o.d > 0) {
    const auto c = class_tuple_of(in.profile, o.d);
    const auto syn = synthesize_d_plan(c);
    f = syn.formula;
    variant = variant_name(syn.plan.variant);
    bound = upper_bound_d(c);
    if (verify) verdict = defines_class(c, *f) ? "defines" : "fails";
  } else {
    const auto syn = synthesize_full_plan(in.profile);
    f = syn.formula;
    variant = variant_name(syn.plan.variant);
    bound = upper_bound(in.profile);
    if (verify) verdict = defines(in.profile, *f) ? "defines" : "fails";
  }
  const std::string text = print(*f, in.vocab);
  if (!(parse(text, in.vocab) == *f)) verdict = "fails";
  Sink sink(out, o.out);
  if (o.format == "csv") {
    *sink << "variant,size,qrank,bound,verdict,formula\n"
          << variant << ',' << f->size() << ',' << f->qrank() << ',' << bound << ',' << verdict
          << ',' << csv_quote(text) << '\n';
  } else {
    *sink << "formula: " << text << "\nvariant: " << variant << "\nsize: " << f->size()
          << "\nqrank: " << f->qrank() << "\nbound: " << bound << "\nverdict: " << verdict << '\n';
  }
  return verdict == "fails" ? verification_failure : ok;
}

EnumerationBudget oracle_budget(const Common& o) {
  EnumerationBudget b;
  b.max_size = o.budget_size;
  b.max_quantifiers = std::min<std::size_t>(b.max_quantifiers, b.max_size);
  b.max_variables = b.max_quantifiers;
  if (o.budget_nodes > 0) b.node_budget = o.budget_nodes;
  return b;
}

int cmd_complexity(const Common& o, const std::string& mode, std::ostream& out) {
  const auto in = load_input(o.input);
  Sink sink(out, o.out);
  if (mode == "bounds") {
    std::int64_t lo = 0, hi = 0;
    if (o.d > 0) {
      const auto c = class_tuple_of(in.profile, o.d);
      lo = lower_bound_d(c);
      hi = upper_bound_d(c);
    } else {
      lo = lower_bound(in.profile);
      hi = upper_bound(in.profile);
    }
    if (o.format == "csv")
      *sink << "lower,upper\n" << lo << ',' << hi << '\n';
    else
      *sink << "bounds: [" << lo << ", " << hi << "]\n";
    return ok;
  }
  const auto budget = oracle_budget(o);
  const auto r = o.d > 0 ? exact_Cd(class_tuple_of(in.profile, o.d), budget)
                         : exact_C(in.profile, budget);
  const std::string name = o.d > 0 ? "C_d" : "C";
  if (!r.size) {
    if (o.format == "csv")
      *sink << "status,exceeds\nbudget," << r.searched_up_to << '\n';
    else
      *sink << name << " > " << r.searched_up_to << '\n';
    return budget_exceeded;
  }
  const std::string text = print(*r.witness, in.vocab);
  if (o.format == "csv")
    *sink << "size,witness\n" << *r.size << ',' << csv_quote(text) << '\n';
  else
    *sink << name << " = " << *r.size << "\nwitness: " << text << '\n';
  return ok;
}

int cmd_game(const Common& o, const std::vector<std::string>& a, const std::vector<std::string>& b,
             std::size_t r, std::size_t q, std::ostream& out) {
  if (a.empty() || b.empty()) throw InputError("game needs --a and --b structures");
  std::vector<UnaryStructure> sa, sb;
  std::optional<Vocabulary> vocab;
  auto load = [&](const std::string& source) {
    auto in = load_input(source);
    if (vocab && !(*vocab == in.vocab)) throw InputError("structures use different vocabularies");
    vocab = in.vocab;
    return in.structure ? *in.structure : representative(in.vocab, in.profile);
  };
  for (const auto& s : a) sa.push_back(load(s));
  for (const auto& s : b) sb.push_back(load(s));
  GamePosition pos;
  pos.r = r;
  pos.q = q;
  pos.A = model_set(sa);
  pos.B = model_set(sb);
  GameOptions opts;
  if (o.budget_nodes > 0) opts.node_budget = o.budget_nodes;
  const auto res = decide(pos, opts);
  Sink sink(out, o.out);
  *sink << "winner: " << (res.winner == Winner::S ? "S" : "D") << '\n';
  if (res.winner == Winner::D) return ok;
  const Formula& f = *res.strategy;
  const Assignment empty;
  bool good = f.size() <= r && quantifier_count(f) <= q;
  for (const auto& s : sa) good = good && eval(s, empty, f);
  for (const auto& s : sb) good = good && !eval(s, empty, f);
  *sink << "formula: " << print(f, *vocab) << "\nsize: " << f.size()
        << "\nverified: " << (good ? "yes" : "no") << '\n';
  return good ? ok : verification_failure;
}

int cmd_expected(const Common& o, bool exact, std::ostream& out) {
  const auto vocab = parse_vocab(o.vocab);
  if (o.n == 0) throw InputError("--n is required");
  const auto k = vocab.arity();
  Sink sink(out, o.out);
  if (exact) {
    if (k * o.n > 16) throw InputError("exact mode needs k n <= 16");
    const auto budget = oracle_budget(o);
    std::map<TypeProfile, std::size_t> cache;
    auto complexity = [&](const TypeProfile& p) {
      auto it = cache.find(p);
      if (it != cache.end()) return it->second;
      const auto r = exact_C(p, budget);
      if (!r.size) throw BudgetExceeded("exact complexity not settled within the size budget");
      return cache[p] = *r.size;
    };
    // Every structure on the domain, one by one.
    const std::size_t total = std::size_t{1} << (k * o.n);
    double by_models = 0;
    for (std::size_t code = 0; code < total; ++code) {
      std::vector<TypeIndex> types(o.n);
      for (std::size_t e = 0; e < o.n; ++e)
        types[e] = static_cast<TypeIndex>((code >> (k * e)) & ((std::size_t{1} << k) - 1));
      by_models += static_cast<double>(complexity(profile_of(UnaryStructure(vocab, types))));
    }
    by_models /= static_cast<double>(total);
    // Weighted by the number of structures per profile.
    double by_profiles = 0;
    for (const auto& p : enumerate_profiles(vocab, o.n))
      by_profiles += static_cast<double>(complexity(p)) * multinomial(p).convert_to<double>();
    by_profiles /= static_cast<double>(total);
    *sink << "n,k,models,mean_exact_models,mean_exact_profiles\n"
          << o.n << ',' << k << ',' << total << ',' << num(by_models) << ',' << num(by_profiles)
          << '\n';
    return ok;
  }
  if (!o.seed_given) throw InputError("--seed is required for sampling");
  const std::size_t samples = o.samples == 0 ? 10000 : o.samples;
  double lower = 0, upper = 0, size = 0;
  std::size_t balanced = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto s = sample_uniform(vocab, o.n, o.seed + i);
    const auto p = profile_of(s);
    lower += static_cast<double>(lower_bound(p));
    upper += static_cast<double>(upper_bound(p));
    size += static_cast<double>(synthesize_full(p).size());
    if (o.n >= 2 && is_balanced(p)) ++balanced;
  }
  const double m = static_cast<double>(samples);
  const double target = 3.0 * static_cast<double>(o.n) / static_cast<double>(vocab.type_count());
  const double floor =
      1.0 - static_cast<double>(std::size_t{2} << k) / static_cast<double>(o.n);
  *sink << "n,k,samples,seed,mean_lower,mean_upper,mean_size,balanced_fraction,balanced_floor,"
           "target,lower_ratio,size_ratio\n"
        << o.n << ',' << k << ',' << samples << ',' << o.seed << ',' << num(lower / m) << ','
        << num(upper / m) << ',' << num(size / m) << ',' << num(static_cast<double>(balanced) / m)
        << ',' << num(floor) << ',' << num(target) << ',' << num(lower / m / target) << ','
        << num(size / m / target) << '\n';
  return ok;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  f << content;
}

std::string opt_num(const std::optional<double>& v) { return v ? num(*v) : std::string(); }

int cmd_bounds_plot(const Common& o, bool no_clip, bool overlay, std::ostream& out) {
  const auto vocab = parse_vocab(o.vocab);
  const auto t = vocab.type_count();
  const double c = static_cast<double>(vocab.c_tau());
  std::ostringstream csv;
  std::optional<std::string> svg;
  const bool want_svg = o.format == "svg";
  if (o.d > 0) {
    const std::size_t n = o.n == 0 ? 100 : o.n;
    const auto rows = fod_bound_steps(vocab, n, o.d);
    csv << "h,lower_entropy,upper_entropy,lower,upper\n";
    // Class entropies never exceed log2 t^n = k n.
    const double x_max = static_cast<double>(vocab.arity() * n) / 1.1;
    for (const auto& r : rows) {
      csv << r.h << ',' << num(r.lower_entropy) << ',' << num(r.upper_entropy) << ',' << r.lower
          << ',' << r.upper << '\n';
    }
    if (want_svg) {
      // Constants -3 and c_tau omitted.
      const double y_max = 6.0 * static_cast<double>(o.d) * 1.1;
      Plot plot(x_max * 1.1, y_max);
      std::vector<std::pair<double, double>> lo{{0, 0}}, hi{{0, 0}};
      for (const auto& r : rows) {
        const double h = static_cast<double>(r.h);
        lo.emplace_back(r.lower_entropy, lo.back().second);
        lo.emplace_back(r.lower_entropy, 3 * h);
        hi.emplace_back(r.upper_entropy, hi.back().second);
        hi.emplace_back(r.upper_entropy, 6 * h);
      }
      lo.emplace_back(x_max * 1.1, lo.back().second);
      hi.emplace_back(x_max * 1.1, hi.back().second);
      plot.line(lo, "#1f77b4");
      plot.line(hi, "#d62728");
      for (double y : {30.0, 60.0})
        if (y <= y_max) plot.ytick(y, num(y));
      for (double x : {100.0, 200.0})
        if (x <= x_max * 1.1) plot.xtick(x, num(x));
      std::ostringstream s;
      plot.write(s, "H_B^d", "C_d");
      svg = s.str();
    }
  } else {
    const std::size_t n = o.n == 0 ? 1000 : o.n;
    const double nn = static_cast<double>(n);
    CurveOptions opts;
    if (o.samples > 0) opts.samples = o.samples;
    opts.clip = !no_clip;
    const auto rows = fo_bound_curves(vocab, n, opts);
    csv << "p,f,h,lower,upper_f,upper_h\n";
    for (const auto& r : rows)
      csv << num(r.p) << ',' << opt_num(r.f) << ',' << num(r.h) << ',' << opt_num(r.lower) << ','
          << opt_num(r.upper_f) << ',' << num(r.upper_h) << '\n';
    if (want_svg) {
      const double ceiling = 2 * nn + c;
      Plot plot(std::log2(static_cast<double>(t)) * 1.05, ceiling * 1.1);
      std::vector<std::pair<double, double>> lower, upper_f, upper_h;
      for (const auto& r : rows) {
        if (r.f) {
          lower.emplace_back(*r.f, *r.lower);
          upper_f.emplace_back(*r.f, *r.upper_f);
        }
        upper_h.emplace_back(r.h, r.upper_h);
      }
      plot.line(lower, "#1f77b4");
      plot.line(upper_f, "#d62728");
      plot.line(upper_h, "#2ca02c");
      plot.line({{0, ceiling}, {std::log2(static_cast<double>(t)), ceiling}}, "#7f7f7f");
      if (overlay) {
        const double profiles =
            binomial(n + t - 1, t - 1).convert_to<double>();
        if (profiles > 2e6) throw InputError("too many profiles to overlay; lower --n");
        for_each_profile(t, n, [&](const TypeProfile& p) {
          const auto d = region_membership(p, opts.samples);
          plot.dot(d.shannon, static_cast<double>(d.lower), d.inside() ? "#000000" : "#ff00ff");
          plot.dot(d.shannon, static_cast<double>(d.upper), d.inside() ? "#000000" : "#ff00ff");
          return true;
        });
      }
      plot.ytick(3 * nn / 4, "3n/4");
      plot.ytick(3 * nn / 2, "3n/2");
      plot.ytick(ceiling, "2n+c");
      for (std::size_t j = 1; j <= std::log2(static_cast<double>(t)); ++j)
        plot.xtick(static_cast<double>(j), std::to_string(j));
      std::ostringstream s;
      plot.write(s, "H_S", "C");
      svg = s.str();
    }
  }
  if (o.out.empty()) {
    out << (svg ? *svg : csv.str());
  } else {
    write_file(o.out + ".csv", csv.str());
    if (svg) write_file(o.out + ".svg", *svg);
  }
  return ok;
}

int cmd_entropy(const Common& o, std::ostream& out) {
  const auto in = load_input(o.input);
  const auto& p = in.profile;
  const auto r = entropy_report(p);
  const auto region = region_membership(p);
  Sink sink(out, o.out);
  std::vector<std::pair<std::string, std::string>> fields{
      {"n", std::to_string(p.n())},
      {"shannon", num(r.shannon)},
      {"boltzmann", num(r.boltzmann)},
      {"boltzmann_over_n", num(r.boltzmann_over_n)},
      {"gap", num(r.gap)},
      {"gap_bound", num(r.gap_bound)},
      {"lower", std::to_string(region.lower)},
      {"upper", std::to_string(region.upper)},
      {"in_region", region.inside() ? "yes" : "no"},
  };
  if (o.d > 0)
    fields.emplace_back("boltzmann_d", num(boltzmann_entropy_d(class_tuple_of(p, o.d))));
  if (o.format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) *sink << (i ? "," : "") << fields[i].first;
    *sink << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) *sink << (i ? "," : "") << fields[i].second;
    *sink << '\n';
  } else {
    for (const auto& [key, v] : fields) *sink << key << ": " << v << '\n';
  }
  const bool positive = std::all_of(p.counts.begin(), p.counts.end(), [](auto c) { return c > 0; });
  if (positive && !(r.gap < r.gap_bound)) return verification_failure;
  return region.inside() ? ok : verification_failure;
}

int cmd_sample(const Common& o, std::ostream& out) {
  if (!o.seed_given) throw InputError("--seed is required for sampling");
  if (o.n == 0) throw InputError("--n is required");
  const auto s = sample_uniform(parse_vocab(o.vocab), o.n, o.seed);
  Sink sink(out, o.out);
  if (o.format == "text") {
    *sink << "k=" << s.vocab().arity() << " n=" << s.n()
          << " counts=" << format_counts(profile_of(s).counts) << '\n';
  } else {
    write_csv(*sink, s);
  }
  return ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"First-order descriptions of unary structures", "fodesc"};
  app.require_subcommand(1);
  Common o;
  std::string mode = "bounds";
  std::vector<std::string> a_specs, b_specs;
  std::size_t r = 0, q = 0;
  bool exact = false, no_clip = false, overlay = false;

  auto common = [&](CLI::App* sub, bool needs_input) {
    if (needs_input)
      sub->add_option("input", o.input, "CSV file or profile literal \"k=2 counts=0,0,3,7\"")
          ->required();
    sub->add_option("--d", o.d, "Quantifier-rank threshold");
    sub->add_option("--format", o.format, "text | csv | svg");
    sub->add_option("--out", o.out, "Output path");
  };

  auto* syn = app.add_subcommand("synthesize", "Synthesize a defining sentence");
  common(syn, true);
  syn->add_option("--verify-max-n", o.verify_max_n, "Largest n checked by the model checker");

  auto* cx = app.add_subcommand("complexity", "Exact description complexity or its bounds");
  common(cx, true);
  cx->add_option("--mode", mode, "exact | bounds")->check(CLI::IsMember({"exact", "bounds"}));
  cx->add_option("--budget-size", o.budget_size, "Largest sentence size searched");
  cx->add_option("--budget-nodes", o.budget_nodes, "Search node budget");

  auto* game = app.add_subcommand("game", "Decide a formula size game");
  common(game, false);
  game->add_option("--a", a_specs, "Structure the sentence must accept")->required();
  game->add_option("--b", b_specs, "Structure the sentence must reject")->required();
  game->add_option("--r", r, "Size budget")->required();
  game->add_option("--q", q, "Quantifier budget")->required();
  game->add_option("--budget-nodes", o.budget_nodes, "Search node budget");

  auto* ex = app.add_subcommand("expected", "Expected complexity of a random structure");
  common(ex, false);
  ex->add_option("--vocab", o.vocab, "Arity k or predicate names P,Q,...");
  ex->add_option("--n", o.n, "Domain size")->required();
  ex->add_option("--samples", o.samples, "Sample count");
  auto* seed_opt = ex->add_option("--seed", o.seed, "Random seed");
  ex->add_flag("--exact", exact, "Average exact complexity over every structure");
  ex->add_option("--budget-size", o.budget_size, "Largest sentence size searched");
  ex->add_option("--budget-nodes", o.budget_nodes, "Search node budget");

  auto* bp = app.add_subcommand("bounds-plot", "Entropy and complexity bound curves");
  common(bp, false);
  bp->add_option("--vocab", o.vocab, "Arity k or predicate names P,Q,...");
  bp->add_option("--n", o.n, "Domain size (1000, or 100 with --d)");
  bp->add_option("--samples", o.samples, "Curve samples (512)");
  bp->add_flag("--no-clip", no_clip, "Keep negative lower bounds");
  bp->add_flag("--overlay", overlay, "Overlay every profile of size n in the SVG");

  auto* en = app.add_subcommand("entropy", "Shannon and Boltzmann entropy");
  common(en, true);

  auto* sm = app.add_subcommand("sample", "Sample a uniformly random structure");
  sm->add_option("--format", o.format, "csv | text (csv)");
  sm->add_option("--out", o.out, "Output path");
  sm->add_option("--vocab", o.vocab, "Arity k or predicate names P,Q,...");
  sm->add_option("--n", o.n, "Domain size")->required();
  auto* sample_seed = sm->add_option("--seed", o.seed, "Random seed")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return input_error;
  }
  o.seed_given = seed_opt->count() > 0 || sample_seed->count() > 0;
  if (sm->parsed() && sm->get_option("--format")->count() == 0) o.format = "csv";

  try {
    if (syn->parsed()) return cmd_synthesize(o, out);
    if (cx->parsed()) return cmd_complexity(o, mode, out);
    if (game->parsed()) return cmd_game(o, a_specs, b_specs, r, q, out);
    if (ex->parsed()) return cmd_expected(o, exact, out);
    if (bp->parsed()) return cmd_bounds_plot(o, no_clip, overlay, out);
    if (en->parsed()) return cmd_entropy(o, out);
    if (sm->parsed()) return cmd_sample(o, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return budget_exceeded;
  } catch (const EvaluationError& e) {
    err << "verification failed: " << e.what() << '\n';
    return verification_failure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return input_error;
  }
  return input_error;
}

}  // namespace fodesc::cli
