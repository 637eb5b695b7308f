#include "fodesc/structures.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "fodesc/error.hpp"

namespace fodesc {

namespace {

bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  const auto first = static_cast<unsigned char>(s.front());
  if (!std::isalpha(first) && s.front() != '_') return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::size_t parse_size(std::string_view text, const char* what) {
  text = trim(text);
  if (text.empty() || !std::all_of(text.begin(), text.end(),
                                   [](char c) { return c >= '0' && c <= '9'; })) {
    throw InputError(std::string("expected a nonnegative integer for ") + what + ", got '" +
                     std::string(text) + "'");
  }
  std::size_t value = 0;
  for (char c : text) {
    const std::size_t digit = static_cast<std::size_t>(c - '0');
    if (value > (SIZE_MAX - digit) / 10) throw InputError(std::string(what) + " is too large");
    value = value * 10 + digit;
  }
  return value;
}

// factorials[i] = i!
std::vector<BigInt> factorial_table(std::size_t n) {
  std::vector<BigInt> table(n + 1);
  table[0] = 1;
  for (std::size_t i = 1; i <= n; ++i) table[i] = table[i - 1] * static_cast<unsigned>(i);
  return table;
}

}  // namespace

double log2(const BigInt& value) {
  if (value <= 0) throw std::domain_error("log2 of a nonpositive integer");
  const auto msb = static_cast<long>(boost::multiprecision::msb(value));
  if (msb < 53) return std::log2(value.convert_to<double>());
  const BigInt top = value >> static_cast<unsigned>(msb - 52);
  return std::log2(top.convert_to<double>()) + static_cast<double>(msb - 52);
}

Vocabulary::Vocabulary(std::vector<std::string> predicates) : predicates_(std::move(predicates)) {
  if (predicates_.empty()) throw InputError("a vocabulary needs at least one predicate");
  if (predicates_.size() > max_arity) {
    throw InputError("at most " + std::to_string(max_arity) + " predicates are supported");
  }
  std::set<std::string_view> seen;
  for (const auto& name : predicates_) {
    if (!is_identifier(name)) throw InputError("predicate name '" + name + "' is not an identifier");
    if (!seen.insert(name).second) throw InputError("duplicate predicate name '" + name + "'");
  }
}

Vocabulary Vocabulary::with_arity(std::size_t k) {
  if (k == 1) return Vocabulary({"P"});
  if (k == 2) return Vocabulary({"P", "Q"});
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= k; ++i) names.push_back("P" + std::to_string(i));
  return Vocabulary(std::move(names));
}

std::optional<std::size_t> Vocabulary::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < predicates_.size(); ++i) {
    if (predicates_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t arity_for_type_count(std::size_t type_count) {
  for (std::size_t k = 1; k <= Vocabulary::max_arity; ++k) {
    if ((std::size_t{1} << k) == type_count) return k;
  }
  throw InputError("type count " + std::to_string(type_count) + " is not 2^k for 1 <= k <= 16");
}

std::size_t TypeProfile::n() const noexcept {
  return std::accumulate(counts.begin(), counts.end(), std::size_t{0});
}

std::size_t ClassTuple::sum() const noexcept {
  return std::accumulate(m.begin(), m.end(), std::size_t{0});
}

bool is_valid(const ClassTuple& tuple) noexcept {
  if (tuple.d == 0 || tuple.m.empty()) return false;
  bool has_cap = false;
  for (auto v : tuple.m) {
    if (v > tuple.d) return false;
    has_cap = has_cap || v == tuple.d;
  }
  const auto total = tuple.sum();
  if (total > tuple.n) return false;
  return total == tuple.n || has_cap;
}

void validate(const ClassTuple& tuple) {
  if (!is_valid(tuple)) {
    throw InputError("invalid class tuple (" + format_counts(tuple.m) + ") for n=" +
                     std::to_string(tuple.n) + ", d=" + std::to_string(tuple.d));
  }
}

UnaryStructure::UnaryStructure(Vocabulary vocab, std::vector<TypeIndex> type_of)
    : vocab_(std::move(vocab)), type_of_(std::move(type_of)) {
  const auto t = vocab_.type_count();
  for (auto ty : type_of_) {
    if (ty >= t) throw InputError("type index " + std::to_string(ty) + " out of range");
  }
}

TypeProfile profile_of(const UnaryStructure& s) {
  TypeProfile p{std::vector<std::size_t>(s.vocab().type_count(), 0)};
  for (auto ty : s.types()) ++p.counts[ty];
  return p;
}

ClassTuple class_tuple_of(const TypeProfile& p, std::size_t d) {
  if (d == 0) throw InputError("counting threshold d must be positive");
  ClassTuple c{d, p.n(), {}};
  c.m.reserve(p.counts.size());
  for (auto v : p.counts) c.m.push_back(std::min(v, d));
  return c;
}

ClassTuple class_tuple_of(const UnaryStructure& s, std::size_t d) {
  return class_tuple_of(profile_of(s), d);
}

void for_each_profile(std::size_t type_count, std::size_t n,
                      const std::function<bool(const TypeProfile&)>& visit) {
  if (type_count == 0) return;
  TypeProfile p{std::vector<std::size_t>(type_count, 0)};
  // Depth-first over positions; the last coordinate takes the remainder.
  std::function<bool(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == type_count) {
      p.counts[pos] = left;
      return visit(p);
    }
    for (std::size_t v = 0; v <= left; ++v) {
      p.counts[pos] = v;
      if (!rec(pos + 1, left - v)) return false;
    }
    return true;
  };
  rec(0, n);
}

std::vector<TypeProfile> enumerate_profiles(std::size_t type_count, std::size_t n) {
  std::vector<TypeProfile> out;
  for_each_profile(type_count, n, [&](const TypeProfile& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<TypeProfile> enumerate_profiles(const Vocabulary& vocab, std::size_t n) {
  return enumerate_profiles(vocab.type_count(), n);
}

std::vector<ClassTuple> enumerate_class_tuples(std::size_t type_count, std::size_t n,
                                               std::size_t d) {
  if (d == 0) throw InputError("counting threshold d must be positive");
  std::vector<ClassTuple> out;
  ClassTuple c{d, n, std::vector<std::size_t>(type_count, 0)};
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == type_count) {
      if (is_valid(c)) out.push_back(c);
      return;
    }
    for (std::size_t v = 0; v <= d; ++v) {
      c.m[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return out;
}

UnaryStructure representative(const Vocabulary& vocab, const TypeProfile& p) {
  if (p.counts.size() != vocab.type_count()) {
    throw InputError("profile has " + std::to_string(p.counts.size()) + " entries, vocabulary has " +
                     std::to_string(vocab.type_count()) + " types");
  }
  std::vector<TypeIndex> types;
  types.reserve(p.n());
  for (std::size_t j = 0; j < p.counts.size(); ++j) {
    types.insert(types.end(), p.counts[j], static_cast<TypeIndex>(j));
  }
  return UnaryStructure(vocab, std::move(types));
}

UnaryStructure representative(const TypeProfile& p) {
  return representative(Vocabulary::with_arity(arity_for_type_count(p.counts.size())), p);
}

BigInt multinomial(std::size_t n, const std::vector<std::size_t>& counts) {
  const auto total = std::accumulate(counts.begin(), counts.end(), std::size_t{0});
  if (total != n) {
    throw InputError("multinomial: counts sum to " + std::to_string(total) + ", expected " +
                     std::to_string(n));
  }
  // Product of binomials C(prefix, c_i); every intermediate value is exact.
  BigInt result = 1;
  std::size_t prefix = 0;
  for (auto c : counts) {
    prefix += c;
    result *= binomial(prefix, c);
  }
  return result;
}

BigInt multinomial(const TypeProfile& p) { return multinomial(p.n(), p.counts); }

BigInt binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt result = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    result *= static_cast<unsigned long long>(n - k + i);
    result /= static_cast<unsigned long long>(i);
  }
  return result;
}

BigInt class_size(const ClassTuple& tuple) {
  validate(tuple);
  const auto facts = factorial_table(tuple.n);
  std::size_t fixed_sum = 0;
  std::size_t capped = 0;
  BigInt fixed_denominator = 1;
  for (auto v : tuple.m) {
    if (v < tuple.d) {
      fixed_sum += v;
      fixed_denominator *= facts[v];
    } else {
      ++capped;
    }
  }
  const std::size_t rest = tuple.n - fixed_sum;
  // Choose the elements of the exactly-counted types, then count the maps of
  // the remaining `rest` elements onto the capped types with every fibre >= d.
  const BigInt placed = facts[tuple.n] / (fixed_denominator * facts[rest]);

  // onto[r] after processing i capped types: number of ways to give r elements
  // to those i types, each receiving at least d.
  std::vector<BigInt> onto(rest + 1, 0);
  onto[0] = 1;
  for (std::size_t i = 0; i < capped; ++i) {
    std::vector<BigInt> next(rest + 1, 0);
    for (std::size_t r = 0; r <= rest; ++r) {
      for (std::size_t a = tuple.d; a <= r; ++a) {
        if (onto[r - a] != 0) next[r] += binomial(r, a) * onto[r - a];
      }
    }
    onto = std::move(next);
  }
  return placed * onto[rest];
}

UnaryStructure sample_uniform(const Vocabulary& vocab, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw InputError("sample size n must be positive");
  std::mt19937_64 rng(seed);
  const std::uint64_t mask = vocab.type_count() - 1;
  std::vector<TypeIndex> types(n);
  for (auto& ty : types) ty = static_cast<TypeIndex>(rng() & mask);
  return UnaryStructure(vocab, std::move(types));
}

double balance_threshold(std::size_t arity, std::size_t n) {
  if (n < 2) throw InputError("balancedness needs n >= 2");
  const double t = std::ldexp(1.0, static_cast<int>(arity));
  const double nn = static_cast<double>(n);
  // Deviation delta * mu with mu = n/t and delta chosen so that the Chernoff
  // tail 2 exp(-delta^2 mu / 3) equals 2/n.
  return std::sqrt(3.0 * std::log(nn) * nn / t);
}

bool is_balanced(const TypeProfile& p) {
  const auto k = arity_for_type_count(p.counts.size());
  const auto n = p.n();
  const double threshold = balance_threshold(k, n);
  const double mean = static_cast<double>(n) / static_cast<double>(p.counts.size());
  return std::all_of(p.counts.begin(), p.counts.end(), [&](std::size_t c) {
    return std::fabs(static_cast<double>(c) - mean) <= threshold;
  });
}

bool is_balanced(const UnaryStructure& s) { return is_balanced(profile_of(s)); }

UnaryStructure read_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::optional<Vocabulary> vocab;
  std::vector<TypeIndex> types;
  while (std::getline(in, line)) {
    ++line_no;
    const auto content = trim(line);
    if (content.empty()) continue;
    const auto cells = split(content, ',');
    if (!vocab) {
      std::vector<std::string> names;
      for (auto cell : cells) names.emplace_back(trim(cell));
      vocab.emplace(std::move(names));
      continue;
    }
    if (cells.size() != vocab->arity()) {
      throw InputError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(vocab->arity()) + " cells, found " +
                       std::to_string(cells.size()));
    }
    TypeIndex ty = 0;
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const auto cell = trim(cells[i]);
      if (cell == "1") {
        ty |= TypeIndex{1} << i;
      } else if (cell != "0") {
        throw InputError("line " + std::to_string(line_no) + ", column " + std::to_string(i + 1) +
                         ": cell must be 0 or 1, got '" + std::string(cell) + "'");
      }
    }
    types.push_back(ty);
  }
  if (!vocab) throw InputError("CSV input is empty");
  if (types.empty()) throw InputError("CSV input has no data rows");
  return UnaryStructure(std::move(*vocab), std::move(types));
}

UnaryStructure read_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_csv(in);
}

void write_csv(std::ostream& out, const UnaryStructure& s) {
  const auto& names = s.vocab().predicates();
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? "," : "") << names[i];
  out << '\n';
  for (auto ty : s.types()) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      out << (i ? "," : "") << ((ty >> i) & 1U);
    }
    out << '\n';
  }
}

ProfileLiteral parse_profile_literal(std::string_view text) {
  std::optional<std::size_t> k;
  std::optional<std::size_t> n;
  std::optional<std::vector<std::size_t>> counts;
  std::optional<std::vector<std::string>> names;
  std::istringstream words{std::string(text)};
  std::string word;
  while (words >> word) {
    const auto eq = word.find('=');
    if (eq == std::string::npos) throw InputError("profile literal: expected key=value, got '" + word + "'");
    const std::string_view key = std::string_view(word).substr(0, eq);
    const std::string_view value = std::string_view(word).substr(eq + 1);
    if (key == "k") {
      k = parse_size(value, "k");
    } else if (key == "n") {
      n = parse_size(value, "n");
    } else if (key == "counts") {
      std::vector<std::size_t> parsed;
      for (auto part : split(value, ',')) parsed.push_back(parse_size(part, "counts"));
      counts = std::move(parsed);
    } else if (key == "vocab") {
      std::vector<std::string> parsed;
      for (auto part : split(value, ',')) parsed.emplace_back(trim(part));
      names = std::move(parsed);
    } else {
      throw InputError("profile literal: unknown key '" + std::string(key) + "'");
    }
  }
  if (!counts) throw InputError("profile literal: missing counts=");
  Vocabulary vocab = names ? Vocabulary(*names)
                           : Vocabulary::with_arity(k ? *k : arity_for_type_count(counts->size()));
  if (k && *k != vocab.arity()) throw InputError("profile literal: k disagrees with vocab");
  if (counts->size() != vocab.type_count()) {
    throw InputError("profile literal: expected " + std::to_string(vocab.type_count()) +
                     " counts, got " + std::to_string(counts->size()));
  }
  TypeProfile profile{std::move(*counts)};
  if (n && *n != profile.n()) {
    throw InputError("profile literal: counts sum to " + std::to_string(profile.n()) +
                     ", but n=" + std::to_string(*n));
  }
  if (profile.n() == 0) throw InputError("profile literal: domain must be nonempty");
  return {std::move(vocab), std::move(profile)};
}

std::string format_counts(const std::vector<std::size_t>& counts) {
  std::string out;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(counts[i]);
  }
  return out;
}

}  // namespace fodesc
