#include <pybind11/functional.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fodesc/entropy.hpp"
#include "fodesc/error.hpp"
#include "fodesc/game.hpp"
#include "fodesc/oracle.hpp"
#include "fodesc/semantics.hpp"
#include "fodesc/structures.hpp"
#include "fodesc/syntax.hpp"
#include "fodesc/synthesis.hpp"

namespace py = pybind11;
using namespace fodesc;

namespace {

// Profiles cross the boundary as plain count lists.
TypeProfile to_profile(const std::vector<std::size_t>& counts) {
  arity_for_type_count(counts.size());
  return TypeProfile{counts};
}

std::vector<TypeProfile> to_profiles(const std::vector<std::vector<std::size_t>>& counts) {
  std::vector<TypeProfile> out;
  for (const auto& c : counts) out.push_back(to_profile(c));
  return out;
}

py::dict oracle_dict(const OracleResult& r, std::size_t arity) {
  py::dict d;
  d["size"] = r.size;
  d["witness"] = r.witness;
  d["text"] = r.witness ? py::cast(print(*r.witness, Vocabulary::with_arity(arity)))
                        : py::none();
  d["searched_up_to"] = r.searched_up_to;
  d["nodes"] = r.nodes;
  d["budget_exhausted"] = r.budget_exhausted;
  return d;
}

EnumerationBudget budget(std::size_t max_size, std::size_t max_quantifiers,
                         std::uint64_t node_budget) {
  const std::size_t q = std::min(max_quantifiers, max_size);
  return EnumerationBudget{max_size, q, q, node_budget};
}

OracleMode mode_of(const std::string& m) {
  if (m == "table") return OracleMode::Table;
  if (m == "syntactic") return OracleMode::Syntactic;
  throw InputError("mode must be 'table' or 'syntactic'");
}

}  // namespace

PYBIND11_MODULE(_fodesc, m) {
  m.doc() = "Description complexity of unary structures";

  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<EvaluationError>(m, "EvaluationError", PyExc_RuntimeError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  py::class_<Vocabulary>(m, "Vocabulary")
      .def(py::init<std::vector<std::string>>())
      .def_static("with_arity", &Vocabulary::with_arity)
      .def_property_readonly("arity", &Vocabulary::arity)
      .def_property_readonly("type_count", &Vocabulary::type_count)
      .def_property_readonly("c_tau", &Vocabulary::c_tau)
      .def_property_readonly("predicates", &Vocabulary::predicates);

  py::class_<UnaryStructure>(m, "UnaryStructure")
      .def(py::init<Vocabulary, std::vector<TypeIndex>>())
      .def_property_readonly("vocab", &UnaryStructure::vocab)
      .def_property_readonly("n", &UnaryStructure::n)
      .def_property_readonly("types", &UnaryStructure::types)
      .def("profile", [](const UnaryStructure& s) { return profile_of(s).counts; })
      .def("to_csv",
           [](const UnaryStructure& s) {
             std::ostringstream out;
             write_csv(out, s);
             return out.str();
           })
      .def_static("from_csv",
                  [](const std::string& text) {
                    std::istringstream in(text);
                    return read_csv(in);
                  })
      .def(py::self == py::self);

  py::class_<Formula>(m, "Formula")
      .def_property_readonly("size", &Formula::size)
      .def_property_readonly("qrank", &Formula::qrank)
      .def_property_readonly("quantifiers", [](const Formula& f) { return quantifier_count(f); })
      .def("is_sentence", [](const Formula& f) { return is_sentence(f); })
      .def("text", [](const Formula& f, const Vocabulary& v) { return print(f, v); })
      .def("__str__", [](const Formula& f) { return print(f); })
      .def("__repr__", [](const Formula& f) { return "Formula('" + print(f) + "')"; })
      .def(py::self == py::self);

  m.def("parse", &parse, py::arg("text"), py::arg("vocab"));

  m.def("representative",
        [](const std::vector<std::size_t>& c) { return representative(to_profile(c)); });
  m.def("sample_uniform", &sample_uniform, py::arg("vocab"), py::arg("n"), py::arg("seed"));
  m.def("enumerate_profiles", [](std::size_t type_count, std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& p : enumerate_profiles(type_count, n)) out.push_back(p.counts);
    return out;
  });
  m.def("is_balanced",
        [](const std::vector<std::size_t>& c) { return is_balanced(to_profile(c)); });
  m.def("balance_threshold", &balance_threshold, py::arg("arity"), py::arg("n"));
  m.def("multinomial", [](const std::vector<std::size_t>& c) {
    // Exact value, returned as a Python int.
    return py::int_(py::str(multinomial(to_profile(c)).str()));
  });
  m.def("class_size", [](std::size_t d, std::size_t n, const std::vector<std::size_t>& mm) {
    ClassTuple c{d, n, mm};
    validate(c);
    return py::int_(py::str(class_size(c).str()));
  });

  m.def("synthesize",
        [](const std::vector<std::size_t>& c) { return synthesize_full(to_profile(c)); });
  m.def("synthesize_d", [](std::size_t d, std::size_t n, const std::vector<std::size_t>& mm) {
    ClassTuple c{d, n, mm};
    validate(c);
    return synthesize_d(c);
  });
  m.def("upper_bound", [](const std::vector<std::size_t>& c) { return upper_bound(to_profile(c)); });
  m.def("upper_bound_d", [](std::size_t d, std::size_t n, const std::vector<std::size_t>& mm) {
    ClassTuple c{d, n, mm};
    validate(c);
    return upper_bound_d(c);
  });
  m.def("lower_bound", [](const std::vector<std::size_t>& c) { return lower_bound(to_profile(c)); });
  m.def("lower_bound_witness", [](const std::vector<std::size_t>& c) {
    const auto w = lower_bound_witness(to_profile(c));
    std::optional<std::vector<std::size_t>> other;
    if (w.other) other = w.other->counts;
    return std::make_pair(other, w.bound);
  });

  m.def("eval", [](const UnaryStructure& s, const Formula& f) {
    require_sentence(f);
    return eval(s, Assignment{}, f);
  });
  m.def("defines",
        [](const std::vector<std::size_t>& c, const Formula& f) { return defines(to_profile(c), f); });
  m.def("defines_class",
        [](std::size_t d, std::size_t n, const std::vector<std::size_t>& mm, const Formula& f) {
          ClassTuple c{d, n, mm};
          validate(c);
          return defines_class(c, f);
        });

  m.def(
      "exact_complexity",
      [](const std::vector<std::size_t>& c, std::size_t max_size, std::size_t max_quantifiers,
         std::uint64_t node_budget, const std::string& mode) {
        const auto p = to_profile(c);
        return oracle_dict(exact_C(p, budget(max_size, max_quantifiers, node_budget), mode_of(mode)),
                           arity_for_type_count(c.size()));
      },
      py::arg("counts"), py::arg("max_size") = 8, py::arg("max_quantifiers") = 4,
      py::arg("node_budget") = 200'000'000, py::arg("mode") = "table");
  m.def(
      "exact_complexity_d",
      [](std::size_t d, std::size_t n, const std::vector<std::size_t>& mm, std::size_t max_size,
         std::size_t max_quantifiers, std::uint64_t node_budget, const std::string& mode) {
        ClassTuple c{d, n, mm};
        validate(c);
        return oracle_dict(exact_Cd(c, budget(max_size, max_quantifiers, node_budget), mode_of(mode)),
                           arity_for_type_count(mm.size()));
      },
      py::arg("d"), py::arg("n"), py::arg("m"), py::arg("max_size") = 8,
      py::arg("max_quantifiers") = 4, py::arg("node_budget") = 200'000'000,
      py::arg("mode") = "table");
  m.def(
      "min_separating_sentence",
      [](const std::vector<std::vector<std::size_t>>& accept,
         const std::vector<std::vector<std::size_t>>& reject, std::size_t arity,
         std::size_t max_size, std::size_t max_quantifiers, std::uint64_t node_budget) {
        return oracle_dict(min_separating_sentence(arity, to_profiles(accept), to_profiles(reject),
                                                   budget(max_size, max_quantifiers, node_budget)),
                           arity);
      },
      py::arg("accept"), py::arg("reject"), py::arg("arity") = 1, py::arg("max_size") = 8,
      py::arg("max_quantifiers") = 4, py::arg("node_budget") = 200'000'000);

  m.def(
      "play",
      [](const std::vector<std::vector<std::size_t>>& A,
         const std::vector<std::vector<std::size_t>>& B, std::size_t r, std::size_t q,
         std::uint64_t node_budget) {
        GamePosition pos;
        pos.r = r;
        pos.q = q;
        pos.A = model_set(to_profiles(A));
        pos.B = model_set(to_profiles(B));
        const auto res = decide(pos, GameOptions{node_budget});
        py::dict d;
        d["winner"] = res.winner == Winner::S ? "S" : "D";
        d["strategy"] = res.strategy;
        d["nodes"] = res.nodes;
        return d;
      },
      py::arg("A"), py::arg("B"), py::arg("r"), py::arg("q"), py::arg("node_budget") = 5'000'000);

  m.def("shannon_entropy",
        [](const std::vector<std::size_t>& c) { return shannon_entropy(to_profile(c)); });
  m.def("boltzmann_entropy",
        [](const std::vector<std::size_t>& c) { return boltzmann_entropy(to_profile(c)); });
  m.def("entropy_report", [](const std::vector<std::size_t>& c) {
    const auto r = entropy_report(to_profile(c));
    py::dict d;
    d["shannon"] = r.shannon;
    d["boltzmann"] = r.boltzmann;
    d["boltzmann_over_n"] = r.boltzmann_over_n;
    d["gap"] = r.gap;
    d["gap_bound"] = r.gap_bound;
    return d;
  });
  m.def("gap_bound", &gap_bound, py::arg("t"), py::arg("n"));
  m.def("region_inside", [](const std::vector<std::size_t>& c, std::size_t samples) {
    return region_membership(to_profile(c), samples).inside();
  }, py::arg("counts"), py::arg("samples") = 512);
  m.def("balanced_entropy_ratio", &balanced_entropy_ratio);
}
