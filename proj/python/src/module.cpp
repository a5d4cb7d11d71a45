#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "sgfact/apery.hpp"
#include "sgfact/catenary.hpp"
#include "sgfact/cli.hpp"
#include "sgfact/errors.hpp"
#include "sgfact/same_length.hpp"

namespace py = pybind11;
using namespace sgfact;

namespace {

MonoidPresentation numerical(const std::vector<std::int64_t>& gens) {
  MonoidPresentation raw;
  raw.rank = 1;
  for (auto g : gens) raw.generators.push_back(GroupElement{{Integer(g)}, {}});
  return validate_reduced(raw);
}

py::int_ to_py(const Integer& v) { return py::int_(py::str(v.str())); }

py::list values(const std::vector<GroupElement>& v) {
  py::list out;
  for (const auto& x : v) out.append(to_py(x.free[0]));
  return out;
}

py::object ideal(const std::optional<MonoidIdeal>& m) {
  if (!m) return py::none();
  auto gens = m->generators;
  std::sort(gens.begin(), gens.end());
  return values(gens);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Factorization invariants of reduced affine monoids";

  static py::exception<Error> error(m, "SgfactError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      // Kind first so callers can dispatch on the prefix.
      error((std::string(to_string(e.kind())) + ": " + e.what()).c_str());
    }
  });

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run one CLI subcommand; returns (exit code, stdout, stderr).");

  m.def("lset", [](const std::vector<std::int64_t>& g) { return ideal(l_set(numerical(g))); }, py::arg("generators"),
        "Minimal generators of L_S for a numerical semigroup, or None when L_S is empty.");
  m.def("tset", [](const std::vector<std::int64_t>& g) { return ideal(t_set(numerical(g))); }, py::arg("generators"));
  m.def("f2l", [](const std::vector<std::int64_t>& g) { return to_py(f2l(numerical(g)).value); },
        py::arg("generators"));
  m.def("ceq", [](const std::vector<std::int64_t>& g) { return ceq(numerical(g)); }, py::arg("generators"));
  m.def(
      "apery",
      [](const std::vector<std::int64_t>& g, const std::vector<std::int64_t>& b) {
        const auto p = numerical(g);
        std::vector<GroupElement> B;
        for (auto x : b) B.push_back(p.element({x}));
        auto elements = apery_set(p, B).elements;
        std::sort(elements.begin(), elements.end());
        return values(elements);
      },
      py::arg("generators"), py::arg("b"));

  m.attr("EXIT_OK") = cli::kOk;
  m.attr("EXIT_INVALID_INPUT") = cli::kInvalidInput;
  m.attr("EXIT_NOT_REDUCED") = cli::kNotReduced;
  m.attr("EXIT_INFINITE") = cli::kInfinite;
  m.attr("EXIT_CROSS_CHECK") = cli::kCrossCheck;
}
