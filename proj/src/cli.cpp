#include "sgfact/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "sgfact/apery.hpp"
#include "sgfact/catenary.hpp"
#include "sgfact/closed_forms.hpp"
#include "sgfact/errors.hpp"
#include "sgfact/io.hpp"
#include "sgfact/lattice.hpp"
#include "sgfact/oracle.hpp"
#include "sgfact/same_length.hpp"

namespace sgfact::cli {
namespace {

using io::Json;

struct Request {
  std::string input;
  std::string order;
  std::string b;
  std::optional<std::int64_t> limit;
  std::optional<std::int64_t> cap;
  std::string format = "json";
  std::string family;
  std::string params;
  bool verified = false;
  std::string what;
  std::optional<std::int64_t> lambda;
  int i = 2;
  bool any_length = false;
};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

Json parse_json(const std::string& text, const char* what) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("cannot parse ") + what + ": " + e.what());
  }
}

Json load_input(const std::string& input) {
  if (input.empty()) bad("--input is required");
  const auto first = input.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && input[first] == '{') return parse_json(input, "--input");
  std::ifstream f(input);
  if (!f) bad("cannot open input file " + input);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_json(ss.str(), input.c_str());
}

MonoidPresentation load_presentation(const Request& r) {
  return validate_reduced(io::presentation_from_json(load_input(r.input)));
}

std::optional<TermOrder> order_of(const Request& r, std::size_t nvars) {
  if (r.order.empty()) return std::nullopt;
  return TermOrder::parse(r.order, nvars);
}

std::vector<GroupElement> b_elements(const Request& r, const MonoidPresentation& p) {
  if (r.b.empty()) bad("--b is required");
  const Json j = parse_json(r.b, "--b");
  // A bare flat element such as [12,0] is one element, not two.
  if (j.is_array() && !j.empty() && !j[0].is_array() && !p.is_numerical()) return {io::element_from_json(j, p)};
  return io::elements_from_json(j, p);
}

std::vector<std::int64_t> numerical_values(const MonoidPresentation& p) {
  if (!p.is_numerical()) bad("this command needs a numerical semigroup");
  std::vector<std::int64_t> v;
  for (const auto& g : p.generators) v.push_back(g.free[0].to_int64());
  return v;
}

std::int64_t param(const Json& j, const char* name) {
  if (!j.contains(name)) bad(std::string("--params is missing \"") + name + "\"");
  return io::integer_from_json(j.at(name)).to_int64();
}

std::vector<std::int64_t> param_list(const Json& j, const char* name, bool required) {
  std::vector<std::int64_t> out;
  if (!j.contains(name)) {
    if (required) bad(std::string("--params is missing \"") + name + "\"");
    return out;
  }
  if (!j.at(name).is_array()) bad(std::string("\"") + name + "\" must be an array");
  for (const auto& v : j.at(name)) out.push_back(io::integer_from_json(v).to_int64());
  return out;
}

Json ideal_json(const std::optional<MonoidIdeal>& ideal, const MonoidPresentation& p) {
  Json j;
  j["generators"] = ideal ? io::to_json(ideal->generators, p) : Json::array();
  j["principal"] = ideal && ideal->generators.size() == 1;
  return j;
}

Json report_json(const CrossCheck& cc) {
  Json j;
  j["agree"] = cc.agree;
  j["report"] = cc.report;
  return j;
}

// Result plus the exit code it maps to (cross-check failures print and exit 5).
struct Outcome {
  Json result;
  int code = kOk;
};

Outcome cmd_validate(const Request& r) {
  const MonoidPresentation raw = io::presentation_from_json(load_input(r.input));
  Json j;
  try {
    const MonoidPresentation p = validate_reduced(raw);
    j["valid"] = true;
    j["presentation"] = io::to_json(p);
    Json w = Json::array();
    for (const auto& c : pointing_vector(p)) w.push_back(io::to_json(c));
    j["pointing_vector"] = w;
    j["weights"] = generator_weights(p);
    j["minimally_generated"] = is_minimally_generated(p);
    return {j, kOk};
  } catch (const NotReducedError& e) {
    j["valid"] = false;
    j["error"] = e.what();
    if (e.torsion_generator() >= 0) j["torsion_generator"] = e.torsion_generator();
    Json comb = Json::array();
    for (const auto& c : e.combination()) comb.push_back(io::to_json(c));
    if (!e.combination().empty()) j["combination"] = comb;
    return {j, kNotReduced};
  }
}

Outcome cmd_ideal(const Request& r) {
  const auto p = load_presentation(r);
  const auto order = order_of(r, p.size());
  const BinomialBasis gb = order ? lattice_ideal(p, *order) : lattice_ideal(p);
  Json j;
  j["groebner_basis"] = io::to_json(gb);
  const BinomialBasis mg = minimal_generators(gb, p);
  Json gens = Json::array();
  for (const auto& f : mg.binomials) {
    Json g = io::to_json(f);
    g["degree"] = io::to_json(s_degree(p, f.plus), p);
    gens.push_back(g);
  }
  j["minimal_generators"] = gens;
  return {j};
}

Outcome cmd_tilde_ideal(const Request& r) {
  const auto p = load_presentation(r);
  const BinomialBasis mg = tilde_ideal_minimal(p, order_of(r, p.size()));
  Json gens = Json::array();
  for (const auto& f : mg.binomials) {
    Json g = io::to_json(f);
    g["degree"] = io::to_json(s_degree(p, f.plus), p);
    g["length"] = f.degree();
    gens.push_back(g);
  }
  Json j;
  j["minimal_generators"] = gens;
  j["ceq"] = [&] {
    std::int64_t m = 0;
    for (const auto& f : mg.binomials) m = std::max(m, f.degree());
    return m;
  }();
  return {j};
}

Outcome cmd_kernel(const Request& r) {
  const auto p = load_presentation(r);
  const KernelLattice k = kernel_lattice(p);
  Json basis = Json::array();
  for (const auto& row : k.basis) {
    Json v = Json::array();
    for (const auto& c : row) v.push_back(io::to_json(c));
    basis.push_back(v);
  }
  Json j;
  j["rank"] = k.rank();
  j["basis"] = basis;
  return {j};
}

Outcome cmd_apery(const Request& r) {
  const auto p = load_presentation(r);
  AperyOptions opts;
  opts.order = order_of(r, p.size());
  opts.limit = r.limit;
  return {io::to_json(apery_set(p, b_elements(r, p), opts), p)};
}

Outcome cmd_apery_finite(const Request& r) {
  const auto p = load_presentation(r);
  const auto B = b_elements(r, p);
  AperyOptions opts;
  opts.order = order_of(r, p.size());
  const bool cone = apery_is_finite(p, B);
  const bool stair = staircase_is_finite(apery_ideal(p, B, opts));
  Json j;
  j["finite"] = cone;
  j["staircase"] = stair;
  return {j, cone == stair ? kOk : kCrossCheck};
}

Outcome cmd_tset(const Request& r) {
  const auto p = load_presentation(r);
  return {ideal_json(t_set(p, order_of(r, p.size())), p)};
}

Outcome cmd_lset(const Request& r) {
  const auto p = load_presentation(r);
  return {ideal_json(l_set(p, order_of(r, p.size())), p)};
}

Outcome cmd_lset_complement(const Request& r) {
  const auto p = load_presentation(r);
  return {io::to_json(l_set_complement(p, r.limit, order_of(r, p.size())), p)};
}

Outcome cmd_lset_finite(const Request& r) {
  const auto p = load_presentation(r);
  Json j;
  j["finite"] = l_set_complement_is_finite(p);
  return {j};
}

Outcome cmd_principal(const Request& r) {
  const auto p = load_presentation(r);
  const auto g = is_l_set_principal(p);
  Json j;
  j["principal"] = g.has_value();
  j["generator"] = g ? io::to_json(*g, p) : Json();
  return {j};
}

Outcome cmd_f2l(const Request& r) {
  const auto p = load_presentation(r);
  const F2lResult f = f2l(p);
  Json j;
  j["f2l"] = io::to_json(f.value);
  j["frobenius"] = io::to_json(f.frobenius);
  return {j};
}

Outcome cmd_ceq(const Request& r) {
  const auto p = load_presentation(r);
  Json j;
  j["ceq"] = ceq(p);
  return {j};
}

Outcome cmd_ceq_bound(const Request& r) {
  MonoidPresentation raw = io::presentation_from_json(load_input(r.input));
  std::sort(raw.generators.begin(), raw.generators.end());
  const auto p = validate_reduced(raw);
  Json j;
  j["bound"] = ceq_upper_bound_numerical(p);
  return {j};
}

Outcome cmd_ceq_element(const Request& r) {
  const auto p = load_presentation(r);
  const auto B = b_elements(r, p);
  if (B.size() != 1) bad("--b must name exactly one element");
  const auto res = ceq_element_bruteforce(p, B[0], static_cast<std::size_t>(r.cap.value_or(1000000)));
  Json chain = Json::array();
  for (const auto& f : res.certificate.chain) chain.push_back(io::to_json(f));
  Json j;
  j["value"] = res.value;
  j["factorizations"] = res.factorizations;
  j["chain"] = chain;
  return {j};
}

Outcome cmd_closed_form(const Request& r) {
  const Json prm = r.params.empty() ? Json::object() : parse_json(r.params, "--params");
  const std::string what = r.what.empty() ? "lset" : r.what;
  Json j;
  j["family"] = r.family;
  int code = kOk;
  auto attach = [&](const CrossCheck& cc) {
    j["verified"] = report_json(cc);
    if (!cc.agree) code = kCrossCheck;
  };
  if (r.family == "arithmetic") {
    const ArithmeticFamily f{param(prm, "m1"), param(prm, "e"), param(prm, "n")};
    const MonoidPresentation p = f.presentation();
    if (what == "lset") {
      j["lset"] = ideal_json(lset_arithmetic(f), p);
      if (r.verified) attach(verify_lset_arithmetic(f));
    } else if (what == "ceq") {
      j["ceq"] = ceq_arithmetic(f);
      if (r.verified) {
        const std::int64_t engine = ceq(p);
        attach(CrossCheck{engine == j["ceq"].get<std::int64_t>(),
                          {"formula " + j["ceq"].dump() + " engine " + std::to_string(engine)}});
      }
    } else if (what == "relations") {
      Json rel = Json::array();
      for (const auto& b : arithmetic_cone_relations(f)) rel.push_back(io::to_json(b));
      j["relations"] = rel;
    } else {
      bad("--what must be lset, ceq or relations for the arithmetic family");
    }
  } else if (r.family == "almost-arithmetic") {
    const AlmostArithmeticFamily f{{param(prm, "m1"), param(prm, "e"), param(prm, "n")}, param(prm, "b")};
    const MonoidPresentation p = f.presentation();
    j["case"] = f.case_label();
    if (what == "lset") {
      j["lset"] = ideal_json(lset_almost_arithmetic(f), p);
      j["formula_generators"] = io::to_json(lset_almost_arithmetic(f, HRange::Standard, false).generators, p);
      if (r.verified) attach(verify_lset_almost_arithmetic(f));
    } else if (what == "ceq") {
      const AlmostCeq c = ceq_almost_arithmetic(f);
      j["ceq"] = c.value;
      j["ceq_ceiling_form"] = c.printed;
      if (r.verified) attach(verify_ceq_almost_arithmetic(f));
    } else {
      bad("--what must be lset or ceq for the almost-arithmetic family");
    }
  } else if (r.family == "unique-betti-shift") {
    const UniqueBettiShiftFamily f{param(prm, "b"), param(prm, "t"), param_list(prm, "c", true),
                                   param_list(prm, "f", false)};
    const MonoidPresentation p = f.presentation();
    j["generators"] = io::to_json(p.generators, p);
    if (what == "lset") {
      j["lset"] = ideal_json(lset_unique_betti_shift(f), p);
      if (auto g = lset_unique_betti_principal(f)) j["principal_generator"] = *g;
    } else if (what == "ceq") {
      j["ceq"] = ceq_unique_betti_shift(f);
    } else {
      bad("--what must be lset or ceq for the unique-betti-shift family");
    }
    if (r.verified) attach(verify_unique_betti_shift(f));
  } else {
    bad("--family must be arithmetic, almost-arithmetic or unique-betti-shift");
  }
  return {j, code};
}

Outcome cmd_transform(const Request& r) {
  const auto p = load_presentation(r);
  auto gens = numerical_values(p);
  std::sort(gens.begin(), gens.end());
  std::vector<HomogenizedPresentation> outs;
  const std::string what = r.what.empty() ? "normalized" : r.what;
  if (what == "normalized") {
    outs = normalized_presentation_transforms(gens);
  } else {
    if (!r.lambda) bad("--lambda is required for " + what);
    if (what == "subtract") {
      outs.push_back(transform_subtract(gens, *r.lambda));
    } else if (what == "reflect") {
      outs.push_back(transform_reflect(gens, *r.lambda));
    } else if (what == "divide") {
      outs.push_back(transform_divide(gens, *r.lambda));
    } else if (what == "multiply") {
      outs.push_back(transform_multiply(gens, *r.lambda));
    } else {
      bad("--what must be normalized, subtract, reflect, divide or multiply");
    }
  }
  Json arr = Json::array();
  for (const auto& h : outs) {
    Json e;
    Json base = Json::array();
    for (const auto& g : h.base.generators) base.push_back(io::to_json(g.free[0]));
    e["base"] = base;
    e["lifted"] = io::to_json(h.lifted);
    arr.push_back(e);
  }
  Json j;
  j["transforms"] = arr;
  return {j};
}

Outcome cmd_oracle_check(const Request& r) {
  const auto p = load_presentation(r);
  if (!r.cap) bad("--cap is required");
  oracle::EnumerationBudget budget{*r.cap, 50'000'000};
  Json j;
  j["what"] = r.what;
  j["cap"] = *r.cap;
  bool pass = true;
  if (r.what == "lset" || r.what == "tset") {
    const auto e = oracle::enumerate(p, budget);
    const bool l = r.what == "lset";
    const auto engine = l ? l_set(p) : t_set(p);
    const auto gens = engine ? engine->generators : std::vector<GroupElement>{};
    const auto diff = oracle::compare_with_ideal(e, l ? e.lset : e.tset, p, gens);
    pass = diff.empty();
    j["engine_generators"] = io::to_json(gens, p);
    j["missing"] = io::to_json(diff.missing, p);
    j["extra"] = io::to_json(diff.extra, p);
  } else if (r.what == "ceq") {
    const std::int64_t brute = oracle::ceq_bruteforce(p, budget);
    const std::int64_t engine = ceq(p);
    pass = brute == engine;
    j["oracle"] = brute;
    j["engine"] = engine;
  } else if (r.what == "f") {
    const bool same_length = !r.any_length;
    const std::int64_t value = oracle::f_invariants(p, r.i, same_length, budget);
    j["i"] = r.i;
    j["same_length"] = same_length;
    j["oracle"] = value;
    if (r.i == 2 && same_length) {
      const F2lResult f = f2l(p);
      j["engine"] = io::to_json(f.value);
      pass = Integer(value) == f.value;
    }
  } else {
    bad("--what must be lset, tset, ceq or f");
  }
  j["pass"] = pass;
  return {j, pass ? kOk : kCrossCheck};
}

void print_text(const Json& j, std::ostream& out, const std::string& prefix) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_text(v, out, prefix.empty() ? k : prefix + "." + k);
    return;
  }
  out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotReduced:
      return kNotReduced;
    case ErrorKind::InfiniteWithoutLimit:
    case ErrorKind::InfiniteSet:
      return kInfinite;
    case ErrorKind::CrossCheckFailed:
      return kCrossCheck;
    default:
      return kInvalidInput;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Factorization invariants of reduced affine monoids", "sgfact"};
  app.require_subcommand(1, 1);
  Request req;

  using Handler = std::function<Outcome(const Request&)>;
  const std::vector<std::tuple<const char*, const char*, Handler>> commands = {
      {"validate", "check that the presentation is reduced", cmd_validate},
      {"ideal", "Groebner basis and minimal generators of I_S", cmd_ideal},
      {"tilde-ideal", "minimal generators of the homogenized ideal", cmd_tilde_ideal},
      {"kernel", "kernel lattice of the generators", cmd_kernel},
      {"apery", "Apery set of --b", cmd_apery},
      {"apery-finite", "cone and staircase finiteness tests for --b", cmd_apery_finite},
      {"tset", "ideal of elements with two factorizations", cmd_tset},
      {"lset", "ideal of elements with two equal-length factorizations", cmd_lset},
      {"lset-complement", "S minus L_S", cmd_lset_complement},
      {"lset-finite", "finiteness of S minus L_S", cmd_lset_finite},
      {"principal", "whether L_S is principal", cmd_principal},
      {"f2l", "largest integer outside L_S", cmd_f2l},
      {"ceq", "equal catenary degree", cmd_ceq},
      {"ceq-bound", "upper bound for the equal catenary degree", cmd_ceq_bound},
      {"ceq-element", "equal catenary degree of one element by brute force", cmd_ceq_element},
      {"closed-form", "closed formulas for special families", cmd_closed_form},
      {"transform", "transformations preserving the homogenized ideal", cmd_transform},
      {"oracle-check", "compare the engine with brute-force enumeration", cmd_oracle_check},
  };

  std::map<CLI::App*, Handler> handlers;
  for (const auto& [name, help, h] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", req.input, "presentation JSON, inline or a file path");
    sub->add_option("--order", req.order, "term order descriptor, e.g. grevlex or wgrevlex:2,2,1");
    sub->add_option("--b", req.b, "elements as JSON");
    sub->add_option("--limit", req.limit, "degree limit for infinite sets");
    sub->add_option("--cap", req.cap, "search cap");
    sub->add_option("--format", req.format, "output format")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--family", req.family, "closed-form family");
    sub->add_option("--params", req.params, "family parameters as JSON");
    sub->add_flag("--verified", req.verified, "cross-check formulas against the engine");
    sub->add_option("--what", req.what, "sub-selection");
    sub->add_option("--lambda", req.lambda, "transform scalar");
    sub->add_option("--i", req.i, "number of factorizations for --what f");
    sub->add_flag("--any-length", req.any_length, "count factorizations of any length for --what f");
    handlers[sub] = h;
  }

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }

  try {
    const Outcome o = handlers.at(app.get_subcommands().front())(req);
    if (req.format == "text") {
      print_text(o.result, out, "");
    } else {
      out << o.result.dump() << "\n";
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInvalidInput;
  }
}

}  // namespace sgfact::cli
