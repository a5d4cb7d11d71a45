#include "sgfact/io.hpp"

#include "sgfact/errors.hpp"

namespace sgfact::io {
namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::InvalidInput, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<Integer> integers(const Json& j) {
  if (!j.is_array()) bad("expected an array of integers");
  std::vector<Integer> out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

}  // namespace

Json to_json(const Integer& v) {
  if (auto s = v.try_int64()) return *s;
  return v.str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      if (u > static_cast<std::uint64_t>(INT64_MAX)) return Integer::parse(std::to_string(u));
    }
    return Integer(j.get<std::int64_t>());
  }
  if (j.is_string()) return Integer::parse(j.get<std::string>());
  bad("expected an integer, got " + j.dump());
}

MonoidPresentation presentation_from_json(const Json& j) {
  MonoidPresentation p;
  if (j.is_object() && j.contains("numerical")) {
    p.rank = 1;
    for (auto& a : integers(j.at("numerical"))) p.generators.push_back(GroupElement{{a}, {}});
    return p;
  }
  const Json& rank = field(j, "rank");
  if (!rank.is_number_integer() || rank.get<std::int64_t>() < 0) bad("rank must be a nonnegative integer");
  p.rank = rank.get<std::size_t>();
  if (j.contains("torsion")) p.torsion.moduli = integers(j.at("torsion"));
  const Json& gens = field(j, "generators");
  if (!gens.is_array()) bad("generators must be an array");
  for (const auto& g : gens) {
    auto flat = integers(g);
    if (flat.size() != p.rank + p.torsion.size()) {
      throw Error(ErrorKind::DimensionMismatch, "generator " + g.dump() + " should have " +
                                                    std::to_string(p.rank + p.torsion.size()) + " entries");
    }
    GroupElement e;
    e.free.assign(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p.rank));
    e.torsion.assign(flat.begin() + static_cast<std::ptrdiff_t>(p.rank), flat.end());
    p.generators.push_back(std::move(e));
  }
  return p;
}

Json to_json(const MonoidPresentation& p) {
  Json j;
  j["rank"] = p.rank;
  Json t = Json::array();
  for (const auto& m : p.torsion.moduli) t.push_back(to_json(m));
  j["torsion"] = t;
  Json g = Json::array();
  for (const auto& a : p.generators) {
    Json flat = Json::array();
    for (const auto& c : a.free) flat.push_back(to_json(c));
    for (const auto& c : a.torsion) flat.push_back(to_json(c));
    g.push_back(flat);
  }
  j["generators"] = g;
  return j;
}

GroupElement element_from_json(const Json& j, const MonoidPresentation& p) {
  if (p.is_numerical() && (j.is_number_integer() || j.is_string())) return p.element({integer_from_json(j)});
  auto flat = integers(j);
  if (flat.size() != p.rank + p.torsion.size()) {
    throw Error(ErrorKind::DimensionMismatch, "element " + j.dump() + " should have " +
                                                  std::to_string(p.rank + p.torsion.size()) + " entries");
  }
  std::vector<Integer> free(flat.begin(), flat.begin() + static_cast<std::ptrdiff_t>(p.rank));
  std::vector<Integer> tors(flat.begin() + static_cast<std::ptrdiff_t>(p.rank), flat.end());
  return p.element(std::move(free), std::move(tors));
}

std::vector<GroupElement> elements_from_json(const Json& j, const MonoidPresentation& p) {
  if (!j.is_array()) return {element_from_json(j, p)};
  std::vector<GroupElement> out;
  for (const auto& e : j) out.push_back(element_from_json(e, p));
  return out;
}

Json to_json(const GroupElement& g, const MonoidPresentation& p) {
  if (p.is_numerical()) return to_json(g.free[0]);
  Json flat = Json::array();
  for (const auto& c : g.free) flat.push_back(to_json(c));
  for (const auto& c : g.torsion) flat.push_back(to_json(c));
  return flat;
}

Json to_json(const std::vector<GroupElement>& gs, const MonoidPresentation& p) {
  Json a = Json::array();
  for (const auto& g : gs) a.push_back(to_json(g, p));
  return a;
}

Json to_json(const Exponents& e) { return Json(e); }

Json to_json(const Binomial& f) {
  Json j;
  j["plus"] = f.plus;
  j["minus"] = f.minus;
  j["text"] = to_string(f);
  return j;
}

Binomial binomial_from_json(const Json& j) {
  Binomial f;
  for (const auto& v : integers(field(j, "plus"))) f.plus.push_back(v.to_int64());
  for (const auto& v : integers(field(j, "minus"))) f.minus.push_back(v.to_int64());
  if (f.plus.size() != f.minus.size()) throw Error(ErrorKind::DimensionMismatch, "plus and minus differ in length");
  return f;
}

Json to_json(const BinomialBasis& b) {
  Json j;
  j["order"] = b.order.descriptor();
  Json bins = Json::array();
  for (const auto& f : b.binomials) bins.push_back(to_json(f));
  j["binomials"] = bins;
  Json monos = Json::array();
  for (const auto& m : b.monomials) monos.push_back(to_json(m));
  j["monomials"] = monos;
  j["groebner"] = b.is_groebner;
  j["minimal"] = b.is_minimal_generating;
  return j;
}

Json to_json(const Factorization& f) { return Json(f.coeffs); }

Json to_json(const AperyResult& r, const MonoidPresentation& p) {
  Json j;
  j["finite"] = r.finite;
  if (r.count) j["count"] = *r.count;
  if (r.degree_limit) j["degree_limit"] = *r.degree_limit;
  j["elements"] = to_json(r.elements, p);
  Json ini = Json::array();
  for (const auto& m : r.initial_ideal) ini.push_back(to_json(m));
  j["initial_ideal"] = ini;
  return j;
}

Json to_json(const MonoidIdeal& ideal, const MonoidPresentation& p) {
  Json j;
  j["generators"] = to_json(ideal.generators, p);
  return j;
}

}  // namespace sgfact::io
