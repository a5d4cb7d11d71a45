#include "sgfact/group.hpp"

#include <sstream>

#include "sgfact/errors.hpp"

namespace sgfact {

namespace {

void check_shape(const GroupElement& a, const GroupElement& b, const TorsionSpec& spec) {
  if (a.free.size() != b.free.size() || a.torsion.size() != spec.size() ||
      b.torsion.size() != spec.size()) {
    throw Error(ErrorKind::DimensionMismatch, "group elements of different shapes");
  }
}

}  // namespace

GroupElement GroupElement::zero(std::size_t rank, std::size_t torsion_size) {
  return GroupElement{std::vector<Integer>(rank), std::vector<Integer>(torsion_size)};
}

GroupElement GroupElement::make(std::vector<Integer> free, std::vector<Integer> torsion,
                                const TorsionSpec& spec) {
  if (torsion.size() != spec.size()) {
    throw Error(ErrorKind::DimensionMismatch, "torsion part has " + std::to_string(torsion.size()) +
                                                  " entries, expected " +
                                                  std::to_string(spec.size()));
  }
  for (std::size_t j = 0; j < torsion.size(); ++j) torsion[j] = mod_floor(torsion[j], spec.moduli[j]);
  return GroupElement{std::move(free), std::move(torsion)};
}

bool GroupElement::free_is_zero() const {
  for (const auto& v : free) {
    if (!v.is_zero()) return false;
  }
  return true;
}

bool GroupElement::is_zero() const {
  if (!free_is_zero()) return false;
  for (const auto& v : torsion) {
    if (!v.is_zero()) return false;
  }
  return true;
}

std::size_t GroupElement::hash() const {
  std::size_t h = free.size() * 0x9e3779b97f4a7c15ULL;
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  for (const auto& v : free) mix(v.hash());
  for (const auto& v : torsion) mix(v.hash());
  return h;
}

std::string GroupElement::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < free.size(); ++i) os << (i ? "," : "") << free[i];
  if (!torsion.empty()) {
    os << " |";
    for (const auto& t : torsion) os << ' ' << t;
  }
  os << ')';
  return os.str();
}

GroupElement add(const GroupElement& a, const GroupElement& b, const TorsionSpec& spec) {
  check_shape(a, b, spec);
  GroupElement r = a;
  for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] += b.free[i];
  for (std::size_t j = 0; j < r.torsion.size(); ++j) {
    r.torsion[j] = mod_floor(r.torsion[j] + b.torsion[j], spec.moduli[j]);
  }
  return r;
}

GroupElement sub(const GroupElement& a, const GroupElement& b, const TorsionSpec& spec) {
  check_shape(a, b, spec);
  GroupElement r = a;
  for (std::size_t i = 0; i < r.free.size(); ++i) r.free[i] -= b.free[i];
  for (std::size_t j = 0; j < r.torsion.size(); ++j) {
    r.torsion[j] = mod_floor(r.torsion[j] - b.torsion[j], spec.moduli[j]);
  }
  return r;
}

GroupElement scale(const GroupElement& a, const Integer& k, const TorsionSpec& spec) {
  GroupElement r = a;
  for (auto& v : r.free) v *= k;
  for (std::size_t j = 0; j < r.torsion.size(); ++j) {
    r.torsion[j] = mod_floor(r.torsion[j] * k, spec.moduli[j]);
  }
  return r;
}

}  // namespace sgfact
