#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "sgfact/integer.hpp"

namespace sgfact {

// T = Z/t_1 + ... + Z/t_k. k = 0 means no torsion.
struct TorsionSpec {
  std::vector<Integer> moduli;

  std::size_t size() const { return moduli.size(); }
  bool empty() const { return moduli.empty(); }
  bool operator==(const TorsionSpec&) const = default;
};

// Element of Z^m + T. Torsion residues are kept in [0, t_j).
struct GroupElement {
  std::vector<Integer> free;
  std::vector<Integer> torsion;

  static GroupElement zero(std::size_t rank, std::size_t torsion_size);
  // Builds an element and reduces the torsion part modulo the moduli.
  static GroupElement make(std::vector<Integer> free, std::vector<Integer> torsion,
                           const TorsionSpec& spec);

  bool is_zero() const;
  bool free_is_zero() const;

  bool operator==(const GroupElement&) const = default;
  friend auto operator<=>(const GroupElement& a, const GroupElement& b) {
    if (auto c = a.free <=> b.free; c != 0) return c;
    return a.torsion <=> b.torsion;
  }

  std::size_t hash() const;
  // Flat "[f1,...,fm | t1,...]" rendering, used in diagnostics.
  std::string str() const;
};

GroupElement add(const GroupElement& a, const GroupElement& b, const TorsionSpec& spec);
GroupElement sub(const GroupElement& a, const GroupElement& b, const TorsionSpec& spec);
GroupElement scale(const GroupElement& a, const Integer& k, const TorsionSpec& spec);

struct GroupElementHash {
  std::size_t operator()(const GroupElement& g) const { return g.hash(); }
};

}  // namespace sgfact
