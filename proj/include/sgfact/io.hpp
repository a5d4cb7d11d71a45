#pragma once

#include <nlohmann/json.hpp>

#include "sgfact/apery.hpp"
#include "sgfact/binomial.hpp"
#include "sgfact/groebner.hpp"
#include "sgfact/monoid.hpp"
#include "sgfact/same_length.hpp"

namespace sgfact::io {

using Json = nlohmann::ordered_json;

// Integers are JSON numbers when they fit in 64 bits, decimal strings otherwise.
// Both forms are accepted on input.
Json to_json(const Integer& v);
Integer integer_from_json(const Json& j);

// {"rank": m, "torsion": [...], "generators": [[free..., torsion...], ...]}
// or {"numerical": [a_1, ...]}. The result is raw (not validated).
MonoidPresentation presentation_from_json(const Json& j);
Json to_json(const MonoidPresentation& p);

// Flat [free..., torsion...]; a bare number for numerical semigroups.
GroupElement element_from_json(const Json& j, const MonoidPresentation& p);
std::vector<GroupElement> elements_from_json(const Json& j, const MonoidPresentation& p);
Json to_json(const GroupElement& g, const MonoidPresentation& p);
Json to_json(const std::vector<GroupElement>& gs, const MonoidPresentation& p);

Json to_json(const Exponents& e);
Json to_json(const Binomial& f);  // {"plus", "minus", "text"}
Binomial binomial_from_json(const Json& j);
Json to_json(const BinomialBasis& b);
Json to_json(const Factorization& f);
Json to_json(const AperyResult& r, const MonoidPresentation& p);
Json to_json(const MonoidIdeal& ideal, const MonoidPresentation& p);

}  // namespace sgfact::io
