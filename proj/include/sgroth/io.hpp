#ifndef SGROTH_IO_HPP
#define SGROTH_IO_HPP

// JSON and CSV encodings. Key and list order is fixed so repeated runs are
// byte-identical.

#include <cstdint>
#include <limits>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgroth/core.hpp"
#include "sgroth/groth.hpp"
#include "sgroth/poly.hpp"
#include "sgroth/polytope.hpp"

namespace sgroth {

using Json = nlohmann::ordered_json;

/// JSON number when it fits in 64 bits, decimal string otherwise.
inline Json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<std::int64_t>::min() &&
      value <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(value);
  }
  return value.str();
}

inline Json partition_json(const Partition& p, int n) { return p.padded(n); }

inline Json points_json(const std::set<ExponentVector>& points) {
  Json out = Json::array();
  for (const auto& p : points) out.push_back(p.entries());
  return out;
}

inline Json to_json(const SparsePolynomial& f) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : f.terms()) {
    terms.push_back(Json{{"exp", alpha.entries()}, {"coeff", integer_json(c)}});
  }
  return Json{{"n", f.ambient()}, {"terms", std::move(terms)}};
}

inline Json to_json(const SchurExpansion& e) {
  Json terms = Json::array();
  for (const auto& [mu, a] : e.coeffs) {
    terms.push_back(Json{{"mu", partition_json(mu, e.n)}, {"coeff", integer_json(a)}});
  }
  return Json{{"lambda", partition_json(e.lambda, e.n)}, {"n", e.n}, {"terms", std::move(terms)}};
}

inline Json to_json(const MuChain& chain) {
  Json mus = Json::array();
  for (const auto& mu : chain.mus) mus.push_back(partition_json(mu, chain.n));
  return Json{{"mus", std::move(mus)}, {"rows", chain.rows}};
}

inline Json to_json(const Permutahedron& p) {
  return Json{{"weight", partition_json(p.weight(), p.ambient())},
              {"n", p.ambient()},
              {"vertices", points_json(p.vertices())},
              {"lattice_points", points_json(p.lattice_points())}};
}

/// One `x,y,z,degree` row per lattice point of each P_{μ^(k)}, tagged with
/// the total degree |λ|+k. Coordinates beyond n print as "-".
inline void write_figure_csv(std::ostream& os, const MuChain& chain) {
  os << "x,y,z,degree\n";
  for (const auto& mu : chain.mus) {
    for (const auto& p : Permutahedron(mu, chain.n).lattice_points()) {
      for (int d = 0; d < 3; ++d) {
        if (d < p.dimension()) {
          os << p[static_cast<std::size_t>(d)];
        } else {
          os << '-';
        }
        os << ',';
      }
      os << mu.size() << '\n';
    }
  }
}

}  // namespace sgroth

#endif  // SGROTH_IO_HPP
