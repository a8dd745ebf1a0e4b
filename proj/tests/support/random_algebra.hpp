#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "alglength/algebra.hpp"
#include "alglength/echelon.hpp"

// Random inputs for the property suites. Every generator takes the engine
// explicitly so a failing seed can be replayed.

namespace alglength::testkit {

using Rng = std::mt19937_64;

inline std::uint64_t uniform(Rng &rng, std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
}

inline bool coin(Rng &rng, double p) { return std::bernoulli_distribution(p)(rng); }

inline Scalar random_scalar(Rng &rng, const FieldDescriptor &f) {
  if (f.is_prime())
    return Scalar::from_integer(f, uniform(rng, 0, f.modulus() - 1));
  const auto num = static_cast<std::int64_t>(uniform(rng, 0, 10)) - 5;
  const auto den = static_cast<std::int64_t>(uniform(rng, 1, 3));
  return Scalar::from_fraction(f, num, den);
}

inline Vector random_vector(Rng &rng, const FieldDescriptor &f, std::size_t n) {
  Vector v;
  for (std::size_t i = 0; i < n; ++i)
    v.push_back(random_scalar(rng, f));
  return v;
}

/// Unital algebra whose non-unit products are random; each structure
/// constant is nonzero with probability density.
inline StructureTable random_algebra(Rng &rng, const FieldDescriptor &f, std::size_t n,
                                     double density = 0.4) {
  auto a = StructureTable::with_default_names(f, n);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (coin(rng, density))
          a.set_coefficient(i, j, k, random_scalar(rng, f));
  return a;
}

/// Rational algebra with e_i^2 = -1 and e_i e_j = -e_j e_i, the products
/// e_i e_j (i < j) being random small integer combinations of e_1..e_{n-1}.
inline StructureTable random_lc_algebra(Rng &rng, std::size_t n, double density = 0.3) {
  const auto f = FieldDescriptor::rational();
  auto a = StructureTable::with_default_names(f, n);
  for (std::size_t i = 1; i < n; ++i) {
    a.set_coefficient(i, i, 0, Scalar::from_integer(f, -1));
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 1; k < n; ++k)
        if (coin(rng, density)) {
          static constexpr std::int64_t choices[] = {-2, -1, 1, 2};
          const std::int64_t c = choices[uniform(rng, 0, 3)];
          a.set_coefficient(i, j, k, Scalar::from_integer(f, c));
          a.set_coefficient(j, i, k, Scalar::from_integer(f, -c));
        }
  }
  a.set_lc_flag(true);
  return a;
}

inline GenSet random_gens(Rng &rng, const StructureTable &a, std::size_t count) {
  GenSet s;
  for (std::size_t i = 0; i < count; ++i)
    s.vectors.push_back(random_vector(rng, a.field(), a.dim()));
  return s;
}

/// Span of {1} together with s.
inline EchelonSubspace first_layer(const StructureTable &a, const GenSet &s) {
  EchelonSubspace space(a.field(), a.dim());
  space.insert(a.unit());
  for (const auto &v : s.vectors)
    space.insert(v);
  return space;
}

/// Same L_1 as s: reduced basis rows, each rescaled and shifted by a
/// multiple of the unit, in shuffled order.
inline GenSet same_first_layer(Rng &rng, const StructureTable &a, const GenSet &s) {
  const auto layer = first_layer(a, s);
  GenSet out;
  for (const auto &row : layer.rows()) {
    if (row == a.unit())
      continue;
    Scalar c = random_scalar(rng, a.field());
    while (c.is_zero())
      c = random_scalar(rng, a.field());
    Vector v = scaled(row, c);
    add_scaled(v, random_scalar(rng, a.field()), a.unit());
    out.vectors.push_back(v);
  }
  if (out.vectors.empty() || coin(rng, 0.3))
    out.vectors.push_back(scaled(a.unit(), Scalar::from_integer(a.field(), 2)));
  std::shuffle(out.vectors.begin(), out.vectors.end(), rng);
  return out;
}

} // namespace alglength::testkit
