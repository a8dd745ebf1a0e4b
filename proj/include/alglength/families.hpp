#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "alglength/algebra.hpp"

namespace alglength {

enum class Family { power2, stall_chain, fib_lc, lc_gap7, lc_gap_family };

inline std::string to_string(Family f) {
  switch (f) {
  case Family::power2:
    return "power2";
  case Family::stall_chain:
    return "stall-chain";
  case Family::fib_lc:
    return "fib-lc";
  case Family::lc_gap7:
    return "lc-gap7";
  case Family::lc_gap_family:
    return "lc-gap-family";
  }
  return "unknown";
}

inline std::optional<Family> family_from_string(const std::string &name) {
  for (Family f : {Family::power2, Family::stall_chain, Family::fib_lc, Family::lc_gap7,
                   Family::lc_gap_family})
    if (to_string(f) == name)
      return f;
  return std::nullopt;
}

/// n is the size parameter; its meaning per family:
///   power2        dimension n, n >= 3
///   stall-chain   dimension n + 2, n >= 2
///   fib-lc        dimension n, n >= 3
///   lc-gap7       ignored, dimension 7
///   lc-gap-family dimension n + 4, n >= 3
struct FamilySpec {
  Family family;
  std::size_t n = 0;
};

struct Example {
  StructureTable table;
  GenSet gens;
};

inline std::size_t family_dimension(const FamilySpec &spec) {
  switch (spec.family) {
  case Family::power2:
  case Family::fib_lc:
    return spec.n;
  case Family::stall_chain:
    return spec.n + 2;
  case Family::lc_gap7:
    return 7;
  case Family::lc_gap_family:
    return spec.n + 4;
  }
  return 0;
}

inline std::size_t family_min_n(Family f) {
  switch (f) {
  case Family::power2:
  case Family::fib_lc:
  case Family::lc_gap_family:
    return 3;
  case Family::stall_chain:
    return 2;
  case Family::lc_gap7:
    return 0;
  }
  return 0;
}

namespace detail {

class TableBuilder {
public:
  TableBuilder(FieldDescriptor field, std::size_t dim)
      : table_(StructureTable::with_default_names(field, dim)) {}

  /// e_i e_j = coeff * e_k
  void set(std::size_t i, std::size_t j, std::size_t k, int coeff = 1) {
    const auto f = table_.field();
    Vector v = zero_vector(f, table_.dim());
    v[k] = Scalar::from_integer(f, coeff);
    table_.set_product(i, j, v);
  }

  /// e_i e_j = e_k = -e_j e_i
  void set_anti(std::size_t i, std::size_t j, std::size_t k) {
    set(i, j, k, 1);
    set(j, i, k, -1);
  }

  void squares_minus_one() {
    for (std::size_t i = 1; i < table_.dim(); ++i)
      set(i, i, 0, -1);
  }

  Example finish(std::initializer_list<std::size_t> generators, bool lc) {
    table_.set_lc_flag(lc);
    GenSet gens;
    for (std::size_t g : generators)
      gens.vectors.push_back(table_.basis_vector(g));
    return {std::move(table_), std::move(gens)};
  }

private:
  StructureTable table_;
};

} // namespace detail

/// Builds one of the extremal example algebras together with its canonical
/// generating set. Over a prime field the locally-complex families keep
/// their integer constants reduced mod p but no longer claim the lc flag.
inline Example make_example(const FamilySpec &spec,
                            FieldDescriptor field = FieldDescriptor::rational()) {
  const std::size_t minimum = family_min_n(spec.family);
  if (spec.family != Family::lc_gap7 && spec.n < minimum)
    throw RangeError(to_string(spec.family) + " needs n >= " + std::to_string(minimum) +
                     ", got " + std::to_string(spec.n));
  const std::size_t n = spec.n;
  const bool lc = field.is_rational();
  detail::TableBuilder b(field, family_dimension(spec));

  switch (spec.family) {
  case Family::power2:
    // e_k^2 = e_{k+1}; everything else zero.
    for (std::size_t k = 1; k + 1 < n; ++k)
      b.set(k, k, k + 1);
    return b.finish({1}, false);

  case Family::stall_chain:
    // e_1^2 = e_2, e_1 e_i = e_{i+1} (2 <= i <= n-1), e_n^2 = e_{n+1}.
    b.set(1, 1, 2);
    for (std::size_t i = 2; i + 1 <= n; ++i)
      b.set(1, i, i + 1);
    b.set(n, n, n + 1);
    return b.finish({1}, false);

  case Family::fib_lc:
    // e_k e_{k+1} = e_{k+2} = -e_{k+1} e_k, e_m^2 = -1.
    b.squares_minus_one();
    for (std::size_t k = 1; k + 3 <= n; ++k)
      b.set_anti(k, k + 1, k + 2);
    return b.finish({1, 2}, lc);

  case Family::lc_gap7:
    b.squares_minus_one();
    b.set_anti(1, 2, 4);
    b.set_anti(1, 3, 5);
    b.set_anti(4, 5, 6);
    return b.finish({1, 2, 3}, lc);

  case Family::lc_gap_family:
    // e_1 e_i = e_{i+1} for 2 <= i <= n, e_2 e_n = e_{n+2},
    // e_{n+1} e_{n+2} = e_{n+3}, all anticommuting, squares -1.
    b.squares_minus_one();
    for (std::size_t i = 2; i <= n; ++i)
      b.set_anti(1, i, i + 1);
    b.set_anti(2, n, n + 2);
    b.set_anti(n + 1, n + 2, n + 3);
    return b.finish({1, 2}, lc);
  }
  throw RangeError("unknown family");
}

} // namespace alglength
