#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "alglength/scalar.hpp"

namespace alglength {

/// A finite-dimensional algebra given by structure constants
/// e_i e_j = sum_k c[i][j][k] e_k. Basis element 0 is the unit.
///
/// A freshly constructed table is unital with every non-unit product zero;
/// set_product() and set_coefficient() fill in the rest. Nothing stops a
/// caller from breaking the unit law through the setters, which is what
/// validate_unital() is for.
class StructureTable {
public:
  StructureTable(FieldDescriptor field, std::vector<std::string> basis_names)
      : field_(field), names_(std::move(basis_names)) {
    if (names_.empty())
      throw ShapeError("an algebra needs at least the unit");
    const std::size_t n = names_.size();
    coeffs_.assign(n * n * n, Scalar::zero(field_));
    for (std::size_t j = 0; j < n; ++j) {
      at(0, j, j) = Scalar::one(field_);
      at(j, 0, j) = Scalar::one(field_);
    }
  }

  /// Unit named "1", the rest e1 ... e{n-1}.
  static StructureTable with_default_names(FieldDescriptor field, std::size_t n) {
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i < n; ++i)
      names.push_back("e" + std::to_string(i));
    return StructureTable(field, std::move(names));
  }

  std::size_t dim() const noexcept { return names_.size(); }
  const FieldDescriptor &field() const noexcept { return field_; }
  const std::vector<std::string> &basis_names() const noexcept { return names_; }

  bool lc_flag() const noexcept { return lc_flag_; }
  void set_lc_flag(bool flag) noexcept { lc_flag_ = flag; }

  const Scalar &coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    check_index(i), check_index(j), check_index(k);
    return at(i, j, k);
  }

  void set_coefficient(std::size_t i, std::size_t j, std::size_t k, const Scalar &value) {
    check_index(i), check_index(j), check_index(k);
    if (!(value.field() == field_))
      throw FieldMismatch("coefficient over " + value.field().to_string());
    at(i, j, k) = value;
  }

  /// The product e_i e_j as a coordinate vector.
  Vector product(std::size_t i, std::size_t j) const {
    check_index(i), check_index(j);
    const std::size_t n = dim();
    return Vector(coeffs_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                  coeffs_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
  }

  void set_product(std::size_t i, std::size_t j, const Vector &value) {
    if (value.size() != dim())
      throw ShapeError("product vector has length " + std::to_string(value.size()));
    for (std::size_t k = 0; k < dim(); ++k)
      set_coefficient(i, j, k, value[k]);
  }

  std::size_t index_of(const std::string &name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name)
        return i;
    return npos;
  }

  Vector unit() const { return unit_vector(field_, dim(), 0); }
  Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

  friend bool operator==(const StructureTable &a, const StructureTable &b) {
    return a.field_ == b.field_ && a.names_ == b.names_ && a.lc_flag_ == b.lc_flag_ &&
           a.coeffs_ == b.coeffs_;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  friend Vector multiply(const StructureTable &, const Vector &, const Vector &);

  Scalar &at(std::size_t i, std::size_t j, std::size_t k) {
    const std::size_t n = dim();
    return coeffs_[(i * n + j) * n + k];
  }
  const Scalar &at(std::size_t i, std::size_t j, std::size_t k) const {
    const std::size_t n = dim();
    return coeffs_[(i * n + j) * n + k];
  }

  void check_index(std::size_t i) const {
    if (i >= dim())
      throw ShapeError("basis index " + std::to_string(i) + " out of range for dimension " +
                       std::to_string(dim()));
  }

  FieldDescriptor field_;
  std::vector<std::string> names_;
  std::vector<Scalar> coeffs_;
  bool lc_flag_ = false;
};

/// A finite list of algebra elements; nonempty when handed to the length engine.
struct GenSet {
  std::vector<Vector> vectors;

  std::size_t size() const noexcept { return vectors.size(); }
  bool empty() const noexcept { return vectors.empty(); }

  friend bool operator==(const GenSet &, const GenSet &) = default;
};

inline void check_vector(const StructureTable &a, const Vector &v) {
  if (v.size() != a.dim())
    throw ShapeError("vector of length " + std::to_string(v.size()) +
                     " in an algebra of dimension " + std::to_string(a.dim()));
  for (const auto &s : v)
    if (!(s.field() == a.field()))
      throw FieldMismatch("vector over " + s.field().to_string() + " in an algebra over " +
                          a.field().to_string());
}

/// Bilinear product: (u v)_k = sum_{i,j} u_i v_j c[i][j][k].
inline Vector multiply(const StructureTable &a, const Vector &u, const Vector &v) {
  check_vector(a, u);
  check_vector(a, v);
  const std::size_t n = a.dim();
  Vector out = zero_vector(a.field(), n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i].is_zero())
      continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (v[j].is_zero())
        continue;
      const Scalar uv = u[i] * v[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar &c = a.at(i, j, k);
        if (!c.is_zero())
          out[k] += uv * c;
      }
    }
  }
  return out;
}

/// True iff 1 e_j = e_j = e_j 1 for every basis element.
inline bool validate_unital(const StructureTable &a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const bool diag = i == k;
      const Scalar &left = a.coefficient(0, i, k);
      const Scalar &right = a.coefficient(i, 0, k);
      if (diag ? !(left.is_one() && right.is_one()) : !(left.is_zero() && right.is_zero()))
        return false;
    }
  return true;
}

/// Checks the locally-complex basis criterion on the given basis:
/// e_i^2 = -1 for i >= 1 and e_i e_j = -e_j e_i for distinct i, j >= 1.
/// Locally-complex is a real notion, so prime fields are rejected.
inline bool check_lc_basis(const StructureTable &a) {
  if (a.field().is_prime())
    throw PrimeFieldNotAllowed("locally-complex checks need the rational field");
  if (!validate_unital(a))
    throw NonUnital("check_lc_basis needs a unital table");
  const std::size_t n = a.dim();
  const Vector minus_one = scaled(a.unit(), -Scalar::one(a.field()));
  for (std::size_t i = 1; i < n; ++i) {
    if (!(a.product(i, i) == minus_one))
      return false;
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector sum = a.product(i, j);
      add_scaled(sum, Scalar::one(a.field()), a.product(j, i));
      if (!is_zero(sum))
        return false;
    }
  }
  return true;
}

} // namespace alglength
