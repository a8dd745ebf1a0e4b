#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "alglength/scalar.hpp"

namespace alglength {

/// A subspace of F^n stored as its reduced row-echelon basis.
///
/// Rows are kept sorted by pivot column; every pivot entry is 1 and every
/// other row is zero in that column. The reduced form is unique, so two
/// spaces are equal exactly when their rows and pivots are equal.
class EchelonSubspace {
public:
  EchelonSubspace(FieldDescriptor field, std::size_t ambient)
      : field_(field), ambient_(ambient) {}

  const FieldDescriptor &field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  bool is_full() const noexcept { return rows_.size() == ambient_; }

  const std::vector<Vector> &rows() const noexcept { return rows_; }
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  /// v minus its component along the rows; zero iff v lies in the space.
  Vector reduce(Vector v) const {
    check(v);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Scalar &c = v[pivots_[r]];
      if (!c.is_zero())
        add_scaled(v, -c, rows_[r]);
    }
    return v;
  }

  bool contains(const Vector &v) const { return is_zero(reduce(v)); }

  /// Adds v to the space. Returns the normalized reduced increment (pivot
  /// entry 1) when the dimension grew, nullopt when v was already inside.
  std::optional<Vector> insert(const Vector &v) {
    Vector w = reduce(v);
    auto lead = std::find_if(w.begin(), w.end(), [](const Scalar &s) { return !s.is_zero(); });
    if (lead == w.end())
      return std::nullopt;
    const std::size_t pivot = static_cast<std::size_t>(lead - w.begin());
    const Scalar inv = lead->inverse();
    for (auto &s : w)
      if (!s.is_zero())
        s *= inv;
    for (auto &row : rows_) {
      const Scalar c = row[pivot];
      if (!c.is_zero())
        add_scaled(row, -c, w);
    }
    auto at = std::lower_bound(pivots_.begin(), pivots_.end(), pivot);
    const auto offset = at - pivots_.begin();
    pivots_.insert(at, pivot);
    rows_.insert(rows_.begin() + offset, w);
    return w;
  }

  friend bool operator==(const EchelonSubspace &a, const EchelonSubspace &b) {
    return a.field_ == b.field_ && a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.rows_ == b.rows_;
  }

private:
  void check(const Vector &v) const {
    if (v.size() != ambient_)
      throw ShapeError("vector of length " + std::to_string(v.size()) +
                       " used with ambient dimension " + std::to_string(ambient_));
    for (const auto &s : v)
      if (!(s.field() == field_))
        throw FieldMismatch("vector over " + s.field().to_string() + " used with subspace over " +
                            field_.to_string());
  }

  FieldDescriptor field_;
  std::size_t ambient_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

/// Value-returning insertion: the enlarged space and whether it grew.
inline std::pair<EchelonSubspace, bool> echelon_insert(EchelonSubspace space, const Vector &v) {
  const bool grew = space.insert(v).has_value();
  return {std::move(space), grew};
}

inline bool subspace_contains(const EchelonSubspace &space, const Vector &v) {
  return space.contains(v);
}

} // namespace alglength
