#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "alglength/length.hpp"
#include "alglength/scalar.hpp"

namespace alglength {

/// F_1 = F_2 = 1, F_i = F_{i-1} + F_{i-2}.
inline Integer fibonacci(std::int64_t i) {
  if (i < 1)
    throw RangeError("fibonacci index must be >= 1, got " + std::to_string(i));
  Integer prev = 0, cur = 1;
  for (std::int64_t step = 1; step < i; ++step) {
    Integer next = prev + cur;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline Integer power_of_two(std::uint64_t e) {
  Integer r = 1;
  r <<= static_cast<unsigned>(e);
  return r;
}

/// m_0 = 0, non-decreasing, every later term at least 1.
inline bool is_wellformed(const CharSeq &seq) {
  if (seq.size() == 0 || seq[0] != 0)
    return false;
  for (std::size_t h = 1; h < seq.size(); ++h)
    if (seq[h] < 1 || seq[h] < seq[h - 1])
      return false;
  return true;
}

inline void require_wellformed(const CharSeq &seq) {
  if (!is_wellformed(seq))
    throw WellformednessError("sequence must start at 0 and be non-decreasing with positive terms");
}

/// m_h = m_{t1} + m_{t2}.
struct Decomposition {
  std::size_t h;
  std::size_t t1;
  std::size_t t2;

  friend bool operator==(const Decomposition &, const Decomposition &) = default;
};

/// An index where a check failed, with the offending term.
struct Violation {
  std::size_t h;
  std::uint64_t value;

  friend bool operator==(const Violation &, const Violation &) = default;
};

struct ChainVerdict {
  bool holds = true;
  std::vector<Decomposition> witnesses;
  std::vector<Violation> violations;
};

/// Every m_h >= 2 must split as m_{t1} + m_{t2} with 0 < t1 <= t2 < h
/// (t1 < t2 when strict). The first pair in lexicographic order is kept as
/// the witness.
inline ChainVerdict check_addition_chain(const CharSeq &seq, bool strict) {
  require_wellformed(seq);
  ChainVerdict verdict;
  for (std::size_t h = 1; h < seq.size(); ++h) {
    if (seq[h] < 2)
      continue;
    std::optional<Decomposition> found;
    for (std::size_t t1 = 1; t1 < h && !found; ++t1)
      for (std::size_t t2 = strict ? t1 + 1 : t1; t2 < h; ++t2)
        if (seq[t1] + seq[t2] == seq[h]) {
          found = Decomposition{h, t1, t2};
          break;
        }
    if (found) {
      verdict.witnesses.push_back(*found);
    } else {
      verdict.holds = false;
      verdict.violations.push_back({h, seq[h]});
    }
  }
  return verdict;
}

struct BoundVerdict {
  bool holds = true;
  /// Every checked index meets its bound with equality.
  bool tight = true;
  std::vector<Violation> violations;
};

/// m_h <= 2^(h-1) for 1 <= h <= N.
inline BoundVerdict check_power_bound(const CharSeq &seq) {
  require_wellformed(seq);
  BoundVerdict verdict;
  for (std::size_t h = 1; h < seq.size(); ++h) {
    const Integer bound = power_of_two(h - 1);
    const Integer m = seq[h];
    if (m > bound) {
      verdict.holds = false;
      verdict.violations.push_back({h, seq[h]});
    }
    if (m != bound)
      verdict.tight = false;
  }
  return verdict;
}

/// With k = 1: m_h <= F_h for all h. With k > 1 generators independent
/// modulo the unit: m_1 = ... = m_k = 1 and m_{k+h} <= F_{h+2} for
/// -1 <= h <= N - k.
inline BoundVerdict check_fibonacci_bound(const CharSeq &seq, std::size_t k = 1) {
  require_wellformed(seq);
  const std::size_t last = seq.size() - 1;
  if (k < 1 || k > last)
    throw KOutOfRange("k = " + std::to_string(k) + " outside [1, " + std::to_string(last) + "]");
  BoundVerdict verdict;
  auto test = [&](std::size_t idx, const Integer &bound) {
    const Integer m = seq[idx];
    if (m > bound) {
      verdict.holds = false;
      verdict.violations.push_back({idx, seq[idx]});
    }
    if (m != bound)
      verdict.tight = false;
  };
  if (k == 1) {
    for (std::size_t h = 1; h <= last; ++h)
      test(h, fibonacci(static_cast<std::int64_t>(h)));
    return verdict;
  }
  for (std::size_t i = 1; i <= k; ++i)
    if (seq[i] != 1) {
      verdict.holds = false;
      verdict.tight = false;
      verdict.violations.push_back({i, seq[i]});
    }
  for (std::size_t idx = k - 1; idx <= last; ++idx) {
    const auto h = static_cast<std::int64_t>(idx) - static_cast<std::int64_t>(k);
    test(idx, fibonacci(h + 2));
  }
  return verdict;
}

/// Dimension-gap property of locally-complex generating sets: whenever
/// dim L_{g-1} < dim L_g and dim L_{g-1} <= dim A - 2 (g >= 2), then
/// dim L_{2g-1} >= dim L_{g-1} + 2. dims past the recorded end are taken
/// to be constant, which is exact for the reports of compute_length.
inline BoundVerdict check_dimension_gap(const std::vector<std::size_t> &dims, std::size_t total_dim) {
  BoundVerdict verdict;
  verdict.tight = false;
  auto dim_at = [&](std::size_t k) { return k < dims.size() ? dims[k] : dims.back(); };
  for (std::size_t g = 2; g < dims.size(); ++g) {
    if (!(dims[g - 1] < dims[g]) || dims[g - 1] + 2 > total_dim)
      continue;
    if (dim_at(2 * g - 1) < dims[g - 1] + 2) {
      verdict.holds = false;
      verdict.violations.push_back({g, dims[g - 1]});
    }
  }
  return verdict;
}

/// All structural checks on one characteristic sequence.
struct BoundReport {
  bool wellformed = false;
  std::optional<ChainVerdict> addition_chain;
  std::optional<ChainVerdict> strict_addition_chain;
  std::optional<BoundVerdict> power_bound;
  std::optional<BoundVerdict> fibonacci_bound;
  std::optional<BoundVerdict> k_bound;
  std::size_t k = 1;
};

/// k is the number of generators independent modulo the unit (dims[1] - 1).
/// Checks that cannot run on the sequence stay empty.
inline BoundReport verify_bounds(const CharSeq &seq, std::size_t k) {
  BoundReport report;
  report.k = k;
  report.wellformed = is_wellformed(seq);
  if (!report.wellformed)
    return report;
  report.addition_chain = check_addition_chain(seq, false);
  report.strict_addition_chain = check_addition_chain(seq, true);
  report.power_bound = check_power_bound(seq);
  if (seq.size() >= 2) {
    report.fibonacci_bound = check_fibonacci_bound(seq, 1);
    if (k >= 1 && k <= seq.size() - 1)
      report.k_bound = check_fibonacci_bound(seq, k);
  }
  return report;
}

} // namespace alglength
