#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alglength/algebra.hpp"
#include "alglength/echelon.hpp"

namespace alglength {

/// Basis increment of L_k over L_{k-1}: vectors of L_k that extend a basis
/// of L_{k-1} to one of L_k.
struct FreshGroup {
  std::uint64_t length;
  std::vector<Vector> vectors;

  friend bool operator==(const FreshGroup &, const FreshGroup &) = default;
};

/// The filtration L_0 <= L_1 <= ... <= L_k built so far.
///
/// Only nonempty fresh groups are stored, in increasing length. Group 0 is
/// always {1}. Each group holds the rows of the reduced echelon basis of L_k
/// whose pivots are new at step k, so the state is a function of the
/// filtration alone and not of the order in which vectors were met.
struct LayerState {
  EchelonSubspace acc;
  std::vector<FreshGroup> fresh;
  std::vector<std::size_t> dims;
  std::uint64_t k = 0;

  std::uint64_t last_growth() const {
    for (std::size_t i = dims.size(); i-- > 1;)
      if (dims[i] > dims[i - 1])
        return i;
    return 0;
  }
};

enum class StopReason { reached_full_dim, stabilized_window, stabilized_lc_window, cap_exceeded };

inline std::string to_string(StopReason r) {
  switch (r) {
  case StopReason::reached_full_dim:
    return "reached_full_dim";
  case StopReason::stabilized_window:
    return "stabilized_window";
  case StopReason::stabilized_lc_window:
    return "stabilized_lc_window";
  case StopReason::cap_exceeded:
    return "cap_exceeded";
  }
  return "unknown";
}

/// (m_0, m_1, ..., m_N). partial is set when the generating set does not
/// generate the algebra, in which case the terms only cover L(S).
struct CharSeq {
  std::vector<std::uint64_t> terms;
  bool partial = false;

  std::size_t size() const noexcept { return terms.size(); }
  std::uint64_t operator[](std::size_t i) const { return terms[i]; }

  friend bool operator==(const CharSeq &, const CharSeq &) = default;
};

struct LengthReport {
  std::vector<std::size_t> dims;
  CharSeq charseq;
  std::optional<std::uint64_t> length; // nullopt: S does not generate
  StopReason stop_reason = StopReason::reached_full_dim;
  std::vector<FreshGroup> fresh_basis;

  bool generating() const noexcept { return length.has_value(); }

  friend bool operator==(const LengthReport &, const LengthReport &) = default;
};

struct LengthOptions {
  /// Use the shorter stabilization window valid for locally-complex
  /// algebras. Requires check_lc_basis to pass.
  bool lc_shortcut = false;
  /// Maximum word length explored; defaults to 2^(n-1).
  std::optional<std::uint64_t> cap;
  /// When false, only reaching full dimension or the cap stops the loop.
  bool stop_rules = true;
};

inline std::uint64_t default_cap(std::size_t n) {
  if (n == 0)
    return 1;
  return n - 1 >= 63 ? (std::uint64_t{1} << 63) : (std::uint64_t{1} << (n - 1));
}

/// m_0 = 0, then dims[k] - dims[k-1] copies of k for each k >= 1.
inline CharSeq characteristic_sequence(const std::vector<std::size_t> &dims) {
  CharSeq seq;
  seq.terms.push_back(0);
  for (std::size_t k = 1; k < dims.size(); ++k)
    for (std::size_t c = dims[k - 1]; c < dims[k]; ++c)
      seq.terms.push_back(k);
  return seq;
}

inline CharSeq characteristic_sequence(const LengthReport &report) {
  CharSeq seq = characteristic_sequence(report.dims);
  seq.partial = !report.generating();
  return seq;
}

/// max{t | m_t <= k} + 1, i.e. dim L_k recovered from the sequence.
inline std::size_t span_dimension(const CharSeq &seq, std::uint64_t k) {
  std::size_t count = 0;
  while (count < seq.size() && seq[count] <= k)
    ++count;
  return count;
}

namespace detail {

inline void require_inputs(const StructureTable &a, const GenSet &s) {
  if (!validate_unital(a))
    throw NonUnital("the algebra is not unital");
  if (s.empty())
    throw PreconditionError("the generating set is empty");
  for (const auto &v : s.vectors)
    check_vector(a, v);
}

/// Appends the rows of acc whose pivots are absent from old_pivots as the
/// fresh group of the given length, if there are any.
inline void record_fresh(LayerState &state, const std::vector<std::size_t> &old_pivots,
                         std::uint64_t length) {
  FreshGroup group{length, {}};
  const auto &pivots = state.acc.pivots();
  for (std::size_t r = 0; r < pivots.size(); ++r)
    if (!std::binary_search(old_pivots.begin(), old_pivots.end(), pivots[r]))
      group.vectors.push_back(state.acc.rows()[r]);
  if (!group.vectors.empty())
    state.fresh.push_back(std::move(group));
  state.dims.push_back(state.acc.dim());
}

inline const FreshGroup *find_group(const std::vector<FreshGroup> &groups, std::uint64_t length) {
  auto it = std::lower_bound(groups.begin(), groups.end(), length,
                             [](const FreshGroup &g, std::uint64_t l) { return g.length < l; });
  return it != groups.end() && it->length == length ? &*it : nullptr;
}

} // namespace detail

/// L_0 = <1> and L_1 = <1, S>; the returned state has k = 1.
inline LayerState initial_state(const StructureTable &a, const GenSet &s) {
  detail::require_inputs(a, s);
  LayerState state{EchelonSubspace(a.field(), a.dim()), {}, {}, 0};
  state.acc.insert(a.unit());
  state.fresh.push_back({0, {a.unit()}});
  state.dims.push_back(1);
  const std::vector<std::size_t> old = state.acc.pivots();
  for (const auto &v : s.vectors)
    state.acc.insert(v);
  detail::record_fresh(state, old, 1);
  state.k = 1;
  return state;
}

/// In-place L_k -> L_{k+1}. Only products f g of fresh vectors with
/// len(f) + len(g) = k + 1 can leave L_k: any word of length k+1 splits as
/// a product of elements of L_a and L_b with a + b = k + 1, and expanding
/// both factors over the fresh groups, every pair with a shorter total
/// length already lies in L_k.
inline void advance(const StructureTable &a, LayerState &state) {
  if (state.k < 1)
    throw PreconditionError("layer_step needs k >= 1");
  const std::uint64_t target = state.k + 1;
  const std::vector<std::size_t> old = state.acc.pivots();
  if (!state.acc.is_full()) {
    for (const auto &left : state.fresh) {
      if (left.length == 0)
        continue;
      if (left.length >= target)
        break;
      const FreshGroup *right = detail::find_group(state.fresh, target - left.length);
      if (right == nullptr)
        continue;
      for (const auto &f : left.vectors)
        for (const auto &g : right->vectors)
          state.acc.insert(multiply(a, f, g));
    }
  }
  detail::record_fresh(state, old, target);
  state.k = target;
}

inline LayerState layer_step(const StructureTable &a, LayerState state) {
  advance(a, state);
  return state;
}

/// dim L_0 ... dim L_kmax with no early stopping.
inline std::vector<std::size_t> filtration_dims(const StructureTable &a, const GenSet &s,
                                                std::uint64_t kmax) {
  detail::require_inputs(a, s);
  if (kmax == 0)
    return {1};
  LayerState state = initial_state(a, s);
  while (state.k < kmax) {
    if (state.acc.is_full()) {
      state.dims.push_back(state.acc.dim());
      ++state.k;
    } else {
      advance(a, state);
    }
  }
  return state.dims;
}

/// Runs the filtration until L_k = A or a stabilization window proves that
/// it never grows again.
///
/// Without the shortcut, growth last seen at step g and no growth through
/// step 2g means the filtration is stuck. With lc_shortcut on a
/// locally-complex basis, a last growth of exactly one dimension at g >= 2
/// and no growth through 2g - 1 suffices.
inline LengthReport compute_length(const StructureTable &a, const GenSet &s,
                                   const LengthOptions &opts = {}) {
  detail::require_inputs(a, s);
  if (opts.lc_shortcut && !check_lc_basis(a))
    throw PreconditionError("lc_shortcut requires a locally-complex basis");

  const std::size_t n = a.dim();
  const std::uint64_t cap = opts.cap.value_or(default_cap(n));
  LengthReport report;

  if (n == 1) {
    report.dims = {1};
    report.length = 0;
    report.fresh_basis = {{0, {a.unit()}}};
    report.charseq = characteristic_sequence(report);
    return report;
  }

  LayerState state = initial_state(a, s);
  for (;;) {
    if (state.acc.is_full()) {
      report.length = state.k;
      report.stop_reason = StopReason::reached_full_dim;
      break;
    }
    if (opts.stop_rules) {
      const std::uint64_t g = state.last_growth();
      if (g == 0) {
        report.stop_reason = StopReason::stabilized_window;
        break;
      }
      if (opts.lc_shortcut && g >= 2 && state.dims[g] == state.dims[g - 1] + 1 &&
          state.k >= 2 * g - 1) {
        report.stop_reason = StopReason::stabilized_lc_window;
        break;
      }
      if (state.k >= 2 * g) {
        report.stop_reason = StopReason::stabilized_window;
        break;
      }
    }
    if (state.k >= cap) {
      report.stop_reason = StopReason::cap_exceeded;
      break;
    }
    advance(a, state);
  }

  report.dims = std::move(state.dims);
  report.fresh_basis = std::move(state.fresh);
  report.charseq = characteristic_sequence(report);

  for (std::size_t k = 0; k < report.dims.size(); ++k)
    if (span_dimension(report.charseq, k) != report.dims[k])
      throw InternalError("dim L_k disagrees with the characteristic sequence at k = " +
                          std::to_string(k));
  std::size_t fresh_total = 0;
  for (const auto &g : report.fresh_basis)
    fresh_total += g.vectors.size();
  if (fresh_total != report.dims.back())
    throw InternalError("fresh groups do not add up to dim L_k");
  return report;
}

inline bool is_generating(const StructureTable &a, const GenSet &s) {
  return compute_length(a, s).generating();
}

} // namespace alglength
