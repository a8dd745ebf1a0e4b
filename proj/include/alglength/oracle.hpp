#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "alglength/algebra.hpp"
#include "alglength/echelon.hpp"
#include "alglength/length.hpp"

// Brute-force reference computations. Nothing here shares code with the
// fresh-pair candidate generation of length.hpp; the two are compared
// against each other in the test suites.

namespace alglength {

/// A fully bracketed product of generators. A leaf is one letter (an index
/// into the generating set); a node multiplies its left and right words.
class WordTree {
public:
  static WordTree leaf(std::size_t letter) { return WordTree(letter, nullptr, nullptr, 1); }

  static WordTree node(WordTree left, WordTree right) {
    const std::size_t len = left.length() + right.length();
    return WordTree(0, std::make_shared<const WordTree>(std::move(left)),
                    std::make_shared<const WordTree>(std::move(right)), len);
  }

  bool is_leaf() const noexcept { return left_ == nullptr; }
  std::size_t letter() const noexcept { return letter_; }
  std::size_t length() const noexcept { return length_; }
  const WordTree &left() const { return *left_; }
  const WordTree &right() const { return *right_; }

  /// "a" for a leaf, "(LR)" for a node; letters are "s0", "s1", ... unless
  /// names are given.
  std::string to_string(const std::vector<std::string> &names = {}) const {
    if (is_leaf())
      return letter_ < names.size() ? names[letter_] : "s" + std::to_string(letter_);
    return "(" + left_->to_string(names) + right_->to_string(names) + ")";
  }

private:
  WordTree(std::size_t letter, std::shared_ptr<const WordTree> l, std::shared_ptr<const WordTree> r,
           std::size_t len)
      : letter_(letter), left_(std::move(l)), right_(std::move(r)), length_(len) {}

  std::size_t letter_;
  std::shared_ptr<const WordTree> left_;
  std::shared_ptr<const WordTree> right_;
  std::size_t length_;
};

inline Integer catalan(std::uint64_t i) {
  Integer c = 1;
  for (std::uint64_t j = 0; j < i; ++j)
    c = c * 2 * (2 * j + 1) / (j + 2);
  return c;
}

/// Number of bracketed words of lengths 1..kmax over an alphabet of size
/// letters: sum of Catalan(k-1) * letters^k.
inline Integer word_candidate_count(std::uint64_t kmax, std::size_t letters) {
  Integer total = 0;
  Integer power = 1;
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    power *= letters;
    total += catalan(k - 1) * power;
  }
  return total;
}

struct WordBudget {
  /// Default admits kmax = 10 with three letters.
  Integer max_words = word_candidate_count(10, 3);
};

struct WordSpanResult {
  /// dim L_0 ... dim L_kmax.
  std::vector<std::size_t> dims;
  /// word_counts[k] = number of evaluated words of length k (index 0 unused).
  std::vector<Integer> word_counts;
  /// Words that enlarged the span, grouped by length: a literal fresh-word
  /// basis of every L_k.
  std::vector<std::vector<WordTree>> fresh_words;
};

/// Evaluates every bracketing of every letter assignment up to kmax and
/// inserts them level by level. Deliberately naive.
inline WordSpanResult enumerate_words_spans(const StructureTable &a, const GenSet &s,
                                            std::uint64_t kmax, const WordBudget &budget = {}) {
  if (!validate_unital(a))
    throw NonUnital("the algebra is not unital");
  for (const auto &v : s.vectors)
    check_vector(a, v);
  const Integer candidates = word_candidate_count(kmax, s.size());
  if (candidates > budget.max_words)
    throw BudgetExceeded("word enumeration up to length " + std::to_string(kmax) + " over " +
                         std::to_string(s.size()) + " letters",
                         candidates.str());

  WordSpanResult result;
  EchelonSubspace span(a.field(), a.dim());
  span.insert(a.unit());
  result.dims.push_back(span.dim());
  result.word_counts.push_back(1);
  result.fresh_words.emplace_back();

  using Level = std::vector<std::pair<WordTree, Vector>>;
  std::vector<Level> levels(1);
  for (std::uint64_t k = 1; k <= kmax; ++k) {
    Level level;
    if (k == 1) {
      for (std::size_t i = 0; i < s.size(); ++i)
        level.emplace_back(WordTree::leaf(i), s.vectors[i]);
    } else {
      for (std::uint64_t left = 1; left < k; ++left)
        for (const auto &[lw, lv] : levels[left])
          for (const auto &[rw, rv] : levels[k - left])
            level.emplace_back(WordTree::node(lw, rw), multiply(a, lv, rv));
    }
    std::vector<WordTree> fresh;
    for (const auto &[w, v] : level)
      if (span.insert(v))
        fresh.push_back(w);
    result.dims.push_back(span.dim());
    result.word_counts.push_back(Integer(level.size()));
    result.fresh_words.push_back(std::move(fresh));
    levels.push_back(std::move(level));
  }
  return result;
}

/// Number of subspaces of GF(p)^m (sum of Gaussian binomials).
inline Integer subspace_count(std::uint32_t p, std::size_t m) {
  Integer total = 0;
  for (std::size_t r = 0; r <= m; ++r) {
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < r; ++i) {
      Integer pm = 1, pi = 1;
      for (std::size_t e = 0; e < m - i; ++e)
        pm *= p;
      for (std::size_t e = 0; e < i + 1; ++e)
        pi *= p;
      num *= pm - 1;
      den *= pi - 1;
    }
    total += num / den;
  }
  return total;
}

struct BruteForceOptions {
  Integer max_subspaces = 10000;
};

struct BruteForceResult {
  std::uint64_t length = 0;
  GenSet witness;
  std::uint64_t subspaces_examined = 0;
};

namespace detail {

inline std::vector<std::vector<std::uint32_t>> residues(const GenSet &s) {
  std::vector<std::vector<std::uint32_t>> out;
  for (const auto &v : s.vectors) {
    auto &row = out.emplace_back();
    for (const auto &x : v)
      row.push_back(x.residue());
  }
  return out;
}

/// Calls visit(rows) for every reduced echelon basis of a rank-r subspace of
/// GF(p)^m, each row padded with a leading zero (the unit coordinate).
template <class Visit>
void for_each_echelon_basis(const FieldDescriptor &f, std::size_t m, std::size_t r, Visit &&visit) {
  const std::uint32_t p = f.modulus();
  std::vector<std::size_t> pivots(r);
  for (std::size_t i = 0; i < r; ++i)
    pivots[i] = i;
  for (;;) {
    // free cells: (row, column) right of the row pivot and not a pivot column
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = pivots[i] + 1; j < m; ++j)
        if (!std::binary_search(pivots.begin(), pivots.end(), j))
          cells.emplace_back(i, j);
    std::vector<std::uint32_t> digits(cells.size(), 0);
    for (;;) {
      GenSet rows;
      for (std::size_t i = 0; i < r; ++i) {
        Vector v = zero_vector(f, m + 1);
        v[pivots[i] + 1] = Scalar::one(f);
        rows.vectors.push_back(std::move(v));
      }
      for (std::size_t c = 0; c < cells.size(); ++c)
        if (digits[c] != 0)
          rows.vectors[cells[c].first][cells[c].second + 1] = Scalar::from_integer(f, digits[c]);
      visit(rows);
      std::size_t c = 0;
      while (c < digits.size() && ++digits[c] == p)
        digits[c++] = 0;
      if (c == digits.size())
        break;
    }
    // next pivot combination
    std::size_t i = r;
    while (i > 0 && pivots[i - 1] == m - r + i - 1)
      --i;
    if (i == 0)
      break;
    ++pivots[i - 1];
    for (std::size_t j = i; j < r; ++j)
      pivots[j] = pivots[j - 1] + 1;
  }
}

} // namespace detail

/// Length of a finite algebra: the maximum of l(S) over all generating
/// sets. Since l(S) only depends on L_1(S) = <1, S>, it is enough to try one
/// basis per subspace containing the unit. Ties go to the lexicographically
/// smallest witness.
inline BruteForceResult brute_force_algebra_length(const StructureTable &a,
                                                   const BruteForceOptions &opts = {}) {
  if (!a.field().is_prime())
    throw PrimeFieldRequired("brute force needs a prime field");
  if (!validate_unital(a))
    throw NonUnital("the algebra is not unital");
  const std::size_t n = a.dim();
  BruteForceResult best;
  if (n == 1) {
    best.witness.vectors.push_back(a.unit());
    best.subspaces_examined = 1;
    return best;
  }
  const std::size_t m = n - 1;
  const Integer count = subspace_count(a.field().modulus(), m);
  if (count > opts.max_subspaces)
    throw BudgetExceeded("subspace enumeration over GF(" + std::to_string(a.field().modulus()) +
                             ")^" + std::to_string(m),
                         count.str());

  bool found = false;
  std::vector<std::vector<std::uint32_t>> best_key;
  for (std::size_t r = 1; r <= m; ++r)
    detail::for_each_echelon_basis(a.field(), m, r, [&](const GenSet &s) {
      ++best.subspaces_examined;
      const LengthReport report = compute_length(a, s);
      if (!report.generating())
        return;
      auto key = detail::residues(s);
      if (!found || *report.length > best.length ||
          (*report.length == best.length && key < best_key)) {
        found = true;
        best.length = *report.length;
        best.witness = s;
        best_key = std::move(key);
      }
    });
  if (!found)
    throw NoGeneratingSet("no subspace containing the unit generates the algebra");
  return best;
}

} // namespace alglength
