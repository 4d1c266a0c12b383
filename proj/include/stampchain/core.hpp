#pragma once

// Exact predicates and measures on finite sets of positive integers
// ("stamps"): what they generate as sums of at most two elements, their
// range, admissibility, the addition-chain property, and symmetry.
//
// All operations are pure functions on immutable values and are safe to
// call concurrently.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace stampchain {

/// Largest accepted element. Keeps every pairwise sum well inside the
/// signed 64-bit range.
inline constexpr std::int64_t kMaxStamp = std::int64_t{1} << 31;

/// A strictly increasing set of positive integers a_1 < ... < a_k, k >= 1.
/// The shared representation of stamp bases, addition chains and stamp
/// chains. Construction normalizes order and rejects duplicates,
/// non-positive values and values above kMaxStamp.
class StampSet {
public:
  explicit StampSet(std::vector<std::int64_t> values) : elems_(std::move(values)) {
    if (elems_.empty()) {
      throw std::invalid_argument("stamp set must contain at least one element");
    }
    std::sort(elems_.begin(), elems_.end());
    for (std::size_t t = 0; t < elems_.size(); ++t) {
      const std::int64_t v = elems_[t];
      if (v < 1) {
        throw std::invalid_argument("stamp must be positive, got " + std::to_string(v));
      }
      if (v > kMaxStamp) {
        throw std::invalid_argument("stamp " + std::to_string(v) + " exceeds limit " +
                                    std::to_string(kMaxStamp));
      }
      if (t > 0 && elems_[t - 1] == v) {
        throw std::invalid_argument("duplicate stamp " + std::to_string(v));
      }
    }
  }

  StampSet(std::initializer_list<std::int64_t> values)
      : StampSet(std::vector<std::int64_t>(values)) {}

  /// Number of elements k.
  int length() const { return static_cast<int>(elems_.size()); }

  /// Element a_i, 1-indexed as in the usual stamp notation.
  std::int64_t stamp(int i) const { return elems_.at(static_cast<std::size_t>(i) - 1); }

  std::int64_t smallest() const { return elems_.front(); }
  std::int64_t largest() const { return elems_.back(); }

  std::span<const std::int64_t> elements() const { return elems_; }

  bool contains(std::int64_t v) const {
    return std::binary_search(elems_.begin(), elems_.end(), v);
  }

  /// 1-based index of value v, or 0 when absent.
  int index_of(std::int64_t v) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
    if (it == elems_.end() || *it != v) return 0;
    return static_cast<int>(it - elems_.begin()) + 1;
  }

  /// The j-prefix {a_1, ..., a_j}.
  StampSet prefix(int j) const {
    return StampSet(std::vector<std::int64_t>(elems_.begin(), elems_.begin() + j));
  }

  friend bool operator==(const StampSet&, const StampSet&) = default;
  /// Lexicographic; used for the deterministic ordering of search output
  /// and table assets.
  friend auto operator<=>(const StampSet& a, const StampSet& b) {
    return a.elems_ <=> b.elems_;
  }

  /// "1 3 5 7 8" -- the element list as it appears in table assets.
  std::string to_string() const {
    std::ostringstream out;
    for (std::size_t t = 0; t < elems_.size(); ++t) {
      if (t) out << ' ';
      out << elems_[t];
    }
    return out.str();
  }

private:
  std::vector<std::int64_t> elems_;
};

/// Constructs a StampSet, normalizing order; rejects duplicates and
/// non-positive values with a diagnostic naming the offending value.
inline StampSet make_stamp_set(std::vector<std::int64_t> values) {
  return StampSet(std::move(values));
}

/// How one integer is generated: by a single element (c = a_i) or by a
/// pair c = a_h + a_i with h <= i. Indices are 1-based.
struct Witness {
  int h = 0;
  int i = 0;
  bool is_pair = false;

  friend bool operator==(const Witness&, const Witness&) = default;
};

struct RangeResult {
  std::int64_t range = 0;      ///< largest n with [1, n] fully generated
  std::int64_t first_gap = 1;  ///< range + 1, never generated
};

/// Membership map over [1, limit] for the integers generated by a set,
/// with one witness per generated integer. The stored witness is the
/// lexicographically smallest (a_h, a_i), preferring a single element
/// over a pair, so plans and diagnostics are reproducible.
class GenerationProfile {
public:
  GenerationProfile(const StampSet& source, std::int64_t limit)
      : source_(source), limit_(limit), witnesses_(static_cast<std::size_t>(limit) + 1) {
    if (limit < 1) throw std::invalid_argument("profile limit must be >= 1");
    const auto elems = source_.elements();
    const int k = source_.length();
    // Singles first: they take precedence over any pair witness.
    for (int i = 1; i <= k; ++i) {
      const std::int64_t c = elems[i - 1];
      if (c <= limit_) witnesses_[c] = Witness{i, i, false};
    }
    for (int h = 1; h <= k; ++h) {
      const std::int64_t ah = elems[h - 1];
      if (ah + ah > limit_) break;
      for (int i = h; i <= k; ++i) {
        const std::int64_t c = ah + elems[i - 1];
        if (c > limit_) break;
        if (!witnesses_[c].has_value()) witnesses_[c] = Witness{h, i, true};
      }
    }
  }

  /// Window [1, 2*a_k + 1]: 2*a_k is the largest generable integer, so
  /// the first gap always lies inside the window and range() is total.
  static GenerationProfile for_range(const StampSet& source) {
    return GenerationProfile(source, 2 * source.largest() + 1);
  }

  const StampSet& source() const { return source_; }
  std::int64_t limit() const { return limit_; }

  bool generated(std::int64_t c) const {
    return c >= 1 && c <= limit_ && witnesses_[c].has_value();
  }

  std::optional<Witness> witness(std::int64_t c) const {
    if (c < 1 || c > limit_) return std::nullopt;
    return witnesses_[c];
  }

  RangeResult range() const {
    std::int64_t n = 0;
    while (n + 1 <= limit_ && witnesses_[n + 1].has_value()) ++n;
    return RangeResult{n, n + 1};
  }

private:
  StampSet source_;
  std::int64_t limit_;
  std::vector<std::optional<Witness>> witnesses_;
};

/// True iff c is an element or a sum of two (possibly equal) elements.
/// Returns the lexicographically smallest witness, single preferred.
inline std::optional<Witness> is_generated(const StampSet& set, std::int64_t c) {
  if (c < 1) throw std::invalid_argument("is_generated expects c >= 1");
  if (int i = set.index_of(c); i != 0) return Witness{i, i, false};
  const int k = set.length();
  for (int h = 1; h <= k; ++h) {
    const std::int64_t ah = set.stamp(h);
    if (2 * ah > c) break;  // pairs are ordered a_h <= a_i
    if (int i = set.index_of(c - ah); i != 0) return Witness{h, i, true};
  }
  return std::nullopt;
}

/// The largest n such that every integer in [1, n] is generated.
/// A set not containing 1 has range 0.
inline RangeResult range(const StampSet& set) {
  return GenerationProfile::for_range(set).range();
}

/// True iff the set generates all integers in [1, a_k], i.e. range >= a_k.
inline bool is_admissible(const StampSet& set) {
  return range(set).range >= set.largest();
}

/// Result of the addition-chain check; on failure, the smallest index j
/// whose element is not generated by the (j-1)-prefix.
struct ChainCheck {
  bool ok = false;
  int failing_index = 0;             ///< 1-based; 0 when ok
  std::int64_t failing_element = 0;  ///< 0 when ok

  explicit operator bool() const { return ok; }
};

/// True iff a_1 = 1 and each a_j (j >= 2) is a sum of two earlier
/// elements, repetition allowed.
inline ChainCheck is_addition_chain(const StampSet& set) {
  const auto elems = set.elements();
  if (elems[0] != 1) return ChainCheck{false, 1, elems[0]};
  const int k = set.length();
  for (int j = 2; j <= k; ++j) {
    const std::int64_t target = elems[j - 1];
    bool found = false;
    // two-pointer over the strictly increasing prefix
    int lo = 0, hi = j - 2;
    while (lo <= hi) {
      const std::int64_t s = elems[lo] + elems[hi];
      if (s == target) {
        found = true;
        break;
      }
      if (s < target) {
        ++lo;
      } else {
        --hi;
      }
    }
    if (!found) return ChainCheck{false, j, target};
  }
  return ChainCheck{true, 0, 0};
}

/// True iff the set is both an addition chain and a stamp basis for n.
inline bool is_stamp_chain_for(const StampSet& set, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("is_stamp_chain_for expects n >= 1");
  return is_addition_chain(set).ok && range(set).range >= n;
}

/// Symmetry identity a_i + a_{k-i} = a_k for all i in [1, k-1].
/// A one-element set is trivially symmetric.
inline bool is_symmetric_basis(const StampSet& set) {
  const int k = set.length();
  if (k == 1) return true;
  for (int i = 1; i <= k - 1; ++i) {
    if (set.stamp(i) + set.stamp(k - i) != set.largest()) return false;
  }
  return true;
}

}  // namespace stampchain
