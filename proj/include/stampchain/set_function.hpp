#pragma once

// Set functions on the subset lattice of {1, ..., N} and their subset
// convolution
//
//   (f * g)(S) = sum over T subset of S of f(T) * g(S \ T),
//
// an associative product. Two implementations: the naive O(3^N) submask
// sum, and the ranked zeta/Moebius transform in O(2^N N^2). The single
// value (f * g)(U) is computable in O(2^N) without building the full
// table, which is what makes subset convolution a profitable Multiplier.
//
// Tables are indexed by bitmask: bit b set <=> element b+1 in the subset.
// All identities used are pure ring algebra, so any commutative-ring
// value type works; the demos use uint64 with mod-2^64 wraparound, which
// keeps equality checks exact.

#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace stampchain {

template <class T>
class SetFunction {
public:
  SetFunction(int ground_size, std::vector<T> table)
      : ground_size_(ground_size), table_(std::move(table)) {
    if (ground_size < 0 || ground_size > 30) {
      throw std::invalid_argument("ground set size out of range: " +
                                  std::to_string(ground_size));
    }
    if (table_.size() != std::size_t{1} << ground_size_) {
      throw std::invalid_argument("table has " + std::to_string(table_.size()) +
                                  " entries, expected 2^" + std::to_string(ground_size_));
    }
  }

  /// The convolution identity: 1 at the empty set, 0 elsewhere.
  static SetFunction indicator_of_empty(int ground_size) {
    std::vector<T> table(std::size_t{1} << ground_size, T{});
    table[0] = T{1};
    return SetFunction(ground_size, std::move(table));
  }

  int ground_size() const { return ground_size_; }
  std::size_t subset_count() const { return table_.size(); }
  std::uint32_t full_mask() const {
    return static_cast<std::uint32_t>(table_.size() - 1);
  }

  const T& operator[](std::uint32_t mask) const { return table_[mask]; }
  T& operator[](std::uint32_t mask) { return table_[mask]; }

  /// f(U), the table's last entry.
  const T& full_set_value() const { return table_.back(); }

  const std::vector<T>& table() const { return table_; }

  friend bool operator==(const SetFunction&, const SetFunction&) = default;

private:
  int ground_size_;
  std::vector<T> table_;
};

enum class ConvolutionAlgorithm {
  naive,   ///< direct submask sums, O(3^N)
  ranked,  ///< rank-split zeta transform, pointwise product, Moebius, O(2^N N^2)
};

namespace detail {

template <class T>
void check_same_ground(const SetFunction<T>& f, const SetFunction<T>& g) {
  if (f.ground_size() != g.ground_size()) {
    throw std::invalid_argument("ground set mismatch: N=" + std::to_string(f.ground_size()) +
                                " vs N=" + std::to_string(g.ground_size()));
  }
}

template <class T>
SetFunction<T> subset_convolve_naive(const SetFunction<T>& f, const SetFunction<T>& g) {
  const std::size_t size = f.subset_count();
  std::vector<T> out(size, T{});
  for (std::uint32_t s = 0; s < size; ++s) {
    // iterate submasks of s, including 0 and s itself
    std::uint32_t sub = s;
    for (;;) {
      out[s] += f[sub] * g[s ^ sub];
      if (sub == 0) break;
      sub = (sub - 1) & s;
    }
  }
  return SetFunction<T>(f.ground_size(), std::move(out));
}

template <class T>
SetFunction<T> subset_convolve_ranked(const SetFunction<T>& f, const SetFunction<T>& g) {
  const int n = f.ground_size();
  const std::size_t size = f.subset_count();

  // fz[r][s] = sum over subsets t of s with |t| = r of f(t); same for g.
  auto ranked_zeta = [n, size](const SetFunction<T>& fn) {
    std::vector<std::vector<T>> rz(static_cast<std::size_t>(n) + 1,
                                   std::vector<T>(size, T{}));
    for (std::uint32_t s = 0; s < size; ++s) {
      rz[static_cast<std::size_t>(std::popcount(s))][s] = fn[s];
    }
    for (auto& layer : rz) {
      for (int b = 0; b < n; ++b) {
        const std::uint32_t bit = std::uint32_t{1} << b;
        for (std::uint32_t s = 0; s < size; ++s) {
          if (s & bit) layer[s] += layer[s ^ bit];
        }
      }
    }
    return rz;
  };
  const auto fz = ranked_zeta(f);
  const auto gz = ranked_zeta(g);

  std::vector<T> out(size, T{});
  std::vector<T> layer(size);
  for (int r = 0; r <= n; ++r) {
    // pointwise product of complementary ranks
    for (std::uint32_t s = 0; s < size; ++s) {
      T acc{};
      for (int i = 0; i <= r; ++i) {
        acc += fz[static_cast<std::size_t>(i)][s] * gz[static_cast<std::size_t>(r - i)][s];
      }
      layer[s] = acc;
    }
    // Moebius inversion of this rank layer
    for (int b = 0; b < n; ++b) {
      const std::uint32_t bit = std::uint32_t{1} << b;
      for (std::uint32_t s = 0; s < size; ++s) {
        if (s & bit) layer[s] -= layer[s ^ bit];
      }
    }
    for (std::uint32_t s = 0; s < size; ++s) {
      if (std::popcount(s) == r) out[s] = layer[s];
    }
  }
  return SetFunction<T>(f.ground_size(), std::move(out));
}

}  // namespace detail

template <class T>
SetFunction<T> subset_convolve(const SetFunction<T>& f, const SetFunction<T>& g,
                               ConvolutionAlgorithm algorithm = ConvolutionAlgorithm::ranked) {
  detail::check_same_ground(f, g);
  return algorithm == ConvolutionAlgorithm::naive ? detail::subset_convolve_naive(f, g)
                                                  : detail::subset_convolve_ranked(f, g);
}

/// (f * g)(U) alone, in O(2^N): sum over all masks m of f(m) * g(U \ m).
template <class T>
T last_entry_pair_eval(const SetFunction<T>& f, const SetFunction<T>& g) {
  detail::check_same_ground(f, g);
  const std::uint32_t full = f.full_mask();
  T acc{};
  for (std::uint32_t m = 0; m < f.subset_count(); ++m) acc += f[m] * g[full ^ m];
  return acc;
}

/// Multiplier over set functions: multiply is the full subset convolution,
/// u reads the table's last entry, v computes that entry directly from the
/// factors. Exact value comparison.
template <class T>
struct SubsetConvMultiplier {
  using element_type = SetFunction<T>;
  using value_type = T;

  ConvolutionAlgorithm algorithm = ConvolutionAlgorithm::ranked;

  element_type multiply(const element_type& a, const element_type& b) const {
    return subset_convolve(a, b, algorithm);
  }
  value_type project(const element_type& f) const { return f.full_set_value(); }
  value_type pair_eval(const element_type& a, const element_type& b) const {
    return last_entry_pair_eval(a, b);
  }
  bool value_equal(const value_type& y, const value_type& z) const { return y == z; }
};

/// Plain-text wire format: first line N, then 2^N values in bitmask order,
/// one per line.
template <class T>
std::string dump_set_function(const SetFunction<T>& f) {
  std::ostringstream out;
  out << f.ground_size() << '\n';
  for (std::uint32_t m = 0; m < f.subset_count(); ++m) out << f[m] << '\n';
  return out.str();
}

template <class T>
SetFunction<T> load_set_function(std::string_view text) {
  std::istringstream in{std::string(text)};
  int n = -1;
  if (!(in >> n) || n < 0 || n > 30) {
    throw std::invalid_argument("set function dump: bad ground set size line");
  }
  std::vector<T> table;
  table.reserve(std::size_t{1} << n);
  T v{};
  while (in >> v) table.push_back(v);
  return SetFunction<T>(n, std::move(table));  // size validated by the constructor
}

}  // namespace stampchain
