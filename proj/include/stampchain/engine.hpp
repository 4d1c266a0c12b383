#pragma once

// Executes a MultiplicationPlan over any client-supplied associative
// operation. The client provides a Multiplier: the product itself, a
// projector u mapping a power to the value actually wanted, and a pair
// evaluator v with v(a, b) = u(ab) that skips the product. The engine
// counts every call so the cheap/expensive cost split is observable
// rather than assumed.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <stampchain/plan.hpp>

namespace stampchain {

/// Behavioral contract for the client operation. element_type carries the
/// powers x^i, value_type the outputs y_i. value_equal is the multiplier's
/// own equality notion (exact for discrete arithmetic, tolerance for
/// floating point) used by consistency checks and output comparison.
template <class M>
concept Multiplier = requires(const M& m, const typename M::element_type& a,
                              const typename M::element_type& b,
                              const typename M::value_type& y) {
  { m.multiply(a, b) } -> std::same_as<typename M::element_type>;
  { m.project(a) } -> std::same_as<typename M::value_type>;
  { m.pair_eval(a, b) } -> std::same_as<typename M::value_type>;
  { m.value_equal(y, y) } -> std::convertible_to<bool>;
};

template <class Y>
struct ExecutionTrace {
  std::vector<Y> outputs;  ///< outputs[c-1] = y_c
  std::uint64_t multiply_count = 0;
  std::uint64_t project_count = 0;
  std::uint64_t pair_eval_count = 0;
  std::vector<std::int64_t> stored_powers;  ///< exponents materialized in full
};

/// Runs Algorithm A: phase 1 materializes the chain's powers with exactly
/// k-1 multiplications, phase 2 obtains every y_c by zero-cost u/v calls.
/// Multiplier failures propagate with the failing step attached.
template <Multiplier M>
ExecutionTrace<typename M::value_type> run_plan(const MultiplicationPlan& plan,
                                                const typename M::element_type& x,
                                                const M& multiplier) {
  if (auto v = validate_plan(plan); !v.ok) {
    throw std::invalid_argument("run_plan requires a valid plan: " + v.violations.front());
  }

  ExecutionTrace<typename M::value_type> trace;
  std::vector<typename M::element_type> powers;
  powers.reserve(static_cast<std::size_t>(plan.chain.length()));
  powers.push_back(x);  // x^{a_1} = x^1
  for (const Phase1Step& step : plan.phase1) {
    try {
      powers.push_back(multiplier.multiply(powers[static_cast<std::size_t>(step.h) - 1],
                                           powers[static_cast<std::size_t>(step.i) - 1]));
    } catch (...) {
      std::throw_with_nested(std::runtime_error(
          "phase 1 step j=" + std::to_string(step.j) + " (x^" +
          std::to_string(plan.chain.stamp(step.j)) + ") failed"));
    }
    ++trace.multiply_count;
  }

  trace.outputs.reserve(static_cast<std::size_t>(plan.n));
  for (const Phase2Entry& entry : plan.phase2) {
    try {
      if (entry.is_pair) {
        trace.outputs.push_back(
            multiplier.pair_eval(powers[static_cast<std::size_t>(entry.h) - 1],
                                 powers[static_cast<std::size_t>(entry.i) - 1]));
        ++trace.pair_eval_count;
      } else {
        trace.outputs.push_back(multiplier.project(powers[static_cast<std::size_t>(entry.i) - 1]));
        ++trace.project_count;
      }
    } catch (...) {
      std::throw_with_nested(
          std::runtime_error("phase 2 entry c=" + std::to_string(entry.c) + " failed"));
    }
  }

  trace.stored_powers.assign(plan.chain.elements().begin(), plan.chain.elements().end());
  return trace;
}

/// The n-1 multiplication reference: computes x^1..x^n sequentially and
/// projects each one.
template <Multiplier M>
ExecutionTrace<typename M::value_type> run_straightforward(std::int64_t n,
                                                           const typename M::element_type& x,
                                                           const M& multiplier) {
  if (n < 1) throw std::invalid_argument("run_straightforward expects n >= 1");

  ExecutionTrace<typename M::value_type> trace;
  trace.outputs.reserve(static_cast<std::size_t>(n));
  trace.stored_powers.reserve(static_cast<std::size_t>(n));
  typename M::element_type power = x;
  for (std::int64_t c = 1; c <= n; ++c) {
    if (c > 1) {
      try {
        power = multiplier.multiply(power, x);
      } catch (...) {
        std::throw_with_nested(
            std::runtime_error("straightforward step x^" + std::to_string(c) + " failed"));
      }
      ++trace.multiply_count;
    }
    trace.outputs.push_back(multiplier.project(power));
    ++trace.project_count;
    trace.stored_powers.push_back(c);
  }
  return trace;
}

struct CheckReport {
  bool ok = true;
  std::optional<std::size_t> first_failure{};  ///< sample index, 0-based

  explicit operator bool() const { return ok; }
};

/// Verifies v(a, b) = u(ab) on the given samples under the multiplier's
/// own equality notion. The existence of such a v is the key assumption
/// behind plan execution; this makes it checkable instead of axiomatic.
template <Multiplier M>
CheckReport check_v_consistency(
    const M& multiplier,
    std::span<const std::pair<typename M::element_type, typename M::element_type>> samples) {
  for (std::size_t t = 0; t < samples.size(); ++t) {
    const auto& [a, b] = samples[t];
    if (!multiplier.value_equal(multiplier.pair_eval(a, b),
                                multiplier.project(multiplier.multiply(a, b)))) {
      return CheckReport{false, t};
    }
  }
  return CheckReport{true, std::nullopt};
}

/// Sanity probe for the associativity the plan executor silently assumes:
/// (ab)c = a(bc) on the given triples. Only for element types with exact
/// comparison.
template <Multiplier M>
  requires std::equality_comparable<typename M::element_type>
CheckReport check_associativity(const M& multiplier,
                                std::span<const std::array<typename M::element_type, 3>> triples) {
  for (std::size_t t = 0; t < triples.size(); ++t) {
    const auto& [a, b, c] = triples[t];
    if (multiplier.multiply(multiplier.multiply(a, b), c) !=
        multiplier.multiply(a, multiplier.multiply(b, c))) {
      return CheckReport{false, t};
    }
  }
  return CheckReport{true, std::nullopt};
}

}  // namespace stampchain
