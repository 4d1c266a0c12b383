#pragma once

// Compilation of a stamp chain into an executable schedule for a target n:
// phase 1 lists the k-1 multiplication steps that realize every chain
// element, phase 2 assigns every c in [1, n] a zero-cost evaluation
// (project a stored power, or pair-evaluate two of them).

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <stampchain/core.hpp>

namespace stampchain {

/// x^{a_j} = x^{a_h} * x^{a_i}; 1-based chain indices with h <= i < j.
struct Phase1Step {
  int j = 0;
  int h = 0;
  int i = 0;

  friend bool operator==(const Phase1Step&, const Phase1Step&) = default;
};

/// Assignment for one target value c: y_c = u(x^{a_i}) when single
/// (a_i = c), else y_c = v(x^{a_h}, x^{a_i}) with a_h + a_i = c, h <= i.
struct Phase2Entry {
  std::int64_t c = 0;
  bool is_pair = false;
  int h = 0;
  int i = 0;

  friend bool operator==(const Phase2Entry&, const Phase2Entry&) = default;
};

/// A compiled schedule. Plans are deterministic value objects detached
/// from any multiplier, so one plan can drive many executions.
struct MultiplicationPlan {
  StampSet chain;
  std::int64_t n = 0;
  std::vector<Phase1Step> phase1;   ///< one step per j = 2..k, ascending
  std::vector<Phase2Entry> phase2;  ///< one entry per c = 1..n, ascending

  friend bool operator==(const MultiplicationPlan&, const MultiplicationPlan&) = default;
};

struct PlanStats {
  int k = 0;
  std::int64_t n = 0;
  int multiplications = 0;  ///< k - 1
  std::int64_t singles = 0;
  std::int64_t pairs = 0;
  std::int64_t savings_num = 0;  ///< k - 1
  std::int64_t savings_den = 0;  ///< n - 1
  double savings_ratio = 0.0;    ///< 0 when n = 1

  friend bool operator==(const PlanStats&, const PlanStats&) = default;
};

/// Compiles a plan for computing y_1..y_n with chain as the multiplication
/// plan. Requires is_stamp_chain_for(chain, n). Both phases break ties by
/// the lexicographically smallest (a_h, a_i) with a_h <= a_i; phase 2
/// prefers a single stamp over a pair (one projection beats a pair
/// evaluation).
inline MultiplicationPlan compile_plan(const StampSet& chain, std::int64_t n) {
  if (n < 1) throw std::invalid_argument("compile_plan expects n >= 1");
  if (auto check = is_addition_chain(chain); !check.ok) {
    throw std::invalid_argument("not an addition chain: element " +
                                std::to_string(check.failing_element) + " (index " +
                                std::to_string(check.failing_index) +
                                ") is not generated by its prefix");
  }
  if (const auto r = range(chain); r.range < n) {
    throw std::invalid_argument("chain covers only [1, " + std::to_string(r.range) +
                                "]: c = " + std::to_string(r.first_gap) +
                                " has no assignment for target n = " + std::to_string(n));
  }

  MultiplicationPlan plan{chain, n, {}, {}};
  const int k = chain.length();
  plan.phase1.reserve(static_cast<std::size_t>(k) - 1);
  for (int j = 2; j <= k; ++j) {
    // smallest a_h with a_j - a_h also in the prefix
    const auto w = is_generated(chain.prefix(j - 1), chain.stamp(j));
    plan.phase1.push_back(Phase1Step{j, w->h, w->i});
  }

  plan.phase2.reserve(static_cast<std::size_t>(n));
  for (std::int64_t c = 1; c <= n; ++c) {
    const auto w = is_generated(chain, c);
    plan.phase2.push_back(Phase2Entry{c, w->is_pair, w->h, w->i});
  }
  return plan;
}

struct PlanValidation {
  bool ok = true;
  std::vector<std::string> violations;

  explicit operator bool() const { return ok; }
};

/// Re-derives every plan invariant from scratch: phase 1 has exactly one
/// step per j = 2..k referencing earlier indices whose stamps sum to a_j;
/// phase 2 covers each c in [1, n] exactly once with a true equation.
inline PlanValidation validate_plan(const MultiplicationPlan& plan) {
  PlanValidation report;
  auto fail = [&report](std::string msg) {
    report.ok = false;
    report.violations.push_back(std::move(msg));
  };

  const int k = plan.chain.length();
  if (plan.chain.smallest() != 1) fail("chain does not start at 1");
  if (plan.n < 1) fail("target n must be >= 1");

  if (std::ssize(plan.phase1) != k - 1) {
    fail("phase 1 has " + std::to_string(plan.phase1.size()) + " steps, expected k-1 = " +
         std::to_string(k - 1));
  }
  int expected_j = 2;
  for (const Phase1Step& step : plan.phase1) {
    const std::string at = "phase 1 step j=" + std::to_string(step.j);
    if (step.j != expected_j++) {
      fail(at + ": steps must run j = 2..k in order");
      continue;
    }
    if (step.h < 1 || step.i < 1 || step.h > step.i || step.i >= step.j) {
      fail(at + ": step references non-earlier index (h=" + std::to_string(step.h) +
           ", i=" + std::to_string(step.i) + ")");
      continue;
    }
    if (step.j > k) continue;  // length mismatch already reported
    if (plan.chain.stamp(step.h) + plan.chain.stamp(step.i) != plan.chain.stamp(step.j)) {
      fail(at + ": equation mismatch, a_h + a_i != a_j");
    }
  }

  std::vector<bool> covered(plan.n >= 1 ? static_cast<std::size_t>(plan.n) : 0, false);
  for (const Phase2Entry& entry : plan.phase2) {
    const std::string at = "phase 2 entry c=" + std::to_string(entry.c);
    if (entry.c < 1 || entry.c > plan.n) {
      fail(at + ": target outside [1, n]");
      continue;
    }
    if (covered[static_cast<std::size_t>(entry.c) - 1]) {
      fail(at + ": duplicate assignment");
      continue;
    }
    covered[static_cast<std::size_t>(entry.c) - 1] = true;
    if (entry.h < 1 || entry.i < 1 || entry.h > entry.i || entry.i > k) {
      fail(at + ": stamp index out of range");
      continue;
    }
    if (entry.is_pair) {
      if (plan.chain.stamp(entry.h) + plan.chain.stamp(entry.i) != entry.c) {
        fail(at + ": phase 2 equation mismatch, a_h + a_i != c");
      }
    } else {
      if (entry.h != entry.i) {
        fail(at + ": single entry with two distinct indices");
      } else if (plan.chain.stamp(entry.i) != entry.c) {
        fail(at + ": phase 2 equation mismatch, a_i != c");
      }
    }
  }
  for (std::int64_t c = 1; c <= plan.n; ++c) {
    if (!covered[static_cast<std::size_t>(c) - 1]) {
      fail("coverage gap: c=" + std::to_string(c) + " has no phase 2 entry");
    }
  }
  return report;
}

/// Counts for a valid plan; throws on an invalid one.
inline PlanStats plan_stats(const MultiplicationPlan& plan) {
  if (auto v = validate_plan(plan); !v.ok) {
    throw std::invalid_argument("plan_stats requires a valid plan: " + v.violations.front());
  }
  PlanStats stats;
  stats.k = plan.chain.length();
  stats.n = plan.n;
  stats.multiplications = static_cast<int>(plan.phase1.size());
  for (const Phase2Entry& entry : plan.phase2) {
    (entry.is_pair ? stats.pairs : stats.singles) += 1;
  }
  stats.savings_num = stats.multiplications;
  stats.savings_den = plan.n - 1;
  stats.savings_ratio = stats.savings_den > 0
                            ? static_cast<double>(stats.savings_num) /
                                  static_cast<double>(stats.savings_den)
                            : 0.0;
  return stats;
}

}  // namespace stampchain
