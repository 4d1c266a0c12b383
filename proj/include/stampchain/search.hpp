#pragma once

// Exhaustive search for the extremal stamp bases of length k.
//
// Depth-first backtracking over increasing elements with a_1 = 1 (a set
// without 1 has range 0 and is never extremal). A prefix with range r is
// extended only by elements a <= r + 1: placing an element beyond the
// first gap + 1 leaves the gap unrepairable, the finished set ends up
// non-admissible, and a non-admissible basis is never extremal. Every
// prefix in the tree is therefore admissible.
//
// Branch-and-bound cut: an element appended as the t-th stamp generates at
// most t + 1 new integers (itself, its double, and t - 1 cross sums), so
//
//   final range <= |currently generated set| + sum_{t=j+1..k} (t + 1).
//
// Subtrees whose bound falls strictly below the incumbent best range are
// pruned; ties survive, because the search reports ALL extremal bases.
//
// Workers fan out over disjoint prefix subtrees and share only the
// monotonically improving incumbent; results are merged in sorted order,
// so output is independent of the number of workers.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include <stampchain/core.hpp>
#include <stampchain/tables.hpp>

namespace stampchain {

struct SearchBudget {
  int max_k = 24;                            ///< refuse lengths beyond this
  std::optional<std::uint64_t> max_nodes{};  ///< node-count cap, unlimited if absent
  unsigned parallel_width = 0;               ///< subtree workers; 0 = hardware concurrency
};

enum class SearchStatus {
  complete,          ///< the whole tree was enumerated; record is exact
  budget_exhausted,  ///< node cap hit; record holds the best found so far
};

struct SearchOutcome {
  ExtremalRecord record;
  SearchStatus status = SearchStatus::complete;
  std::uint64_t nodes_visited = 0;

  bool complete() const { return status == SearchStatus::complete; }
};

namespace detail {

// Mutable DFS state: coverage bitmap over the generated integers, its
// popcount, the consecutive range, and the chosen elements.
struct SearchState {
  std::vector<std::uint64_t> bits;
  std::vector<std::int64_t> elems;
  std::int64_t popcount = 0;
  std::int64_t range = 0;
};

inline bool test_bit(const std::vector<std::uint64_t>& b, std::int64_t i) {
  return (b[static_cast<std::size_t>(i >> 6)] >> (i & 63)) & 1;
}

// Returns 1 when the bit was newly set.
inline std::int64_t set_bit(std::vector<std::uint64_t>& b, std::int64_t i) {
  auto& word = b[static_cast<std::size_t>(i >> 6)];
  const std::uint64_t mask = std::uint64_t{1} << (i & 63);
  if (word & mask) return 0;
  word |= mask;
  return 1;
}

struct SharedSearch {
  int k = 0;
  std::int64_t window = 0;                  // highest representable integer
  std::vector<std::int64_t> suffix_gain;    // suffix_gain[j] = sum_{t=j+1..k} (t+1)
  std::atomic<std::int64_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
  std::optional<std::uint64_t> max_nodes;

  bool charge(std::uint64_t batch) {
    if (nodes.fetch_add(batch, std::memory_order_relaxed) + batch >
        max_nodes.value_or(UINT64_MAX)) {
      abort.store(true, std::memory_order_relaxed);
    }
    return !abort.load(std::memory_order_relaxed);
  }

  void raise_best(std::int64_t r) {
    std::int64_t cur = best.load(std::memory_order_relaxed);
    while (r > cur && !best.compare_exchange_weak(cur, r, std::memory_order_relaxed)) {
    }
  }
};

struct Candidate {
  std::int64_t range;
  std::vector<std::int64_t> elems;
};

// Appends element a, updating bitmap, popcount and range. The caller
// restores from its snapshot on backtrack.
inline void push_element(SearchState& s, std::int64_t a, std::int64_t window) {
  std::int64_t added = set_bit(s.bits, a);
  if (2 * a <= window) added += set_bit(s.bits, 2 * a);
  for (std::int64_t e : s.elems) {
    if (a + e <= window) added += set_bit(s.bits, a + e);
  }
  s.popcount += added;
  s.elems.push_back(a);
  while (s.range + 1 <= window && test_bit(s.bits, s.range + 1)) ++s.range;
}

class SearchWorker {
public:
  SearchWorker(SharedSearch& shared, std::size_t words)
      : shared_(shared),
        words_(words),
        snapshots_(static_cast<std::size_t>(shared.k + 1) * words) {}

  void run_subtree(SearchState state) {
    dfs(state);
    flush();
  }

  std::vector<Candidate>& candidates() { return candidates_; }

private:
  void dfs(SearchState& s) {
    if (++local_nodes_ >= 1024) flush();
    if (shared_.abort.load(std::memory_order_relaxed)) return;

    const int depth = static_cast<int>(s.elems.size());
    if (depth == shared_.k) {
      shared_.raise_best(s.range);
      if (s.range >= shared_.best.load(std::memory_order_relaxed)) {
        candidates_.push_back(Candidate{s.range, s.elems});
      }
      return;
    }
    if (s.popcount + shared_.suffix_gain[depth] <
        shared_.best.load(std::memory_order_relaxed)) {
      return;
    }

    auto* snap = snapshots_.data() + static_cast<std::size_t>(depth) * words_;
    std::copy(s.bits.begin(), s.bits.end(), snap);
    const std::int64_t snap_pc = s.popcount;
    const std::int64_t snap_r = s.range;

    // Greedy-first (descending) order reaches strong incumbents early.
    for (std::int64_t a = snap_r + 1; a > s.elems.back(); --a) {
      push_element(s, a, shared_.window);
      const std::int64_t child_bound =
          s.popcount + shared_.suffix_gain[static_cast<std::size_t>(depth) + 1];
      if (child_bound >= shared_.best.load(std::memory_order_relaxed)) dfs(s);
      s.elems.pop_back();
      std::copy(snap, snap + words_, s.bits.begin());
      s.popcount = snap_pc;
      s.range = snap_r;
    }
  }

  void flush() {
    if (local_nodes_ > 0) shared_.charge(local_nodes_);
    local_nodes_ = 0;
  }

  SharedSearch& shared_;
  std::size_t words_;
  std::vector<std::uint64_t> snapshots_;
  std::vector<Candidate> candidates_;
  std::uint64_t local_nodes_ = 0;
};

}  // namespace detail

/// Finds n(k) and the complete list of extremal stamp bases of length k.
/// The result is independent of parallel_width; a hit node cap is
/// reported as SearchStatus::budget_exhausted with the best-so-far record.
inline SearchOutcome search_extremal(int k, const SearchBudget& budget = {}) {
  if (k < 1) throw std::invalid_argument("search_extremal expects k >= 1");
  if (k > budget.max_k) {
    throw std::invalid_argument("k=" + std::to_string(k) + " exceeds the budget cap max_k=" +
                                std::to_string(budget.max_k));
  }

  detail::SharedSearch shared;
  shared.k = k;
  shared.max_nodes = budget.max_nodes;
  // Largest integer the coverage walk can reach: the triangular bound on
  // any k-element range, plus one element above it, doubled.
  const std::int64_t range_cap = static_cast<std::int64_t>(k) * (k + 3) / 2;
  shared.window = 2 * (range_cap + 1) + 1;
  shared.suffix_gain.assign(static_cast<std::size_t>(k) + 1, 0);
  for (int j = k - 1; j >= 0; --j) {
    shared.suffix_gain[static_cast<std::size_t>(j)] =
        shared.suffix_gain[static_cast<std::size_t>(j) + 1] + (j + 2);
  }
  const std::size_t words = static_cast<std::size_t>(shared.window / 64 + 1);

  detail::SearchState root;
  root.bits.assign(words, 0);
  root.elems.reserve(static_cast<std::size_t>(k));
  detail::push_element(root, 1, shared.window);

  // Greedy probe (always pick range + 1) seeds the incumbent so pruning
  // bites from the first subtree on.
  {
    detail::SearchState probe = root;
    while (static_cast<int>(probe.elems.size()) < k) {
      detail::push_element(probe, probe.range + 1, shared.window);
    }
    shared.raise_best(probe.range);
  }

  const unsigned width = budget.parallel_width != 0
                             ? budget.parallel_width
                             : std::max(1u, std::thread::hardware_concurrency());

  // Expand the shallowest frontier nodes breadth-first until there are
  // enough disjoint subtrees to keep the workers busy.
  std::vector<detail::SearchState> tasks{root};
  std::uint64_t expanded = 0;
  const std::size_t task_target = width == 1 ? 1 : std::size_t{8} * width;
  while (tasks.size() < task_target) {
    auto shallowest =
        std::min_element(tasks.begin(), tasks.end(), [](const auto& a, const auto& b) {
          return a.elems.size() < b.elems.size();
        });
    if (static_cast<int>(shallowest->elems.size()) >= k - 1) break;
    detail::SearchState parent = std::move(*shallowest);
    tasks.erase(shallowest);
    ++expanded;
    for (std::int64_t a = parent.elems.back() + 1; a <= parent.range + 1; ++a) {
      detail::SearchState child = parent;
      detail::push_element(child, a, shared.window);
      tasks.push_back(std::move(child));
    }
  }
  shared.nodes.store(expanded, std::memory_order_relaxed);

  std::vector<detail::SearchWorker> workers;
  workers.reserve(width);
  for (unsigned w = 0; w < width; ++w) workers.emplace_back(shared, words);

  std::atomic<std::size_t> next_task{0};
  auto drain = [&](detail::SearchWorker& worker) {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1, std::memory_order_relaxed);
      if (t >= tasks.size() || shared.abort.load(std::memory_order_relaxed)) break;
      worker.run_subtree(tasks[t]);
    }
  };

  if (width == 1) {
    drain(workers[0]);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(width);
    for (unsigned w = 0; w < width; ++w) {
      threads.emplace_back([&, w] { drain(workers[w]); });
    }
    for (auto& t : threads) t.join();
  }

  const std::int64_t best = shared.best.load();
  std::vector<StampSet> sets;
  for (auto& worker : workers) {
    for (auto& cand : worker.candidates()) {
      if (cand.range == best) sets.emplace_back(std::move(cand.elems));
    }
  }
  std::sort(sets.begin(), sets.end());

  SearchOutcome outcome;
  outcome.record = ExtremalRecord{k, best, std::move(sets)};
  outcome.status = shared.abort.load() ? SearchStatus::budget_exhausted
                                       : SearchStatus::complete;
  outcome.nodes_visited = shared.nodes.load();
  return outcome;
}

}  // namespace stampchain
