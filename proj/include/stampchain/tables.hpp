#pragma once

// Embedded tables of all known extremal stamp bases (k = 1..24) and
// extremal stamp chains (k = 2..25), the derived nbar(k) values, and
// minimal-chain lookup for targets n <= nbar(25) = 214.
//
// The tables are compiled in from the plain-text assets under data/;
// each data line is "k n a_1 ... a_k", sorted by (k, lexicographic set).

#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <stampchain/core.hpp>
#include <stampchain/embedded_tables.hpp>

namespace stampchain {

/// All extremal sets of one length: the unit of the embedded tables and
/// of search output. The sets list is duplicate-free and sorted
/// lexicographically.
struct ExtremalRecord {
  int k = 0;
  std::int64_t range = 0;
  std::vector<StampSet> sets;

  friend bool operator==(const ExtremalRecord&, const ExtremalRecord&) = default;
};

/// Parses table-asset text ("k n a_1 ... a_k" per line; blank lines and
/// lines starting with '#' ignored) into per-k records. Rejects malformed
/// lines, element-count mismatches, inconsistent ranges within one k, and
/// violations of the (k, lexicographic) line order.
inline std::vector<ExtremalRecord> parse_table_asset(std::string_view text) {
  std::vector<ExtremalRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    std::int64_t k = 0, n = 0;
    if (!(fields >> k >> n) || k < 1) {
      throw std::invalid_argument("table asset line " + std::to_string(line_no) +
                                  ": expected 'k n a_1 ... a_k'");
    }
    std::vector<std::int64_t> elems;
    std::int64_t v = 0;
    while (fields >> v) elems.push_back(v);
    if (std::ssize(elems) != k) {
      throw std::invalid_argument("table asset line " + std::to_string(line_no) + ": " +
                                  std::to_string(elems.size()) + " elements, expected " +
                                  std::to_string(k));
    }
    StampSet set(std::move(elems));
    if (!records.empty() && records.back().k == k) {
      ExtremalRecord& rec = records.back();
      if (rec.range != n) {
        throw std::invalid_argument("table asset line " + std::to_string(line_no) +
                                    ": range differs within k=" + std::to_string(k));
      }
      if (!(rec.sets.back() < set)) {
        throw std::invalid_argument("table asset line " + std::to_string(line_no) +
                                    ": lines not in (k, lexicographic) order");
      }
      rec.sets.push_back(std::move(set));
    } else {
      if (!records.empty() && records.back().k >= k) {
        throw std::invalid_argument("table asset line " + std::to_string(line_no) +
                                    ": lines not in (k, lexicographic) order");
      }
      records.push_back(ExtremalRecord{static_cast<int>(k), n, {std::move(set)}});
    }
  }
  return records;
}

/// Renders records in the same format parse_table_asset reads.
inline std::string format_table_asset(const std::vector<ExtremalRecord>& records) {
  std::ostringstream out;
  for (const ExtremalRecord& rec : records) {
    for (const StampSet& set : rec.sets) {
      out << rec.k << ' ' << rec.range << ' ' << set.to_string() << '\n';
    }
  }
  return out.str();
}

/// Raw text of the embedded extremal-basis asset (k = 1..24, 46 rows).
inline std::string_view extremal_bases_asset() { return detail::kExtremalBasesAsset; }

/// Raw text of the embedded extremal-chain asset (k = 2..25, 46 rows).
inline std::string_view extremal_chains_asset() { return detail::kExtremalChainsAsset; }

inline const std::vector<ExtremalRecord>& extremal_basis_table() {
  static const std::vector<ExtremalRecord> table = parse_table_asset(extremal_bases_asset());
  return table;
}

inline const std::vector<ExtremalRecord>& extremal_chain_table() {
  static const std::vector<ExtremalRecord> table = parse_table_asset(extremal_chains_asset());
  return table;
}

namespace detail {
inline const ExtremalRecord& lookup(const std::vector<ExtremalRecord>& table, int k,
                                    const char* what) {
  for (const ExtremalRecord& rec : table) {
    if (rec.k == k) return rec;
  }
  throw std::out_of_range(std::string(what) + " table has no entry for k=" +
                          std::to_string(k) + " (embedded range k=" +
                          std::to_string(table.front().k) + ".." +
                          std::to_string(table.back().k) + ")");
}
}  // namespace detail

/// The complete list of extremal stamp bases of length k, 1 <= k <= 24.
inline const ExtremalRecord& lookup_extremal_basis(int k) {
  return detail::lookup(extremal_basis_table(), k, "extremal basis");
}

/// The complete list of extremal stamp chains of length k, 2 <= k <= 25.
inline const ExtremalRecord& lookup_extremal_chain(int k) {
  return detail::lookup(extremal_chain_table(), k, "extremal chain");
}

/// nbar(k), the maximum range among stamp chains of length k, for
/// 1 <= k <= 25. nbar(k) = n(k-1) + 2 for k >= 2; nbar(1) = 2, attained
/// by the only length-1 chain {1}.
inline std::int64_t nbar(int k) {
  if (k == 1) return 2;
  return lookup_extremal_chain(k).range;
}

/// An extremal stamp chain of the smallest length k with nbar(k) >= n;
/// ties between chains of that length resolve to the lexicographically
/// smallest. Serves n <= nbar(25) = 214 from the embedded tables.
inline StampSet minimal_chain_for(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("minimal_chain_for expects n >= 1");
  if (n <= nbar(1)) return StampSet{1};
  for (const ExtremalRecord& rec : extremal_chain_table()) {
    if (rec.range >= n) return rec.sets.front();
  }
  throw std::out_of_range("n=" + std::to_string(n) + " is beyond the embedded tables (max " +
                          std::to_string(extremal_chain_table().back().range) +
                          "); supply an admissible chain explicitly");
}

}  // namespace stampchain
