#pragma once

// The constructive correspondence between admissible stamp bases of
// length k and admissible stamp chains of length k+1:
//
//   chain_from_basis:  A_k          -> {1} u (A_k + 1)     range n -> n + 2
//   basis_from_chain:  {b_1..b_k}   -> {b_2 - 1..b_k - 1}  range n -> n - 2
//
// shift_extend is the permissive variant of chain_from_basis: it accepts
// any basis containing 1 and guarantees only range >= n + 2, without the
// chain or exact-range promises.

#include <string>
#include <vector>

#include <stampchain/core.hpp>

namespace stampchain {

/// A transformed set plus a human-readable record of how it was built.
/// The provenance carries no semantic weight; the CLI prints it.
struct ShiftedSet {
  StampSet result;
  std::string provenance;
};

/// {1} u (basis + 1). Requires 1 in basis; the result has length k+1 and
/// range at least range(basis) + 2.
inline ShiftedSet shift_extend(const StampSet& basis) {
  if (!basis.contains(1)) {
    throw std::invalid_argument("shift_extend requires a basis containing 1");
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(basis.length()) + 1);
  out.push_back(1);
  for (std::int64_t v : basis.elements()) out.push_back(v + 1);
  return ShiftedSet{StampSet(std::move(out)), "{1} u (S+1), S = " + basis.to_string()};
}

/// Converts an admissible stamp basis into a stamp chain. The contract is
/// strict: the result is an addition chain, is admissible, and has range
/// exactly range(basis) + 2. Rejects non-admissible input.
inline ShiftedSet chain_from_basis(const StampSet& basis) {
  if (!basis.contains(1)) {
    throw std::invalid_argument("chain_from_basis requires a basis containing 1");
  }
  if (!is_admissible(basis)) {
    throw std::invalid_argument("chain_from_basis requires an admissible basis: {" +
                                basis.to_string() + "} has range " +
                                std::to_string(range(basis).range) + " < largest element " +
                                std::to_string(basis.largest()));
  }
  return shift_extend(basis);
}

/// Inverts chain_from_basis: drops the first element and subtracts 1 from
/// the rest. Requires an admissible stamp chain of length > 1; the result
/// is an admissible basis with range exactly range(chain) - 2.
inline ShiftedSet basis_from_chain(const StampSet& chain) {
  if (chain.length() == 1) {
    throw std::invalid_argument("basis_from_chain requires length > 1 ({1} has no preimage)");
  }
  if (auto check = is_addition_chain(chain); !check.ok) {
    throw std::invalid_argument("basis_from_chain requires an addition chain: element " +
                                std::to_string(check.failing_element) +
                                " is not generated by its prefix");
  }
  if (!is_admissible(chain)) {
    throw std::invalid_argument("basis_from_chain requires an admissible chain: {" +
                                chain.to_string() + "} has range " +
                                std::to_string(range(chain).range) + " < largest element " +
                                std::to_string(chain.largest()));
  }
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(chain.length()) - 1);
  for (int j = 2; j <= chain.length(); ++j) out.push_back(chain.stamp(j) - 1);
  return ShiftedSet{StampSet(std::move(out)),
                    "drop b_1, then (S-1), S = " + chain.to_string()};
}

}  // namespace stampchain
