#pragma once

// The two worked applications wired end to end: cluster-count posterior
// curves via subset convolution, and single-entry matrix powers. Both
// pick the minimal embedded chain for the target and run the plan
// executor; callers can pass an explicit chain instead.

#include <cstdint>
#include <vector>

#include <stampchain/engine.hpp>
#include <stampchain/matrix_entry.hpp>
#include <stampchain/plan.hpp>
#include <stampchain/set_function.hpp>
#include <stampchain/tables.hpp>

namespace stampchain {

/// y_c = f_c(U) for c = 1..n, where f_c is the c-fold subset-convolution
/// power of f, computed with k-1 full convolutions instead of n-1.
template <class T>
std::vector<T> posterior_curve(const SetFunction<T>& f, std::int64_t n, const StampSet& chain,
                               ConvolutionAlgorithm algorithm = ConvolutionAlgorithm::ranked) {
  const MultiplicationPlan plan = compile_plan(chain, n);
  return run_plan(plan, f, SubsetConvMultiplier<T>{algorithm}).outputs;
}

template <class T>
std::vector<T> posterior_curve(const SetFunction<T>& f, std::int64_t n,
                               ConvolutionAlgorithm algorithm = ConvolutionAlgorithm::ranked) {
  return posterior_curve(f, n, minimal_chain_for(n), algorithm);
}

/// (X^i)_{p,q} for i = 1..n with k-1 full matrix products. p, q are
/// 1-based.
template <class T>
std::vector<T> matrix_entry_powers(const Matrix<T>& x, int p, int q, std::int64_t n,
                                   const StampSet& chain) {
  const MultiplicationPlan plan = compile_plan(chain, n);
  return run_plan(plan, x, MatrixEntryMultiplier<T>(x.rows(), p, q)).outputs;
}

template <class T>
std::vector<T> matrix_entry_powers(const Matrix<T>& x, int p, int q, std::int64_t n) {
  return matrix_entry_powers(x, p, q, n, minimal_chain_for(n));
}

}  // namespace stampchain
