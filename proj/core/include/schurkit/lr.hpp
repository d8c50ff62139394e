#pragma once

#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include "schurkit/numeric.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

// Littlewood-Richardson query c^nu_{lambda,mu}.  Any inputs are answerable;
// the coefficient is zero when sizes or containments fail.
struct LRQuery {
  Partition nu;
  Partition lambda;
  Partition mu;
};

// Non-negative integer combination of partitions.
using Decomposition = std::map<Partition, Int, ByDegreeRevLex>;

// One Littlewood-Richardson filling of nu/lambda with content mu.
// rows[i] holds the values of the skew cells in row i+1, left to right.
struct LRTableau {
  Partition nu;
  Partition lambda;
  std::vector<std::vector<int>> rows;
  // Entries read right to left in each row, top row first.
  std::vector<int> reading_word() const;
  std::string reading_word_str() const;
};

// Number of semistandard lattice-word fillings of nu/lambda with content mu.
// Results are memoized in a bounded, thread-safe cache.
Int lr_coefficient(const LRQuery& q);
Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu);

// Enumeration mode: the actual fillings, in a fixed deterministic order.
std::vector<LRTableau> lr_tableaux(const LRQuery& q);

// Decomposition of the product: nu -> c^nu_{lambda,mu} over all |nu| = |lambda|+|mu|.
// Uses the Pieri fast path when one factor is a single row or column.
Decomposition tensor_expand(const Partition& lambda, const Partition& mu);
// Reference route via layered strip insertion; no fast paths, no cache.
Decomposition tensor_expand_generic(const Partition& lambda, const Partition& mu);

// Expansion of the skew object outer/inner: mu -> c^outer_{inner,mu}.
Decomposition skew_expand(const SkewShape& s);

// Restriction multiplicities: (lambda, mu) -> c^nu_{lambda,mu} with
// |lambda| = n, |mu| = m and n + m = |nu|.
using BranchDecomposition = std::map<std::pair<Partition, Partition>, Int>;
BranchDecomposition restrict_branch(const Partition& nu, int n, int m);
// All splits at once.
BranchDecomposition restrict_branch_all(const Partition& nu);

// c^{N nu}_{N lambda, N mu}.
Int stretched_coefficient(const LRQuery& q, int N);

// Memoization cache controls (default capacity 1e6 entries, LRU eviction).
void set_lr_cache_capacity(std::size_t entries);
void clear_lr_cache();
std::size_t lr_cache_size();

}  // namespace schurkit
