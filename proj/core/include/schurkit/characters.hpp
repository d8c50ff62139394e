#pragma once

#include <string>
#include <vector>

#include "schurkit/errors.hpp"
#include "schurkit/numeric.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

// A conjugacy class of S_n, identified by its cycle type.
struct ClassPartition {
  Partition cycle_type;
  int n() const { return cycle_type.size(); }
  auto operator<=>(const ClassPartition&) const = default;
};

// z_rho = prod_i i^{m_i} * m_i!; the centralizer order, so the class size is
// n!/z_rho.
Int class_size_normalizer(const Partition& rho);
inline Int class_size_normalizer(const ClassPartition& c) {
  return class_size_normalizer(c.cycle_type);
}
inline Int class_size(const ClassPartition& c) {
  return exact_div(factorial(c.n()), class_size_normalizer(c.cycle_type));
}

// Irreducible character value chi_lambda at the class of cycle type rho,
// by border-strip removal.  Requires |lambda| == |rho|.
Int mn_character(const Partition& lambda, const Partition& rho);
inline Int mn_character(const Partition& lambda, const ClassPartition& c) {
  return mn_character(lambda, c.cycle_type);
}

// dim M_lambda, two independent evaluators.
Int dim_sym_hook(const Partition& lambda);
Int dim_sym_det(const Partition& lambda);
inline Int dim_sym(const Partition& lambda) { return dim_sym_hook(lambda); }

// dim V_lambda(C^n) by the hook-content product; zero when lambda has more
// than n rows.
Int dim_gl(const Partition& lambda, int n);

// Kronecker coefficient g_{lambda,mu,nu}; zero unless all sizes agree.
Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu);

inline constexpr int kDefaultCharacterTableLimit = 14;

// Complete character table of S_n.  Rows and columns run over partitions of n
// in reverse-lexicographic order ([n] first).
class CharacterTable {
 public:
  explicit CharacterTable(int n);

  int n() const { return n_; }
  const std::vector<Partition>& irreps() const { return labels_; }
  const std::vector<Partition>& classes() const { return labels_; }
  const Int& value(const Partition& irrep, const Partition& cls) const;
  const Int& value(int irrep_idx, int class_idx) const {
    return values_[irrep_idx][class_idx];
  }

  // CSV with quoted partition labels; rows = irreps, columns = classes.
  std::string to_csv() const;

 private:
  int n_;
  std::vector<Partition> labels_;
  std::vector<std::vector<Int>> values_;
};

// Builds the full table; n above the limit raises ResourceLimitError.
CharacterTable character_table(int n, int limit = kDefaultCharacterTableLimit);

// Memo controls for the character recursion cache.
void clear_character_cache();

}  // namespace schurkit
