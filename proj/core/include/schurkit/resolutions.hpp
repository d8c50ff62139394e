#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/numeric.hpp"
#include "schurkit/partition.hpp"
#include "schurkit/ratmat.hpp"

namespace schurkit {

// Strictly increasing degrees d_0 < d_1 < ... < d_n, normalized to d_0 = 0.
class DegreeSequence {
 public:
  explicit DegreeSequence(std::vector<int> degrees);
  const std::vector<int>& degrees() const { return degrees_; }
  int steps() const { return static_cast<int>(degrees_.size()) - 1; }
  bool operator==(const DegreeSequence&) const = default;

 private:
  std::vector<int> degrees_;
};

// The equivariant pure-resolution data built from a pair (alpha, beta):
//   e_1 = beta_1 - alpha_1,  e_i = alpha_{i-1} - alpha_i + 1  (i >= 2),
//   d_i = e_1 + ... + e_i, and shapes[i] = alpha with its first i rows grown
//   by e_1..e_i.
struct PureResolutionPlan {
  Partition alpha;
  Partition beta;
  int n_rows = 0;
  std::vector<int> e;       // e_1..e_n
  std::vector<int> d;       // d_0..d_n
  std::vector<Partition> shapes;  // shapes[0..n]
};

// Per-step certification: the connecting multiplicity is exactly one and the
// two-step coefficient vanishes, so the maps exist, are unique up to scalar,
// and compose to zero.
struct PlanValidity {
  struct Step {
    int index = 0;
    bool horizontal_strip = false;
    bool unique_map = false;   // c^{shapes[i]}_{shapes[i-1], [e_i]} == 1
    bool two_step_zero = true; // c^{shapes[i]}_{shapes[i-2], [d_i - d_{i-2}]} == 0
  };
  std::vector<Step> steps;
  bool ok = true;
  std::string message;  // first failure, if any
};

PureResolutionPlan efw_plan(const Partition& alpha, const Partition& beta,
                            int n_rows);
// Inverse construction: the unique plan with alpha_{n_rows} = 0 realizing the
// degree sequence.
PureResolutionPlan plan_from_degree_sequence(const DegreeSequence& d);
DegreeSequence degree_sequence(const PureResolutionPlan& p);

PlanValidity validate_plan(const PureResolutionPlan& p);

// (d_i, dim S_{shapes[i]}(C^rank)) for i = 0..n.
using BettiTable = std::vector<std::pair<int, Int>>;
BettiTable plan_betti_table(const PureResolutionPlan& p, int rank);

std::string betti_table_text(const BettiTable& t);
std::string betti_table_csv(const BettiTable& t);

// A chain of free modules over a fixed polynomial ring, split into internal
// degrees: in degree D the spot-i piece has dimension dims(i, D) and the
// differential matrices map spot i to spot i-1.
class GradedComplex {
 public:
  struct DegreeSlice {
    std::vector<int> dims;                  // dims[i], i = 0..max_index
    std::vector<RationalMatrix> diffs;      // diffs[i]: spot i+1 -> spot i
  };

  GradedComplex(int rank, int max_index) : rank_(rank), max_index_(max_index) {}

  int rank() const { return rank_; }
  int max_index() const { return max_index_; }
  const std::map<int, DegreeSlice>& slices() const { return slices_; }
  DegreeSlice& slice(int internal_degree) { return slices_[internal_degree]; }
  const DegreeSlice* find_slice(int internal_degree) const;

  int dim(int spot, int internal_degree) const;
  const RationalMatrix* differential(int from_spot, int internal_degree) const;

 private:
  int rank_ = 0;
  int max_index_ = 0;
  std::map<int, DegreeSlice> slices_;
};

// Koszul complex of Sym(C^rank): in internal degree D the spot-i term is
// Sym^{D-i}(C^rank) (x) Wedge^i(C^rank), with the contraction differential.
// Bases: monomials ordered lexicographically, wedge index sets
// colexicographically.
GradedComplex koszul_complex(int rank, int max_internal_degree);

// dim H_i per (spot, internal degree); spot 0 included.  Verifies d^2 = 0
// first and throws IntegrityError on failure.
struct HomologyReport {
  // (spot, internal degree) -> dim H
  std::map<std::pair<int, int>, int> nonzero;
  bool exact_in_positive_spots() const;
  std::string to_json() const;
  std::string summary() const;
};
HomologyReport exactness_report(const GradedComplex& c);

}  // namespace schurkit
