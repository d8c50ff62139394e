#pragma once

#include <optional>
#include <vector>

#include "schurkit/numeric.hpp"
#include "schurkit/vobject.hpp"

namespace schurkit {

// Generators of a polynomial algebra Sym(F): a finite object F in positive
// degrees.  aux_dimension marks the multivariate degree-1 case F = U<1>
// (dim U copies of S_[1]), which admits an exact closed-form decomposition.
struct PolynomialTcaSpec {
  VObject generators;
  std::optional<int> aux_dimension;

  explicit PolynomialTcaSpec(VObject gen,
                             std::optional<int> aux_dim = std::nullopt);

  // Sym(C<1>): the univariate polynomial algebra.
  static PolynomialTcaSpec univariate();
  // Sym(U<1>) with dim U = u.
  static PolynomialTcaSpec multivariate(int u);
  // Sym(C<k>): generated by the degree-k regular representation.
  static PolynomialTcaSpec regular_generated(int k);
};

// A free module A (x) V with an internal-degree shift: the degree-d piece is
// V (x) A_{d + twist}, so twist = -d places the generators in degree d.
struct FreeModuleSpec {
  PolynomialTcaSpec tca;
  VObject generator_object;
  int twist = 0;
};

// Truncated decomposition of Sym(F).  The degree-1-generated case is written
// down directly from the Cauchy decomposition; everything else goes through
// plethysm.
VObject tca_decompose(const PolynomialTcaSpec& spec, int max_degree);
// Plethysm route with no fast paths, for cross-checking.
VObject tca_decompose_generic(const PolynomialTcaSpec& spec, int max_degree);

// Number of perfect directed k-uniform hypermatchings on kn vertices:
// (kn)!/n!.  Equals the dimension of the degree-kn piece of Sym(C<k>).
Int hypermatching_count(int k, int n);

// Generator objects of the minimal resolution of C over Sym(C<1>):
// [S_[], S_[1], S_[1,1], ...].
std::vector<VObject> koszul_generators(int n_terms);

// Dimensions of the internal-degree pieces of (A (x) V)(C^rank),
// d = 0..order.
std::vector<Int> free_module_hilbert(const FreeModuleSpec& spec, int rank,
                                     int order);

// "degree,dimension" rows for a graded dimension sequence.
std::string dimension_sequence_csv(const std::vector<Int>& dims);

}  // namespace schurkit
