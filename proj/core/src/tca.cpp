#include "schurkit/tca.hpp"

#include <algorithm>

#include "schurkit/characters.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/plethysm.hpp"

namespace schurkit {

PolynomialTcaSpec::PolynomialTcaSpec(VObject gen, std::optional<int> aux_dim)
    : generators(std::move(gen)), aux_dimension(aux_dim) {
  if (generators.multiplicity(Partition()) != 0)
    throw ValidationError("polynomial algebra generators must sit in positive degrees");
  if (aux_dimension) {
    VObject expected = scale(simple(Partition({1})), *aux_dimension);
    if (!(generators == expected))
      throw ValidationError("aux_dimension is only meaningful for U<1> generators");
  }
}

PolynomialTcaSpec PolynomialTcaSpec::univariate() { return multivariate(1); }

PolynomialTcaSpec PolynomialTcaSpec::multivariate(int u) {
  if (u < 1) throw ValidationError("dim U must be positive");
  return PolynomialTcaSpec(scale(simple(Partition({1})), u), u);
}

PolynomialTcaSpec PolynomialTcaSpec::regular_generated(int k) {
  if (k < 1) throw ValidationError("generator degree must be positive");
  return PolynomialTcaSpec(regular(k));
}

namespace {

bool degree_one_generated(const PolynomialTcaSpec& spec, int& u) {
  const auto& terms = spec.generators.terms();
  if (terms.size() != 1) return false;
  const auto& [p, mult] = *terms.begin();
  if (p != Partition({1})) return false;
  u = static_cast<int>(mult);
  return true;
}

}  // namespace

VObject tca_decompose(const PolynomialTcaSpec& spec, int max_degree) {
  if (max_degree < 0) throw ValidationError("max_degree must be non-negative");
  int u = 0;
  if (degree_one_generated(spec, u)) {
    // Cauchy decomposition: multiplicity of S_lambda is dim S_lambda(C^u).
    VObject::Terms terms;
    for (int d = 0; d <= max_degree; ++d)
      for (const Partition& lambda : partitions_of(d)) {
        if (lambda.length() > u) continue;
        terms.emplace(lambda, dim_gl(lambda, u));
      }
    return VObject(std::move(terms), max_degree);
  }
  return tca_decompose_generic(spec, max_degree);
}

VObject tca_decompose_generic(const PolynomialTcaSpec& spec, int max_degree) {
  if (max_degree < 0) throw ValidationError("max_degree must be non-negative");
  // Sym(F) = sum_n Sym^n(F); generators in positive degree push Sym^n into
  // degrees >= n, so n ranges over 0..max_degree.
  VObject::Terms sym_terms;
  sym_terms.emplace(Partition(), 1);
  for (int n = 1; n <= max_degree; ++n) sym_terms.emplace(Partition({n}), 1);
  return compose(VObject(std::move(sym_terms)), spec.generators, max_degree);
}

Int hypermatching_count(int k, int n) {
  if (k < 1) throw ValidationError("hyperedge arity must be positive");
  if (n < 0) throw ValidationError("edge count must be non-negative");
  return exact_div(factorial(k * n), factorial(n));
}

std::vector<VObject> koszul_generators(int n_terms) {
  if (n_terms < 1) throw ValidationError("need at least one term");
  std::vector<VObject> out;
  for (int i = 0; i < n_terms; ++i)
    out.push_back(simple(Partition(std::vector<int>(i, 1))));
  return out;
}

std::string dimension_sequence_csv(const std::vector<Int>& dims) {
  std::string out = "degree,dimension\n";
  for (size_t d = 0; d < dims.size(); ++d)
    out += std::to_string(d) + "," + dims[d].str() + "\n";
  return out;
}

std::vector<Int> free_module_hilbert(const FreeModuleSpec& spec, int rank,
                                     int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
  if (rank < 0) throw ValidationError("rank must be non-negative");
  Int gen_dim = evaluate_at_rank(spec.generator_object, rank);
  std::vector<Int> out(order + 1, Int(0));
  if (gen_dim == 0) return out;
  int max_a_degree = order + std::max(spec.twist, 0);
  VObject a = tca_decompose(spec.tca, max_a_degree);
  for (int d = 0; d <= order; ++d) {
    int a_degree = d + spec.twist;
    if (a_degree < 0) continue;
    Int a_dim = evaluate_at_rank(a.degree_piece(a_degree), rank);
    out[d] = gen_dim * a_dim;
  }
  return out;
}

}  // namespace schurkit
