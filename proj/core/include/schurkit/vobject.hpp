#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schurkit/lr.hpp"
#include "schurkit/numeric.hpp"
#include "schurkit/partition.hpp"

namespace schurkit {

// A formal non-negative integer combination of simple objects S_lambda,
// graded by |lambda|.  truncation_degree, when present, marks the object as
// the cut-off of an infinite object: terms above it are unknown, not zero.
class VObject {
 public:
  using Terms = std::map<Partition, Int, ByDegreeRevLex>;

  VObject() = default;
  explicit VObject(Terms terms, std::optional<int> truncation = std::nullopt);

  const Terms& terms() const { return terms_; }
  std::optional<int> truncation_degree() const { return truncation_; }
  bool empty() const { return terms_.empty(); }

  Int multiplicity(const Partition& p) const;
  // Adds (or removes, when the sum hits zero) a term; mult must stay >= 0.
  void add(const Partition& p, const Int& mult);

  // Restriction to a single degree / dimension of a degree piece.
  VObject degree_piece(int d) const;
  Int dimension_at_degree(int d) const;
  int min_degree() const;  // 0 for the zero object
  int max_degree() const;

  bool operator==(const VObject& other) const { return terms_ == other.terms_; }

  std::string str() const;
  std::string to_json() const;
  static VObject from_json(const std::string& text);

 private:
  Terms terms_;
  std::optional<int> truncation_;
};

std::ostream& operator<<(std::ostream& os, const VObject& v);

// Signed combination of simples: the Grothendieck class used for Euler
// characteristics.
class VirtualVObject {
 public:
  using Terms = std::map<Partition, Int, ByDegreeRevLex>;

  VirtualVObject() = default;
  explicit VirtualVObject(Terms terms);
  VirtualVObject(const VObject& v);  // NOLINT: intentional promotion

  const Terms& terms() const { return terms_; }
  void add(const Partition& p, const Int& mult);
  bool is_zero() const { return terms_.empty(); }

  VirtualVObject& operator+=(const VirtualVObject& other);
  VirtualVObject& operator-=(const VirtualVObject& other);
  friend VirtualVObject operator+(VirtualVObject a, const VirtualVObject& b) {
    return a += b;
  }
  friend VirtualVObject operator-(VirtualVObject a, const VirtualVObject& b) {
    return a -= b;
  }
  bool operator==(const VirtualVObject&) const = default;

  std::string str() const;

 private:
  Terms terms_;
};

VirtualVObject tensor(const VirtualVObject& a, const VirtualVObject& b);

// Combination of external products S_mu (x) S_nu.
class BiVObject {
 public:
  using Key = std::pair<Partition, Partition>;
  struct KeyLess {
    bool operator()(const Key& a, const Key& b) const {
      ByDegreeRevLex less;
      if (a.first != b.first) return less(a.first, b.first);
      return less(a.second, b.second);
    }
  };
  using Terms = std::map<Key, Int, KeyLess>;

  BiVObject() = default;
  explicit BiVObject(Terms terms);

  const Terms& terms() const { return terms_; }
  Int multiplicity(const Partition& left, const Partition& right) const;
  void add(const Partition& left, const Partition& right, const Int& mult);
  bool operator==(const BiVObject&) const = default;

  std::string str() const;
  std::string to_json() const;

 private:
  Terms terms_;
};

// --- constructors ----------------------------------------------------------

VObject simple(const Partition& p);
// C<n>: the regular representation of S_n placed in degree n.
VObject regular(int n);

// --- additive structure ----------------------------------------------------

VObject add(const VObject& a, const VObject& b);
VObject scale(const VObject& v, const Int& c);

// --- tensor structure ------------------------------------------------------

// Graded (induction) tensor product; multiplicities via Littlewood-Richardson.
VObject tensor(const VObject& a, const VObject& b);
// Degreewise (pointwise) tensor product; multiplicities via Kronecker.
VObject pointwise_tensor(const VObject& a, const VObject& b);

// --- comodule structure ----------------------------------------------------

BiVObject coaddition(const VObject& v);
BiVObject comultiplication(const VObject& v);

// --- involutions -----------------------------------------------------------

// S_lambda -> S_{lambda^t} termwise.
VObject transpose_object(const VObject& v);
// Identity on isomorphism classes of graded-finite objects; exposed for API
// completeness.
VObject dual(const VObject& v);

// --- derivatives -----------------------------------------------------------

// D S_lambda = sum of corner removals; lowers degree by one.
VObject schur_derivative(const VObject& v);
// D_nu S_lambda = sum_mu c^lambda_{mu,nu} S_mu (the skewing operator).
VObject higher_derivative(const Partition& nu, const VObject& v);

// --- evaluation and bounds -------------------------------------------------

// Dimension of the evaluation at C^n: sum of mult * dim V_lambda(C^n).
Int evaluate_at_rank(const VObject& v, int n);
// Maximum number of rows over the support (0 for the zero object).
int ell(const VObject& v);
// Kills the simples with more than n rows.
VObject truncate_rows(const VObject& v, int n);
// Drops all terms of degree > d and records the truncation.
VObject truncate_degree(const VObject& v, int d);

// --- series ----------------------------------------------------------------

// Coefficients of t^n, n = 0..order: dim(V_n)/n!.
std::vector<Rational> hilbert_series(const VObject& v, int order);
// Coefficient of t^rho: trace(c_rho | V) / rho!, for |rho| <= order.
using EnhancedSeries = std::map<Partition, Rational, ByDegreeRevLex>;
EnhancedSeries enhanced_hilbert(const VObject& v, int order);
// Product of enhanced series truncated at total degree `order`
// (monomials multiply by t^mu * t^nu = t^{mu union nu}).
EnhancedSeries enhanced_series_product(const EnhancedSeries& a,
                                       const EnhancedSeries& b, int order);

}  // namespace schurkit
