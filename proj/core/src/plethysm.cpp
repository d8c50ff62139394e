#include "schurkit/plethysm.hpp"

#include "schurkit/characters.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

PowerSumFunc schur_to_power_sums(const Partition& lambda) {
  PowerSumFunc out;
  for (const Partition& rho : partitions_of(lambda.size())) {
    Int chi = mn_character(lambda, rho);
    if (chi != 0) out[rho] = Rational(chi, class_size_normalizer(rho));
  }
  return out;
}

PowerSumFunc vobject_to_power_sums(const VObject& v) {
  PowerSumFunc out;
  for (const auto& [lambda, mult] : v.terms())
    for (const auto& [rho, coeff] : schur_to_power_sums(lambda)) {
      Rational& slot = out[rho];
      slot += Rational(mult) * coeff;
      if (slot == 0) out.erase(rho);
    }
  return out;
}

PowerSumFunc power_substitute(const PowerSumFunc& f, int k) {
  PowerSumFunc out;
  for (const auto& [rho, coeff] : f) out[scale(rho, k)] = coeff;
  return out;
}

PowerSumFunc power_multiply(const PowerSumFunc& a, const PowerSumFunc& b,
                            int max_degree) {
  PowerSumFunc out;
  for (const auto& [ra, ca] : a)
    for (const auto& [rb, cb] : b) {
      if (max_degree >= 0 && ra.size() + rb.size() > max_degree) continue;
      Partition key = union_sorted(ra, rb);
      Rational& slot = out[key];
      slot += ca * cb;
      if (slot == 0) out.erase(key);
    }
  return out;
}

VObject power_sums_to_vobject(const PowerSumFunc& f, int max_degree) {
  VObject::Terms terms;
  // <p_rho, s_lambda> = chi_lambda(rho), so the multiplicity of S_lambda is
  // sum_rho coeff(rho) chi_lambda(rho) over rho of the same size.
  std::map<int, PowerSumFunc> by_degree;
  for (const auto& [rho, coeff] : f) {
    if (rho.size() > max_degree) continue;
    by_degree[rho.size()][rho] = coeff;
  }
  for (const auto& [degree, piece] : by_degree) {
    for (const Partition& lambda : partitions_of(degree)) {
      Rational mult = 0;
      for (const auto& [rho, coeff] : piece)
        mult += coeff * Rational(mn_character(lambda, rho));
      if (mult == 0) continue;
      if (denominator(mult) != 1 || mult < 0)
        throw IntegrityError("non-integral or negative multiplicity " +
                             mult.str() + " for " + lambda.str());
      terms.emplace(lambda, numerator(mult));
    }
  }
  return VObject(std::move(terms), max_degree);
}

VObject compose(const VObject& outer, const VObject& inner, int max_degree,
                bool allow_degree_zero) {
  if (max_degree < 0) throw ValidationError("max_degree must be non-negative");
  if (!allow_degree_zero && inner.multiplicity(Partition()) != 0)
    throw ValidationError(
        "inner object has a degree-0 term; composition against it is only "
        "meaningful for finite outer objects (pass allow_degree_zero)");
  std::optional<int> cutoff = inner.truncation_degree();
  int effective = cutoff ? std::min(max_degree, *cutoff) : max_degree;

  PowerSumFunc v = vobject_to_power_sums(inner);
  // Substituted copies p_k[v] are reused across outer terms.
  std::map<int, PowerSumFunc> substituted;
  auto sub = [&](int k) -> const PowerSumFunc& {
    auto it = substituted.find(k);
    if (it == substituted.end())
      it = substituted.emplace(k, power_substitute(v, k)).first;
    return it->second;
  };

  PowerSumFunc acc;  // empty
  bool inner_positive = inner.multiplicity(Partition()) == 0;
  for (const auto& [mu, w_mult] : outer.terms()) {
    // A positive-degree inner object pushes S_mu o V into degrees >= |mu|.
    if (inner_positive && mu.size() > effective) continue;
    for (const auto& [sigma, coeff] : schur_to_power_sums(mu)) {
      PowerSumFunc prod;
      prod[Partition()] = coeff;
      for (int i = 1; i <= sigma.length(); ++i)
        prod = power_multiply(prod, sub(sigma.part(i)), effective);
      for (const auto& [rho, c] : prod) {
        Rational& slot = acc[rho];
        slot += Rational(w_mult) * c;
        if (slot == 0) acc.erase(rho);
      }
    }
  }
  return power_sums_to_vobject(acc, effective);
}

VObject compose_transpose(const VObject& outer, const VObject& inner,
                          int max_degree) {
  bool has_even = false, has_odd = false;
  for (const auto& [p, mult] : inner.terms())
    (p.size() % 2 == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd)
    throw ValidationError(
        "transpose of a composition needs an inner object concentrated in "
        "degrees of a single parity");
  VObject inner_t = transpose_object(inner);
  if (has_odd) return compose(transpose_object(outer), inner_t, max_degree);
  return compose(outer, inner_t, max_degree);
}

VObject matchings(int n) {
  if (n < 0) throw ValidationError("matchings index must be non-negative");
  VObject::Terms terms;
  for (const Partition& lambda : partitions_of(n)) terms.emplace(scale(lambda, 2), 1);
  return VObject(std::move(terms));
}

}  // namespace schurkit
