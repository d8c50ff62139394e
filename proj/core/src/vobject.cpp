#include "schurkit/vobject.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "json.hpp"
#include "schurkit/characters.hpp"
#include "schurkit/errors.hpp"

namespace schurkit {

namespace {

using nlohmann::json;

std::optional<int> combined_truncation(const std::optional<int>& a,
                                       const std::optional<int>& b) {
  if (!a) return b;
  if (!b) return a;
  return std::min(*a, *b);
}

json terms_to_json_array(const VObject::Terms& terms) {
  json arr = json::array();
  for (const auto& [p, mult] : terms) {
    json entry;
    entry["partition"] = p.parts();
    entry["multiplicity"] = mult.str();
    arr.push_back(entry);
  }
  return arr;
}

}  // namespace

// --- VObject ----------------------------------------------------------------

VObject::VObject(Terms terms, std::optional<int> truncation)
    : terms_(std::move(terms)), truncation_(truncation) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0) {
      it = terms_.erase(it);
      continue;
    }
    if (it->second < 0)
      throw ValidationError("negative multiplicity for " + it->first.str());
    if (truncation_ && it->first.size() > *truncation_)
      throw ValidationError("term " + it->first.str() +
                            " lies above the truncation degree " +
                            std::to_string(*truncation_));
    ++it;
  }
}

Int VObject::multiplicity(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? Int(0) : it->second;
}

void VObject::add(const Partition& p, const Int& mult) {
  if (truncation_ && p.size() > *truncation_) return;  // above the cut-off
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (mult == 0) return;
    if (mult < 0) throw ValidationError("negative multiplicity for " + p.str());
    terms_.emplace(p, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) {
    terms_.erase(it);
  } else if (it->second < 0) {
    throw ValidationError("negative multiplicity for " + p.str());
  }
}

VObject VObject::degree_piece(int d) const {
  Terms out;
  for (const auto& [p, mult] : terms_)
    if (p.size() == d) out.emplace(p, mult);
  return VObject(std::move(out), truncation_);
}

Int VObject::dimension_at_degree(int d) const {
  Int total = 0;
  for (const auto& [p, mult] : terms_)
    if (p.size() == d) total += mult * dim_sym(p);
  return total;
}

int VObject::min_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.size();
}

int VObject::max_degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first.size();
}

std::string VObject::str() const {
  std::string out;
  for (const auto& [p, mult] : terms_) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += mult.str() + "*";
    out += "S" + p.str();
  }
  if (out.empty()) out = "0";
  if (truncation_) out += " (truncated at degree " + std::to_string(*truncation_) + ")";
  return out;
}

std::string VObject::to_json() const {
  json j;
  j["truncation_degree"] = truncation_ ? json(*truncation_) : json(nullptr);
  j["terms"] = terms_to_json_array(terms_);
  return j.dump();
}

VObject VObject::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ValidationError(std::string("bad object JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    throw ValidationError("object JSON needs a 'terms' array");
  Terms terms;
  for (const auto& entry : j["terms"]) {
    if (!entry.contains("partition") || !entry.contains("multiplicity"))
      throw ValidationError("each term needs 'partition' and 'multiplicity'");
    std::vector<int> parts;
    Int mult;
    try {
      parts = entry["partition"].get<std::vector<int>>();
      if (entry["multiplicity"].is_string())
        mult = Int(entry["multiplicity"].get<std::string>());
      else
        mult = Int(entry["multiplicity"].get<long long>());
    } catch (const std::exception& e) {
      throw ValidationError(std::string("bad term in object JSON: ") + e.what());
    }
    terms[Partition(std::move(parts))] += mult;
  }
  std::optional<int> trunc;
  if (j.contains("truncation_degree") && !j["truncation_degree"].is_null())
    trunc = j["truncation_degree"].get<int>();
  return VObject(std::move(terms), trunc);
}

std::ostream& operator<<(std::ostream& os, const VObject& v) {
  return os << v.str();
}

// --- VirtualVObject ---------------------------------------------------------

VirtualVObject::VirtualVObject(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

VirtualVObject::VirtualVObject(const VObject& v) {
  for (const auto& [p, mult] : v.terms()) terms_.emplace(p, mult);
}

void VirtualVObject::add(const Partition& p, const Int& mult) {
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    if (mult != 0) terms_.emplace(p, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

VirtualVObject& VirtualVObject::operator+=(const VirtualVObject& other) {
  for (const auto& [p, mult] : other.terms_) add(p, mult);
  return *this;
}

VirtualVObject& VirtualVObject::operator-=(const VirtualVObject& other) {
  for (const auto& [p, mult] : other.terms_) add(p, -mult);
  return *this;
}

std::string VirtualVObject::str() const {
  std::string out;
  for (const auto& [p, mult] : terms_) {
    if (!out.empty()) out += " + ";
    out += mult.str() + "*S" + p.str();
  }
  return out.empty() ? "0" : out;
}

VirtualVObject tensor(const VirtualVObject& a, const VirtualVObject& b) {
  VirtualVObject out;
  for (const auto& [la, ma] : a.terms())
    for (const auto& [lb, mb] : b.terms())
      for (const auto& [nu, c] : tensor_expand(la, lb)) out.add(nu, ma * mb * c);
  return out;
}

// --- BiVObject ---------------------------------------------------------------

BiVObject::BiVObject(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second == 0 ? terms_.erase(it) : std::next(it);
}

Int BiVObject::multiplicity(const Partition& left, const Partition& right) const {
  auto it = terms_.find({left, right});
  return it == terms_.end() ? Int(0) : it->second;
}

void BiVObject::add(const Partition& left, const Partition& right, const Int& mult) {
  if (mult == 0) return;
  auto it = terms_.find({left, right});
  if (it == terms_.end()) {
    terms_.emplace(Key{left, right}, mult);
    return;
  }
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

std::string BiVObject::str() const {
  std::string out;
  for (const auto& [key, mult] : terms_) {
    if (!out.empty()) out += " + ";
    if (mult != 1) out += mult.str() + "*";
    out += "S" + key.first.str() + "(x)S" + key.second.str();
  }
  return out.empty() ? "0" : out;
}

std::string BiVObject::to_json() const {
  json arr = json::array();
  for (const auto& [key, mult] : terms_) {
    json entry;
    entry["left"] = key.first.parts();
    entry["right"] = key.second.parts();
    entry["multiplicity"] = mult.str();
    arr.push_back(entry);
  }
  json j;
  j["terms"] = arr;
  return j.dump();
}

// --- constructors ------------------------------------------------------------

VObject simple(const Partition& p) {
  VObject::Terms terms;
  terms.emplace(p, 1);
  return VObject(std::move(terms));
}

VObject regular(int n) {
  if (n < 0) throw ValidationError("degree must be non-negative");
  VObject::Terms terms;
  for (const Partition& p : partitions_of(n)) terms.emplace(p, dim_sym(p));
  return VObject(std::move(terms));
}

// --- additive / tensor structure ---------------------------------------------

VObject add(const VObject& a, const VObject& b) {
  VObject out(VObject::Terms{},
              combined_truncation(a.truncation_degree(), b.truncation_degree()));
  for (const auto& [p, mult] : a.terms()) out.add(p, mult);
  for (const auto& [p, mult] : b.terms()) out.add(p, mult);
  return out;
}

VObject scale(const VObject& v, const Int& c) {
  if (c < 0) throw ValidationError("scalar must be non-negative");
  VObject out(VObject::Terms{}, v.truncation_degree());
  if (c == 0) return out;
  for (const auto& [p, mult] : v.terms()) out.add(p, mult * c);
  return out;
}

VObject tensor(const VObject& a, const VObject& b) {
  VObject out(VObject::Terms{},
              combined_truncation(a.truncation_degree(), b.truncation_degree()));
  std::optional<int> cutoff = out.truncation_degree();
  for (const auto& [la, ma] : a.terms())
    for (const auto& [lb, mb] : b.terms()) {
      if (cutoff && la.size() + lb.size() > *cutoff) continue;
      for (const auto& [nu, c] : tensor_expand(la, lb)) out.add(nu, ma * mb * c);
    }
  return out;
}

VObject pointwise_tensor(const VObject& a, const VObject& b) {
  VObject out(VObject::Terms{},
              combined_truncation(a.truncation_degree(), b.truncation_degree()));
  for (const auto& [la, ma] : a.terms())
    for (const auto& [lb, mb] : b.terms()) {
      if (la.size() != lb.size()) continue;  // complementary degrees vanish
      for (const Partition& nu : partitions_of(la.size())) {
        Int g = kronecker(la, lb, nu);
        if (g != 0) out.add(nu, ma * mb * g);
      }
    }
  return out;
}

// --- comodule structure -------------------------------------------------------

BiVObject coaddition(const VObject& v) {
  BiVObject out;
  for (const auto& [lambda, mult] : v.terms()) {
    for (int k = 0; k <= lambda.size(); ++k) {
      for (const Partition& mu : subpartitions_of_size(lambda, k)) {
        Decomposition skew = skew_expand(SkewShape(lambda, mu));
        for (const auto& [nu, c] : skew) out.add(mu, nu, mult * c);
      }
    }
  }
  return out;
}

BiVObject comultiplication(const VObject& v) {
  BiVObject out;
  for (const auto& [lambda, mult] : v.terms()) {
    std::vector<Partition> same_degree = partitions_of(lambda.size());
    for (const Partition& mu : same_degree)
      for (const Partition& nu : same_degree) {
        Int g = kronecker(lambda, mu, nu);
        if (g != 0) out.add(mu, nu, mult * g);
      }
  }
  return out;
}

// --- involutions ---------------------------------------------------------------

VObject transpose_object(const VObject& v) {
  VObject out(VObject::Terms{}, v.truncation_degree());
  for (const auto& [p, mult] : v.terms()) out.add(transpose(p), mult);
  return out;
}

VObject dual(const VObject& v) { return v; }

// --- derivatives -----------------------------------------------------------------

VObject schur_derivative(const VObject& v) {
  std::optional<int> trunc = v.truncation_degree();
  if (trunc) trunc = std::max(0, *trunc - 1);
  VObject out(VObject::Terms{}, trunc);
  for (const auto& [p, mult] : v.terms())
    for (const Partition& q : remove_one_box(p)) out.add(q, mult);
  return out;
}

VObject higher_derivative(const Partition& nu, const VObject& v) {
  std::optional<int> trunc = v.truncation_degree();
  if (trunc) trunc = std::max(0, *trunc - nu.size());
  VObject out(VObject::Terms{}, trunc);
  for (const auto& [lambda, mult] : v.terms()) {
    if (lambda.size() < nu.size()) continue;
    for (const Partition& mu : subpartitions_of_size(lambda, lambda.size() - nu.size())) {
      Int c = lr_coefficient(lambda, mu, nu);
      if (c != 0) out.add(mu, mult * c);
    }
  }
  return out;
}

// --- evaluation and bounds ----------------------------------------------------------

Int evaluate_at_rank(const VObject& v, int n) {
  Int total = 0;
  for (const auto& [p, mult] : v.terms()) total += mult * dim_gl(p, n);
  return total;
}

int ell(const VObject& v) {
  int best = 0;
  for (const auto& [p, mult] : v.terms()) best = std::max(best, p.length());
  return best;
}

VObject truncate_rows(const VObject& v, int n) {
  VObject out(VObject::Terms{}, v.truncation_degree());
  for (const auto& [p, mult] : v.terms())
    if (p.length() <= n) out.add(p, mult);
  return out;
}

VObject truncate_degree(const VObject& v, int d) {
  std::optional<int> trunc = v.truncation_degree();
  trunc = trunc ? std::min(*trunc, d) : d;
  VObject out(VObject::Terms{}, trunc);
  for (const auto& [p, mult] : v.terms())
    if (p.size() <= d) out.add(p, mult);
  return out;
}

// --- series ----------------------------------------------------------------------

std::vector<Rational> hilbert_series(const VObject& v, int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
  std::vector<Rational> out(order + 1, Rational(0));
  for (int n = 0; n <= order; ++n)
    out[n] = Rational(v.dimension_at_degree(n), factorial(n));
  return out;
}

EnhancedSeries enhanced_hilbert(const VObject& v, int order) {
  if (order < 0) throw ValidationError("order must be non-negative");
  EnhancedSeries out;
  for (int n = 0; n <= order; ++n) {
    VObject piece = v.degree_piece(n);
    if (piece.empty()) continue;
    for (const Partition& rho : partitions_of(n)) {
      Int trace = 0;
      for (const auto& [lambda, mult] : piece.terms())
        trace += mult * mn_character(lambda, rho);
      if (trace == 0) continue;
      // rho! = prod over distinct part values of (multiplicity)!
      Int rho_fact = 1;
      int run = 0;
      for (int i = 1; i <= rho.length(); ++i) {
        run = (i > 1 && rho.part(i) == rho.part(i - 1)) ? run + 1 : 1;
        rho_fact *= run;
      }
      out[rho] = Rational(trace, rho_fact);
    }
  }
  return out;
}

EnhancedSeries enhanced_series_product(const EnhancedSeries& a,
                                       const EnhancedSeries& b, int order) {
  EnhancedSeries out;
  for (const auto& [mu, ca] : a)
    for (const auto& [nu, cb] : b) {
      if (mu.size() + nu.size() > order) continue;
      Rational prod = ca * cb;
      auto [it, inserted] = out.emplace(union_sorted(mu, nu), prod);
      if (!inserted) it->second += prod;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace schurkit
