#include "schurkit/resolutions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "schurkit/characters.hpp"
#include "schurkit/errors.hpp"
#include "schurkit/lr.hpp"

namespace schurkit {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw ValidationError("degree sequence must be non-empty");
  for (size_t i = 1; i < degrees_.size(); ++i)
    if (degrees_[i] <= degrees_[i - 1])
      throw ValidationError("degree sequence must be strictly increasing");
  int shift = degrees_[0];
  for (int& d : degrees_) d -= shift;
}

PureResolutionPlan efw_plan(const Partition& alpha, const Partition& beta,
                            int n_rows) {
  if (n_rows < 1) throw ValidationError("row count must be positive");
  if (alpha.length() > n_rows)
    throw ValidationError("alpha has more than n_rows rows");
  if (beta.part(1) <= alpha.part(1))
    throw ValidationError("beta_1 must exceed alpha_1");
  int check_len = std::max(alpha.length(), beta.length());
  for (int i = 2; i <= check_len; ++i)
    if (beta.part(i) != alpha.part(i))
      throw ValidationError("beta must agree with alpha below the first row");

  PureResolutionPlan plan;
  plan.alpha = alpha;
  plan.beta = beta;
  plan.n_rows = n_rows;
  plan.e.resize(n_rows);
  plan.e[0] = beta.part(1) - alpha.part(1);
  for (int i = 2; i <= n_rows; ++i)
    plan.e[i - 1] = alpha.part(i - 1) - alpha.part(i) + 1;
  plan.d.resize(n_rows + 1);
  plan.d[0] = 0;
  for (int i = 1; i <= n_rows; ++i) plan.d[i] = plan.d[i - 1] + plan.e[i - 1];
  plan.shapes.reserve(n_rows + 1);
  for (int i = 0; i <= n_rows; ++i) {
    std::vector<int> parts;
    for (int r = 1; r <= n_rows; ++r)
      parts.push_back(alpha.part(r) + (r <= i ? plan.e[r - 1] : 0));
    plan.shapes.push_back(Partition(std::move(parts)));
  }
  return plan;
}

PureResolutionPlan plan_from_degree_sequence(const DegreeSequence& seq) {
  const std::vector<int>& d = seq.degrees();
  int n = seq.steps();
  if (n < 1) throw ValidationError("degree sequence needs at least two entries");
  std::vector<int> e(n);
  for (int i = 1; i <= n; ++i) e[i - 1] = d[i] - d[i - 1];
  // alpha_i = sum_{j > i} (e_j - 1), the unique choice with alpha_n = 0.
  std::vector<int> alpha_parts(n, 0);
  for (int i = n - 1; i >= 1; --i)
    alpha_parts[i - 1] = alpha_parts[i] + (e[i] - 1);
  Partition alpha(std::move(alpha_parts));
  std::vector<int> beta_parts = alpha.parts();
  if (beta_parts.empty()) beta_parts.push_back(0);
  beta_parts[0] = alpha.part(1) + e[0];
  return efw_plan(alpha, Partition(std::move(beta_parts)), n);
}

DegreeSequence degree_sequence(const PureResolutionPlan& p) {
  return DegreeSequence(p.d);
}

PlanValidity validate_plan(const PureResolutionPlan& p) {
  PlanValidity v;
  for (int i = 1; i <= p.n_rows; ++i) {
    PlanValidity::Step step;
    step.index = i;
    SkewShape skew(p.shapes[i], p.shapes[i - 1]);
    step.horizontal_strip =
        is_horizontal_strip(skew) && skew.size() == p.e[i - 1];
    step.unique_map =
        lr_coefficient(p.shapes[i], p.shapes[i - 1], Partition({p.e[i - 1]})) == 1;
    if (i >= 2) {
      int jump = p.d[i] - p.d[i - 2];
      step.two_step_zero =
          lr_coefficient(p.shapes[i], p.shapes[i - 2], Partition({jump})) == 0;
    }
    if (!(step.horizontal_strip && step.unique_map && step.two_step_zero) &&
        v.ok) {
      v.ok = false;
      v.message = "step " + std::to_string(i) + " failed";
    }
    v.steps.push_back(step);
  }
  return v;
}

BettiTable plan_betti_table(const PureResolutionPlan& p, int rank) {
  BettiTable t;
  for (int i = 0; i <= p.n_rows; ++i)
    t.emplace_back(p.d[i], dim_gl(p.shapes[i], rank));
  return t;
}

std::string betti_table_text(const BettiTable& t) {
  std::ostringstream os;
  os << "i  degree  rank\n";
  for (size_t i = 0; i < t.size(); ++i)
    os << i << "  " << t[i].first << "  " << t[i].second << "\n";
  return os.str();
}

std::string betti_table_csv(const BettiTable& t) {
  std::ostringstream os;
  os << "i,degree,rank\n";
  for (size_t i = 0; i < t.size(); ++i)
    os << i << "," << t[i].first << "," << t[i].second << "\n";
  return os.str();
}

const GradedComplex::DegreeSlice* GradedComplex::find_slice(int internal_degree) const {
  auto it = slices_.find(internal_degree);
  return it == slices_.end() ? nullptr : &it->second;
}

int GradedComplex::dim(int spot, int internal_degree) const {
  const DegreeSlice* s = find_slice(internal_degree);
  if (!s || spot < 0 || spot >= static_cast<int>(s->dims.size())) return 0;
  return s->dims[spot];
}

const RationalMatrix* GradedComplex::differential(int from_spot,
                                                  int internal_degree) const {
  const DegreeSlice* s = find_slice(internal_degree);
  if (!s || from_spot < 1 || from_spot > static_cast<int>(s->diffs.size()))
    return nullptr;
  return &s->diffs[from_spot - 1];
}

namespace {

// Monomials of total degree d in `rank` variables, lexicographic by exponent
// vector.
std::vector<std::vector<int>> monomials(int rank, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> acc(rank, 0);
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == rank - 1) {
      acc[var] = remaining;
      out.push_back(acc);
      return;
    }
    for (int use = remaining; use >= 0; --use) {
      acc[var] = use;
      rec(var + 1, remaining - use);
    }
  };
  if (rank == 0) {
    if (d == 0) out.push_back({});
    return out;
  }
  rec(0, d);
  std::sort(out.begin(), out.end());
  return out;
}

// Size-k subsets of {0..rank-1} in colexicographic order.
std::vector<std::vector<int>> subsets_colex(int rank, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > rank) return out;
  std::vector<int> cur(k);
  std::function<void(int, int)> rec = [&](int pos, int max_val) {
    if (pos < 0) {
      out.push_back(cur);
      return;
    }
    // cur is built from the top element down; colex = sorted by largest, then
    // next largest, ...
    for (int v = pos; v <= max_val; ++v) {
      cur[pos] = v;
      rec(pos - 1, v - 1);
    }
  };
  if (k == 0) {
    out.push_back({});
    return out;
  }
  rec(k - 1, rank - 1);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(),
                                        b.rend());
  });
  return out;
}

int monomial_index(const std::vector<std::vector<int>>& monos,
                   const std::vector<int>& m) {
  auto it = std::lower_bound(monos.begin(), monos.end(), m);
  return static_cast<int>(it - monos.begin());
}

}  // namespace

GradedComplex koszul_complex(int rank, int max_internal_degree) {
  if (rank < 1) throw ValidationError("rank must be positive");
  if (max_internal_degree < 0)
    throw ValidationError("internal degree bound must be non-negative");
  GradedComplex complex(rank, rank);
  for (int D = 0; D <= max_internal_degree; ++D) {
    GradedComplex::DegreeSlice slice;
    std::vector<std::vector<std::vector<int>>> monos(rank + 1);
    std::vector<std::vector<std::vector<int>>> wedges(rank + 1);
    slice.dims.resize(rank + 1, 0);
    for (int i = 0; i <= rank && i <= D; ++i) {
      monos[i] = monomials(rank, D - i);
      wedges[i] = subsets_colex(rank, i);
      slice.dims[i] =
          static_cast<int>(monos[i].size() * wedges[i].size());
    }
    // diff i: Sym^{D-i} (x) Wedge^i -> Sym^{D-i+1} (x) Wedge^{i-1},
    // x^a (x) e_S |-> sum_{s in S} (-1)^{pos(s)} x_s x^a (x) e_{S \ s}.
    for (int i = 1; i <= rank; ++i) {
      RationalMatrix m(slice.dims[i - 1], slice.dims[i]);
      if (i <= D) {
        int wedge_cols = static_cast<int>(wedges[i].size());
        for (size_t mi = 0; mi < monos[i].size(); ++mi) {
          for (int wi = 0; wi < wedge_cols; ++wi) {
            int col = static_cast<int>(mi) * wedge_cols + wi;
            const std::vector<int>& S = wedges[i][wi];
            for (size_t pos = 0; pos < S.size(); ++pos) {
              int var = S[pos];
              std::vector<int> target_mono = monos[i][mi];
              target_mono[var] += 1;
              std::vector<int> target_set;
              for (size_t t = 0; t < S.size(); ++t)
                if (t != pos) target_set.push_back(S[t]);
              int tm = monomial_index(monos[i - 1], target_mono);
              auto wit = std::lower_bound(
                  wedges[i - 1].begin(), wedges[i - 1].end(), target_set,
                  [](const auto& a, const auto& b) {
                    return std::lexicographical_compare(a.rbegin(), a.rend(),
                                                        b.rbegin(), b.rend());
                  });
              int tw = static_cast<int>(wit - wedges[i - 1].begin());
              int row = tm * static_cast<int>(wedges[i - 1].size()) + tw;
              // Sign convention (-1)^{pos+1} with 1-based position.
              m.at(row, col) += (pos % 2 == 0) ? Rational(-1) : Rational(1);
            }
          }
        }
      }
      slice.diffs.push_back(std::move(m));
    }
    complex.slice(D) = std::move(slice);
  }
  return complex;
}

bool HomologyReport::exact_in_positive_spots() const {
  for (const auto& [key, dim] : nonzero)
    if (key.first >= 1 && dim != 0) return false;
  return true;
}

std::string HomologyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [key, dim] : nonzero) {
    nlohmann::json entry;
    entry["spot"] = key.first;
    entry["internal_degree"] = key.second;
    entry["dimension"] = dim;
    arr.push_back(entry);
  }
  nlohmann::json j;
  j["nonzero_homology"] = arr;
  return j.dump();
}

std::string HomologyReport::summary() const {
  if (nonzero.empty()) return "no homology anywhere";
  std::ostringstream os;
  bool positive_clear = exact_in_positive_spots();
  if (positive_clear) os << "H_i = 0 for i ≥ 1";
  bool first = true;
  for (const auto& [key, dim] : nonzero) {
    if (key.first >= 1 && positive_clear) continue;
    if (!first || positive_clear) os << "; ";
    os << "H_" << key.first << " = " << dim << "·(degree " << key.second << ")";
    first = false;
  }
  return os.str();
}

HomologyReport exactness_report(const GradedComplex& c) {
  HomologyReport report;
  for (const auto& [D, slice] : c.slices()) {
    int spots = static_cast<int>(slice.dims.size());
    // Integrity: consecutive differentials must compose to zero.
    for (int i = 2; i < spots; ++i) {
      const RationalMatrix& inner = slice.diffs[i - 1];
      const RationalMatrix& outer = slice.diffs[i - 2];
      if (inner.cols() == 0 || outer.cols() == 0) continue;
      if (!(outer * inner).is_zero())
        throw IntegrityError("differentials at spot " + std::to_string(i) +
                             ", degree " + std::to_string(D) +
                             " do not compose to zero");
    }
    std::vector<int> ranks(spots + 1, 0);
    for (int i = 1; i < spots; ++i) ranks[i] = slice.diffs[i - 1].rank();
    for (int i = 0; i < spots; ++i) {
      int h = slice.dims[i] - ranks[i] - ranks[i + 1];
      if (h < 0)
        throw IntegrityError("negative homology dimension; inconsistent chain");
      if (h != 0) report.nonzero[{i, D}] = h;
    }
  }
  return report;
}

}  // namespace schurkit
