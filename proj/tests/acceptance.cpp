// Acceptance suite: every release criterion, run end to end with exact
// arithmetic.  One PASS/FAIL line per criterion; nonzero exit if any fail.

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "schurkit/characters.hpp"
#include "schurkit/lr.hpp"
#include "schurkit/plethysm.hpp"
#include "schurkit/resolutions.hpp"
#include "schurkit/tca.hpp"
#include "schurkit/vobject.hpp"
#include "test_support.hpp"

using namespace schurkit;
using schurkit_test::plethysm_wreath_oracle;
using schurkit_test::random_partition_of;
using schurkit_test::random_vobject;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

struct Checker {
  int failures = 0;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      ++failures;
      if (failures <= 5) detail << "      " << what << "\n";
    }
  }
};

struct Criterion {
  int id;
  std::string name;
  double time_limit_seconds;  // 0 = no stated limit
  std::function<void(Checker&)> body;
};

// --- criterion bodies -------------------------------------------------------

void lr_golden(Checker& c) {
  Partition nu = P({5, 3, 2, 1}), lambda = P({3, 1}), mu = P({4, 2, 1});
  c.require(lr_coefficient(nu, lambda, mu) == 3, "coefficient != 3");
  c.require(lr_coefficient(nu, mu, lambda) == 3, "swapped computation != 3");
  std::vector<LRTableau> fillings = lr_tableaux({nu, lambda, mu});
  c.require(fillings.size() == 3, "expected exactly 3 fillings");
  std::set<std::string> words;
  for (const LRTableau& t : fillings) words.insert(t.reading_word_str());
  c.require(words == std::set<std::string>{"1111223", "1121213", "1121312"},
            "reading words differ");
}

void dimension_goldens(Checker& c) {
  c.require(dim_sym_hook(P({5, 3, 2})) == 450, "hook dimension != 450");
  c.require(dim_sym_det(P({5, 3, 2})) == 450, "determinantal dimension != 450");
  c.require(dim_gl(P({4, 2, 1}), 6) == 2520, "rank-6 dimension != 2520");
}

void pieri_goldens(Checker& c) {
  std::vector<Partition> one = add_strips(P({2, 2, 1}), 1, StripKind::Horizontal);
  c.require(one == std::vector<Partition>{P({3, 2, 1}), P({2, 2, 2}),
                                          P({2, 2, 1, 1})},
            "single-box induction differs");
  std::vector<Partition> two = add_strips(P({2, 2, 1}), 2, StripKind::Horizontal);
  c.require(two == std::vector<Partition>{P({4, 2, 1}), P({3, 2, 2}),
                                          P({3, 2, 1, 1}), P({2, 2, 2, 1})},
            "size-2 strip case differs");
  // The tensor route gives the same multiplicity-free answers.
  for (int m = 1; m <= 2; ++m) {
    Decomposition d = tensor_expand(P({2, 2, 1}), P({m}));
    std::set<Partition> support;
    for (const auto& [p, mult] : d) {
      c.require(mult == 1, "induction not multiplicity-free");
      support.insert(p);
    }
    std::vector<Partition> strips = add_strips(P({2, 2, 1}), m, StripKind::Horizontal);
    c.require(support == std::set<Partition>(strips.begin(), strips.end()),
              "tensor route support differs from strips");
  }
}

void schur_weyl_audit(Checker& c) {
  for (int n = 0; n <= 4; ++n)
    for (int k = 0; k <= 6; ++k) {
      Int total = 0;
      for (const Partition& lambda : partitions_of(k)) {
        if (lambda.length() > n) continue;
        total += dim_sym(lambda) * dim_gl(lambda, n);
      }
      c.require(total == int_pow(n, k),
                "sum dim M * dim V != n^k at n=" + std::to_string(n) +
                    " k=" + std::to_string(k));
    }
}

void lr_property_sweep(Checker& c) {
  auto check_triple = [&](const Partition& nu, const Partition& lambda,
                          const Partition& mu, bool stretch) {
    Int v = lr_coefficient(nu, lambda, mu);
    c.require(v == lr_coefficient(nu, mu, lambda), "symmetry violation");
    c.require(v == lr_coefficient(transpose(nu), transpose(lambda), transpose(mu)),
              "transpose symmetry violation");
    if (v != 0)
      c.require(contains(nu, lambda) && contains(nu, mu), "support violation");
    if (stretch) {
      LRQuery q{nu, lambda, mu};
      Int v2 = stretched_coefficient(q, 2);
      Int v3 = stretched_coefficient(q, 3);
      c.require(v <= v2 && v2 <= v3, "stretching not monotone");
    }
  };

  // Exhaustive for |lambda| + |mu| <= 8.
  for (int a = 0; a <= 8; ++a)
    for (int b = 0; a + b <= 8; ++b)
      for (const Partition& lambda : partitions_of(a))
        for (const Partition& mu : partitions_of(b)) {
          c.require(lr_coefficient(sum(lambda, mu), lambda, mu) == 1,
                    "row-sum extremal shape multiplicity != 1");
          c.require(lr_coefficient(union_sorted(lambda, mu), lambda, mu) == 1,
                    "union extremal shape multiplicity != 1");
          int counter = 0;
          for (const Partition& nu : partitions_of(a + b))
            check_triple(nu, lambda, mu, (++counter % 7) == 0);
        }

  // 500 random cases with |lambda| + |mu| <= 14; stretching on a fixed
  // subsample.
  std::mt19937 rng(20240811);
  std::uniform_int_distribution<int> a_dist(0, 10);
  for (int trial = 0; trial < 500; ++trial) {
    int a = a_dist(rng);
    std::uniform_int_distribution<int> b_dist(0, 14 - a);
    int b = b_dist(rng);
    Partition lambda = random_partition_of(rng, a);
    Partition mu = random_partition_of(rng, b);
    c.require(lr_coefficient(sum(lambda, mu), lambda, mu) == 1,
              "row-sum extremal shape multiplicity != 1 (random)");
    c.require(lr_coefficient(union_sorted(lambda, mu), lambda, mu) == 1,
              "union extremal shape multiplicity != 1 (random)");
    std::vector<Partition> nus = partitions_of(a + b);
    std::uniform_int_distribution<size_t> pick(0, nus.size() - 1);
    bool stretch = (trial % 10) == 0 && a + b <= 10;
    check_triple(nus[pick(rng)], lambda, mu, stretch);
  }
}

void character_suite(Checker& c) {
  for (int n = 0; n <= 8; ++n) {
    CharacterTable table = character_table(n);
    const auto& parts = table.irreps();
    size_t k = parts.size();
    Int nfact = factorial(n);
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b) {
        Int column = 0, row = 0;
        for (size_t i = 0; i < k; ++i) {
          column += table.value(i, a) * table.value(i, b);
          row += exact_div(nfact, class_size_normalizer(parts[i])) *
                 table.value(a, i) * table.value(b, i);
        }
        c.require(column == (a == b ? class_size_normalizer(parts[a]) : Int(0)),
                  "column orthogonality failed at n=" + std::to_string(n));
        c.require(row == (a == b ? nfact : Int(0)),
                  "row orthogonality failed at n=" + std::to_string(n));
      }
    Int sq = 0;
    for (const Partition& lambda : parts) {
      Int d = dim_sym(lambda);
      sq += d * d;
    }
    c.require(sq == nfact, "sum of squared dimensions != n!");
    for (const Partition& lambda : parts)
      for (const Partition& rho : parts) {
        int sgn = (rho.size() - rho.length()) % 2 == 0 ? 1 : -1;
        c.require(table.value(transpose(lambda), rho) ==
                      sgn * table.value(lambda, rho),
                  "transpose/sign rule failed");
      }
  }
}

void kronecker_suite(Checker& c) {
  for (int n = 0; n <= 8; ++n) {
    std::vector<Partition> parts = partitions_of(n);
    Partition ones(std::vector<int>(n, 1));
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        if (n >= 1) {
          c.require(kronecker(a, b, P({n})) == (a == b ? 1 : 0),
                    "one-row delta rule failed");
          c.require(kronecker(a, b, ones) == (b == transpose(a) ? 1 : 0),
                    "one-column delta rule failed");
        }
        Int audit = 0;
        for (const Partition& d : parts) {
          Int g = kronecker(a, b, d);
          // Full six-fold symmetry.
          c.require(g == kronecker(a, d, b) && g == kronecker(b, a, d) &&
                        g == kronecker(b, d, a) && g == kronecker(d, a, b) &&
                        g == kronecker(d, b, a),
                    "kronecker symmetry failed");
          audit += g * dim_sym(d);
        }
        c.require(audit == dim_sym(a) * dim_sym(b),
                  "kronecker dimension audit failed");
      }
  }
}

void cauchy_identities(Checker& c) {
  for (int n = 1; n <= 4; ++n)
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k <= 6; ++k) {
        Int sym_side = 0, wedge_side = 0;
        for (const Partition& lambda : partitions_of(k)) {
          sym_side += dim_gl(lambda, n) * dim_gl(lambda, m);
          wedge_side += dim_gl(lambda, n) * dim_gl(transpose(lambda), m);
        }
        c.require(sym_side == binomial(static_cast<long long>(n) * m + k - 1, k),
                  "symmetric Cauchy identity failed");
        c.require(wedge_side == binomial(static_cast<long long>(n) * m, k),
                  "alternating Cauchy identity failed");
      }
}

void plethysm_closed_forms(Checker& c) {
  for (int n = 0; n <= 6; ++n) {
    VObject got = compose(simple(P({n})), simple(P({2})), 2 * n);
    VObject expect;
    for (const Partition& lambda : partitions_of(n)) expect.add(scale(lambda, 2), 1);
    c.require(got.terms() == expect.terms(),
              "Sym^" + std::to_string(n) + " o Sym^2 differs");
    for (const auto& [p, mult] : got.terms())
      c.require(mult == 1, "plethysm not multiplicity-free");
  }
  for (int n = 0; n <= 4; ++n) {
    VObject m = matchings(n);
    c.require(m.dimension_at_degree(2 * n) ==
                  exact_div(factorial(2 * n), int_pow(2, n) * factorial(n)),
              "matchings dimension differs");
    c.require(m.terms() == compose(simple(P({n})), simple(P({2})), 2 * n).terms(),
              "matchings decomposition differs");
  }
  // Induced-character oracle for all simples with nm <= 8.
  for (int n = 1; n <= 8; ++n)
    for (int m = 1; n * m <= 8; ++m)
      for (const Partition& lambda : partitions_of(n))
        for (const Partition& mu : partitions_of(m)) {
          Decomposition oracle = plethysm_wreath_oracle(lambda, mu);
          VObject got = compose(simple(lambda), simple(mu), n * m);
          c.require(got.terms() == VObject::Terms(oracle.begin(), oracle.end()),
                    "wreath oracle disagrees at " + lambda.str() + " o " + mu.str());
        }
}

void schur_calculus(Checker& c) {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    VObject v = random_vobject(rng, 5, 3);
    VObject w = random_vobject(rng, 4, 2);
    c.require(schur_derivative(tensor(v, w)) ==
                  add(tensor(schur_derivative(v), w),
                      tensor(v, schur_derivative(w))),
              "Leibniz rule failed");
    for (int k = 0; k <= 3; ++k)
      for (const Partition& nu : partitions_of(k)) {
        VObject lhs = higher_derivative(nu, tensor(v, w));
        VObject rhs;
        for (int a = 0; a <= k; ++a)
          for (const Partition& la : partitions_of(a))
            for (const Partition& mu : partitions_of(k - a)) {
              Int coeff = lr_coefficient(nu, la, mu);
              if (coeff != 0)
                rhs = add(rhs, scale(tensor(higher_derivative(la, v),
                                            higher_derivative(mu, w)),
                                     coeff));
            }
        c.require(lhs == rhs, "higher Leibniz failed at nu=" + nu.str());
      }
    // Iterated derivative decomposition for k <= 3.
    VObject iter = v;
    for (int k = 1; k <= 3; ++k) {
      iter = schur_derivative(iter);
      VObject expect;
      for (const Partition& lambda : partitions_of(k))
        expect = add(expect, scale(higher_derivative(lambda, v), dim_sym(lambda)));
      c.require(iter == expect,
                "iterated derivative decomposition failed at k=" + std::to_string(k));
    }
    // Commutativity on random pairs.
    Partition p1 = random_partition_of(rng, 2), p2 = random_partition_of(rng, 3);
    c.require(higher_derivative(p1, higher_derivative(p2, v)) ==
                  higher_derivative(p2, higher_derivative(p1, v)),
              "derivatives do not commute");
  }
  // Chain rule on small simples.
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b)
      for (const Partition& w : partitions_of(a))
        for (const Partition& v : partitions_of(b)) {
          VObject lhs = schur_derivative(compose(simple(w), simple(v), 9));
          VObject rhs =
              tensor(compose(schur_derivative(simple(w)), simple(v), 9),
                     schur_derivative(simple(v)));
          c.require(truncate_degree(lhs, 8).terms() ==
                        truncate_degree(rhs, 8).terms(),
                    "chain rule failed at " + w.str() + " o " + v.str());
        }
}

void koszul_exactness(Checker& c) {
  for (int rank = 1; rank <= 3; ++rank) {
    GradedComplex complex = koszul_complex(rank, 6);
    HomologyReport report = exactness_report(complex);
    c.require(report.exact_in_positive_spots(),
              "positive homology at rank " + std::to_string(rank));
    c.require(report.nonzero.size() == 1 && report.nonzero.count({0, 0}) == 1 &&
                  report.nonzero.at({0, 0}) == 1,
              "H_0 is not C concentrated in degree 0");
  }
  // Rank-1 term shapes: two free modules of rank 1 in every positive degree.
  GradedComplex c1 = koszul_complex(1, 6);
  for (int D = 1; D <= 6; ++D)
    c.require(c1.dim(0, D) == 1 && c1.dim(1, D) == 1 && c1.dim(2, D) == 0,
              "rank-1 chain shape differs");
  // Rank-3 term shapes: generator multiplicities 1, 3, 3, 1.
  GradedComplex c3 = koszul_complex(3, 6);
  for (int i = 0; i <= 3; ++i)
    c.require(c3.dim(i, i) == binomial(3, i).convert_to<int>(),
              "rank-3 generator multiplicities differ");
}

void efw_validity(Checker& c) {
  std::mt19937 rng(1009);
  std::uniform_int_distribution<int> rows_dist(1, 5);
  std::uniform_int_distribution<int> part_dist(0, 4);
  std::uniform_int_distribution<int> bump_dist(1, 4);
  for (int trial = 0; trial < 200; ++trial) {
    int rows = rows_dist(rng);
    std::vector<int> alpha_parts;
    int prev = 5;
    for (int i = 0; i < rows; ++i) {
      int p = std::min(prev, part_dist(rng));
      if (p == 0) break;
      alpha_parts.push_back(p);
      prev = p;
    }
    Partition alpha(std::move(alpha_parts));
    std::vector<int> beta_parts = alpha.parts();
    if (beta_parts.empty()) beta_parts.push_back(0);
    beta_parts[0] = alpha.part(1) + bump_dist(rng);
    PureResolutionPlan plan =
        efw_plan(alpha, Partition(std::move(beta_parts)), rows);
    PlanValidity validity = validate_plan(plan);
    c.require(validity.ok, "random plan failed validation");
    // Degree-sequence round trip.
    DegreeSequence seq = degree_sequence(plan);
    PureResolutionPlan normalized = plan_from_degree_sequence(seq);
    c.require(degree_sequence(normalized) == seq, "degree round trip failed");
    PureResolutionPlan again = plan_from_degree_sequence(degree_sequence(normalized));
    c.require(again.alpha == normalized.alpha && again.beta == normalized.beta &&
                  again.shapes == normalized.shapes,
              "normalized plan round trip failed");
  }
  PureResolutionPlan worked = efw_plan(P({1}), P({3}), 2);
  c.require(worked.d == std::vector<int>{0, 2, 4}, "worked plan degrees differ");
  c.require(worked.shapes == std::vector<Partition>{P({1}), P({3}), P({3, 2})},
            "worked plan shapes differ");
  c.require(plan_betti_table(worked, 2) == BettiTable{{0, 2}, {2, 4}, {4, 2}},
            "worked plan Betti table differs");
}

void hilbert_series_criterion(Checker& c) {
  VObject univariate = tca_decompose(PolynomialTcaSpec::univariate(), 10);
  std::vector<Rational> h = hilbert_series(univariate, 10);
  for (int n = 0; n <= 10; ++n)
    c.require(h[n] == Rational(1, factorial(n)),
              "univariate coefficient differs at n=" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) {
    EnhancedSeries e = enhanced_hilbert(regular(n), n);
    c.require(e.size() == 1 &&
                  e.count(Partition(std::vector<int>(n, 1))) == 1 &&
                  e.at(Partition(std::vector<int>(n, 1))) == 1,
              "enhanced series of the regular object is not t_1^n");
  }
  std::mt19937 rng(211);
  for (int trial = 0; trial < 50; ++trial) {
    VObject v = random_vobject(rng, 4, 3);
    VObject w = random_vobject(rng, 4, 3);
    EnhancedSeries lhs = enhanced_hilbert(tensor(v, w), 6);
    EnhancedSeries rhs = enhanced_series_product(enhanced_hilbert(v, 6),
                                                 enhanced_hilbert(w, 6), 6);
    c.require(lhs == rhs, "enhanced series multiplicativity failed");
  }
}

void boundedness(Checker& c) {
  std::mt19937 rng(307);
  for (int trial = 0; trial < 100; ++trial) {
    VObject v = random_vobject(rng, 5, 3);
    VObject w = random_vobject(rng, 5, 3);
    c.require(ell(tensor(v, w)) == ell(v) + ell(w), "ell additivity failed");
  }
  for (int u = 1; u <= 3; ++u)
    for (int depth = u; depth <= u + 3; ++depth)
      c.require(ell(tca_decompose(PolynomialTcaSpec::multivariate(u), depth)) == u,
                "ell of the degree-1 algebra did not stabilize at dim U");
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "LR golden value and tableau enumeration", 1.0, lr_golden},
      {2, "dimension goldens (450 twice, 2520)", 0.0, dimension_goldens},
      {3, "Pieri goldens", 0.0, pieri_goldens},
      {4, "Schur-Weyl dimension audit (n<=4, k<=6)", 5.0, schur_weyl_audit},
      {5, "LR property sweep (exhaustive <=8, 500 random <=14)", 60.0,
       lr_property_sweep},
      {6, "character suite (n<=8)", 30.0, character_suite},
      {7, "Kronecker suite (|lambda|<=8)", 0.0, kronecker_suite},
      {8, "Cauchy identities at finite rank", 0.0, cauchy_identities},
      {9, "plethysm closed forms and wreath oracle", 120.0,
       plethysm_closed_forms},
      {10, "Schur calculus laws", 0.0, schur_calculus},
      {11, "Koszul exactness (rank<=3, degree<=6)", 30.0, koszul_exactness},
      {12, "pure-resolution plan validity and round trips", 0.0, efw_validity},
      {13, "Hilbert series (1/n!, regular, multiplicativity)", 0.0,
       hilbert_series_criterion},
      {14, "boundedness (ell additivity and stabilization)", 0.0, boundedness},
  };

  int failed = 0;
  for (const Criterion& criterion : criteria) {
    Checker checker;
    auto start = std::chrono::steady_clock::now();
    criterion.body(checker);
    double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    bool ok = checker.failures == 0;
    if (criterion.time_limit_seconds > 0 && seconds > criterion.time_limit_seconds) {
      ok = false;
      checker.detail << "      exceeded time limit of "
                     << criterion.time_limit_seconds << " s\n";
    }
    std::printf("%s  criterion %2d: %s  (%.2f s)\n", ok ? "PASS" : "FAIL",
                criterion.id, criterion.name.c_str(), seconds);
    if (!ok) {
      ++failed;
      std::cout << checker.detail.str();
      if (checker.failures > 5)
        std::cout << "      ... and " << (checker.failures - 5)
                  << " more failures\n";
    }
  }
  if (failed == 0) {
    std::cout << "ALL 14 CRITERIA PASSED\n";
    return 0;
  }
  std::cout << failed << " CRITERIA FAILED\n";
  return 1;
}
