#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "schurkit/characters.hpp"
#include "schurkit/lr.hpp"

using namespace schurkit;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

Partition random_partition(std::mt19937& rng, int size) {
  std::vector<int> parts;
  int prev = size;
  int n = size;
  while (n > 0) {
    std::uniform_int_distribution<int> part_dist(1, prev);
    int p = std::min(part_dist(rng), n);
    parts.push_back(p);
    prev = p;
    n -= p;
  }
  return Partition(std::move(parts));
}

}  // namespace

TEST_CASE("lr golden value and enumeration") {
  Partition nu = P({5, 3, 2, 1}), lambda = P({3, 1}), mu = P({4, 2, 1});
  CHECK(lr_coefficient(nu, lambda, mu) == 3);
  CHECK(lr_coefficient(nu, mu, lambda) == 3);

  std::vector<LRTableau> fillings = lr_tableaux({nu, lambda, mu});
  REQUIRE(fillings.size() == 3);
  std::set<std::string> words;
  for (const LRTableau& t : fillings) words.insert(t.reading_word_str());
  CHECK(words == std::set<std::string>{"1111223", "1121213", "1121312"});
}

TEST_CASE("lr trivial and derived cases") {
  CHECK(lr_coefficient(P({3, 1}), P({3, 1}), P({})) == 1);
  CHECK(lr_coefficient(P({2, 1}), P({1}), P({1, 1})) == 1);
  // Size / containment guards.
  CHECK(lr_coefficient(P({2, 1}), P({1}), P({1})) == 0);
  CHECK(lr_coefficient(P({2, 2}), P({3}), P({1})) == 0);
  CHECK(lr_coefficient(P({4}), P({1, 1}), P({2})) == 0);
}

TEST_CASE("tensor expand agrees with per-coefficient route") {
  Decomposition d = tensor_expand(P({1}), P({1}));
  CHECK(d == Decomposition{{P({2}), 1}, {P({1, 1}), 1}});

  // Pieri example.
  Decomposition pieri = tensor_expand(P({2, 2, 1}), P({1}));
  CHECK(pieri == Decomposition{{P({3, 2, 1}), 1}, {P({2, 2, 2}), 1},
                               {P({2, 2, 1, 1}), 1}});

  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> size_dist(0, 6);
    Partition lambda = random_partition(rng, size_dist(rng));
    Partition mu = random_partition(rng, size_dist(rng));
    Decomposition generic = tensor_expand_generic(lambda, mu);
    CHECK(generic == tensor_expand(lambda, mu));
    Int total = 0;
    for (const auto& [nu, mult] : generic) {
      CHECK(mult == lr_coefficient(nu, lambda, mu));
      total += mult;
    }
    // Every nu of the right size is accounted for (zero or listed).
    for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
      auto it = generic.find(nu);
      Int expected = it == generic.end() ? Int(0) : it->second;
      CHECK(lr_coefficient(nu, lambda, mu) == expected);
    }
    (void)total;
  }
}

TEST_CASE("tensor expansion dimension audit") {
  // Sum of c * dim(nu at rank 3) over the expansion of [2,1] (x) [2,1]
  // equals the square of dim([2,1] at rank 3) = 8^2.
  Partition lambda({2, 1});
  Int total = 0;
  for (const auto& [nu, mult] : tensor_expand(lambda, lambda))
    total += mult * dim_gl(nu, 3);
  CHECK(dim_gl(lambda, 3) == 8);
  CHECK(total == 64);
}

TEST_CASE("pieri consistency") {
  for (const Partition& lambda : partitions_of(5))
    for (int m = 0; m <= 3; ++m) {
      Decomposition row = tensor_expand_generic(lambda, m == 0 ? P({}) : P({m}));
      std::set<Partition> support;
      for (const auto& [nu, mult] : row) {
        CHECK(mult == 1);
        support.insert(nu);
      }
      std::vector<Partition> strips = add_strips(lambda, m, StripKind::Horizontal);
      CHECK(support == std::set<Partition>(strips.begin(), strips.end()));

      Decomposition col = tensor_expand_generic(
          lambda, Partition(std::vector<int>(m, 1)));
      std::set<Partition> col_support;
      for (const auto& [nu, mult] : col) {
        CHECK(mult == 1);
        col_support.insert(nu);
      }
      std::vector<Partition> vstrips = add_strips(lambda, m, StripKind::Vertical);
      CHECK(col_support == std::set<Partition>(vstrips.begin(), vstrips.end()));
    }
}

TEST_CASE("restriction rules") {
  BranchDecomposition b = restrict_branch(P({2, 1}), 2, 1);
  CHECK(b.size() == 2);
  CHECK(b[{P({2}), P({1})}] == 1);
  CHECK(b[{P({1, 1}), P({1})}] == 1);

  // One-row restriction is multiplicity-free with one term per split.
  for (int i = 0; i <= 5; ++i) {
    BranchDecomposition one_row = restrict_branch(P({5}), i, 5 - i);
    CHECK(one_row.size() == 1);
    CHECK(one_row[{i ? P({i}) : P({}), 5 - i ? P({5 - i}) : P({})}] == 1);
  }

  // Single-box restriction = remove a corner.
  BranchDecomposition single = restrict_branch(P({3, 2}), 4, 1);
  std::set<Partition> left;
  for (const auto& [key, mult] : single) {
    CHECK(mult == 1);
    CHECK(key.second == P({1}));
    left.insert(key.first);
  }
  CHECK(left == std::set<Partition>{P({2, 2}), P({3, 1})});

  // Branch coefficients are LR coefficients.
  Partition nu = P({4, 2, 1});
  for (int n = 0; n <= nu.size(); ++n)
    for (const auto& [key, mult] : restrict_branch(nu, n, nu.size() - n))
      CHECK(mult == lr_coefficient(nu, key.first, key.second));

  // All splits cover every (lambda, mu) with nonzero coefficient.
  BranchDecomposition all = restrict_branch_all(P({3, 1}));
  Int total = 0;
  for (const auto& [key, mult] : all) total += mult;
  CHECK(total > 0);
  CHECK_THROWS_AS(restrict_branch(P({2, 1}), 1, 1), ValidationError);
}

TEST_CASE("lr structural consequences, exhaustive small sizes") {
  for (int a = 0; a <= 4; ++a)
    for (int b = 0; a + b <= 7; ++b)
      for (const Partition& lambda : partitions_of(a))
        for (const Partition& mu : partitions_of(b)) {
          CHECK(lr_coefficient(sum(lambda, mu), lambda, mu) == 1);
          CHECK(lr_coefficient(union_sorted(lambda, mu), lambda, mu) == 1);
          for (const Partition& nu : partitions_of(a + b)) {
            Int c = lr_coefficient(nu, lambda, mu);
            CHECK(c == lr_coefficient(nu, mu, lambda));
            CHECK(c == lr_coefficient(transpose(nu), transpose(lambda),
                                      transpose(mu)));
            if (c != 0) {
              CHECK(contains(nu, lambda));
              CHECK(contains(nu, mu));
            }
          }
        }
}

TEST_CASE("stretched coefficients") {
  LRQuery q{P({5, 3, 2, 1}), P({3, 1}), P({4, 2, 1})};
  CHECK(stretched_coefficient(q, 1) == 3);
  // Frozen regression values, computed by this engine; the sequence
  // 3, 6, 10, 15 is polynomial in N as it should be.
  CHECK(stretched_coefficient(q, 2) == 6);
  CHECK(stretched_coefficient(q, 3) == 10);
  CHECK(stretched_coefficient(q, 2) >= 3);

  // Zero stays zero under stretching (saturation, contrapositive direction).
  LRQuery zero{P({3, 3}), P({2}), P({2, 1, 1})};
  REQUIRE(lr_coefficient(zero.nu, zero.lambda, zero.mu) == 0);
  CHECK(stretched_coefficient(zero, 2) == 0);

  // Monotone in N on a fixed random sample.
  std::mt19937 rng(23);
  for (int trial = 0; trial < 12; ++trial) {
    Partition lambda = random_partition(rng, 3);
    Partition mu = random_partition(rng, 3);
    for (const Partition& nu : partitions_of(lambda.size() + mu.size())) {
      Int c1 = lr_coefficient(nu, lambda, mu);
      LRQuery query{nu, lambda, mu};
      Int c2 = stretched_coefficient(query, 2);
      Int c3 = stretched_coefficient(query, 3);
      CHECK(c1 <= c2);
      CHECK(c2 <= c3);
    }
  }
  CHECK_THROWS_AS(stretched_coefficient(q, 0), ValidationError);
}

TEST_CASE("skew expansion matches coefficients") {
  Partition nu = P({4, 3, 1});
  for (int k = 0; k <= nu.size(); ++k)
    for (const Partition& lambda : subpartitions_of_size(nu, k)) {
      Decomposition skew = skew_expand(SkewShape(nu, lambda));
      for (const Partition& mu : partitions_of(nu.size() - k)) {
        auto it = skew.find(mu);
        Int expected = it == skew.end() ? Int(0) : it->second;
        CHECK(lr_coefficient(nu, lambda, mu) == expected);
      }
    }
}

TEST_CASE("cache is bounded and thread safe") {
  clear_lr_cache();
  set_lr_cache_capacity(64);
  for (int n = 1; n <= 6; ++n)
    for (const Partition& lambda : partitions_of(n))
      for (const Partition& mu : partitions_of(n))
        lr_coefficient(sum(lambda, mu), lambda, mu);
  CHECK(lr_cache_size() <= 64);

  set_lr_cache_capacity(1000000);
  clear_lr_cache();
  // Concurrent identical queries must agree.
  Partition nu = P({5, 3, 2, 1}), lambda = P({3, 1}), mu = P({4, 2, 1});
  std::vector<std::thread> threads;
  std::vector<Int> results(8);
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) results[t] = lr_coefficient(nu, lambda, mu);
    });
  for (auto& t : threads) t.join();
  for (const Int& r : results) CHECK(r == 3);
}
