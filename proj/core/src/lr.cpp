#include "schurkit/lr.hpp"

#include <algorithm>
#include <list>
#include <mutex>
#include <string>
#include <unordered_map>

namespace schurkit {

namespace {

// ---------------------------------------------------------------------------
// Bounded LRU cache for (nu, lambda, mu) -> coefficient, guarded by a mutex.
// Duplicate concurrent computation of a key is allowed; results are idempotent.

struct LRKey {
  std::vector<int> flat;  // nu, -1, lambda, -1, mu
  bool operator==(const LRKey&) const = default;
};

struct LRKeyHash {
  size_t operator()(const LRKey& k) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : k.flat) {
      h ^= static_cast<size_t>(x + 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

LRKey make_key(const Partition& nu, const Partition& lambda, const Partition& mu) {
  LRKey k;
  k.flat.reserve(nu.length() + lambda.length() + mu.length() + 2);
  for (int x : nu.parts()) k.flat.push_back(x);
  k.flat.push_back(-1);
  for (int x : lambda.parts()) k.flat.push_back(x);
  k.flat.push_back(-1);
  for (int x : mu.parts()) k.flat.push_back(x);
  return k;
}

class LRCache {
 public:
  bool lookup(const LRKey& key, Int& out) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it == map_.end()) return false;
    order_.splice(order_.begin(), order_, it->second.order_it);
    out = it->second.value;
    return true;
  }

  void insert(const LRKey& key, const Int& value) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_.find(key);
    if (it != map_.end()) {
      order_.splice(order_.begin(), order_, it->second.order_it);
      return;
    }
    order_.push_front(key);
    map_.emplace(key, Entry{value, order_.begin()});
    while (map_.size() > capacity_ && !order_.empty()) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

  void set_capacity(size_t cap) {
    std::lock_guard<std::mutex> lock(mutex_);
    capacity_ = cap == 0 ? 1 : cap;
    while (map_.size() > capacity_ && !order_.empty()) {
      map_.erase(order_.back());
      order_.pop_back();
    }
  }

  void clear() {
    std::lock_guard<std::mutex> lock(mutex_);
    map_.clear();
    order_.clear();
  }

  size_t size() {
    std::lock_guard<std::mutex> lock(mutex_);
    return map_.size();
  }

 private:
  struct Entry {
    Int value;
    std::list<LRKey>::iterator order_it;
  };
  std::mutex mutex_;
  size_t capacity_ = 1000000;
  std::list<LRKey> order_;
  std::unordered_map<LRKey, Entry, LRKeyHash> map_;
};

LRCache& cache() {
  static LRCache instance;
  return instance;
}

// ---------------------------------------------------------------------------
// Backtracking enumeration over the cells of nu/lambda in reading order
// (each row right to left, top row first).  The lattice-word prefix counts
// are maintained incrementally, so every constraint check is O(1).

struct LRSearch {
  const Partition& nu;
  const Partition& lambda;
  const Partition& mu;
  std::vector<Cell> cells;                  // reading order
  std::vector<std::vector<int>> grid;       // grid[r-1][c-1], 0 = unfilled
  std::vector<int> counts;                  // counts[v] = placed entries equal to v
  Int total = 0;
  std::vector<LRTableau>* collect = nullptr;

  LRSearch(const Partition& n, const Partition& l, const Partition& m)
      : nu(n), lambda(l), mu(m) {
    for (int r = 1; r <= nu.length(); ++r)
      for (int c = nu.part(r); c > lambda.part(r); --c) cells.push_back({r, c});
    grid.assign(nu.length(), {});
    for (int r = 1; r <= nu.length(); ++r) grid[r - 1].assign(nu.part(r), 0);
    counts.assign(mu.length() + 2, 0);
  }

  void emit() {
    if (!collect) {
      ++total;
      return;
    }
    LRTableau t;
    t.nu = nu;
    t.lambda = lambda;
    t.rows.resize(nu.length());
    for (int r = 1; r <= nu.length(); ++r)
      for (int c = lambda.part(r) + 1; c <= nu.part(r); ++c)
        t.rows[r - 1].push_back(grid[r - 1][c - 1]);
    collect->push_back(t);
  }

  void run(size_t idx) {
    if (idx == cells.size()) {
      emit();
      return;
    }
    auto [r, c] = cells[idx];
    // Weak increase along the row: bounded above by the right neighbour.
    int hi = std::min(r, mu.length());
    if (c < nu.part(r)) hi = std::min(hi, grid[r - 1][c]);
    // Strict increase down the column (the box above is filled iff it lies in
    // the skew part; boxes of the inner shape impose nothing).
    int lo = 1;
    if (r > 1 && c > lambda.part(r - 1)) lo = grid[r - 2][c - 1] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (counts[v] >= mu.part(v)) continue;              // content exhausted
      if (v > 1 && counts[v] >= counts[v - 1]) continue;  // lattice prefix
      grid[r - 1][c - 1] = v;
      ++counts[v];
      run(idx + 1);
      --counts[v];
      grid[r - 1][c - 1] = 0;
    }
  }
};

Int lr_count_direct(const Partition& nu, const Partition& lambda, const Partition& mu) {
  LRSearch search(nu, lambda, mu);
  search.run(0);
  return search.total;
}

bool lr_trivially_zero(const Partition& nu, const Partition& lambda, const Partition& mu) {
  return nu.size() != lambda.size() + mu.size() || !contains(nu, lambda) ||
         !contains(nu, mu);
}

// ---------------------------------------------------------------------------
// Layered strip insertion: place all entries equal to i as a horizontal strip,
// i = 1, 2, ...; the lattice condition becomes a per-row cumulative bound
// against the previous layer.

struct LayerExpand {
  const Partition& mu;
  Decomposition& out;

  // cum_prev[r-1] = number of (layer-1)-entries in rows 1..r; sized so that
  // every row index touched this layer is valid.
  void next_layer(int layer, const std::vector<int>& shape,
                  const std::vector<int>& cum_prev) {
    if (layer > mu.length()) {
      out[Partition(shape)] += 1;
      return;
    }
    std::vector<int> grown = shape;
    grown.push_back(0);  // a strip may open one new row
    std::vector<int> cum(grown.size(), 0);
    place_row(layer, 1, mu.part(layer), shape, grown, cum_prev, cum);
  }

  void place_row(int layer, int row, int remaining, const std::vector<int>& base,
                 std::vector<int>& grown, const std::vector<int>& cum_prev,
                 std::vector<int>& cum) {
    if (remaining == 0) {
      // Rows below receive nothing; finish the cumulative profile.
      int placed = row >= 2 ? cum[row - 2] : 0;
      for (int r = row; r <= static_cast<int>(grown.size()); ++r)
        cum[r - 1] = placed;
      std::vector<int> trimmed = grown;
      while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
      next_layer(layer + 1, trimmed, cum);
      return;
    }
    if (row > static_cast<int>(grown.size())) return;
    int old_len = row <= static_cast<int>(base.size()) ? base[row - 1] : 0;
    int cum_before = row >= 2 ? cum[row - 2] : 0;
    // Strip shape: row may not grow past the previous row's old length
    // (row 1 grows freely).  Lattice: this layer's entries in rows 1..row may
    // not outnumber the previous layer's entries in rows 1..row-1; the first
    // layer has no predecessor constraint.
    int shape_cap = row == 1 ? remaining : base[row - 2] - old_len;
    int lattice_cap = layer == 1 ? remaining
                                 : (row >= 2 ? cum_prev[row - 2] : 0) - cum_before;
    int cap = std::min({remaining, shape_cap, lattice_cap});
    for (int add = cap; add >= 0; --add) {
      grown[row - 1] = old_len + add;
      cum[row - 1] = cum_before + add;
      place_row(layer, row + 1, remaining - add, base, grown, cum_prev, cum);
      grown[row - 1] = old_len;
      cum[row - 1] = cum_before;
    }
  }
};

}  // namespace

std::vector<int> LRTableau::reading_word() const {
  std::vector<int> word;
  for (const auto& row : rows)
    for (auto it = row.rbegin(); it != row.rend(); ++it) word.push_back(*it);
  return word;
}

std::string LRTableau::reading_word_str() const {
  std::string s;
  for (int v : reading_word()) s += std::to_string(v);
  return s;
}

Int lr_coefficient(const Partition& nu, const Partition& lambda, const Partition& mu) {
  if (lr_trivially_zero(nu, lambda, mu)) return 0;
  if (mu.empty()) return 1;
  // Swapping the factors keeps the value and fills fewer cells when the
  // second content is smaller.
  const Partition& inner = lambda.size() >= mu.size() ? lambda : mu;
  const Partition& content = lambda.size() >= mu.size() ? mu : lambda;
  LRKey key = make_key(nu, inner, content);
  Int value;
  if (cache().lookup(key, value)) return value;
  value = lr_count_direct(nu, inner, content);
  cache().insert(key, value);
  return value;
}

Int lr_coefficient(const LRQuery& q) {
  return lr_coefficient(q.nu, q.lambda, q.mu);
}

std::vector<LRTableau> lr_tableaux(const LRQuery& q) {
  std::vector<LRTableau> out;
  if (lr_trivially_zero(q.nu, q.lambda, q.mu)) return out;
  LRSearch search(q.nu, q.lambda, q.mu);
  search.collect = &out;
  search.run(0);
  return out;
}

Decomposition tensor_expand_generic(const Partition& lambda, const Partition& mu) {
  Decomposition out;
  LayerExpand expander{mu, out};
  std::vector<int> cum_unused(lambda.length() + 2, 0);
  expander.next_layer(1, lambda.parts(), cum_unused);
  return out;
}

Decomposition tensor_expand(const Partition& lambda, const Partition& mu) {
  // Pieri fast paths: single row / single column contents are strip sums.
  auto strips_to_decomposition = [](std::vector<Partition> strips) {
    Decomposition out;
    for (Partition& p : strips) out[std::move(p)] = 1;
    return out;
  };
  if (mu.length() <= 1)
    return strips_to_decomposition(
        add_strips(lambda, mu.size(), StripKind::Horizontal));
  if (mu.part(1) == 1)
    return strips_to_decomposition(
        add_strips(lambda, mu.size(), StripKind::Vertical));
  if (lambda.length() <= 1)
    return strips_to_decomposition(
        add_strips(mu, lambda.size(), StripKind::Horizontal));
  if (lambda.part(1) == 1)
    return strips_to_decomposition(
        add_strips(mu, lambda.size(), StripKind::Vertical));
  return tensor_expand_generic(lambda, mu);
}

Decomposition skew_expand(const SkewShape& s) {
  // Enumerate lattice fillings of the skew shape with unconstrained content;
  // each filling contributes once to its content partition.
  Decomposition out;
  struct Search {
    const Partition& nu;
    const Partition& lambda;
    std::vector<Cell> cells;
    std::vector<std::vector<int>> grid;
    std::vector<int> counts;
    Decomposition& out;

    void run(size_t idx) {
      if (idx == cells.size()) {
        std::vector<int> content;
        for (size_t v = 1; v < counts.size() && counts[v] > 0; ++v)
          content.push_back(counts[v]);
        out[Partition(std::move(content))] += 1;
        return;
      }
      auto [r, c] = cells[idx];
      int hi = r;
      if (c < nu.part(r)) hi = std::min(hi, grid[r - 1][c]);
      int lo = 1;
      if (r > 1 && c > lambda.part(r - 1)) lo = grid[r - 2][c - 1] + 1;
      for (int v = lo; v <= hi; ++v) {
        if (v > 1 && counts[v] >= counts[v - 1]) continue;
        grid[r - 1][c - 1] = v;
        ++counts[v];
        run(idx + 1);
        --counts[v];
        grid[r - 1][c - 1] = 0;
      }
    }
  };
  Search search{s.outer, s.inner, {}, {}, {}, out};
  for (int r = 1; r <= s.outer.length(); ++r)
    for (int c = s.outer.part(r); c > s.inner.part(r); --c)
      search.cells.push_back({r, c});
  search.grid.assign(s.outer.length(), {});
  for (int r = 1; r <= s.outer.length(); ++r)
    search.grid[r - 1].assign(s.outer.part(r), 0);
  search.counts.assign(s.outer.length() + 2, 0);
  search.run(0);
  return out;
}

BranchDecomposition restrict_branch(const Partition& nu, int n, int m) {
  if (n < 0 || m < 0 || n + m != nu.size())
    throw ValidationError("restriction split must be non-negative and sum to " +
                          std::to_string(nu.size()));
  BranchDecomposition out;
  for (const Partition& lambda : subpartitions_of_size(nu, n)) {
    Decomposition skew = skew_expand(SkewShape(nu, lambda));
    for (auto& [mu, mult] : skew) out[{lambda, mu}] += mult;
  }
  return out;
}

BranchDecomposition restrict_branch_all(const Partition& nu) {
  BranchDecomposition out;
  for (int n = 0; n <= nu.size(); ++n) {
    BranchDecomposition part = restrict_branch(nu, n, nu.size() - n);
    out.insert(part.begin(), part.end());
  }
  return out;
}

Int stretched_coefficient(const LRQuery& q, int N) {
  if (N < 1) throw ValidationError("stretch factor must be positive");
  return lr_coefficient(scale(q.nu, N), scale(q.lambda, N), scale(q.mu, N));
}

void set_lr_cache_capacity(std::size_t entries) { cache().set_capacity(entries); }
void clear_lr_cache() { cache().clear(); }
std::size_t lr_cache_size() { return cache().size(); }

}  // namespace schurkit
