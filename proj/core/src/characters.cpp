#include "schurkit/characters.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "schurkit/errors.hpp"

namespace schurkit {

namespace {

// Memo for the border-strip recursion, keyed by (lambda, rho).
struct CharKey {
  std::vector<int> flat;
  bool operator==(const CharKey&) const = default;
};

struct CharKeyHash {
  size_t operator()(const CharKey& k) const noexcept {
    size_t h = 1469598103934665603ull;
    for (int x : k.flat) {
      h ^= static_cast<size_t>(x + 2);
      h *= 1099511628211ull;
    }
    return h;
  }
};

std::mutex char_cache_mutex;
std::unordered_map<CharKey, Int, CharKeyHash> char_cache;

// Beta-set of a partition: strictly decreasing {lambda_i + (len - i)}.
std::vector<int> beta_set(const Partition& p, int len) {
  std::vector<int> beta(len);
  for (int i = 1; i <= len; ++i) beta[i - 1] = p.part(i) + (len - i);
  return beta;
}

Partition partition_from_beta(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<int>());
  int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 1; i <= len; ++i) {
    int part = beta[i - 1] - (len - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

// chi_lambda(rho), peeling a border strip of size rho[idx] (parts taken
// largest first).  Removing a strip of size k moves one beta element from b
// to b-k; the strip height is the number of beta elements jumped over.
Int mn_rec(const Partition& lambda, const Partition& rho, int idx) {
  if (idx > rho.length()) return 1;  // empty diagram left
  int k = rho.part(idx);
  CharKey key;
  for (int x : lambda.parts()) key.flat.push_back(x);
  key.flat.push_back(-1);
  for (int i = idx; i <= rho.length(); ++i) key.flat.push_back(rho.part(i));
  {
    std::lock_guard<std::mutex> lock(char_cache_mutex);
    auto it = char_cache.find(key);
    if (it != char_cache.end()) return it->second;
  }
  std::vector<int> beta = beta_set(lambda, lambda.length());
  Int total = 0;
  for (size_t i = 0; i < beta.size(); ++i) {
    int target = beta[i] - k;
    if (target < 0) continue;
    bool occupied = false;
    int jumped = 0;
    for (size_t j = 0; j < beta.size(); ++j) {
      if (j == i) continue;
      if (beta[j] == target) occupied = true;
      if (beta[j] > target && beta[j] < beta[i]) ++jumped;
    }
    if (occupied) continue;
    std::vector<int> next = beta;
    next[i] = target;
    Int sub = mn_rec(partition_from_beta(std::move(next)), rho, idx + 1);
    total += (jumped % 2 == 0) ? sub : -sub;
  }
  std::lock_guard<std::mutex> lock(char_cache_mutex);
  char_cache.emplace(std::move(key), total);
  return total;
}

}  // namespace

Int class_size_normalizer(const Partition& rho) {
  Int z = 1;
  int run_value = 0, run_count = 0;
  auto flush = [&] {
    for (int c = 1; c <= run_count; ++c) z *= c;  // m_i!
  };
  for (int i = 1; i <= rho.length(); ++i) {
    int v = rho.part(i);
    z *= v;  // i^{m_i} accumulated one factor at a time
    if (v == run_value) {
      ++run_count;
    } else {
      flush();
      run_value = v;
      run_count = 1;
    }
  }
  flush();
  return z;
}

Int mn_character(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size())
    throw ValidationError("character requires |lambda| = |rho|, got " +
                          lambda.str() + " vs " + rho.str());
  return mn_rec(lambda, rho, 1);
}

Int dim_sym_hook(const Partition& lambda) {
  Int num = factorial(lambda.size());
  Int den = 1;
  for (const auto& [cell, hook] : hook_lengths(lambda)) den *= hook;
  return exact_div(num, den);
}

Int dim_sym_det(const Partition& lambda) {
  // n! det(1/(lambda_i - i + j)!) with 1/r! = 0 for r < 0.  Clearing row i by
  // (lambda_i - i + len)! turns the matrix into exact integers; the
  // determinant is evaluated by fraction-free (Bareiss) elimination.
  int len = lambda.length();
  if (len == 0) return 1;
  std::vector<std::vector<Int>> m(len, std::vector<Int>(len));
  std::vector<Int> row_scale(len);
  for (int i = 1; i <= len; ++i) {
    int top = lambda.part(i) - i + len;
    row_scale[i - 1] = factorial(top);  // top >= 0: lambda_i - i + len >= len - i >= 0
    for (int j = 1; j <= len; ++j) {
      int r = lambda.part(i) - i + j;
      if (r < 0) {
        m[i - 1][j - 1] = 0;
      } else {
        Int v = 1;  // top! / r! = (r+1)(r+2)...(top)
        for (int t = r + 1; t <= top; ++t) v *= t;
        m[i - 1][j - 1] = v;
      }
    }
  }
  // Bareiss elimination; determinant ends in m[len-1][len-1].
  Int sign = 1, prev = 1;
  for (int k = 0; k < len - 1; ++k) {
    if (m[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < len; ++i)
        if (m[i][k] != 0) {
          swap_row = i;
          break;
        }
      if (swap_row < 0) return 0;  // singular: zero column
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < len; ++i) {
      for (int j = k + 1; j < len; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int det_scaled = sign * m[len - 1][len - 1];
  Int den = 1;
  for (const Int& s : row_scale) den *= s;
  return exact_div(factorial(lambda.size()) * det_scaled, den);
}

Int dim_gl(const Partition& lambda, int n) {
  if (n < 0) throw ValidationError("rank must be non-negative");
  if (lambda.length() > n) return 0;
  Int num = 1, den = 1;
  Partition t = transpose(lambda);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i); ++j) {
      num *= n + (j - i);
      den *= (lambda.part(i) - j) + (t.part(j) - i) + 1;
    }
  return exact_div(num, den);
}

Int kronecker(const Partition& lambda, const Partition& mu, const Partition& nu) {
  int n = lambda.size();
  if (mu.size() != n || nu.size() != n) return 0;
  // g = sum_rho chi_lambda(rho) chi_mu(rho) chi_nu(rho) / z_rho, summed as
  // (n!/z_rho)-weighted integers and divided by n! at the end.
  Int total = 0;
  Int nfact = factorial(n);
  for_each_partition(n, [&](const Partition& rho) {
    Int weight = exact_div(nfact, class_size_normalizer(rho));
    total += weight * mn_character(lambda, rho) * mn_character(mu, rho) *
             mn_character(nu, rho);
  });
  return exact_div(total, nfact);
}

CharacterTable::CharacterTable(int n) : n_(n), labels_(partitions_of(n)) {
  values_.resize(labels_.size());
  for (size_t i = 0; i < labels_.size(); ++i) {
    values_[i].resize(labels_.size());
    for (size_t j = 0; j < labels_.size(); ++j)
      values_[i][j] = mn_character(labels_[i], labels_[j]);
  }
}

const Int& CharacterTable::value(const Partition& irrep, const Partition& cls) const {
  auto find = [&](const Partition& p) {
    auto it = std::find(labels_.begin(), labels_.end(), p);
    if (it == labels_.end())
      throw ValidationError("partition " + p.str() + " is not a partition of " +
                            std::to_string(n_));
    return static_cast<size_t>(it - labels_.begin());
  };
  return values_[find(irrep)][find(cls)];
}

std::string CharacterTable::to_csv() const {
  std::ostringstream os;
  os << "\"irrep\\class\"";
  for (const Partition& cls : labels_) os << ",\"" << cls.str() << "\"";
  os << "\n";
  for (size_t i = 0; i < labels_.size(); ++i) {
    os << "\"" << labels_[i].str() << "\"";
    for (size_t j = 0; j < labels_.size(); ++j) os << "," << values_[i][j];
    os << "\n";
  }
  return os.str();
}

CharacterTable character_table(int n, int limit) {
  if (n < 0) throw ValidationError("table degree must be non-negative");
  if (n > limit)
    throw ResourceLimitError("character table degree " + std::to_string(n) +
                             " exceeds the configured limit " +
                             std::to_string(limit));
  return CharacterTable(n);
}

void clear_character_cache() {
  std::lock_guard<std::mutex> lock(char_cache_mutex);
  char_cache.clear();
}

}  // namespace schurkit
