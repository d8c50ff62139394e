#include "schurkit/partition.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <sstream>

namespace schurkit {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw ValidationError("partition parts must be positive: " +
                            std::to_string(parts_[i]));
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

std::string Partition::str() const {
  std::string out = "[";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts_[i]);
  }
  out += ']';
  return out;
}

Partition Partition::parse(std::string_view text) {
  // Strip whitespace and one layer of enclosing brackets/parens.
  std::string s;
  for (char c : text)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && (s.front() == '[' || s.front() == '(')) {
    char close = s.front() == '[' ? ']' : ')';
    if (s.back() != close)
      throw ValidationError("unbalanced brackets in partition: " + std::string(text));
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos
                                                               : comma - pos);
    pos = comma == std::string::npos ? s.size() : comma + 1;
    if (tok.empty()) throw ValidationError("empty entry in partition: " + std::string(text));
    int value = 0, repeat = 1;
    size_t caret = tok.find('^');
    std::string head = caret == std::string::npos ? tok : tok.substr(0, caret);
    auto parse_int = [&](const std::string& t, int& out) {
      auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
      if (ec != std::errc() || p != t.data() + t.size())
        throw ValidationError("bad integer '" + t + "' in partition: " + std::string(text));
    };
    parse_int(head, value);
    if (caret != std::string::npos) {
      parse_int(tok.substr(caret + 1), repeat);
      if (repeat < 0) throw ValidationError("negative exponent in partition");
    }
    for (int i = 0; i < repeat; ++i) parts.push_back(value);
  }
  return Partition(std::move(parts));
}

std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << p.str();
}

size_t PartitionHash::operator()(const Partition& p) const noexcept {
  size_t h = 1469598103934665603ull;
  for (int x : p.parts()) {
    h ^= static_cast<size_t>(x);
    h *= 1099511628211ull;
  }
  return h;
}

SkewShape::SkewShape(Partition out, Partition in)
    : outer(std::move(out)), inner(std::move(in)) {
  if (!contains(outer, inner))
    throw ValidationError("skew shape requires inner " + inner.str() +
                          " to fit inside outer " + outer.str());
}

Partition transpose(const Partition& p) {
  if (p.empty()) return Partition();
  std::vector<int> t(p.part(1));
  for (int i = 1; i <= static_cast<int>(t.size()); ++i) {
    int count = 0;
    for (int j = 1; j <= p.length(); ++j)
      if (p.part(j) >= i) ++count;
    t[i - 1] = count;
  }
  return Partition(std::move(t));
}

FrobeniusCoords frobenius(const Partition& p) {
  FrobeniusCoords f;
  Partition t = transpose(p);
  for (int i = 1; i <= p.length() && p.part(i) >= i; ++i) {
    f.arms.push_back(p.part(i) - i);
    f.legs.push_back(t.part(i) - i);
  }
  return f;
}

Partition from_frobenius(const FrobeniusCoords& f) {
  if (f.arms.size() != f.legs.size())
    throw ValidationError("Frobenius coordinates need equally many arms and legs");
  auto strictly_decreasing = [](const std::vector<int>& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] < 0) return false;
      if (i > 0 && v[i] >= v[i - 1]) return false;
    }
    return true;
  };
  if (!strictly_decreasing(f.arms) || !strictly_decreasing(f.legs))
    throw ValidationError("Frobenius arms and legs must be strictly decreasing");
  int r = f.rank();
  std::vector<int> parts;
  for (int i = 1; i <= r; ++i) parts.push_back(f.arms[i - 1] + i);
  // Row i > r has one box for each diagonal column j whose height b_j + j
  // reaches it.
  for (int i = r + 1;; ++i) {
    int len = 0;
    for (int j = 1; j <= r; ++j)
      if (f.legs[j - 1] + j >= i) ++len;
    if (len == 0) break;
    parts.push_back(len);
  }
  return Partition(std::move(parts));
}

std::map<Cell, int> hook_lengths(const Partition& p) {
  std::map<Cell, int> out;
  Partition t = transpose(p);
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      out[{i, j}] = (p.part(i) - j) + (t.part(j) - i) + 1;
  return out;
}

std::map<Cell, int> contents(const Partition& p) {
  std::map<Cell, int> out;
  for (int i = 1; i <= p.length(); ++i)
    for (int j = 1; j <= p.part(i); ++j)
      out[{i, j}] = j - i;
  return out;
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (int i = 1; i <= inner.length(); ++i)
    if (inner.part(i) > outer.part(i)) return false;
  return true;
}

std::vector<Cell> skew_cells(const SkewShape& s) {
  std::vector<Cell> cells;
  for (int i = 1; i <= s.outer.length(); ++i)
    for (int j = s.inner.part(i) + 1; j <= s.outer.part(i); ++j)
      cells.push_back({i, j});
  return cells;
}

bool is_horizontal_strip(const SkewShape& s) {
  // At most one added box per column <=> interlacing inner_{i-1} >= outer_i.
  for (int i = 2; i <= s.outer.length(); ++i)
    if (s.outer.part(i) > s.inner.part(i - 1)) return false;
  return true;
}

bool is_vertical_strip(const SkewShape& s) {
  for (int i = 1; i <= s.outer.length(); ++i)
    if (s.outer.part(i) - s.inner.part(i) > 1) return false;
  return true;
}

namespace {

void add_horizontal_strips_rec(const Partition& p, int row, int remaining,
                               std::vector<int>& acc,
                               std::vector<Partition>& out) {
  // A horizontal strip can create at most one row below the diagram.
  int max_row = p.length() + 1;
  if (row > max_row) return;
  // Upper bound for the new row length: interlacing with the previous old row,
  // unbounded growth only in row 1.
  int lo = p.part(row);
  int hi = row == 1 ? p.part(1) + remaining : std::min(p.part(row - 1), p.part(row) + remaining);
  for (int len = hi; len >= lo; --len) {
    int used = len - p.part(row);
    if (used > remaining) continue;
    acc.push_back(len);
    int rest = remaining - used;
    if (rest == 0) {
      std::vector<int> parts = acc;
      for (int r = row + 1; r <= p.length(); ++r) parts.push_back(p.part(r));
      out.push_back(Partition(std::move(parts)));
    } else if (row < max_row) {
      add_horizontal_strips_rec(p, row + 1, rest, acc, out);
    }
    acc.pop_back();
  }
}

}  // namespace

std::vector<Partition> add_strips(const Partition& p, int m, StripKind kind) {
  if (m < 0) throw ValidationError("strip size must be non-negative");
  std::vector<Partition> out;
  if (kind == StripKind::Horizontal) {
    if (m == 0) return {p};
    std::vector<int> acc;
    add_horizontal_strips_rec(p, 1, m, acc, out);
  } else {
    for (const Partition& q : add_strips(transpose(p), m, StripKind::Horizontal))
      out.push_back(transpose(q));
    std::sort(out.begin(), out.end(),
              [](const Partition& a, const Partition& b) { return b < a; });
  }
  return out;
}

Partition sum(const Partition& a, const Partition& b) {
  std::vector<int> parts;
  int len = std::max(a.length(), b.length());
  for (int i = 1; i <= len; ++i) parts.push_back(a.part(i) + b.part(i));
  return Partition(std::move(parts));
}

Partition union_sorted(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition scale(const Partition& p, int n) {
  if (n < 0) throw ValidationError("scale factor must be non-negative");
  std::vector<int> parts;
  for (int x : p.parts())
    if (x * n > 0) parts.push_back(x * n);
  return Partition(std::move(parts));
}

namespace {

void partitions_rec(int remaining, int maxpart, std::vector<int>& acc,
                    const std::function<void(const Partition&)>& fn) {
  if (remaining == 0) {
    fn(Partition(acc));
    return;
  }
  for (int next = std::min(maxpart, remaining); next >= 1; --next) {
    acc.push_back(next);
    partitions_rec(remaining - next, next, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const Partition&)>& fn) {
  if (n < 0) throw ValidationError("partition size must be non-negative");
  std::vector<int> acc;
  partitions_rec(n, n, acc, fn);
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

namespace {

void subpartitions_rec(const Partition& outer, int row, int remaining, int cap,
                       std::vector<int>& acc, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.push_back(Partition(acc));
    return;
  }
  if (row > outer.length()) return;
  int hi = std::min({cap, outer.part(row), remaining});
  for (int len = hi; len >= 1; --len) {
    acc.push_back(len);
    subpartitions_rec(outer, row + 1, remaining - len, len, acc, out);
    acc.pop_back();
  }
  // Skipping a row entirely ends the partition; only the remaining == 0 branch
  // above can emit, so nothing to do here.
}

}  // namespace

std::vector<Partition> subpartitions_of_size(const Partition& outer, int n) {
  std::vector<Partition> out;
  if (n < 0 || n > outer.size()) return out;
  std::vector<int> acc;
  subpartitions_rec(outer, 1, n, outer.part(1), acc, out);
  return out;
}

std::vector<Cell> corners(const Partition& p) {
  std::vector<Cell> out;
  for (int i = 1; i <= p.length(); ++i)
    if (p.part(i) > p.part(i + 1)) out.push_back({i, p.part(i)});
  return out;
}

std::vector<Partition> remove_one_box(const Partition& p) {
  std::vector<Partition> out;
  for (const Cell& c : corners(p)) {
    std::vector<int> parts = p.parts();
    parts[c.row - 1] -= 1;
    out.push_back(Partition(std::move(parts)));
  }
  return out;
}

}  // namespace schurkit
