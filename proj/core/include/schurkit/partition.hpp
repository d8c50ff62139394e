#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schurkit/errors.hpp"

namespace schurkit {

// A partition: weakly decreasing sequence of positive integers, stored
// without trailing zeros.  The empty sequence is the zero partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  // Number of boxes of the Young diagram.
  int size() const { return size_; }
  // Number of (nonzero) rows.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 1-based row length; zero beyond length().
  int part(int i) const {
    return (i >= 1 && i <= length()) ? parts_[i - 1] : 0;
  }
  const std::vector<int>& parts() const { return parts_; }

  // Total order: lexicographic on the part sequences.
  std::strong_ordering operator<=>(const Partition& other) const {
    return parts_ <=> other.parts_;
  }
  bool operator==(const Partition& other) const { return parts_ == other.parts_; }

  // Text form "[5,3,2]", "[]" for the zero partition.
  std::string str() const;
  // Accepts "[5,3,2]", "5,3,2", "[]" and exponent notation "[5,3,1^3]".
  static Partition parse(std::string_view text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

// Orders partitions by size, then reverse-lexicographically within a size
// ([n] first, [1^n] last).  This is the canonical output order.
struct ByDegreeRevLex {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return b < a;
  }
};

struct PartitionHash {
  size_t operator()(const Partition& p) const noexcept;
};

// A box of a Young diagram, 1-based.
struct Cell {
  int row = 0;
  int col = 0;
  auto operator<=>(const Cell&) const = default;
};

// Frobenius coordinates (a_1,...,a_r | b_1,...,b_r): arm and leg lengths of
// the r diagonal boxes; both sequences strictly decreasing.
struct FrobeniusCoords {
  std::vector<int> arms;
  std::vector<int> legs;
  int rank() const { return static_cast<int>(arms.size()); }
  bool operator==(const FrobeniusCoords&) const = default;
};

// A skew diagram outer/inner; requires inner to fit inside outer.
struct SkewShape {
  Partition outer;
  Partition inner;
  SkewShape(Partition out, Partition in);
  int size() const { return outer.size() - inner.size(); }
};

enum class StripKind { Horizontal, Vertical };

Partition transpose(const Partition& p);

FrobeniusCoords frobenius(const Partition& p);
Partition from_frobenius(const FrobeniusCoords& f);

// hook(b) = 1 + boxes strictly right + boxes strictly below.
std::map<Cell, int> hook_lengths(const Partition& p);
// cont(b) = col - row.
std::map<Cell, int> contents(const Partition& p);

bool contains(const Partition& outer, const Partition& inner);
std::vector<Cell> skew_cells(const SkewShape& s);

// Horizontal strip: at most one box per column; vertical: per row.
bool is_horizontal_strip(const SkewShape& s);
bool is_vertical_strip(const SkewShape& s);

// All partitions obtained from p by adding a strip of m boxes, in
// lexicographically decreasing order.
std::vector<Partition> add_strips(const Partition& p, int m, StripKind kind);

// Componentwise sum and sorted multiset union of parts.
Partition sum(const Partition& a, const Partition& b);
Partition union_sorted(const Partition& a, const Partition& b);

// Scale every part by a positive integer.
Partition scale(const Partition& p, int n);

// All partitions of n, reverse-lexicographically ([n] first).
std::vector<Partition> partitions_of(int n);
void for_each_partition(int n, const std::function<void(const Partition&)>& fn);

// All sub-diagrams of outer with exactly n boxes, lexicographically decreasing.
std::vector<Partition> subpartitions_of_size(const Partition& outer, int n);

// Removable corner boxes and the partitions obtained by removing one box.
std::vector<Cell> corners(const Partition& p);
std::vector<Partition> remove_one_box(const Partition& p);

}  // namespace schurkit
