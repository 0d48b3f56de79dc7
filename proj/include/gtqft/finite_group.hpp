#pragma once

#include <string>
#include <vector>

namespace gtqft {

/// A finite group as a validated Cayley table over dense element indices
/// 0..order-1. Immutable after construction, so instances can be shared
/// freely across threads. Construction validates the full group axioms and
/// precomputes the inverse table.
class FiniteGroup {
public:
  /// Z_n with mul(i,j) = (i+j) mod n.
  static FiniteGroup cyclic(int n);

  /// S_n, elements ordered lexicographically by one-line notation, so the
  /// identity permutation is element 0. Guarded at n <= 6.
  static FiniteGroup symmetric(int n);

  /// Dihedral group of order 2n: rotations r^k at indices 0..n-1, then
  /// reflections s*r^k at indices n..2n-1.
  static FiniteGroup dihedral(int n);

  /// Validates the table (associativity, two-sided identity, inverses) and
  /// throws NotAGroupError naming the failing element or triple.
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::string name = "table",
                                int max_order = kDefaultMaxOrder);

  int order() const { return static_cast<int>(inv_.size()); }
  int mul(int a, int b) const { return mul_[a][b]; }
  int inv(int a) const { return inv_[a]; }
  int identity() const { return identity_; }
  int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return mul_; }

  /// Partition of elements into conjugacy classes. Classes are ordered by
  /// minimal member and each class is sorted, so output is deterministic.
  std::vector<std::vector<int>> conjugacy_classes() const;

  // Enumeration cost downstream is |G|^#generators, so group order is the
  // primary safety valve.
  static constexpr int kDefaultMaxOrder = 720;

private:
  FiniteGroup() = default;

  std::string name_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_ = 0;
};

} // namespace gtqft
