#include "gtqft/finite_group.hpp"

#include "gtqft/errors.hpp"

#include <algorithm>
#include <numeric>

namespace gtqft {

namespace {

void check_is_group(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  if (n == 0) throw NotAGroupError("empty table");
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(mul[a].size()) != n)
      throw NotAGroupError("table is not square at row " + std::to_string(a));
    for (int b = 0; b < n; ++b)
      if (mul[a][b] < 0 || mul[a][b] >= n)
        throw NotAGroupError("entry out of range at (" + std::to_string(a) + "," +
                             std::to_string(b) + ")");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw NotAGroupError("associativity fails on triple (" + std::to_string(a) + "," +
                               std::to_string(b) + "," + std::to_string(c) + ")");
}

int find_identity(const std::vector<std::vector<int>>& mul) {
  const int n = static_cast<int>(mul.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
    if (ok) return e;
  }
  throw NotAGroupError("no two-sided identity element");
}

std::vector<int> find_inverses(const std::vector<std::vector<int>>& mul, int e) {
  const int n = static_cast<int>(mul.size());
  std::vector<int> inv(n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (mul[x][y] == e && mul[y][x] == e) {
        inv[x] = y;
        break;
      }
    }
    if (inv[x] < 0) throw NotAGroupError("element " + std::to_string(x) + " has no inverse");
  }
  return inv;
}

} // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table, std::string name,
                                    int max_order) {
  if (static_cast<int>(table.size()) > max_order)
    throw NotAGroupError("order " + std::to_string(table.size()) + " exceeds guard " +
                         std::to_string(max_order));
  check_is_group(table);
  FiniteGroup g;
  g.identity_ = find_identity(table);
  g.inv_ = find_inverses(table, g.identity_);
  g.mul_ = std::move(table);
  g.name_ = std::move(name);
  return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw NotAGroupError("cyclic group needs n >= 1");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
  return from_table(std::move(mul), "Z" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
  if (n < 1 || n > 6)
    throw NotAGroupError("symmetric group guarded to 1 <= n <= 6 (order <= 720)");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  // next_permutation from the identity yields lexicographic order directly.
  const int order = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  std::vector<int> ab(n);
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      // (a*b)(x) = a(b(x)): b applied first.
      for (int x = 0; x < n; ++x) ab[x] = perms[a][perms[b][x]];
      mul[a][b] = index_of(ab);
    }
  }
  return from_table(std::move(mul), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw NotAGroupError("dihedral group needs n >= 1");
  const int order = 2 * n;
  auto rot = [&](int k) { return ((k % n) + n) % n; };
  std::vector<std::vector<int>> mul(order, std::vector<int>(order));
  for (int a = 0; a < order; ++a) {
    for (int b = 0; b < order; ++b) {
      const bool ra = a < n, rb = b < n;
      const int ka = ra ? a : a - n, kb = rb ? b : b - n;
      // r^i r^j = r^{i+j}; r^i (s r^j) = s r^{j-i}; (s r^i) r^j = s r^{i+j};
      // (s r^i)(s r^j) = r^{j-i}.
      int out;
      if (ra && rb) out = rot(ka + kb);
      else if (ra && !rb) out = n + rot(kb - ka);
      else if (!ra && rb) out = n + rot(ka + kb);
      else out = rot(kb - ka);
      mul[a][b] = out;
    }
  }
  return from_table(std::move(mul), "D" + std::to_string(n));
}

std::vector<std::vector<int>> FiniteGroup::conjugacy_classes() const {
  const int n = order();
  std::vector<std::vector<int>> classes;
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<int> cls;
    for (int g = 0; g < n; ++g) {
      const int y = conj(g, x);
      if (!seen[y]) {
        seen[y] = true;
        cls.push_back(y);
      }
    }
    std::sort(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

} // namespace gtqft
