#include "fmlab/group.hpp"

#include <algorithm>
#include <array>

namespace fmlab {

Report validate(const FinGroup& g) {
  Report r;
  int n = g.order;
  bool shape = n >= 1 && static_cast<int>(g.cayley.size()) == n;
  for (const auto& row : g.cayley) shape = shape && static_cast<int>(row.size()) == n;
  if (!r.check("cayley table is n x n", shape)) return r;
  bool range = true, latin = true;
  for (const auto& row : g.cayley) {
    std::vector<int> seen(static_cast<size_t>(n), 0);
    for (int x : row) {
      if (x < 0 || x >= n) {
        range = false;
        continue;
      }
      ++seen[static_cast<size_t>(x)];
    }
    latin = latin && std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
  }
  if (!r.check("entries in range", range)) return r;
  r.check("rows are permutations", latin);
  bool assoc = true;
  for (int a = 0; a < n && assoc; ++a)
    for (int b = 0; b < n && assoc; ++b)
      for (int c = 0; c < n && assoc; ++c) assoc = g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c));
  r.check("associative", assoc);
  bool ident = g.identity >= 0 && g.identity < n;
  for (int a = 0; a < n && ident; ++a) ident = g.mul(g.identity, a) == a && g.mul(a, g.identity) == a;
  r.check("identity", ident);
  bool inv = static_cast<int>(g.inverse.size()) == n;
  for (int a = 0; a < n && inv && ident; ++a) {
    int b = g.inverse[static_cast<size_t>(a)];
    inv = b >= 0 && b < n && g.mul(a, b) == g.identity && g.mul(b, a) == g.identity;
  }
  r.check("inverses", inv);
  return r;
}

GroupPtr make_group(std::vector<std::vector<int>> cayley, std::string name) {
  FinGroup g;
  g.order = static_cast<int>(cayley.size());
  g.cayley = std::move(cayley);
  g.name = name.empty() ? "G" + std::to_string(g.order) : std::move(name);
  g.identity = -1;
  for (int e = 0; e < g.order && g.identity < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < g.order && ok; ++a) {
      const auto& row = g.cayley[static_cast<size_t>(e)];
      ok = static_cast<int>(row.size()) == g.order && row[static_cast<size_t>(a)] == a &&
           static_cast<int>(g.cayley[static_cast<size_t>(a)].size()) == g.order &&
           g.cayley[static_cast<size_t>(a)][static_cast<size_t>(e)] == a;
    }
    if (ok) g.identity = e;
  }
  if (g.identity < 0) throw PreconditionError("group table has no identity");
  g.inverse.assign(static_cast<size_t>(g.order), -1);
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      if (g.mul(a, b) == g.identity) g.inverse[static_cast<size_t>(a)] = b;
  Report r = validate(g);
  if (!r.ok()) throw PreconditionError("not a group: " + r.summary());
  return std::make_shared<const FinGroup>(std::move(g));
}

GroupPtr trivial_group() {
  static GroupPtr g = make_group({{0}}, "1");
  return g;
}

GroupPtr cyclic_group(int n) {
  if (n < 1) throw PreconditionError("cyclic group needs n >= 1");
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
  return make_group(std::move(t), n == 1 ? "1" : "Z" + std::to_string(n));
}

GroupPtr symmetric_group3() {
  // Elements as permutations of {0,1,2}, listed in lexicographic order.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index = [&](const std::array<int, 3>& p) {
    return static_cast<int>(std::find(perms.begin(), perms.end(), p) - perms.begin());
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[static_cast<size_t>(i)] = perms[static_cast<size_t>(a)][static_cast<size_t>(perms[static_cast<size_t>(b)][static_cast<size_t>(i)])];
      t[static_cast<size_t>(a)][static_cast<size_t>(b)] = index(c);
    }
  return make_group(std::move(t), "S3");
}

}  // namespace fmlab
