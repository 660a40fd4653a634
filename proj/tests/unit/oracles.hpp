#pragma once

// Brute-force reference computations used only by the tests. They work on
// explicit exponent sets and never call into the library's order or Hopf
// code.

#include <algorithm>
#include <deque>
#include <set>
#include <utility>
#include <vector>

namespace oracle {

// A segment on a single line as its explicit exponent set.
using ExpSet = std::set<int>;
using Multi = std::multiset<ExpSet>;

inline ExpSet range(int a, int b, int step = 1) {
  ExpSet s;
  for (int e = a; e <= b; e += step) s.insert(e);
  return s;
}

inline bool is_progression(const ExpSet& s, int step) {
  if (s.empty()) return false;
  int prev = *s.begin();
  for (auto it = std::next(s.begin()); it != s.end(); ++it) {
    if (*it != prev + step) return false;
    prev = *it;
  }
  return true;
}

inline bool linked(const ExpSet& x, const ExpSet& y, int step) {
  if (x.empty() || y.empty()) return false;
  if ((*x.begin() - *y.begin()) % step != 0) return false;
  ExpSet u = x;
  u.insert(y.begin(), y.end());
  return is_progression(u, step) && u != x && u != y;
}

inline std::vector<Multi> children(const Multi& m, int step) {
  std::vector<Multi> out;
  std::vector<ExpSet> v(m.begin(), m.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = i + 1; j < v.size(); ++j) {
      if (!linked(v[i], v[j], step)) continue;
      ExpSet u = v[i], in;
      u.insert(v[j].begin(), v[j].end());
      std::set_intersection(v[i].begin(), v[i].end(), v[j].begin(), v[j].end(),
                            std::inserter(in, in.begin()));
      Multi next;
      for (std::size_t k = 0; k < v.size(); ++k)
        if (k != i && k != j) next.insert(v[k]);
      next.insert(u);
      if (!in.empty()) next.insert(in);
      out.push_back(next);
    }
  return out;
}

inline std::set<Multi> down_set(const Multi& top, int step) {
  std::set<Multi> seen{top};
  std::deque<Multi> q{top};
  while (!q.empty()) {
    auto cur = q.front();
    q.pop_front();
    for (auto& c : children(cur, step))
      if (seen.insert(c).second) q.push_back(c);
  }
  return seen;
}

inline bool below(const Multi& a, const Multi& b, int step) { return down_set(b, step).contains(a); }

// Philip Hall: mu(a, b) = sum over chains a = x0 < x1 < ... < xk = b of (-1)^k.
inline long long hall_moebius(const Multi& a, const Multi& b, int step) {
  if (a == b) return 1;
  const auto elems = down_set(b, step);
  std::vector<Multi> between;
  for (const auto& x : elems)
    if (x != a && below(a, x, step)) between.push_back(x);  // a < x <= b
  long long total = 0;
  // chains from a: extend one strict step at a time
  auto count = [&](auto&& self, const Multi& from, int sign) -> void {
    for (const auto& x : between) {
      if (x == from || !below(from, x, step)) continue;
      if (x == b)
        total += -sign;
      else
        self(self, x, -sign);
    }
  };
  count(count, a, 1);
  return total;
}

// All permutations of {1..n} (1-based images) satisfying the shuffle
// conditions, by filtering n! candidates.
inline std::vector<std::vector<int>> shuffles(const std::vector<int>& l1,
                                              const std::vector<int>& l2) {
  int n = 0;
  for (int b : l1) n += b;
  auto section = [](const std::vector<int>& l) {
    std::vector<int> out;
    for (std::size_t i = 0; i < l.size(); ++i)
      for (int k = 0; k < l[i]; ++k) out.push_back(static_cast<int>(i));
    return out;
  };
  const auto s1 = section(l1), s2 = section(l2);
  std::vector<int> w(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) inv[static_cast<std::size_t>(w[static_cast<std::size_t>(x)] - 1)] = x + 1;
    for (int x = 0; x + 1 < n && ok; ++x) {
      const auto ux = static_cast<std::size_t>(x);
      if (s1[ux] == s1[ux + 1] && w[ux] > w[ux + 1]) ok = false;
      if (s2[ux] == s2[ux + 1] && inv[ux] > inv[ux + 1]) ok = false;
    }
    if (ok) out.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace oracle
