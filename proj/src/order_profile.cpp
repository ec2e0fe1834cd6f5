#include "wbck/order_profile.hpp"

#include <algorithm>
#include <functional>

#include "wbck/derived_order.hpp"

namespace wbck {

namespace {

// Greatest element of `bounds` if it dominates all of them.
std::optional<Elem> greatest(const DerivedOrder& order, const std::vector<Elem>& bounds) {
  for (Elem g : bounds) {
    bool top = true;
    for (Elem b : bounds)
      if (!order.le(b, g)) {
        top = false;
        break;
      }
    if (top) return g;
  }
  return std::nullopt;
}

std::optional<Elem> least(const DerivedOrder& order, const std::vector<Elem>& bounds) {
  for (Elem l : bounds) {
    bool bottom = true;
    for (Elem b : bounds)
      if (!order.le(l, b)) {
        bottom = false;
        break;
      }
    if (bottom) return l;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Elem> meet(const DerivedOrder& order, Elem x, Elem y) {
  std::vector<Elem> lower;
  for (Elem z = 0; z < order.n; ++z)
    if (order.le(z, x) && order.le(z, y)) lower.push_back(z);
  return greatest(order, lower);
}

std::optional<Elem> join(const DerivedOrder& order, Elem x, Elem y) {
  std::vector<Elem> upper;
  for (Elem z = 0; z < order.n; ++z)
    if (order.le(x, z) && order.le(y, z)) upper.push_back(z);
  if (upper.empty()) return std::nullopt;
  return least(order, upper);
}

bool distributive_sublattice_scan(const std::vector<Elem>& members, const DerivedOrder& order,
                                  const std::vector<Elem>& meet_tbl,
                                  const std::vector<Elem>& join_tbl) {
  const int n = order.n;
  auto mt = [&](Elem x, Elem y) { return meet_tbl[static_cast<size_t>(x) * n + y]; };
  const int m = static_cast<int>(members.size());
  if (m < 5) return true;
  // All 5-subsets of members closed under meet/join, tested against the
  // diamond M3 and the pentagon N5.
  std::vector<Elem> s(5);
  std::function<bool(int, int)> scan = [&](int start, int depth) -> bool {
    if (depth == 5) {
      // closure
      for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
          Elem mv = mt(s[i], s[j]);
          Elem jv = join_tbl[static_cast<size_t>(s[i]) * n + s[j]];
          if (mv < 0 || jv < 0) return false;  // not closed in a defined way
          if (std::find(s.begin(), s.end(), mv) == s.end()) return false;
          if (std::find(s.begin(), s.end(), jv) == s.end()) return false;
        }
      // bottom and top of the subset
      Elem bot = s[0], top = s[0];
      for (int i = 1; i < 5; ++i) {
        bot = mt(bot, s[i]);
        top = join_tbl[static_cast<size_t>(top) * n + s[i]];
      }
      std::vector<Elem> mid;
      for (Elem e : s)
        if (e != bot && e != top) mid.push_back(e);
      if (mid.size() != 3) return false;
      auto incomp = [&](Elem u, Elem v) { return !order.le(u, v) && !order.le(v, u); };
      // M3: three pairwise incomparable mids with meets bot and joins top.
      bool m3 = true;
      for (int i = 0; i < 3 && m3; ++i)
        for (int j = i + 1; j < 3 && m3; ++j)
          if (!incomp(mid[i], mid[j]) || mt(mid[i], mid[j]) != bot ||
              join_tbl[static_cast<size_t>(mid[i]) * n + mid[j]] != top)
            m3 = false;
      if (m3) return true;
      // N5: one comparable pair v < w and a third mid u incomparable to both,
      // with u ^ v = u ^ w = bot and u v v = u v w = top.
      for (int ui = 0; ui < 3; ++ui) {
        Elem u = mid[ui];
        Elem v = mid[(ui + 1) % 3], w = mid[(ui + 2) % 3];
        if (order.lt(w, v)) std::swap(v, w);
        if (!order.lt(v, w)) continue;
        if (incomp(u, v) && incomp(u, w) && mt(u, v) == bot && mt(u, w) == bot &&
            join_tbl[static_cast<size_t>(u) * n + v] == top &&
            join_tbl[static_cast<size_t>(u) * n + w] == top)
          return true;
      }
      return false;
    }
    for (int i = start; i < m; ++i) {
      s[depth] = members[i];
      if (scan(i + 1, depth + 1)) return true;
    }
    return false;
  };
  return !scan(0, 0);
}

OrderProfile profile(const DerivedOrder& order) {
  const int n = order.n;
  OrderProfile p;
  p.meet_tbl.assign(static_cast<size_t>(n) * n, -1);
  p.join_tbl.assign(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (auto m = meet(order, x, y)) p.meet_tbl[static_cast<size_t>(x) * n + y] = *m;
      if (auto j = join(order, x, y)) p.join_tbl[static_cast<size_t>(x) * n + y] = *j;
    }

  p.is_meet_semilattice = true;
  p.is_lattice = true;
  for (size_t i = 0; i < p.meet_tbl.size(); ++i) {
    if (p.meet_tbl[i] < 0) p.is_meet_semilattice = false;
    if (p.meet_tbl[i] < 0 || p.join_tbl[i] < 0) p.is_lattice = false;
  }

  p.is_nearlattice = p.is_meet_semilattice;
  for (Elem x = 0; x < n && p.is_nearlattice; ++x)
    for (Elem y = 0; y < n && p.is_nearlattice; ++y) {
      bool bounded_above = false;
      for (Elem z = 0; z < n; ++z)
        if (order.le(x, z) && order.le(y, z)) {
          bounded_above = true;
          break;
        }
      if (bounded_above && p.join_tbl[static_cast<size_t>(x) * n + y] < 0)
        p.is_nearlattice = false;
    }

  p.is_bounded = false;
  for (Elem t = 0; t < n && !p.is_bounded; ++t) {
    bool top = true;
    for (Elem x = 0; x < n; ++x)
      if (!order.le(x, t)) {
        top = false;
        break;
      }
    p.is_bounded = top;
  }

  if (p.is_lattice) {
    std::vector<Elem> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    p.is_distributive = distributive_sublattice_scan(all, order, p.meet_tbl, p.join_tbl);
  }

  p.is_0_distributive = true;
  auto mt = [&](Elem x, Elem y) { return p.meet_tbl[static_cast<size_t>(x) * n + y]; };
  for (Elem x = 0; x < n && p.is_0_distributive; ++x)
    for (Elem y = 0; y < n && p.is_0_distributive; ++y)
      for (Elem z = 0; z < n; ++z) {
        if (mt(x, y) != 0 || mt(x, z) != 0) continue;
        Elem jv = p.join_tbl[static_cast<size_t>(y) * n + z];
        if (jv < 0) continue;
        if (mt(x, jv) != 0) {
          p.is_0_distributive = false;
          break;
        }
      }
  return p;
}

Verdict meet_matches_subtraction(const OpTable& a) {
  DerivedOrder order = derive_order_checked(a);
  for (Elem x = 0; x < a.n; ++x)
    for (Elem y = 0; y < a.n; ++y) {
      Elem candidate = a.minus(x, a.minus(x, y));
      auto m = meet(order, x, y);
      if (!m || *m != candidate)
        return Verdict::fail({{"x", x}, {"y", y}},
                             "(x - (x - y)) is not the meet of x and y");
    }
  return Verdict::pass();
}

}  // namespace wbck
