#include "wbck/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "wbck/catalog.hpp"
#include "wbck/order_profile.hpp"
#include "wbck/validate.hpp"

namespace wbck {

namespace {

std::vector<std::string> default_names(int n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (int i = 0; i < n; ++i)
    names.push_back(i == 0 ? std::string("0") : std::string(1, static_cast<char>('a' + i - 1)));
  return names;
}

// ---------------------------------------------------------------------------
// poset generation
// ---------------------------------------------------------------------------

// All strict partial orders on k labeled points. Pairs are decided one at a
// time; every decision is followed by transitive closure, and a branch dies
// when the closure changes an already decided pair.
void gen_strict_orders(int k, const std::function<void(const std::vector<char>&)>& emit) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) pairs.emplace_back(i, j);
  std::vector<char> lt(static_cast<size_t>(k) * k, 0);

  auto pair_index = [&](int u, int v) {
    if (u > v) std::swap(u, v);
    // index of (u,v) in the lex pair ordering
    return u * k - u * (u + 1) / 2 + (v - u - 1);
  };

  std::function<void(int)> rec = [&](int idx) {
    if (idx == static_cast<int>(pairs.size())) {
      emit(lt);
      return;
    }
    auto [i, j] = pairs[idx];
    auto at = [&](int u, int v) -> char& { return lt[static_cast<size_t>(u) * k + v]; };

    if (at(i, j) || at(j, i)) {  // forced by earlier closure
      rec(idx + 1);
      return;
    }

    rec(idx + 1);  // leave incomparable

    for (auto [a, b] : {std::pair{i, j}, std::pair{j, i}}) {
      std::vector<char> saved = lt;
      bool ok = true;
      std::vector<std::pair<int, int>> added;
      for (int u = 0; u < k && ok; ++u) {
        if (u != a && !at(u, a)) continue;
        for (int v = 0; v < k && ok; ++v) {
          if (v != b && !at(b, v)) continue;
          if (u == v || at(v, u)) {
            ok = false;  // antisymmetry
            break;
          }
          if (!at(u, v)) {
            if (pair_index(u, v) < idx) {
              ok = false;  // contradicts a pair decided incomparable
              break;
            }
            at(u, v) = 1;
            added.emplace_back(u, v);
          }
        }
      }
      if (ok) rec(idx + 1);
      lt = saved;
    }
  };
  rec(0);
}

// Canonical key of a poset on points {1..n-1} above a fixed bottom:
// the minimal flattened matrix over permutations compatible with the
// (downset size, upset size) signature classes.
std::vector<char> poset_canonical_key(int n, const std::vector<char>& leq) {
  auto le = [&](int x, int y) { return leq[static_cast<size_t>(x) * n + y] != 0; };
  std::vector<std::pair<std::pair<int, int>, int>> sig;  // (signature, point)
  for (int x = 1; x < n; ++x) {
    int down = 0, up = 0;
    for (int y = 1; y < n; ++y) {
      if (le(y, x)) ++down;
      if (le(x, y)) ++up;
    }
    sig.push_back({{down, up}, x});
  }
  std::sort(sig.begin(), sig.end());

  // block structure: positions holding equal signatures may permute
  std::vector<int> base(n, 0);
  for (int i = 0; i < n - 1; ++i) base[sig[i].second] = i + 1;  // point -> position
  std::vector<std::pair<int, int>> blocks;                      // [start, end) in sig order
  int start = 0;
  for (int i = 1; i <= n - 1; ++i) {
    if (i == n - 1 || sig[i].first != sig[start].first) {
      blocks.emplace_back(start, i);
      start = i;
    }
  }

  std::vector<char> best;
  std::vector<int> perm = base;
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == blocks.size()) {
      std::vector<char> cand(leq.size(), 0);
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          if (le(x, y)) cand[static_cast<size_t>(perm[x]) * n + perm[y]] = 1;
      if (best.empty() || cand < best) best = cand;
      return;
    }
    auto [lo, hi] = blocks[b];
    std::vector<int> points(hi - lo);
    for (int i = lo; i < hi; ++i) points[i - lo] = sig[i].second;
    std::sort(points.begin(), points.end());
    do {
      for (int i = lo; i < hi; ++i) perm[points[i - lo]] = i + 1;
      rec(b + 1);
    } while (std::next_permutation(points.begin(), points.end()));
  };
  perm[0] = 0;
  rec(0);
  return best;
}

std::vector<DerivedOrder> build_posets(int n) {
  std::vector<DerivedOrder> out;
  if (n < 1) return out;
  const int k = n - 1;
  std::set<std::vector<char>> keys;
  gen_strict_orders(k, [&](const std::vector<char>& lt) {
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) leq[static_cast<size_t>(x) * n + x] = 1;
    for (int x = 0; x < n; ++x) leq[static_cast<size_t>(0) * n + x] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (lt[static_cast<size_t>(i) * k + j]) leq[static_cast<size_t>(i + 1) * n + (j + 1)] = 1;
    keys.insert(poset_canonical_key(n, leq));
  });
  for (const auto& key : keys)
    out.push_back(std::get<DerivedOrder>(order_from_relation(n, key)));
  return out;
}

// ---------------------------------------------------------------------------
// table filling
// ---------------------------------------------------------------------------

constexpr Elem kUnset = -1;

struct Filler {
  const DerivedOrder& order;
  int n;
  long long budget;
  EnumStats stats;
  OpTable table;
  std::vector<std::pair<Elem, Elem>> free_cells;
  std::vector<std::vector<Elem>> candidates;  // per left argument
  const std::function<bool(OpTable&)>* leaf;
  bool stopped = false;

  Filler(const DerivedOrder& order_, std::vector<std::string> names, long long budget_)
      : order(order_), n(order_.n), budget(budget_) {
    table.n = n;
    table.names = std::move(names);
    table.sub.assign(static_cast<size_t>(n) * n, kUnset);
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem forced = kUnset;
        if (order.le(x, y))
          forced = 0;
        else if (y == 0)
          forced = x;
        else if (auto m = meet(order, x, y); m && *m == 0)
          forced = x;  // x - y = x whenever the meet of x and y is 0
        if (forced != kUnset)
          table.sub[static_cast<size_t>(x) * n + y] = forced;
        else
          free_cells.emplace_back(x, y);
      }
    candidates.resize(n);
    for (Elem x = 0; x < n; ++x)
      for (Elem z = 1; z < n; ++z)
        if (order.le(z, x)) candidates[x].push_back(z);
  }

  Elem at(Elem x, Elem y) const { return table.sub[static_cast<size_t>(x) * n + y]; }

  // Checks every instance of the two incremental laws that became fully
  // determined when cell (x, y) received value c.
  bool delta_ok(Elem x, Elem y, Elem c) const {
    // x - (x - y) <= y with (x, y) outermost
    if (Elem inner = at(x, c); inner != kUnset && !order.le(inner, y)) return false;
    // x - (x - y') <= y' where the new cell is the inner lookup: x - y' = y
    for (Elem yp = 0; yp < n; ++yp)
      if (at(x, yp) == y && !order.le(c, yp)) return false;
    // antitonicity: lo <= hi  =>  (x - hi) <= (x - lo)
    for (Elem lo = 0; lo < n; ++lo)
      if (order.le(lo, y) && at(x, lo) != kUnset && !order.le(c, at(x, lo))) return false;
    for (Elem hi = 0; hi < n; ++hi)
      if (order.le(y, hi) && at(x, hi) != kUnset && !order.le(at(x, hi), c)) return false;
    return true;
  }

  // Full check of the determined instances; used once after initialization.
  bool init_ok() const {
    for (Elem x = 0; x < n; ++x)
      for (Elem y = 0; y < n; ++y) {
        Elem v = at(x, y);
        if (v == kUnset) continue;
        if (Elem inner = at(x, v); inner != kUnset && !order.le(inner, y)) return false;
        for (Elem lo = 0; lo < n; ++lo) {
          if (!order.le(lo, y)) continue;
          Elem w = at(x, lo);
          if (w != kUnset && !order.le(v, w)) return false;
        }
      }
    return true;
  }

  void run(size_t i) {
    if (stopped) return;
    if (i == free_cells.size()) {
      if (validate_wbck(table).holds) {
        if (!(*leaf)(table)) stopped = true;
      }
      return;
    }
    auto [x, y] = free_cells[i];
    for (Elem c : candidates[x]) {
      if (++stats.nodes > budget) {
        stats.budget_exhausted = true;
        stopped = true;
        return;
      }
      table.sub[static_cast<size_t>(x) * n + y] = c;
      if (delta_ok(x, y, c)) run(i + 1);
      if (stopped) break;
    }
    table.sub[static_cast<size_t>(x) * n + y] = kUnset;
  }
};

std::vector<const Law*> resolve_laws(const std::vector<std::string>& names) {
  std::vector<const Law*> laws;
  for (const auto& name : names) {
    const Law* law = find_law(name);
    if (!law) throw std::invalid_argument("unknown law name: " + name);
    laws.push_back(law);
  }
  return laws;
}

// A law that cannot be evaluated (meet law on a non-semilattice) counts as
// not holding.
bool law_holds(const OpTable& a, const Law& law) {
  try {
    return eval_law(a, law).holds;
  } catch (const NotMeetSemilattice&) {
    return false;
  }
}

bool passes_filters(const OpTable& a, const std::vector<const Law*>& require,
                    const std::vector<const Law*>& forbid) {
  for (const Law* law : require)
    if (!law_holds(a, *law)) return false;
  for (const Law* law : forbid)
    if (law_holds(a, *law)) return false;
  return true;
}

// Zero-fixing automorphisms of a poset.
std::vector<std::vector<Elem>> poset_automorphisms(const DerivedOrder& order) {
  const int n = order.n;
  std::vector<std::vector<Elem>> autos;
  if (n <= 1) {
    autos.push_back({0});
    return autos;
  }
  std::vector<Elem> tail(n - 1);
  std::iota(tail.begin(), tail.end(), 1);
  do {
    std::vector<Elem> perm(n, 0);
    for (int i = 1; i < n; ++i) perm[i] = tail[i - 1];
    bool ok = true;
    for (Elem x = 0; x < n && ok; ++x)
      for (Elem y = 0; y < n && ok; ++y)
        if (order.le(x, y) != order.le(perm[x], perm[y])) ok = false;
    if (ok) autos.push_back(std::move(perm));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return autos;
}

std::vector<Elem> orbit_min(const OpTable& a, const std::vector<std::vector<Elem>>& autos) {
  std::vector<Elem> best = a.sub;
  std::vector<Elem> cand(a.sub.size());
  for (const auto& perm : autos) {
    for (int x = 0; x < a.n; ++x)
      for (int y = 0; y < a.n; ++y)
        cand[static_cast<size_t>(perm[x]) * a.n + perm[y]] = perm[a.minus(x, y)];
    if (cand < best) best = cand;
  }
  return best;
}

}  // namespace

const std::vector<DerivedOrder>& enumerate_posets(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw std::invalid_argument("poset enumeration supports sizes 1.." +
                                std::to_string(kEnumerationCap));
  static std::mutex mutex;
  static std::map<int, std::vector<DerivedOrder>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_posets(n)).first;
  return it->second;
}

std::vector<DerivedOrder> enumerate_labeled_posets(int n) {
  if (n < 1 || n > kEnumerationCap)
    throw std::invalid_argument("poset enumeration supports sizes 1.." +
                                std::to_string(kEnumerationCap));
  std::vector<DerivedOrder> out;
  const int k = n - 1;
  std::set<std::vector<char>> seen;
  gen_strict_orders(k, [&](const std::vector<char>& lt) {
    std::vector<char> leq(static_cast<size_t>(n) * n, 0);
    for (int x = 0; x < n; ++x) leq[static_cast<size_t>(x) * n + x] = 1;
    for (int x = 0; x < n; ++x) leq[static_cast<size_t>(0) * n + x] = 1;
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (lt[static_cast<size_t>(i) * k + j]) leq[static_cast<size_t>(i + 1) * n + (j + 1)] = 1;
    if (seen.insert(leq).second)
      out.push_back(std::get<DerivedOrder>(order_from_relation(n, leq)));
  });
  std::sort(out.begin(), out.end(),
            [](const DerivedOrder& a, const DerivedOrder& b) { return a.leq < b.leq; });
  return out;
}

EnumStats fill_wbck_tables(const DerivedOrder& poset, std::vector<std::string> names,
                           const std::vector<const Law*>& require,
                           const std::vector<const Law*>& forbid, long long node_budget,
                           const TableSink& sink) {
  if (names.empty()) names = default_names(poset.n);
  Filler filler(poset, std::move(names), node_budget);
  std::function<bool(OpTable&)> leaf = [&](OpTable& t) -> bool {
    if (!passes_filters(t, require, forbid)) return true;
    return sink(t);
  };
  filler.leaf = &leaf;
  if (filler.init_ok()) filler.run(0);
  return filler.stats;
}

EnumStats enumerate_wbck(const EnumSpec& spec, const TableSink& sink) {
  if (spec.n < 1 || spec.n > kEnumerationCap)
    throw std::invalid_argument("enumeration size must be 1.." + std::to_string(kEnumerationCap));
  auto require = resolve_laws(spec.require);
  auto forbid = resolve_laws(spec.forbid);
  EnumStats total;
  bool stop = false;
  for (const DerivedOrder& poset : enumerate_posets(spec.n)) {
    if (stop || total.budget_exhausted) break;
    auto autos = poset_automorphisms(poset);
    std::set<std::vector<Elem>> reps;
    std::function<bool(OpTable&)> leaf = [&](OpTable& t) -> bool {
      reps.insert(orbit_min(t, autos));
      return true;
    };
    Filler filler(poset, default_names(spec.n), spec.node_budget - total.nodes);
    std::function<bool(OpTable&)> filtered = [&](OpTable& t) -> bool {
      if (!passes_filters(t, require, forbid)) return true;
      return leaf(t);
    };
    filler.leaf = &filtered;
    if (filler.init_ok()) filler.run(0);
    total.nodes += filler.stats.nodes;
    total.budget_exhausted |= filler.stats.budget_exhausted;

    std::vector<OpTable> canon;
    for (const auto& rep : reps) {
      OpTable t;
      t.n = spec.n;
      t.names = default_names(spec.n);
      t.sub = rep;
      OpTable c = canonical_form(t);
      c.names = default_names(spec.n);
      canon.push_back(std::move(c));
    }
    std::sort(canon.begin(), canon.end(),
              [](const OpTable& a, const OpTable& b) { return a.sub < b.sub; });
    for (OpTable& t : canon)
      if (!sink(t)) {
        stop = true;
        break;
      }
  }
  return total;
}

long long count_wbck(const EnumSpec& spec, EnumStats* stats) {
  long long count = 0;
  EnumStats s = enumerate_wbck(spec, [&](const OpTable&) {
    ++count;
    return true;
  });
  if (stats) *stats = s;
  return count;
}

EnumStats enumerate_tables_satisfying(int n, const std::vector<const Law*>& equations,
                                      long long node_budget, const TableSink& sink) {
  OpTable table;
  table.n = n;
  table.names = default_names(n);
  table.sub.assign(static_cast<size_t>(n) * n, kUnset);

  // diagonal, column 0 and row 0 first: the short equations bite earliest
  std::vector<std::pair<Elem, Elem>> cells;
  for (Elem x = 0; x < n; ++x) cells.emplace_back(x, x);
  for (Elem x = 1; x < n; ++x) cells.emplace_back(x, 0);
  for (Elem y = 1; y < n; ++y) cells.emplace_back(0, y);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y)
      if (x != y) cells.emplace_back(x, y);

  EnumStats stats;
  bool stopped = false;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (stopped) return;
    if (i == cells.size()) {
      OpTable copy = table;
      if (!sink(copy)) stopped = true;
      return;
    }
    auto [x, y] = cells[i];
    for (Elem c = 0; c < n; ++c) {
      if (++stats.nodes > node_budget) {
        stats.budget_exhausted = true;
        stopped = true;
        return;
      }
      table.sub[static_cast<size_t>(x) * n + y] = c;
      bool ok = true;
      for (const Law* law : equations)
        if (!eval_law(table, *law).holds) {  // only fully determined instances can fail
          ok = false;
          break;
        }
      if (ok) rec(i + 1);
      if (stopped) break;
    }
    table.sub[static_cast<size_t>(x) * n + y] = kUnset;
  };
  rec(0);
  return stats;
}

std::optional<OpTable> search_counterexample(const std::vector<std::string>& satisfies,
                                             const std::vector<std::string>& violates,
                                             int max_n, long long node_budget, EnumStats* stats) {
  EnumStats total;
  std::optional<OpTable> found;
  for (int n = 1; n <= max_n && !found; ++n) {
    EnumSpec spec;
    spec.n = n;
    spec.require = satisfies;
    spec.forbid = violates;
    spec.node_budget = node_budget - total.nodes;
    EnumStats s = enumerate_wbck(spec, [&](const OpTable& t) {
      found = t;
      return false;
    });
    total.nodes += s.nodes;
    total.budget_exhausted |= s.budget_exhausted;
    if (total.budget_exhausted) break;
  }
  if (stats) *stats = total;
  return found;
}

}  // namespace wbck
