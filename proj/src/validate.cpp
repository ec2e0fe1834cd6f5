#include "wbck/validate.hpp"

#include <stdexcept>

namespace wbck {

namespace {

struct Failure {
  Bindings bindings;
  std::string violated;
};

// Reduced base: x - 0 = x, poset with least 0, x - (x - y) <= y, antitone in
// the second argument. Returns the first failure in that check order.
std::optional<Failure> reduced_route(const OpTable& a) {
  const int n = a.n;
  for (Elem x = 0; x < n; ++x)
    if (a.minus(x, 0) != x) return Failure{{{"x", x}}, "(x - 0) = x"};
  for (Elem x = 0; x < n; ++x)
    if (a.minus(x, x) != 0) return Failure{{{"x", x}}, "(x - x) = 0"};
  for (Elem x = 0; x < n; ++x)
    if (a.minus(0, x) != 0) return Failure{{{"x", x}}, "(0 - x) = 0"};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (a.rel_leq(x, y) && a.rel_leq(y, x))
        return Failure{{{"x", x}, {"y", y}},
                       "antisymmetry: (x - y) = 0 and (y - x) = 0 with x != y"};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!a.rel_leq(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (a.rel_leq(y, z) && !a.rel_leq(x, z))
          return Failure{{{"x", x}, {"y", y}, {"z", z}},
                         "transitivity: (x - y) = 0 and (y - z) = 0 but (x - z) != 0"};
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      if (!a.rel_leq(a.minus(x, a.minus(x, y)), y))
        return Failure{{{"x", x}, {"y", y}}, "(x - (x - y)) <= y"};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!a.rel_leq(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (!a.rel_leq(a.minus(z, y), a.minus(z, x)))
          return Failure{{{"x", x}, {"y", y}, {"z", z}}, "x <= y => (z - y) <= (z - x)"};
    }
  return std::nullopt;
}

// Defining axioms over the induced relation: poset with least 0 plus the
// exchange rule x - y <= z => x - z <= y.
bool defining_route(const OpTable& a) {
  const int n = a.n;
  for (Elem x = 0; x < n; ++x)
    if (a.minus(x, x) != 0 || a.minus(0, x) != 0) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (a.rel_leq(x, y) && a.rel_leq(y, x)) return false;
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!a.rel_leq(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (a.rel_leq(y, z) && !a.rel_leq(x, z)) return false;
    }
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y)
      for (Elem z = 0; z < n; ++z)
        if (a.rel_leq(a.minus(x, y), z) && !a.rel_leq(a.minus(x, z), y)) return false;
  return true;
}

}  // namespace

Verdict validate_wbck(const OpTable& a) {
  auto failure = reduced_route(a);
  bool primary = !failure.has_value();
  bool defining = defining_route(a);
  if (primary != defining)
    throw std::logic_error(
        "internal consistency: reduced and defining wBCK validation routes disagree on " +
        format_table(a));
  if (failure) return Verdict::fail(std::move(failure->bindings), std::move(failure->violated));
  return Verdict::pass();
}

OpTable discrete_wbck(const DerivedOrder& order, std::vector<std::string> names) {
  OpTable a;
  a.n = order.n;
  if (names.empty()) {
    names.reserve(order.n);
    for (int i = 0; i < order.n; ++i) names.push_back(i == 0 ? "0" : "x" + std::to_string(i));
  }
  if (static_cast<int>(names.size()) != order.n)
    throw std::invalid_argument("discrete_wbck: name count does not match the order size");
  a.names = std::move(names);
  a.sub.resize(static_cast<size_t>(a.n) * a.n);
  for (Elem x = 0; x < a.n; ++x)
    for (Elem y = 0; y < a.n; ++y)
      a.sub[static_cast<size_t>(x) * a.n + y] = order.le(x, y) ? 0 : x;
  return a;
}

}  // namespace wbck
