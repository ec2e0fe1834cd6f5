#include "wbck/derived_order.hpp"

#include <stdexcept>

namespace wbck {

std::string OrderViolation::describe(const std::vector<std::string>& names) const {
  auto name = [&](Elem e) { return e >= 0 && e < static_cast<int>(names.size()) ? names[e] : "?"; };
  switch (kind) {
    case Kind::NotReflexive:
      return "NotReflexive(" + name(x) + "): " + name(x) + " - " + name(x) + " != 0";
    case Kind::NotAntisymmetric:
      return "NotAntisymmetric(" + name(x) + ", " + name(y) + ")";
    case Kind::NotTransitive:
      return "NotTransitive(" + name(x) + ", " + name(y) + ", " + name(z) + ")";
    case Kind::NoLeastZero:
      return "NoLeastZero(" + name(x) + "): 0 - " + name(x) + " != 0";
  }
  return "order violation";
}

std::variant<DerivedOrder, OrderViolation> order_from_relation(int n,
                                                               const std::vector<char>& leq) {
  auto le = [&](Elem x, Elem y) { return leq[static_cast<size_t>(x) * n + y] != 0; };
  for (Elem x = 0; x < n; ++x)
    if (!le(x, x)) return OrderViolation{OrderViolation::Kind::NotReflexive, x};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = x + 1; y < n; ++y)
      if (le(x, y) && le(y, x))
        return OrderViolation{OrderViolation::Kind::NotAntisymmetric, x, y};
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (!le(x, y)) continue;
      for (Elem z = 0; z < n; ++z)
        if (le(y, z) && !le(x, z))
          return OrderViolation{OrderViolation::Kind::NotTransitive, x, y, z};
    }
  for (Elem x = 0; x < n; ++x)
    if (!le(0, x)) return OrderViolation{OrderViolation::Kind::NoLeastZero, x};

  DerivedOrder order;
  order.n = n;
  order.leq = leq;
  // Transitive reduction: drop every composite pair.
  for (Elem x = 0; x < n; ++x)
    for (Elem y = 0; y < n; ++y) {
      if (x == y || !le(x, y)) continue;
      bool composite = false;
      for (Elem z = 0; z < n && !composite; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) composite = true;
      if (!composite) order.hasse.emplace_back(x, y);
    }
  return order;
}

std::variant<DerivedOrder, OrderViolation> derive_order(const OpTable& a) {
  std::vector<char> leq(static_cast<size_t>(a.n) * a.n, 0);
  for (Elem x = 0; x < a.n; ++x)
    for (Elem y = 0; y < a.n; ++y)
      leq[static_cast<size_t>(x) * a.n + y] = a.rel_leq(x, y) ? 1 : 0;
  return order_from_relation(a.n, leq);
}

DerivedOrder derive_order_checked(const OpTable& a) {
  auto result = derive_order(a);
  if (auto* order = std::get_if<DerivedOrder>(&result)) return std::move(*order);
  throw std::logic_error("derive_order_checked on a table without a derived order: " +
                         std::get<OrderViolation>(result).describe(a.names));
}

}  // namespace wbck
