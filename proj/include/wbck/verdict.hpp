#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wbck {

// Carrier elements are dense indices; index 0 is the constant 0.
using Elem = int;

// Named assignment of carrier elements to variables, in variable order.
using Bindings = std::vector<std::pair<std::string, Elem>>;

// A failing check carries the assignment that violates the property and the
// violated atom; replaying the assignment must reproduce the violation.
struct Counterwitness {
  Bindings bindings;
  std::string violated;
};

struct Verdict {
  bool holds = true;
  std::optional<Counterwitness> counterwitness;

  static Verdict pass() { return {}; }
  static Verdict fail(Bindings bindings, std::string violated) {
    Verdict v;
    v.holds = false;
    v.counterwitness = Counterwitness{std::move(bindings), std::move(violated)};
    return v;
  }
  explicit operator bool() const { return holds; }
};

// Renders "x=a, y=b: <violated>" using the carrier labels.
std::string describe(const Counterwitness& cw, const std::vector<std::string>& names);

}  // namespace wbck
