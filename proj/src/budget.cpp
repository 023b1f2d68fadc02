#include "thresholds/budget.hpp"

#include <charconv>
#include <string>

#include "thresholds/errors.hpp"

namespace thresholds {

Budget Budget::from_spec(std::string_view spec, Budget base) {
  Budget b = base;
  while (!spec.empty()) {
    auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw PreconditionError("budget entry '" + std::string(item) + "' is not key=value");
    std::string_view key = item.substr(0, eq);
    std::string_view val = item.substr(eq + 1);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc{} || ptr != val.data() + val.size() || v == 0)
      throw PreconditionError("budget value for '" + std::string(key) + "' must be a positive integer");
    if (key == "terms")
      b.max_terms = v;
    else if (key == "pairs")
      b.max_reductions = v;
    else if (key == "products")
      b.max_products = v;
    else if (key == "frobenius")
      b.max_frobenius_power = v;
    else
      throw PreconditionError("unknown budget key '" + std::string(key) + "'");
  }
  return b;
}

Budget Budget::from_spec(std::string_view spec) { return from_spec(spec, Budget{}); }

}  // namespace thresholds
