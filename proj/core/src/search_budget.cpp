#include "noncyc/search_budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace noncyc {

SearchBudget SearchBudget::from_env(std::uint64_t fallback) {
  SearchBudget b;
  b.max_nodes = fallback;
  if (const char* raw = std::getenv("NONCYC_NODE_BUDGET")) {
    std::string_view s(raw);
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc() && ptr == s.data() + s.size() && v > 0) b.max_nodes = v;
  }
  return b;
}

}  // namespace noncyc
