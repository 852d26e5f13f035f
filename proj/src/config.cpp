#include "andre/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace andre {

namespace {

int read_bound_from_env() {
  const char* raw = std::getenv("ANDRE_MAX_N");
  if (raw == nullptr) return kDefaultTreeSizeBound;
  int value = 0;
  const char* end = raw + std::strlen(raw);
  auto [ptr, ec] = std::from_chars(raw, end, value);
  if (ec != std::errc{} || ptr != end || value < 1) return kDefaultTreeSizeBound;
  return value;
}

}  // namespace

int tree_size_bound() {
  static const int bound = read_bound_from_env();
  return bound;
}

void require_tree_size(int n, int bound, const char* what) {
  if (n < 1) {
    throw std::invalid_argument(std::string(what) + ": size must be >= 1, got " +
                                std::to_string(n));
  }
  if (n > bound) {
    throw BoundExceeded(std::string(what) + ": size " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  }
}

void require_series_order(int order, const char* what) {
  if (order < 0) {
    throw std::invalid_argument(std::string(what) + ": negative order");
  }
  if (order > kMaxSeriesOrder) {
    throw BoundExceeded(std::string(what) + ": order " + std::to_string(order) +
                        " exceeds " + std::to_string(kMaxSeriesOrder));
  }
}

}  // namespace andre
