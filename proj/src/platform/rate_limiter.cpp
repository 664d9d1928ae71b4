#include "arcade/platform/rate_limiter.hpp"

namespace arcade::platform {

RateLimiter::RateLimiter(int limit, std::int64_t window_ms, std::function<std::int64_t()> clock)
    : limit_(limit), window_ms_(window_ms), clock_(std::move(clock)) {}

bool RateLimiter::Allow(const std::string& key) {
  const std::int64_t now = clock_();
  std::lock_guard lock(mutex_);
  if (windows_.size() > 10000) {
    std::erase_if(windows_, [&](const auto& e) { return now - e.second.started_ms >= window_ms_; });
  }
  Window& w = windows_[key];
  if (w.count == 0 || now - w.started_ms >= window_ms_) {
    w.started_ms = now;
    w.count = 0;
  }
  if (w.count >= limit_) return false;
  ++w.count;
  return true;
}

}  // namespace arcade::platform
