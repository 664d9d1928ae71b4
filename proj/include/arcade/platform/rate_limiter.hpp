#pragma once

#include <cstdint>
#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>

namespace arcade::platform {

// Fixed-window request counter keyed by client (for example, an IP address).
class RateLimiter {
 public:
  RateLimiter(int limit, std::int64_t window_ms, std::function<std::int64_t()> clock);

  // Counts one request for `key`; false once the window's limit is reached.
  bool Allow(const std::string& key);

 private:
  struct Window {
    std::int64_t started_ms = 0;
    int count = 0;
  };

  int limit_;
  std::int64_t window_ms_;
  std::function<std::int64_t()> clock_;
  std::mutex mutex_;
  std::unordered_map<std::string, Window> windows_;
};

}  // namespace arcade::platform
