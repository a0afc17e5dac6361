#include "veckin/threading.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>
#include <vector>

namespace veckin {

int worker_count() {
  static const int n = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    int cap = hw;
    if (const char* env = std::getenv("VECKIN_THREADS")) {
      int v = std::atoi(env);
      if (v >= 1) cap = v;
    }
    return std::min(hw, cap) < 1 ? 1 : std::min(hw, cap);
  }();
  return n;
}

void parallel_for(int n, const std::function<void(int, int)>& fn) {
  const int nw = std::min(worker_count(), n < 1 ? 1 : n);
  if (nw <= 1 || n <= 1) {
    if (n > 0) fn(0, n);
    return;
  }
  std::vector<std::thread> threads;
  threads.reserve(nw - 1);
  const int chunk = (n + nw - 1) / nw;
  for (int w = 1; w < nw; ++w) {
    int b = w * chunk, e = std::min(n, b + chunk);
    if (b >= e) break;
    threads.emplace_back([&fn, b, e] { fn(b, e); });
  }
  fn(0, std::min(n, chunk));
  for (auto& t : threads) t.join();
}

}  // namespace veckin
