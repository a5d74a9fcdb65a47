#include "evalcode/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace evalcode {

namespace {

std::atomic<std::size_t> g_threads{0};

std::size_t from_environment() {
  const char* v = std::getenv("EVALCODE_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    const long n = std::stol(v);
    return n > 0 ? static_cast<std::size_t>(n) : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

}  // namespace

std::size_t thread_count() {
  if (const std::size_t n = g_threads.load(); n > 0) return n;
  if (const std::size_t n = from_environment(); n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void set_thread_count(std::size_t n) { g_threads.store(n); }

}  // namespace evalcode
