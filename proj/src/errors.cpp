#include "mgb/errors.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace mgb {

namespace {

std::string located(const std::string& message, std::size_t line,
                    std::size_t column) {
  std::string out;
  if (line != 0) out = "line " + std::to_string(line);
  if (column != 0) out += (out.empty() ? "" : ", ") + ("column " + std::to_string(column));
  return out.empty() ? message : out + ": " + message;
}

bool env_flag() {
  const char* value = std::getenv("GB_DEBUG_ASSERT");
  return value != nullptr && std::strcmp(value, "1") == 0;
}

std::atomic<bool>& debug_flag() {
  static std::atomic<bool> flag{env_flag()};
  return flag;
}

}  // namespace

InputError::InputError(const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(located(message, line, column)),
      line_(line),
      column_(column) {}

bool debug_asserts_enabled() {
  return debug_flag().load(std::memory_order_relaxed);
}

void set_debug_asserts(bool enabled) {
  debug_flag().store(enabled, std::memory_order_relaxed);
}

}  // namespace mgb
