#include "braidloom/errors.hpp"

#include <mutex>

namespace braidloom {

namespace {
std::mutex& limits_mutex() {
  static std::mutex m;
  return m;
}
Limits& limits_storage() {
  static Limits l;
  return l;
}
}  // namespace

Limits current_limits() {
  std::lock_guard lock(limits_mutex());
  return limits_storage();
}

void set_limits(const Limits& limits) {
  std::lock_guard lock(limits_mutex());
  limits_storage() = limits;
}

namespace detail {
void throw_invalid(const std::string& what) { throw InvalidInput(what); }
void throw_limit(const std::string& what) { throw ResourceLimit(what); }
}  // namespace detail

}  // namespace braidloom
