#include "lawmeas/caps.hpp"

#include <cstdlib>
#include <string>

namespace lawmeas {

namespace {

Caps make_default_caps() {
  Caps caps;
  if (const char* env = std::getenv("LAWMEAS_CAP")) {
    char* end = nullptr;
    const long long v = std::strtoll(env, &end, 10);
    if (end != env && v > 0) {
      caps.family_max = v;
      caps.function_space_max = v;
      caps.model_check_max_states = v;
    }
  }
  return caps;
}

Caps& mutable_global_caps() {
  static Caps caps = make_default_caps();
  return caps;
}

}  // namespace

const Caps& global_caps() { return mutable_global_caps(); }

void set_global_caps(const Caps& caps) { mutable_global_caps() = caps; }

}  // namespace lawmeas
