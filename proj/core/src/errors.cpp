#include "soergel/errors.hpp"

#include <cstdlib>
#include <string>

namespace soergel {

Limits Limits::from_env() {
  Limits l;
  if (const char* s = std::getenv("SOERGEL_MAX_DIM"); s && *s) {
    try {
      std::size_t pos = 0;
      unsigned long long v = std::stoull(s, &pos);
      if (pos == std::string(s).size() && v > 0) l.max_dim = static_cast<std::size_t>(v);
    } catch (const std::exception&) {
      // malformed values fall back to the default
    }
  }
  return l;
}

}  // namespace soergel
