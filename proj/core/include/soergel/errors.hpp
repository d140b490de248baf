#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace soergel {

/// A requested computation exceeds a configured size cap (rank of S_n or
/// intermediate matrix dimension). Raised before any large allocation.
class SizeLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A verified postcondition failed: a splitting could not be found, a
/// dimension count came out wrong, or the Hecke oracle disagrees with the
/// linear algebra.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Caps applied to every SoergelCategory. `max_dim` bounds any intermediate
/// matrix dimension; it is read from SOERGEL_MAX_DIM when present.
struct Limits {
  int max_rank = 5;
  std::size_t max_dim = 5000;

  static Limits from_env();
};

}  // namespace soergel
