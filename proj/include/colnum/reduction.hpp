#pragma once

#include <cstdint>
#include <stdexcept>

#include "colnum/model.hpp"

namespace colnum {

struct ThinDirection {
  Column v;                // primitive
  std::int64_t width = 0;  // 2 * max |v . x| over the columns
};

// The input violated a documented precondition (not generic, rank one,
// delta too large, Delta = 1).
struct PreconditionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
// The shell search ran past its certified bound, or a consistency check on
// an intermediate result failed.
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Width of conv(A u -A) in direction v.
std::int64_t width_in_direction(const ColumnSet& A, Column v);

// floor(2 pi Delta) computed from the lower enclosure of 2 pi. A width w
// is acceptable iff w^2 <= this value.
std::int64_t width_squared_limit(std::int64_t delta);

// Some primitive v with width <= sqrt(2 pi Delta), searched in max-norm
// shells up to a bound derived from an independent column pair.
ThinDirection find_thin_direction(const ColumnSet& A, std::int64_t delta);

// Largest m with m^2 <= (pi/2) Delta, using the upper enclosure of pi.
std::int64_t type_limit(std::int64_t delta);

// Maps a generic Delta-modular set to a typed matrix with at least as many
// columns: transform the thin direction to the first coordinate, flip signs,
// add (0, 1), divide by gcds and read off per-row ranges.
TypedMatrix reduce(const ColumnSet& A, std::int64_t delta);

}  // namespace colnum
