#pragma once

#include "jensen/numeric.hpp"
#include "jensen/sequences.hpp"

namespace jensen {

enum class DataVariant { Exact, Simplified };

// Data {A(n), kappa, delta(n)} of a log-polynomial sequence at a fixed n.
struct HJData {
  BigReal A;
  int kappa = -1;
  BigReal delta;
  DataVariant variant = DataVariant::Exact;
  SequenceId family;
};

}  // namespace jensen
