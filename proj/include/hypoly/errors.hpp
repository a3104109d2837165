#pragma once

#include <stdexcept>
#include <string>

namespace hypoly {

// Base of every error raised by the library. Callers that only care about
// "the geometry said no" can catch this one.
class geometry_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input outside the domain of an operation (point on/outside the horizon,
// triangle inequality violated, angle out of range).
class domain_error : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

// Round-off exceeded the tolerated band (e.g. <a,b> clearly below 1).
class numeric_error : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

// Configuration too degenerate for the operation (collinear points,
// coincident line endpoints, vanishing denominators).
class degeneracy_error : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

// Over-determined inputs that disagree with each other.
class consistency_error : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

// Caller violated a documented precondition.
class precondition_error : public geometry_error {
 public:
  using geometry_error::geometry_error;
};

}  // namespace hypoly
