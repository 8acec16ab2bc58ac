#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bipc4 {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A vertex reference lies outside the graph it was used with.
class InvalidVertexError : public Error {
 public:
  using Error::Error;
};

/// A size argument was required to be a positive multiple of 3 and is not.
class DivisibilityError : public Error {
 public:
  using Error::Error;
};

/// A seeded random generator could not meet its enforcement condition within
/// the attempt budget. Carries the seed, and when known the vertex that was
/// still deficient on the last attempt (side 0 = A, side 1 = B).
class GenerationFailureError : public Error {
 public:
  GenerationFailureError(const std::string& what, std::uint64_t seed)
      : Error(what), seed_(seed) {}
  GenerationFailureError(const std::string& what, std::uint64_t seed,
                         int vertex_side, int vertex_index)
      : Error(what), seed_(seed), has_vertex_(true),
        vertex_side_(vertex_side), vertex_index_(vertex_index) {}

  std::uint64_t seed() const { return seed_; }
  bool has_failing_vertex() const { return has_vertex_; }
  int failing_vertex_side() const { return vertex_side_; }
  int failing_vertex_index() const { return vertex_index_; }

 private:
  std::uint64_t seed_ = 0;
  bool has_vertex_ = false;
  int vertex_side_ = 0;
  int vertex_index_ = 0;
};

/// A certificate failed validation against the graph it was checked with,
/// in a context where only valid certificates are acceptable input.
class InvalidCertificateError : public Error {
 public:
  using Error::Error;
};

/// A search that is guaranteed to succeed under its hypothesis found nothing.
/// Reaching this on a hypothesis-satisfying instance would falsify the
/// underlying theorem; the instance should be preserved and reported.
class CounterexampleError : public Error {
 public:
  using Error::Error;
};

/// An exhaustive enumeration was refused because the instance space is too
/// large. Carries the estimated instance count.
class BudgetExceededError : public Error {
 public:
  BudgetExceededError(const std::string& what, double estimated_instances)
      : Error(what), estimated_(estimated_instances) {}
  double estimated_instances() const { return estimated_; }

 private:
  double estimated_ = 0;
};

}  // namespace bipc4
