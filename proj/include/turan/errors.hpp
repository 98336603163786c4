#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace turan {

enum class ErrorKind {
  out_of_range_vertex,
  loop_edge,
  roots_not_proper,
  empty_subset,
  subset_touches_roots,
  budget_exceeded,
  not_connected,
  not_bipartite,
  bad_parameters,
  mixed_root_status,
  same_vertex,
  bad_fraction,
  bad_congruence,
  zero_density,
  expansion_fails,
  hypothesis_violated,
  internal_stuck,
  degenerate_fit,
  schema_error,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::out_of_range_vertex: return "OutOfRangeVertex";
    case ErrorKind::loop_edge: return "LoopEdge";
    case ErrorKind::roots_not_proper: return "RootsNotProper";
    case ErrorKind::empty_subset: return "EmptySubset";
    case ErrorKind::subset_touches_roots: return "SubsetTouchesRoots";
    case ErrorKind::budget_exceeded: return "BudgetExceeded";
    case ErrorKind::not_connected: return "NotConnected";
    case ErrorKind::not_bipartite: return "NotBipartite";
    case ErrorKind::bad_parameters: return "BadParameters";
    case ErrorKind::mixed_root_status: return "MixedRootStatus";
    case ErrorKind::same_vertex: return "SameVertex";
    case ErrorKind::bad_fraction: return "BadFraction";
    case ErrorKind::bad_congruence: return "BadCongruence";
    case ErrorKind::zero_density: return "ZeroDensity";
    case ErrorKind::expansion_fails: return "ExpansionFails";
    case ErrorKind::hypothesis_violated: return "HypothesisViolated";
    case ErrorKind::internal_stuck: return "InternalStuck";
    case ErrorKind::degenerate_fit: return "DegenerateFit";
    case ErrorKind::schema_error: return "SchemaError";
  }
  return "UnknownError";
}

// All library failures are reported through this exception. Some kinds carry a
// vertex-set payload (e.g. ExpansionFails carries the violating set).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg, std::vector<int> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

}  // namespace turan
