#pragma once

#include <set>
#include <string>
#include <vector>

#include "thetakit/phase.hpp"
#include "thetakit/reports.hpp"

namespace thetakit {

/// Outcome of a parameter-constraint analysis. Constraints are rational-
/// affine forms required to vanish mod 1; under the generic-parameter
/// reading each is solved as an exact linear relation over Q, and the
/// reported set is the reduced row echelon basis in parameter name order,
/// scaled to primitive integer coefficients.
struct ConstraintReport {
  enum class Status { ExtendsUnconditionally, ExtendsIff, FailsIdentically };

  Status status = Status::ExtendsUnconditionally;
  std::vector<AffineForm> constraints;
  std::vector<std::pair<std::string, std::string>> witnesses;  // offending pairs
  std::vector<CheckItem> structural;  // per structural relation, when checked

  /// Substitution solving the pivots in terms of the free parameters;
  /// empty for FailsIdentically with no solution.
  ParamSubstitution solving_substitution() const;

  std::string status_name() const;
};

/// Accumulates affine constraint forms (each required = 0 generically) into
/// a reduced row echelon system over the parameters ordered by name.
class ConstraintSolver {
 public:
  /// Adds a form; returns true when the form was not already implied.
  bool add(const AffineForm& form);

  bool inconsistent() const { return inconsistent_; }
  bool empty() const { return rows_.empty() && !inconsistent_; }
  /// Echelon basis, primitive-normalized, ordered by pivot.
  std::vector<AffineForm> basis() const;
  /// True when the system forces every listed parameter to the exact value 0.
  bool forces_all_zero(const std::set<std::string>& params) const;

  ParamSubstitution pivot_substitution() const;

 private:
  AffineForm reduce(AffineForm f) const;
  // rows keyed by pivot parameter name; each row has pivot coefficient 1 and
  // no other pivot parameters
  std::vector<std::pair<std::string, AffineForm>> rows_;
  bool inconsistent_ = false;
};

}  // namespace thetakit
