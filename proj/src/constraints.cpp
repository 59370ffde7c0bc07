#include "thetakit/constraints.hpp"

#include <algorithm>

#include "thetakit/errors.hpp"

namespace thetakit {

std::string ConstraintReport::status_name() const {
  switch (status) {
    case Status::ExtendsUnconditionally: return "ExtendsUnconditionally";
    case Status::ExtendsIff: return "ExtendsIff";
    case Status::FailsIdentically: return "FailsIdentically";
  }
  return "?";
}

ParamSubstitution ConstraintReport::solving_substitution() const {
  ParamSubstitution sub;
  for (const AffineForm& f : constraints) {
    if (f.terms().empty()) continue;
    const auto& [pivot, coeff] = f.terms().front();
    // pivot = -(rest)/coeff
    AffineForm rest = f - AffineForm::symbol(pivot, coeff);
    sub[pivot] = rest * (Rational(-1) / coeff);
  }
  return sub;
}

AffineForm ConstraintSolver::reduce(AffineForm f) const {
  for (const auto& [pivot, row] : rows_) {
    Rational c = f.coefficient_of(pivot);
    if (c != 0) f -= row * c;
  }
  return f;
}

bool ConstraintSolver::add(const AffineForm& form) {
  if (inconsistent_) return false;
  AffineForm f = reduce(form);
  if (f.terms().empty()) {
    // pure constant: satisfied iff it vanishes mod 1
    if (mod_one(f.constant()) != 0) inconsistent_ = true;
    return inconsistent_;
  }
  const auto& [pivot, coeff] = f.terms().front();
  AffineForm row = f * (Rational(1) / coeff);
  // eliminate the new pivot from existing rows
  for (auto& [p, r] : rows_) {
    Rational c = r.coefficient_of(pivot);
    if (c != 0) r -= row * c;
  }
  rows_.emplace_back(pivot, std::move(row));
  std::sort(rows_.begin(), rows_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return true;
}

std::vector<AffineForm> ConstraintSolver::basis() const {
  std::vector<AffineForm> out;
  out.reserve(rows_.size());
  for (const auto& [pivot, row] : rows_) out.push_back(row.primitive_normalized());
  return out;
}

bool ConstraintSolver::forces_all_zero(const std::set<std::string>& params) const {
  if (inconsistent_) return false;
  for (const std::string& p : params) {
    bool pinned_to_zero = false;
    for (const auto& [pivot, row] : rows_) {
      if (pivot != p) continue;
      // row: p + tail = 0 pins p to 0 iff the tail vanishes
      if (row == AffineForm::symbol(p)) pinned_to_zero = true;
      break;
    }
    if (!pinned_to_zero) return false;
  }
  return true;
}

ParamSubstitution ConstraintSolver::pivot_substitution() const {
  ParamSubstitution sub;
  for (const auto& [pivot, row] : rows_) {
    sub[pivot] = AffineForm::symbol(pivot) - row;  // pivot = pivot - (pivot + tail) = -tail
  }
  return sub;
}

}  // namespace thetakit
