#include "boroczky/symmetry.hpp"

#include "boroczky/error.hpp"
#include "boroczky/pools.hpp"

namespace boroczky {

std::string GroupDescriptor::to_string() const {
  if (kind == Kind::ZxB) return k == 0 ? "Z" : "Z x B" + std::to_string(k);
  return k == 0 ? "trivial" : "B" + std::to_string(k);
}

SymmetryReport classify_symmetry(const SequenceSpec& spec, std::optional<AperiodicAssumption> assumption) {
  SymmetryReport report;
  report.dim = spec.dim();

  if (spec.is_periodic_mode()) {
    if (assumption) {
      throw Error(Errc::InvalidArgument, "an eventually periodic sequence cannot be assumed aperiodic");
    }
    report.k = pool_analysis(spec).k;
    report.group = {GroupDescriptor::Kind::ZxB, report.k};
    report.period = minimal_period(spec);
    report.essential = essential_period(spec);
    if (spec.dim() == 1) {
      if (report.k == 1) {
        report.fundamental_domain = "half ring";
      } else {
        const auto q = report.essential->q;
        report.fundamental_domain = std::to_string(q) + (q == 1 ? " ring" : " rings");
      }
    }
    return report;
  }

  if (!assumption) {
    throw Error(Errc::FiniteWordMode, "a finite word needs an explicit aperiodicity assumption to be classified");
  }
  // all coordinates eventually constant would make the sequence periodic
  if (assumption->bounded_coordinates >= spec.dim()) {
    throw Error(Errc::ValidationError, "an aperiodic sequence has at most d-1 eventually constant coordinates");
  }
  report.k = assumption->bounded_coordinates;
  report.group = {GroupDescriptor::Kind::B, report.k};
  if (spec.dim() == 1) report.fundamental_domain = "whole space";
  return report;
}

}  // namespace boroczky
