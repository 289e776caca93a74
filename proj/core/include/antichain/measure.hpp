#pragma once

namespace antichain {

enum class MeasureMethod { Covering, Quadrature, ClosedForm };

const char* to_string(MeasureMethod method);

// A numeric measure together with how it was obtained. Covering estimates are
// one-sided upper bounds and must not be compared as two-sided values.
struct MeasureEstimate {
  double value = 0.0;
  MeasureMethod method = MeasureMethod::ClosedForm;
  double error_bound = 0.0;
  bool one_sided_upper = false;
  bool converged = true;  // false when the quadrature budget ran out first
};

inline const char* to_string(MeasureMethod method) {
  switch (method) {
    case MeasureMethod::Covering:
      return "Covering";
    case MeasureMethod::Quadrature:
      return "Quadrature";
    case MeasureMethod::ClosedForm:
      return "ClosedForm";
  }
  return "?";
}

}  // namespace antichain
