#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace framemod {

// A root finder or iterative solver exhausted its iteration budget.
struct IterationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A geometric parameter collapsed (modulus reaching 0 or 1, plates merging).
struct DegenerateGeometryError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A mesh spacing does not align exactly with the domain's breakpoints,
// or the requested grid exceeds the supported size.
struct GridMismatchError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Method { EXACT_SIGMA_HALF, BOWMAN, LEADING, LARGE_H, ORACLE };

const char* method_name(Method m);

// One computed module value. est_error accompanies oracle results only;
// the analytic methods carry no quantified error bound.
struct ModuleEstimate {
  double value = 0.0;
  Method method = Method::LEADING;
  std::optional<double> est_error;
  std::optional<std::string> trace_ref;
};

// Stretched rectangular frame: outer rectangle [-H,H]x[-1,1] with the
// rectangular hole [-sigma*H, sigma*H]x[-sigma, sigma] removed.
struct FrameGeometry {
  double sigma;
  double H;
  FrameGeometry(double sigma_, double H_) : sigma(sigma_), H(H_) {
    if (!(sigma > 0.0) || !(sigma < 1.0))
      throw std::domain_error("frame geometry requires 0 < sigma < 1");
    if (!(H >= 1.0))
      throw std::domain_error("frame geometry requires H >= 1");
  }
};

}  // namespace framemod
