#pragma once

#include <stdexcept>

namespace qmm {

// Enumeration cost above the configured cap. The message carries the
// required cost so callers can report an honest estimate.
class budget_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A representation type outside the supported class: the induced local
// quiver would need a negative loop or arrow count.
class invalid_type_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The full simple type (1,n), for which the nilpotent-fiber inequality is
// known to fail and which is therefore rejected rather than evaluated.
class excluded_type_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace qmm
