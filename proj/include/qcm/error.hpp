#pragma once

#include <stdexcept>
#include <string>

namespace qcm {

// Input or consistency error surfaced to the user (CLI exit code 1).
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Desk-scale guardrail refusal (CLI exit code 2).
struct ScaleLimit : Error {
  using Error::Error;
};

}  // namespace qcm
