// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "tvcat/category.hpp"
#include "tvcat/report.hpp"

namespace tvcat {

/// What a failure report can be replayed against. Unused members may be null.
struct ReplayInput {
  const Quantale* quantale = nullptr;
  const Theory* theory = nullptr;
  const TVStructure* structure = nullptr;
};

/// Re-evaluates the single tuple named by the witness of a failure report
/// (quantale laws, the injectivity condition, (R), (T), exponentiability,
/// the frame criterion and the tensor condition). The result fails when the
/// law is still violated at that tuple, and records both sides in details.
/// Throws ArgumentError when the report carries no replayable witness.
CheckReport replay_witness(const Json& failure, const ReplayInput& in);

}  // namespace tvcat
