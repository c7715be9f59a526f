#pragma once

#include <string>
#include <string_view>

namespace udw {

// Deterministic internal consistency sweep: closed forms against the dense
// solver, symmetry identities, and the coherence additivity identity. The
// fault switches corrupt only the value under test inside the selftest
// (never a library code path) to demonstrate that each check can fail.
enum class InjectedFault { none, spectrum_branch_sign, negativity_c_dependence };

InjectedFault fault_from_name(std::string_view name);

struct SelftestReport {
  bool passed = false;
  std::string text;  // one line per property with its worst deviation
};

SelftestReport run_selftest(InjectedFault fault = InjectedFault::none);

}  // namespace udw
