#pragma once

#include <string>
#include <vector>

namespace irsdec {

struct SelftestResult {
    std::string name;
    bool passed;
    std::string detail;
};

/// Quick embedded invariant suite: field axioms, generator/parity duality,
/// exact recovery of independent row errors up to min(l, n-k-1), baseline
/// decoder agreement, bound spot values and simulation determinism.
std::vector<SelftestResult> run_selftest();

}  // namespace irsdec
