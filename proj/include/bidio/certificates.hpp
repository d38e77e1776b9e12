#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bidio/exactmath.hpp"

// Impossibility results packaged as checkable artifacts: each case carries
// the equation it refers to, the analytic reason (parity or unit
// factorization) it has no natural solutions, and a bounded exhaustive scan
// confirming zero witnesses. Scans are finite checks, not proofs.

namespace bidio::certificates {

struct ParityCase {
    std::string id;
    std::string equation;
    std::string reason;
    int free_variables;  // 1 for single scans, 2 for (b, d) grids
};

// The nine registered cases, in a fixed order:
//   L3           4m^2 - q^2 = 1
//   K2           2a + 1 = 4b + 4
//   K3_II        2a + 1 = 6b + 9 (solvable; scanned as a consistency check:
//                every solution folds into the k=3 height identity)
//   K3_III_contr 2(2a - 3b - 4) = 1
//   K4_II        2a + 1 = 8b + 16
//   K4_IV        6a + 9 = 8b + 16
//   EQ16         2(3db + 4d + 8b + 8) + 1 = 6 sqrt((b+1)(b+3)(d+1)(d+3)), d > b >= 1
//   EQ16i        6bd + 8(b + d) + 15 = 6 sqrt((b+1)(b+3)(d+1)(d+3)), d >= b >= 1
//   K3_13_odd    16 sqrt(2b^2 + 6b + 4) = 18b + 37 or = 6b + 25
const std::vector<ParityCase>& parity_cases();

struct ImpossibilityCertificate {
    std::string case_id;
    std::string equation;
    std::string reason;
    Int verified_range;
    std::uint64_t scanned = 0;
    std::uint64_t witness_count = 0;
    std::vector<std::string> witnesses;  // populated only if the scan ever hits
};

// Exhaustive scan of the case's free variables up to range_limit
// (1 <= range_limit <= 3*10^9; the scan engine is 128-bit). Unknown ids
// throw std::invalid_argument.
ImpossibilityCertificate verify_parity_case(const std::string& case_id,
                                            std::uint64_t range_limit);

// Exhaustive triangle search certificate for k in {1, 2}: no lattice triangle
// with all |coordinates| <= radius has all pairwise distances natural with
// one pair at distance k. radius >= k + 1.
ImpossibilityCertificate nonexistence_k12(int k, std::int64_t radius);

}  // namespace bidio::certificates
