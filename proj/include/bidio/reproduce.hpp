#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

// The release ledger: eleven numbered checks covering the Pell tables, both
// triangle families, the apex-pair and n-gon searches, the impossibility
// certificates, the constructors, and the cross-cutting properties. CI runs
// this through the `reproduce` subcommand and through the acceptance test
// binary; both print one line per item.

namespace bidio::reproduce {

struct LedgerItem {
    int number = 0;
    std::string name;
    bool passed = false;
    std::vector<std::string> notes;  // including documented-divergence flags
    std::int64_t elapsed_ms = 0;
};

std::vector<LedgerItem> run_full_ledger();

bool all_passed(const std::vector<LedgerItem>& items);

// "PASS  3 k=4 family table (12 ms)" style lines, notes indented below.
void print_ledger(const std::vector<LedgerItem>& items, std::ostream& out);

}  // namespace bidio::reproduce
