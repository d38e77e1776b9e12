#include <cstdlib>
#include <iostream>

#include "bidio/reproduce.hpp"

// One line per ledger item, nonzero exit when anything fails; ctest runs this
// next to the unit binary and CI treats it as the release gate.
int main() {
    const auto items = bidio::reproduce::run_full_ledger();
    bidio::reproduce::print_ledger(items, std::cout);
    return bidio::reproduce::all_passed(items) ? EXIT_SUCCESS : EXIT_FAILURE;
}
