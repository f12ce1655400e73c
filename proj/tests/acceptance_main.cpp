// Acceptance suite: runs every validation criterion, prints one line per
// criterion and exits nonzero if any non-informational check fails.

#include <cstring>
#include <iostream>

#include "bigeo/validation.hpp"

int main(int argc, char** argv) {
    std::string filter;
    for (int i = 1; i < argc - 1; ++i)
        if (std::strcmp(argv[i], "--filter") == 0) filter = argv[i + 1];

    const auto results = bigeo::validation::run_all(filter);
    bigeo::validation::print_report(results, std::cout);
    return bigeo::validation::all_passed(results) ? 0 : 1;
}
