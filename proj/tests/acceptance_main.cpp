// Acceptance run: one PASS/FAIL line per criterion.
//   acceptance [--quick] [criterion ids...]

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <vector>

#include "fisherpoly/acceptance.hpp"

int main(int argc, char** argv)
{
    using namespace fisherpoly;
    AcceptanceOptions opts;
    std::vector<int> ids;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0)
            opts.quick = true;
        else
            ids.push_back(std::atoi(argv[i]));
    }
    if (ids.empty())
        for (int id = 1; id <= kCriterionCount; ++id)
            ids.push_back(id);
    try {
        opts.tol_override = tol_override_from_env();
    } catch (const std::exception& e) {
        std::cerr << e.what() << '\n';
        return 2;
    }

    int failed = 0;
    for (int id : ids) {
        const auto r = run_criterion(id, opts);
        std::cout << format_result(r) << std::endl;
        failed += r.passed ? 0 : 1;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed"
                         : std::string("acceptance: all criteria passed"))
              << std::endl;
    return failed ? 1 : 0;
}
