#include <iostream>

#include "indep/acceptance.hpp"

int main() {
    auto results = indep::acceptance::run_all(std::cout);
    int failed = 0;
    for (const auto& r : results)
        if (!r.pass) ++failed;
    if (failed) {
        std::cout << failed << " criteria failed\n";
        return 1;
    }
    std::cout << "all " << results.size() << " criteria passed\n";
    return 0;
}
