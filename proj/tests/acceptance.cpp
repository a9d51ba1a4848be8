#include <cstring>
#include <iostream>

#include "tilekit/acceptance.hpp"

int main(int argc, char** argv) {
    tilekit::AcceptanceOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "--fast")) opt.fast = true;
        else if (!std::strcmp(argv[i], "--filter") && i + 1 < argc) opt.filter = argv[++i];
        else if (!std::strcmp(argv[i], "--fixtures-dir") && i + 1 < argc) opt.fixtures_dir = argv[++i];
        else {
            std::cerr << "usage: acceptance [--fast] [--filter s] [--fixtures-dir d]\n";
            return 2;
        }
    }
    auto rs = tilekit::run_acceptance(opt);
    std::cout << tilekit::report_table(rs);
    return tilekit::all_passed(rs) ? 0 : 1;
}
