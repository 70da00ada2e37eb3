// Rewrites the golden fixtures from the current build.  Review the diff
// before committing the result.

#include <fstream>
#include <iostream>

#include "cli.hpp"
#include "golden.hpp"

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: regen_fixtures FIXTURE_DIR\n";
        return 2;
    }
    for (const auto& g : golden::cases()) {
        std::ofstream out(std::string(argv[1]) + "/" + g.file, std::ios::binary);
        int code = flagcalc::cli::run(g.args, out, std::cerr);
        if (code != 0) {
            std::cerr << g.file << ": exit " << code << "\n";
            return 1;
        }
    }
    return 0;
}
