#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <powmon/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return powmon::cli::run(args, std::cout, std::cerr, std::getenv("POWMON_SEED"));
}
