#include <iostream>
#include <vector>

#include <permbound/cli.hpp>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return permbound::cli::run(args, std::cout, std::cerr);
}
