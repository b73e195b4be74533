#include <iostream>
#include <string>
#include <vector>

#include "spaceform/cli_app.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return spaceform::cli::run(args, std::cout, std::cerr);
}
