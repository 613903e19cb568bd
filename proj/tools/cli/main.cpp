#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return standby::cli::run(argc, argv, std::cout, std::cerr);
}
