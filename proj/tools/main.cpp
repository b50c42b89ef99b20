#include <iostream>
#include <string>
#include <vector>

#include "bcp/cli.hpp"

int main(int argc, char** argv) {
    return bcp::run_cli(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
