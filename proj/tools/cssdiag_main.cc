#include <iostream>

#include "cssdiag/cli.h"

int main(int argc, char **argv) {
    return cssdiag::run_cli(std::vector<std::string>(argv + 1, argv + argc), std::cout, std::cerr);
}
