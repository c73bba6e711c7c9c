#include <iostream>

#include "confalg/cli/app.hpp"

int main(int argc, char** argv) { return confalg::cli::run(argc, argv, std::cin, std::cout); }
