#include <iostream>

#include "hzsums_cli/app.hpp"

int main(int argc, char** argv) { return hzs::cli::run(argc, argv, std::cout, std::cerr); }
