#include <iostream>

#include "cutscope_app.hpp"

int main(int argc, char** argv) { return cutscope::cli::run_cli(argc, argv, std::cout, std::cerr); }
