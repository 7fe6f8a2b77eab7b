#include <iostream>

#include "msg/cli.hpp"

int main(int argc, char** argv) { return msg::cli::run(argc, argv, std::cout, std::cerr); }
