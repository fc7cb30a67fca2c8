#include <iostream>

#include "vk/cli/dispatch.hpp"

int main(int argc, char** argv) { return vk::cli::parse_and_dispatch(argc, argv, std::cout, std::cerr); }
