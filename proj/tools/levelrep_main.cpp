#include <iostream>

#include "levelrep/cli.hpp"

int main(int argc, char** argv) { return levelrep::run_cli(argc, argv, std::cout, std::cerr); }
