#include <iostream>

#include "lightlike/report.hpp"

int main(int argc, char** argv) { return lightlike::cli_main(argc, argv, std::cout, std::cerr); }
