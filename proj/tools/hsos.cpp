#include "hsos_cli.hpp"

int main(int argc, char** argv) { return hsos::cli::run(argc, argv, std::cout, std::cerr); }
