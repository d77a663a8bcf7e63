#include <grassgw/cli.hpp>

int main(int argc, char** argv) { return grassgw::cli::run(argc, argv, std::cout, std::cerr); }
