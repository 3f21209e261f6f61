#include "tprod/cli.hpp"

int main(int argc, char** argv) { return tprod::cli_main(argc, argv); }
