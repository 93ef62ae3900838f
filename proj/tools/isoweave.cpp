#include "isoweave/cli.hpp"

int main(int argc, char** argv) { return isoweave::cli_main(argc, argv); }
