#include "latticestop/cli.hpp"

int main(int argc, char** argv) { return latticestop::run_cli(argc, argv); }
