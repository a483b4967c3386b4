#include "sweepmap/cli.hpp"

int main(int argc, char** argv) { return sweepmap::cli::run(argc, argv); }
