#include "polyfree/cli.hpp"

int main(int argc, char** argv) { return polyfree::run_cli(argc, argv); }
