#include "treeuniv/harness.hpp"

int main(int argc, char** argv) { return treeuniv::run_cli(argc, argv); }
