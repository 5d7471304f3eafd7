#include "bstir/cli.hpp"

int main(int argc, char** argv) { return bstir::run_cli(argc, argv); }
