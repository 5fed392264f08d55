#include "rkstab/cli.hpp"

int main(int argc, char** argv) { return rkstab::cli::main(argc, argv); }
