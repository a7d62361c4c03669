#include "colnum/cli.hpp"

int main(int argc, char** argv) { return colnum::cli::run(argc, argv); }
