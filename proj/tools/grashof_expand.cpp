#include "grashof/cli.hpp"

int main(int argc, char** argv) { return grashof::cli::run(argc, argv); }
