#include "witt/cli.hpp"

int main(int argc, char** argv) { return witt::cli::run(argc, argv); }
