#include "qnogo/cli.hpp"

int main(int argc, char** argv) { return qnogo::cli::run(argc, argv); }
