#include "fibset/cli.hpp"

int main(int argc, char** argv) { return fibset::cli::run(argc, argv); }
