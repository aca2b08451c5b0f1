#include "cent2/cli.hpp"

int main(int argc, char** argv) { return cent2::cli::run(argc, argv); }
