#include "cheaptalk/cli.hpp"

int main(int argc, char** argv) { return cheaptalk::cli_main(argc, argv); }
