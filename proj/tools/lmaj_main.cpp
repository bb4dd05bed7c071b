#include "lmaj/cli.hpp"

int main(int argc, char** argv) { return lmaj::cli_main(argc, argv); }
