#include "linfty/cli.hpp"

int main(int argc, char** argv) { return linfty::cli_main(argc, argv); }
