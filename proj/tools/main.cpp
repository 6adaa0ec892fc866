#include "pathtrans/cli.hpp"

int main(int argc, char** argv) { return pathtrans::cli::run_main(argc, argv); }
