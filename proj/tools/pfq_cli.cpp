#include "pfq/cli.hpp"

int main(int argc, char** argv) { return pfq::cli::run(argc, argv); }
