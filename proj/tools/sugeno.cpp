#include "sugeno/cli/app.hpp"

int main(int argc, char** argv) { return sugeno::cli::run(argc, argv); }
