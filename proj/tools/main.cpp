#include "cli_app.hpp"

int main(int argc, char** argv) { return smdedge::cli::run(argc, argv); }
