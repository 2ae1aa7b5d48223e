#include "aqt/cli.hpp"

int main(int argc, char** argv) { return aqt::run_cli(argc, argv); }
