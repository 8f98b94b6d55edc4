#include "msla/cli.hpp"

int main(int argc, char** argv) { return msla::run_cli(argc, argv); }
