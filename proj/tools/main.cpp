// main.cpp

#include "starcrit/cli.hpp"

int main(int argc, char** argv) { return starcrit::cli::run_cli(argc, argv); }
