#include "coauth/cli.hpp"

int main(int argc, char** argv) { return coauth::cli::run(argc, argv); }
