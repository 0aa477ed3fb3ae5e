#include "commands.hpp"

int main(int argc, char** argv) { return qinv::cli::run(argc, argv); }
