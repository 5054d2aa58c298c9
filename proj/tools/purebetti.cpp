#include "purebetti/cli.hpp"

int main(int argc, char** argv) { return purebetti::run(argc, argv); }
