#include <iostream>

#include "buffsim/cli.hh"

int main(int argc, char** argv)
{
  return buffsim::run_cli(argc, argv, std::cout, std::cerr);
}
