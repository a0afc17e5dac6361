#include <exception>
#include <iostream>
#include <vector>

#include "veckin/cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  veckin::RunManifest manifest;
  try {
    manifest = veckin::parse_args(args);
  } catch (const veckin::usage_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  try {
    return veckin::run_manifest(manifest);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
