#pragma once

#include <cstdint>
#include <string>

namespace persym {

struct OutputFormats {
  bool tabular = true;
  bool records = true;
  bool svg = true;
};

struct RunConfig {
  double eps_max = 3.0;
  double tol = 1e-9;
  std::uint64_t enum_cap = 1'000'000;
  std::uint64_t node_cap = 50'000'000;
  std::string out_dir = ".";
  OutputFormats formats;

  // Stable textual form of everything that can change numeric output;
  // hashed into provenance headers so identical configs are recognizable.
  std::string canonical_string() const;
};

}  // namespace persym
