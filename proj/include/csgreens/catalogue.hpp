#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace csg {

/// One implemented influence tensor: quantity (U, Omega, Sigma, Mu),
/// source type, dimension, and the equation label of the closed form it
/// implements.
struct CatalogueEntry {
  std::string quantity;
  std::string source;    // force | couple
  int dimension;         // 2 | 3
  std::string equation;  // e.g. "Eq. (83)"
  std::string description;
};

const std::vector<CatalogueEntry>& kernel_catalogue();

/// Transcription corrections applied to the published closed forms.
/// Each was resolved by re-deriving the stress kernels from the
/// displacement kernels through the constitutive law.
const std::vector<std::string>& errata_notes();

/// Prints the catalogue, the traction-kernel derivation rules, and the
/// errata list.
void print_catalogue(std::ostream& os);

}  // namespace csg
