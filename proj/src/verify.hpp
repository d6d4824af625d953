#ifndef REHO_VERIFY_HPP
#define REHO_VERIFY_HPP

#include <string>
#include <vector>

namespace reho::verify {

struct check_result {
  std::string name;
  double measured;
  double tolerance;
  bool passed;
};

// Runs the invariant suites of every module and returns one result per
// check. Covers orthonormality and residuals of the spectra, the ladder
// algebra and its differential cross-check, coherent-state defining
// properties, closed-form energies and overlaps, density normalization,
// periodicity, and cat-state structure.
std::vector<check_result> run_verification();

}  // namespace reho::verify

#endif
