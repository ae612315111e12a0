#pragma once

#include <string>
#include <vector>

namespace geomwave {

struct IdentityCheck {
  std::string name;
  std::vector<int> indices;
  double max_deviation = 0;
  bool pass = false;
};

/// Every exact identity of the gamma, spin and block-gamma matrices:
/// 16 anticommutators {gamma^mu, gamma^nu} = 2 g^{mu nu} I, 9 commutators
/// [S_i, S_j] = i eps_ijk S_k, hermiticity, S_i^3 = S_i, (Gamma^0)^2 = I.
/// Comparisons are exact, so a check passes only with zero deviation.
std::vector<IdentityCheck> run_algebra_checks();

}  // namespace geomwave
