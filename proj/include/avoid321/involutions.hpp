#pragma once

#include <string>
#include <vector>

#include "avoid321/ballot.hpp"
#include "avoid321/permutation.hpp"

namespace avoid321 {

/// Which definitional case of a tableau-level map fired.
enum class Branch { p_side, q_side, q_phi, q_psi_forward, q_psi_inverse, fixed };

/// "P-side", "Q-side", "Q-phi", "Q-psi-forward", "Q-psi-inverse" or "fixed".
std::string to_string(Branch b);

/// Result of applying Phi or Psi, with the ballot pairs before and after for
/// auditing.
struct MapOutcome {
  Permutation image;
  bool fixed = false;
  Branch branch = Branch::fixed;
  BallotSequence p_before;
  BallotSequence q_before;
  BallotSequence p_after;
  BallotSequence q_after;
};

/// Sign-reversing, lis-preserving involution on T_n: phi on the insertion
/// ballot if it is in A, else phi on the recording ballot if it is in A,
/// else fixed.
MapOutcome capital_phi(const Permutation& w);

/// Refinement of capital_phi that also preserves ldes. Uses psi / psi_inverse
/// on the recording ballot when P is in A*, Q is in A* or B**, n - lis is
/// even and ldes is odd.
MapOutcome capital_psi(const Permutation& w);

/// Deletes the letter n and reinserts it directly after position ldes(w),
/// so that lind of the image is ldes(w) + 1.
Permutation ldes_lind_bijection(const Permutation& w);
Permutation ldes_lind_bijection_inverse(const Permutation& sigma);

enum class TableauMap { capital_phi, capital_psi };

/// All w in T_n fixed by the map, in ballot-generator order.
std::vector<Permutation> fixed_points_of(TableauMap map, int n);

}  // namespace avoid321
