#include "avoid321/involutions.hpp"

#include "avoid321/enumeration.hpp"
#include "avoid321/errors.hpp"
#include "avoid321/tableau.hpp"

namespace avoid321 {

std::string to_string(Branch b) {
  switch (b) {
    case Branch::p_side: return "P-side";
    case Branch::q_side: return "Q-side";
    case Branch::q_phi: return "Q-phi";
    case Branch::q_psi_forward: return "Q-psi-forward";
    case Branch::q_psi_inverse: return "Q-psi-inverse";
    case Branch::fixed: return "fixed";
  }
  return "?";
}

namespace {

struct BallotPair {
  BallotSequence p;
  BallotSequence q;
};

BallotPair ballots_of(const Permutation& w) {
  if (!is_321_avoiding(w)) throw Not321Avoiding("permutation " + to_string(w) + " contains 321");
  const TableauPair pq = rsk(w);
  return {tableau_to_ballot(pq.insertion), tableau_to_ballot(pq.recording)};
}

MapOutcome realize(const Permutation& w, const BallotPair& before, BallotSequence p_after,
                   BallotSequence q_after, Branch branch) {
  MapOutcome out;
  out.branch = branch;
  out.p_before = before.p;
  out.q_before = before.q;
  if (branch == Branch::fixed) {
    out.image = w;
  } else {
    out.image = inverse_rsk({ballot_to_tableau(p_after), ballot_to_tableau(q_after)});
  }
  out.p_after = std::move(p_after);
  out.q_after = std::move(q_after);
  out.fixed = out.image == w;
  return out;
}

}  // namespace

MapOutcome capital_phi(const Permutation& w) {
  const BallotPair pq = ballots_of(w);
  if (epsilon(pq.p) > 0) return realize(w, pq, phi(pq.p), pq.q, Branch::p_side);
  if (epsilon(pq.q) > 0) return realize(w, pq, pq.p, phi(pq.q), Branch::q_side);
  return realize(w, pq, pq.p, pq.q, Branch::fixed);
}

MapOutcome capital_psi(const Permutation& w) {
  const BallotPair pq = ballots_of(w);
  if (epsilon(pq.p) > 0) return realize(w, pq, phi(pq.p), pq.q, Branch::p_side);

  const BallotClass q_class = classify(pq.q);
  if (q_class.tag == BallotTag::b) return realize(w, pq, pq.p, phi(pq.q), Branch::q_phi);

  const int n = w.size();
  const int k = ones_count(pq.p);
  const int d = ldes(w);
  if ((n - k) % 2 == 0 && d % 2 == 1) {
    if (q_class.tag == BallotTag::a_star) {
      return realize(w, pq, pq.p, psi(pq.q, d), Branch::q_psi_forward);
    }
    if (in_b_star_star(q_class)) {
      return realize(w, pq, pq.p, psi_inverse(pq.q, d), Branch::q_psi_inverse);
    }
  }
  return realize(w, pq, pq.p, pq.q, Branch::fixed);
}

Permutation ldes_lind_bijection(const Permutation& w) {
  if (!is_321_avoiding(w)) throw Not321Avoiding("permutation " + to_string(w) + " contains 321");
  const int n = w.size();
  const int d = ldes(w);
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n));
  for (int v : w.values()) {
    if (v != n) rest.push_back(v);
  }
  rest.insert(rest.begin() + d, n);
  return Permutation(std::move(rest));
}

Permutation ldes_lind_bijection_inverse(const Permutation& sigma) {
  if (!is_321_avoiding(sigma)) throw Not321Avoiding("permutation " + to_string(sigma) + " contains 321");
  const int n = sigma.size();
  const int d = lind(sigma) - 1;
  std::vector<int> rest;
  rest.reserve(static_cast<std::size_t>(n));
  for (int v : sigma.values()) {
    if (v != n) rest.push_back(v);
  }
  // Preimages either end in n (and then ldes of the rest is d) or carry n
  // at position d, where it is the last descent.
  std::vector<int> candidate = rest;
  candidate.push_back(n);
  Permutation at_end(std::move(candidate));
  if (ldes(at_end) == d) return at_end;
  if (d >= 1) {
    rest.insert(rest.begin() + (d - 1), n);
    Permutation moved(std::move(rest));
    if (is_321_avoiding(moved) && ldes(moved) == d) return moved;
  }
  throw InternalInconsistency("no preimage under the ldes/lind bijection for " + to_string(sigma));
}

std::vector<Permutation> fixed_points_of(TableauMap map, int n) {
  std::vector<Permutation> out;
  for_each_Tn_ballot(n, [&](const Permutation& w) {
    const MapOutcome o = map == TableauMap::capital_phi ? capital_phi(w) : capital_psi(w);
    if (o.fixed) out.push_back(w);
  });
  return out;
}

}  // namespace avoid321
