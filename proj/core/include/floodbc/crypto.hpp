#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "floodbc/rng.hpp"
#include "floodbc/types.hpp"

namespace floodbc {

using SignatureToken = uint64_t;

// Ideal signature functionality. verify(m, i) == 1 exactly when party i has
// signed m; there is no forgery slack, so tests need no cryptographic
// tolerance. Each transmitted signature is charged kappa bits. Corruption
// grants signing rights for the corrupted party only, never forgery of
// other parties' signatures.
class SignatureRegistry {
 public:
  explicit SignatureRegistry(int kappa) : kappa_(kappa) {}

  SignatureToken sign(PartyId signer, const Payload& message);
  bool verify(const Payload& message, PartyId signer) const;

  int sig_bit_cost() const { return kappa_; }

 private:
  int kappa_;
  std::set<std::pair<PartyId, Payload>> signed_;
};

// F_mine committee-election oracle with success probability
// p = min(1, (kappa+1)/(eps*n)). Coins are a pure function of
// (execution seed, party, bit), so the recorded result is identical no
// matter which component queries first; repeat calls return the record.
class MineOracle {
 public:
  MineOracle(uint64_t execution_seed, int n, int kappa, double epsilon);

  int mine(PartyId party, int bit);
  // 1 iff `party` already called mine(bit) and the recorded result was 1.
  // Never draws a coin.
  int verify_mine(int bit, PartyId party) const;

  double p() const { return p_; }

 private:
  uint64_t seed_;
  double p_;
  std::map<std::pair<PartyId, int>, int> mined_;
};

double mine_probability(int n, int kappa, double epsilon);

// Stage-0 election: every party in [1, n] calls mine(i, 0) once; the
// committee is everyone whose coin came up 1.
std::set<PartyId> elect_committee(MineOracle& oracle, int n);

}  // namespace floodbc
