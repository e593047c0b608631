#include "floodbc/crypto.hpp"

#include <algorithm>

namespace floodbc {

SignatureToken SignatureRegistry::sign(PartyId signer, const Payload& message) {
  signed_.insert({signer, message});
  // The token is decorative (validation consults the record set); it only
  // needs to be a deterministic function of (signer, message) so that
  // serialized payloads are identical across replayed executions.
  uint64_t h = 0xcbf29ce484222325ULL ^ static_cast<uint64_t>(signer);
  for (uint8_t byte : message) {
    h ^= byte;
    h *= 0x100000001b3ULL;
  }
  return h;
}

bool SignatureRegistry::verify(const Payload& message, PartyId signer) const {
  return signed_.count({signer, message}) > 0;
}

double mine_probability(int n, int kappa, double epsilon) {
  double p = (kappa + 1) / (epsilon * n);
  return std::min(1.0, p);
}

MineOracle::MineOracle(uint64_t execution_seed, int n, int kappa,
                       double epsilon)
    : seed_(execution_seed), p_(mine_probability(n, kappa, epsilon)) {}

int MineOracle::mine(PartyId party, int bit) {
  auto it = mined_.find({party, bit});
  if (it != mined_.end()) return it->second;
  RngStream coin(derive_key(seed_, "mine",
                            static_cast<uint64_t>(party) * 2 +
                                static_cast<uint64_t>(bit)));
  int result = coin.bernoulli(p_) ? 1 : 0;
  mined_.emplace(std::make_pair(party, bit), result);
  return result;
}

int MineOracle::verify_mine(int bit, PartyId party) const {
  auto it = mined_.find({party, bit});
  return (it != mined_.end() && it->second == 1) ? 1 : 0;
}

std::set<PartyId> elect_committee(MineOracle& oracle, int n) {
  std::set<PartyId> committee;
  for (PartyId i = 1; i <= n; ++i) {
    if (oracle.mine(i, 0) == 1) committee.insert(i);
  }
  return committee;
}

}  // namespace floodbc
