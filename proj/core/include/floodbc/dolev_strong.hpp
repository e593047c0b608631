#pragma once

#include <set>

#include "floodbc/engine.hpp"
#include "floodbc/messages.hpp"

namespace floodbc {

// Classic Dolev-Strong over the ideal signature registry: t+1 rounds, the
// sender signs and multicasts its bit, every party relays each newly
// extracted bit once with its own signature appended. Output is the unique
// extracted bit, default 0 otherwise. Quadratic-message baseline for the
// communication comparison.
class DolevStrongProtocol : public PartyProtocol {
 public:
  DolevStrongProtocol(const PartyContext& ctx);

  void on_round(int round, std::span<const Envelope> prev_inbox,
                Outbox& out) override;
  void on_final(std::span<const Envelope> last_inbox) override;
  std::optional<int> output() const override;

  static int rounds_for(int n, int ds_t);

 private:
  // Extracts bits backed by at least min_sigs valid distinct signatures
  // (sender's included); returns the chains to extend and relay.
  std::vector<TypedMessage> extract(std::span<const Envelope> inbox,
                                    int min_sigs);

  PartyId id_;
  int n_;
  std::optional<int> input_;
  SignatureRegistry* registry_;
  std::set<int> ext_;
  int total_rounds_;
};

}  // namespace floodbc
