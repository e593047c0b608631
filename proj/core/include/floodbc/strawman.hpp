#pragma once

#include <optional>

#include "floodbc/engine.hpp"
#include "floodbc/messages.hpp"

namespace floodbc {

// Deliberately sparse broadcast candidate used as the lower-bound attack
// target. The sender signs its bit and sends it to sender_fanout parties;
// every recipient forwards the message once to delta random parties; three
// rounds total. Output is the bit of the first validly signed message
// received (earliest round, then source id, then payload), default 0.
// Target choices are a pure function of the party tape, independent of the
// input bit. No agreement mechanism whatsoever.
class StrawmanProtocol : public PartyProtocol {
 public:
  StrawmanProtocol(const PartyContext& ctx);

  void on_round(int round, std::span<const Envelope> prev_inbox,
                Outbox& out) override;
  void on_final(std::span<const Envelope> last_inbox) override;
  std::optional<int> output() const override;

  static constexpr int kRounds = 3;

  const std::vector<PartyId>& targets() const { return targets_; }

 private:
  void observe(std::span<const Envelope> inbox);

  PartyId id_;
  int n_;
  std::optional<int> input_;
  SignatureRegistry* registry_;
  std::vector<PartyId> targets_;
  bool forwarded_ = false;
  std::optional<Payload> first_valid_;
};

}  // namespace floodbc
