#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "floodbc/engine.hpp"
#include "floodbc/types.hpp"

namespace floodbc {

// p_flood = (ln n + kappa) / (eps * n), clamped to [0, 1]. Natural log
// throughout, consistent with the round-count formula.
double flood_probability(int n, double epsilon, int kappa);

// rho = ceil(7 ln(n / (2 (ln n + kappa))) + 2), at least 1.
int flood_round_count(int n, int kappa);

// Directed out-neighborhood: every other party independently with
// probability p. Pure function of (tape, instance), so resampling order
// never matters and replayed executions agree.
std::vector<PartyId> flood_sample_neighbors(uint64_t tape_key,
                                            uint64_t instance, int n,
                                            PartyId self, double p_flood);

struct FloodRelayState {
  std::vector<PartyId> neighbors;
  bool relayed = false;
  std::optional<Payload> output;
};

using TypePredicate = std::function<bool(const Payload&)>;

struct RelaySend {
  PartyId dst;
  Payload payload;
};

// One relay transition. Round 1 forwards the party's own input if it is of
// the given type; rounds 2..rho forward the first type message received in
// the previous round (ordered by source id, then lexicographic payload)
// unless the party already relayed. Forwarding sets the output.
std::vector<RelaySend> flood_round(
    FloodRelayState& state, int round, const std::optional<Payload>& input,
    std::span<const std::pair<PartyId, Payload>> prev_round,
    const TypePredicate& is_type);

// A type message received in the final round can no longer be relayed but
// still becomes the party's output.
void flood_absorb_terminal(
    FloodRelayState& state,
    std::span<const std::pair<PartyId, Payload>> last_round,
    const TypePredicate& is_type);

// Standalone Protocol-1 payloads: tag byte + bit.
Payload flood_payload(int bit);
bool is_flood_typed(const Payload& payload);

class FloodProtocol : public PartyProtocol {
 public:
  FloodProtocol(const PartyContext& ctx, int rounds);

  void on_round(int round, std::span<const Envelope> prev_inbox,
                Outbox& out) override;
  void on_final(std::span<const Envelope> last_inbox) override;
  std::optional<int> output() const override;
  void report(PartyReport& report) const override;

 private:
  std::vector<std::pair<PartyId, Payload>> typed_of(
      std::span<const Envelope> inbox) const;

  FloodRelayState state_;
  std::optional<Payload> input_;
  bool received_ = false;
  int rounds_;
};

// Runs the standalone flood protocol under the given config and returns
// each end-honest party's typed output (absent when nothing propagated).
std::map<PartyId, std::optional<Payload>> flood_run(const ExecutionConfig& cfg,
                                                    ExecutionResult* result_out = nullptr);

}  // namespace floodbc
