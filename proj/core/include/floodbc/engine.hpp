#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "floodbc/crypto.hpp"
#include "floodbc/rng.hpp"
#include "floodbc/types.hpp"

namespace floodbc {

// Sink for a party's round emissions. The engine stamps src and round;
// machines choose destination, payload and accounting size.
class Outbox {
 public:
  Outbox(PartyId src, int round, int n, std::vector<Envelope>* sink)
      : src_(src), round_(round), n_(n), sink_(sink) {}

  void send(PartyId dst, Payload payload, int64_t bit_size);

  PartyId src() const { return src_; }
  int round() const { return round_; }

 private:
  PartyId src_;
  int round_;
  int n_;
  std::vector<Envelope>* sink_;
};

// Per-party instrumentation harvested at the end of a run.
struct PartyFloodStat {
  int instance = 0;
  int bit = -1;
  bool initiated = false;
  bool received = false;
};

struct PartyReport {
  std::vector<PartyId> neighbors;
  std::vector<PartyFloodStat> flood_stats;
  std::vector<std::array<int, 3>> extractions;  // (bit, stage, mini)
  std::optional<Payload> flood_output;
};

// One party's protocol state machine. Strictly sequential: on_round(r)
// receives the envelopes delivered in round r-1 and returns the party's
// round-r sends through the outbox. Deliveries of the final round are
// passed to on_final (no sends possible).
class PartyProtocol {
 public:
  virtual ~PartyProtocol() = default;
  virtual void on_round(int round, std::span<const Envelope> prev_inbox,
                        Outbox& out) = 0;
  virtual void on_final(std::span<const Envelope> last_inbox) {
    (void)last_inbox;
  }
  virtual std::optional<int> output() const = 0;
  virtual void report(PartyReport& report) const { (void)report; }
};

struct PartyContext {
  PartyId id = 0;
  int n = 0;
  int kappa = 1;
  double epsilon = 0.5;
  uint64_t tape_key = 0;
  std::optional<int> input;
  SignatureRegistry* registry = nullptr;
  MineOracle* oracle = nullptr;
  const ProtocolSpec* spec = nullptr;
};

// Facilities the engine lends to an adversary: spawning honest-logic
// machines for virtual executions and access to the execution's ideal
// functionalities (corruption grants signing/mining rights).
struct EngineServices {
  int n = 0;
  int kappa = 1;
  double epsilon = 0.5;
  const ProtocolSpec* protocol = nullptr;
  SignatureRegistry* registry = nullptr;
  MineOracle* oracle = nullptr;
  std::function<std::unique_ptr<PartyProtocol>(PartyId, uint64_t,
                                               std::optional<int>)>
      spawn;
};

struct RoundActions {
  std::vector<Envelope> envelopes;  // src must be corrupted at emission
  // Corruptions take effect after the target completes its round
  // multisend; all its round-r envelopes are delivered first.
  std::vector<PartyId> corruption_requests;
};

struct CorruptedHandoff {
  PartyId party = 0;
  Payload setup;
  // Full delivery log of the party, ordered by (round, src, arrival).
  const std::vector<Envelope>* inbox = nullptr;
};

class AdversaryStrategy {
 public:
  virtual ~AdversaryStrategy() = default;

  virtual int budget(const ExecutionConfig& cfg) const = 0;

  // Static-corruption phase. Called before the setup bundle is sampled, so
  // the choice cannot depend on it.
  virtual std::set<PartyId> static_corruptions(const ExecutionConfig& cfg,
                                               RngStream& rng) = 0;

  // Setup entries of the statically corrupted parties, revealed after the
  // dealer runs.
  virtual void on_setup(const ExecutionConfig& cfg,
                        const std::map<PartyId, Payload>& corrupted_setup,
                        EngineServices services) {
    (void)cfg;
    (void)corrupted_setup;
    (void)services;
  }

  // Rushing: invoked after all honest round-r envelopes exist and before
  // any corrupted-party envelope of round r is fixed.
  virtual RoundActions on_round(int round,
                                std::span<const Envelope> honest_envelopes) {
    (void)round;
    (void)honest_envelopes;
    return {};
  }

  // Adaptive corruption handoff: setup entry plus the party's full inbox.
  virtual void on_corrupted(const CorruptedHandoff& handoff) { (void)handoff; }

  virtual std::optional<AttackInfo> describe() const { return std::nullopt; }
};

std::unique_ptr<AdversaryStrategy> make_adversary(const AdversarySpec& spec);

// Machine factory and a-priori round count for the configured protocol.
std::unique_ptr<PartyProtocol> make_machine(const ExecutionConfig& cfg,
                                            const PartyContext& ctx);
int declared_rounds(const ExecutionConfig& cfg);

ExecutionResult run_execution(const ExecutionConfig& cfg,
                              AdversaryStrategy& adversary);
ExecutionResult run_execution(const ExecutionConfig& cfg);

// Pure function of the result: Definition-1 verdict.
PropertyVerdict verify_broadcast_properties(const ExecutionResult& result,
                                            const ExecutionConfig& cfg);

void validate_config(const ExecutionConfig& cfg);

}  // namespace floodbc
