#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace floodbc {

// Parties are indexed 1..n. Party 1 is the designated sender.
using PartyId = int;
inline constexpr PartyId kSender = 1;

using Payload = std::vector<uint8_t>;

// One point-to-point message. bit_size is the accounting size under the
// bit model (payload bits plus kappa per carried signature); it is set by
// the emitting protocol, not derived from the serialized length.
struct Envelope {
  PartyId src = 0;
  PartyId dst = 0;
  int round = 0;
  Payload payload;
  int64_t bit_size = 0;

  friend bool operator==(const Envelope&, const Envelope&) = default;
};

// Dealer output: r_i per party. By convention r_i carries the party's full
// randomness tape (an 8-byte stream key), so a corrupted party can be
// replayed exactly from its setup entry.
struct SetupBundle {
  std::map<PartyId, Payload> per_party;
};

uint64_t tape_key_from_setup(const Payload& setup);
Payload setup_from_tape_key(uint64_t key);

struct CorruptionRecord {
  int round = 0;  // 0 = static (before round 1)
  PartyId party = 0;
  std::string reason;
};

struct TranscriptEntry {
  Envelope env;
  bool honest_emission = false;
};

struct TranscriptMetrics {
  int64_t honest_msg_count = 0;
  int64_t total_msg_count = 0;
  int64_t total_bits = 0;
  std::map<PartyId, std::set<PartyId>> out_edges;  // honest emissions only
  std::vector<int64_t> per_round_counts;
  int flood_failures = 0;
};

struct PropertyVerdict {
  bool termination_ok = false;
  bool agreement_ok = false;
  std::optional<bool> validity_ok;  // defined only when sender ends honest
};

enum class ProtocolKind { Flood, FloodBc, DolevStrong, Strawman };

std::string protocol_name(ProtocolKind kind);
ProtocolKind protocol_from_name(const std::string& name);

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::FloodBc;
  // Strawman fan-outs. sender_fanout < 0 means "same as delta";
  // sender_fanout == n-1 makes the sender address every party.
  int delta = 2;
  int sender_fanout = -1;
  // Dolev-Strong round budget t (rounds = t + 1); 0 means floor(n/2).
  int ds_t = 0;
  // Resample flood neighborhoods per instance (used in adaptive scenarios;
  // static scenarios keep one neighborhood per party per execution).
  bool resample_neighbors = false;
  // Standalone flood only: parties holding the typed input (the payload bit
  // is the configured sender input). Empty means {1}.
  std::set<PartyId> flood_holders;
};

enum class AdversaryKind {
  Passive,
  CrashSet,
  CrashRandom,
  EquivocatingSender,
  StaticSplit,
  AdaptiveLocality,
};

std::string adversary_name(AdversaryKind kind);
AdversaryKind adversary_from_name(const std::string& name);

struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::Passive;
  std::set<PartyId> crash_targets;      // CrashSet
  int crash_count = 0;                  // CrashRandom
  bool crash_may_hit_sender = false;    // CrashRandom
  int honest_count = 0;                 // StaticSplit: |S| + 1 = round(eps*n)
  PartyId i_star = 0;                   // AdaptiveLocality: 0 means party n
  int locality_budget = 0;              // AdaptiveLocality: k
  std::optional<int> forced_side;       // AdaptiveLocality: pin b (tests)
};

struct ExecutionConfig {
  int n = 0;
  int kappa = 1;
  double epsilon = 0.5;
  int sender_input = 0;
  ProtocolSpec protocol;
  AdversarySpec adversary;
  uint64_t seed = 0;
  int round_cap = 0;  // 0 = 4 * protocol round count
  // Whether the rushing adversary sees honest-to-honest payloads. Metadata
  // (src, dst, round, size) is always visible.
  bool adversary_sees_honest_traffic = true;
};

// Attack bookkeeping published by the lower-bound adversaries so metrics
// and tests can locate the attack's honest set.
struct AttackInfo {
  std::set<PartyId> split_s;            // S (static split)
  PartyId i_star = 0;                   // both attacks
  std::set<PartyId> side_a;             // A (static split)
  std::set<PartyId> side_b;             // B (static split)
  int side_bit = -1;                    // b (adaptive)
  int receive_corruptions = 0;          // adaptive
  bool locality_exceeded = false;       // adaptive: budget k would overflow
};

// Per-flood-instance outcome, aggregated over end-honest parties.
struct FloodInstanceReport {
  int instance = 0;  // window index (0 for standalone flood)
  int bit = -1;      // typed-message bit, -1 for standalone
  int initiators = 0;
  int non_initiators = 0;
  int received = 0;  // non-initiators that got a type message in the window
  bool failed = false;
};

// Internal engine self-checks, recomputed every run.
struct EngineAudit {
  bool rushing_order_ok = true;
  bool delivery_conservation_ok = true;
  bool atomic_multisend_ok = true;
  int64_t honest_emitted = 0;
  int64_t adversary_emitted = 0;
};

struct ExecutionResult {
  std::map<PartyId, std::optional<int>> outputs;  // end-honest parties only
  std::vector<CorruptionRecord> corruption_timeline;
  std::vector<TranscriptEntry> transcript;
  TranscriptMetrics metrics;
  PropertyVerdict verdict;
  int termination_round = 0;
  std::set<PartyId> end_honest;
  std::optional<AttackInfo> attack;
  std::vector<FloodInstanceReport> flood_reports;
  std::map<PartyId, std::vector<PartyId>> neighbor_sets;
  // (party, bit, stage, mini) extraction events, floodbc only.
  std::vector<std::array<int, 4>> extraction_log;
  EngineAudit audit;
};

// Canonical dump used by the determinism contract: two runs with the same
// (config, seed) must produce byte-identical serializations.
std::string serialize_result(const ExecutionResult& result);

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RoundCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace floodbc
