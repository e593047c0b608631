#pragma once

#include <map>
#include <set>

#include "floodbc/flood.hpp"
#include "floodbc/messages.hpp"

namespace floodbc {

struct FloodBcParams {
  int stages = 0;  // R
  int rho = 0;
  double p_flood = 0.0;
  double p_mine = 0.0;
  int total_rounds = 0;  // 1 + 2 (R+1) rho
};

FloodBcParams floodbc_params(int n, double epsilon, int kappa);

// Committee-based broadcast over the flood propagation mechanism.
//
// Round 1 is stage 0: the sender signs its bit and sends it to everyone;
// every party queries the committee-election oracle once. Each stage
// r = 1..R+1 then runs two mini-stages, each a full flood window of rho
// engine rounds. At a window start parties scan their accumulated view:
// mini-stage 1 extracts any bit backed by a T_{b,r} message and floods that
// message; mini-stage 2 lets committee members extract, countersign to form
// a T_{b,r+1} message, and flood it. After the last window each party
// outputs the unique extracted bit, or 0.
class FloodBcProtocol : public PartyProtocol {
 public:
  FloodBcProtocol(const PartyContext& ctx);

  void on_round(int round, std::span<const Envelope> prev_inbox,
                Outbox& out) override;
  void on_final(std::span<const Envelope> last_inbox) override;
  std::optional<int> output() const override;
  void report(PartyReport& report) const override;

  bool committee_member() const { return committee_; }
  const std::set<int>& ext() const { return ext_; }

 private:
  struct StoredMessage {
    TypedMessage msg;
    Payload payload;
    int arrival_round = 0;
    PartyId arrival_src = 0;
  };

  struct WindowRelay {
    FloodRelayState state;
    std::optional<Payload> input;
    bool neighbors_ready = false;
  };

  struct InstanceStat {
    bool initiated = false;
    bool received = false;
  };

  void ingest(std::span<const Envelope> inbox);
  const StoredMessage* select(int bit, int min_rank) const;
  int valid_rank(const TypedMessage& msg) const;
  void start_window(int window);
  void ensure_neighbors(int window, int bit, WindowRelay& relay);
  void relay_step(int window, int window_round,
                  std::span<const Envelope> inbox, Outbox& out);

  PartyId id_;
  int n_;
  int kappa_;
  std::optional<int> input_;
  uint64_t tape_key_;
  SignatureRegistry* registry_;
  MineOracle* oracle_;
  bool resample_;
  FloodBcParams params_;

  bool committee_ = false;
  std::set<int> ext_;
  std::vector<StoredMessage> store_[2];
  std::set<Payload> seen_[2];
  WindowRelay relays_[2];
  int current_window_ = -1;
  std::vector<PartyId> static_neighbors_;
  bool static_neighbors_ready_ = false;

  std::map<std::pair<int, int>, InstanceStat> stats_;
  std::vector<std::array<int, 3>> extractions_;
};

}  // namespace floodbc
