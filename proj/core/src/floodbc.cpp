#include "floodbc/floodbc.hpp"

#include <cmath>
#include <tuple>

namespace floodbc {

FloodBcParams floodbc_params(int n, double epsilon, int kappa) {
  FloodBcParams params;
  params.stages = static_cast<int>(std::ceil(3.0 * (kappa + 1) / epsilon));
  params.rho = flood_round_count(n, kappa);
  params.p_flood = flood_probability(n, epsilon, kappa);
  params.p_mine = mine_probability(n, kappa, epsilon);
  params.total_rounds = 1 + 2 * (params.stages + 1) * params.rho;
  return params;
}

FloodBcProtocol::FloodBcProtocol(const PartyContext& ctx)
    : id_(ctx.id),
      n_(ctx.n),
      kappa_(ctx.kappa),
      input_(ctx.input),
      tape_key_(ctx.tape_key),
      registry_(ctx.registry),
      oracle_(ctx.oracle),
      resample_(ctx.spec->resample_neighbors),
      params_(floodbc_params(ctx.n, ctx.epsilon, ctx.kappa)) {
  // Stage-0 oracle query; the coin is recorded, so verification by other
  // parties works from round 1 on.
  committee_ = oracle_->mine(id_, 0) == 1;
}

int FloodBcProtocol::valid_rank(const TypedMessage& msg) const {
  return valid_signature_count(
      msg, *registry_,
      [this](PartyId signer) { return oracle_->verify_mine(0, signer) == 1; },
      kSender);
}

void FloodBcProtocol::ingest(std::span<const Envelope> inbox) {
  for (const Envelope& env : inbox) {
    auto msg = decode_typed(env.payload);
    if (!msg) continue;
    const int bit = msg->bit & 1;
    // Window receipt statistics: attribute by the delivery round.
    if (env.round >= 2) {
      const int window = (env.round - 2) / params_.rho;
      const int stage = window / 2 + 1;
      const int need = (window % 2 == 0) ? stage : stage + 1;
      if (valid_rank(*msg) >= need) {
        auto& stat = stats_[{window, bit}];
        stat.received = true;
      }
    }
    if (seen_[bit].insert(env.payload).second) {
      store_[bit].push_back({std::move(*msg), env.payload, env.round, env.src});
    }
  }
}

const FloodBcProtocol::StoredMessage* FloodBcProtocol::select(
    int bit, int min_rank) const {
  const StoredMessage* best = nullptr;
  for (const StoredMessage& stored : store_[bit]) {
    if (valid_rank(stored.msg) < min_rank) continue;
    if (best == nullptr ||
        std::tie(stored.arrival_round, stored.arrival_src, stored.payload) <
            std::tie(best->arrival_round, best->arrival_src, best->payload)) {
      best = &stored;
    }
  }
  return best;
}

void FloodBcProtocol::ensure_neighbors(int window, int bit,
                                       WindowRelay& relay) {
  if (relay.neighbors_ready) return;
  relay.neighbors_ready = true;
  if (resample_) {
    const uint64_t instance = 1 + 2 * static_cast<uint64_t>(window) + bit;
    relay.state.neighbors = flood_sample_neighbors(tape_key_, instance, n_,
                                                   id_, params_.p_flood);
    return;
  }
  if (!static_neighbors_ready_) {
    static_neighbors_ready_ = true;
    static_neighbors_ =
        flood_sample_neighbors(tape_key_, 0, n_, id_, params_.p_flood);
  }
  relay.state.neighbors = static_neighbors_;
}

void FloodBcProtocol::start_window(int window) {
  current_window_ = window;
  const int stage = window / 2 + 1;
  const int mini = window % 2 + 1;
  relays_[0] = {};
  relays_[1] = {};

  for (int bit = 0; bit < 2; ++bit) {
    if (ext_.count(bit)) continue;
    if (mini == 2 && !committee_) continue;
    const StoredMessage* found = select(bit, stage);
    if (!found) continue;

    ext_.insert(bit);
    extractions_.push_back({bit, stage, mini});
    if (mini == 1) {
      relays_[bit].input = found->payload;
    } else {
      // Countersign to lift the message to rank stage+1; impossible when
      // this member's signature is already on the chain.
      if (chain_contains(found->msg, id_)) continue;
      TypedMessage extended = found->msg;
      extended.chain.push_back(
          {id_, registry_->sign(id_, bit_message(bit))});
      relays_[bit].input = encode_typed(extended);
    }
    stats_[{window, bit}].initiated = true;
  }
}

void FloodBcProtocol::relay_step(int window, int window_round,
                                 std::span<const Envelope> inbox,
                                 Outbox& out) {
  const int stage = window / 2 + 1;
  const int mini = window % 2 + 1;
  const int need = (mini == 1) ? stage : stage + 1;

  for (int bit = 0; bit < 2; ++bit) {
    WindowRelay& relay = relays_[bit];
    if (relay.state.relayed) continue;

    std::vector<std::pair<PartyId, Payload>> candidates;
    if (window_round >= 2) {
      for (const Envelope& env : inbox) {
        auto msg = decode_typed(env.payload);
        if (!msg || (msg->bit & 1) != bit) continue;
        if (valid_rank(*msg) < need) continue;
        candidates.emplace_back(env.src, env.payload);
      }
    }
    if (window_round == 1 && !relay.input) continue;
    if (window_round >= 2 && candidates.empty()) continue;

    ensure_neighbors(window, bit, relay);
    auto sends = flood_round(relay.state, window_round, relay.input,
                             candidates, [](const Payload&) { return true; });
    for (auto& send : sends) {
      const size_t chain_len = (send.payload.size() - 3) / 10;
      out.send(send.dst, std::move(send.payload),
               typed_message_bits(chain_len, kappa_));
    }
  }
}

void FloodBcProtocol::on_round(int round, std::span<const Envelope> prev_inbox,
                               Outbox& out) {
  ingest(prev_inbox);

  if (round == 1) {
    if (id_ != kSender) return;
    TypedMessage msg;
    msg.bit = input_.value_or(0) & 1;
    msg.chain.push_back({id_, registry_->sign(id_, bit_message(msg.bit))});
    const Payload payload = encode_typed(msg);
    // The sender holds its own stage-0 message (internal state, never an
    // envelope); arrival key (0, self) sorts ahead of any delivery.
    seen_[msg.bit].insert(payload);
    store_[msg.bit].push_back({msg, payload, 0, id_});
    const int64_t bits = typed_message_bits(1, kappa_);
    for (PartyId dst = 1; dst <= n_; ++dst) {
      if (dst != id_) out.send(dst, payload, bits);
    }
    return;
  }

  const int window = (round - 2) / params_.rho;
  const int window_round = (round - 2) % params_.rho + 1;
  if (window_round == 1) start_window(window);
  relay_step(window, window_round, prev_inbox, out);
}

void FloodBcProtocol::on_final(std::span<const Envelope> last_inbox) {
  ingest(last_inbox);
}

std::optional<int> FloodBcProtocol::output() const {
  if (ext_.size() == 1) return *ext_.begin();
  return 0;
}

void FloodBcProtocol::report(PartyReport& report) const {
  if (!resample_) {
    report.neighbors = static_neighbors_ready_
                           ? static_neighbors_
                           : flood_sample_neighbors(tape_key_, 0, n_, id_,
                                                    params_.p_flood);
  }
  for (const auto& [key, stat] : stats_) {
    report.flood_stats.push_back(
        {key.first, key.second, stat.initiated, stat.received});
  }
  report.extractions = extractions_;
}

}  // namespace floodbc
