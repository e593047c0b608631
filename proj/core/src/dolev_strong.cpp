#include "floodbc/dolev_strong.hpp"

namespace floodbc {

namespace {
bool any_signer(PartyId) { return true; }
}

int DolevStrongProtocol::rounds_for(int n, int ds_t) {
  const int t = ds_t > 0 ? ds_t : n / 2;
  return t + 1;
}

DolevStrongProtocol::DolevStrongProtocol(const PartyContext& ctx)
    : id_(ctx.id),
      n_(ctx.n),
      input_(ctx.input),
      registry_(ctx.registry),
      total_rounds_(rounds_for(ctx.n, ctx.spec->ds_t)) {}

std::vector<TypedMessage> DolevStrongProtocol::extract(
    std::span<const Envelope> inbox, int min_sigs) {
  std::vector<TypedMessage> extracted;
  for (const Envelope& env : inbox) {
    auto msg = decode_typed(env.payload);
    if (!msg || ext_.count(msg->bit)) continue;
    if (valid_signature_count(*msg, *registry_, any_signer, kSender) <
        min_sigs) {
      continue;
    }
    ext_.insert(msg->bit);
    extracted.push_back(std::move(*msg));
    if (ext_.size() == 2) break;
  }
  return extracted;
}

void DolevStrongProtocol::on_round(int round,
                                   std::span<const Envelope> prev_inbox,
                                   Outbox& out) {
  std::vector<TypedMessage> to_relay;
  if (round == 1) {
    if (id_ != kSender) return;
    TypedMessage msg;
    msg.bit = input_.value_or(0);
    msg.chain.push_back({id_, registry_->sign(id_, bit_message(msg.bit))});
    ext_.insert(msg.bit);
    to_relay.push_back(std::move(msg));
  } else {
    // Messages delivered in round r-1 must carry at least r-1 signatures.
    to_relay = extract(prev_inbox, round - 1);
    for (TypedMessage& msg : to_relay) {
      if (!chain_contains(msg, id_)) {
        msg.chain.push_back({id_, registry_->sign(id_, bit_message(msg.bit))});
      }
    }
  }
  for (const TypedMessage& msg : to_relay) {
    const Payload payload = encode_typed(msg);
    const int64_t bits =
        typed_message_bits(msg.chain.size(), registry_->sig_bit_cost());
    for (PartyId dst = 1; dst <= n_; ++dst) {
      if (dst != id_) out.send(dst, payload, bits);
    }
  }
}

void DolevStrongProtocol::on_final(std::span<const Envelope> last_inbox) {
  // Final-round deliveries need the full t+1 signatures; they update the
  // extracted set but can no longer be relayed.
  extract(last_inbox, total_rounds_);
}

std::optional<int> DolevStrongProtocol::output() const {
  if (ext_.size() == 1) return *ext_.begin();
  return 0;
}

}  // namespace floodbc
