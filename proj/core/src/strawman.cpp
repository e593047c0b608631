#include "floodbc/strawman.hpp"

#include <algorithm>

namespace floodbc {

namespace {

bool any_signer(PartyId) { return true; }

std::vector<PartyId> pick_targets(uint64_t tape_key, int n, PartyId self,
                                  int count) {
  count = std::min(count, n - 1);
  RngStream rng(derive_key(tape_key, "strawman-targets", 0));
  // Sample from a range with self removed, then shift back.
  std::vector<PartyId> targets;
  for (int v : rng.sample_distinct(1, n - 1, count)) {
    targets.push_back(v >= self ? v + 1 : v);
  }
  return targets;
}

}  // namespace

StrawmanProtocol::StrawmanProtocol(const PartyContext& ctx)
    : id_(ctx.id), n_(ctx.n), input_(ctx.input), registry_(ctx.registry) {
  const int delta = ctx.spec->delta;
  const int fanout = id_ == kSender
                         ? (ctx.spec->sender_fanout < 0 ? delta
                                                        : ctx.spec->sender_fanout)
                         : delta;
  targets_ = pick_targets(ctx.tape_key, n_, id_, fanout);
}

void StrawmanProtocol::observe(std::span<const Envelope> inbox) {
  // Selection is (arrival round, src, lexicographic payload); an earlier
  // round always wins, so a prior pick is final.
  if (first_valid_) return;
  const Envelope* best = nullptr;
  for (const Envelope& env : inbox) {
    auto msg = decode_typed(env.payload);
    if (!msg) continue;
    if (valid_signature_count(*msg, *registry_, any_signer, kSender) < 1) {
      continue;
    }
    if (best == nullptr || env.src < best->src ||
        (env.src == best->src && env.payload < best->payload)) {
      best = &env;
    }
  }
  if (best) first_valid_ = best->payload;
}

void StrawmanProtocol::on_round(int round, std::span<const Envelope> prev_inbox,
                                Outbox& out) {
  observe(prev_inbox);

  if (round == 1) {
    if (id_ != kSender) return;
    TypedMessage msg;
    msg.bit = input_.value_or(0);
    msg.chain.push_back({id_, registry_->sign(id_, bit_message(msg.bit))});
    const Payload payload = encode_typed(msg);
    const int64_t bits = typed_message_bits(1, registry_->sig_bit_cost());
    for (PartyId dst : targets_) out.send(dst, payload, bits);
    forwarded_ = true;
    return;
  }

  // Forward the first received signed message once, the round after it
  // arrived.
  if (!forwarded_ && first_valid_) {
    forwarded_ = true;
    auto msg = decode_typed(*first_valid_);
    const int64_t bits =
        typed_message_bits(msg->chain.size(), registry_->sig_bit_cost());
    for (PartyId dst : targets_) out.send(dst, *first_valid_, bits);
  }
}

void StrawmanProtocol::on_final(std::span<const Envelope> last_inbox) {
  observe(last_inbox);
}

std::optional<int> StrawmanProtocol::output() const {
  if (id_ == kSender) return input_.value_or(0);
  if (first_valid_) {
    auto msg = decode_typed(*first_valid_);
    return msg->bit;
  }
  return 0;
}

}  // namespace floodbc
