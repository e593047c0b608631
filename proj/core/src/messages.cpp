#include "floodbc/messages.hpp"

#include <set>

namespace floodbc {

namespace {
constexpr uint8_t kTypedTag = 0x54;  // 'T'
}

Payload bit_message(int bit) { return Payload{static_cast<uint8_t>(bit & 1)}; }

Payload encode_typed(const TypedMessage& msg) {
  Payload out;
  out.reserve(3 + msg.chain.size() * 10);
  out.push_back(kTypedTag);
  out.push_back(static_cast<uint8_t>(msg.bit & 1));
  out.push_back(static_cast<uint8_t>(msg.chain.size()));
  for (const ChainSig& sig : msg.chain) {
    out.push_back(static_cast<uint8_t>(sig.signer & 0xff));
    out.push_back(static_cast<uint8_t>((sig.signer >> 8) & 0xff));
    for (int i = 0; i < 8; ++i) {
      out.push_back(static_cast<uint8_t>(sig.token >> (8 * i)));
    }
  }
  return out;
}

std::optional<TypedMessage> decode_typed(const Payload& payload) {
  if (payload.size() < 3 || payload[0] != kTypedTag) return std::nullopt;
  const size_t count = payload[2];
  if (payload.size() != 3 + count * 10) return std::nullopt;
  TypedMessage msg;
  msg.bit = payload[1] & 1;
  msg.chain.reserve(count);
  size_t at = 3;
  for (size_t i = 0; i < count; ++i) {
    ChainSig sig;
    sig.signer = payload[at] | (payload[at + 1] << 8);
    at += 2;
    sig.token = 0;
    for (int b = 0; b < 8; ++b) {
      sig.token |= static_cast<uint64_t>(payload[at++]) << (8 * b);
    }
    msg.chain.push_back(sig);
  }
  return msg;
}

bool chain_contains(const TypedMessage& msg, PartyId party) {
  for (const ChainSig& sig : msg.chain) {
    if (sig.signer == party) return true;
  }
  return false;
}

int valid_signature_count(const TypedMessage& msg,
                          const SignatureRegistry& registry,
                          const std::function<bool(PartyId)>& committee_check,
                          PartyId sender) {
  const Payload message = bit_message(msg.bit);
  std::set<PartyId> counted;
  bool sender_present = false;
  for (const ChainSig& sig : msg.chain) {
    if (counted.count(sig.signer)) continue;
    if (!registry.verify(message, sig.signer)) continue;
    if (sig.signer == sender) {
      sender_present = true;
    } else if (!committee_check(sig.signer)) {
      continue;
    }
    counted.insert(sig.signer);
  }
  if (!sender_present) return 0;
  return static_cast<int>(counted.size());
}

int64_t typed_message_bits(size_t chain_len, int kappa) {
  return 1 + static_cast<int64_t>(chain_len) * kappa;
}

}  // namespace floodbc
