#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "floodbc/crypto.hpp"
#include "floodbc/types.hpp"

namespace floodbc {

// Signature chain entry. The token is carried for the bit accounting and
// payload identity; validation goes through the registry.
struct ChainSig {
  PartyId signer = 0;
  SignatureToken token = 0;

  friend bool operator==(const ChainSig&, const ChainSig&) = default;
};

// T_{b,r} message: a bit plus an ordered signature chain. Valid as type
// T_{b,r} iff it carries at least r verifying signatures on b from distinct
// parties, including the sender's, with every non-sender signer in the
// committee.
struct TypedMessage {
  int bit = 0;
  std::vector<ChainSig> chain;

  friend bool operator==(const TypedMessage&, const TypedMessage&) = default;
};

// Canonical one-byte message that signers sign: the bit itself.
Payload bit_message(int bit);

Payload encode_typed(const TypedMessage& msg);
std::optional<TypedMessage> decode_typed(const Payload& payload);

bool chain_contains(const TypedMessage& msg, PartyId party);

// Number of signatures that count toward the type rank: nothing counts
// unless the sender's valid signature is present; beyond that, one per
// distinct signer whose signature verifies and who passes the committee
// check. Extra junk entries reduce nothing.
int valid_signature_count(const TypedMessage& msg,
                          const SignatureRegistry& registry,
                          const std::function<bool(PartyId)>& committee_check,
                          PartyId sender);

// Accounting size of a typed-message envelope: the bit plus kappa bits per
// carried signature, no header overhead.
int64_t typed_message_bits(size_t chain_len, int kappa);

}  // namespace floodbc
