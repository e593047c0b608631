#include "floodbc/types.hpp"

#include <sstream>

namespace floodbc {

uint64_t tape_key_from_setup(const Payload& setup) {
  uint64_t key = 0;
  for (size_t i = 0; i < 8 && i < setup.size(); ++i) {
    key |= static_cast<uint64_t>(setup[i]) << (8 * i);
  }
  return key;
}

Payload setup_from_tape_key(uint64_t key) {
  Payload bytes(8);
  for (size_t i = 0; i < 8; ++i) {
    bytes[i] = static_cast<uint8_t>(key >> (8 * i));
  }
  return bytes;
}

std::string protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Flood: return "flood";
    case ProtocolKind::FloodBc: return "floodbc";
    case ProtocolKind::DolevStrong: return "dolev-strong";
    case ProtocolKind::Strawman: return "strawman";
  }
  return "unknown";
}

ProtocolKind protocol_from_name(const std::string& name) {
  if (name == "flood") return ProtocolKind::Flood;
  if (name == "floodbc") return ProtocolKind::FloodBc;
  if (name == "dolev-strong") return ProtocolKind::DolevStrong;
  if (name == "strawman") return ProtocolKind::Strawman;
  throw ConfigError("unknown protocol: " + name);
}

std::string adversary_name(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::Passive: return "passive";
    case AdversaryKind::CrashSet: return "crash-set";
    case AdversaryKind::CrashRandom: return "crash-random";
    case AdversaryKind::EquivocatingSender: return "equivocate";
    case AdversaryKind::StaticSplit: return "static-split";
    case AdversaryKind::AdaptiveLocality: return "adaptive-locality";
  }
  return "unknown";
}

AdversaryKind adversary_from_name(const std::string& name) {
  if (name == "passive") return AdversaryKind::Passive;
  if (name == "crash-set") return AdversaryKind::CrashSet;
  if (name == "crash-random") return AdversaryKind::CrashRandom;
  if (name == "equivocate") return AdversaryKind::EquivocatingSender;
  if (name == "static-split") return AdversaryKind::StaticSplit;
  if (name == "adaptive-locality") return AdversaryKind::AdaptiveLocality;
  throw ConfigError("unknown adversary: " + name);
}

std::string serialize_result(const ExecutionResult& result) {
  std::ostringstream out;
  out << "outputs:";
  for (const auto& [party, bit] : result.outputs) {
    out << ' ' << party << '=' << (bit ? std::to_string(*bit) : "-");
  }
  out << "\ncorruptions:";
  for (const auto& record : result.corruption_timeline) {
    out << ' ' << record.round << ':' << record.party << ':' << record.reason;
  }
  out << "\nverdict: " << result.verdict.termination_ok << ' '
      << result.verdict.agreement_ok << ' '
      << (result.verdict.validity_ok
              ? std::to_string(*result.verdict.validity_ok)
              : "-");
  out << "\nmetrics: " << result.metrics.honest_msg_count << ' '
      << result.metrics.total_msg_count << ' ' << result.metrics.total_bits
      << ' ' << result.metrics.flood_failures;
  out << "\ntermination_round: " << result.termination_round;
  out << "\ntranscript:\n";
  for (const auto& entry : result.transcript) {
    out << entry.env.round << ' ' << entry.env.src << ' ' << entry.env.dst
        << ' ' << entry.env.bit_size << ' ' << entry.honest_emission << ' ';
    for (uint8_t byte : entry.env.payload) {
      static const char* hex = "0123456789abcdef";
      out << hex[byte >> 4] << hex[byte & 0xf];
    }
    out << '\n';
  }
  if (result.attack) {
    out << "attack: istar=" << result.attack->i_star
        << " side=" << result.attack->side_bit
        << " rc=" << result.attack->receive_corruptions
        << " exceeded=" << result.attack->locality_exceeded << " s=";
    for (PartyId p : result.attack->split_s) out << p << ',';
    out << '\n';
  }
  return out.str();
}

}  // namespace floodbc
