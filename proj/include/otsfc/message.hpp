#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "otsfc/bits.hpp"
#include "otsfc/bytes.hpp"

namespace otsfc {

enum class Party : std::uint8_t { alice = 0, bob = 1 };

inline Party other(Party p) {
  return p == Party::alice ? Party::bob : Party::alice;
}
inline const char* party_name(Party p) {
  return p == Party::alice ? "alice" : "bob";
}

/// k x m matrix of 1-based indices into {1..n} telling the sender how to
/// arrange resource bits against its secret matrix.
struct SelectionMatrixPayload {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> entries;  // row-major

  std::uint32_t at(std::size_t row, std::size_t col) const {
    return entries[(row - 1) * cols + (col - 1)];
  }
  bool operator==(const SelectionMatrixPayload&) const = default;
};

struct CipherMatrixPayload {
  BitMatrix cipher;
  bool operator==(const CipherMatrixPayload&) const = default;
};

struct EncodedStringsPayload {
  std::vector<BitString> strings;
  bool operator==(const EncodedStringsPayload&) const = default;
};

struct AbortPayload {
  bool operator==(const AbortPayload&) const = default;
};

using Payload = std::variant<SelectionMatrixPayload, CipherMatrixPayload,
                             EncodedStringsPayload, AbortPayload>;

const char* payload_tag(const Payload& payload);
std::vector<std::uint8_t> serialize_payload(const Payload& payload);

struct Message {
  std::size_t stage = 0;  // 1-based, strictly increasing within a transcript
  Party sender = Party::alice;
  Payload payload;

  bool operator==(const Message&) const = default;
};

std::vector<std::uint8_t> serialize_message(const Message& message);

struct Transcript {
  std::vector<Message> messages;
  std::size_t resource_usage = 0;  // erasure samples consumed
  bool aborted = false;

  bool operator==(const Transcript&) const = default;
};

std::vector<std::uint8_t> serialize_transcript(const Transcript& transcript);

/// One line per message: stage, sender, payload tag, payload byte size,
/// payload hex.
std::string export_transcript(const Transcript& transcript);

}  // namespace otsfc
