#include "otsfc/message.hpp"

#include <sstream>

namespace otsfc {

namespace {

struct TagVisitor {
  const char* operator()(const SelectionMatrixPayload&) const {
    return "selection";
  }
  const char* operator()(const CipherMatrixPayload&) const { return "cipher"; }
  const char* operator()(const EncodedStringsPayload&) const {
    return "strings";
  }
  const char* operator()(const AbortPayload&) const { return "abort"; }
};

struct SerializeVisitor {
  std::vector<std::uint8_t> operator()(
      const SelectionMatrixPayload& p) const {
    std::vector<std::uint8_t> out;
    append_u32(out, static_cast<std::uint32_t>(p.rows));
    append_u32(out, static_cast<std::uint32_t>(p.cols));
    for (std::uint32_t e : p.entries) append_u32(out, e);
    return out;
  }
  std::vector<std::uint8_t> operator()(const CipherMatrixPayload& p) const {
    return p.cipher.serialize();
  }
  std::vector<std::uint8_t> operator()(const EncodedStringsPayload& p) const {
    std::vector<std::uint8_t> out;
    append_u32(out, static_cast<std::uint32_t>(p.strings.size()));
    for (const auto& s : p.strings) {
      auto bytes = s.serialize();
      out.insert(out.end(), bytes.begin(), bytes.end());
    }
    return out;
  }
  std::vector<std::uint8_t> operator()(const AbortPayload&) const {
    return {};
  }
};

}  // namespace

const char* payload_tag(const Payload& payload) {
  return std::visit(TagVisitor{}, payload);
}

std::vector<std::uint8_t> serialize_payload(const Payload& payload) {
  return std::visit(SerializeVisitor{}, payload);
}

std::vector<std::uint8_t> serialize_message(const Message& message) {
  std::vector<std::uint8_t> out;
  append_u32(out, static_cast<std::uint32_t>(message.stage));
  append_u8(out, static_cast<std::uint8_t>(message.sender));
  append_u8(out, static_cast<std::uint8_t>(message.payload.index()));
  auto body = serialize_payload(message.payload);
  append_u32(out, static_cast<std::uint32_t>(body.size()));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::vector<std::uint8_t> serialize_transcript(const Transcript& transcript) {
  std::vector<std::uint8_t> out;
  append_u32(out, static_cast<std::uint32_t>(transcript.messages.size()));
  append_u64(out, transcript.resource_usage);
  append_u8(out, transcript.aborted ? 1 : 0);
  for (const auto& m : transcript.messages) {
    auto bytes = serialize_message(m);
    out.insert(out.end(), bytes.begin(), bytes.end());
  }
  return out;
}

std::string export_transcript(const Transcript& transcript) {
  std::ostringstream os;
  for (const auto& m : transcript.messages) {
    auto body = serialize_payload(m.payload);
    os << "stage=" << m.stage << " sender=" << party_name(m.sender)
       << " tag=" << payload_tag(m.payload) << " size=" << body.size()
       << " hex=" << to_hex(body) << "\n";
  }
  return os.str();
}

}  // namespace otsfc
