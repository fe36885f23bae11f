#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "vlte/bytes.hpp"
#include "vlte/result.hpp"

namespace vlte::codec {

// ---------------------------------------------------------------------------
// Domain types
// ---------------------------------------------------------------------------

struct PlmnId {
  std::string mcc;  // exactly 3 digits
  std::string mnc;  // 2 or 3 digits

  std::string canonical() const { return mcc + mnc; }
  bool operator==(const PlmnId&) const = default;
  bool operator<(const PlmnId& o) const { return canonical() < o.canonical(); }

  // Canonical textual form: 5 digits -> 2-digit MNC, 6 digits -> 3-digit MNC.
  static std::optional<PlmnId> parse(const std::string& s);
};

enum class NasKind : uint8_t {
  IdentityRequest = 0x01,
  IdentityResponse = 0x02,
  AttachRequest = 0x03,
  AttachAccept = 0x04,
  AttachReject = 0x05,
  AuthenticationRequest = 0x06,
  AuthenticationResponse = 0x07,
  SecurityModeCommand = 0x08,
  SecurityModeComplete = 0x09,
  SecurityModeReject = 0x0A,
  PdnConnectivityRequest = 0x0B,
  ActivateDefaultBearerRequest = 0x0C,
  PdnConnectivityReject = 0x0D,
  DetachRequest = 0x0E,
  SmsTransport = 0x0F,
};

enum class IdentityType : uint8_t { IMSI = 0x00, IMEI = 0x01, GUTI = 0x02, TMSI = 0x03 };

enum class EmmCause : uint8_t {
  PlmnNotAllowed = 0x01,
  EpsServicesNotAllowed = 0x02,
  MissingOrUnknownApn = 0x03,
  MacFailure = 0x04,
  UnknownUe = 0x05,
};

enum class EsmCause : uint8_t {
  UnknownPdnType = 0x01,
  PdnTypeIpv4OnlyAllowed = 0x02,
};

enum class EeaAlg : uint8_t { EEA0 = 0, EEA1 = 1, EEA2 = 2, EEA3 = 3 };
enum class EiaAlg : uint8_t { EIA0 = 0, EIA1 = 1, EIA2 = 2, EIA3 = 3 };
enum class GsmCipher : uint8_t { A5_1 = 0, A5_3 = 1 };
enum class GprsCipher : uint8_t { GEA2 = 0, GEA3 = 1 };

struct CapabilitySet {
  std::set<EeaAlg> eea;
  std::set<EiaAlg> eia;
  std::set<GsmCipher> gsm_ciphers;
  std::set<GprsCipher> gprs_ciphers;
  bool classmark2_sms_pp = false;

  // 16-bit encoding per docs/wire-format.md §3.
  uint16_t raw_bits() const;
  static std::optional<CapabilitySet> from_raw_bits(uint16_t bits);

  // eia must be non-empty whenever eea is non-empty.
  bool valid() const { return eea.empty() || !eia.empty(); }

  bool operator==(const CapabilitySet&) const = default;
};

struct CapabilityFindings {
  bool advertises_null_cipher = false;
  bool advertises_legacy_gsm = false;
  bool advertises_legacy_gprs = false;
  bool supports_null_integrity = false;
  bool sms_over_legacy_channels = false;

  bool operator==(const CapabilityFindings&) const = default;
};

CapabilityFindings interpret_capabilities(const CapabilitySet& caps);

struct SecuritySelection {
  EeaAlg cipher = EeaAlg::EEA0;
  EiaAlg integrity = EiaAlg::EIA0;
  bool operator==(const SecuritySelection&) const = default;
};

struct AuthParams {
  std::array<uint8_t, 16> rand{};
  std::array<uint8_t, 16> autn{};
  Bytes res;  // 1..32 octets
  bool operator==(const AuthParams&) const = default;
};

enum class SmsClass : uint8_t { Normal = 0, Flash = 1, Silent = 2, Binary = 3 };

struct SmsPdu {
  SmsClass cls = SmsClass::Normal;
  std::string origin;  // digit string
  Bytes body;          // <= 280 octets
  bool operator==(const SmsPdu&) const = default;
};

struct NasMessage {
  NasKind kind = NasKind::IdentityRequest;
  std::optional<IdentityType> identity_type;
  std::optional<std::string> identity_value;  // digit string
  std::optional<EmmCause> emm_cause;
  std::optional<EsmCause> esm_cause;
  std::optional<CapabilitySet> capabilities;
  std::optional<SecuritySelection> security_selection;
  std::optional<AuthParams> auth_params;
  std::optional<SmsPdu> sms_payload;

  bool operator==(const NasMessage&) const = default;
};

enum class RrcKind : uint8_t {
  Mib = 0x01,
  Sib1 = 0x02,
  Sib10 = 0x03,
  Sib11 = 0x04,
  Sib12 = 0x05,
  Paging = 0x06,
  RrcConnectionRequest = 0x07,
  RrcConnectionSetup = 0x08,
  RrcConnectionReconfiguration = 0x09,
  RrcConnectionRelease = 0x0A,
  RrcReestablishmentRequest = 0x0B,
  RrcReestablishmentReject = 0x0C,
};

enum class WarningSystem : uint8_t { ETWS = 0, CMAS = 1 };

struct WarningMessage {
  WarningSystem system = WarningSystem::ETWS;
  uint16_t message_id = 0;
  uint16_t serial = 0;
  Bytes text;  // <= 1024 octets
  bool operator==(const WarningMessage&) const = default;
};

struct RrcMessage {
  RrcKind kind = RrcKind::Mib;
  std::optional<PlmnId> plmn;
  std::optional<uint16_t> tac;
  std::optional<uint32_t> cell_identity;
  std::optional<uint16_t> c_rnti;  // 1..65523
  std::optional<WarningMessage> warning_payload;
  std::optional<std::string> paged_identity;  // digit string

  bool operator==(const RrcMessage&) const = default;
};

using ProtocolMessage = std::variant<NasMessage, RrcMessage>;

bool is_broadcast_kind(const RrcMessage& msg);

// ---------------------------------------------------------------------------
// Wire codec
// ---------------------------------------------------------------------------

enum class CodecErrorKind { Truncated, UnknownKind, IllegalFieldCombination };

struct CodecError {
  CodecErrorKind kind = CodecErrorKind::Truncated;
  size_t offset = 0;  // failing offset in the input (0 for encode errors)
  std::string detail;
};

const char* to_string(CodecErrorKind k);

using EncodeResult = Result<Bytes, CodecError>;
using DecodeResult = Result<ProtocolMessage, CodecError>;

EncodeResult encode(const ProtocolMessage& msg);
DecodeResult decode(const Bytes& bytes);

// Enum name helpers shared by the trace stream and report renderers.
const char* to_string(NasKind k);
const char* to_string(RrcKind k);
const char* to_string(IdentityType t);
const char* to_string(EmmCause c);
const char* to_string(EsmCause c);
const char* to_string(EeaAlg a);
const char* to_string(EiaAlg a);
const char* to_string(GsmCipher c);
const char* to_string(GprsCipher c);
const char* to_string(SmsClass c);
const char* to_string(WarningSystem s);
std::string message_kind_name(const ProtocolMessage& msg);

}  // namespace vlte::codec
