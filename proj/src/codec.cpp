#include "vlte/codec.hpp"

#include <algorithm>
#include <cstdio>

namespace vlte::codec {

// ---------------------------------------------------------------------------
// PlmnId
// ---------------------------------------------------------------------------

std::optional<PlmnId> PlmnId::parse(const std::string& s) {
  if (!is_digit_string(s)) return std::nullopt;
  if (s.size() != 5 && s.size() != 6) return std::nullopt;
  PlmnId p;
  p.mcc = s.substr(0, 3);
  p.mnc = s.substr(3);
  return p;
}

// ---------------------------------------------------------------------------
// CapabilitySet
// ---------------------------------------------------------------------------

uint16_t CapabilitySet::raw_bits() const {
  uint16_t bits = 0;
  for (auto a : eea) bits |= static_cast<uint16_t>(1u << static_cast<unsigned>(a));
  for (auto a : eia) bits |= static_cast<uint16_t>(1u << (4 + static_cast<unsigned>(a)));
  for (auto c : gsm_ciphers) bits |= static_cast<uint16_t>(1u << (8 + static_cast<unsigned>(c)));
  for (auto c : gprs_ciphers) bits |= static_cast<uint16_t>(1u << (10 + static_cast<unsigned>(c)));
  if (classmark2_sms_pp) bits |= 1u << 12;
  return bits;
}

std::optional<CapabilitySet> CapabilitySet::from_raw_bits(uint16_t bits) {
  if (bits & 0xE000) return std::nullopt;  // reserved bits
  CapabilitySet c;
  for (unsigned i = 0; i < 4; ++i)
    if (bits & (1u << i)) c.eea.insert(static_cast<EeaAlg>(i));
  for (unsigned i = 0; i < 4; ++i)
    if (bits & (1u << (4 + i))) c.eia.insert(static_cast<EiaAlg>(i));
  for (unsigned i = 0; i < 2; ++i)
    if (bits & (1u << (8 + i))) c.gsm_ciphers.insert(static_cast<GsmCipher>(i));
  for (unsigned i = 0; i < 2; ++i)
    if (bits & (1u << (10 + i))) c.gprs_ciphers.insert(static_cast<GprsCipher>(i));
  c.classmark2_sms_pp = (bits & (1u << 12)) != 0;
  if (!c.valid()) return std::nullopt;
  return c;
}

CapabilityFindings interpret_capabilities(const CapabilitySet& caps) {
  CapabilityFindings f;
  f.advertises_null_cipher = caps.eea.count(EeaAlg::EEA0) != 0;
  f.advertises_legacy_gsm = !caps.gsm_ciphers.empty();
  f.advertises_legacy_gprs = !caps.gprs_ciphers.empty();
  f.supports_null_integrity = caps.eia.count(EiaAlg::EIA0) != 0;
  f.sms_over_legacy_channels = caps.classmark2_sms_pp;
  return f;
}

bool is_broadcast_kind(const RrcMessage& msg) {
  switch (msg.kind) {
    case RrcKind::Sib10:
    case RrcKind::Sib11:
    case RrcKind::Sib12:
    case RrcKind::Paging:
      return true;
    default:
      return false;
  }
}

// ---------------------------------------------------------------------------
// Field tables (docs/wire-format.md §2.3, §4.3)
// ---------------------------------------------------------------------------

namespace {

constexpr uint8_t kLayerNas = 0x01;
constexpr uint8_t kLayerRrc = 0x02;

enum class NasField {
  IdType,
  IdValue,
  EmmCauseF,
  EsmCauseF,
  Capabilities,
  SecuritySel,
  AuthRand,
  AuthAutn,
  AuthRes,
  SmsClassF,
  SmsOrigin,
  SmsBody,
};

enum class RrcField {
  Plmn,
  Tac,
  CellIdentity,
  CRnti,
  WarnSystem,
  WarnMessageId,
  WarnSerial,
  WarnText,
  PagedIdentity,
};

template <typename F>
struct MaskEntry {
  F field;
  bool required;
};

using NasMask = std::vector<MaskEntry<NasField>>;
using RrcMask = std::vector<MaskEntry<RrcField>>;

const NasMask* nas_mask(NasKind k) {
  static const NasMask identity_request = {{NasField::IdType, true}};
  static const NasMask identity_response = {{NasField::IdType, true}, {NasField::IdValue, true}};
  static const NasMask attach_request = {
      {NasField::IdType, false}, {NasField::IdValue, false}, {NasField::Capabilities, true}};
  static const NasMask attach_accept = {{NasField::IdType, false}, {NasField::IdValue, false}};
  static const NasMask attach_reject = {{NasField::EmmCauseF, true}};
  static const NasMask auth_request = {{NasField::AuthRand, true}, {NasField::AuthAutn, true}};
  static const NasMask auth_response = {{NasField::AuthRes, true}};
  static const NasMask smc = {{NasField::SecuritySel, true}};
  static const NasMask empty = {};
  static const NasMask pdn_reject = {{NasField::EsmCauseF, true}};
  static const NasMask sms = {
      {NasField::SmsClassF, true}, {NasField::SmsOrigin, true}, {NasField::SmsBody, true}};
  switch (k) {
    case NasKind::IdentityRequest: return &identity_request;
    case NasKind::IdentityResponse: return &identity_response;
    case NasKind::AttachRequest: return &attach_request;
    case NasKind::AttachAccept: return &attach_accept;
    case NasKind::AttachReject: return &attach_reject;
    case NasKind::AuthenticationRequest: return &auth_request;
    case NasKind::AuthenticationResponse: return &auth_response;
    case NasKind::SecurityModeCommand: return &smc;
    case NasKind::SecurityModeComplete: return &empty;
    case NasKind::SecurityModeReject: return &empty;
    case NasKind::PdnConnectivityRequest: return &empty;
    case NasKind::ActivateDefaultBearerRequest: return &empty;
    case NasKind::PdnConnectivityReject: return &pdn_reject;
    case NasKind::DetachRequest: return &empty;
    case NasKind::SmsTransport: return &sms;
  }
  return nullptr;
}

const RrcMask* rrc_mask(RrcKind k) {
  static const RrcMask empty = {};
  static const RrcMask sib1 = {
      {RrcField::Plmn, true}, {RrcField::Tac, true}, {RrcField::CellIdentity, true}};
  static const RrcMask warning = {{RrcField::WarnSystem, true},
                                  {RrcField::WarnMessageId, true},
                                  {RrcField::WarnSerial, true},
                                  {RrcField::WarnText, true}};
  static const RrcMask paging = {{RrcField::PagedIdentity, true}};
  static const RrcMask c_rnti_only = {{RrcField::CRnti, true}};
  static const RrcMask reconfig = {{RrcField::CellIdentity, false}, {RrcField::CRnti, false}};
  switch (k) {
    case RrcKind::Mib: return &empty;
    case RrcKind::Sib1: return &sib1;
    case RrcKind::Sib10:
    case RrcKind::Sib11:
    case RrcKind::Sib12: return &warning;
    case RrcKind::Paging: return &paging;
    case RrcKind::RrcConnectionRequest:
    case RrcKind::RrcConnectionSetup: return &c_rnti_only;
    case RrcKind::RrcConnectionReconfiguration: return &reconfig;
    case RrcKind::RrcConnectionRelease: return &empty;
    case RrcKind::RrcReestablishmentRequest: return &c_rnti_only;
    case RrcKind::RrcReestablishmentReject: return &empty;
  }
  return nullptr;
}

CodecError illegal(std::string detail, size_t offset = 0) {
  return CodecError{CodecErrorKind::IllegalFieldCombination, offset, std::move(detail)};
}

// -- encode helpers ---------------------------------------------------------

void write_field(Bytes& out, const Bytes& payload) {
  if (payload.size() < 0xFF) {
    out.push_back(static_cast<uint8_t>(payload.size()));
  } else {
    out.push_back(0xFF);
    put_u16_be(out, static_cast<uint16_t>(payload.size()));
  }
  out.insert(out.end(), payload.begin(), payload.end());
}

void write_absent(Bytes& out) { out.push_back(0x00); }

std::optional<CodecError> check_digits(const std::string& s, const char* what, size_t max_len) {
  if (!is_digit_string(s) || s.size() > max_len)
    return illegal(std::string(what) + " must be 1.." + std::to_string(max_len) + " digits");
  return std::nullopt;
}

// Serializes one NAS field; nullopt payload means the field is absent.
Result<std::optional<Bytes>, CodecError> nas_field_payload(const NasMessage& m, NasField f) {
  using R = Result<std::optional<Bytes>, CodecError>;
  switch (f) {
    case NasField::IdType:
      if (!m.identity_type) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes{static_cast<uint8_t>(*m.identity_type)}});
    case NasField::IdValue: {
      if (!m.identity_value) return R(std::optional<Bytes>{});
      if (auto err = check_digits(*m.identity_value, "identity_value", 32)) return R(*err);
      return R(std::optional<Bytes>{bcd_pack(*m.identity_value)});
    }
    case NasField::EmmCauseF:
      if (!m.emm_cause) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes{static_cast<uint8_t>(*m.emm_cause)}});
    case NasField::EsmCauseF:
      if (!m.esm_cause) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes{static_cast<uint8_t>(*m.esm_cause)}});
    case NasField::Capabilities: {
      if (!m.capabilities) return R(std::optional<Bytes>{});
      if (!m.capabilities->valid()) return R(illegal("capability set advertises EEA without EIA"));
      Bytes b;
      put_u16_be(b, m.capabilities->raw_bits());
      return R(std::optional<Bytes>{std::move(b)});
    }
    case NasField::SecuritySel: {
      if (!m.security_selection) return R(std::optional<Bytes>{});
      Bytes b{static_cast<uint8_t>(m.security_selection->cipher),
              static_cast<uint8_t>(m.security_selection->integrity)};
      return R(std::optional<Bytes>{std::move(b)});
    }
    case NasField::AuthRand: {
      if (!m.auth_params) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes(m.auth_params->rand.begin(), m.auth_params->rand.end())});
    }
    case NasField::AuthAutn: {
      if (!m.auth_params) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes(m.auth_params->autn.begin(), m.auth_params->autn.end())});
    }
    case NasField::AuthRes: {
      if (!m.auth_params) return R(std::optional<Bytes>{});
      if (m.auth_params->res.empty() || m.auth_params->res.size() > 32)
        return R(illegal("auth res must be 1..32 octets"));
      return R(std::optional<Bytes>{m.auth_params->res});
    }
    case NasField::SmsClassF:
      if (!m.sms_payload) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes{static_cast<uint8_t>(m.sms_payload->cls)}});
    case NasField::SmsOrigin: {
      if (!m.sms_payload) return R(std::optional<Bytes>{});
      if (auto err = check_digits(m.sms_payload->origin, "sms origin", 20)) return R(*err);
      return R(std::optional<Bytes>{bcd_pack(m.sms_payload->origin)});
    }
    case NasField::SmsBody: {
      if (!m.sms_payload) return R(std::optional<Bytes>{});
      if (m.sms_payload->body.size() > 280) return R(illegal("sms body exceeds 280 octets"));
      Bytes b;
      put_u16_be(b, static_cast<uint16_t>(m.sms_payload->body.size()));
      b.insert(b.end(), m.sms_payload->body.begin(), m.sms_payload->body.end());
      return R(std::optional<Bytes>{std::move(b)});
    }
  }
  return R(illegal("unreachable"));
}

Result<std::optional<Bytes>, CodecError> rrc_field_payload(const RrcMessage& m, RrcField f) {
  using R = Result<std::optional<Bytes>, CodecError>;
  switch (f) {
    case RrcField::Plmn: {
      if (!m.plmn) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{bcd_pack(m.plmn->canonical())});
    }
    case RrcField::Tac: {
      if (!m.tac) return R(std::optional<Bytes>{});
      Bytes b;
      put_u16_be(b, *m.tac);
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::CellIdentity: {
      if (!m.cell_identity) return R(std::optional<Bytes>{});
      Bytes b;
      put_u32_be(b, *m.cell_identity);
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::CRnti: {
      if (!m.c_rnti) return R(std::optional<Bytes>{});
      if (*m.c_rnti < 1 || *m.c_rnti > 65523) return R(illegal("c_rnti out of range 1..65523"));
      Bytes b;
      put_u16_be(b, *m.c_rnti);
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::WarnSystem:
      if (!m.warning_payload) return R(std::optional<Bytes>{});
      return R(std::optional<Bytes>{Bytes{static_cast<uint8_t>(m.warning_payload->system)}});
    case RrcField::WarnMessageId: {
      if (!m.warning_payload) return R(std::optional<Bytes>{});
      Bytes b;
      put_u16_be(b, m.warning_payload->message_id);
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::WarnSerial: {
      if (!m.warning_payload) return R(std::optional<Bytes>{});
      Bytes b;
      put_u16_be(b, m.warning_payload->serial);
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::WarnText: {
      if (!m.warning_payload) return R(std::optional<Bytes>{});
      if (m.warning_payload->text.size() > 1024)
        return R(illegal("warning text exceeds 1024 octets"));
      Bytes b;
      put_u16_be(b, static_cast<uint16_t>(m.warning_payload->text.size()));
      b.insert(b.end(), m.warning_payload->text.begin(), m.warning_payload->text.end());
      return R(std::optional<Bytes>{std::move(b)});
    }
    case RrcField::PagedIdentity: {
      if (!m.paged_identity) return R(std::optional<Bytes>{});
      if (auto err = check_digits(*m.paged_identity, "paged_identity", 32)) return R(*err);
      return R(std::optional<Bytes>{bcd_pack(*m.paged_identity)});
    }
  }
  return R(illegal("unreachable"));
}

// Fields that are set on the message but not listed in the kind's mask
// violate the per-kind field invariant.
bool nas_field_present(const NasMessage& m, NasField f) {
  switch (f) {
    case NasField::IdType: return m.identity_type.has_value();
    case NasField::IdValue: return m.identity_value.has_value();
    case NasField::EmmCauseF: return m.emm_cause.has_value();
    case NasField::EsmCauseF: return m.esm_cause.has_value();
    case NasField::Capabilities: return m.capabilities.has_value();
    case NasField::SecuritySel: return m.security_selection.has_value();
    case NasField::AuthRand:
    case NasField::AuthAutn:
    case NasField::AuthRes: return m.auth_params.has_value();
    case NasField::SmsClassF:
    case NasField::SmsOrigin:
    case NasField::SmsBody: return m.sms_payload.has_value();
  }
  return false;
}

bool rrc_field_present(const RrcMessage& m, RrcField f) {
  switch (f) {
    case RrcField::Plmn: return m.plmn.has_value();
    case RrcField::Tac: return m.tac.has_value();
    case RrcField::CellIdentity: return m.cell_identity.has_value();
    case RrcField::CRnti: return m.c_rnti.has_value();
    case RrcField::WarnSystem:
    case RrcField::WarnMessageId:
    case RrcField::WarnSerial:
    case RrcField::WarnText: return m.warning_payload.has_value();
    case RrcField::PagedIdentity: return m.paged_identity.has_value();
  }
  return false;
}

std::optional<CodecError> validate_nas(const NasMessage& m) {
  if ((m.identity_type.has_value()) != (m.identity_value.has_value()) &&
      m.kind != NasKind::IdentityRequest)
    return illegal("identity_type and identity_value must appear together");
  if (m.kind == NasKind::IdentityRequest && m.identity_value.has_value())
    return illegal("IdentityRequest carries no identity_value");
  return std::nullopt;
}

std::optional<CodecError> validate_rrc(const RrcMessage& m) {
  if (m.warning_payload) {
    bool etws = m.warning_payload->system == WarningSystem::ETWS;
    bool etws_kind = m.kind == RrcKind::Sib10 || m.kind == RrcKind::Sib11;
    bool cmas_kind = m.kind == RrcKind::Sib12;
    if ((etws && !etws_kind) || (!etws && !cmas_kind))
      return illegal("warning system does not match SIB kind");
  }
  if (m.plmn && !PlmnId::parse(m.plmn->canonical()))
    return illegal("malformed PLMN");
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// encode
// ---------------------------------------------------------------------------

EncodeResult encode(const ProtocolMessage& msg) {
  Bytes out;
  if (const auto* nas = std::get_if<NasMessage>(&msg)) {
    const NasMask* mask = nas_mask(nas->kind);
    if (!mask) return CodecError{CodecErrorKind::UnknownKind, 0, "bad NAS kind"};
    if (auto err = validate_nas(*nas)) return *err;
    out.push_back(kLayerNas);
    out.push_back(static_cast<uint8_t>(nas->kind));
    for (const auto& entry : *mask) {
      auto payload = nas_field_payload(*nas, entry.field);
      if (!payload.ok()) return payload.error();
      if (!payload.value().has_value()) {
        if (entry.required) return illegal("missing required field for this kind");
        write_absent(out);
      } else {
        write_field(out, *payload.value());
      }
    }
    // Reject fields the mask does not allow.
    static const NasField all_fields[] = {
        NasField::IdType,     NasField::IdValue,  NasField::EmmCauseF, NasField::EsmCauseF,
        NasField::Capabilities, NasField::SecuritySel, NasField::AuthRand, NasField::AuthAutn,
        NasField::AuthRes,    NasField::SmsClassF, NasField::SmsOrigin, NasField::SmsBody};
    for (NasField f : all_fields) {
      bool in_mask = std::any_of(mask->begin(), mask->end(),
                                 [f](const auto& e) { return e.field == f; });
      if (!in_mask && nas_field_present(*nas, f))
        return illegal("field not legal for this kind");
    }
    return out;
  }

  const auto& rrc = std::get<RrcMessage>(msg);
  const RrcMask* mask = rrc_mask(rrc.kind);
  if (!mask) return CodecError{CodecErrorKind::UnknownKind, 0, "bad RRC kind"};
  if (auto err = validate_rrc(rrc)) return *err;
  out.push_back(kLayerRrc);
  out.push_back(static_cast<uint8_t>(rrc.kind));
  for (const auto& entry : *mask) {
    auto payload = rrc_field_payload(rrc, entry.field);
    if (!payload.ok()) return payload.error();
    if (!payload.value().has_value()) {
      if (entry.required) return illegal("missing required field for this kind");
      write_absent(out);
    } else {
      write_field(out, *payload.value());
    }
  }
  static const RrcField all_fields[] = {
      RrcField::Plmn,       RrcField::Tac,        RrcField::CellIdentity,
      RrcField::CRnti,      RrcField::WarnSystem, RrcField::WarnMessageId,
      RrcField::WarnSerial, RrcField::WarnText,   RrcField::PagedIdentity};
  for (RrcField f : all_fields) {
    bool in_mask =
        std::any_of(mask->begin(), mask->end(), [f](const auto& e) { return e.field == f; });
    if (!in_mask && rrc_field_present(rrc, f)) return illegal("field not legal for this kind");
  }
  return out;
}

// ---------------------------------------------------------------------------
// decode
// ---------------------------------------------------------------------------

namespace {

struct Cursor {
  const uint8_t* p;
  size_t len;
  size_t pos = 0;

  bool eof() const { return pos >= len; }
  size_t left() const { return len - pos; }
};

Result<std::optional<Bytes>, CodecError> read_field(Cursor& c) {
  using R = Result<std::optional<Bytes>, CodecError>;
  if (c.eof()) return R(CodecError{CodecErrorKind::Truncated, c.pos, "expected field length"});
  size_t n = c.p[c.pos];
  size_t hdr = 1;
  if (n == 0xFF) {
    if (c.left() < 3)
      return R(CodecError{CodecErrorKind::Truncated, c.pos, "expected extended length"});
    n = get_u16_be(c.p + c.pos + 1);
    hdr = 3;
  }
  if (n == 0) {
    c.pos += hdr;
    return R(std::optional<Bytes>{});
  }
  if (c.left() < hdr + n)
    return R(CodecError{CodecErrorKind::Truncated, c.pos, "field payload truncated"});
  Bytes payload(c.p + c.pos + hdr, c.p + c.pos + hdr + n);
  c.pos += hdr + n;
  return R(std::optional<Bytes>{std::move(payload)});
}

std::optional<CodecError> apply_nas_field(NasMessage& m, NasField f, const Bytes& b, size_t at) {
  auto bad = [at](const char* msg) { return illegal(msg, at); };
  switch (f) {
    case NasField::IdType:
      if (b.size() != 1 || b[0] > 3) return bad("bad identity type");
      m.identity_type = static_cast<IdentityType>(b[0]);
      return std::nullopt;
    case NasField::IdValue: {
      auto digits = bcd_unpack(b.data(), b.size());
      if (!digits || digits->size() > 32) return bad("bad identity digits");
      m.identity_value = *digits;
      return std::nullopt;
    }
    case NasField::EmmCauseF:
      if (b.size() != 1 || b[0] < 1 || b[0] > 5) return bad("bad EMM cause");
      m.emm_cause = static_cast<EmmCause>(b[0]);
      return std::nullopt;
    case NasField::EsmCauseF:
      if (b.size() != 1 || b[0] < 1 || b[0] > 2) return bad("bad ESM cause");
      m.esm_cause = static_cast<EsmCause>(b[0]);
      return std::nullopt;
    case NasField::Capabilities: {
      if (b.size() != 2) return bad("capability field must be 2 octets");
      auto caps = CapabilitySet::from_raw_bits(get_u16_be(b.data()));
      if (!caps) return bad("bad capability bitfield");
      m.capabilities = *caps;
      return std::nullopt;
    }
    case NasField::SecuritySel:
      if (b.size() != 2 || b[0] > 3 || b[1] > 3) return bad("bad security selection");
      m.security_selection = SecuritySelection{static_cast<EeaAlg>(b[0]),
                                               static_cast<EiaAlg>(b[1])};
      return std::nullopt;
    case NasField::AuthRand:
      if (b.size() != 16) return bad("rand must be 16 octets");
      if (!m.auth_params) m.auth_params.emplace();
      std::copy(b.begin(), b.end(), m.auth_params->rand.begin());
      return std::nullopt;
    case NasField::AuthAutn:
      if (b.size() != 16) return bad("autn must be 16 octets");
      if (!m.auth_params) m.auth_params.emplace();
      std::copy(b.begin(), b.end(), m.auth_params->autn.begin());
      return std::nullopt;
    case NasField::AuthRes:
      if (b.empty() || b.size() > 32) return bad("res must be 1..32 octets");
      if (!m.auth_params) m.auth_params.emplace();
      m.auth_params->res = b;
      return std::nullopt;
    case NasField::SmsClassF:
      if (b.size() != 1 || b[0] > 3) return bad("bad sms class");
      if (!m.sms_payload) m.sms_payload.emplace();
      m.sms_payload->cls = static_cast<SmsClass>(b[0]);
      return std::nullopt;
    case NasField::SmsOrigin: {
      auto digits = bcd_unpack(b.data(), b.size());
      if (!digits || digits->size() > 20) return bad("bad sms origin");
      if (!m.sms_payload) m.sms_payload.emplace();
      m.sms_payload->origin = *digits;
      return std::nullopt;
    }
    case NasField::SmsBody: {
      if (b.size() < 2) return bad("sms body missing inner length");
      size_t n = get_u16_be(b.data());
      if (n != b.size() - 2 || n > 280) return bad("bad sms body length");
      if (!m.sms_payload) m.sms_payload.emplace();
      m.sms_payload->body.assign(b.begin() + 2, b.end());
      return std::nullopt;
    }
  }
  return bad("unreachable");
}

std::optional<CodecError> apply_rrc_field(RrcMessage& m, RrcField f, const Bytes& b, size_t at) {
  auto bad = [at](const char* msg) { return illegal(msg, at); };
  switch (f) {
    case RrcField::Plmn: {
      auto digits = bcd_unpack(b.data(), b.size());
      if (!digits) return bad("bad PLMN digits");
      auto plmn = PlmnId::parse(*digits);
      if (!plmn) return bad("bad PLMN length");
      m.plmn = *plmn;
      return std::nullopt;
    }
    case RrcField::Tac:
      if (b.size() != 2) return bad("tac must be 2 octets");
      m.tac = get_u16_be(b.data());
      return std::nullopt;
    case RrcField::CellIdentity:
      if (b.size() != 4) return bad("cell identity must be 4 octets");
      m.cell_identity = get_u32_be(b.data());
      return std::nullopt;
    case RrcField::CRnti: {
      if (b.size() != 2) return bad("c_rnti must be 2 octets");
      uint16_t v = get_u16_be(b.data());
      if (v < 1 || v > 65523) return bad("c_rnti out of range");
      m.c_rnti = v;
      return std::nullopt;
    }
    case RrcField::WarnSystem:
      if (b.size() != 1 || b[0] > 1) return bad("bad warning system");
      if (!m.warning_payload) m.warning_payload.emplace();
      m.warning_payload->system = static_cast<WarningSystem>(b[0]);
      return std::nullopt;
    case RrcField::WarnMessageId:
      if (b.size() != 2) return bad("warning message id must be 2 octets");
      if (!m.warning_payload) m.warning_payload.emplace();
      m.warning_payload->message_id = get_u16_be(b.data());
      return std::nullopt;
    case RrcField::WarnSerial:
      if (b.size() != 2) return bad("warning serial must be 2 octets");
      if (!m.warning_payload) m.warning_payload.emplace();
      m.warning_payload->serial = get_u16_be(b.data());
      return std::nullopt;
    case RrcField::WarnText: {
      if (b.size() < 2) return bad("warning text missing inner length");
      size_t n = get_u16_be(b.data());
      if (n != b.size() - 2 || n > 1024) return bad("bad warning text length");
      if (!m.warning_payload) m.warning_payload.emplace();
      m.warning_payload->text.assign(b.begin() + 2, b.end());
      return std::nullopt;
    }
    case RrcField::PagedIdentity: {
      auto digits = bcd_unpack(b.data(), b.size());
      if (!digits || digits->size() > 32) return bad("bad paged identity");
      m.paged_identity = *digits;
      return std::nullopt;
    }
  }
  return bad("unreachable");
}

}  // namespace

DecodeResult decode(const Bytes& bytes) {
  if (bytes.empty()) return CodecError{CodecErrorKind::Truncated, 0, "empty input"};
  uint8_t layer = bytes[0];
  if (layer != kLayerNas && layer != kLayerRrc)
    return CodecError{CodecErrorKind::UnknownKind, 0, "unassigned layer tag"};
  if (bytes.size() < 2) return CodecError{CodecErrorKind::Truncated, 1, "missing kind octet"};

  Cursor c{bytes.data(), bytes.size(), 2};

  if (layer == kLayerNas) {
    uint8_t code = bytes[1];
    if (code < 0x01 || code > 0x0F)
      return CodecError{CodecErrorKind::UnknownKind, 1, "unassigned NAS kind"};
    NasMessage m;
    m.kind = static_cast<NasKind>(code);
    const NasMask* mask = nas_mask(m.kind);
    for (const auto& entry : *mask) {
      size_t at = c.pos;
      auto field = read_field(c);
      if (!field.ok()) return field.error();
      if (!field.value().has_value()) {
        if (entry.required)
          return illegal("required field absent", at);
        continue;
      }
      if (auto err = apply_nas_field(m, entry.field, *field.value(), at)) return *err;
    }
    if (!c.eof()) return illegal("trailing octets after last field", c.pos);
    if (auto err = validate_nas(m)) return *err;
    return ProtocolMessage{m};
  }

  uint8_t code = bytes[1];
  if (code < 0x01 || code > 0x0C)
    return CodecError{CodecErrorKind::UnknownKind, 1, "unassigned RRC kind"};
  RrcMessage m;
  m.kind = static_cast<RrcKind>(code);
  const RrcMask* mask = rrc_mask(m.kind);
  for (const auto& entry : *mask) {
    size_t at = c.pos;
    auto field = read_field(c);
    if (!field.ok()) return field.error();
    if (!field.value().has_value()) {
      if (entry.required) return illegal("required field absent", at);
      continue;
    }
    if (auto err = apply_rrc_field(m, entry.field, *field.value(), at)) return *err;
  }
  if (!c.eof()) return illegal("trailing octets after last field", c.pos);
  if (auto err = validate_rrc(m)) return *err;
  return ProtocolMessage{m};
}

// ---------------------------------------------------------------------------
// Names
// ---------------------------------------------------------------------------

const char* to_string(CodecErrorKind k) {
  switch (k) {
    case CodecErrorKind::Truncated: return "Truncated";
    case CodecErrorKind::UnknownKind: return "UnknownKind";
    case CodecErrorKind::IllegalFieldCombination: return "IllegalFieldCombination";
  }
  return "?";
}

const char* to_string(NasKind k) {
  switch (k) {
    case NasKind::IdentityRequest: return "IdentityRequest";
    case NasKind::IdentityResponse: return "IdentityResponse";
    case NasKind::AttachRequest: return "AttachRequest";
    case NasKind::AttachAccept: return "AttachAccept";
    case NasKind::AttachReject: return "AttachReject";
    case NasKind::AuthenticationRequest: return "AuthenticationRequest";
    case NasKind::AuthenticationResponse: return "AuthenticationResponse";
    case NasKind::SecurityModeCommand: return "SecurityModeCommand";
    case NasKind::SecurityModeComplete: return "SecurityModeComplete";
    case NasKind::SecurityModeReject: return "SecurityModeReject";
    case NasKind::PdnConnectivityRequest: return "PdnConnectivityRequest";
    case NasKind::ActivateDefaultBearerRequest: return "ActivateDefaultBearerRequest";
    case NasKind::PdnConnectivityReject: return "PdnConnectivityReject";
    case NasKind::DetachRequest: return "DetachRequest";
    case NasKind::SmsTransport: return "SmsTransport";
  }
  return "?";
}

const char* to_string(RrcKind k) {
  switch (k) {
    case RrcKind::Mib: return "Mib";
    case RrcKind::Sib1: return "Sib1";
    case RrcKind::Sib10: return "Sib10";
    case RrcKind::Sib11: return "Sib11";
    case RrcKind::Sib12: return "Sib12";
    case RrcKind::Paging: return "Paging";
    case RrcKind::RrcConnectionRequest: return "RrcConnectionRequest";
    case RrcKind::RrcConnectionSetup: return "RrcConnectionSetup";
    case RrcKind::RrcConnectionReconfiguration: return "RrcConnectionReconfiguration";
    case RrcKind::RrcConnectionRelease: return "RrcConnectionRelease";
    case RrcKind::RrcReestablishmentRequest: return "RrcReestablishmentRequest";
    case RrcKind::RrcReestablishmentReject: return "RrcReestablishmentReject";
  }
  return "?";
}

const char* to_string(IdentityType t) {
  switch (t) {
    case IdentityType::IMSI: return "IMSI";
    case IdentityType::IMEI: return "IMEI";
    case IdentityType::GUTI: return "GUTI";
    case IdentityType::TMSI: return "TMSI";
  }
  return "?";
}

const char* to_string(EmmCause c) {
  switch (c) {
    case EmmCause::PlmnNotAllowed: return "PlmnNotAllowed";
    case EmmCause::EpsServicesNotAllowed: return "EpsServicesNotAllowed";
    case EmmCause::MissingOrUnknownApn: return "MissingOrUnknownApn";
    case EmmCause::MacFailure: return "MacFailure";
    case EmmCause::UnknownUe: return "UnknownUe";
  }
  return "?";
}

const char* to_string(EsmCause c) {
  switch (c) {
    case EsmCause::UnknownPdnType: return "UnknownPdnType";
    case EsmCause::PdnTypeIpv4OnlyAllowed: return "PdnTypeIpv4OnlyAllowed";
  }
  return "?";
}

const char* to_string(EeaAlg a) {
  switch (a) {
    case EeaAlg::EEA0: return "EEA0";
    case EeaAlg::EEA1: return "EEA1";
    case EeaAlg::EEA2: return "EEA2";
    case EeaAlg::EEA3: return "EEA3";
  }
  return "?";
}

const char* to_string(EiaAlg a) {
  switch (a) {
    case EiaAlg::EIA0: return "EIA0";
    case EiaAlg::EIA1: return "EIA1";
    case EiaAlg::EIA2: return "EIA2";
    case EiaAlg::EIA3: return "EIA3";
  }
  return "?";
}

const char* to_string(GsmCipher c) {
  switch (c) {
    case GsmCipher::A5_1: return "A5_1";
    case GsmCipher::A5_3: return "A5_3";
  }
  return "?";
}

const char* to_string(GprsCipher c) {
  switch (c) {
    case GprsCipher::GEA2: return "GEA2";
    case GprsCipher::GEA3: return "GEA3";
  }
  return "?";
}

const char* to_string(SmsClass c) {
  switch (c) {
    case SmsClass::Normal: return "Normal";
    case SmsClass::Flash: return "Flash";
    case SmsClass::Silent: return "Silent";
    case SmsClass::Binary: return "Binary";
  }
  return "?";
}

const char* to_string(WarningSystem s) {
  switch (s) {
    case WarningSystem::ETWS: return "ETWS";
    case WarningSystem::CMAS: return "CMAS";
  }
  return "?";
}

std::string message_kind_name(const ProtocolMessage& msg) {
  if (const auto* nas = std::get_if<NasMessage>(&msg)) return to_string(nas->kind);
  return to_string(std::get<RrcMessage>(msg).kind);
}

}  // namespace vlte::codec
