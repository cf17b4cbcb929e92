#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "splitclust/certificates.hpp"
#include "splitclust/instance.hpp"

namespace splitclust {

enum class CertificateKind { Cover, Sequence, Packing };

std::string_view to_string(CertificateKind k);

/// Problem-tagged witness. Covers serve SCC, NCC and CEVS; sequences serve
/// CVS and CEVS; packings are CEVS lower-bound certificates.
struct Certificate {
  Problem problem = Problem::SCC;
  Budget budget = 0;
  std::variant<Family, ModificationSequence, P3Packing> payload;

  CertificateKind kind() const { return static_cast<CertificateKind>(payload.index()); }
  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Canonical JSON text (two-space indent, trailing newline). Byte-stable:
/// format(parse(format(c))) == format(c).
std::string format_certificate(const Certificate& c);
/// Throws InvalidCertificate on schema violations, InvalidVertexId on bad ids.
Certificate parse_certificate(std::string_view text);

Certificate read_certificate(const std::filesystem::path& path);
void write_certificate(const Certificate& c, const std::filesystem::path& path);

}  // namespace splitclust
