#include "splitclust/certificate_io.hpp"

#include <fstream>
#include <sstream>

#include "splitclust/error.hpp"
#include "splitclust/json.hpp"

namespace splitclust {

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Cover: return "cover";
    case CertificateKind::Sequence: return "sequence";
    case CertificateKind::Packing: return "packing";
  }
  return "?";
}

std::string format_certificate(const Certificate& c) {
  Json j;
  j["problem"] = std::string(to_string(c.problem));
  j["budget"] = c.budget;
  j["kind"] = std::string(to_string(c.kind()));
  std::visit([&](const auto& p) { j["payload"] = to_json(p); }, c.payload);
  return j.dump(2) + "\n";
}

Certificate parse_certificate(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::InvalidCertificate, std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw Error(ErrorKind::InvalidCertificate, "certificate must be a JSON object");
  for (const char* key : {"problem", "budget", "kind", "payload"}) {
    if (!j.contains(key)) throw Error(ErrorKind::InvalidCertificate, std::string("missing field '") + key + "'");
  }
  Certificate c;
  const auto problem = j["problem"].is_string() ? parse_problem(j["problem"].get<std::string>()) : std::nullopt;
  if (!problem) throw Error(ErrorKind::InvalidCertificate, "unknown problem");
  c.problem = *problem;
  if (!j["budget"].is_number_unsigned()) {
    throw Error(ErrorKind::InvalidCertificate, "'budget' must be a non-negative integer");
  }
  c.budget = j["budget"].get<Budget>();
  const auto kind = j["kind"].is_string() ? j["kind"].get<std::string>() : std::string();
  if (kind == "cover") {
    c.payload = family_from_json(j["payload"]);
  } else if (kind == "sequence") {
    c.payload = sequence_from_json(j["payload"]);
  } else if (kind == "packing") {
    c.payload = packing_from_json(j["payload"]);
  } else {
    throw Error(ErrorKind::InvalidCertificate, "kind must be cover, sequence or packing");
  }
  return c;
}

Certificate read_certificate(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_certificate(ss.str());
}

void write_certificate(const Certificate& c, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write '" + path.string() + "'");
  out << format_certificate(c);
}

}  // namespace splitclust
