#include "dser/ring_descriptor.hpp"

#include <charconv>
#include <vector>

namespace dser {

namespace {

std::vector<std::string> split_names(std::string_view s) {
  std::vector<std::string> out;
  while (!s.empty()) {
    auto comma = s.find(',');
    out.emplace_back(s.substr(0, comma));
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace

RingDescriptor parse_ring(std::string_view text) {
  if (text == "rational" || text == "q" || text == "Q") return RationalField{};
  if (text.starts_with("zmod:")) {
    std::string_view digits = text.substr(5);
    std::uint64_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      raise(ErrorCode::ConfigError, "bad modulus in '" + std::string(text) + "'");
    if (p >= (1ull << 31)) raise(ErrorCode::ConfigError, "modulus must be below 2^31");
    return PrimeField(static_cast<std::uint32_t>(p));
  }
  if (text.starts_with("poly:")) {
    std::string_view body = text.substr(5);
    auto slash = body.find('/');
    auto names = split_names(body.substr(0, slash));
    if (names.empty()) raise(ErrorCode::ConfigError, "polynomial ring without variables");
    std::vector<std::string> inverted;
    if (slash != std::string_view::npos) inverted = split_names(body.substr(slash + 1));
    return LocalizedPolyRing(std::move(names), inverted);
  }
  raise(ErrorCode::ConfigError, "unknown ring '" + std::string(text) + "' (expected rational, zmod:<p> or poly:...)");
}

std::string describe(const RingDescriptor& ring) {
  return std::visit([](const auto& r) { return r.name(); }, ring);
}

}  // namespace dser
