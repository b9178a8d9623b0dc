#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "dser/laurent.hpp"
#include "dser/ring.hpp"

namespace dser {

/// Runtime choice among the three backends.
using RingDescriptor = std::variant<RationalField, PrimeField, LocalizedPolyRing>;

/// Accepts "rational" (or "q"), "zmod:<p>", and "poly:<vars>[/<inverted>]"
/// with comma separated names, e.g. "poly:d1,w11/d1".
RingDescriptor parse_ring(std::string_view text);

std::string describe(const RingDescriptor& ring);

}  // namespace dser
