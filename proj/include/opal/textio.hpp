#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "opal/numeric.hpp"
#include "opal/partition.hpp"

namespace opal {

// Thrown on malformed textual input; position is the byte offset of the
// offending character (input length when the input ended early).
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (offset " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

// Angle-bracket literal: "<1^2 2^-3 10^1>", "<>" for the empty
// overpartition. Parts ascend, multiplicities are nonzero.
std::string format(const Overpartition& a);
std::string format(const Partition& p);
Overpartition parse_overpartition(std::string_view text);

// Comma-separated descending part list with '~' marking an overline, e.g.
// "~3,2,2,2,1,1". The empty string denotes the empty overpartition.
std::string format_overline_list(const Overpartition& a);
Overpartition parse_overline_list(std::string_view text);

// Dispatches on the leading character: '<' selects the angle-bracket
// grammar, anything else the overline list.
Overpartition parse_any(std::string_view text);

// Decimal integer or "num/den"; result is canonicalized. Rejects a zero
// denominator.
BigRat parse_rational(std::string_view text);

// JSON object mapping decimal part strings to multiplicities, ascending:
// {"1": 2, "2": -3}. All JSON in this library uses ordered_json so emitted
// object keys keep ascending part order.
nlohmann::ordered_json to_json(const Overpartition& a);
Overpartition overpartition_from_json(const nlohmann::ordered_json& j);

}  // namespace opal
