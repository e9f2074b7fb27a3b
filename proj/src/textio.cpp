#include "opal/textio.hpp"

#include <charconv>
#include <set>
#include <vector>

namespace opal {

namespace {

bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Reads a decimal int64 at pos, advancing pos past it. A sign is only
// consumed when allow_sign is set.
std::int64_t read_int(std::string_view text, std::size_t& pos, bool allow_sign,
                      const char* what) {
    std::size_t start = pos;
    if (allow_sign && pos < text.size() && text[pos] == '-') ++pos;
    if (pos >= text.size() || !is_digit(text[pos])) throw ParseError(std::string("expected ") + what, start);
    while (pos < text.size() && is_digit(text[pos])) ++pos;
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, value);
    if (ec == std::errc::result_out_of_range) throw ParseError(std::string(what) + " out of range", start);
    (void)ptr;
    return value;
}

void expect(std::string_view text, std::size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c)
        throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
}

}  // namespace

std::string format(const Overpartition& a) {
    std::string out = "<";
    bool first = true;
    for (const auto& e : a.entries()) {
        if (!first) out += ' ';
        first = false;
        out += std::to_string(e.part);
        out += '^';
        out += std::to_string(e.mult);
    }
    out += '>';
    return out;
}

std::string format(const Partition& p) { return format(to_overpartition(p)); }

Overpartition parse_overpartition(std::string_view text) {
    std::size_t pos = 0;
    expect(text, pos, '<');
    std::vector<PartEntry> entries;
    std::set<Part> seen;
    if (pos < text.size() && text[pos] != '>') {
        while (true) {
            std::size_t part_pos = pos;
            Part part = read_int(text, pos, false, "part value");
            if (part < 1) throw ParseError("part value must be positive", part_pos);
            if (!seen.insert(part).second) throw ParseError("duplicate part value", part_pos);
            expect(text, pos, '^');
            std::size_t mult_pos = pos;
            Mult mult = read_int(text, pos, true, "multiplicity");
            if (mult == 0) throw ParseError("multiplicity must be nonzero", mult_pos);
            entries.push_back({part, mult});
            if (pos < text.size() && text[pos] == ' ') {
                ++pos;
                continue;
            }
            break;
        }
    }
    expect(text, pos, '>');
    if (pos != text.size()) throw ParseError("trailing characters", pos);
    return Overpartition::from_multiplicities(entries);
}

std::string format_overline_list(const Overpartition& a) {
    std::string out;
    bool first = true;
    for (const auto& p : overline_list_encode(a)) {
        if (!first) out += ',';
        first = false;
        if (p.overlined) out += '~';
        out += std::to_string(p.value);
    }
    return out;
}

Overpartition parse_overline_list(std::string_view text) {
    std::vector<ListedPart> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool overlined = false;
        if (text[pos] == '~') {
            overlined = true;
            ++pos;
        }
        Part value = read_int(text, pos, false, "part value");
        parts.push_back({value, overlined});
        if (pos < text.size()) expect(text, pos, ',');
    }
    if (!text.empty() && text.back() == ',') throw ParseError("expected part value", text.size());
    try {
        return overline_list_decode(parts);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), 0);
    }
}

Overpartition parse_any(std::string_view text) {
    if (!text.empty() && text.front() == '<') return parse_overpartition(text);
    return parse_overline_list(text);
}

BigRat parse_rational(std::string_view text) {
    auto check_integer = [&](std::string_view piece, std::size_t offset) {
        std::size_t i = piece.empty() ? 0 : (piece.front() == '-' ? 1 : 0);
        if (i == piece.size()) throw ParseError("expected integer", offset + i);
        for (; i < piece.size(); ++i)
            if (!is_digit(piece[i])) throw ParseError("expected digit", offset + i);
    };
    std::size_t slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    check_integer(num, 0);
    BigNat n(std::string(num), 10);
    BigNat d = 1;
    if (slash != std::string_view::npos) {
        std::string_view den = text.substr(slash + 1);
        check_integer(den, slash + 1);
        d = BigNat(std::string(den), 10);
        if (d == 0) throw ParseError("zero denominator", slash + 1);
    }
    return make_rational(n, d);
}

nlohmann::ordered_json to_json(const Overpartition& a) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& e : a.entries()) j[std::to_string(e.part)] = e.mult;
    return j;
}

Overpartition overpartition_from_json(const nlohmann::ordered_json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a JSON object of part multiplicities");
    std::vector<PartEntry> entries;
    for (const auto& [key, value] : j.items()) {
        std::size_t pos = 0;
        std::int64_t part = read_int(key, pos, false, "part key");
        if (pos != key.size()) throw ParseError("malformed part key", pos);
        if (!value.is_number_integer())
            throw std::invalid_argument("multiplicity must be an integer");
        entries.push_back({part, value.get<std::int64_t>()});
    }
    return Overpartition::from_multiplicities(entries);
}

}  // namespace opal
