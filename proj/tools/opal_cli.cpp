#include <CLI11.hpp>

#include <charconv>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

#include "opal/enumerate.hpp"
#include "opal/lattice.hpp"
#include "opal/numeric.hpp"
#include "opal/partition.hpp"
#include "opal/stats.hpp"
#include "opal/subgroups.hpp"
#include "opal/supernorm.hpp"
#include "opal/textio.hpp"

namespace {

using nlohmann::ordered_json;
using namespace opal;

void require_mode(const std::string& mode, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (mode == a) return;
    throw std::invalid_argument("output mode '" + mode + "' is not supported here");
}

std::int64_t parse_int_token(const std::string& text, const char* what) {
    std::int64_t value = 0;
    auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || end != text.data() + text.size())
        throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    return value;
}

std::vector<Part> parse_part_set(const std::string& text) {
    std::vector<Part> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::size_t end = comma == std::string::npos ? text.size() : comma;
        parts.push_back(parse_int_token(text.substr(pos, end - pos), "part value"));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return parts;
}

// Families with a parameter take it as one extra argument: a comma-separated
// part set for parts-in / parts-avoiding, a modulus for length-mod.
SubgroupSpec parse_subgroup(const std::string& family, const std::vector<std::string>& extra) {
    auto no_parameter = [&]() {
        if (!extra.empty())
            throw std::invalid_argument("subgroup family '" + family + "' takes no parameter");
    };
    auto one_parameter = [&]() -> const std::string& {
        if (extra.size() != 1)
            throw std::invalid_argument("subgroup family '" + family + "' needs exactly one parameter");
        return extra.front();
    };
    if (family == "size-kernel") {
        no_parameter();
        return SubgroupSpec::size_kernel();
    }
    if (family == "length-kernel") {
        no_parameter();
        return SubgroupSpec::length_kernel();
    }
    if (family == "parts-in") return SubgroupSpec::parts_in(parse_part_set(one_parameter()));
    if (family == "parts-avoiding")
        return SubgroupSpec::parts_avoiding(parse_part_set(one_parameter()));
    if (family == "length-mod")
        return SubgroupSpec::length_mod(parse_int_token(one_parameter(), "modulus"));
    throw std::invalid_argument("unknown subgroup family: '" + family + "'");
}

void emit(const std::string& line) { std::cout << line << "\n"; }

void emit_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

int cmd_mul(const std::vector<std::string>& literals, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    Overpartition product;
    for (const auto& lit : literals) product = multiply(product, parse_any(lit));
    if (mode == "json")
        emit_json(to_json(product));
    else
        emit(format(product));
    return 0;
}

int cmd_inv(const std::string& literal, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    Overpartition value = inverse(parse_any(literal));
    if (mode == "json")
        emit_json(to_json(value));
    else
        emit(format(value));
    return 0;
}

int cmd_supernorm(const std::string& literal, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    BigRat value = supernorm(parse_any(literal));
    if (mode == "json")
        emit_json(ordered_json{{"value", format_rational(value)}});
    else
        emit(format_rational(value));
    return 0;
}

int cmd_factor(const std::string& rational, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    Overpartition value = factor_to_overpartition(parse_rational(rational));
    if (mode == "json")
        emit_json(to_json(value));
    else
        emit(format(value));
    return 0;
}

int cmd_stats(const std::string& literal, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    Overpartition a = parse_any(literal);
    if (mode == "json") {
        ordered_json j{{"oversize", oversize(a)},
                       {"overlength", overlength(a)},
                       {"size", a.size()},
                       {"length", a.length()},
                       {"overnorm", format_rational(overnorm(a))},
                       {"multiplicities", to_json(a)}};
        emit_json(j);
        return 0;
    }
    emit("oversize " + std::to_string(oversize(a)));
    emit("overlength " + std::to_string(overlength(a)));
    emit("size " + std::to_string(a.size()));
    emit("length " + std::to_string(a.length()));
    emit("overnorm " + format_rational(overnorm(a)));
    for (const auto& e : a.entries())
        emit("multiplicity " + std::to_string(e.part) + " " + std::to_string(e.mult));
    return 0;
}

int cmd_member(const std::string& literal, const SubgroupSpec& g, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    bool member = is_member(parse_any(literal), g);
    if (mode == "json")
        emit_json(ordered_json{{"value", member}});
    else
        emit(member ? "true" : "false");
    return 0;
}

int cmd_quotient(const std::string& literal, const SubgroupSpec& g, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    QuotientImage image = quotient_image(parse_any(literal), g);
    if (const auto* rest = std::get_if<Overpartition>(&image)) {
        if (mode == "json")
            emit_json(ordered_json{{"value", to_json(*rest)}});
        else
            emit(format(*rest));
    } else {
        std::int64_t value = std::get<std::int64_t>(image);
        if (mode == "json")
            emit_json(ordered_json{{"value", value}});
        else
            emit(std::to_string(value));
    }
    return 0;
}

void check_range(std::int64_t n, std::int64_t lo, std::int64_t hi, const char* what) {
    if (n < lo || n > hi)
        throw std::invalid_argument(std::string(what) + " must lie in [" + std::to_string(lo) +
                                    ", " + std::to_string(hi) + "]");
}

int cmd_enumerate_values(bool overlined, std::int64_t n, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    ordered_json rows = ordered_json::array();
    auto deliver = [&](const Overpartition& a) {
        if (mode == "json")
            rows.push_back(to_json(a));
        else
            emit(format(a));
    };
    if (overlined) {
        check_range(n, 0, 25, "n");
        auto gen = overpartitions_of(n);
        while (auto a = gen.next()) deliver(*a);
    } else {
        check_range(n, 0, 45, "n");
        auto gen = partitions_of(n);
        while (auto p = gen.next()) deliver(to_overpartition(*p));
    }
    if (mode == "json") emit_json(rows);
    return 0;
}

int cmd_enumerate_counts(bool overlined, std::int64_t n_max, const std::string& mode) {
    require_mode(mode, {"text", "json", "csv"});
    check_range(n_max, 0, overlined ? 5000 : 20000, "n");
    std::vector<std::string> values;
    if (overlined) {
        for (const auto& c : overpartition_count_series(n_max)) values.push_back(to_decimal(c));
    } else {
        for (std::int64_t n = 0; n <= n_max; ++n) values.push_back(to_decimal(partition_count(n)));
    }
    if (mode == "json") {
        ordered_json rows = ordered_json::array();
        for (std::int64_t n = 0; n <= n_max; ++n)
            rows.push_back(ordered_json{{"n", n}, {"value", values[static_cast<std::size_t>(n)]}});
        emit_json(rows);
        return 0;
    }
    const char* sep = mode == "csv" ? "," : " ";
    for (std::int64_t n = 0; n <= n_max; ++n)
        emit(std::to_string(n) + sep + values[static_cast<std::size_t>(n)]);
    return 0;
}

struct VerifyRow {
    std::int64_t n;
    std::string lhs;
    std::string rhs;
    bool match;
};

int emit_verify_rows(const std::vector<VerifyRow>& rows, const std::string& mode) {
    bool all = true;
    ordered_json json_rows = ordered_json::array();
    for (const auto& row : rows) {
        all = all && row.match;
        const char* status = row.match ? "MATCH" : "MISMATCH";
        if (mode == "json")
            json_rows.push_back(ordered_json{
                {"n", row.n}, {"lhs", row.lhs}, {"rhs", row.rhs}, {"match", row.match}});
        else if (mode == "csv")
            emit(std::to_string(row.n) + "," + row.lhs + "," + row.rhs + "," + status);
        else
            emit(std::to_string(row.n) + " " + row.lhs + " " + row.rhs + " " + status);
    }
    if (mode == "json") emit_json(json_rows);
    return all ? 0 : 1;
}

// identity keyword: the closed-form pair count vs direct enumeration.
int cmd_verify_corteel(std::int64_t n_max, const std::string& mode) {
    require_mode(mode, {"text", "json", "csv"});
    check_range(n_max, 0, 25, "n");
    std::vector<VerifyRow> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        BigNat formula = count_size_kernel_pairs_formula(n);
        std::uint64_t direct = count_size_kernel_pairs_bruteforce(n);
        rows.push_back({n, to_decimal(formula), std::to_string(direct),
                        formula == BigNat(static_cast<unsigned long>(direct))});
    }
    return emit_verify_rows(rows, mode);
}

int cmd_verify_pn(std::int64_t n_max, const std::string& mode) {
    require_mode(mode, {"text", "json", "csv"});
    check_range(n_max, 0, 40, "n");
    std::vector<VerifyRow> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        BigNat recurrence = partition_count(n);
        std::uint64_t streamed = 0;
        auto gen = partitions_of(n);
        while (gen.next()) ++streamed;
        rows.push_back({n, to_decimal(recurrence), std::to_string(streamed),
                        recurrence == BigNat(static_cast<unsigned long>(streamed))});
    }
    return emit_verify_rows(rows, mode);
}

int cmd_verify_overcount(std::int64_t n_max, const std::string& mode) {
    require_mode(mode, {"text", "json", "csv"});
    check_range(n_max, 0, 20, "n");
    std::vector<BigNat> series = overpartition_count_series(n_max);
    std::vector<VerifyRow> rows;
    for (std::int64_t n = 0; n <= n_max; ++n) {
        std::uint64_t streamed = 0;
        auto gen = overpartitions_of(n);
        while (gen.next()) ++streamed;
        const BigNat& coefficient = series[static_cast<std::size_t>(n)];
        rows.push_back({n, to_decimal(coefficient), std::to_string(streamed),
                        coefficient == BigNat(static_cast<unsigned long>(streamed))});
    }
    return emit_verify_rows(rows, mode);
}

int cmd_verify_axioms(std::int64_t samples, std::uint64_t seed, const std::string& mode) {
    require_mode(mode, {"text", "json"});
    check_range(samples, 1, 1000000, "sample count");
    std::mt19937_64 rng(seed);
    auto count = static_cast<std::uint64_t>(samples);
    struct Law {
        const char* name;
        std::function<bool(std::mt19937_64&)> holds;
    };
    const Law laws[] = {
        {"associativity",
         [](std::mt19937_64& r) {
             Overpartition a = random_overpartition(r);
             Overpartition b = random_overpartition(r);
             Overpartition c = random_overpartition(r);
             return multiply(multiply(a, b), c) == multiply(a, multiply(b, c));
         }},
        {"commutativity",
         [](std::mt19937_64& r) {
             Overpartition a = random_overpartition(r);
             Overpartition b = random_overpartition(r);
             return multiply(a, b) == multiply(b, a);
         }},
        {"identity",
         [](std::mt19937_64& r) {
             Overpartition a = random_overpartition(r);
             return multiply(a, Overpartition()) == a;
         }},
        {"inverses",
         [](std::mt19937_64& r) {
             Overpartition a = random_overpartition(r);
             return multiply(a, inverse(a)).empty();
         }},
    };
    bool all = true;
    ordered_json json_rows = ordered_json::array();
    for (const auto& law : laws) {
        std::uint64_t failures = 0;
        for (std::uint64_t i = 0; i < count; ++i)
            if (!law.holds(rng)) ++failures;
        all = all && failures == 0;
        if (mode == "json")
            json_rows.push_back(ordered_json{
                {"law", law.name}, {"samples", count}, {"failures", failures}});
        else
            emit(std::string(law.name) + " " + std::to_string(count) + " " +
                 (failures == 0 ? "OK" : "FAIL"));
    }
    if (mode == "json") emit_json(json_rows);
    return all ? 0 : 1;
}

int cmd_lattice(std::int64_t depth, Part max_part, const std::string& mode) {
    require_mode(mode, {"text", "dot", "json"});
    LatticeGraph graph = lattice_levels(depth, max_part);
    if (mode == "json") {
        ordered_json nodes = ordered_json::array();
        for (const auto& node : graph.nodes)
            nodes.push_back(ordered_json{{"partition", to_json(to_overpartition(node.partition))},
                                         {"label", to_decimal(node.label)}});
        ordered_json levels = ordered_json::array();
        for (const auto& level : graph.levels) levels.push_back(level);
        ordered_json edges = ordered_json::array();
        for (const auto& [from, to] : graph.edges)
            edges.push_back(ordered_json::array({from, to}));
        emit_json(ordered_json{{"nodes", nodes}, {"levels", levels}, {"edges", edges}});
        return 0;
    }
    std::cout << lattice_to_dot(graph);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the multiplicative group of overpartitions"};
    app.require_subcommand(1);
    std::string mode = "text";
    app.add_option("--output", mode, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv", "dot"}))
        ->capture_default_str();
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "Seed for sampled verification runs")->capture_default_str();

    std::function<int()> action;

    auto* mul = app.add_subcommand("mul", "Multiply overpartition literals");
    auto mul_args = std::make_shared<std::vector<std::string>>();
    mul->add_option("literal", *mul_args, "Overpartition literals")->required()->expected(-1);
    mul->callback([&, mul_args]() { action = [&, mul_args]() { return cmd_mul(*mul_args, mode); }; });

    auto* inv = app.add_subcommand("inv", "Invert an overpartition");
    auto inv_arg = std::make_shared<std::string>();
    inv->add_option("literal", *inv_arg, "Overpartition literal")->required();
    inv->callback([&, inv_arg]() { action = [&, inv_arg]() { return cmd_inv(*inv_arg, mode); }; });

    auto* sup = app.add_subcommand("supernorm", "Map an overpartition to its positive rational");
    auto sup_arg = std::make_shared<std::string>();
    sup->add_option("literal", *sup_arg, "Overpartition literal")->required();
    sup->callback([&, sup_arg]() { action = [&, sup_arg]() { return cmd_supernorm(*sup_arg, mode); }; });

    auto* fac = app.add_subcommand("factor", "Map a positive rational back to an overpartition");
    auto fac_arg = std::make_shared<std::string>();
    fac->add_option("rational", *fac_arg, "Positive rational, num or num/den")->required();
    fac->callback([&, fac_arg]() { action = [&, fac_arg]() { return cmd_factor(*fac_arg, mode); }; });

    auto* st = app.add_subcommand("stats", "Report the statistics of an overpartition");
    auto st_arg = std::make_shared<std::string>();
    st->add_option("literal", *st_arg, "Overpartition literal")->required();
    st->callback([&, st_arg]() { action = [&, st_arg]() { return cmd_stats(*st_arg, mode); }; });

    auto add_subgroup_command = [&](const char* name, const char* help, auto handler) {
        auto* cmd = app.add_subcommand(name, help);
        auto lit = std::make_shared<std::string>();
        auto family = std::make_shared<std::string>();
        auto extra = std::make_shared<std::vector<std::string>>();
        cmd->add_option("literal", *lit, "Overpartition literal")->required();
        cmd->add_option("family", *family,
                        "size-kernel | length-kernel | parts-in | parts-avoiding | length-mod")
            ->required();
        cmd->add_option("parameter", *extra, "Part set (comma separated) or modulus");
        cmd->callback([&, lit, family, extra, handler]() {
            action = [&, lit, family, extra, handler]() {
                return handler(*lit, parse_subgroup(*family, *extra), mode);
            };
        });
    };
    add_subgroup_command("member", "Test membership in a subgroup family",
                         [](const std::string& l, const SubgroupSpec& g, const std::string& m) {
                             return cmd_member(l, g, m);
                         });
    add_subgroup_command("quotient", "Classifying image of an overpartition modulo a subgroup",
                         [](const std::string& l, const SubgroupSpec& g, const std::string& m) {
                             return cmd_quotient(l, g, m);
                         });

    auto* en = app.add_subcommand("enumerate", "Enumerate values or counts");
    en->require_subcommand(1);
    auto add_enumerate = [&](const char* name, const char* help, auto handler) {
        auto* cmd = en->add_subcommand(name, help);
        auto n = std::make_shared<std::int64_t>(0);
        cmd->add_option("n", *n, "Upper index")->required();
        cmd->callback([&, n, handler]() { action = [&, n, handler]() { return handler(*n, mode); }; });
    };
    add_enumerate("partitions", "All partitions of n, one per line", [](std::int64_t n, const std::string& m) {
        return cmd_enumerate_values(false, n, m);
    });
    add_enumerate("overpartitions", "All overpartitions of n, one per line",
                  [](std::int64_t n, const std::string& m) { return cmd_enumerate_values(true, n, m); });
    add_enumerate("pn", "Partition counts 0..n", [](std::int64_t n, const std::string& m) {
        return cmd_enumerate_counts(false, n, m);
    });
    add_enumerate("overcount", "Overpartition counts 0..n", [](std::int64_t n, const std::string& m) {
        return cmd_enumerate_counts(true, n, m);
    });

    auto* ver = app.add_subcommand("verify", "Check identities against independent routes");
    ver->require_subcommand(1);
    auto add_verify = [&](const char* name, const char* help, auto handler) {
        auto* cmd = ver->add_subcommand(name, help);
        auto n = std::make_shared<std::int64_t>(0);
        cmd->add_option("n", *n, "Upper index")->required();
        cmd->callback([&, n, handler]() { action = [&, n, handler]() { return handler(*n, mode); }; });
    };
    add_verify("corteel", "Pair-count closed form vs direct enumeration",
               [](std::int64_t n, const std::string& m) { return cmd_verify_corteel(n, m); });
    add_verify("pn", "Pentagonal recurrence vs partition enumeration",
               [](std::int64_t n, const std::string& m) { return cmd_verify_pn(n, m); });
    add_verify("overcount", "Series coefficients vs overpartition enumeration",
               [](std::int64_t n, const std::string& m) { return cmd_verify_overcount(n, m); });
    auto* ax = ver->add_subcommand("axioms", "Group laws on seeded random samples");
    auto ax_samples = std::make_shared<std::int64_t>(1000);
    ax->add_option("samples", *ax_samples, "Samples per law")->capture_default_str();
    ax->callback([&, ax_samples]() {
        action = [&, ax_samples]() { return cmd_verify_axioms(*ax_samples, seed, mode); };
    });

    auto* lat = app.add_subcommand("lattice", "Layered multiset-inclusion diagram as DOT");
    auto lat_depth = std::make_shared<std::int64_t>(0);
    auto lat_max = std::make_shared<std::int64_t>(3);
    lat->add_option("depth", *lat_depth, "Number of levels below the root")->required();
    lat->add_option("max_part", *lat_max, "Largest part value")->capture_default_str();
    lat->callback([&, lat_depth, lat_max]() {
        action = [&, lat_depth, lat_max]() { return cmd_lattice(*lat_depth, *lat_max, mode); };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }
    try {
        return action ? action() : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
