#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

using nlohmann::ordered_json;

namespace {

struct RunResult {
    int status;
    std::string out;
};

// Arguments contain no single quotes, so plain quoting is airtight against
// the '<', '^', and '~' characters the grammars use.
RunResult run_cli(const std::vector<std::string>& args) {
    std::string command = "'" OPAL_CLI_PATH "'";
    for (const auto& a : args) command += " '" + a + "'";
    command += " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) out.append(buffer, got);
    int raw = pclose(pipe);
    int status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return {status, out};
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string::npos) {
            lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

TEST_CASE("product, inverse, and literal forms") {
    CHECK(run_cli({"mul", "<1^2 2^-3 3^1>", "<2^3>"}).out == "<1^2 3^1>\n");
    CHECK(run_cli({"mul", "<>"}).out == "<>\n");
    CHECK(run_cli({"mul", "<1^1>", "<1^-1>"}).out == "<>\n");
    CHECK(run_cli({"mul", "~3,2,2,2,1,1"}).out == "<1^2 2^3 3^-1>\n");
    CHECK(run_cli({"mul", ""}).out == "<>\n");
    CHECK(run_cli({"inv", "<1^2 3^-1>"}).out == "<1^-2 3^1>\n");
    CHECK(run_cli({"--output", "json", "mul", "<1^2 2^-3>", "<2^1>"}).out ==
          "{\"1\":2,\"2\":-2}\n");
    CHECK(run_cli({"mul", "<1^2 2^-3 3^1>", "<2^3>"}).status == 0);
}

TEST_CASE("prime-exponent map and its inverse") {
    CHECK(run_cli({"supernorm", "<3^2>"}).out == "25\n");
    CHECK(run_cli({"supernorm", "<>"}).out == "1\n");
    CHECK(run_cli({"supernorm", "<1^2 2^-3 3^1>"}).out == "20/27\n");
    CHECK(run_cli({"factor", "20/27"}).out == "<1^2 2^-3 3^1>\n");
    CHECK(run_cli({"factor", "1"}).out == "<>\n");
    CHECK(run_cli({"factor", "360"}).out == "<1^3 2^2 3^1>\n");
    CHECK(run_cli({"--output", "json", "supernorm", "<1^-1>"}).out ==
          "{\"value\":\"1/2\"}\n");
}

TEST_CASE("statistics report") {
    RunResult r = run_cli({"stats", "<1^2 2^3 3^-1>"});
    CHECK(r.status == 0);
    CHECK(r.out ==
          "oversize 5\n"
          "overlength 4\n"
          "size 11\n"
          "length 6\n"
          "overnorm 8/3\n"
          "multiplicity 1 2\n"
          "multiplicity 2 3\n"
          "multiplicity 3 -1\n");

    RunResult empty = run_cli({"stats", "<>"});
    CHECK(empty.out ==
          "oversize 0\n"
          "overlength 0\n"
          "size 0\n"
          "length 0\n"
          "overnorm 1\n");

    ordered_json j = ordered_json::parse(run_cli({"--output", "json", "stats", "<1^2 2^3 3^-1>"}).out);
    CHECK(j["oversize"] == 5);
    CHECK(j["overlength"] == 4);
    CHECK(j["size"] == 11);
    CHECK(j["length"] == 6);
    CHECK(j["overnorm"] == "8/3");
    CHECK(j["multiplicities"] == ordered_json({{"1", 2}, {"2", 3}, {"3", -1}}));
}

TEST_CASE("membership and quotient images") {
    CHECK(run_cli({"member", "<1^2 2^-1>", "size-kernel"}).out == "true\n");
    CHECK(run_cli({"member", "<1^2 2^-1>", "length-kernel"}).out == "false\n");
    CHECK(run_cli({"member", "<>", "length-mod", "7"}).out == "true\n");
    CHECK(run_cli({"member", "<1^4 3^-2>", "parts-in", "1,3"}).out == "true\n");
    CHECK(run_cli({"member", "<1^4 2^1>", "parts-in", "1,3"}).out == "false\n");
    CHECK(run_cli({"quotient", "<5^-4>", "length-mod", "3"}).out == "2\n");
    CHECK(run_cli({"quotient", "<1^2 2^-3 3^1>", "parts-in", "1,3"}).out == "<2^-3>\n");
    CHECK(run_cli({"quotient", "<1^2 2^-3 3^1>", "parts-avoiding", "1,3"}).out ==
          "<1^2 3^1>\n");
    CHECK(run_cli({"quotient", "<1^2 5^1>", "size-kernel"}).out == "7\n");
    CHECK(run_cli({"--output", "json", "member", "<>", "size-kernel"}).out ==
          "{\"value\":true}\n");
    CHECK(run_cli({"--output", "json", "quotient", "<5^-4>", "length-mod", "3"}).out ==
          "{\"value\":2}\n");
}

TEST_CASE("enumeration output") {
    RunResult r = run_cli({"enumerate", "partitions", "4"});
    CHECK(r.out ==
          "<4^1>\n"
          "<1^1 3^1>\n"
          "<2^2>\n"
          "<1^2 2^1>\n"
          "<1^4>\n");

    CHECK(lines_of(run_cli({"enumerate", "overpartitions", "2"}).out).size() == 4);

    CHECK(run_cli({"enumerate", "pn", "5"}).out ==
          "0 1\n1 1\n2 2\n3 3\n4 5\n5 7\n");
    CHECK(run_cli({"--output", "csv", "enumerate", "pn", "5"}).out ==
          "0,1\n1,1\n2,2\n3,3\n4,5\n5,7\n");
    CHECK(run_cli({"enumerate", "overcount", "5"}).out ==
          "0 1\n1 2\n2 4\n3 8\n4 14\n5 24\n");

    ordered_json rows = ordered_json::parse(run_cli({"--output", "json", "enumerate", "pn", "3"}).out);
    REQUIRE(rows.size() == 4);
    CHECK(rows[3] == ordered_json({{"n", 3}, {"value", "3"}}));
}

TEST_CASE("verification subcommands succeed and report rows") {
    RunResult corteel = run_cli({"verify", "corteel", "10"});
    CHECK(corteel.status == 0);
    auto rows = lines_of(corteel.out);
    REQUIRE(rows.size() == 11);
    for (const auto& row : rows) CHECK(row.ends_with(" MATCH"));
    CHECK(rows[0] == "0 1 1 MATCH");
    CHECK(rows[1] == "1 0 0 MATCH");
    CHECK(rows[2] == "2 2 2 MATCH");

    CHECK(run_cli({"verify", "corteel", "0"}).out == "0 1 1 MATCH\n");
    CHECK(run_cli({"verify", "pn", "12"}).status == 0);
    CHECK(run_cli({"verify", "overcount", "8"}).status == 0);
    CHECK(run_cli({"--output", "csv", "verify", "corteel", "2"}).out ==
          "0,1,1,MATCH\n1,0,0,MATCH\n2,2,2,MATCH\n");

    RunResult axioms = run_cli({"--seed", "7", "verify", "axioms", "200"});
    CHECK(axioms.status == 0);
    CHECK(axioms.out ==
          "associativity 200 OK\n"
          "commutativity 200 OK\n"
          "identity 200 OK\n"
          "inverses 200 OK\n");
    CHECK(run_cli({"--seed", "7", "verify", "axioms", "200"}).out == axioms.out);
}

TEST_CASE("lattice output modes") {
    RunResult dot = run_cli({"lattice", "1", "3"});
    CHECK(dot.status == 0);
    CHECK(dot.out.find("digraph lattice {") == 0);
    CHECK(dot.out.find("rankdir=\"BT\"") != std::string::npos);
    CHECK(dot.out.find("label=\"<>\\n1\"") != std::string::npos);
    CHECK(dot.out.find("label=\"<3^1>\\n5\"") != std::string::npos);
    CHECK(run_cli({"--output", "dot", "lattice", "1", "3"}).out == dot.out);

    ordered_json graph = ordered_json::parse(run_cli({"--output", "json", "lattice", "2", "3"}).out);
    CHECK(graph["nodes"].size() == 10);
    CHECK(graph["levels"].size() == 3);
    CHECK(graph["edges"].size() == 12);
}

TEST_CASE("argument and domain failures exit with status two") {
    CHECK(run_cli({"mul", "<1^0>"}).status == 2);
    CHECK(run_cli({"mul", "<1^2"}).status == 2);
    CHECK(run_cli({"factor", "-5"}).status == 2);
    CHECK(run_cli({"factor", "0"}).status == 2);
    CHECK(run_cli({"factor", "1/0"}).status == 2);
    CHECK(run_cli({"factor", "7/x"}).status == 2);
    CHECK(run_cli({"member", "<1^1>", "orbit"}).status == 2);
    CHECK(run_cli({"member", "<1^1>", "parts-in"}).status == 2);
    CHECK(run_cli({"member", "<1^1>", "size-kernel", "3"}).status == 2);
    CHECK(run_cli({"quotient", "<1^1>", "length-mod", "0"}).status == 2);
    CHECK(run_cli({"enumerate", "pn", "-1"}).status == 2);
    CHECK(run_cli({"enumerate", "partitions", "9999"}).status == 2);
    CHECK(run_cli({"verify", "corteel", "26"}).status == 2);
    CHECK(run_cli({"lattice", "99"}).status == 2);
    CHECK(run_cli({"nonsense"}).status == 2);
    CHECK(run_cli({}).status == 2);
    CHECK(run_cli({"--output", "csv", "mul", "<1^1>"}).status == 2);
    CHECK(run_cli({"--output", "dot", "stats", "<>"}).status == 2);
    CHECK(run_cli({"--help"}).status == 0);
}

TEST_CASE("identical invocations are byte-identical") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"enumerate", "overpartitions", "6"},
             {"lattice", "3", "3"},
             {"verify", "overcount", "10"},
             {"--output", "json", "stats", "~3,2,2,2,1,1"}}) {
        RunResult first = run_cli(args);
        RunResult second = run_cli(args);
        CHECK(first.status == 0);
        CHECK(first.out == second.out);
        CHECK_FALSE(first.out.empty());
    }
}
