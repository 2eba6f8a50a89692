#include <array>
#include <cstdio>
#include <fstream>
#include <memory>

#include "support.hpp"
#include "idag/selftest.hpp"

namespace idag {
namespace {

struct CliResult {
  int status;
  std::string out;
};

CliResult run(const std::string& args) {
  std::string command = std::string("'") + IDAG_CLI_PATH + "' " + args + " 2>/dev/null";
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(command.c_str(), "r"), pclose);
  std::string out;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe.get())) > 0;) out.append(buf.data(), n);
  int status = pclose(pipe.release());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t hits = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++hits;
  return hits;
}

TEST(Cli, DotOfTwoThreeSample) {
  std::string path = write_temp("left.json", to_json(selftest::samples::two_three()).dump());
  CliResult r = run("dot @" + path);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, to_dot(selftest::samples::two_three()));
  EXPECT_EQ(count(r.out, "shape=circle"), 2u);
  EXPECT_EQ(count(r.out, "->") - count(r.out, "style=invis"), 6u);
}

TEST(Cli, DecomposeRoundTrip) {
  std::string path = write_temp("right.json", to_json(selftest::samples::three_one()).dump());
  CliResult expr = run("decompose @" + path + " --format text");
  ASSERT_EQ(expr.status, 0);
  std::string text = expr.out.substr(0, expr.out.find('\n'));
  CliResult from_expr = run("normalize '" + text + "'");
  CliResult from_json = run("normalize @" + path);
  ASSERT_EQ(from_expr.status, 0);
  EXPECT_EQ(from_expr.out, from_json.out);
  EXPECT_EQ(idag_from_json_text(from_json.out), canonical_form(selftest::samples::three_one()));
}

TEST(Cli, ClosureOfNodeFreeIdagIsUnchanged) {
  std::string json_text = to_json(symmetry(2, 1)).dump(2) + "\n";
  CliResult r = run("closure @" + write_temp("sym.json", json_text));
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out, json_text);
}

TEST(Cli, ComposeAndTensorFollowTheLibrary) {
  std::string left = write_temp("l.json", to_json(selftest::samples::two_three()).dump());
  std::string right = write_temp("r.json", to_json(selftest::samples::three_one()).dump());
  CliResult r = run("compose @" + left + " @" + right);
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(idag_from_json_text(r.out), selftest::samples::concatenated());
  CliResult t = run("tensor @" + left + " @" + right);
  ASSERT_EQ(t.status, 0);
  EXPECT_EQ(idag_from_json_text(t.out), juxt(selftest::samples::two_three(), selftest::samples::three_one()));
  EXPECT_EQ(run("compose @" + right + " @" + right).status, 2);
}

TEST(Cli, RandomIsDeterministicAndValid) {
  CliResult a = run("random --nodes 6 --edge-prob 0.4 --seed 77 --mode int");
  CliResult b = run("random --nodes 6 --edge-prob 0.4 --seed 77 --mode int");
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NO_THROW(idag_from_json_text(a.out));
  CliResult empty = run("random --nodes 4 --edge-prob 0 --seed 1");
  Idag d = idag_from_json_text(empty.out);
  EXPECT_EQ(d.node_count(), 4u);
  EXPECT_TRUE(d.edges().empty());
}

TEST(Cli, QuotientsAndModes) {
  EXPECT_EQ(run("eq 'delta ; (node * id(1)) ; nabla' node").status, 1);
  EXPECT_EQ(run("eq 'delta ; (node * id(1)) ; nabla' node --quotient transitive").status, 0);
  EXPECT_EQ(run("eq 'eta ; node' eta --quotient nodangling").status, 0);
  EXPECT_EQ(run("eq node node --mode int --quotient nodangling").status, 2);
  EXPECT_EQ(run("eq 'delta ; ' node").status, 2);
  EXPECT_EQ(run("normalize @/nonexistent/file").status, 2);
}

TEST(Cli, SelftestTranscriptIsDeterministic) {
  CliResult a = run("selftest --scale 0.05 --seed 3");
  CliResult b = run("selftest --scale 0.05 --seed 3");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  CliResult broken = run("selftest --scale 0.05 --mutant drop");
  EXPECT_EQ(broken.status, 1);
  EXPECT_NE(broken.out.find("FAIL axiom suite"), std::string::npos);
}

}  // namespace
}  // namespace idag
