#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "derivlab/cli/algebra_expr.hpp"
#include "derivlab/cli/catalog.hpp"
#include "derivlab/cli/commands.hpp"
#include "derivlab/cli/json_io.hpp"
#include "derivlab/errors.hpp"
#include "oracle.hpp"

using namespace derivlab;
using namespace derivlab::cli;
namespace fs = std::filesystem;

namespace {

const RingSpec Q;

struct ToolRun {
  int status = -1;
  std::string out;
};

ToolRun run_tool(const std::string& args) {
  const std::string cmd = std::string(DERIVLAB_TOOL) + " " + args + " 2>/dev/null";
  ToolRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("derivlab-test-" + std::to_string(::getpid())) / name;
  fs::create_directories(p.parent_path());
  return p;
}

void write(const fs::path& p, const std::string& text) {
  fs::create_directories(p.parent_path());
  std::ofstream(p) << text;
}

MapTriple find_example(const std::string& id) {
  for (const auto& [name, t] : example_triples()) {
    if (name == id) return t;
  }
  throw Error("no example " + id);
}

}  // namespace

TEST(AlgebraExpr, Parse) {
  EXPECT_EQ(parse_algebra("tn3", Q)->dim(), 6u);
  EXPECT_EQ(parse_algebra("tn", Q, 4)->dim(), 10u);
  EXPECT_EQ(parse_algebra("mn", Q, 2)->dim(), 4u);
  EXPECT_EQ(parse_algebra("mn3", Q)->dim(), 9u);
  EXPECT_EQ(parse_algebra("quat", Q)->dim(), 4u);
  EXPECT_EQ(parse_algebra("ring", RingSpec::integers_mod(4))->ring(), RingSpec::integers_mod(4));
  EXPECT_EQ(parse_algebra("diag3", Q)->dim(), 3u);
  EXPECT_EQ(parse_algebra("poly:3:tn2", Q)->dim(), 12u);
  EXPECT_EQ(parse_algebra("tensor:tn2,poly:1:ring", Q)->dim(), 6u);
  EXPECT_TRUE(parse_algebra("tensor:tn2,poly:1:ring", Q)->same_table(*tensor_product(upper_triangular(2), truncated_poly(ring_as_algebra(Q), 1))));
  EXPECT_THROW(parse_algebra("quat", RingSpec::integers_mod(5)), ParseError);
  EXPECT_THROW(parse_algebra("tn", Q), ParseError);
  EXPECT_THROW(parse_algebra("foo", Q), ParseError);
  EXPECT_THROW(parse_algebra("poly:x:tn2", Q), ParseError);
  EXPECT_THROW(parse_algebra("tensor:tn2", Q), ParseError);
}

TEST(AlgebraExpr, NamesRoundTrip) {
  for (const char* e : {"tn2", "mn3", "quat", "ring", "diag2", "poly:2:tn2", "tensor:mn2,diag2", "tensor:poly:1:ring,tn2"}) {
    const AlgebraPtr a = parse_algebra(e, Q);
    const auto name = algebra_name(*a);
    ASSERT_TRUE(name) << e;
    EXPECT_TRUE(parse_algebra(*name, Q)->same_table(*a)) << e;
  }
  EXPECT_FALSE(algebra_name(*truncated_poly(ring_as_algebra(Q), 1, "s")));
}

TEST(JsonIo, RingAndScalars) {
  for (const RingSpec& r : {Q, RingSpec::integers_mod(4), RingSpec::integers_mod(97)}) EXPECT_EQ(ring_from_json(ring_to_json(r)), r);
  EXPECT_EQ(ring_to_json(RingSpec::integers_mod(5)), Json::parse(R"({"kind":"Zmod","m":5})"));
  EXPECT_EQ(ring_to_json(Q), Json::parse(R"({"kind":"Q"})"));
  EXPECT_EQ(ring_from_json(Json("z5")), RingSpec::integers_mod(5));
  EXPECT_THROW(ring_from_json(Json::parse(R"({"kind":"R"})")), Error);
  EXPECT_EQ(scalar_from_json(scalar_to_json(Scalar::rational(-3, 7)), Q), Scalar::rational(-3, 7));
  EXPECT_EQ(scalar_to_json(Scalar::rational(-3, 7)), Json("-3/7"));
  EXPECT_EQ(scalar_from_json(Json(7), RingSpec::integers_mod(5)), Scalar::residue(2, 5));
  EXPECT_THROW(scalar_from_json(Json::array(), Q), Error);
}

TEST(JsonIo, AlgebraDocuments) {
  for (const AlgebraPtr& a : {upper_triangular(2), quaternions(), tensor_product(upper_triangular(2), diagonal(2)),
                              truncated_poly(ring_as_algebra(Q), 1, "s"), full_matrix(2, RingSpec::integers_mod(3))}) {
    const Json doc = algebra_to_json(*a);
    EXPECT_EQ(doc["dim"], a->dim());
    const AlgebraPtr back = algebra_from_json(doc, RingSpec::integers_mod(7));
    EXPECT_TRUE(back->same_table(*a));
    EXPECT_TRUE(validate(*back));
  }
  EXPECT_TRUE(algebra_from_json(Json("mn2"), Q)->same_table(*full_matrix(2)));
  EXPECT_EQ(algebra_ref(upper_triangular(3)), Json("tn3"));
  EXPECT_TRUE(algebra_ref(truncated_poly(ring_as_algebra(Q), 1, "s")).is_object());
  Json broken = algebra_to_json(*upper_triangular(2));
  broken["sc"].erase(0);
  EXPECT_THROW(algebra_from_json(broken, Q), Error);
}

TEST(JsonIo, MapsAndTriples) {
  std::mt19937_64 rng(3);
  for (const AlgebraPtr& a : {upper_triangular(2), quaternions(), truncated_poly(ring_as_algebra(Q), 1, "s")}) {
    const MapTriple t = oracle::random_triple(a, rng);
    EXPECT_EQ(map_from_json(map_to_json(t.f), a, Q), t.f);
    const MapTriple back = triple_from_json(triple_to_json(t), RingSpec::integers_mod(5));
    EXPECT_EQ(back, t);
  }
  const MapTriple ex = find_example("ex-2.3");
  const Json doc = triple_to_json(ex);
  EXPECT_EQ(doc["algebra"], Json("tn2"));
  // M[k][j] is coordinate k of the image of e_j.
  EXPECT_EQ(doc["g"]["matrix"][1][0], Json("2"));
  const Json bare = triple_to_json(ex, false);
  EXPECT_FALSE(bare.contains("algebra"));
  EXPECT_EQ(triple_from_json(bare, Q, upper_triangular(2)), ex);
  EXPECT_THROW(triple_from_json(bare, Q), Error);
  const MapTriple z4 = find_example("ex-1.3");
  EXPECT_EQ(triple_from_json(triple_to_json(z4), Q), z4);
}

TEST(JsonIo, Reports) {
  const MapTriple ex = find_example("ex-2.3");
  const Json bad = check_report_to_json(IdentityKind::LeftGHDerivation, ex, check(IdentityKind::LeftGHDerivation, ex));
  EXPECT_EQ(bad["holds"], false);
  EXPECT_EQ(bad["counterexample"]["i"], 0);
  EXPECT_EQ(bad["counterexample"]["j"], 1);
  EXPECT_EQ(bad["counterexample"]["a"], "e11");
  EXPECT_EQ(bad["counterexample"]["rhs_text"], "3e12");
  const Json good =
      check_report_to_json(IdentityKind::JordanLeftGHDerivation, ex, check(IdentityKind::JordanLeftGHDerivation, ex));
  EXPECT_EQ(good["holds"], true);
  EXPECT_TRUE(good["counterexample"].is_null());

  const SolutionSpace s = solve(upper_triangular(2), IdentityKind::JordanLeftGHDerivation);
  const Json sj = space_to_json(s);
  EXPECT_EQ(sj["dim"], 5);
  EXPECT_EQ(sj["basis"].size(), 5u);
  EXPECT_EQ(sj["canonical"].size(), 5u);
  EXPECT_EQ(sj["canonical"][0].size(), 27u);
  for (const auto& b : sj["basis"]) {
    EXPECT_TRUE(is_jordan_left_gh_derivation(triple_from_json(b, Q, upper_triangular(2))));
  }
  const Json sys = system_to_json(build_system(upper_triangular(2), IdentityKind::JordanLeftGHDerivation));
  EXPECT_EQ(sys["unknowns"], 27);
  EXPECT_EQ(sys["rows"].size(), 27u);
}

TEST(Catalog, EntriesWellFormed) {
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << e.id;
    EXPECT_FALSE(e.anchor.empty()) << e.id;
    EXPECT_FALSE(e.title.empty()) << e.id;
    EXPECT_TRUE(e.run) << e.id;
    if (!e.asserted) {
      EXPECT_TRUE(e.id.starts_with("audit-")) << e.id;
    }
  }
  for (const char* ex : {"ex-1.3", "ex-2.1", "ex-2.2", "ex-2.3", "ex-2.5", "ex-2.7", "ex-2.9", "ex-2.12", "ex-5.5", "ex-5.8"}) {
    EXPECT_TRUE(ids.count(ex)) << ex;
  }
}

TEST(Catalog, Filter) {
  EXPECT_TRUE(filter_matches("", "ex-2.3"));
  EXPECT_TRUE(filter_matches("ex-2.3", "ex-2.3"));
  EXPECT_FALSE(filter_matches("ex-2.3", "ex-2.31"));
  EXPECT_TRUE(filter_matches("ex-*", "ex-5.8"));
  EXPECT_TRUE(filter_matches("thm-tn-*,ex-5.8", "ex-5.8"));
  EXPECT_FALSE(filter_matches("thm-*", "ex-5.8"));
  const RunReport one = run_catalog("ex-5.8");
  ASSERT_EQ(one.results.size(), 1u);
  EXPECT_EQ(one.results[0].entry->id, "ex-5.8");
  EXPECT_EQ(one.results[0].status, Status::Pass);
  EXPECT_TRUE(run_catalog("nothing-matches").results.empty());
}

TEST(Catalog, ExamplesPass) {
  const RunReport r = run_catalog("ex-*");
  EXPECT_EQ(r.results.size(), 10u);
  for (const auto& res : r.results) EXPECT_EQ(res.status, Status::Pass) << res.entry->id;
}

TEST(Catalog, CompositeRingSkipsGenericEntries) {
  const RingSpec z4 = RingSpec::integers_mod(4);
  const RunReport r = run_catalog("", z4);
  EXPECT_TRUE(r.ok());
  for (const auto& res : r.results) {
    if (res.entry->ring_generic) {
      EXPECT_EQ(res.status, Status::Skip) << res.entry->id;
    } else {
      EXPECT_NE(res.status, Status::Fail) << res.entry->id;
    }
  }
  const RunReport ex13 = run_catalog("ex-1.3", z4);
  ASSERT_EQ(ex13.results.size(), 1u);
  EXPECT_EQ(ex13.results[0].status, Status::Pass);
}

TEST(Catalog, FullRunDeterministicAndGreen) {
  const RunReport a = run_catalog();
  const RunReport b = run_catalog();
  EXPECT_EQ(run_report_to_json(a, false).dump(), run_report_to_json(b, false).dump());
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(a.count(Status::Fail), 0u);
  EXPECT_EQ(a.count(Status::Reported), 1u);
  EXPECT_EQ(traceability_markdown(a), traceability_markdown(b));
}

TEST(Catalog, AnchorsInShippedTraceability) {
  std::ifstream in(DERIVLAB_TRACE_DOC);
  ASSERT_TRUE(in) << DERIVLAB_TRACE_DOC;
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string doc = ss.str();
  for (const auto& e : catalog()) {
    EXPECT_NE(doc.find(e.anchor), std::string::npos) << e.id;
    EXPECT_NE(doc.find("`" + e.id + "`"), std::string::npos) << e.id;
  }
}

TEST(Commands, SolveExitCodes) {
  std::ostringstream out, err;
  SolveOptions o;
  o.algebra = {"tn", 2, ""};
  o.kind = "jordan-left-gh";
  EXPECT_EQ(cmd_solve(o, out, err), 0);
  EXPECT_EQ(Json::parse(out.str())["dim"], 5);

  std::ostringstream out2;
  o.algebra = {"mn", 2, ""};
  o.kind = "left-gh";
  o.verify = true;
  EXPECT_EQ(cmd_solve(o, out2, err), 0);
  const Json m = Json::parse(out2.str());
  EXPECT_EQ(m["dim"], 0);
  EXPECT_EQ(m["verification"]["ok"], true);

  std::ostringstream out3;
  o.algebra = {"quat", std::nullopt, ""};
  o.kind = "jordan-left-gh";
  EXPECT_EQ(cmd_solve(o, out3, err), 0);
  EXPECT_EQ(Json::parse(out3.str())["dim"], 4);

  std::ostringstream sink;
  o.algebra = {"tn2", std::nullopt, ""};
  o.ring = RingSpec::integers_mod(4);
  EXPECT_EQ(cmd_solve(o, sink, err), 2);
  o.ring = Q;
  o.kind = "no-such-kind";
  EXPECT_EQ(cmd_solve(o, sink, err), 1);
  o.kind = "left-gh";
  o.algebra = {"tx9", std::nullopt, ""};
  EXPECT_EQ(cmd_solve(o, sink, err), 1);
}

TEST(Tool, Solve) {
  ToolRun r = run_tool("solve --algebra tn --n 2 --kind jordan-left-gh --ring q");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["dim"], 5);
  r = run_tool("solve --algebra mn --n 2 --kind left-gh --ring q");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["dim"], 0);
  r = run_tool("solve --algebra quat --kind jordan-left-gh");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["dim"], 4);
  r = run_tool("solve --algebra tn2 --kind left-gh --ring z5 --g-eq-h --verify");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["verification"]["ok"], true);
  EXPECT_EQ(run_tool("solve --algebra tn2 --kind left-gh --ring z4").status, 2);
  EXPECT_EQ(run_tool("solve --algebra tn2 --kind bogus").status, 1);
  EXPECT_EQ(run_tool("solve --algebra tn2 --kind left-gh --ring r7").status, 1);
  r = run_tool("solve --algebra tn2 --kind jordan-left-gh --emit-system");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["unknowns"], 27);
}

TEST(Tool, ExportThenCheck) {
  const fs::path dir = scratch("export");
  ASSERT_EQ(run_tool("export --out " + dir.string()).status, 0);
  EXPECT_TRUE(fs::exists(dir / "algebras" / "quat.json"));
  const std::string ex23 = (dir / "triples" / "ex-2.3.json").string();
  ToolRun r = run_tool("check --triple " + ex23 + " --kind jordan-left-gh");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["holds"], true);
  r = run_tool("check --triple " + ex23 + " --kind left-gh");
  EXPECT_EQ(r.status, 0);
  const Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["holds"], false);
  EXPECT_FALSE(rep["counterexample"].is_null());

  // A zero triple on an exported algebra file holds for every kind.
  const Json zero = triple_to_json(MapTriple::zero(upper_triangular(3)), false);
  const fs::path zf = dir / "zero.json";
  write(zf, zero.dump());
  for (IdentityKind k : kAllKinds) {
    r = run_tool("check --triple " + zf.string() + " --kind " + std::string(kind_name(k)) + " --algebra-file " +
                 (dir / "algebras" / "tn3.json").string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(Json::parse(r.out)["holds"], true) << kind_name(k);
  }

  const fs::path junk = dir / "junk.json";
  write(junk, "{ not json");
  EXPECT_EQ(run_tool("check --triple " + junk.string() + " --kind left-gh").status, 1);
  write(junk, R"({"algebra":"tn2","f":{"matrix":[[1]]},"g":{"matrix":[[1]]},"h":{"matrix":[[1]]}})");
  EXPECT_EQ(run_tool("check --triple " + junk.string() + " --kind left-gh").status, 1);
  fs::remove_all(dir);
}

TEST(Tool, VerifyCatalogAndConfig) {
  ToolRun r = run_tool("verify-paper --filter ex-5.8 --json --no-timings");
  EXPECT_EQ(r.status, 0);
  const Json rep = Json::parse(r.out);
  EXPECT_EQ(rep["entries"].size(), 1u);
  EXPECT_EQ(run_tool("verify-paper --filter zzz").status, 1);
  EXPECT_EQ(run_tool("verify-paper --filter ex-1.3 --ring z4").status, 0);

  const fs::path cfg = scratch("config.json");
  const fs::path out = scratch("from-config");
  write(cfg, Json{{"ring", "z5"}, {"output_dir", out.string()}}.dump());
  r = run_tool("--config " + cfg.string() + " solve --algebra mn2 --kind jordan-left-gh");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["ring"], ring_to_json(RingSpec::integers_mod(5)));
  EXPECT_EQ(Json::parse(r.out)["dim"], 4);
  EXPECT_EQ(run_tool("--config " + cfg.string() + " export").status, 0);
  EXPECT_TRUE(fs::exists(out / "algebras" / "tn2.json"));
  const Json tn2 = Json::parse(std::ifstream(out / "algebras" / "tn2.json"));
  EXPECT_EQ(ring_from_json(tn2["ring"]), RingSpec::integers_mod(5));
  fs::remove_all(out);

  r = run_tool("catalog --json");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out).size(), catalog().size());
}
