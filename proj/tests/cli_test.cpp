#include <gtest/gtest.h>

#include <sstream>

#include "commands.hpp"
#include "format.hpp"
#include "json.hpp"
#include "taylor/catalog.hpp"

namespace taylor::cli {
namespace {

const std::string kData = TAYLOR_DATA_DIR;

struct Run {
  int code = 0;
  std::string out, err;
};

Run run(RunConfig c) {
  std::ostringstream out, err;
  Run r;
  r.code = execute(c, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

RunConfig config(const std::string& command, std::vector<std::string> inputs, Format format = Format::Text) {
  RunConfig c;
  c.command = command;
  for (auto& i : inputs) c.inputs.push_back(kData + "/" + i);
  c.format = format;
  return c;
}

TEST(AlgebraFormat, RoundTripsCatalog) {
  const auto cat = builtin_catalog();
  const auto text = emit_algebras(cat);
  const auto back = parse_algebras(text);
  ASSERT_EQ(back.size(), cat.size());
  for (std::size_t i = 0; i < cat.size(); ++i) {
    EXPECT_EQ(back[i].name(), cat[i].name());
    EXPECT_EQ(back[i].size(), cat[i].size());
    ASSERT_EQ(back[i].op_count(), cat[i].op_count());
    for (std::size_t o = 0; o < cat[i].op_count(); ++o) {
      EXPECT_EQ(back[i].op(o).symbol(), cat[i].op(o).symbol());
      EXPECT_EQ(back[i].op(o).table(), cat[i].op(o).table());
    }
  }
  EXPECT_EQ(emit_algebras(back), text);
}

TEST(AlgebraFormat, DataFilesRoundTrip) {
  for (const char* f : {"catalog.alg", "semilattice.alg", "z2.alg", "majority.alg", "a1.alg"}) {
    const auto algs = parse_algebras(read_file(kData + "/" + f), f);
    EXPECT_FALSE(algs.empty());
    EXPECT_EQ(emit_algebras(parse_algebras(emit_algebras(algs))), emit_algebras(algs)) << f;
  }
}

TEST(AlgebraFormat, ErrorsCarryPositions) {
  const std::string shortTable = "algebra m\nsize 2\nop m 2\n0 0\n0\nend\n";
  try {
    parse_algebras(shortTable, "t.alg");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_GT(e.line(), 0u);
    EXPECT_GT(e.column(), 0u);
    EXPECT_NE(std::string(e.what()).find("t.alg:"), std::string::npos);
  }
  try {
    parse_algebras("algebra m\nsize 2\nop m 2\n0 0\n0 7\nend\n", "t.alg");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 5u);
    EXPECT_EQ(e.column(), 3u);
  }
  EXPECT_THROW(parse_algebras("algebra m\nsize 0\nend\n"), ParseError);
  EXPECT_THROW(parse_algebras("algebra m\nsize 2\nop m 2\n0 0 0 1\nop m 2\n0 0 0 1\nend\n"), ParseError);
  EXPECT_THROW(read_file(kData + "/missing.alg"), InputError);
}

TEST(InstanceFormat, RoundTrips) {
  const auto lib = builtin_catalog();
  for (const char* f : {"equality.csp", "empty-constraints.csp", "chain.csp", "unsat.csp"}) {
    const auto parsed = parse_instance(read_file(kData + "/" + f), lib, f);
    const auto text = emit_instance(parsed.name, parsed.instance, lib);
    const auto again = parse_instance(text, lib);
    EXPECT_EQ(again.instance, parsed.instance) << f;
    EXPECT_EQ(emit_instance(again.name, again.instance, lib), text);
  }
}

TEST(InstanceFormat, EmbeddedAlgebrasRoundTrip) {
  Instance p;
  p.add_variable("x", power(z2_minority(), 2));
  p.add_variable("y", semilattice2());
  p.add_constraint({0, 1}, {{0, 0}, {3, 1}});
  const auto lib = builtin_catalog();
  const auto text = emit_instance("embedded", p, lib);
  const auto back = parse_instance(text, lib);
  EXPECT_EQ(back.instance, p);
  EXPECT_EQ(back.algebras.size(), 1u);
}

TEST(InstanceFormat, Errors) {
  const auto lib = builtin_catalog();
  try {
    parse_instance("instance p\nvar x semilattice\nconstraint x\n2\nend\nend\n", lib, "p.csp");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_THROW(parse_instance("instance p\nvar x nowhere\nend\n", lib), ParseError);
  EXPECT_THROW(parse_instance("instance p\nvar x Z2\nvar x Z2\nend\n", lib), ParseError);
  EXPECT_THROW(parse_instance("instance p\nvar x Z2\nconstraint x\n0 1\nend\nend\n", lib), ParseError);
  EXPECT_THROW(parse_instance("instance p\nend\nextra\n", lib), ParseError);
}

TEST(Execute, ExitCodes) {
  EXPECT_EQ(run(config("analyze", {"a1.alg"})).code, kPass);
  EXPECT_EQ(run(config("verify", {"a1.alg"})).code, kPass);
  EXPECT_EQ(run(config("csp-solve", {"equality.csp"})).code, kPass);
  EXPECT_EQ(run(config("csp-solve", {"unsat.csp"})).code, kCounterexample);
  EXPECT_EQ(run(config("csp-minimize", {"unsat.csp"})).code, kCounterexample);
  EXPECT_EQ(run(config("analyze", {"missing.alg"})).code, kUsage);
  EXPECT_EQ(run(config("analyze", {"a1.alg"}, Format::Dot)).code, kUsage);
  auto capped = config("analyze", {"a1.alg"});
  capped.closure_cap = 3;
  EXPECT_EQ(run(capped).code, kCapExceeded);
  RunConfig cat;
  cat.command = "catalog";
  EXPECT_EQ(run(cat).code, kPass);
}

TEST(Execute, OutputIsDeterministic) {
  for (Format f : {Format::Text, Format::Json}) {
    for (const auto& c : {config("analyze", {"a1.alg"}, f), config("verify", {"catalog.alg"}, f),
                          config("csp-minimize", {"chain.csp"}, f), config("csp-solve", {"equality.csp"}, f)}) {
      const auto a = run(c), b = run(c);
      EXPECT_EQ(a.out, b.out) << c.command;
      EXPECT_FALSE(a.out.empty());
    }
  }
  const auto d = config("edges", {"a1.alg"}, Format::Dot);
  EXPECT_EQ(run(d).out, run(d).out);
}

TEST(Execute, JsonAndTextAgree) {
  const auto doc = nlohmann::json::parse(run(config("analyze", {"a1.alg"}, Format::Json)).out);
  ASSERT_EQ(doc.size(), 1u);
  const auto& json = doc[0];
  const auto text = run(config("analyze", {"a1.alg"})).out;
  EXPECT_EQ(json["status"], "pass");
  EXPECT_EQ(json["taylor"]["has_taylor"], "yes");
  EXPECT_EQ(json["components"]["asm"]["min"], nlohmann::json::array({0}));
  EXPECT_NE(text.find("asm-min = {0}"), std::string::npos);
  const auto sj = nlohmann::json::parse(run(config("csp-solve", {"unsat.csp"}, Format::Json)).out);
  EXPECT_EQ(sj["satisfiable"], false);
  EXPECT_NE(run(config("csp-solve", {"unsat.csp"})).out.find("UNSAT"), std::string::npos);
  auto all = config("csp-solve", {"equality.csp"}, Format::Json);
  all.all_solutions = true;
  EXPECT_EQ(nlohmann::json::parse(run(all).out)["solutions"].size(), 2u);
}

TEST(Execute, CatalogOutputParses) {
  RunConfig c;
  c.command = "catalog";
  const auto algs = parse_algebras(run(c).out);
  EXPECT_EQ(algs.size(), 4u);
}

TEST(Execute, MinimizedInstanceParsesBack) {
  const auto r = run(config("csp-minimize", {"chain.csp"}));
  ASSERT_EQ(r.code, kPass);
  const auto back = parse_instance(r.out, builtin_catalog());
  EXPECT_TRUE(is_kl_minimal(back.instance, 2, 3));
}

}  // namespace
}  // namespace taylor::cli
