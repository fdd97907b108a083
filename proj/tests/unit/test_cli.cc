#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "buffsim/cli.hh"
#include "buffsim/nba.hh"

using namespace buffsim;

namespace
{

namespace fs = std::filesystem;

struct Run
{
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args)
{
  args.insert(args.begin(), "buffsim");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code =
    run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fx(const std::string& name)
{
  return std::string(BUFFSIM_FIXTURE_DIR) + "/" + name;
}

fs::path scratch()
{
  auto p = fs::temp_directory_path() / "buffsim-cli-test";
  fs::create_directories(p);
  return p;
}

std::string slurp(const fs::path& p)
{
  std::ifstream f(p);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

} // namespace

TEST_CASE("sim verdicts and exit codes")
{
  auto r = cli({"sim", "--relation", "lookahead", fx("branching.A"),
                fx("branching.B")});
  CHECK(r.code == exit_holds);
  CHECK(r.out == "RESULT holds\n");
  r = cli({"sim", "--relation", "plain", fx("branching.A"), fx("branching.B")});
  CHECK(r.code == exit_fails);
  CHECK(r.out == "RESULT fails\n");
  r = cli({"sim", "--relation", "bounded", "--k", "2", "--mode", "continuous",
           fx("lookahead-gap.A"), fx("lookahead-gap.B")});
  CHECK(r.code == exit_holds);
  r = cli({"sim", "--relation", "continuous", fx("inclusion-gap.A"),
           fx("inclusion-gap.B")});
  CHECK(r.code == exit_fails);
  r = cli({"sim", "--relation", "continuous", "--cap", "4",
           fx("branching.A"), fx("branching.B")});
  CHECK(r.out == "RESULT inconclusive\n");
  CHECK(r.code == exit_error);
}

TEST_CASE("option validation")
{
  CHECK(cli({}).code == exit_error);
  CHECK(cli({"frobnicate"}).code == exit_error);
  CHECK(cli({"sim", "--relation", "bounded", fx("branching.A"),
             fx("branching.B")})
          .code
        == exit_error);
  CHECK(cli({"sim", "--relation", "plain", "--k", "2", fx("branching.A"),
             fx("branching.B")})
          .code
        == exit_error);
  CHECK(cli({"sim", "--relation", "continuous", "--acceptance", "direct",
             fx("branching.A"), fx("branching.B")})
          .code
        == exit_error);
  CHECK(cli({"sim", "--relation", "plain", "--replay", "a:b",
             fx("branching.A"), fx("branching.B")})
          .code
        == exit_error);
  CHECK(cli({"sim", "--relation", "plain", "--cap", "10", fx("branching.A"),
             fx("branching.B")})
          .code
        == exit_error);
  CHECK(cli({"sim", "--relation", "plain", fx("branching.A"),
             fx("no-such-file")})
          .code
        == exit_error);
  auto bad = scratch() / "bad.nba";
  std::ofstream(bad) << "states: p\nbogus line\n";
  auto r = cli({"incl", bad.string(), fx("branching.B")});
  CHECK(r.code == exit_error);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("incl prints the counterexample on stderr")
{
  auto r = cli({"incl", fx("inclusion-gap.A"), fx("inclusion-gap.B")});
  CHECK(r.code == exit_holds);
  r = cli({"incl", fx("branching.B"), fx("branching.A")});
  CHECK(r.code == exit_holds);
  r = cli({"incl", fx("branching.A"), fx("lookahead-gap.A")});
  CHECK(r.code == exit_fails);
  CHECK(r.err.find("counterexample ") != std::string::npos);
}

TEST_CASE("BUFFSIM_CAP sets the default cap")
{
  ::setenv("BUFFSIM_CAP", "4", 1);
  auto r = cli({"incl", fx("branching.A"), fx("branching.B")});
  CHECK(r.out == "RESULT inconclusive\n");
  // An explicit --cap wins over the environment.
  r = cli({"incl", "--cap", "100000", fx("branching.A"), fx("branching.B")});
  CHECK(r.out == "RESULT holds\n");
  ::setenv("BUFFSIM_CAP", "zero", 1);
  CHECK(cli({"incl", fx("branching.A"), fx("branching.B")}).code
        == exit_error);
  ::unsetenv("BUFFSIM_CAP");
}

TEST_CASE("certificates, DOT and replay")
{
  auto dir = scratch();
  auto cert = dir / "cert.txt", dot = dir / "arena.dot";
  auto r = cli({"sim", "--relation", "continuous", "--certificate",
                cert.string(), "--dot", dot.string(), "--replay", "ab:a",
                fx("branching.A"), fx("branching.B")});
  CHECK(r.code == exit_holds);
  auto c = slurp(cert);
  CHECK(c.rfind("# continuous-fair holds", 0) == 0);
  CHECK(slurp(dot).rfind("digraph", 0) == 0);
  CHECK(r.err.find("replay ") != std::string::npos);
  // Same inputs, same certificate.
  auto again = dir / "cert2.txt";
  cli({"sim", "--relation", "continuous", "--certificate", again.string(),
       fx("branching.A"), fx("branching.B")});
  CHECK(slurp(again) == c);

  auto bcert = dir / "bounded.txt";
  r = cli({"sim", "--relation", "plain", "--certificate", bcert.string(),
           fx("branching.A"), fx("branching.B")});
  CHECK(slurp(bcert).rfind("# fails, strategy of the spoiler", 0) == 0);
}

TEST_CASE("minimize writes an equivalent automaton")
{
  auto dir = scratch();
  auto out = dir / "min.nba";
  auto r = cli({"minimize", "--relation", "direct", "--k", "1", "--prune",
                "--verify", "-o", out.string(), fx("branching.B")});
  CHECK(r.code == exit_holds);
  Nba m = load_nba(out.string());
  CHECK(m.num_states() <= 5);
  CHECK(cli({"minimize", "--relation", "delayed", "--k", "1", "--prune", "-o",
             out.string(), fx("branching.B")})
          .code
        == exit_error);
  auto ba = dir / "min.ba";
  r = cli({"minimize", "--relation", "delayed", "--k", "2", "--format", "ba",
           "-o", ba.string(), fx("branching.A")});
  CHECK(r.code == exit_holds);
  CHECK(detect_format(slurp(ba)) == NbaFormat::ba);
}

TEST_CASE("gen writes both automata and reports the expected verdict")
{
  auto prefix = (scratch() / "fig").string();
  auto r = cli({"gen", "pspace", "--tiling", fx("three-tiles.tiling"), "--n",
                "3", "-o-prefix", prefix});
  CHECK(r.code == exit_holds);
  CHECK(r.out == "RESULT holds\n");
  CHECK(fs::exists(prefix + ".A.nba"));
  CHECK(load_nba(prefix + ".B.nba").num_states() > 0);
  r = cli({"gen", "exptime", "--tiling", fx("three-tiles.tiling"), "--n", "3",
           "--o-prefix", prefix});
  CHECK(r.code == exit_fails);
  CHECK(r.err.find("completer wins") != std::string::npos);
  CHECK(cli({"gen", "pspace", "--tiling", fx("three-tiles.tiling"), "--n",
             "17", "-o", prefix})
          .code
        == exit_error);
}

TEST_CASE("monoid listing")
{
  auto dir = scratch();
  auto dot = dir / "cayley.dot";
  auto r = cli({"monoid", "--dot", dot.string(), fx("inclusion-gap.A")});
  CHECK(r.code == exit_holds);
  CHECK(r.out.rfind("elements ", 0) == 0);
  CHECK(r.out.find("element 0 witness eps profile 21/12 identity idempotent\n")
        != std::string::npos);
  CHECK(r.out.substr(r.out.size() - 13) == "RESULT holds\n");
  CHECK(slurp(dot).rfind("digraph cayley", 0) == 0);
  CHECK(cli({"monoid", fx("inclusion-gap.A")}).out == r.out);
}

TEST_CASE("selftest")
{
  auto r = cli({"selftest", "--seed", "3", "--budget", "20"});
  CHECK(r.code == exit_holds);
  CHECK(r.out.find("suite profile-composition") != std::string::npos);
  CHECK(cli({"selftest", "--seed", "3", "--budget", "20"}).out == r.out);
}
