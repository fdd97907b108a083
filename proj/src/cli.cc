#include "buffsim/cli.hh"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include "buffsim/errors.hh"
#include "buffsim/minimize.hh"
#include "buffsim/monoid.hh"
#include "buffsim/quotient.hh"
#include "buffsim/selftest.hh"
#include "buffsim/simulation.hh"
#include "buffsim/tiling.hh"

namespace buffsim
{

namespace
{

constexpr std::size_t default_cap = 200000;

std::size_t env_cap()
{
  const char* s = std::getenv("BUFFSIM_CAP");
  if (!s || !*s)
    return default_cap;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(s, &end, 10);
  if (*end != '\0' || v == 0)
    throw std::invalid_argument("BUFFSIM_CAP must be a positive integer");
  return static_cast<std::size_t>(v);
}

int result(std::ostream& out, Outcome o)
{
  out << "RESULT " << to_string(o) << "\n";
  switch (o)
    {
    case Outcome::holds:
      return exit_holds;
    case Outcome::fails:
      return exit_fails;
    case Outcome::inconclusive:
      break;
    }
  return exit_error;
}

Outcome outcome_of(bool holds)
{
  return holds ? Outcome::holds : Outcome::fails;
}

void write_file(const std::string& path, const std::string& text)
{
  std::ofstream f(path, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write " + path);
  f << text;
  if (!f.flush())
    throw std::runtime_error("cannot write " + path);
}

std::string lasso_text(const Nba& a, const UltimatelyPeriodicWord& w)
{
  return format_word(a, w.stem) + " (" + format_word(a, w.period) + ")^w";
}

std::string run_text(const Nba& b, const RunPath& run)
{
  std::ostringstream s;
  s << b.state_name(run.states.front());
  for (std::size_t i = 0; i < run.word.size(); ++i)
    s << " -" << b.letter_name(run.word[i]) << "-> "
      << b.state_name(run.states[i + 1]);
  return s.str();
}

struct SimOptions
{
  std::string relation;
  std::string mode = "lookahead";
  std::string acceptance = "fair";
  std::size_t k = 0;
  std::size_t cap = 0;
  std::size_t limit = 5000000;
  std::string certificate;
  std::string dot;
  std::string replay;
  std::string a, b;
};

int run_sim(const SimOptions& o, bool k_given, bool cap_given,
            std::ostream& out, std::ostream& err)
{
  const auto acc = parse_acceptance(o.acceptance);
  const auto mode = parse_buffer_mode(o.mode);
  if (!acc || !mode)
    throw std::invalid_argument("unknown --acceptance or --mode value");
  const bool quotient_rel =
    o.relation == "continuous" || o.relation == "lookahead";
  if (k_given && o.relation != "bounded")
    throw std::invalid_argument("--k is only valid with --relation bounded");
  if (o.relation == "bounded" && !k_given)
    throw std::invalid_argument("--relation bounded requires --k");
  if (quotient_rel && *acc != Acceptance::fair)
    throw std::invalid_argument(
      "unbounded buffered simulation is only decided for fair acceptance");
  if (!o.replay.empty() && !quotient_rel)
    throw std::invalid_argument(
      "--replay needs --relation continuous or lookahead");
  if (cap_given && !quotient_rel)
    throw std::invalid_argument(
      "--cap is only used by --relation continuous or lookahead");

  const Nba a = load_nba(o.a);
  const Nba b = load_nba(o.b);
  if (!quotient_rel)
    {
      GameArena g = o.relation == "plain"
                      ? build_plain_sim_arena(a, b, *acc)
                      : build_bounded_buffer_arena(a, b, o.k, *mode, *acc,
                                                   o.limit);
      const Verdict v = solve(g);
      err << "arena " << g.size() << " positions, " << g.num_edges()
          << " edges\n";
      if (!o.dot.empty())
        write_file(o.dot, g.to_dot());
      if (!o.certificate.empty())
        write_file(o.certificate, strategy_certificate(g, v));
      return result(out, outcome_of(v.holds));
    }

  const auto rel = o.relation == "continuous"
                     ? QuotientRelation::continuous_fair
                     : QuotientRelation::lookahead_fair;
  const SimulationReport r = decide(a, b, rel, o.cap);
  err << summary(r);
  if (r.outcome == Outcome::inconclusive)
    err << "monoid cap " << o.cap << " exceeded; raise --cap or BUFFSIM_CAP\n";
  if (!o.dot.empty() && r.game)
    write_file(o.dot, r.game->arena.to_dot());
  if (!o.certificate.empty() && r.game)
    write_file(o.certificate, certificate(r, a));
  if (!o.replay.empty() && r.holds())
    {
      const auto colon = o.replay.find(':');
      if (colon == std::string::npos)
        throw std::invalid_argument("--replay expects u:v");
      UltimatelyPeriodicWord w{parse_word(a, o.replay.substr(0, colon)),
                               parse_word(a, o.replay.substr(colon + 1))};
      if (w.period.empty())
        throw std::invalid_argument("--replay: v must be non-empty");
      const auto lasso = accepting_lasso(a, w);
      if (!lasso)
        throw std::invalid_argument("--replay: the word is not accepted by "
                                    + o.a);
      const RunPath run = replay(r, a, b, *lasso);
      err << "replay " << run_text(align_alphabet(a, b), run) << "\n";
    }
  return result(out, r.outcome);
}

int run_incl(const std::string& pa, const std::string& pb, std::size_t cap,
             std::ostream& out, std::ostream& err)
{
  const Nba a = load_nba(pa);
  const Nba b = load_nba(pb);
  const auto r = language_inclusion(a, b, cap);
  err << "monoid " << r.monoid_size << "\n";
  switch (r.verdict)
    {
    case InclusionVerdict::included:
      return result(out, Outcome::holds);
    case InclusionVerdict::not_included:
      err << "counterexample " << lasso_text(a, *r.counterexample) << "\n";
      return result(out, Outcome::fails);
    case InclusionVerdict::inconclusive:
      err << "monoid cap " << cap << " exceeded\n";
      break;
    }
  return result(out, Outcome::inconclusive);
}

int run_minimize(const std::string& relation, std::size_t k, bool prune_too,
                 bool verify, std::size_t cap, const std::string& format,
                 const std::string& in, const std::string& dest,
                 std::ostream& out, std::ostream& err)
{
  const PreorderKind kind =
    relation == "direct" ? PreorderKind::direct : PreorderKind::delayed;
  if (prune_too && kind == PreorderKind::delayed)
    throw DelayedPruningRefused();
  const Nba a = load_nba(in);
  const Nba m = minimize(a, kind, k, prune_too);
  err << "states " << a.num_states() << " -> " << m.num_states()
      << ", transitions " << a.num_transitions() << " -> "
      << m.num_transitions() << "\n";
  write_file(dest, emit_nba(m, format == "ba" ? NbaFormat::ba
                                              : NbaFormat::native));
  if (!verify)
    return result(out, Outcome::holds);
  const auto x = language_inclusion(a, m, cap);
  const auto y = language_inclusion(m, a, cap);
  if (x.verdict == InclusionVerdict::inconclusive
      || y.verdict == InclusionVerdict::inconclusive)
    {
      err << "verification inconclusive: monoid cap " << cap << " exceeded\n";
      return result(out, Outcome::inconclusive);
    }
  if (x.counterexample)
    err << "lost word " << lasso_text(a, *x.counterexample) << "\n";
  if (y.counterexample)
    err << "added word " << lasso_text(m, *y.counterexample) << "\n";
  return result(out,
                outcome_of(x.verdict == InclusionVerdict::included
                           && y.verdict == InclusionVerdict::included));
}

int run_gen(const std::string& kind, const std::string& tiling, std::size_t n,
            const std::string& prefix, std::ostream& out, std::ostream& err)
{
  const TilingSystem ts = load_tiling_system(tiling);
  const bool pspace = kind == "pspace";
  auto [a, b] = pspace ? gen_pspace(ts, n) : gen_exptime(ts, n);
  write_file(prefix + ".A.nba", emit_nba(a, NbaFormat::native));
  write_file(prefix + ".B.nba", emit_nba(b, NbaFormat::native));
  err << "wrote " << prefix << ".A.nba (" << a.num_states() << " states) and "
      << prefix << ".B.nba (" << b.num_states() << " states)\n";
  try
    {
      if (pspace)
        {
          const std::size_t height = std::size_t{1} << n;
          const auto t = brute_force_tiling(ts, n, height);
          err << "expected lookahead-fair: " << (t ? "fails" : "holds")
              << " (" << (t ? "a" : "no") << " valid " << n << "x" << height
              << " tiling)\n";
          return result(out, outcome_of(!t));
        }
      const auto w = brute_force_tiling_game(ts, n);
      err << "expected continuous-fair: "
          << (w == TilingGameWinner::starter ? "holds" : "fails") << " ("
          << to_string(w) << " wins the tiling game)\n";
      return result(out, outcome_of(w == TilingGameWinner::starter));
    }
  catch (const BudgetExceeded& e)
    {
      err << "oracle: " << e.what() << "\n";
      return result(out, Outcome::inconclusive);
    }
}

std::string monoid_listing(const Nba& a, const TransitionMonoid& m)
{
  std::ostringstream s;
  s << "elements " << m.size() << "\n";
  s << "idempotents " << m.idempotent_indices().size() << "\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    {
      const auto& e = m.element(i);
      s << "element " << i << " witness " << format_word(a, e.witness)
        << " profile " << e.profile.to_string()
        << (e.is_identity ? " identity" : "")
        << (e.idempotent ? " idempotent" : "") << "\n";
    }
  return s.str();
}

std::string cayley_dot(const Nba& a, const TransitionMonoid& m)
{
  std::ostringstream s;
  s << "digraph cayley {\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    s << "  e" << i << " [label=\"" << format_word(a, m.witness(i)) << "\""
      << (m.is_idempotent(i) ? " shape=doublecircle" : "") << "];\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (Letter l = 0; l < a.num_letters(); ++l)
      s << "  e" << i << " -> e" << m.right_mult(i, l) << " [label=\""
        << a.letter_name(l) << "\"];\n";
  s << "}\n";
  return s.str();
}

int run_monoid(const std::string& path, std::size_t cap,
               const std::string& dot, std::ostream& out, std::ostream& err)
{
  const Nba a = load_nba(path);
  try
    {
      const TransitionMonoid m = build_monoid(a, cap);
      out << monoid_listing(a, m);
      if (!dot.empty())
        write_file(dot, cayley_dot(a, m));
      return result(out, Outcome::holds);
    }
  catch (const CapExceeded& e)
    {
      err << e.what() << "\n";
      return result(out, Outcome::inconclusive);
    }
}

} // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err)
{
  // `-o-prefix` is accepted as a spelling of `--o-prefix`.
  std::vector<const char*> args(argv, argv + argc);
  for (auto& x : args)
    if (std::string_view(x) == "-o-prefix")
      x = "--o-prefix";

  CLI::App app{"Buffered simulation toolkit for Büchi automata", "buffsim"};
  app.require_subcommand(1);
  std::size_t cap = 0;

  SimOptions sim;
  auto* s = app.add_subcommand("sim", "Decide a simulation relation");
  s->add_option("--relation", sim.relation, "Simulation relation")
    ->required()
    ->check(CLI::IsMember({"plain", "bounded", "continuous", "lookahead"}));
  s->add_option("--mode", sim.mode, "Buffer mode for bounded games")
    ->check(CLI::IsMember({"lookahead", "continuous"}));
  s->add_option("--acceptance", sim.acceptance, "Winning condition")
    ->check(CLI::IsMember({"fair", "direct", "delayed"}));
  auto* k_opt = s->add_option("--k", sim.k, "Buffer bound")
                  ->check(CLI::PositiveNumber);
  auto* sim_cap = s->add_option("--cap", cap, "Monoid element cap")
                    ->check(CLI::PositiveNumber);
  s->add_option("--limit", sim.limit, "Bounded-game position budget")
    ->check(CLI::PositiveNumber);
  s->add_option("--certificate", sim.certificate, "Write the strategy here");
  s->add_option("--dot", sim.dot, "Write the game arena in DOT here");
  s->add_option("--replay", sim.replay,
                "Replay the strategy against u·v^ω (u:v)");
  s->add_option("A", sim.a, "Spoiler automaton")->required();
  s->add_option("B", sim.b, "Duplicator automaton")->required();

  std::string ia, ib;
  auto* in = app.add_subcommand("incl", "Language inclusion L(A) ⊆ L(B)");
  auto* incl_cap = in->add_option("--cap", cap, "Monoid element cap")
                     ->check(CLI::PositiveNumber);
  in->add_option("A", ia)->required();
  in->add_option("B", ib)->required();

  std::string mrel, min_in, min_out, mformat = "native";
  std::size_t mk = 1;
  bool mprune = false, mverify = false;
  auto* mn = app.add_subcommand("minimize", "Quotient and prune");
  mn->add_option("--relation", mrel, "Preorder")
    ->required()
    ->check(CLI::IsMember({"direct", "delayed"}));
  mn->add_option("--k", mk, "Buffer bound")->check(CLI::PositiveNumber);
  mn->add_flag("--prune", mprune, "Prune subsumed transitions (direct only)");
  mn->add_flag("--verify", mverify, "Check language equivalence");
  auto* min_cap = mn->add_option("--cap", cap, "Monoid cap for --verify")
                    ->check(CLI::PositiveNumber);
  mn->add_option("--format", mformat, "Output format")
    ->check(CLI::IsMember({"native", "ba"}));
  mn->add_option("-o,--output", min_out, "Output file")->required();
  mn->add_option("A", min_in)->required();

  std::string gkind, gtiling, gprefix;
  std::size_t gn = 1;
  auto* gen = app.add_subcommand("gen", "Hardness instances from tilings");
  gen->add_option("kind", gkind)->required()->check(
    CLI::IsMember({"pspace", "exptime"}));
  gen->add_option("--tiling", gtiling, "Tiling-system file")->required();
  gen->add_option("--n", gn, "Row length")->required()->check(
    CLI::Range(1, 16));
  gen->add_option("-o,--o-prefix", gprefix, "Output prefix")->required();

  std::string mpath, mdot;
  auto* mo = app.add_subcommand("monoid", "Transition monoid listing");
  auto* mon_cap = mo->add_option("--cap", cap, "Monoid element cap")
                    ->check(CLI::PositiveNumber);
  mo->add_option("--dot", mdot, "Write the right Cayley graph in DOT here");
  mo->add_option("A", mpath)->required();

  std::uint64_t seed = 1;
  std::size_t budget = 200;
  std::size_t st_cap = 50000;
  auto* st = app.add_subcommand("selftest", "Randomized property suites");
  st->add_option("--seed", seed, "Random seed");
  st->add_option("--budget", budget, "Instances per suite")
    ->check(CLI::PositiveNumber);
  st->add_option("--cap", st_cap, "Monoid element cap")
    ->check(CLI::PositiveNumber);

  try
    {
      app.parse(static_cast<int>(args.size()), args.data());
    }
  catch (const CLI::CallForHelp& e)
    {
      return app.exit(e, out, err);
    }
  catch (const CLI::CallForAllHelp& e)
    {
      return app.exit(e, out, err);
    }
  catch (const CLI::ParseError& e)
    {
      app.exit(e, err, err);
      return exit_error;
    }

  try
    {
      const bool cap_given = sim_cap->count() || incl_cap->count()
                             || min_cap->count() || mon_cap->count();
      if (!cap_given)
        cap = env_cap();
      if (s->parsed())
        {
          sim.cap = cap;
          return run_sim(sim, k_opt->count() > 0, sim_cap->count() > 0, out,
                         err);
        }
      if (in->parsed())
        return run_incl(ia, ib, cap, out, err);
      if (mn->parsed())
        return run_minimize(mrel, mk, mprune, mverify, cap, mformat, min_in,
                            min_out, out, err);
      if (gen->parsed())
        return run_gen(gkind, gtiling, gn, gprefix, out, err);
      if (mo->parsed())
        return run_monoid(mpath, cap, mdot, out, err);
      if (st->parsed())
        {
          const auto rep = run_selftest(seed, budget, st_cap);
          out << format_report(rep);
          return result(out, outcome_of(rep.ok()));
        }
    }
  catch (const std::exception& e)
    {
      err << "error: " << e.what() << "\n";
      return exit_error;
    }
  return exit_error;
}

} // namespace buffsim
