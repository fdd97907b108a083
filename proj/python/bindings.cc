#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <stdexcept>

#include "buffsim/cli.hh"
#include "buffsim/errors.hh"
#include "buffsim/minimize.hh"
#include "buffsim/monoid.hh"
#include "buffsim/quotient.hh"
#include "buffsim/simulation.hh"
#include "buffsim/tiling.hh"

namespace py = pybind11;
using namespace buffsim;

namespace
{

Acceptance acceptance_arg(const std::string& s)
{
  if (auto a = parse_acceptance(s))
    return *a;
  throw std::invalid_argument("unknown acceptance: " + s);
}

BufferMode mode_arg(const std::string& s)
{
  if (auto m = parse_buffer_mode(s))
    return *m;
  throw std::invalid_argument("unknown buffer mode: " + s);
}

QuotientRelation relation_arg(const std::string& s)
{
  if (s == "continuous")
    return QuotientRelation::continuous_fair;
  if (s == "lookahead")
    return QuotientRelation::lookahead_fair;
  throw std::invalid_argument("unknown relation: " + s);
}

PreorderKind preorder_arg(const std::string& s)
{
  if (s == "direct")
    return PreorderKind::direct;
  if (s == "delayed")
    return PreorderKind::delayed;
  throw std::invalid_argument("unknown preorder: " + s);
}

std::vector<std::string> names(const Nba& a, const Word& w)
{
  std::vector<std::string> out;
  for (Letter l : w)
    out.push_back(a.letter_name(l));
  return out;
}

} // namespace

PYBIND11_MODULE(_buffsim, m)
{
  m.doc() = "Buffered simulation games between Büchi automata";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<AlphabetMismatch>(m, "AlphabetMismatch",
                                           PyExc_ValueError);
  py::register_exception<DelayedPruningRefused>(m, "DelayedPruningRefused",
                                                PyExc_ValueError);
  py::register_exception<BudgetExceeded>(m, "BudgetExceeded",
                                         PyExc_RuntimeError);

  py::class_<Nba>(m, "Nba")
    .def(py::init([](std::vector<std::string> states,
                     std::vector<std::string> alphabet,
                     const std::vector<std::tuple<State, Letter, State>>& trans,
                     State initial, std::vector<State> accepting) {
           std::vector<Transition> t;
           for (auto [p, l, q] : trans)
             t.push_back({p, l, q});
           return Nba(std::move(states), std::move(alphabet), std::move(t),
                      initial, std::move(accepting));
         }),
         py::arg("states"), py::arg("alphabet"), py::arg("transitions"),
         py::arg("initial"), py::arg("accepting"))
    .def_property_readonly("states", &Nba::state_names)
    .def_property_readonly("alphabet", &Nba::alphabet)
    .def_property_readonly("initial", &Nba::initial)
    .def_property_readonly("accepting", &Nba::accepting_states)
    .def_property_readonly("num_transitions", &Nba::num_transitions)
    .def_property_readonly("transitions",
                           [](const Nba& a) {
                             std::vector<std::tuple<State, Letter, State>> out;
                             for (const auto& t : a.transitions())
                               out.emplace_back(t.src, t.letter, t.dst);
                             return out;
                           })
    .def("__len__", &Nba::num_states)
    .def("__eq__", &Nba::operator==)
    .def("all_accepting", &Nba::all_accepting)
    .def("to_dot", [](const Nba& a) { return to_dot(a); })
    .def(
      "emit",
      [](const Nba& a, const std::string& format) {
        if (format != "native" && format != "ba")
          throw std::invalid_argument("unknown format: " + format);
        return emit_nba(a, format == "ba" ? NbaFormat::ba : NbaFormat::native);
      },
      py::arg("format") = "native")
    .def("accepts",
         [](const Nba& a, const std::string& stem, const std::string& period) {
           return periodic_membership(
             a, {parse_word(a, stem), parse_word(a, period)});
         });

  m.def(
    "parse_nba",
    [](const std::string& text) {
      return parse_nba(text, detect_format(text));
    },
    py::arg("text"));
  m.def("load_nba", &load_nba, py::arg("path"));
  m.def("fixture", &fixture, py::arg("name"));
  m.def("fixture_names", &fixture_names);

  m.def(
    "plain_simulates",
    [](const Nba& a, const Nba& b, const std::string& acc) {
      return plain_simulates(a, b, acceptance_arg(acc));
    },
    py::arg("a"), py::arg("b"), py::arg("acceptance") = "fair");
  m.def(
    "bounded_simulates",
    [](const Nba& a, const Nba& b, std::size_t k, const std::string& mode,
       const std::string& acc, std::size_t limit) {
      return bounded_simulates(a, b, k, mode_arg(mode), acceptance_arg(acc),
                               limit);
    },
    py::arg("a"), py::arg("b"), py::arg("k"), py::arg("mode") = "lookahead",
    py::arg("acceptance") = "fair", py::arg("limit") = 0);
  m.def(
    "decide",
    [](const Nba& a, const Nba& b, const std::string& relation,
       std::size_t cap) {
      auto r = decide(a, b, relation_arg(relation), cap);
      py::dict d;
      d["outcome"] = std::string(to_string(r.outcome));
      d["monoid_size"] = r.monoid_size;
      d["arena_size"] = r.arena_size;
      d["certificate"] =
        r.outcome == Outcome::inconclusive ? std::string() : certificate(r, a);
      return d;
    },
    py::arg("a"), py::arg("b"), py::arg("relation") = "continuous",
    py::arg("cap") = 200000);
  m.def(
    "language_inclusion",
    [](const Nba& a, const Nba& b, std::size_t cap) {
      auto r = language_inclusion(a, b, cap);
      py::dict d;
      d["verdict"] = r.verdict == InclusionVerdict::included ? "included"
                     : r.verdict == InclusionVerdict::not_included
                       ? "not_included"
                       : "inconclusive";
      d["monoid_size"] = r.monoid_size;
      if (r.counterexample)
        d["counterexample"] = py::make_tuple(names(a, r.counterexample->stem),
                                             names(a, r.counterexample->period));
      else
        d["counterexample"] = py::none();
      return d;
    },
    py::arg("a"), py::arg("b"), py::arg("cap") = 200000);
  m.def(
    "minimize",
    [](const Nba& a, const std::string& kind, std::size_t k, bool prune) {
      return minimize(a, preorder_arg(kind), k, prune);
    },
    py::arg("a"), py::arg("kind") = "direct", py::arg("k") = 1,
    py::arg("prune") = false);
  m.def("trim", &trim, py::arg("a"));

  py::class_<TilingSystem>(m, "TilingSystem")
    .def_readonly("tiles", &TilingSystem::tiles)
    .def("__str__", [](const TilingSystem& ts) { return emit_tiling_system(ts); });
  m.def(
    "parse_tiling_system",
    [](const std::string& text) { return parse_tiling_system(text); },
    py::arg("text"));
  m.def("gen_pspace", &gen_pspace, py::arg("tiling"), py::arg("n"));
  m.def("gen_exptime", &gen_exptime, py::arg("tiling"), py::arg("n"));
  m.def(
    "has_tiling",
    [](const TilingSystem& ts, std::size_t width, std::size_t height) {
      return brute_force_tiling(ts, width, height).has_value();
    },
    py::arg("tiling"), py::arg("width"), py::arg("height"));
  m.def(
    "tiling_game_winner",
    [](const TilingSystem& ts, std::size_t width) {
      return std::string(to_string(brute_force_tiling_game(ts, width)));
    },
    py::arg("tiling"), py::arg("width"));

  m.def(
    "run_cli",
    [](std::vector<std::string> args) {
      args.insert(args.begin(), "buffsim");
      std::vector<const char*> argv;
      for (const auto& s : args)
        argv.push_back(s.c_str());
      std::ostringstream out, err;
      const int code =
        run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
      return py::make_tuple(code, out.str(), err.str());
    },
    py::arg("args"));
}
