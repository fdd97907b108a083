#include "buffsim/nba.hh"

#include <algorithm>
#include <deque>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

#include "buffsim/errors.hh"

namespace buffsim
{

namespace
{

bool has_space(const std::string& s)
{
  return std::any_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isspace(c); });
}

void check_names(const std::vector<std::string>& names, const char* what)
{
  std::set<std::string_view> seen;
  for (const auto& n : names)
    {
      if (n.empty())
        throw InvalidAutomaton(std::string("empty ") + what + " name");
      if (has_space(n))
        throw InvalidAutomaton(std::string(what) + " name '" + n
                               + "' contains whitespace");
      if (!seen.insert(n).second)
        throw InvalidAutomaton(std::string("duplicate ") + what + " '" + n
                               + "'");
    }
}

std::string_view trim(std::string_view s)
{
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_ws(std::string_view s)
{
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok)
    out.push_back(tok);
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (start <= text.size())
    {
      auto end = text.find('\n', start);
      if (end == std::string_view::npos)
        end = text.size();
      auto line = text.substr(start, end - start);
      if (!line.empty() && line.back() == '\r')
        line.remove_suffix(1);
      out.push_back(line);
      start = end + 1;
    }
  return out;
}

// Order-preserving name interner used by the ba reader.
struct Interner
{
  std::vector<std::string> names;
  std::unordered_map<std::string, std::uint32_t> index;

  std::uint32_t get(const std::string& n)
  {
    auto [it, fresh] = index.emplace(n, names.size());
    if (fresh)
      names.push_back(n);
    return it->second;
  }
};

Nba parse_native(std::string_view text)
{
  std::vector<std::string> states, alphabet;
  std::unordered_map<std::string, State> sidx;
  std::unordered_map<std::string, Letter> lidx;
  std::optional<State> initial;
  std::vector<State> accepting;
  std::vector<Transition> trans;

  auto state_of = [&](const std::string& n, std::size_t ln) {
    auto it = sidx.find(n);
    if (it == sidx.end())
      throw ParseError(ln, "undeclared state '" + n + "'");
    return it->second;
  };

  std::size_t ln = 0;
  for (auto raw : lines_of(text))
    {
      ++ln;
      auto line = trim(raw);
      if (line.empty() || line.front() == '#')
        continue;
      auto colon = line.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(ln, "expected 'key: values'");
      std::string key(trim(line.substr(0, colon)));
      auto vals = split_ws(line.substr(colon + 1));
      if (key == "states")
        for (auto& s : vals)
          {
            if (sidx.count(s))
              throw ParseError(ln, "duplicate state '" + s + "'");
            sidx.emplace(s, states.size());
            states.push_back(s);
          }
      else if (key == "alphabet")
        for (auto& a : vals)
          {
            if (lidx.count(a))
              throw ParseError(ln, "duplicate letter '" + a + "'");
            lidx.emplace(a, alphabet.size());
            alphabet.push_back(a);
          }
      else if (key == "initial")
        {
          if (vals.size() != 1 || initial)
            throw ParseError(ln, "exactly one initial state is required");
          initial = state_of(vals[0], ln);
        }
      else if (key == "accepting")
        for (auto& s : vals)
          accepting.push_back(state_of(s, ln));
      else if (key == "trans")
        {
          if (vals.size() != 3)
            throw ParseError(ln, "expected 'trans: src letter dst'");
          auto l = lidx.find(vals[1]);
          if (l == lidx.end())
            throw ParseError(ln, "undeclared letter '" + vals[1] + "'");
          trans.push_back({state_of(vals[0], ln), l->second,
                           state_of(vals[2], ln)});
        }
      else
        throw ParseError(ln, "unknown key '" + key + "'");
    }
  if (states.empty())
    throw ParseError(0, "empty automaton: no states declared");
  if (!initial)
    throw ParseError(0, "missing 'initial:' line");
  return Nba(std::move(states), std::move(alphabet), std::move(trans),
             *initial, std::move(accepting));
}

std::optional<std::string> bracketed(std::string_view s)
{
  if (s.size() >= 2 && s.front() == '[' && s.back() == ']')
    return std::string(s.substr(1, s.size() - 2));
  return std::nullopt;
}

Nba parse_ba(std::string_view text)
{
  Interner st, lt;
  std::optional<State> initial;
  std::vector<State> accepting;
  std::vector<Transition> trans;
  bool seen_transition = false;

  std::size_t ln = 0;
  for (auto raw : lines_of(text))
    {
      ++ln;
      auto line = trim(raw);
      if (line.empty())
        continue;
      auto arrow = line.rfind("]->[");
      if (arrow != std::string_view::npos)
        {
          if (line.back() != ']')
            throw ParseError(ln, "expected 'letter,[src]->[dst]'");
          auto comma = line.rfind(",[", arrow);
          if (comma == std::string_view::npos || comma == 0)
            throw ParseError(ln, "expected 'letter,[src]->[dst]'");
          std::string letter(line.substr(0, comma));
          std::string src(line.substr(comma + 2, arrow - comma - 2));
          std::string dst(line.substr(arrow + 4, line.size() - arrow - 5));
          if (src.empty() || dst.empty())
            throw ParseError(ln, "empty state name");
          Letter l = lt.get(letter);
          State s = st.get(src);
          State d = st.get(dst);
          trans.push_back({s, l, d});
          if (!initial && !seen_transition)
            initial = s;
          seen_transition = true;
          continue;
        }
      auto id = bracketed(line);
      if (!id || id->empty())
        throw ParseError(ln, "expected '[state]' or 'letter,[src]->[dst]'");
      if (!seen_transition)
        {
          if (initial)
            throw ParseError(ln, "multiple initial states are not supported");
          initial = st.get(*id);
        }
      else
        accepting.push_back(st.get(*id));
    }
  if (st.names.empty())
    throw ParseError(0, "empty automaton");
  return Nba(std::move(st.names), std::move(lt.names), std::move(trans),
             *initial, std::move(accepting));
}

} // namespace

Nba::Nba(std::vector<std::string> states, std::vector<std::string> alphabet,
         std::vector<Transition> transitions, State initial,
         std::vector<State> accepting)
  : states_(std::move(states)),
    alphabet_(std::move(alphabet)),
    trans_(std::move(transitions)),
    initial_(initial)
{
  if (states_.empty())
    throw InvalidAutomaton("automaton has no states");
  check_names(states_, "state");
  check_names(alphabet_, "letter");
  const auto n = states_.size();
  const auto l = alphabet_.size();
  if (initial_ >= n)
    throw InvalidAutomaton("initial state out of range");
  accepting_.assign(n, false);
  for (State q : accepting)
    {
      if (q >= n)
        throw InvalidAutomaton("accepting state out of range");
      accepting_[q] = true;
    }
  for (const auto& t : trans_)
    if (t.src >= n || t.dst >= n || t.letter >= l)
      throw InvalidAutomaton("transition refers to an unknown state or letter");
  std::sort(trans_.begin(), trans_.end());
  trans_.erase(std::unique(trans_.begin(), trans_.end()), trans_.end());

  offset_.assign(n * l + 1, 0);
  for (const auto& t : trans_)
    ++offset_[t.src * l + t.letter + 1];
  for (std::size_t i = 1; i < offset_.size(); ++i)
    offset_[i] += offset_[i - 1];
  succ_.reserve(trans_.size());
  for (const auto& t : trans_) // sorted, so the buckets fill in order
    succ_.push_back(t.dst);
}

std::optional<State> Nba::find_state(std::string_view name) const
{
  for (State q = 0; q < states_.size(); ++q)
    if (states_[q] == name)
      return q;
  return std::nullopt;
}

std::optional<Letter> Nba::find_letter(std::string_view name) const
{
  for (Letter a = 0; a < alphabet_.size(); ++a)
    if (alphabet_[a] == name)
      return a;
  return std::nullopt;
}

std::vector<State> Nba::accepting_states() const
{
  std::vector<State> out;
  for (State q = 0; q < accepting_.size(); ++q)
    if (accepting_[q])
      out.push_back(q);
  return out;
}

std::span<const State> Nba::successors(State q, Letter a) const
{
  const auto i = static_cast<std::size_t>(q) * alphabet_.size() + a;
  return std::span<const State>(succ_).subspan(offset_[i],
                                               offset_[i + 1] - offset_[i]);
}

bool Nba::has_successor(State q) const
{
  const auto l = alphabet_.size();
  return offset_[q * l] != offset_[(q + 1) * l];
}

Nba Nba::with_initial(State q) const
{
  return Nba(states_, alphabet_, trans_, q, accepting_states());
}

Nba Nba::all_accepting() const
{
  std::vector<State> all(states_.size());
  for (State q = 0; q < all.size(); ++q)
    all[q] = q;
  return Nba(states_, alphabet_, trans_, initial_, std::move(all));
}

bool Nba::operator==(const Nba& other) const
{
  return states_ == other.states_ && alphabet_ == other.alphabet_
         && trans_ == other.trans_ && initial_ == other.initial_
         && accepting_ == other.accepting_;
}

NbaFormat detect_format(std::string_view text)
{
  for (auto raw : lines_of(text))
    {
      auto line = trim(raw);
      if (line.empty() || line.front() == '#')
        continue;
      if (line.front() == '[' || line.find("]->[") != std::string_view::npos)
        return NbaFormat::ba;
      return NbaFormat::native;
    }
  return NbaFormat::native;
}

Nba parse_nba(std::string_view text, NbaFormat format)
{
  return format == NbaFormat::ba ? parse_ba(text) : parse_native(text);
}

Nba load_nba(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::runtime_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  auto text = ss.str();
  try
    {
      return parse_nba(text, detect_format(text));
    }
  catch (const ParseError& e)
    {
      throw ParseError(e.line(), path + ": " + e.what());
    }
}

std::string emit_nba(const Nba& a, NbaFormat format)
{
  std::ostringstream out;
  if (format == NbaFormat::native)
    {
      out << "states:";
      for (const auto& s : a.state_names())
        out << ' ' << s;
      out << "\nalphabet:";
      for (const auto& l : a.alphabet())
        out << ' ' << l;
      out << "\ninitial: " << a.state_name(a.initial()) << "\naccepting:";
      for (State q : a.accepting_states())
        out << ' ' << a.state_name(q);
      out << '\n';
      for (const auto& t : a.transitions())
        out << "trans: " << a.state_name(t.src) << ' '
            << a.letter_name(t.letter) << ' ' << a.state_name(t.dst) << '\n';
    }
  else
    {
      out << '[' << a.state_name(a.initial()) << "]\n";
      for (const auto& t : a.transitions())
        out << a.letter_name(t.letter) << ",[" << a.state_name(t.src)
            << "]->[" << a.state_name(t.dst) << "]\n";
      for (State q : a.accepting_states())
        out << '[' << a.state_name(q) << "]\n";
    }
  return out.str();
}

namespace
{
std::string dot_quote(const std::string& s)
{
  std::string out = "\"";
  for (char c : s)
    {
      if (c == '"' || c == '\\')
        out += '\\';
      out += c;
    }
  return out + '"';
}
} // namespace

std::string to_dot(const Nba& a)
{
  std::ostringstream out;
  out << "digraph nba {\n  rankdir=LR;\n  node [shape=circle];\n"
      << "  __init [shape=point];\n";
  for (State q = 0; q < a.num_states(); ++q)
    out << "  " << dot_quote(a.state_name(q))
        << (a.is_accepting(q) ? " [shape=doublecircle]" : "") << ";\n";
  out << "  __init -> " << dot_quote(a.state_name(a.initial())) << ";\n";
  for (const auto& t : a.transitions())
    out << "  " << dot_quote(a.state_name(t.src)) << " -> "
        << dot_quote(a.state_name(t.dst))
        << " [label=" << dot_quote(a.letter_name(t.letter)) << "];\n";
  out << "}\n";
  return out.str();
}

std::vector<State> dead_ends(const Nba& a)
{
  std::vector<State> out;
  for (State q = 0; q < a.num_states(); ++q)
    if (!a.has_successor(q))
      out.push_back(q);
  return out;
}

Profile word_profile(const Nba& a, std::span<const Letter> w)
{
  for (Letter l : w)
    if (l >= a.num_letters())
      throw UnknownLetter("letter index out of range");
  const auto n = a.num_states();
  Profile out(n);
  std::vector<char> any(n), acc(n), nany(n), nacc(n);
  for (State q = 0; q < n; ++q)
    {
      std::fill(any.begin(), any.end(), 0);
      std::fill(acc.begin(), acc.end(), 0);
      any[q] = 1;
      for (Letter l : w)
        {
          std::fill(nany.begin(), nany.end(), 0);
          std::fill(nacc.begin(), nacc.end(), 0);
          for (State s = 0; s < n; ++s)
            {
              if (!any[s])
                continue;
              for (State t : a.successors(s, l))
                {
                  nany[t] = 1;
                  if (acc[s] || a.is_accepting(t))
                    nacc[t] = 1;
                }
            }
          any.swap(nany);
          acc.swap(nacc);
        }
      for (State t = 0; t < n; ++t)
        out.set(q, t, acc[t] ? 0 : any[t] ? 2 : 1);
    }
  return out;
}

bool is_path(const Nba& a, const RunPath& run)
{
  if (run.states.size() != run.word.size() + 1)
    return false;
  for (State q : run.states)
    if (q >= a.num_states())
      return false;
  for (std::size_t i = 0; i < run.word.size(); ++i)
    {
      if (run.word[i] >= a.num_letters())
        return false;
      auto succ = a.successors(run.states[i], run.word[i]);
      if (!std::binary_search(succ.begin(), succ.end(), run.states[i + 1]))
        return false;
    }
  return true;
}

namespace
{

// Product of `a` with the lasso automaton of (u, v); nodes are
// state * L + position.
struct LassoProduct
{
  const Nba& a;
  const UltimatelyPeriodicWord& w;
  std::size_t len;

  LassoProduct(const Nba& aut, const UltimatelyPeriodicWord& word)
    : a(aut), w(word), len(word.stem.size() + word.period.size())
  {
    if (w.period.empty())
      throw std::invalid_argument("period of an ultimately periodic word "
                                  "must be non-empty");
    for (Letter l : w.stem)
      if (l >= a.num_letters())
        throw UnknownLetter("letter index out of range");
    for (Letter l : w.period)
      if (l >= a.num_letters())
        throw UnknownLetter("letter index out of range");
  }

  std::size_t size() const { return a.num_states() * len; }
  std::size_t node(State q, std::size_t pos) const { return q * len + pos; }
  State state(std::size_t node) const
  {
    return static_cast<State>(node / len);
  }
  std::size_t pos(std::size_t node) const { return node % len; }
  Letter letter_at(std::size_t p) const
  {
    return p < w.stem.size() ? w.stem[p] : w.period[p - w.stem.size()];
  }
  std::size_t next_pos(std::size_t p) const
  {
    return p + 1 < len ? p + 1 : w.stem.size();
  }

  template <class F>
  void for_succ(std::size_t v, F&& f) const
  {
    const auto p = pos(v);
    const auto np = next_pos(p);
    for (State t : a.successors(state(v), letter_at(p)))
      f(node(t, np));
  }

  // BFS from `from` (taking at least one step when `strict`), recording
  // parents; returns true when `to` is reached.
  bool bfs(std::size_t from, std::size_t to, bool strict,
           std::vector<std::size_t>& parent) const
  {
    constexpr auto none = static_cast<std::size_t>(-1);
    parent.assign(size(), none);
    std::deque<std::size_t> queue;
    if (!strict)
      {
        parent[from] = from;
        if (from == to)
          return true;
        queue.push_back(from);
      }
    else
      for_succ(from, [&](std::size_t s) {
        if (parent[s] == none)
          {
            parent[s] = from;
            queue.push_back(s);
          }
      });
    while (!queue.empty())
      {
        auto v = queue.front();
        queue.pop_front();
        if (v == to)
          return true;
        for_succ(v, [&](std::size_t s) {
          if (parent[s] == none)
            {
              parent[s] = v;
              queue.push_back(s);
            }
        });
      }
    return false;
  }
};

} // namespace

std::optional<LassoRun> accepting_lasso(const Nba& a,
                                        const UltimatelyPeriodicWord& w)
{
  LassoProduct prod(a, w);
  constexpr auto none = static_cast<std::size_t>(-1);
  const auto start = prod.node(a.initial(), 0);
  std::vector<std::size_t> reach_parent;
  prod.bfs(start, none, false, reach_parent);

  std::vector<std::size_t> order; // BFS order for determinism
  {
    std::deque<std::size_t> q{start};
    std::vector<char> seen(prod.size(), 0);
    seen[start] = 1;
    while (!q.empty())
      {
        auto v = q.front();
        q.pop_front();
        order.push_back(v);
        prod.for_succ(v, [&](std::size_t s) {
          if (!seen[s])
            {
              seen[s] = 1;
              q.push_back(s);
            }
        });
      }
  }

  std::vector<std::size_t> loop_parent;
  for (auto f : order)
    {
      if (!a.is_accepting(prod.state(f)))
        continue;
      if (!prod.bfs(f, f, true, loop_parent))
        continue;
      LassoRun run;
      // stem: start .. f
      std::vector<std::size_t> nodes;
      for (auto v = f;; v = reach_parent[v])
        {
          nodes.push_back(v);
          if (v == start)
            break;
        }
      std::reverse(nodes.begin(), nodes.end());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        {
          run.stem.states.push_back(prod.state(nodes[i]));
          if (i + 1 < nodes.size())
            run.stem.word.push_back(prod.letter_at(prod.pos(nodes[i])));
        }
      // cycle: f .. f
      nodes.clear();
      nodes.push_back(f);
      for (auto v = loop_parent[f]; v != f; v = loop_parent[v])
        nodes.push_back(v);
      nodes.push_back(f);
      std::reverse(nodes.begin(), nodes.end());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        {
          run.cycle.states.push_back(prod.state(nodes[i]));
          if (i + 1 < nodes.size())
            run.cycle.word.push_back(prod.letter_at(prod.pos(nodes[i])));
        }
      return run;
    }
  return std::nullopt;
}

bool periodic_membership(const Nba& a, const UltimatelyPeriodicWord& w)
{
  return accepting_lasso(a, w).has_value();
}

RunPath unroll(const LassoRun& lasso, std::size_t length)
{
  RunPath out;
  out.states.push_back(lasso.stem.states.front());
  auto push = [&](const RunPath& p) {
    for (std::size_t i = 0; i < p.word.size() && out.word.size() < length;
         ++i)
      {
        out.word.push_back(p.word[i]);
        out.states.push_back(p.states[i + 1]);
      }
  };
  push(lasso.stem);
  if (lasso.cycle.word.empty())
    return out;
  while (out.word.size() < length)
    push(lasso.cycle);
  return out;
}

bool same_alphabet(const Nba& a, const Nba& b)
{
  auto x = a.alphabet(), y = b.alphabet();
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

Nba align_alphabet(const Nba& a, const Nba& b)
{
  if (!same_alphabet(a, b))
    throw AlphabetMismatch("automata have different alphabets");
  std::vector<Letter> map(b.num_letters());
  for (Letter l = 0; l < b.num_letters(); ++l)
    map[l] = *a.find_letter(b.letter_name(l));
  std::vector<Transition> trans;
  for (const auto& t : b.transitions())
    trans.push_back({t.src, map[t.letter], t.dst});
  return Nba(b.state_names(), a.alphabet(), std::move(trans), b.initial(),
             b.accepting_states());
}

Nba disjoint_union(const Nba& a, const Nba& b)
{
  const Nba bb = align_alphabet(a, b);
  const auto off = static_cast<State>(a.num_states());
  std::vector<std::string> names;
  for (const auto& s : a.state_names())
    names.push_back("A:" + s);
  for (const auto& s : bb.state_names())
    names.push_back("B:" + s);
  std::vector<Transition> trans(a.transitions().begin(),
                                a.transitions().end());
  for (const auto& t : bb.transitions())
    trans.push_back({t.src + off, t.letter, t.dst + off});
  auto acc = a.accepting_states();
  for (State q : bb.accepting_states())
    acc.push_back(q + off);
  return Nba(std::move(names), a.alphabet(), std::move(trans), a.initial(),
             std::move(acc));
}

Word parse_word(const Nba& a, std::string_view text)
{
  Word w;
  auto t = trim(text);
  if (t.empty() || t == "eps")
    return w;
  std::string s(t);
  std::replace(s.begin(), s.end(), '.', ' ');
  auto toks = split_ws(s);
  for (const auto& tok : toks)
    {
      if (auto l = a.find_letter(tok))
        {
          w.push_back(*l);
          continue;
        }
      // "abba" over single-character letters
      for (char c : tok)
        {
          auto l = a.find_letter(std::string(1, c));
          if (!l)
            throw UnknownLetter("unknown letter in word '" + tok + "'");
          w.push_back(*l);
        }
    }
  return w;
}

std::string format_word(const Nba& a, std::span<const Letter> w)
{
  if (w.empty())
    return "eps";
  bool single = std::all_of(w.begin(), w.end(), [&](Letter l) {
    return a.letter_name(l).size() == 1 && a.letter_name(l) != ".";
  });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i)
    {
      if (i && !single)
        out += '.';
      out += a.letter_name(w[i]);
    }
  return out;
}

namespace
{

// Builder for hand-written automata: "src letter dst" triples.
Nba make(std::vector<std::string> states, std::vector<std::string> alphabet,
         const std::vector<std::array<std::string_view, 3>>& edges,
         std::vector<std::string_view> accepting)
{
  auto idx = [&](const std::vector<std::string>& v, std::string_view n) {
    return static_cast<std::uint32_t>(
      std::find(v.begin(), v.end(), n) - v.begin());
  };
  std::vector<Transition> trans;
  for (const auto& e : edges)
    if (e[1] == "*")
      for (Letter l = 0; l < alphabet.size(); ++l)
        trans.push_back({idx(states, e[0]), l, idx(states, e[2])});
    else
      trans.push_back(
        {idx(states, e[0]), idx(alphabet, e[1]), idx(states, e[2])});
  std::vector<State> acc;
  for (auto s : accepting)
    acc.push_back(idx(states, s));
  return Nba(std::move(states), std::move(alphabet), std::move(trans), 0,
             std::move(acc));
}

} // namespace

std::pair<Nba, Nba> fixture(std::string_view name)
{
  if (name == "branching")
    return {make({"a0", "a1", "a2", "a3"}, {"a", "b", "c"},
                 {{"a0", "a", "a1"},
                  {"a1", "a", "a1"},
                  {"a1", "b", "a2"},
                  {"a1", "c", "a3"},
                  {"a2", "*", "a2"},
                  {"a3", "*", "a3"}},
                 {"a2", "a3"}),
            make({"b0", "b1", "b2", "b3", "b4"}, {"a", "b", "c"},
                 {{"b0", "a", "b1"},
                  {"b0", "a", "b3"},
                  {"b1", "a", "b1"},
                  {"b1", "b", "b2"},
                  {"b2", "*", "b2"},
                  {"b3", "a", "b3"},
                  {"b3", "c", "b4"},
                  {"b4", "*", "b4"}},
                 {"b2", "b4"})};
  if (name == "lookahead-gap")
    return {make({"a0", "a1"}, {"a", "b", "c"},
                 {{"a0", "a", "a1"}, {"a1", "b", "a1"}, {"a1", "c", "a1"}},
                 {"a1"}),
            make({"b0", "b1", "b2"}, {"a", "b", "c"},
                 {{"b0", "a", "b1"},
                  {"b0", "a", "b2"},
                  {"b1", "b", "b1"},
                  {"b1", "b", "b2"},
                  {"b2", "c", "b2"},
                  {"b2", "c", "b1"}},
                 {"b1", "b2"})};
  if (name == "inclusion-gap")
    return {make({"a0", "a1"}, {"a", "b"},
                 {{"a0", "a", "a0"}, {"a0", "b", "a1"}, {"a1", "b", "a1"}},
                 {"a0", "a1"}),
            make({"b0", "b1", "b2"}, {"a", "b"},
                 {{"b0", "a", "b0"},
                  {"b0", "a", "b1"},
                  {"b0", "b", "b2"},
                  {"b1", "a", "b1"},
                  {"b2", "b", "b2"}},
                 {"b1", "b2"})};
  throw std::invalid_argument("unknown fixture '" + std::string(name) + "'");
}

std::vector<std::string> fixture_names()
{
  return {"branching", "lookahead-gap", "inclusion-gap"};
}

} // namespace buffsim
