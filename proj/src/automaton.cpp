#include "lcm/automaton.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "lcm/core.hpp"

namespace lcm {

using nlohmann::json;

AutomatonSpec AutomatonSpec::from_json_text(std::string const& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::parse_error const& e) {
    throw ParseError(std::string("automaton JSON: ") + e.what(), e.byte);
  }
  AutomatonSpec spec;
  try {
    spec.alphabet = doc.at("alphabet").get<int>();
    spec.states = doc.at("states").get<std::vector<std::string>>();
  } catch (json::exception const& e) {
    throw Error(std::string("automaton JSON: ") + e.what());
  }
  if (spec.alphabet < 2 || spec.alphabet > 10) {
    throw Error("automaton alphabet size must lie in [2, 10]");
  }
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < spec.states.size(); ++i) {
    if (!index.emplace(spec.states[i], static_cast<int>(i)).second) {
      throw Error("automaton state '" + spec.states[i] + "' listed twice");
    }
  }
  auto const n = spec.states.size();
  spec.output.assign(n, std::vector<int>(spec.alphabet, -1));
  spec.next.assign(n, std::vector<int>(spec.alphabet, -1));
  for (auto const& t : doc.at("transitions")) {
    auto const state = t.at("state").get<std::string>();
    auto const nxt = t.at("next").get<std::string>();
    int const letter = t.at("letter").get<int>();
    int const out = t.at("output").get<int>();
    if (!index.contains(state) || !index.contains(nxt)) {
      throw Error("automaton transition names an unknown state");
    }
    if (letter < 0 || letter >= spec.alphabet || out < 0 || out >= spec.alphabet) {
      throw Error("automaton transition letter outside the alphabet");
    }
    int const s = index[state];
    if (spec.output[s][letter] != -1) {
      throw Error("duplicate transition for state '" + state + "'");
    }
    spec.output[s][letter] = out;
    spec.next[s][letter] = index[nxt];
  }
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<int> seen(spec.alphabet, 0);
    for (int x = 0; x < spec.alphabet; ++x) {
      if (spec.output[s][x] == -1) {
        throw Error("state '" + spec.states[s] + "' is missing a transition");
      }
      if (seen[spec.output[s][x]]++) {
        throw Error("state '" + spec.states[s] + "' does not permute the alphabet");
      }
    }
  }
  if (auto it = index.find("e"); it != index.end()) {
    spec.identity_state = it->second;
    for (int x = 0; x < spec.alphabet; ++x) {
      if (spec.output[it->second][x] != x || spec.next[it->second][x] != it->second) {
        throw Error("state 'e' must act as the identity");
      }
    }
  }
  return spec;
}

AutomatonSpec AutomatonSpec::from_file(std::string const& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open automaton file '" + path + "'");
  }
  std::stringstream buf;
  buf << in.rdbuf();
  return from_json_text(buf.str());
}

AutomatonBackend::AutomatonBackend(AutomatonSpec spec,
                                   std::size_t compare_depth,
                                   std::size_t group_bound,
                                   std::size_t search_radius)
    : _spec(std::make_shared<AutomatonSpec const>(std::move(spec))),
      _depth(compare_depth),
      _bound(group_bound),
      _radius(search_radius),
      _probe(words_of_length(_spec->alphabet, compare_depth)) {
  _identity = make({});
  _search = std::make_shared<std::vector<AutomatonElement> const>(ball(_radius));
  _group = std::make_shared<std::vector<AutomatonElement> const>(ball(_bound));
}

std::pair<int, int> AutomatonBackend::step(int generator, int letter) const {
  int const s = std::abs(generator) - 1;
  if (generator > 0) {
    return {_spec->output[s][letter], _spec->next[s][letter] + 1};
  }
  // inverse state: find x with output[s][x] == letter
  for (int x = 0; x < _spec->alphabet; ++x) {
    if (_spec->output[s][x] == letter) {
      return {x, -(_spec->next[s][x] + 1)};
    }
  }
  return {letter, generator};  // unreachable for a valid spec
}

namespace {

void reduce_into(std::vector<int>& out, int g, int identity_state) {
  if (std::abs(g) - 1 == identity_state) {
    return;
  }
  if (!out.empty() && out.back() == -g) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

}  // namespace

AutomatonElement AutomatonBackend::make(std::vector<int> generators) const {
  std::vector<int> reduced;
  for (int g : generators) {
    reduce_into(reduced, g, _spec->identity_state);
  }
  AutomatonElement el{std::move(reduced), {}};
  el.signature.reserve(_probe.size());
  // index of the image word, read as a base-k number
  for (auto const& w : _probe) {
    std::string cur = w.letters;
    for (std::size_t gi = el.generators.size(); gi-- > 0;) {
      int state = el.generators[gi];
      for (auto& c : cur) {
        auto [out, nxt] = step(state, c - '0');
        c = static_cast<char>('0' + out);
        state = nxt;
        if (std::abs(state) - 1 == _spec->identity_state) {
          break;
        }
      }
    }
    std::uint32_t idx = 0;
    for (char c : cur) {
      idx = idx * static_cast<std::uint32_t>(_spec->alphabet)
            + static_cast<std::uint32_t>(c - '0');
    }
    el.signature.push_back(idx);
  }
  return el;
}

AutomatonElement AutomatonBackend::group_mul(AutomatonElement const& g,
                                             AutomatonElement const& h) const {
  std::vector<int> w = g.generators;
  w.insert(w.end(), h.generators.begin(), h.generators.end());
  return make(std::move(w));
}

AutomatonElement AutomatonBackend::group_inv(AutomatonElement const& g) const {
  std::vector<int> w(g.generators.rbegin(), g.generators.rend());
  for (auto& x : w) {
    x = -x;
  }
  return make(std::move(w));
}

std::pair<Word, AutomatonElement> AutomatonBackend::act_restrict(
    AutomatonElement const& g,
    Word const& w) const {
  // (g1...gk).w = g1.(...(gk.w)), (g1...gk)|_w = g1|_{...} ... gk|_w
  std::string cur = w.letters;
  std::vector<int> restriction(g.generators.size());
  for (std::size_t gi = g.generators.size(); gi-- > 0;) {
    int state = g.generators[gi];
    for (auto& c : cur) {
      auto [out, nxt] = step(state, c - '0');
      c = static_cast<char>('0' + out);
      state = nxt;
    }
    restriction[gi] = state;
  }
  return {Word(std::move(cur)), make(std::move(restriction))};
}

std::vector<AutomatonElement> AutomatonBackend::ball(std::size_t radius) const {
  std::vector<AutomatonElement> out{_identity};
  std::unordered_set<AutomatonElement> seen{_identity};
  std::vector<AutomatonElement> frontier{_identity};
  int const nstates = static_cast<int>(_spec->states.size());
  for (std::size_t r = 0; r < radius && !frontier.empty(); ++r) {
    std::vector<AutomatonElement> next;
    for (auto const& el : frontier) {
      for (int s = 1; s <= nstates; ++s) {
        if (s - 1 == _spec->identity_state) {
          continue;
        }
        for (int g : {s, -s}) {
          auto w = el.generators;
          w.push_back(g);
          auto cand = make(std::move(w));
          if (seen.insert(cand).second) {
            out.push_back(cand);
            next.push_back(std::move(cand));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return out;
}

std::optional<AutomatonElement> AutomatonBackend::transport(
    Word const& alpha,
    Word const& delta,
    AutomatonElement const& k) const {
  if (alpha.size() != delta.size()) {
    return std::nullopt;
  }
  for (auto const& j : *_search) {
    auto [image, restriction] = act_restrict(j, alpha);
    if (image == delta && restriction == k) {
      return j;
    }
  }
  return std::nullopt;
}

std::vector<AutomatonElement> AutomatonBackend::enumerate_group() const {
  return *_group;
}

std::string AutomatonBackend::group_to_string(AutomatonElement const& g) const {
  if (g.generators.empty()) {
    return "e";
  }
  std::string s;
  for (std::size_t i = 0; i < g.generators.size(); ++i) {
    if (i > 0) {
      s += '.';
    }
    int const x = g.generators[i];
    s += _spec->states[std::abs(x) - 1];
    if (x < 0) {
      s += "^-1";
    }
  }
  return s;
}

AutomatonElement AutomatonBackend::parse_group(std::string const& s) const {
  if (s.empty() || s == "e") {
    return _identity;
  }
  std::vector<int> gens;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    auto dot = s.find('.', pos);
    std::string tok = s.substr(pos, dot == std::string::npos ? std::string::npos
                                                             : dot - pos);
    bool inverse = false;
    if (tok.size() > 3 && tok.ends_with("^-1")) {
      inverse = true;
      tok.resize(tok.size() - 3);
    }
    auto it = std::find(_spec->states.begin(), _spec->states.end(), tok);
    if (it == _spec->states.end()) {
      throw ParseError("unknown automaton state '" + tok + "'", pos);
    }
    int const g = static_cast<int>(it - _spec->states.begin()) + 1;
    gens.push_back(inverse ? -g : g);
    if (dot == std::string::npos) {
      break;
    }
    pos = dot + 1;
  }
  return make(std::move(gens));
}

}  // namespace lcm
