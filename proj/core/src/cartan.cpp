#include "grk/cartan.hpp"

#include "grk/errors.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace grk {

namespace {

std::size_t vertex_index(const QuiverAlgebra& q, const std::string& name) {
  auto it = std::find(q.vertices.begin(), q.vertices.end(), name);
  if (it == q.vertices.end()) throw MalformedInput("unknown vertex '" + name + "'");
  return static_cast<std::size_t>(it - q.vertices.begin());
}

std::size_t arrow_index(const QuiverAlgebra& q, const std::string& name) {
  for (std::size_t i = 0; i < q.arrows.size(); ++i)
    if (q.arrows[i].name == name) return i;
  throw MalformedInput("unknown arrow '" + name + "'");
}

using Word = std::vector<std::size_t>;

bool has_suffix(const Word& w, const Word& suffix) {
  return suffix.size() <= w.size() && std::equal(suffix.rbegin(), suffix.rend(), w.rbegin());
}

// Recognizes paths that avoid every relation. A state is a vertex together
// with the longest suffix of the path read so far that is a proper prefix of
// some relation; every reachable state is the end of at least one nonzero path.
class FactorAutomaton {
 public:
  explicit FactorAutomaton(const QuiverAlgebra& q) : q_(q) {
    for (std::size_t a = 0; a < q.arrows.size(); ++a) {
      source_.push_back(vertex_index(q, q.arrows[a].from));
      target_.push_back(vertex_index(q, q.arrows[a].to));
    }
    for (const auto& rel : q.relations) {
      Word w;
      for (const auto& name : rel) w.push_back(arrow_index(q, name));
      relations_.push_back(w);
      for (std::size_t len = 0; len < w.size(); ++len) prefixes_.insert(Word(w.begin(), w.begin() + len));
    }
    prefixes_.insert(Word{});
  }

  struct State {
    std::size_t vertex;
    Word suffix;
    auto operator<=>(const State&) const = default;
  };

  State start(std::size_t vertex) const { return {vertex, {}}; }

  /// Successor after following arrow a, or std::nullopt if the path dies.
  std::optional<State> step(const State& s, std::size_t a) const {
    if (source_[a] != s.vertex) return std::nullopt;
    Word w = s.suffix;
    w.push_back(a);
    for (const auto& r : relations_)
      if (has_suffix(w, r)) return std::nullopt;
    for (std::size_t drop = 0; drop <= w.size(); ++drop) {
      Word tail(w.begin() + static_cast<std::ptrdiff_t>(drop), w.end());
      if (prefixes_.count(tail)) return State{target_[a], std::move(tail)};
    }
    return State{target_[a], {}};
  }

  std::size_t arrow_count() const { return q_.arrows.size(); }

 private:
  const QuiverAlgebra& q_;
  std::vector<std::size_t> source_;
  std::vector<std::size_t> target_;
  std::vector<Word> relations_;
  std::set<Word> prefixes_;
};

// Depth-first search for a reachable cycle; returns its arrows, or an empty word.
Word find_cycle(const FactorAutomaton& fa, std::size_t vertices) {
  using State = FactorAutomaton::State;
  enum Color { kGray, kBlack };
  std::map<State, Color> color;
  struct Frame {
    State state;
    std::size_t next_arrow;
    std::size_t via;  // arrow used to enter this frame
  };

  for (std::size_t v = 0; v < vertices; ++v) {
    State root = fa.start(v);
    if (color.count(root)) continue;
    std::vector<Frame> stack{{root, 0, 0}};
    color[root] = kGray;
    while (!stack.empty()) {
      Frame& top = stack.back();
      if (top.next_arrow == fa.arrow_count()) {
        color[top.state] = kBlack;
        stack.pop_back();
        continue;
      }
      const std::size_t a = top.next_arrow++;
      auto next = fa.step(top.state, a);
      if (!next) continue;
      auto it = color.find(*next);
      if (it == color.end()) {
        color[*next] = kGray;
        stack.push_back({*next, 0, a});
      } else if (it->second == kGray) {
        Word cycle;
        std::size_t i = stack.size();
        while (i-- > 0 && !(stack[i].state == *next)) cycle.push_back(stack[i].via);
        std::reverse(cycle.begin(), cycle.end());
        cycle.push_back(a);
        return cycle;
      }
    }
  }
  return {};
}

}  // namespace

void QuiverAlgebra::validate() const {
  std::set<std::string> names;
  for (const auto& v : vertices) {
    if (v.empty()) throw MalformedInput("vertex with an empty name");
    if (!names.insert(v).second) throw MalformedInput("duplicate vertex '" + v + "'");
  }
  std::set<std::string> arrow_names;
  for (const auto& a : arrows) {
    if (a.name.empty()) throw MalformedInput("arrow with an empty name");
    if (!arrow_names.insert(a.name).second) throw MalformedInput("duplicate arrow '" + a.name + "'");
    vertex_index(*this, a.from);
    vertex_index(*this, a.to);
  }
  for (const auto& rel : relations) {
    if (rel.size() < 2) {
      throw MalformedInput("relation of length " + std::to_string(rel.size()) +
                           " is not admissible (length must be at least 2)");
    }
    for (std::size_t i = 0; i < rel.size(); ++i) {
      const auto& a = arrows[arrow_index(*this, rel[i])];
      if (i + 1 < rel.size()) {
        const auto& b = arrows[arrow_index(*this, rel[i + 1])];
        if (a.to != b.from) {
          throw MalformedInput("relation is not a path: arrow '" + a.name + "' ends at '" + a.to +
                               "' but '" + b.name + "' starts at '" + b.from + "'");
        }
      }
    }
  }
}

std::string describe_path(const QuiverAlgebra& q, const Path& p) {
  if (p.arrows.empty()) return "e_" + q.vertices[p.source];
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += '*';
    out += q.arrows[p.arrows[i]].name;
  }
  return out;
}

std::vector<Path> nonzero_paths(const QuiverAlgebra& q) {
  q.validate();
  const FactorAutomaton fa(q);
  if (Word cycle = find_cycle(fa, q.vertices.size()); !cycle.empty()) {
    std::vector<std::string> names;
    std::string text;
    for (auto a : cycle) {
      names.push_back(q.arrows[a].name);
      text += (text.empty() ? "" : "*") + q.arrows[a].name;
    }
    throw InfiniteDimensional("algebra is infinite-dimensional: the cycle " + text +
                                  " can be repeated without completing a relation",
                              std::move(names));
  }

  std::vector<Path> out;
  struct Item {
    FactorAutomaton::State state;
    Path path;
  };
  for (std::size_t v = 0; v < q.vertices.size(); ++v) {
    std::vector<Item> stack{{fa.start(v), Path{v, v, {}}}};
    std::vector<Path> from_v;
    while (!stack.empty()) {
      Item item = std::move(stack.back());
      stack.pop_back();
      for (std::size_t a = fa.arrow_count(); a-- > 0;) {
        auto next = fa.step(item.state, a);
        if (!next) continue;
        Path p = item.path;
        p.arrows.push_back(a);
        p.target = next->vertex;
        stack.push_back({*next, std::move(p)});
      }
      from_v.push_back(std::move(item.path));
    }
    std::sort(from_v.begin(), from_v.end(), [](const Path& x, const Path& y) {
      return x.arrows.size() != y.arrows.size() ? x.arrows.size() < y.arrows.size() : x.arrows < y.arrows;
    });
    out.insert(out.end(), from_v.begin(), from_v.end());
  }
  return out;
}

IntMatrix cartan_matrix(const QuiverAlgebra& q) {
  const auto paths = nonzero_paths(q);
  IntMatrix c(q.vertices.size(), q.vertices.size());
  for (const auto& p : paths) c(p.source, p.target) += 1;
  return c;
}

CartanReport cartan_report(const IntMatrix& matrix, const EnumerationLimits& limits) {
  if (matrix.rows() != matrix.cols()) throw DimensionMismatch("Cartan matrix must be square");
  CartanReport r{matrix, {}, determinant(matrix), std::nullopt, std::nullopt,
                 FgAbelianGroup(matrix.cols(), matrix)};
  r.invariant_factors = snf(matrix).invariant_factors;
  if (r.determinant == 0) return r;

  Integer product = 1;
  std::size_t nontrivial = 0;
  for (const auto& m : r.invariant_factors) {
    product *= static_cast<unsigned long>(count_divisors(m));
    if (m != 1) ++nontrivial;
  }
  r.divisor_product = product;
  if (nontrivial <= 1) {
    r.count = product;
  } else {
    r.count = static_cast<unsigned long>(enumerate_subgroups(r.cokernel, limits).size());
  }
  return r;
}

CartanReport dense_resolving_count(const QuiverAlgebra& q, const EnumerationLimits& limits) {
  return cartan_report(cartan_matrix(q), limits);
}

}  // namespace grk
