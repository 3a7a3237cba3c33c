#include "caystab/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "caystab/autgroup.hpp"
#include "caystab/errors.hpp"

namespace caystab {

ConnectionSet::ConnectionSet(const FiniteGroup& group, std::vector<int> members)
    : group_(&group) {
  std::map<int, std::set<int>> colored;
  for (int s : members) colored[s] = {0};
  if (colored.size() != members.size())
    throw InvalidParameterError("duplicate connection-set member");
  *this = ConnectionSet(group, std::move(colored));
}

ConnectionSet::ConnectionSet(const FiniteGroup& group,
                             std::map<int, std::set<int>> colored_members)
    : group_(&group), colors_(std::move(colored_members)) {
  for (const auto& [s, colors] : colors_) {
    if (s < 0 || s >= group.order())
      throw InvalidParameterError("connection-set member outside group");
    if (colors.empty())
      throw InvalidParameterError("connection-set member with empty color set");
    for (int c : colors)
      if (c < 0) throw InvalidParameterError("negative connection-set color");
    int t = group.inv(s);
    auto it = colors_.find(t);
    if (it == colors_.end())
      throw InvalidParameterError(
          "connection set is not symmetric: inverse of a member is missing");
    if (it->second != colors)
      throw InvalidParameterError(
          "connection set colors must agree on inverse pairs");
  }
  members_.reserve(colors_.size());
  for (const auto& [s, colors] : colors_) members_.push_back(s);
}

bool ConnectionSet::contains(int s) const { return colors_.count(s) > 0; }

const std::set<int>& ConnectionSet::colors_of(int s) const {
  auto it = colors_.find(s);
  if (it == colors_.end())
    throw InvalidParameterError("element is not a connection-set member");
  return it->second;
}

bool ConnectionSet::includes_identity() const {
  return contains(group_->identity());
}

ColoredGraph cayley_graph(const ConnectionSet& s) {
  const FiniteGroup& group = s.group();
  const int n = group.order();

  // distinct color sets, in lexicographic order, become the integer colors
  std::map<std::set<int>, int> label_ids;
  for (int member : s.members()) label_ids[s.colors_of(member)] = 0;
  int next_id = 0;
  for (auto& [label, id] : label_ids) id = next_id++;

  std::map<std::pair<int, int>, int> edge_colors;
  for (int h = 0; h < n; ++h) {
    for (int member : s.members()) {
      int g = group.mul(member, h);
      auto key = std::minmax(g, h);
      edge_colors[{key.first, key.second}] = label_ids[s.colors_of(member)];
    }
  }

  std::vector<ColoredEdge> edges;
  edges.reserve(edge_colors.size());
  for (const auto& [pair, color] : edge_colors)
    edges.push_back({pair.first, pair.second, color});
  return ColoredGraph(n, std::move(edges));
}

ConnectionSet scaled_set(const ConnectionSet& s, long long k) {
  const FiniteGroup& group = s.group();
  std::map<int, std::set<int>> scaled;
  for (int member : s.members()) {
    int image = group.power(member, k);
    const auto& colors = s.colors_of(member);
    scaled[image].insert(colors.begin(), colors.end());
  }
  return ConnectionSet(group, std::move(scaled));
}

ScalingHypothesis scaling_hypothesis(const ConnectionSet& s, long long k) {
  const FiniteGroup& group = s.group();
  ScalingHypothesis result;
  long long reduced = k % group.order();
  if (reduced < 0) reduced += group.order();
  result.gcd_coprime = std::gcd(reduced, static_cast<long long>(group.order())) == 1;

  // collect color classes; the power map must be injective on each class
  std::set<int> all_colors;
  for (int member : s.members()) {
    const auto& colors = s.colors_of(member);
    all_colors.insert(colors.begin(), colors.end());
  }
  result.holds = true;
  for (int color : all_colors) {
    std::set<int> images;
    for (int member : s.members()) {
      if (!s.colors_of(member).count(color)) continue;
      if (!images.insert(group.power(member, k)).second) {
        result.holds = false;
        return result;
      }
    }
  }
  return result;
}

ScalingLemmaReport verify_scaling_lemma(const ConnectionSet& s, long long k) {
  const FiniteGroup& group = s.group();
  if (!group.is_abelian())
    throw PreconditionError("scaling lemma check requires an abelian group");
  if (!scaling_hypothesis(s, k).holds)
    throw PreconditionError(
        "scaling hypothesis fails: power map collides inside a color class");

  ScalingLemmaReport report;
  report.k = k;
  ColoredGraph original = cayley_graph(s);
  ColoredGraph scaled = cayley_graph(scaled_set(s, k));
  PermGroup aut = automorphism_group(original);
  report.generator_count = static_cast<int>(aut.generators().size());
  for (int i = 0; i < report.generator_count; ++i)
    if (!is_automorphism(scaled, aut.generators()[i]))
      report.failed_generators.push_back(i);
  report.all_pass = report.failed_generators.empty();
  return report;
}

BigInt walk_count(const ColoredGraph& g, int v, int w, int length) {
  const int n = g.vertex_count();
  if (v < 0 || v >= n || w < 0 || w >= n)
    throw InvalidParameterError("vertex outside range");
  if (length < 1) throw InvalidParameterError("walk length must be >= 1");
  std::vector<BigInt> counts(n, 0), next(n, 0);
  counts[v] = 1;
  for (int step = 0; step < length; ++step) {
    std::fill(next.begin(), next.end(), 0);
    for (int u = 0; u < n; ++u) {
      if (counts[u] == 0) continue;
      for (auto [x, c] : g.neighbors(u)) next[x] += counts[u];
    }
    counts.swap(next);
  }
  return counts[w];
}

WalkModReport walk_count_mod_check(const ConnectionSet& s1, int p) {
  const FiniteGroup& group = s1.group();
  if (p < 2) throw InvalidParameterError("modulus must be a prime >= 2");
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) throw InvalidParameterError("modulus must be prime");
  if (!group.is_abelian())
    throw PreconditionError("walk-count check requires an abelian group");
  std::set<int> images;
  for (int member : s1.members())
    if (!images.insert(group.power(member, p)).second)
      throw PreconditionError(
          "power map is not injective on the connection set");

  WalkModReport report;
  report.prime = p;
  ColoredGraph original = cayley_graph(s1);
  ColoredGraph scaled = cayley_graph(scaled_set(s1, p));
  const int n = group.order();
  for (int v = 0; v < n; ++v) {
    for (int w = 0; w < n; ++w) {
      BigInt count = walk_count(original, v, w, p);
      bool nonzero_mod_p = count % p != 0;
      bool adjacent = scaled.adjacent(v, w);
      ++report.pairs_checked;
      if (nonzero_mod_p != adjacent)
        report.violations.push_back({v, w, count, adjacent});
    }
  }
  report.ok = report.violations.empty();
  return report;
}

std::string element_display(const FiniteGroup& group, int g) {
  return group.element_name(g);
}

namespace {

struct SetToken {
  bool negated = false;
  bool is_tuple = false;
  long long value = 0;
  std::vector<long long> tuple;
  int color = 0;
  bool has_color = false;
};

std::vector<SetToken> tokenize_set(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw ParseError("empty connection set");

  std::vector<SetToken> tokens;
  std::size_t i = 0;
  auto read_int = [&]() -> long long {
    std::size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    std::size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) throw ParseError("expected an integer in connection set");
    return std::stoll(s.substr(start, i - start));
  };

  while (i < s.size()) {
    SetToken token;
    if (s[i] == '-') {
      token.negated = true;
      ++i;
      if (i == s.size()) throw ParseError("dangling '-' in connection set");
    }
    if (s[i] == '(') {
      token.is_tuple = true;
      ++i;
      for (;;) {
        token.tuple.push_back(read_int());
        if (i < s.size() && s[i] == ',') {
          ++i;
          continue;
        }
        if (i < s.size() && s[i] == ')') {
          ++i;
          break;
        }
        throw ParseError("unterminated tuple in connection set");
      }
    } else if (s[i] == '-' || std::isdigit(static_cast<unsigned char>(s[i]))) {
      token.value = read_int();
      if (token.value < 0) {
        token.negated = !token.negated;
        token.value = -token.value;
      }
    } else {
      throw ParseError("unexpected character in connection set");
    }
    if (i < s.size() && s[i] == '@') {
      ++i;
      long long c = read_int();
      if (c < 0) throw ParseError("connection-set color must be non-negative");
      token.color = static_cast<int>(c);
      token.has_color = true;
    }
    if (i < s.size()) {
      if (s[i] != ',') throw ParseError("expected ',' between connection-set entries");
      ++i;
      if (i == s.size()) throw ParseError("trailing ',' in connection set");
    }
    tokens.push_back(std::move(token));
  }
  return tokens;
}

} // namespace

ConnectionSet parse_connection_set(const FiniteGroup& group,
                                   std::string_view text) {
  std::map<int, std::set<int>> colored;
  for (const auto& token : tokenize_set(text)) {
    int element;
    if (token.is_tuple) {
      if (group.kind() == FiniteGroup::Kind::Abelian) {
        const auto& factors = group.abelian_factors();
        if (token.tuple.size() != factors.size())
          throw ParseError("tuple length does not match the group's factors");
        std::vector<int> residues(factors.size());
        for (std::size_t j = 0; j < factors.size(); ++j)
          residues[j] = static_cast<int>(((token.tuple[j] % factors[j]) + factors[j]) %
                                         factors[j]);
        element = group.from_vector(residues);
      } else {
        const auto& params = group.semidirect_params();
        if (token.tuple.size() != 2)
          throw ParseError("semidirect elements are written as (i,j) pairs");
        long long xi = ((token.tuple[0] % params.n) + params.n) % params.n;
        long long aj = ((token.tuple[1] % params.m) + params.m) % params.m;
        element = static_cast<int>(xi) * params.m + static_cast<int>(aj);
      }
    } else {
      bool cyclic = group.kind() == FiniteGroup::Kind::Abelian &&
                    group.abelian_factors().size() == 1;
      if (cyclic) {
        long long r = token.value % group.order();
        element = static_cast<int>(r);
      } else {
        if (token.value >= group.order())
          throw ParseError("element index outside group");
        element = static_cast<int>(token.value);
      }
    }
    if (token.negated) element = group.inv(element);
    auto [it, inserted] = colored.emplace(element, std::set<int>{token.color});
    if (!inserted) it->second.insert(token.color);
  }
  return ConnectionSet(group, std::move(colored)); // symmetry checked here
}

} // namespace caystab
