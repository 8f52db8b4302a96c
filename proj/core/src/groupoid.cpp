#include "groupoidlab/groupoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>
#include <thread>

namespace gl {

unsigned thread_budget() {
  if (char const* env = std::getenv("GROUPOIDLAB_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) {
      return static_cast<unsigned>(v);
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

namespace {

int lookup(std::map<std::string, int> const& index, std::string const& label,
           char const* role) {
  auto it = index.find(label);
  if (it == index.end()) {
    fail("UnknownElement", std::string(role) + " references unknown element '" +
                               label + "'");
  }
  return it->second;
}

}  // namespace

GroupoidPtr FiniteGroupoid::validate(Raw const& raw) {
  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  size_t const n = raw.elements.size();
  if (n == 0) {
    fail("MissingUnitAxiom", "a groupoid needs at least one element");
  }
  g->labels_ = raw.elements;
  for (size_t i = 0; i < n; ++i) {
    if (!g->index_.emplace(raw.elements[i], static_cast<int>(i)).second) {
      fail("ParseError", "duplicate element label '" + raw.elements[i] + "'");
    }
  }
  g->is_unit_.assign(n, false);
  for (auto const& u : raw.units) {
    int ui = lookup(g->index_, u, "units");
    if (!g->is_unit_[static_cast<size_t>(ui)]) {
      g->is_unit_[static_cast<size_t>(ui)] = true;
      g->units_.push_back(ui);
    }
  }
  std::sort(g->units_.begin(), g->units_.end());
  if (g->units_.empty()) {
    fail("MissingUnitAxiom", "no units declared");
  }

  auto total_map = [&](std::map<std::string, std::string> const& m,
                       char const* role) {
    std::vector<int> out(n, -1);
    for (auto const& [k, v] : m) {
      out[static_cast<size_t>(lookup(g->index_, k, role))] =
          lookup(g->index_, v, role);
    }
    for (size_t i = 0; i < n; ++i) {
      if (out[i] < 0) {
        fail("ParseError", std::string(role) + " is not total: missing entry for '" +
                               g->labels_[i] + "'");
      }
    }
    return out;
  };
  g->range_ = total_map(raw.range, "range");
  g->source_ = total_map(raw.source, "source");
  g->inverse_ = total_map(raw.inverse, "inverse");

  for (size_t i = 0; i < n; ++i) {
    if (!g->is_unit_[static_cast<size_t>(g->range_[i])] ||
        !g->is_unit_[static_cast<size_t>(g->source_[i])]) {
      fail("CompositionDomainMismatch",
           "range/source of '" + g->labels_[i] + "' is not a unit");
    }
  }

  g->mul_.assign(n * n, -1);
  for (auto const& entry : raw.mul) {
    int x = lookup(g->index_, entry[0], "mul");
    int y = lookup(g->index_, entry[1], "mul");
    int z = lookup(g->index_, entry[2], "mul");
    if (g->source_[static_cast<size_t>(x)] != g->range_[static_cast<size_t>(y)]) {
      fail("CompositionDomainMismatch",
           "table defines '" + entry[0] + "'*'" + entry[1] +
               "' although d(x) != r(y)");
    }
    int32_t& slot = g->mul_[static_cast<size_t>(x) * n + static_cast<size_t>(y)];
    if (slot >= 0 && slot != z) {
      fail("ParseError", "conflicting products for '" + entry[0] + "'*'" +
                             entry[1] + "'");
    }
    slot = z;
  }
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      bool should = g->source_[x] == g->range_[y];
      bool has = g->mul_[x * n + y] >= 0;
      if (should && !has) {
        fail("CompositionDomainMismatch",
             "missing product '" + g->labels_[x] + "'*'" + g->labels_[y] + "'");
      }
      if (!should && has) {
        fail("CompositionDomainMismatch",
             "product defined for non-composable pair ('" + g->labels_[x] +
                 "','" + g->labels_[y] + "')");
      }
    }
  }

  auto mul = [&](int x, int y) {
    return g->mul_[static_cast<size_t>(x) * n + static_cast<size_t>(y)];
  };

  // unit axioms: r(u) = d(u) = u, u^{-1} = u
  for (int u : g->units_) {
    if (g->range_[static_cast<size_t>(u)] != u ||
        g->source_[static_cast<size_t>(u)] != u ||
        g->inverse_[static_cast<size_t>(u)] != u) {
      fail("MissingUnitAxiom", "unit '" + g->labels_[static_cast<size_t>(u)] +
                                   "' has r, d or inverse differing from itself");
    }
  }
  // units absorb: ux = x and xu = x
  for (size_t x = 0; x < n; ++x) {
    int rx = g->range_[x];
    int dx = g->source_[x];
    if (mul(rx, static_cast<int>(x)) != static_cast<int>(x) ||
        mul(static_cast<int>(x), dx) != static_cast<int>(x)) {
      fail("MissingUnitAxiom",
           "unit does not act as identity on '" + g->labels_[x] + "'");
    }
  }
  // x x^{-1} = r(x), x^{-1} x = d(x), inverse is an involution
  for (size_t x = 0; x < n; ++x) {
    int xi = g->inverse_[x];
    if (g->inverse_[static_cast<size_t>(xi)] != static_cast<int>(x)) {
      fail("BadInverse", "inverse is not an involution at '" + g->labels_[x] + "'");
    }
    if (g->range_[static_cast<size_t>(xi)] != g->source_[x] ||
        g->source_[static_cast<size_t>(xi)] != g->range_[x]) {
      fail("BadInverse", "r/d of the inverse of '" + g->labels_[x] +
                             "' are not swapped");
    }
    if (mul(static_cast<int>(x), xi) != g->range_[x] ||
        mul(xi, static_cast<int>(x)) != g->source_[x]) {
      fail("BadInverse", "'" + g->labels_[x] + "' composed with its inverse " +
                             "does not give the declared unit");
    }
  }
  // range/source of products, cancellation
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      int xy = mul(static_cast<int>(x), static_cast<int>(y));
      if (xy < 0) {
        continue;
      }
      if (g->range_[static_cast<size_t>(xy)] != g->range_[x] ||
          g->source_[static_cast<size_t>(xy)] != g->source_[y]) {
        fail("CompositionDomainMismatch",
             "r/d of '" + g->labels_[x] + "'*'" + g->labels_[y] + "' are wrong");
      }
      if (mul(g->inverse_[x], xy) != static_cast<int>(y) ||
          mul(xy, g->inverse_[y]) != static_cast<int>(x)) {
        fail("BadInverse", "cancellation fails on ('" + g->labels_[x] + "','" +
                               g->labels_[y] + "')");
      }
    }
  }
  // associativity on all composable triples
  for (size_t x = 0; x < n; ++x) {
    for (size_t y = 0; y < n; ++y) {
      int xy = mul(static_cast<int>(x), static_cast<int>(y));
      if (xy < 0) {
        continue;
      }
      for (size_t z = 0; z < n; ++z) {
        int yz = mul(static_cast<int>(y), static_cast<int>(z));
        if (yz < 0) {
          continue;
        }
        if (mul(xy, static_cast<int>(z)) != mul(static_cast<int>(x), yz)) {
          fail("NonAssociative", "associativity fails on ('" + g->labels_[x] +
                                     "','" + g->labels_[y] + "','" +
                                     g->labels_[z] + "')");
        }
      }
    }
  }

  for (int u : g->units_) {
    g->r_fibers_[u] = {};
    g->d_fibers_[u] = {};
  }
  for (size_t x = 0; x < n; ++x) {
    g->r_fibers_[g->range_[x]].push_back(static_cast<int>(x));
    g->d_fibers_[g->source_[x]].push_back(static_cast<int>(x));
  }
  return g;
}

int FiniteGroupoid::compose(int x, int y) const {
  int xy = compose_opt(x, y);
  if (xy < 0) {
    fail("NotComposable",
         "d('" + label(x) + "') != r('" + label(y) + "')");
  }
  return xy;
}

int FiniteGroupoid::index(std::string const& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) {
    fail("UnknownElement", "no element labelled '" + label + "'");
  }
  return it->second;
}

std::vector<int> const& FiniteGroupoid::r_fiber(int u) const {
  auto it = r_fibers_.find(u);
  if (it == r_fibers_.end()) {
    fail("NotAUnit", "'" + label(u) + "' is not a unit");
  }
  return it->second;
}

std::vector<int> const& FiniteGroupoid::d_fiber(int u) const {
  auto it = d_fibers_.find(u);
  if (it == d_fibers_.end()) {
    fail("NotAUnit", "'" + label(u) + "' is not a unit");
  }
  return it->second;
}

OrbitPartition FiniteGroupoid::orbits() const {
  OrbitPartition out;
  std::set<int> seen;
  for (int u : units_) {
    if (seen.count(u)) {
      continue;
    }
    // flood fill along arrows
    std::vector<int> block{u};
    seen.insert(u);
    for (size_t head = 0; head < block.size(); ++head) {
      for (int x : r_fiber(block[head])) {
        int v = source(x);
        if (!seen.count(v)) {
          seen.insert(v);
          block.push_back(v);
        }
      }
    }
    std::sort(block.begin(), block.end());
    int id = static_cast<int>(out.blocks.size());
    for (int v : block) {
      out.orbit_index[v] = id;
    }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

GroupoidPtr FiniteGroupoid::isotropy(int u) const {
  if (!is_unit(u)) {
    fail("NotAUnit", "'" + label(u) + "' is not a unit");
  }
  Raw raw;
  std::vector<int> members;
  for (int x : r_fiber(u)) {
    if (source(x) == u) {
      members.push_back(x);
    }
  }
  for (int x : members) {
    raw.elements.push_back(label(x));
    raw.range[label(x)] = label(u);
    raw.source[label(x)] = label(u);
    raw.inverse[label(x)] = label(inverse(x));
    for (int y : members) {
      raw.mul.push_back({label(x), label(y), label(compose_opt(x, y))});
    }
  }
  raw.units = {label(u)};
  return validate(raw);
}

std::pair<GroupoidPtr, std::vector<int>> FiniteGroupoid::principal_quotient() const {
  Raw raw;
  std::set<std::pair<int, int>> pairs;
  for (int x = 0; x < size(); ++x) {
    pairs.insert({range(x), source(x)});
  }
  auto plabel = [&](std::pair<int, int> const& p) {
    return pair_label(label(p.first), label(p.second));
  };
  for (auto const& p : pairs) {
    raw.elements.push_back(plabel(p));
    raw.range[plabel(p)] = plabel({p.first, p.first});
    raw.source[plabel(p)] = plabel({p.second, p.second});
    raw.inverse[plabel(p)] = plabel({p.second, p.first});
    if (p.first == p.second) {
      raw.units.push_back(plabel(p));
    }
  }
  for (auto const& p : pairs) {
    for (auto const& q : pairs) {
      if (p.second == q.first) {
        raw.mul.push_back({plabel(p), plabel(q), plabel({p.first, q.second})});
      }
    }
  }
  auto quotient = validate(raw);
  std::vector<int> map(static_cast<size_t>(size()));
  for (int x = 0; x < size(); ++x) {
    map[static_cast<size_t>(x)] =
        quotient->index(plabel({range(x), source(x)}));
  }
  return {quotient, map};
}

bool FiniteGroupoid::is_transitive() const {
  return orbits().blocks.size() == 1;
}

bool FiniteGroupoid::is_principal() const {
  std::set<std::pair<int, int>> seen;
  for (int x = 0; x < size(); ++x) {
    if (!seen.insert({range(x), source(x)}).second) {
      return false;
    }
  }
  return true;
}

bool FiniteGroupoid::is_group_bundle() const {
  for (int x = 0; x < size(); ++x) {
    if (range(x) != source(x)) {
      return false;
    }
  }
  return true;
}

std::string pair_label(std::string const& a, std::string const& b) {
  return "(" + a + "," + b + ")";
}

GroupoidPtr from_group(std::vector<std::string> const& elements,
                       std::vector<std::vector<int>> const& table,
                       int identity) {
  size_t const n = elements.size();
  if (table.size() != n || identity < 0 || static_cast<size_t>(identity) >= n) {
    fail("ParseError", "malformed group table");
  }
  FiniteGroupoid::Raw raw;
  raw.elements = elements;
  raw.units = {elements[static_cast<size_t>(identity)]};
  std::vector<int> inv(n, -1);
  for (size_t i = 0; i < n; ++i) {
    if (table[i].size() != n) {
      fail("ParseError", "malformed group table row");
    }
    for (size_t j = 0; j < n; ++j) {
      if (table[i][j] == identity) {
        inv[i] = static_cast<int>(j);
      }
      raw.mul.push_back({elements[i], elements[j],
                         elements[static_cast<size_t>(table[i][j])]});
    }
  }
  for (size_t i = 0; i < n; ++i) {
    if (inv[i] < 0) {
      fail("BadInverse", "group element '" + elements[i] + "' has no inverse");
    }
    raw.range[elements[i]] = elements[static_cast<size_t>(identity)];
    raw.source[elements[i]] = elements[static_cast<size_t>(identity)];
    raw.inverse[elements[i]] = elements[static_cast<size_t>(inv[i])];
  }
  return FiniteGroupoid::validate(raw);
}

GroupoidPtr cyclic_group(int n) {
  std::vector<std::string> labels;
  std::vector<std::vector<int>> table(static_cast<size_t>(n),
                                      std::vector<int>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    labels.push_back(std::to_string(i));
    for (int j = 0; j < n; ++j) {
      table[static_cast<size_t>(i)][static_cast<size_t>(j)] = (i + j) % n;
    }
  }
  return from_group(labels, table, 0);
}

GroupoidPtr symmetric_group_s3() {
  // permutations of {0,1,2} as images (p[0]p[1]p[2])
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                           {0, 2, 1}, {2, 1, 0}, {1, 0, 2}};
  std::vector<std::string> labels;
  for (auto const& p : perms) {
    labels.push_back("p" + std::to_string(p[0]) + std::to_string(p[1]) +
                     std::to_string(p[2]));
  }
  auto find = [&](std::array<int, 3> const& q) {
    for (size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == q) {
        return static_cast<int>(i);
      }
    }
    return -1;
  };
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (size_t i = 0; i < 6; ++i) {
    for (size_t j = 0; j < 6; ++j) {
      std::array<int, 3> comp{};
      for (int k = 0; k < 3; ++k) {
        comp[static_cast<size_t>(k)] =
            perms[i][static_cast<size_t>(perms[j][static_cast<size_t>(k)])];
      }
      table[i][j] = find(comp);
    }
  }
  return from_group(labels, table, 0);
}

GroupoidPtr pair_groupoid(std::vector<std::string> const& points) {
  std::vector<std::vector<std::string>> one_block{points};
  return equivalence_relation(one_block);
}

GroupoidPtr pair_groupoid(int n) {
  std::vector<std::string> points;
  for (int i = 1; i <= n; ++i) {
    points.push_back(std::to_string(i));
  }
  return pair_groupoid(points);
}

GroupoidPtr cotrivial_set(std::vector<std::string> const& points) {
  FiniteGroupoid::Raw raw;
  raw.elements = points;
  raw.units = points;
  for (auto const& p : points) {
    raw.range[p] = p;
    raw.source[p] = p;
    raw.inverse[p] = p;
    raw.mul.push_back({p, p, p});
  }
  return FiniteGroupoid::validate(raw);
}

GroupoidPtr equivalence_relation(std::vector<std::vector<std::string>> const& blocks) {
  FiniteGroupoid::Raw raw;
  for (auto const& block : blocks) {
    for (auto const& a : block) {
      raw.units.push_back(pair_label(a, a));
      for (auto const& b : block) {
        raw.elements.push_back(pair_label(a, b));
        raw.range[pair_label(a, b)] = pair_label(a, a);
        raw.source[pair_label(a, b)] = pair_label(b, b);
        raw.inverse[pair_label(a, b)] = pair_label(b, a);
        for (auto const& c : block) {
          raw.mul.push_back(
              {pair_label(a, b), pair_label(b, c), pair_label(a, c)});
        }
      }
    }
  }
  return FiniteGroupoid::validate(raw);
}

GroupoidPtr group_bundle(
    std::vector<std::pair<std::string, GroupoidPtr>> const& fibers) {
  FiniteGroupoid::Raw raw;
  for (auto const& [base, grp] : fibers) {
    if (grp->units().size() != 1) {
      fail("ParseError", "group bundle fiber over '" + base + "' is not a group");
    }
    auto tag = [&, base = base](int x) {
      return base + ":" + grp->label(x);
    };
    int unit = grp->units()[0];
    raw.units.push_back(tag(unit));
    for (int x = 0; x < grp->size(); ++x) {
      raw.elements.push_back(tag(x));
      raw.range[tag(x)] = tag(unit);
      raw.source[tag(x)] = tag(unit);
      raw.inverse[tag(x)] = tag(grp->inverse(x));
      for (int y = 0; y < grp->size(); ++y) {
        raw.mul.push_back({tag(x), tag(y), tag(grp->compose_opt(x, y))});
      }
    }
  }
  return FiniteGroupoid::validate(raw);
}

GroupoidPtr action_groupoid(GroupoidPtr const& group,
                            std::vector<std::string> const& points,
                            std::vector<std::vector<int>> const& action) {
  if (group->units().size() != 1) {
    fail("ParseError", "action groupoid requires a group actor");
  }
  size_t const m = points.size();
  if (action.size() != static_cast<size_t>(group->size())) {
    fail("ParseError", "action table has wrong number of rows");
  }
  auto tag = [&](int g, int x) {
    return pair_label(group->label(g), points[static_cast<size_t>(x)]);
  };
  auto act = [&](int g, int x) {
    int y = action[static_cast<size_t>(g)][static_cast<size_t>(x)];
    if (y < 0 || static_cast<size_t>(y) >= m) {
      fail("ParseError", "action table entry out of range");
    }
    return y;
  };
  int const e = group->units()[0];
  FiniteGroupoid::Raw raw;
  // element (g, x) has range g.x and source x
  for (int g = 0; g < group->size(); ++g) {
    for (int x = 0; x < static_cast<int>(m); ++x) {
      raw.elements.push_back(tag(g, x));
      raw.range[tag(g, x)] = tag(e, act(g, x));
      raw.source[tag(g, x)] = tag(e, x);
      raw.inverse[tag(g, x)] = tag(group->inverse(g), act(g, x));
    }
  }
  for (int x = 0; x < static_cast<int>(m); ++x) {
    raw.units.push_back(tag(e, x));
  }
  // (g2, g1.x)(g1, x) = (g2 g1, x)
  for (int g1 = 0; g1 < group->size(); ++g1) {
    for (int g2 = 0; g2 < group->size(); ++g2) {
      for (int x = 0; x < static_cast<int>(m); ++x) {
        raw.mul.push_back({tag(g2, act(g1, x)), tag(g1, x),
                           tag(group->compose_opt(g2, g1), x)});
      }
    }
  }
  return FiniteGroupoid::validate(raw);
}

GroupoidPtr disjoint_union(GroupoidPtr const& a, GroupoidPtr const& b) {
  bool clash = false;
  for (int x = 0; x < b->size(); ++x) {
    if (a->has_label(b->label(x))) {
      clash = true;
      break;
    }
  }
  auto tag_a = [&](int x) {
    return clash ? "A." + a->label(x) : a->label(x);
  };
  auto tag_b = [&](int x) {
    return clash ? "B." + b->label(x) : b->label(x);
  };
  FiniteGroupoid::Raw raw;
  auto add = [&](FiniteGroupoid const& g, auto const& tag) {
    for (int x = 0; x < g.size(); ++x) {
      raw.elements.push_back(tag(x));
      raw.range[tag(x)] = tag(g.range(x));
      raw.source[tag(x)] = tag(g.source(x));
      raw.inverse[tag(x)] = tag(g.inverse(x));
      for (int y = 0; y < g.size(); ++y) {
        int xy = g.compose_opt(x, y);
        if (xy >= 0) {
          raw.mul.push_back({tag(x), tag(y), tag(xy)});
        }
      }
      if (g.is_unit(x)) {
        raw.units.push_back(tag(x));
      }
    }
  };
  add(*a, tag_a);
  add(*b, tag_b);
  return FiniteGroupoid::validate(raw);
}

}  // namespace gl
