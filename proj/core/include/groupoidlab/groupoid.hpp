#ifndef GROUPOIDLAB_GROUPOID_HPP_
#define GROUPOIDLAB_GROUPOID_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "groupoidlab/common.hpp"

namespace gl {

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<FiniteGroupoid const>;

// Orbits of the unit space under u ~ v iff some arrow runs from v to u.
struct OrbitPartition {
  std::vector<std::vector<int>> blocks;  // each block lists unit indices
  std::map<int, int> orbit_index;        // unit index -> block id

  bool same_orbit(int u, int v) const {
    return orbit_index.at(u) == orbit_index.at(v);
  }
};

// A finite groupoid over dense element indices. External identity is the
// string label; a groupoid owns the label<->index bijection. Instances are
// immutable after validation and safe for concurrent reads.
class FiniteGroupoid {
 public:
  // Unvalidated description, as read from a file or built by a constructor.
  struct Raw {
    std::vector<std::string> elements;
    std::vector<std::string> units;
    std::map<std::string, std::string> range;
    std::map<std::string, std::string> source;
    std::map<std::string, std::string> inverse;
    // composition entries x*y = z, exactly one per composable pair
    std::vector<std::array<std::string, 3>> mul;
  };

  // Checks every groupoid axiom instance exhaustively and returns an
  // immutable groupoid. Throws Error with code MissingUnitAxiom,
  // NonAssociative, BadInverse or CompositionDomainMismatch, naming the
  // offending elements.
  static GroupoidPtr validate(Raw const& raw);

  int size() const {
    return static_cast<int>(labels_.size());
  }
  std::vector<int> const& units() const {
    return units_;
  }
  bool is_unit(int x) const {
    return is_unit_[static_cast<size_t>(x)];
  }
  int range(int x) const {
    return range_[static_cast<size_t>(x)];
  }
  int source(int x) const {
    return source_[static_cast<size_t>(x)];
  }
  int inverse(int x) const {
    return inverse_[static_cast<size_t>(x)];
  }

  bool composable(int x, int y) const {
    return source(x) == range(y);
  }
  // xy, or -1 when d(x) != r(y)
  int compose_opt(int x, int y) const {
    return mul_[static_cast<size_t>(x) * labels_.size() + static_cast<size_t>(y)];
  }
  // xy; throws Error("NotComposable", ...) when d(x) != r(y)
  int compose(int x, int y) const;

  std::string const& label(int x) const {
    return labels_[static_cast<size_t>(x)];
  }
  // index of a label; throws Error("UnknownElement", ...)
  int index(std::string const& label) const;
  bool has_label(std::string const& label) const {
    return index_.count(label) != 0;
  }

  // Γ^u = r^{-1}{u} and Γ_u = d^{-1}{u}
  std::vector<int> const& r_fiber(int u) const;
  std::vector<int> const& d_fiber(int u) const;

  OrbitPartition orbits() const;
  // Γ_u^u with inherited operations; throws Error("NotAUnit", ...)
  GroupoidPtr isotropy(int u) const;
  // the equivalence-relation groupoid R = {(r(x), d(x))} and the quotient
  // map element -> element of R
  std::pair<GroupoidPtr, std::vector<int>> principal_quotient() const;

  bool is_transitive() const;
  // (r, d) injective
  bool is_principal() const;
  // r(x) = d(x) for every x
  bool is_group_bundle() const;

 private:
  FiniteGroupoid() = default;

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
  std::vector<int> units_;
  std::vector<bool> is_unit_;
  std::vector<int> range_;
  std::vector<int> source_;
  std::vector<int> inverse_;
  std::vector<int32_t> mul_;  // flattened n x n table, -1 = not composable
  std::map<int, std::vector<int>> r_fibers_;
  std::map<int, std::vector<int>> d_fibers_;
};

// Standard constructors. Every output passes validate().
GroupoidPtr from_group(std::vector<std::string> const& elements,
                       std::vector<std::vector<int>> const& table,
                       int identity);
GroupoidPtr cyclic_group(int n);         // Z/n with labels "0".."n-1"
GroupoidPtr symmetric_group_s3();        // S3 as a permutation group
GroupoidPtr pair_groupoid(std::vector<std::string> const& points);
GroupoidPtr pair_groupoid(int n);        // points "1".."n"
GroupoidPtr cotrivial_set(std::vector<std::string> const& points);
GroupoidPtr equivalence_relation(std::vector<std::vector<std::string>> const& blocks);
GroupoidPtr group_bundle(std::vector<std::pair<std::string, GroupoidPtr>> const& fibers);
// action groupoid G ⋉ X for a group acting on a point set; action[g][x] = g.x
GroupoidPtr action_groupoid(GroupoidPtr const& group,
                            std::vector<std::string> const& points,
                            std::vector<std::vector<int>> const& action);
GroupoidPtr disjoint_union(GroupoidPtr const& a, GroupoidPtr const& b);

// label helper for pair-groupoid style elements
std::string pair_label(std::string const& a, std::string const& b);

}  // namespace gl
#endif  // GROUPOIDLAB_GROUPOID_HPP_
