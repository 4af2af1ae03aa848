#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "ctl/perm.hpp"

namespace ctl {

class PermGroup;
class CharacterTable;
class BlockSet;
using GroupPtr = std::shared_ptr<const PermGroup>;

// Configurable bound for exhaustive enumeration (CTL_MAX_ORDER, default 10000).
int64_t max_group_order();

struct ConjClass {
  int rep;                   // element index of the representative
  std::vector<int> members;  // sorted element indices
  int element_order;
};

// Finite permutation group given by generators, with the full element list
// enumerated and sorted lexicographically by image vector.  Subgroups are
// PermGroups of the same degree whose element sets are contained in the
// parent's; set-level operations work through element indices of the group
// they are called on.
class PermGroup : public std::enable_shared_from_this<PermGroup> {
 public:
  static GroupPtr from_generators(int degree, std::vector<Perm> gens);

  // Named families: S<n>, A<n>, C<n>, D<2n> (dihedral, by order), K4, Q8,
  // SL23, GL23; also "<a>x<b>" direct products and "<a>wr<n>" wreaths.
  static GroupPtr named(const std::string& name);
  static GroupPtr symmetric(int n);
  static GroupPtr alternating(int n);
  static GroupPtr cyclic(int n);
  static GroupPtr dihedral(int order2n);
  static GroupPtr klein4();
  static GroupPtr quaternion8();
  static GroupPtr sl23();
  static GroupPtr gl23();

  // Parse the two-line text format: "degree: n" then "gens: (..)(..), ..".
  static GroupPtr from_text(const std::string& text);

  int degree() const { return degree_; }
  int64_t order() const { return static_cast<int64_t>(elements_.size()); }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  const Perm& element(int i) const { return elements_[i]; }

  bool contains(const Perm& p) const { return index_.count(p) != 0; }
  int index_of(const Perm& p) const;
  int identity_index() const { return id_idx_; }

  int mul(int i, int j) const { return index_of(elements_[i] * elements_[j]); }
  int inv(int i) const { return index_of(elements_[i].inverse()); }
  int conj(int i, int g) const {  // g^{-1} i g
    return index_of(elements_[i].conjugated_by(elements_[g]));
  }
  int element_order(int i) const { return elements_[i].order(); }
  int exponent() const;

  const std::vector<ConjClass>& classes() const;
  int class_of(int elem_idx) const;
  int num_classes() const { return static_cast<int>(classes().size()); }

  // a[i][j][k]: number of ways rep(k) = x*y with x in class i, y in class j.
  const std::vector<std::vector<std::vector<int64_t>>>& structure_constants() const;

  // True if every element of S lies in this group (degrees must agree).
  bool contains_subgroup(const PermGroup& s) const;

  // Lazily cached per-group data owned by other modules.  Blocks are keyed
  // by (prime, context exponent).
  mutable std::shared_ptr<const CharacterTable> table_cache;
  mutable std::map<std::pair<int, int>, std::shared_ptr<const BlockSet>> block_cache;

 private:
  PermGroup() = default;
  static GroupPtr from_element_list(int degree, std::vector<Perm> elements,
                                    std::vector<Perm> gens);

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> elements_;  // sorted
  std::unordered_map<Perm, int, PermHash> index_;
  int id_idx_ = 0;

  mutable std::vector<ConjClass> classes_;
  mutable std::vector<int> class_of_;
  mutable std::vector<std::vector<std::vector<int64_t>>> structure_;
  mutable int exponent_ = 0;

  friend GroupPtr group_from_elements(int degree, std::vector<Perm> elements);
};

// Builds the group whose element list is exactly `elements` (must be closed);
// a small generating set is extracted greedily.
GroupPtr group_from_elements(int degree, std::vector<Perm> elements);

// ---- subgroup-level queries (first argument is the ambient group) ----

GroupPtr trivial_subgroup(const PermGroup& g);
GroupPtr generated_subgroup(const PermGroup& g, const std::vector<Perm>& gens);
GroupPtr centralizer(const PermGroup& g, const PermGroup& s);
GroupPtr centralizer_of_element(const PermGroup& g, const Perm& x);
GroupPtr normalizer(const PermGroup& g, const PermGroup& s);
GroupPtr sylow_subgroup(const PermGroup& g, int p);
GroupPtr p_core(const PermGroup& g, int p);
GroupPtr center(const PermGroup& g);
bool is_normal(const PermGroup& g, const PermGroup& s);
GroupPtr setwise_stabilizer(const PermGroup& g, const std::vector<int>& points);
GroupPtr intersect(const PermGroup& a, const PermGroup& b);
GroupPtr join_subgroups(const PermGroup& g, const PermGroup& a, const PermGroup& b);
GroupPtr conjugate_subgroup(const PermGroup& g, const PermGroup& s, const Perm& x);
bool subgroups_equal(const PermGroup& a, const PermGroup& b);
bool subgroups_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b);

// Homomorphism between enumerated groups, stored as the full element map and
// verified to respect products.
class GroupHom {
 public:
  GroupHom() = default;
  GroupHom(GroupPtr src, GroupPtr dst, std::vector<int> element_image);

  // Build from generator images by extending along products; throws if the
  // assignment is inconsistent.
  static GroupHom from_generator_images(GroupPtr src, GroupPtr dst,
                                        const std::vector<Perm>& gen_images);

  const GroupPtr& source() const { return src_; }
  const GroupPtr& target() const { return dst_; }
  int apply_index(int src_elem_idx) const { return img_[src_elem_idx]; }
  Perm apply(const Perm& p) const;
  bool is_surjective() const;
  GroupPtr kernel() const;

 private:
  GroupPtr src_, dst_;
  std::vector<int> img_;
};

struct QuotientData {
  GroupPtr group;     // permutation group on the cosets
  GroupHom projection;
};
QuotientData quotient(GroupPtr g, GroupPtr normal_subgroup);

struct DirectProductData {
  GroupPtr group;
  GroupPtr factor1, factor2;
  Perm embed(const Perm& a, const Perm& b) const;
  Perm project1(const Perm& w) const;
  Perm project2(const Perm& w) const;
};
DirectProductData direct_product(GroupPtr a, GroupPtr b);

struct WreathProductData {
  GroupPtr group;     // base^n with the symmetric top, degree n*d + n
  GroupPtr base;      // the factor G
  int copies = 1;
  Perm embed(const std::vector<Perm>& base_components, const Perm& top) const;
  void decode(const Perm& w, std::vector<Perm>* base_components, Perm* top) const;
  GroupPtr base_subgroup() const;  // G^n as a subgroup of the wreath
};
WreathProductData wreath_product(GroupPtr g, int copies);

// One representative per conjugacy class of p-subgroups, the trivial group
// included; representatives are canonical (lексicographically smallest
// element set in the conjugation orbit) and sorted by (order, element set).
std::vector<GroupPtr> p_subgroup_classes(const PermGroup& g, int p);

// All subgroups J with N <= J <= G (N normal in G), via the subgroup lattice
// of G/N; deterministic order by (order, element set).
std::vector<GroupPtr> subgroups_between(GroupPtr g, GroupPtr n);

// The subgroups <N, x> for x in G, deduplicated; these realize every
// intermediate subgroup with cyclic J/N.
std::vector<GroupPtr> cyclic_over(GroupPtr g, GroupPtr n);

// All subgroups of g (used for the lattice of small quotients).
std::vector<GroupPtr> all_subgroups(const PermGroup& g);

}  // namespace ctl
