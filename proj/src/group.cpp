#include "ctl/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace ctl {

int64_t max_group_order() {
  static int64_t bound = [] {
    if (const char* env = std::getenv("CTL_MAX_ORDER")) {
      int64_t v = std::atoll(env);
      if (v > 0) return v;
    }
    return static_cast<int64_t>(10000);
  }();
  return bound;
}

namespace {

std::vector<Perm> close_under_products(int degree, const std::vector<Perm>& gens) {
  std::unordered_map<Perm, int, PermHash> seen;
  std::vector<Perm> elems;
  elems.emplace_back(degree);
  seen.emplace(elems[0], 0);
  size_t cur = 0;
  while (cur < elems.size()) {
    for (const Perm& g : gens) {
      Perm next = elems[cur] * g;
      if (seen.emplace(next, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (static_cast<int64_t>(elems.size()) > max_group_order())
          throw resource_error("group order exceeds CTL_MAX_ORDER bound " +
                               std::to_string(max_group_order()));
      }
    }
    ++cur;
  }
  return elems;
}

// Greedy small generating set for a closed element list.
std::vector<Perm> minimal_generators(int degree, const std::vector<Perm>& elems) {
  std::vector<Perm> gens;
  if (elems.size() == 1) return gens;
  std::unordered_map<Perm, char, PermHash> have;
  have.emplace(Perm(degree), 1);
  for (const Perm& e : elems) {
    if (have.count(e)) continue;
    gens.push_back(e);
    auto closed = close_under_products(degree, gens);
    have.clear();
    for (auto& c : closed) have.emplace(std::move(c), 1);
    if (have.size() == elems.size()) break;
  }
  return gens;
}

}  // namespace

GroupPtr PermGroup::from_generators(int degree, std::vector<Perm> gens) {
  for (const Perm& g : gens)
    if (g.degree() != degree)
      throw precondition_error("generator degree mismatch");
  auto elems = close_under_products(degree, gens);
  std::sort(elems.begin(), elems.end());
  return from_element_list(degree, std::move(elems), std::move(gens));
}

GroupPtr PermGroup::from_element_list(int degree, std::vector<Perm> elements,
                                      std::vector<Perm> gens) {
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->elements_ = std::move(elements);
  g->gens_ = std::move(gens);
  for (int i = 0; i < static_cast<int>(g->elements_.size()); ++i)
    g->index_.emplace(g->elements_[i], i);
  g->id_idx_ = g->index_.at(Perm(degree));
  return g;
}

GroupPtr group_from_elements(int degree, std::vector<Perm> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto gens = minimal_generators(degree, elements);
  return PermGroup::from_element_list(degree, std::move(elements), std::move(gens));
}

int PermGroup::index_of(const Perm& p) const {
  auto it = index_.find(p);
  if (it == index_.end())
    throw precondition_error("element " + p.cycle_string() + " not in group");
  return it->second;
}

int PermGroup::exponent() const {
  if (exponent_ == 0) {
    int e = 1;
    for (const auto& p : elements_) e = std::lcm(e, p.order());
    exponent_ = e;
  }
  return exponent_;
}

const std::vector<ConjClass>& PermGroup::classes() const {
  if (!classes_.empty() || order() == 0) return classes_;
  const int n = static_cast<int>(order());
  class_of_.assign(n, -1);
  std::vector<ConjClass> found;
  for (int i = 0; i < n; ++i) {
    if (class_of_[i] >= 0) continue;
    // orbit of i under conjugation by generators
    std::vector<int> orbit{i};
    class_of_[i] = static_cast<int>(found.size());
    for (size_t q = 0; q < orbit.size(); ++q) {
      for (const Perm& g : gens_.empty() ? std::vector<Perm>{Perm(degree_)} : gens_) {
        int im = index_of(elements_[orbit[q]].conjugated_by(g));
        if (class_of_[im] < 0) {
          class_of_[im] = class_of_[i];
          orbit.push_back(im);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    ConjClass c;
    c.rep = orbit[0];
    c.element_order = elements_[orbit[0]].order();
    c.members = std::move(orbit);
    found.push_back(std::move(c));
  }
  // deterministic order: element order, class size, minimal representative
  std::vector<int> perm_idx(found.size());
  std::iota(perm_idx.begin(), perm_idx.end(), 0);
  std::sort(perm_idx.begin(), perm_idx.end(), [&](int a, int b) {
    const auto& ca = found[a];
    const auto& cb = found[b];
    if (ca.element_order != cb.element_order)
      return ca.element_order < cb.element_order;
    if (ca.members.size() != cb.members.size())
      return ca.members.size() < cb.members.size();
    return ca.rep < cb.rep;
  });
  classes_.reserve(found.size());
  for (int idx : perm_idx) classes_.push_back(std::move(found[idx]));
  for (int c = 0; c < static_cast<int>(classes_.size()); ++c)
    for (int m : classes_[c].members) class_of_[m] = c;
  return classes_;
}

int PermGroup::class_of(int elem_idx) const {
  classes();
  return class_of_[elem_idx];
}

const std::vector<std::vector<std::vector<int64_t>>>&
PermGroup::structure_constants() const {
  if (!structure_.empty()) return structure_;
  const auto& cls = classes();
  const int k = static_cast<int>(cls.size());
  structure_.assign(k, std::vector<std::vector<int64_t>>(
                           k, std::vector<int64_t>(k, 0)));
  for (int i = 0; i < k; ++i) {
    for (int kk = 0; kk < k; ++kk) {
      // count x in C_i with x^{-1} * rep_k in C_j
      const Perm& zk = elements_[cls[kk].rep];
      for (int x : cls[i].members) {
        int j = class_of(index_of(elements_[x].inverse() * zk));
        structure_[i][j][kk] += 1;
      }
    }
  }
  return structure_;
}

bool PermGroup::contains_subgroup(const PermGroup& s) const {
  if (s.degree() != degree_) return false;
  for (const auto& e : s.elements())
    if (!contains(e)) return false;
  return true;
}

// ---- named families ----

GroupPtr PermGroup::symmetric(int n) {
  if (n <= 1) return cyclic(1);
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, "(0 1)"));
  if (n > 2) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    gens.push_back(Perm(img));
  }
  return from_generators(n, gens);
}

GroupPtr PermGroup::alternating(int n) {
  if (n <= 2) return cyclic(1);
  std::vector<Perm> gens;
  gens.push_back(Perm::from_cycles(n, "(0 1 2)"));
  if (n > 3) {
    std::vector<int> img(n);
    if (n % 2 == 1) {
      for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
    } else {
      img[0] = 0;
      for (int i = 1; i < n; ++i) img[i] = i % (n - 1) + 1;
    }
    gens.push_back(Perm(img));
  }
  return from_generators(n, gens);
}

GroupPtr PermGroup::cyclic(int n) {
  if (n < 1) throw precondition_error("cyclic group order must be positive");
  if (n == 1) return from_generators(1, {});
  std::vector<int> img(n);
  for (int i = 0; i < n; ++i) img[i] = (i + 1) % n;
  return from_generators(n, {Perm(img)});
}

GroupPtr PermGroup::dihedral(int order2n) {
  if (order2n < 2 || order2n % 2 != 0)
    throw precondition_error("dihedral order must be even and >= 2");
  int n = order2n / 2;
  if (n == 1) return cyclic(2);
  if (n == 2) return klein4();
  std::vector<int> rot(n), refl(n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    refl[i] = (n - i) % n;
  }
  return from_generators(n, {Perm(rot), Perm(refl)});
}

GroupPtr PermGroup::klein4() {
  return from_generators(4, {Perm::from_cycles(4, "(0 1)"),
                             Perm::from_cycles(4, "(2 3)")});
}

namespace {

// Permutations of a group's element list by left translation.
std::vector<Perm> regular_generators(const std::vector<std::vector<int>>& mult,
                                     const std::vector<int>& gen_ids) {
  std::vector<Perm> out;
  const int n = static_cast<int>(mult.size());
  for (int g : gen_ids) {
    std::vector<int> img(n);
    for (int x = 0; x < n; ++x) img[x] = mult[g][x];
    out.push_back(Perm(img));
  }
  return out;
}

}  // namespace

GroupPtr PermGroup::quaternion8() {
  // elements 1,-1,i,-i,j,-j,k,-k indexed 0..7; left regular representation
  auto mul = [](int a, int b) {
    // encode unit u in {1,i,j,k} with sign s: index = 2*u + s
    auto dec = [](int x) { return std::pair<int, int>(x / 2, x % 2); };
    auto [ua, sa] = dec(a);
    auto [ub, sb] = dec(b);
    static const int tbl[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    int u = tbl[ua][ub];
    int s = (sa + sb + sgn[ua][ub]) % 2;
    return 2 * u + s;
  };
  std::vector<std::vector<int>> table(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) table[a][b] = mul(a, b);
  return from_generators(8, regular_generators(table, {2, 4}));  // i and j
}

namespace {

// SL(2,3) and GL(2,3) acting on the 8 nonzero vectors of F_3^2.
// Vector (a, b) != (0,0) gets index counting in order
// (0,1),(0,2),(1,0),(1,1),(1,2),(2,0),(2,1),(2,2).
int f3_vec_index(int a, int b) { return a * 3 + b - 1; }

Perm matrix_action_f3(int m00, int m01, int m10, int m11) {
  std::vector<int> img(8);
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      if (a == 0 && b == 0) continue;
      int na = (m00 * a + m01 * b) % 3;
      int nb = (m10 * a + m11 * b) % 3;
      img[f3_vec_index(a, b)] = f3_vec_index(na, nb);
    }
  }
  return Perm(img);
}

}  // namespace

GroupPtr PermGroup::sl23() {
  auto g = from_generators(
      8, {matrix_action_f3(1, 1, 0, 1), matrix_action_f3(0, 2, 1, 0)});
  if (g->order() != 24) throw internal_error("SL(2,3) construction");
  return g;
}

GroupPtr PermGroup::gl23() {
  auto g = from_generators(
      8, {matrix_action_f3(1, 1, 0, 1), matrix_action_f3(0, 2, 1, 0),
          matrix_action_f3(2, 0, 0, 1)});
  if (g->order() != 48) throw internal_error("GL(2,3) construction");
  return g;
}

namespace {

bool parse_int(const std::string& s, int* out) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  *out = std::stoi(s);
  return true;
}

}  // namespace

GroupPtr PermGroup::named(const std::string& name) {
  // composites first: "AxB" direct product, "Gwr<n>" wreath
  auto wr = name.find("wr");
  if (wr != std::string::npos && wr > 0) {
    int n;
    if (parse_int(name.substr(wr + 2), &n))
      return wreath_product(named(name.substr(0, wr)), n).group;
  }
  auto cross = name.find('x');
  if (cross != std::string::npos && cross > 0)
    return direct_product(named(name.substr(0, cross)),
                          named(name.substr(cross + 1)))
        .group;

  int n;
  if (name == "K4") return klein4();
  if (name == "Q8") return quaternion8();
  if (name == "SL23") return sl23();
  if (name == "GL23") return gl23();
  if (name.size() > 1 && name[0] == 'S' && parse_int(name.substr(1), &n))
    return symmetric(n);
  if (name.size() > 1 && name[0] == 'A' && parse_int(name.substr(1), &n))
    return alternating(n);
  if (name.size() > 1 && name[0] == 'C' && parse_int(name.substr(1), &n))
    return cyclic(n);
  if (name.size() > 1 && name[0] == 'D' && parse_int(name.substr(1), &n))
    return dihedral(n);
  throw parse_error("unknown group name '" + name + "'");
}

GroupPtr PermGroup::from_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int degree = -1;
  std::vector<Perm> gens;
  while (std::getline(in, line)) {
    auto colon = line.find(':');
    if (colon == std::string::npos) continue;
    std::string key = line.substr(0, colon);
    std::string val = line.substr(colon + 1);
    key.erase(std::remove_if(key.begin(), key.end(), ::isspace), key.end());
    if (key == "degree") {
      degree = std::stoi(val);
    } else if (key == "gens") {
      if (degree < 0) throw parse_error("degree line must come first");
      // split on commas that are outside parentheses
      std::string cur;
      int depth = 0;
      auto flush = [&] {
        if (cur.find('(') != std::string::npos)
          gens.push_back(Perm::from_cycles(degree, cur));
        cur.clear();
      };
      for (char c : val) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
          flush();
        } else {
          cur += c;
        }
      }
      flush();
    }
  }
  if (degree < 0) throw parse_error("missing 'degree:' line");
  return from_generators(degree, gens);
}

// ---- subgroup queries ----

GroupPtr trivial_subgroup(const PermGroup& g) {
  return PermGroup::from_generators(g.degree(), {});
}

GroupPtr generated_subgroup(const PermGroup& g, const std::vector<Perm>& gens) {
  auto s = PermGroup::from_generators(g.degree(), gens);
  if (!g.contains_subgroup(*s))
    throw precondition_error("generators do not lie in the ambient group");
  return s;
}

GroupPtr centralizer(const PermGroup& g, const PermGroup& s) {
  std::vector<Perm> elems;
  for (const auto& x : g.elements()) {
    bool commutes = true;
    const auto& test = s.generators().empty()
                           ? std::vector<Perm>{Perm(s.degree())}
                           : s.generators();
    for (const auto& t : test) {
      if (!(x * t == t * x)) {
        commutes = false;
        break;
      }
    }
    if (commutes) elems.push_back(x);
  }
  return group_from_elements(g.degree(), std::move(elems));
}

GroupPtr centralizer_of_element(const PermGroup& g, const Perm& x) {
  std::vector<Perm> elems;
  for (const auto& y : g.elements())
    if (y * x == x * y) elems.push_back(y);
  return group_from_elements(g.degree(), std::move(elems));
}

GroupPtr normalizer(const PermGroup& g, const PermGroup& s) {
  std::set<Perm> sset(s.elements().begin(), s.elements().end());
  std::vector<Perm> elems;
  for (const auto& x : g.elements()) {
    bool normalizes = true;
    for (const auto& t : s.generators()) {
      if (!sset.count(t.conjugated_by(x))) {
        normalizes = false;
        break;
      }
    }
    if (normalizes) elems.push_back(x);
  }
  return group_from_elements(g.degree(), std::move(elems));
}

GroupPtr sylow_subgroup(const PermGroup& g, int p) {
  int64_t n = g.order();
  int64_t target = 1;
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  auto current = trivial_subgroup(g);
  while (current->order() < target) {
    auto norm = normalizer(g, *current);
    bool grew = false;
    for (const auto& x : norm->elements()) {
      int o = x.order();
      bool is_p_elem = o > 1;
      while (o % p == 0) o /= p;
      if (!is_p_elem || o != 1) continue;
      if (current->contains(x)) continue;
      std::vector<Perm> gens = current->generators();
      gens.push_back(x);
      auto next = generated_subgroup(g, gens);
      int64_t no = next->order();
      while (no % p == 0) no /= p;
      if (no == 1) {
        current = next;
        grew = true;
        break;
      }
    }
    if (!grew) throw internal_error("sylow growth stalled");
  }
  return current;
}

GroupPtr p_core(const PermGroup& g, int p) {
  auto syl = sylow_subgroup(g, p);
  std::set<Perm> inter(syl->elements().begin(), syl->elements().end());
  for (const auto& x : g.elements()) {
    std::set<Perm> conj;
    for (const auto& s : syl->elements()) conj.insert(s.conjugated_by(x));
    std::set<Perm> keep;
    for (const auto& e : inter)
      if (conj.count(e)) keep.insert(e);
    inter = std::move(keep);
    if (inter.size() == 1) break;
  }
  return group_from_elements(g.degree(),
                             std::vector<Perm>(inter.begin(), inter.end()));
}

GroupPtr center(const PermGroup& g) { return centralizer(g, g); }

bool is_normal(const PermGroup& g, const PermGroup& s) {
  std::set<Perm> sset(s.elements().begin(), s.elements().end());
  for (const auto& x : g.generators())
    for (const auto& t : s.generators())
      if (!sset.count(t.conjugated_by(x))) return false;
  return true;
}

GroupPtr setwise_stabilizer(const PermGroup& g, const std::vector<int>& points) {
  std::set<int> pts(points.begin(), points.end());
  std::vector<Perm> elems;
  for (const auto& x : g.elements()) {
    bool stab = true;
    for (int pt : pts) {
      if (!pts.count(x[pt])) {
        stab = false;
        break;
      }
    }
    if (stab) elems.push_back(x);
  }
  return group_from_elements(g.degree(), std::move(elems));
}

GroupPtr intersect(const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> elems;
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& big = a.order() <= b.order() ? b : a;
  for (const auto& x : small.elements())
    if (big.contains(x)) elems.push_back(x);
  return group_from_elements(a.degree(), std::move(elems));
}

GroupPtr join_subgroups(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return generated_subgroup(g, gens);
}

GroupPtr conjugate_subgroup(const PermGroup& g, const PermGroup& s, const Perm& x) {
  std::vector<Perm> elems;
  elems.reserve(s.order());
  for (const auto& e : s.elements()) elems.push_back(e.conjugated_by(x));
  (void)g;
  return group_from_elements(s.degree(), std::move(elems));
}

bool subgroups_equal(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() &&
         a.elements() == b.elements();
}

bool subgroups_conjugate(const PermGroup& g, const PermGroup& a, const PermGroup& b) {
  if (a.order() != b.order()) return false;
  for (const auto& x : g.elements())
    if (subgroups_equal(*conjugate_subgroup(g, a, x), b)) return true;
  return false;
}

// ---- homomorphisms ----

GroupHom::GroupHom(GroupPtr src, GroupPtr dst, std::vector<int> element_image)
    : src_(std::move(src)), dst_(std::move(dst)), img_(std::move(element_image)) {
  if (img_.size() != static_cast<size_t>(src_->order()))
    throw precondition_error("element map has wrong size");
  // verify products map consistently
  for (int i = 0; i < src_->order(); ++i) {
    for (const auto& s : src_->generators()) {
      int j = src_->index_of(src_->element(i) * s);
      int expect = dst_->index_of(dst_->element(img_[i]) *
                                  dst_->element(img_[src_->index_of(s)]));
      if (img_[j] != expect)
        throw precondition_error("generator images do not define a homomorphism");
    }
  }
}

GroupHom GroupHom::from_generator_images(GroupPtr src, GroupPtr dst,
                                         const std::vector<Perm>& gen_images) {
  if (gen_images.size() != src->generators().size())
    throw precondition_error("need one image per generator");
  std::vector<int> img(src->order(), -1);
  img[src->identity_index()] = dst->identity_index();
  // BFS along right multiplication by generators
  std::queue<int> work;
  work.push(src->identity_index());
  while (!work.empty()) {
    int cur = work.front();
    work.pop();
    for (size_t k = 0; k < gen_images.size(); ++k) {
      int nxt = src->index_of(src->element(cur) * src->generators()[k]);
      int val = dst->index_of(dst->element(img[cur]) * gen_images[k]);
      if (img[nxt] < 0) {
        img[nxt] = val;
        work.push(nxt);
      } else if (img[nxt] != val) {
        throw precondition_error("generator images do not define a homomorphism");
      }
    }
  }
  for (int v : img)
    if (v < 0) throw internal_error("homomorphism propagation incomplete");
  return GroupHom(std::move(src), std::move(dst), std::move(img));
}

Perm GroupHom::apply(const Perm& p) const {
  return dst_->element(img_[src_->index_of(p)]);
}

bool GroupHom::is_surjective() const {
  std::set<int> image(img_.begin(), img_.end());
  return static_cast<int64_t>(image.size()) == dst_->order();
}

GroupPtr GroupHom::kernel() const {
  std::vector<Perm> elems;
  for (int i = 0; i < src_->order(); ++i)
    if (img_[i] == dst_->identity_index()) elems.push_back(src_->element(i));
  return group_from_elements(src_->degree(), std::move(elems));
}

// ---- quotient ----

QuotientData quotient(GroupPtr g, GroupPtr n) {
  if (!g->contains_subgroup(*n) || !is_normal(*g, *n))
    throw precondition_error("quotient requires a normal subgroup");
  const int64_t size = g->order();
  // coset representative: minimal element index in the coset N*x
  std::vector<int> coset_rep(size, -1);
  for (int i = 0; i < size; ++i) {
    if (coset_rep[i] >= 0) continue;
    std::vector<int> members;
    int mn = i;
    for (const auto& nn : n->elements()) {
      int j = g->index_of(nn * g->element(i));
      members.push_back(j);
      mn = std::min(mn, j);
    }
    for (int j : members) coset_rep[j] = mn;
  }
  // number cosets by ascending representative (identity coset first)
  std::vector<int> reps;
  for (int i = 0; i < size; ++i)
    if (coset_rep[i] == i) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  std::map<int, int> coset_id;
  for (size_t c = 0; c < reps.size(); ++c) coset_id[reps[c]] = static_cast<int>(c);

  const int q_degree = static_cast<int>(reps.size());
  // left multiplication on cosets (N normal, so gN = Ng as sets)
  auto act = [&](const Perm& x) {
    std::vector<int> img(q_degree);
    for (int c = 0; c < q_degree; ++c) {
      int moved = g->index_of(x * g->element(reps[c]));
      img[c] = coset_id.at(coset_rep[moved]);
    }
    return Perm(img);
  };
  std::vector<Perm> qgens;
  for (const auto& s : g->generators()) qgens.push_back(act(s));
  auto q = PermGroup::from_generators(q_degree, qgens);
  if (q->order() * n->order() != g->order())
    throw internal_error("quotient order mismatch");
  std::vector<int> elem_img(size);
  for (int i = 0; i < size; ++i) elem_img[i] = q->index_of(act(g->element(i)));
  QuotientData out;
  out.group = q;
  out.projection = GroupHom(g, q, std::move(elem_img));
  return out;
}

// ---- products ----

Perm DirectProductData::embed(const Perm& a, const Perm& b) const {
  const int d1 = factor1->degree(), d2 = factor2->degree();
  std::vector<int> img(d1 + d2);
  for (int i = 0; i < d1; ++i) img[i] = a[i];
  for (int i = 0; i < d2; ++i) img[d1 + i] = d1 + b[i];
  return Perm(img);
}

Perm DirectProductData::project1(const Perm& w) const {
  const int d1 = factor1->degree();
  std::vector<int> img(d1);
  for (int i = 0; i < d1; ++i) img[i] = w[i];
  return Perm(img);
}

Perm DirectProductData::project2(const Perm& w) const {
  const int d1 = factor1->degree(), d2 = factor2->degree();
  std::vector<int> img(d2);
  for (int i = 0; i < d2; ++i) img[i] = w[d1 + i] - d1;
  return Perm(img);
}

DirectProductData direct_product(GroupPtr a, GroupPtr b) {
  DirectProductData d;
  d.factor1 = a;
  d.factor2 = b;
  std::vector<Perm> gens;
  for (const auto& s : a->generators()) gens.push_back(d.embed(s, Perm(b->degree())));
  for (const auto& s : b->generators()) gens.push_back(d.embed(Perm(a->degree()), s));
  d.group = PermGroup::from_generators(a->degree() + b->degree(), gens);
  if (d.group->order() != a->order() * b->order())
    throw internal_error("direct product order mismatch");
  return d;
}

Perm WreathProductData::embed(const std::vector<Perm>& comps, const Perm& top) const {
  const int d = base->degree();
  const int n = copies;
  std::vector<int> img(n * d + n);
  // w = base(comps) * top(tau): block i -> block tau(i), then comps applied
  // inside the target block.
  for (int i = 0; i < n; ++i) {
    int ti = top[i];
    for (int x = 0; x < d; ++x) img[i * d + x] = ti * d + comps[ti][x];
    img[n * d + i] = n * d + ti;
  }
  return Perm(img);
}

void WreathProductData::decode(const Perm& w, std::vector<Perm>* comps,
                               Perm* top) const {
  const int d = base->degree();
  const int n = copies;
  std::vector<int> timg(n);
  for (int i = 0; i < n; ++i) timg[i] = w[n * d + i] - n * d;
  Perm tau(timg);
  if (top) *top = tau;
  if (comps) {
    comps->assign(n, Perm(d));
    for (int i = 0; i < n; ++i) {
      int ti = tau[i];
      std::vector<int> img(d);
      for (int x = 0; x < d; ++x) {
        int y = w[i * d + x];
        if (y / d != ti) throw internal_error("wreath element is not block-aligned");
        img[x] = y % d;
      }
      (*comps)[ti] = Perm(img);
    }
  }
}

GroupPtr WreathProductData::base_subgroup() const {
  std::vector<Perm> gens;
  const Perm id_top(copies);
  for (int i = 0; i < copies; ++i) {
    for (const auto& s : base->generators()) {
      std::vector<Perm> comps(copies, Perm(base->degree()));
      comps[i] = s;
      gens.push_back(embed(comps, id_top));
    }
  }
  return generated_subgroup(*group, gens);
}

WreathProductData wreath_product(GroupPtr g, int copies) {
  if (copies < 1) throw precondition_error("wreath copies must be >= 1");
  WreathProductData w;
  w.base = g;
  w.copies = copies;
  const int d = g->degree();
  std::vector<Perm> gens;
  {
    WreathProductData tmp = w;  // embed() needs base/copies only
    for (const auto& s : g->generators()) {
      std::vector<Perm> comps(copies, Perm(d));
      comps[0] = s;
      gens.push_back(tmp.embed(comps, Perm(copies)));
    }
    auto sym = PermGroup::symmetric(copies);
    for (const auto& t : sym->generators())
      gens.push_back(tmp.embed(std::vector<Perm>(copies, Perm(d)), t));
  }
  w.group = PermGroup::from_generators(copies * d + copies, gens);
  int64_t expect = 1;
  for (int i = 0; i < copies; ++i) expect *= g->order();
  for (int i = 2; i <= copies; ++i) expect *= i;
  if (w.group->order() != expect) throw internal_error("wreath order mismatch");
  return w;
}

// ---- p-subgroups and lattices ----

namespace {

std::vector<int> element_index_set(const PermGroup& g, const PermGroup& s) {
  std::vector<int> idx;
  idx.reserve(s.order());
  for (const auto& e : s.elements()) idx.push_back(g.index_of(e));
  std::sort(idx.begin(), idx.end());
  return idx;
}

// Lexicographically smallest conjugate of s in g, as an element-index set.
std::vector<int> canonical_conjugate(const PermGroup& g, const PermGroup& s) {
  std::vector<int> best;
  for (const auto& x : g.elements()) {
    std::vector<int> idx;
    idx.reserve(s.order());
    for (const auto& e : s.elements()) idx.push_back(g.index_of(e.conjugated_by(x)));
    std::sort(idx.begin(), idx.end());
    if (best.empty() || idx < best) best = std::move(idx);
  }
  return best;
}

}  // namespace

std::vector<GroupPtr> p_subgroup_classes(const PermGroup& g, int p) {
  auto syl = sylow_subgroup(g, p);
  // all subgroups of the Sylow group: each subgroup of order p^k arises
  // from a normal subgroup of index p, so grow level by level
  std::set<std::vector<int>> all;  // element-index sets in g
  std::vector<GroupPtr> level{trivial_subgroup(g)};
  all.insert(element_index_set(g, *level[0]));
  std::vector<GroupPtr> subgroups = level;
  while (!level.empty()) {
    std::vector<GroupPtr> next;
    for (const auto& t : level) {
      auto norm = normalizer(*syl, *t);
      for (const auto& x : norm->elements()) {
        if (t->contains(x)) continue;
        // need x^p in t so that <t, x> has order p*|t|
        Perm power = x;
        for (int i = 1; i < p; ++i) power = power * x;
        if (!t->contains(power)) continue;
        std::vector<Perm> gens = t->generators();
        gens.push_back(x);
        auto u = generated_subgroup(g, gens);
        auto key = element_index_set(g, *u);
        if (all.insert(key).second) {
          next.push_back(u);
          subgroups.push_back(u);
        }
      }
    }
    level = std::move(next);
  }
  // fuse into conjugacy classes with canonical representatives
  std::set<std::vector<int>> canon_seen;
  std::vector<std::pair<std::vector<int>, GroupPtr>> reps;
  for (const auto& s : subgroups) {
    auto canon = canonical_conjugate(g, *s);
    if (canon_seen.insert(canon).second) {
      std::vector<Perm> elems;
      for (int i : canon) elems.push_back(g.element(i));
      reps.emplace_back(canon, group_from_elements(g.degree(), std::move(elems)));
    }
  }
  std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
    if (a.second->order() != b.second->order())
      return a.second->order() < b.second->order();
    return a.first < b.first;
  });
  std::vector<GroupPtr> out;
  for (auto& r : reps) out.push_back(std::move(r.second));
  return out;
}

std::vector<GroupPtr> all_subgroups(const PermGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<GroupPtr> out;
  auto triv = trivial_subgroup(g);
  seen.insert(element_index_set(g, *triv));
  out.push_back(triv);
  size_t frontier = 0;
  while (frontier < out.size()) {
    auto h = out[frontier++];
    for (const auto& x : g.elements()) {
      if (h->contains(x)) continue;
      std::vector<Perm> gens = h->generators();
      gens.push_back(x);
      auto j = generated_subgroup(g, gens);
      auto key = element_index_set(g, *j);
      if (seen.insert(key).second) out.push_back(j);
    }
  }
  std::sort(out.begin(), out.end(), [&](const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return element_index_set(g, *a) < element_index_set(g, *b);
  });
  return out;
}

std::vector<GroupPtr> subgroups_between(GroupPtr g, GroupPtr n) {
  auto q = quotient(g, n);
  std::vector<GroupPtr> out;
  for (const auto& sub : all_subgroups(*q.group)) {
    std::vector<Perm> elems;
    for (int i = 0; i < g->order(); ++i)
      if (sub->contains(q.group->element(q.projection.apply_index(i))))
        elems.push_back(g->element(i));
    out.push_back(group_from_elements(g->degree(), std::move(elems)));
  }
  return out;
}

std::vector<GroupPtr> cyclic_over(GroupPtr g, GroupPtr n) {
  std::set<std::vector<int>> seen;
  std::vector<GroupPtr> out;
  for (const auto& x : g->elements()) {
    std::vector<Perm> gens = n->generators();
    gens.push_back(x);
    auto j = generated_subgroup(*g, gens);
    auto key = element_index_set(*g, *j);
    if (seen.insert(key).second) out.push_back(j);
  }
  std::sort(out.begin(), out.end(), [&](const GroupPtr& a, const GroupPtr& b) {
    if (a->order() != b->order()) return a->order() < b->order();
    return element_index_set(*g, *a) < element_index_set(*g, *b);
  });
  return out;
}

}  // namespace ctl
