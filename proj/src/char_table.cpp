#include "ctl/char_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace ctl {

int64_t p_part(int64_t n, int p) {
  int64_t q = 1;
  while (n % p == 0) {
    n /= p;
    q *= p;
  }
  return q;
}

Character::Character(GroupPtr g, std::vector<Cyclotomic> values)
    : g_(std::move(g)), values_(std::move(values)) {
  if (values_.size() != static_cast<size_t>(g_->num_classes()))
    throw precondition_error("character value count != class count");
}

namespace {

// groups may be structurally equal without being the same object
bool same_group(const GroupPtr& a, const GroupPtr& b) {
  return a == b || subgroups_equal(*a, *b);
}

}  // namespace

Cyclotomic Character::value_at(const Perm& x) const {
  return values_[g_->class_of(g_->index_of(x))];
}

int64_t Character::degree() const {
  return values_[0].rational_value().as_integer();
}

Character operator+(const Character& a, const Character& b) {
  if (!same_group(a.g_, b.g_))
    throw precondition_error("characters on different groups");
  std::vector<Cyclotomic> v(a.values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] + b.values_[i];
  return Character(a.g_, std::move(v));
}

Character operator*(const Character& a, const Character& b) {
  if (!same_group(a.g_, b.g_))
    throw precondition_error("characters on different groups");
  std::vector<Cyclotomic> v(a.values_.size());
  for (size_t i = 0; i < v.size(); ++i) v[i] = a.values_[i] * b.values_[i];
  return Character(a.g_, std::move(v));
}

bool operator==(const Character& a, const Character& b) {
  return same_group(a.g_, b.g_) && a.values_ == b.values_;
}

Cyclotomic Character::inner(const Character& other) const {
  if (!same_group(g_, other.g_))
    throw precondition_error("characters on different groups");
  const auto& cls = g_->classes();
  Cyclotomic sum;
  for (size_t c = 0; c < cls.size(); ++c) {
    int inv_class = g_->class_of(g_->inv(cls[c].rep));
    sum += Cyclotomic(Rational(static_cast<int64_t>(cls[c].members.size()))) *
           values_[c] * other.values_[inv_class];
  }
  return sum * Cyclotomic(Rational(1, g_->order()));
}

bool Character::is_irreducible() const {
  return inner(*this) == Cyclotomic(1) && values_[0].rational_value().num() > 0;
}

Character Character::conjugate_by(const Perm& x) const {
  std::vector<Cyclotomic> v(values_.size());
  const auto& cls = g_->classes();
  for (size_t c = 0; c < cls.size(); ++c) {
    Perm moved = x * g_->element(cls[c].rep) * x.inverse();
    v[c] = values_[g_->class_of(g_->index_of(moved))];
  }
  return Character(g_, std::move(v));
}

Character Character::complex_conjugate() const {
  std::vector<Cyclotomic> v(values_.size());
  for (size_t i = 0; i < values_.size(); ++i) v[i] = values_[i].conj();
  return Character(g_, std::move(v));
}

int Character::linear_order() const {
  if (degree() != 1) throw precondition_error("order of a non-linear character");
  Character acc = *this;
  Character triv = trivial_character(g_);
  int o = 1;
  while (!(acc == triv)) {
    acc = acc * (*this);
    ++o;
    if (o > g_->exponent()) throw internal_error("linear order overflow");
  }
  return o;
}

GroupPtr Character::kernel() const {
  std::vector<Perm> elems;
  const Cyclotomic deg = values_[0];
  for (int i = 0; i < g_->order(); ++i)
    if (values_[g_->class_of(i)] == deg) elems.push_back(g_->element(i));
  return group_from_elements(g_->degree(), std::move(elems));
}

Character trivial_character(GroupPtr g) {
  std::vector<Cyclotomic> v(g->num_classes(), Cyclotomic(1));
  return Character(std::move(g), std::move(v));
}

// ---------- Dixon–Schneider table computation ----------

namespace {

int64_t mod_pow(int64_t b, int64_t e, int64_t m) {
  int64_t acc = 1;
  b %= m;
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * b % m;
    b = b * b % m;
  }
  return acc;
}

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

struct ModField {
  int64_t p;
  int64_t add(int64_t a, int64_t b) const { return (a + b) % p; }
  int64_t sub(int64_t a, int64_t b) const { return ((a - b) % p + p) % p; }
  int64_t mul(int64_t a, int64_t b) const { return a * b % p; }
  int64_t inv(int64_t a) const { return mod_pow(a, p - 2, p); }
};

using ModVec = std::vector<int64_t>;
using ModMat = std::vector<ModVec>;  // row major, square or rectangular

// Nullspace basis of m (rows x cols) over F_p, as a list of column vectors.
std::vector<ModVec> mod_nullspace(ModMat m, const ModField& F) {
  if (m.empty()) return {};
  const int rows = static_cast<int>(m.size());
  const int cols = static_cast<int>(m[0].size());
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int pr = -1;
    for (int r = row; r < rows; ++r)
      if (m[r][col] != 0) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    std::swap(m[pr], m[row]);
    int64_t inv = F.inv(m[row][col]);
    for (int c = 0; c < cols; ++c) m[row][c] = F.mul(m[row][c], inv);
    for (int r = 0; r < rows; ++r) {
      if (r == row || m[r][col] == 0) continue;
      int64_t f = m[r][col];
      for (int c = 0; c < cols; ++c)
        m[r][c] = F.sub(m[r][c], F.mul(f, m[row][c]));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<ModVec> basis;
  size_t pi = 0;
  for (int col = 0; col < cols; ++col) {
    if (pi < pivot_col.size() && pivot_col[pi] == col) {
      ++pi;
      continue;
    }
    ModVec v(cols, 0);
    v[col] = 1;
    for (size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = F.sub(0, m[r][col]);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Characteristic polynomial of a square matrix over F_p by interpolation of
// det(tI - M) at distinct points.
ModVec char_poly(const ModMat& m, const ModField& F) {
  const int n = static_cast<int>(m.size());
  std::vector<int64_t> xs(n + 1), ys(n + 1);
  for (int t = 0; t <= n; ++t) {
    ModMat a = m;
    for (int i = 0; i < n; ++i) a[i][i] = F.sub(t, a[i][i]);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) a[i][j] = F.sub(0, m[i][j]);
    // det(tI - M) by elimination
    int64_t det = 1;
    for (int col = 0; col < n; ++col) {
      int pr = -1;
      for (int r = col; r < n; ++r)
        if (a[r][col] != 0) {
          pr = r;
          break;
        }
      if (pr < 0) {
        det = 0;
        break;
      }
      if (pr != col) {
        std::swap(a[pr], a[col]);
        det = F.sub(0, det);
      }
      det = F.mul(det, a[col][col]);
      int64_t inv = F.inv(a[col][col]);
      for (int r = col + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        int64_t f = F.mul(a[r][col], inv);
        for (int c = col; c < n; ++c) a[r][c] = F.sub(a[r][c], F.mul(f, a[col][c]));
      }
    }
    xs[t] = t;
    ys[t] = det;
  }
  // Lagrange interpolation to coefficients
  ModVec poly(n + 1, 0);
  for (int i = 0; i <= n; ++i) {
    // basis polynomial prod_{j != i} (x - xs[j]) / (xs[i] - xs[j])
    ModVec num(1, 1);
    int64_t den = 1;
    for (int j = 0; j <= n; ++j) {
      if (j == i) continue;
      ModVec nxt(num.size() + 1, 0);
      for (size_t k = 0; k < num.size(); ++k) {
        nxt[k + 1] = F.add(nxt[k + 1], num[k]);
        nxt[k] = F.sub(nxt[k], F.mul(num[k], xs[j]));
      }
      num = std::move(nxt);
      den = F.mul(den, F.sub(xs[i], xs[j]));
    }
    int64_t scale = F.mul(ys[i], F.inv(den));
    for (size_t k = 0; k < num.size(); ++k)
      poly[k] = F.add(poly[k], F.mul(num[k], scale));
  }
  return poly;
}

int64_t poly_eval(const ModVec& poly, int64_t x, const ModField& F) {
  int64_t acc = 0;
  for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
    acc = F.add(F.mul(acc, x), poly[i]);
  return acc;
}

}  // namespace

std::shared_ptr<const CharacterTable> build_table(GroupPtr g) {
  const auto& cls = g->classes();
  const int k = static_cast<int>(cls.size());
  const int64_t n = g->order();
  const int e = g->exponent();

  // prime l == 1 mod exponent, l > 2|G|
  int64_t l = e + 1;
  while (l <= 2 * n || !is_prime(l)) l += e;
  ModField F{l};

  const auto& sc = g->structure_constants();

  // class-multiplication matrices: (A_i)_{j,t} = a[i][j][t] so that
  // (A_i * v)_j = sum_t a[i][j][t] v_t = lambda_i v_j for v_t = lambda(C_t)
  auto class_matrix = [&](int i) {
    ModMat m(k, ModVec(k, 0));
    for (int j = 0; j < k; ++j)
      for (int t = 0; t < k; ++t) m[j][t] = sc[i][j][t] % l;
    return m;
  };

  // split the common eigenspaces
  std::vector<std::vector<ModVec>> spaces;  // each: list of basis columns
  {
    std::vector<ModVec> whole;
    for (int j = 0; j < k; ++j) {
      ModVec v(k, 0);
      v[j] = 1;
      whole.push_back(std::move(v));
    }
    spaces.push_back(std::move(whole));
  }
  for (int i = 1; i < k; ++i) {
    ModMat ai = class_matrix(i);
    std::vector<std::vector<ModVec>> next;
    for (auto& space : spaces) {
      const int m = static_cast<int>(space.size());
      if (m == 1) {
        next.push_back(std::move(space));
        continue;
      }
      // restricted matrix M with A_i * B = B * M (B: k x m)
      // columns of B are space[0..m-1]; solve for M column by column
      // Build k x m system matrix once (it has full column rank m).
      ModMat bsys(k, ModVec(m, 0));
      for (int c = 0; c < m; ++c)
        for (int r = 0; r < k; ++r) bsys[r][c] = space[c][r];
      // For solving, row-reduce [B | rhs...] with all rhs together.
      ModMat aug(k, ModVec(m + m, 0));
      // rhs columns: A_i * space[c]
      for (int c = 0; c < m; ++c) {
        for (int r = 0; r < k; ++r) {
          int64_t acc = 0;
          for (int t = 0; t < k; ++t)
            if (ai[r][t] && space[c][t]) acc = F.add(acc, F.mul(ai[r][t], space[c][t]));
          aug[r][m + c] = acc;
        }
      }
      for (int r = 0; r < k; ++r)
        for (int c = 0; c < m; ++c) aug[r][c] = bsys[r][c];
      // eliminate
      int row = 0;
      std::vector<int> pivots;
      for (int col = 0; col < m && row < k; ++col) {
        int pr = -1;
        for (int r = row; r < k; ++r)
          if (aug[r][col] != 0) {
            pr = r;
            break;
          }
        if (pr < 0) throw internal_error("eigenspace basis not independent");
        std::swap(aug[pr], aug[row]);
        int64_t inv = F.inv(aug[row][col]);
        for (int c = 0; c < 2 * m; ++c) aug[row][c] = F.mul(aug[row][c], inv);
        for (int r = 0; r < k; ++r) {
          if (r == row || aug[r][col] == 0) continue;
          int64_t f = aug[r][col];
          for (int c = 0; c < 2 * m; ++c)
            aug[r][c] = F.sub(aug[r][c], F.mul(f, aug[row][c]));
        }
        pivots.push_back(col);
        ++row;
      }
      ModMat mm(m, ModVec(m, 0));  // restricted operator
      for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c) mm[r][c] = aug[r][m + c];
      // eigenvalues: roots of char poly, ascending
      ModVec poly = char_poly(mm, F);
      std::vector<int64_t> roots;
      for (int64_t t = 0; t < l; ++t)
        if (poly_eval(poly, t, F) == 0) roots.push_back(t);
      bool split_done = false;
      for (int64_t root : roots) {
        ModMat shifted = mm;
        for (int d = 0; d < m; ++d) shifted[d][d] = F.sub(shifted[d][d], root);
        auto inner = mod_nullspace(shifted, F);
        if (inner.empty()) continue;
        // map back: columns space * w
        std::vector<ModVec> sub;
        for (auto& w : inner) {
          ModVec v(k, 0);
          for (int c = 0; c < m; ++c) {
            if (!w[c]) continue;
            for (int r = 0; r < k; ++r)
              v[r] = F.add(v[r], F.mul(space[c][r], w[c]));
          }
          sub.push_back(std::move(v));
        }
        next.push_back(std::move(sub));
        split_done = true;
      }
      if (!split_done) throw internal_error("class matrix produced no eigenvalues");
    }
    spaces = std::move(next);
    bool all_one = true;
    for (auto& s : spaces)
      if (s.size() != 1) all_one = false;
    if (all_one) break;
  }
  if (static_cast<int>(spaces.size()) != k)
    throw internal_error("character table: eigenspace count mismatch");

  // lambda vectors: normalize so entry at the identity class is 1
  std::vector<ModVec> lambda;
  for (auto& s : spaces) {
    ModVec v = s[0];
    if (v[0] == 0) throw internal_error("lambda vector vanishes at identity");
    int64_t inv = F.inv(v[0]);
    for (auto& x : v) x = F.mul(x, inv);
    lambda.push_back(std::move(v));
  }

  // degrees: d^2 = |G| / sum_j v_j * v_{j*} / |C_j|
  std::vector<int64_t> inv_class(k);
  for (int j = 0; j < k; ++j) inv_class[j] = g->class_of(g->inv(cls[j].rep));
  std::vector<int64_t> degree(k);
  std::vector<ModVec> chi_mod(k, ModVec(k, 0));
  for (int i = 0; i < k; ++i) {
    int64_t s = 0;
    for (int j = 0; j < k; ++j) {
      int64_t cj = static_cast<int64_t>(cls[j].members.size()) % l;
      s = F.add(s, F.mul(F.mul(lambda[i][j], lambda[i][inv_class[j]]),
                         F.inv(cj)));
    }
    int64_t d2 = F.mul(n % l, F.inv(s));
    int64_t d = -1;
    for (int64_t t = 1; t * t <= n; ++t) {
      if (F.mul(t % l, t % l) == d2) {
        d = t;
        break;
      }
    }
    if (d < 0) throw internal_error("character degree not found");
    degree[i] = d;
    for (int j = 0; j < k; ++j) {
      int64_t cj = static_cast<int64_t>(cls[j].members.size()) % l;
      chi_mod[i][j] = F.mul(F.mul(d % l, lambda[i][j]), F.inv(cj));
    }
  }

  // power map on classes and the compatible root of unity system:
  // fix a generator z of F_l^*, zeta_e := z^((l-1)/e), zeta_o := zeta_e^(e/o)
  int64_t gen = 2;
  for (;; ++gen) {
    int64_t ordv = 1;
    int64_t acc = gen % l;
    while (acc != 1) {
      acc = acc * gen % l;
      ++ordv;
    }
    if (ordv == l - 1) break;
  }
  const int64_t zeta_e = mod_pow(gen, (l - 1) / e, l);

  std::vector<std::vector<int>> power_class(k);
  for (int j = 0; j < k; ++j) {
    int o = cls[j].element_order;
    power_class[j].resize(o);
    Perm p(g->degree());
    const Perm& rep = g->element(cls[j].rep);
    for (int u = 0; u < o; ++u) {
      power_class[j][u] = g->class_of(g->index_of(p));
      p = p * rep;
    }
  }

  // lift each chi(g_j) to an exact cyclotomic via eigenvalue multiplicities
  std::vector<Character> irr;
  for (int i = 0; i < k; ++i) {
    std::vector<Cyclotomic> vals(k);
    for (int j = 0; j < k; ++j) {
      const int o = cls[j].element_order;
      const int64_t zeta_o = mod_pow(zeta_e, e / o, l);
      Cyclotomic total = Cyclotomic::zero_at(e);
      const int64_t o_inv = F.inv(o % l);
      for (int s = 0; s < o; ++s) {
        // multiplicity of zeta_o^s among the eigenvalues of the image of g_j
        int64_t a = 0;
        for (int u = 0; u < o; ++u) {
          int64_t term = F.mul(chi_mod[i][power_class[j][u]],
                               mod_pow(zeta_o, ((int64_t)(o - s) * u) % o, l));
          a = F.add(a, term);
        }
        a = F.mul(a, o_inv);
        if (a > degree[i])
          throw internal_error("eigenvalue multiplicity out of range");
        if (a != 0)
          total += Cyclotomic::root_of_unity(e, static_cast<int64_t>(e / o) * s) *
                   Cyclotomic(Rational(a));
      }
      vals[j] = total;
    }
    irr.emplace_back(g, std::move(vals));
  }

  // deterministic order: degree, then value tuple
  std::sort(irr.begin(), irr.end(), [](const Character& a, const Character& b) {
    const auto& av = a.values();
    const auto& bv = b.values();
    if (!(av[0] == bv[0]))
      return av[0].rational_value() < bv[0].rational_value();
    for (size_t j = 1; j < av.size(); ++j) {
      int c = Cyclotomic::cmp(av[j], bv[j]);
      if (c != 0) return c < 0;
    }
    return false;
  });

  auto table = std::shared_ptr<CharacterTable>(new CharacterTable());
  table->g_ = g;
  table->irr_ = std::move(irr);
  table->verify_orthogonality();
  return table;
}

std::shared_ptr<const CharacterTable> CharacterTable::of(GroupPtr g) {
  if (!g->table_cache) g->table_cache = build_table(g);
  return g->table_cache;
}

int CharacterTable::index_of(const Character& chi) const {
  for (int i = 0; i < size(); ++i)
    if (irr_[i] == chi) return i;
  throw precondition_error("character is not in the table");
}

void CharacterTable::verify_orthogonality() const {
  const auto& cls = g_->classes();
  const int k = size();
  // rows
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cyclotomic ip = irr_[i].inner(irr_[j]);
      if (!(ip == Cyclotomic(i == j ? 1 : 0)))
        throw internal_error("row orthogonality failed");
    }
  // columns
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Cyclotomic sum;
      int binv = g_->class_of(g_->inv(cls[b].rep));
      for (int i = 0; i < k; ++i)
        sum += irr_[i].value_on_class(a) * irr_[i].value_on_class(binv);
      int64_t centralizer_order = g_->order() / cls[a].members.size();
      Cyclotomic expect(Rational(a == b ? centralizer_order : 0));
      if (!(sum == expect)) throw internal_error("column orthogonality failed");
    }
}

// ---------- character-level operations ----------

Character restrict_to(const Character& chi, GroupPtr h) {
  if (!chi.group()->contains_subgroup(*h))
    throw precondition_error("restriction target is not a subgroup");
  const auto& cls = h->classes();
  std::vector<Cyclotomic> v(cls.size());
  for (size_t c = 0; c < cls.size(); ++c)
    v[c] = chi.value_at(h->element(cls[c].rep));
  return Character(std::move(h), std::move(v));
}

Character induce_to(const Character& theta, GroupPtr g) {
  const GroupPtr& h = theta.group();
  if (!g->contains_subgroup(*h))
    throw precondition_error("induction source is not a subgroup");
  const auto& cls = g->classes();
  std::vector<Cyclotomic> v(cls.size());
  for (size_t c = 0; c < cls.size(); ++c) {
    const Perm& rep = g->element(cls[c].rep);
    Cyclotomic sum;
    for (const auto& x : g->elements()) {
      Perm moved = x * rep * x.inverse();
      if (h->contains(moved)) sum += theta.value_at(moved);
    }
    v[c] = sum.divide_exact(h->order());
  }
  return Character(std::move(g), std::move(v));
}

std::vector<std::pair<int, int64_t>> decompose(const Character& f) {
  auto table = CharacterTable::of(f.group());
  std::vector<std::pair<int, int64_t>> out;
  for (int i = 0; i < table->size(); ++i) {
    Cyclotomic m = f.inner(table->irr(i));
    if (m.is_zero()) continue;
    int64_t mult = m.rational_value().as_integer();
    if (mult < 0) throw precondition_error("not a character: negative multiplicity");
    out.emplace_back(i, mult);
  }
  return out;
}

Character inflate(const Character& chi_q, const GroupHom& proj) {
  const GroupPtr& src = proj.source();
  std::vector<Cyclotomic> v(src->num_classes());
  const auto& cls = src->classes();
  for (size_t c = 0; c < cls.size(); ++c)
    v[c] = chi_q.value_at(proj.apply(src->element(cls[c].rep)));
  return Character(src, std::move(v));
}

Character deflate(const Character& chi, const GroupHom& proj) {
  const GroupPtr& src = proj.source();
  const GroupPtr& dst = proj.target();
  if (chi.group() != src) throw precondition_error("deflate: wrong group");
  // chi must be constant on fibers; evaluate on any preimage
  std::vector<Cyclotomic> v(dst->num_classes());
  std::vector<char> have(dst->num_classes(), 0);
  for (int i = 0; i < src->order(); ++i) {
    int c = dst->class_of(proj.apply_index(i));
    Cyclotomic val = chi.value_on_class(src->class_of(i));
    if (!have[c]) {
      v[c] = val;
      have[c] = 1;
    }
  }
  Character out(dst, std::move(v));
  if (!(inflate(out, proj) == chi))
    throw precondition_error("character is not trivial on the kernel");
  return out;
}

std::vector<int> irr_over(GroupPtr g, const Character& theta) {
  auto table = CharacterTable::of(g);
  std::vector<int> out;
  for (int i = 0; i < table->size(); ++i) {
    Character res = restrict_to(table->irr(i), theta.group());
    if (!res.inner(theta).is_zero()) out.push_back(i);
  }
  return out;
}

std::vector<int> dz_set(GroupPtr g, int p) {
  auto table = CharacterTable::of(g);
  std::vector<int> out;
  const int64_t gp = p_part(g->order(), p);
  for (int i = 0; i < table->size(); ++i)
    if (p_part(table->irr(i).degree(), p) == gp) out.push_back(i);
  return out;
}

std::vector<int> rdz_set(GroupPtr g, GroupPtr n, const Character& theta, int p) {
  auto table = CharacterTable::of(g);
  std::vector<int> out;
  const int64_t index_p = p_part(g->order() / n->order(), p);
  for (int i : irr_over(g, theta)) {
    const Character& chi = table->irr(i);
    if (p_part(chi.degree(), p) == p_part(theta.degree(), p) * index_p)
      out.push_back(i);
  }
  return out;
}

std::vector<int> lin_set(GroupPtr g) {
  auto table = CharacterTable::of(g);
  std::vector<int> out;
  for (int i = 0; i < table->size(); ++i)
    if (table->irr(i).degree() == 1) out.push_back(i);
  return out;
}

std::vector<int> lin_pprime_set(GroupPtr g, int p) {
  std::vector<int> out;
  auto table = CharacterTable::of(g);
  for (int i : lin_set(g))
    if (table->irr(i).linear_order() % p != 0) out.push_back(i);
  return out;
}

bool is_invariant_under(const Character& theta, const PermGroup& j) {
  for (const auto& x : j.generators())
    if (!(theta.conjugate_by(x) == theta)) return false;
  return true;
}

std::vector<Character> extensions_of(const Character& theta, GroupPtr j) {
  if (!j->contains_subgroup(*theta.group()))
    throw precondition_error("extension target does not contain the subgroup");
  if (!is_normal(*j, *theta.group()))
    throw precondition_error("extensions require a normal subgroup");
  std::vector<Character> out;
  if (!is_invariant_under(theta, *j)) return out;
  auto table = CharacterTable::of(j);
  for (int i = 0; i < table->size(); ++i) {
    if (table->irr(i).degree() != theta.degree()) continue;
    if (restrict_to(table->irr(i), theta.group()) == theta)
      out.push_back(table->irr(i));
  }
  return out;
}

}  // namespace ctl
