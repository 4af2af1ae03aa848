#include "ctl/rep.hpp"

#include <algorithm>
#include <map>

namespace ctl {

MatrixRep::MatrixRep(GroupPtr g, std::vector<Mat> per_element)
    : g_(std::move(g)), mats_(std::move(per_element)) {
  if (mats_.size() != static_cast<size_t>(g_->order()))
    throw precondition_error("need one matrix per element");
}

Character MatrixRep::character() const {
  const auto& cls = g_->classes();
  const int e = g_->exponent();
  std::vector<Cyclotomic> vals(cls.size());
  for (size_t c = 0; c < cls.size(); ++c)
    vals[c] = mats_[cls[c].rep].trace().lift(
        std::lcm(e, mats_[cls[c].rep].trace().conductor()));
  // normalize all values to a common conductor for clean comparisons
  int m = 1;
  for (auto& v : vals) m = std::lcm(m, v.conductor());
  for (auto& v : vals) v = v.lift(m);
  return Character(g_, std::move(vals));
}

void MatrixRep::verify_multiplicative() const {
  for (int i = 0; i < g_->order(); ++i)
    for (const auto& s : g_->generators()) {
      int j = g_->index_of(s);
      int k = g_->index_of(g_->element(i) * s);
      if (!(mats_[i] * mats_[j] == mats_[k]))
        throw internal_error("representation is not multiplicative");
    }
}

MatrixRep MatrixRep::restricted(GroupPtr h) const {
  if (!g_->contains_subgroup(*h))
    throw precondition_error("restriction target is not a subgroup");
  std::vector<Mat> mats;
  mats.reserve(h->order());
  for (const auto& x : h->elements()) mats.push_back(at(x));
  return MatrixRep(std::move(h), std::move(mats));
}

namespace {

// multiplicity of the linear character lambda (given by its values on the
// powers of c) in the restriction of chi to <c>
int64_t cyclic_multiplicity(const Character& chi, const Perm& c, int lam_exp) {
  const int o = c.order();
  const GroupPtr& g = chi.group();
  Cyclotomic sum;
  Perm p(g->degree());
  for (int u = 0; u < o; ++u) {
    sum += chi.value_at(p) * Cyclotomic::root_of_unity(o, -static_cast<int64_t>(
                                                              lam_exp) * u);
    p = p * c;
  }
  Cyclotomic m = sum.divide_exact(o);
  if (!m.is_rational()) throw internal_error("multiplicity is not rational");
  return m.rational_value().as_integer();
}

}  // namespace

MatrixRep MatrixRep::affording(const Character& chi) {
  const GroupPtr& g = chi.group();
  if (!chi.is_irreducible())
    throw precondition_error("can only realize irreducible characters");
  const int64_t d = chi.degree();
  if (d > 12) throw resource_error("representation degree above the cap of 12");

  if (d == 1) {
    std::vector<Mat> mats;
    mats.reserve(g->order());
    for (int i = 0; i < g->order(); ++i) {
      Mat m(1, 1);
      m.at(0, 0) = chi.value_on_class(g->class_of(i));
      mats.push_back(std::move(m));
    }
    return MatrixRep(g, std::move(mats));
  }

  // find a cyclic subgroup C = <c> and exponent j with <Res_C chi, lam_j> = 1;
  // prefer large C (small induced module), deterministic tie-break by class.
  Perm chosen_c;
  int chosen_exp = -1;
  {
    const auto& cls = g->classes();
    int best_order = 0;
    for (const auto& cl : cls) {
      if (cl.element_order <= best_order) continue;
      const Perm& c = g->element(cl.rep);
      for (int j = 0; j < cl.element_order; ++j) {
        if (cyclic_multiplicity(chi, c, j) == 1) {
          chosen_c = c;
          chosen_exp = j;
          best_order = cl.element_order;
          break;
        }
      }
    }
    if (chosen_exp < 0)
      throw resource_error(
          "no multiplicity-one cyclic pair found for this character");
  }
  const int o = chosen_c.order();
  auto csub = generated_subgroup(*g, {chosen_c});

  // left cosets xC; representative = minimal element index
  const int64_t n = g->order();
  std::vector<int> coset_rep(n, -1);
  std::vector<int> reps;
  for (int i = 0; i < n; ++i) {
    if (coset_rep[i] >= 0) continue;
    int mn = i;
    std::vector<int> members;
    for (const auto& cc : csub->elements()) {
      int j = g->index_of(g->element(i) * cc);
      members.push_back(j);
      mn = std::min(mn, j);
    }
    for (int j : members) coset_rep[j] = mn;
  }
  for (int i = 0; i < n; ++i)
    if (coset_rep[i] == i) reps.push_back(i);
  std::sort(reps.begin(), reps.end());
  std::map<int, int> coset_id;
  for (size_t c = 0; c < reps.size(); ++c) coset_id[reps[c]] = static_cast<int>(c);
  const int dim = static_cast<int>(reps.size());

  // lambda value on an element of C
  auto lam = [&](const Perm& x) {
    // x = c^u: find u
    Perm p(g->degree());
    for (int u = 0; u < o; ++u) {
      if (p == x) return Cyclotomic::root_of_unity(o, static_cast<int64_t>(
                                                          chosen_exp) * u);
      p = p * chosen_c;
    }
    throw internal_error("element not in the cyclic subgroup");
  };

  // monomial matrix of the induced representation
  auto rho = [&](const Perm& x) {
    Mat m(dim, dim);
    for (int i = 0; i < dim; ++i) {
      Perm moved = x * g->element(reps[i]);
      int j = coset_id.at(coset_rep[g->index_of(moved)]);
      // moved = rep_j * c_part
      Perm c_part = g->element(reps[j]).inverse() * moved;
      m.at(j, i) = lam(c_part);
    }
    return m;
  };

  // central idempotent applied to the induced module
  Mat proj(dim, dim);
  for (int i = 0; i < n; ++i) {
    const Perm& x = g->element(i);
    Cyclotomic coeff = chi.value_at(x.inverse()) * Cyclotomic(Rational(d, n));
    if (coeff.is_zero()) continue;
    proj = proj + rho(x).scaled(coeff);
  }

  // column-space basis
  Mat reduced = proj.transpose();
  auto pivots = rref(&reduced);
  if (static_cast<int>(pivots.size()) != d)
    throw internal_error("idempotent image has wrong dimension");
  Mat basis(dim, static_cast<int>(d));
  for (int64_t c = 0; c < d; ++c)
    for (int r = 0; r < dim; ++r)
      basis.at(r, static_cast<int>(c)) = reduced.at(static_cast<int>(c), r);
  // pivot rows of the basis give an invertible d x d minor
  Mat minor(static_cast<int>(d), static_cast<int>(d));
  {
    // find d linearly independent rows greedily
    std::vector<int> rows;
    for (int r = 0; r < dim && static_cast<int64_t>(rows.size()) < d; ++r) {
      std::vector<int> cand = rows;
      cand.push_back(r);
      Mat sub(static_cast<int>(cand.size()), static_cast<int>(d));
      for (size_t i = 0; i < cand.size(); ++i)
        for (int c = 0; c < d; ++c) sub.at(static_cast<int>(i), c) = basis.at(cand[i], c);
      if (rank(sub) == static_cast<int>(cand.size())) rows = cand;
    }
    if (static_cast<int64_t>(rows.size()) != d)
      throw internal_error("no invertible minor in the basis");
    for (int64_t i = 0; i < d; ++i)
      for (int64_t c = 0; c < d; ++c)
        minor.at(static_cast<int>(i), static_cast<int>(c)) =
            basis.at(rows[i], static_cast<int>(c));
    Mat minor_inv = minor.inverse();
    // matrices: M(g) = minor_inv * (rho(g) * basis)[rows]
    std::vector<Mat> mats;
    mats.reserve(n);
    for (int i = 0; i < n; ++i) {
      Mat act = rho(g->element(i)) * basis;
      Mat sel(static_cast<int>(d), static_cast<int>(d));
      for (int64_t r = 0; r < d; ++r)
        for (int64_t c = 0; c < d; ++c)
          sel.at(static_cast<int>(r), static_cast<int>(c)) =
              act.at(rows[r], static_cast<int>(c));
      Mat m = minor_inv * sel;
      // verify the action stays inside the invariant subspace
      if (!(basis * m == act))
        throw internal_error("projected module is not invariant");
      mats.push_back(std::move(m));
    }
    MatrixRep rep(g, std::move(mats));
    // trace oracle on every class representative
    Character tr = rep.character();
    if (!(tr == chi)) throw internal_error("trace does not match the character");
    return rep;
  }
}

Mat schur_intertwiner(const std::vector<Mat>& amats, const std::vector<Mat>& bmats) {
  if (amats.size() != bmats.size())
    throw precondition_error("generator count mismatch");
  const int da = amats.empty() ? 0 : amats[0].rows();
  const int db = bmats.empty() ? 0 : bmats[0].rows();
  if (amats.empty()) {
    // trivial group: identity intertwiner
    return Mat::identity(da);
  }
  // unknowns: S (db x da), equations b S - S a = 0 stacked over generators
  const int unknowns = db * da;
  Mat sys(static_cast<int>(amats.size()) * unknowns, unknowns);
  int row = 0;
  for (size_t t = 0; t < amats.size(); ++t) {
    const Mat& a = amats[t];
    const Mat& b = bmats[t];
    for (int i = 0; i < db; ++i)
      for (int j = 0; j < da; ++j) {
        // equation (i,j): sum_k b(i,k) S(k,j) - sum_k S(i,k) a(k,j) = 0
        for (int k = 0; k < db; ++k)
          sys.at(row, k * da + j) += b.at(i, k);
        for (int k = 0; k < da; ++k)
          sys.at(row, i * da + k) -= a.at(k, j);
        ++row;
      }
  }
  Mat ns = nullspace(sys);
  if (ns.cols() != 1)
    throw internal_error("intertwiner space is not one-dimensional (dim " +
                         std::to_string(ns.cols()) + ")");
  Mat s(db, da);
  Cyclotomic lead;
  bool found = false;
  for (int i = 0; i < db * da; ++i) {
    if (!found && !ns.at(i, 0).is_zero()) {
      lead = ns.at(i, 0);
      found = true;
    }
  }
  Cyclotomic inv = lead.inverse();
  for (int i = 0; i < db; ++i)
    for (int j = 0; j < da; ++j) s.at(i, j) = ns.at(i * da + j, 0) * inv;
  return s;
}

Mat schur_intertwiner(const MatrixRep& a, const MatrixRep& b) {
  if (a.group() != b.group())
    throw precondition_error("intertwiner requires equal groups");
  std::vector<Mat> am, bm;
  for (const auto& s : a.group()->generators()) {
    am.push_back(a.at(s));
    bm.push_back(b.at(s));
  }
  if (am.empty()) return Mat::identity(a.rep_degree());
  return schur_intertwiner(am, bm);
}

}  // namespace ctl
