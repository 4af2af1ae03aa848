#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ctl/error.hpp"

namespace ctl {

// Permutation of {0, ..., degree-1}, stored as the image vector.
// Composition is the left action: (a*b)(x) = a(b(x)).
class Perm {
 public:
  Perm() = default;
  explicit Perm(int degree) : img_(degree) {
    for (int i = 0; i < degree; ++i) img_[i] = i;
  }
  explicit Perm(std::vector<int> images);

  // Parse disjoint-cycle notation like "(0 1 2)(3 4)"; "()" is the identity.
  static Perm from_cycles(int degree, const std::string& cycles);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  int order() const;

  Perm inverse() const;
  friend Perm operator*(const Perm& a, const Perm& b);
  // b^{-1} * a * b
  Perm conjugated_by(const Perm& b) const { return b.inverse() * (*this * b); }

  friend bool operator==(const Perm& a, const Perm& b) { return a.img_ == b.img_; }
  friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
  friend bool operator<(const Perm& a, const Perm& b) { return a.img_ < b.img_; }

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles
  std::string cycle_string() const;

  // Re-embed into a larger degree fixing the new points.
  Perm extended(int degree) const;

 private:
  std::vector<int> img_;
};

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (int v : p.images()) {
      h ^= static_cast<size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace ctl
