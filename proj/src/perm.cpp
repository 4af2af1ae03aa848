#include "ctl/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace ctl {

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<char> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 0 || v >= degree() || seen[v])
      throw precondition_error("image list is not a bijection");
    seen[v] = 1;
  }
}

Perm Perm::from_cycles(int degree, const std::string& cycles) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  size_t i = 0;
  while (i < cycles.size()) {
    if (std::isspace(static_cast<unsigned char>(cycles[i])) || cycles[i] == ',') {
      ++i;
      continue;
    }
    if (cycles[i] != '(') throw parse_error("expected '(' in cycle notation");
    ++i;
    std::vector<int> cyc;
    std::string tok;
    for (; i < cycles.size() && cycles[i] != ')'; ++i) {
      char ch = cycles[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        tok += ch;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!tok.empty()) {
          cyc.push_back(std::stoi(tok));
          tok.clear();
        }
      } else {
        throw parse_error(std::string("unexpected character '") + ch + "' in cycle");
      }
    }
    if (i >= cycles.size()) throw parse_error("unterminated cycle");
    ++i;  // skip ')'
    if (!tok.empty()) cyc.push_back(std::stoi(tok));
    for (size_t j = 0; j < cyc.size(); ++j) {
      int from = cyc[j], to = cyc[(j + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw parse_error("cycle point out of range");
      img[from] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

int Perm::order() const {
  int o = 1;
  for (const auto& cyc : cycles()) o = std::lcm(o, static_cast<int>(cyc.size()));
  return o;
}

Perm Perm::inverse() const {
  std::vector<int> inv(img_.size());
  for (int i = 0; i < degree(); ++i) inv[img_[i]] = i;
  Perm p;
  p.img_ = std::move(inv);
  return p;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw precondition_error("degree mismatch");
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a.img_[b.img_[i]];
  Perm p;
  p.img_ = std::move(img);
  return p;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(img_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i] || img_[i] == i) continue;
    std::vector<int> cyc;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      cyc.push_back(j);
      j = img_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::ostringstream os;
  for (const auto& cyc : cycs) {
    os << "(";
    for (size_t j = 0; j < cyc.size(); ++j) {
      if (j) os << " ";
      os << cyc[j];
    }
    os << ")";
  }
  return os.str();
}

Perm Perm::extended(int degree) const {
  if (degree < this->degree()) throw precondition_error("cannot shrink degree");
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 0);
  std::copy(img_.begin(), img_.end(), img.begin());
  Perm p;
  p.img_ = std::move(img);
  return p;
}

}  // namespace ctl
