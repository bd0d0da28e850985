#include "beauville/action.hpp"

#include <deque>
#include <stdexcept>

namespace beauville {

Permutation SignedPointAction::permutation_of(const Element& g) const {
  const SignedPermutation& sp = g.as_signed_perm();
  if (sp.degree() != n_) throw std::invalid_argument("SignedPointAction: degree mismatch");
  std::vector<std::uint32_t> img(2 * n_);
  for (std::uint32_t i = 0; i < n_; ++i) {
    std::uint32_t j = sp.perm()(i);
    bool neg = sp.sign_at(i);
    img[i] = neg ? j + static_cast<std::uint32_t>(n_) : j;
    img[i + n_] = neg ? j : j + static_cast<std::uint32_t>(n_);
  }
  return Permutation(std::move(img));
}

std::string SignedPointAction::point_label(std::size_t p) const {
  return p < n_ ? "+" + std::to_string(p + 1) : "-" + std::to_string(p - n_ + 1);
}

VectorAction::VectorAction(std::vector<ExactVector> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) index_[vector_key(points_[i])] = i;
}

std::size_t VectorAction::index_of(const ExactVector& v) const {
  auto it = index_.find(vector_key(v));
  return it == index_.end() ? npos : it->second;
}

Permutation VectorAction::permutation_of(const Element& g) const {
  const ExactMatrix& m = g.as_matrix();
  std::vector<std::uint32_t> img(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    std::size_t j = index_of(m.apply(points_[i]));
    if (j == npos) throw std::domain_error("VectorAction: matrix does not preserve the point set");
    img[i] = static_cast<std::uint32_t>(j);
  }
  return Permutation(std::move(img));
}

std::string VectorAction::point_label(std::size_t p) const {
  return vector_key(points_[p]);
}

Permutation DihedralRegularAction::permutation_of(const Element& g) const {
  const DihedralElement& d = g.as_dihedral();
  if (d.k != k_) throw std::invalid_argument("DihedralRegularAction: k mismatch");
  std::vector<std::uint32_t> img(2 * k_);
  for (std::uint32_t f = 0; f < 2; ++f)
    for (std::uint32_t r = 0; r < k_; ++r) {
      DihedralElement pt{k_, r, f != 0};
      DihedralElement q = pt * d;  // right multiplication
      img[f * k_ + r] = (q.flip ? k_ : 0) + q.rot;
    }
  return Permutation(std::move(img));
}

std::string DihedralRegularAction::point_label(std::size_t p) const {
  DihedralElement d{k_, static_cast<std::uint32_t>(p % k_), p >= k_};
  return d.to_string();
}

Permutation ProductAction::permutation_of(const Element& g) const {
  const Element::Pair& pr = g.as_pair();
  Permutation pa = a_->permutation_of(pr.first);
  Permutation pb = b_->permutation_of(pr.second);
  std::vector<std::uint32_t> img(degree());
  std::uint32_t off = static_cast<std::uint32_t>(a_->degree());
  for (std::uint32_t i = 0; i < a_->degree(); ++i) img[i] = pa(i);
  for (std::uint32_t i = 0; i < b_->degree(); ++i) img[off + i] = pb(i) + off;
  return Permutation(std::move(img));
}

std::string ProductAction::point_label(std::size_t p) const {
  return p < a_->degree() ? "L:" + a_->point_label(p)
                          : "R:" + b_->point_label(p - a_->degree());
}

std::vector<ExactVector> orbit_closure(const std::vector<ExactMatrix>& gens,
                                       const std::vector<ExactVector>& seeds,
                                       std::size_t bound) {
  std::vector<ExactVector> pts;
  std::unordered_map<std::string, std::size_t> seen;
  std::deque<std::size_t> work;
  for (const auto& s : seeds) {
    auto k = vector_key(s);
    if (seen.emplace(k, pts.size()).second) {
      pts.push_back(s);
      work.push_back(pts.size() - 1);
    }
  }
  while (!work.empty()) {
    std::size_t i = work.front();
    work.pop_front();
    for (const auto& g : gens) {
      ExactVector w = g.apply(pts[i]);
      auto k = vector_key(w);
      if (seen.emplace(k, pts.size()).second) {
        if (pts.size() >= bound)
          throw std::runtime_error("orbit_closure: safety bound exceeded (wrong generator matrix?)");
        pts.push_back(std::move(w));
        work.push_back(pts.size() - 1);
      }
    }
  }
  return pts;
}

}  // namespace beauville
