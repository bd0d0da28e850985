#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "beauville/element.hpp"

namespace beauville {

// A faithful action of group elements on a finite point set; everything
// the permutation engine sees goes through permutation_of. Point images
// satisfy the right-action law pt^(a*b) = (pt^a)^b under the project's
// left-first composition.
class FiniteAction {
public:
  virtual ~FiniteAction() = default;
  virtual std::size_t degree() const = 0;
  virtual Permutation permutation_of(const Element&) const = 0;
  virtual std::string point_label(std::size_t) const = 0;
};

using ActionPtr = std::shared_ptr<const FiniteAction>;

// Natural action of signed permutations on the 2n signed points
// {+1..+n, -1..-n}; point i<n is (+,i), point n+i is (-,i).
class SignedPointAction : public FiniteAction {
public:
  explicit SignedPointAction(std::size_t n) : n_(n) {}
  std::size_t degree() const override { return 2 * n_; }
  Permutation permutation_of(const Element&) const override;
  std::string point_label(std::size_t) const override;

private:
  std::size_t n_;
};

// Action of a matrix group on a finite set of exact vectors (typically
// its root system), closed under all generators.
class VectorAction : public FiniteAction {
public:
  explicit VectorAction(std::vector<ExactVector> points);
  std::size_t degree() const override { return points_.size(); }
  Permutation permutation_of(const Element&) const override;
  std::string point_label(std::size_t) const override;
  const std::vector<ExactVector>& points() const { return points_; }
  // index of a vector, or npos when it is not a point of the action
  std::size_t index_of(const ExactVector&) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

private:
  std::vector<ExactVector> points_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Right-regular action of the dihedral group of order 2k on itself.
class DihedralRegularAction : public FiniteAction {
public:
  explicit DihedralRegularAction(std::uint32_t k) : k_(k) {}
  std::size_t degree() const override { return 2 * k_; }
  Permutation permutation_of(const Element&) const override;
  std::string point_label(std::size_t) const override;

private:
  std::uint32_t k_;
};

// Disjoint union of two factor actions, for direct products.
class ProductAction : public FiniteAction {
public:
  ProductAction(ActionPtr a, ActionPtr b) : a_(std::move(a)), b_(std::move(b)) {}
  std::size_t degree() const override { return a_->degree() + b_->degree(); }
  Permutation permutation_of(const Element&) const override;
  std::string point_label(std::size_t) const override;

private:
  ActionPtr a_, b_;
};

// Orbit closure of the seed vectors under the given matrices, with a
// safety bound; overflow signals a wrong generator matrix.
std::vector<ExactVector> orbit_closure(const std::vector<ExactMatrix>& gens,
                                       const std::vector<ExactVector>& seeds,
                                       std::size_t bound);

}  // namespace beauville
