#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "beauville/exact.hpp"

namespace beauville {

// Dense square matrix over Q(sqrt5). Matrices are immutable values;
// every operation returns a fresh matrix.
class ExactMatrix {
public:
  ExactMatrix() = default;
  explicit ExactMatrix(std::size_t n) : n_(n), e_(n * n) {}
  static ExactMatrix identity(std::size_t n);

  std::size_t dim() const { return n_; }
  const ExactScalar& at(std::size_t r, std::size_t c) const { return e_[r * n_ + c]; }
  void set(std::size_t r, std::size_t c, ExactScalar v) { e_[r * n_ + c] = std::move(v); }

  ExactMatrix operator*(const ExactMatrix&) const;  // classical product
  bool operator==(const ExactMatrix&) const;

  ExactMatrix inverse() const;        // throws on singular input
  ExactMatrix pow(std::uint64_t) const;
  ExactScalar trace() const;
  bool is_identity() const;
  bool is_diagonal() const;

  // Least m > 0 with A^m = I; nullopt once the cap is passed (signals a
  // matrix of infinite or unexpectedly large order).
  std::optional<std::uint64_t> order(std::uint64_t cap = 512) const;

  // Monic characteristic polynomial by Faddeev-LeVerrier; coefficients
  // returned highest degree first: [1, c1, ..., cn].
  std::vector<ExactScalar> char_poly() const;

  std::vector<ExactScalar> apply(const std::vector<ExactScalar>& v) const;

  std::string to_string() const;
  std::string key() const;  // exact canonical form, usable as a hash key

private:
  std::size_t n_ = 0;
  std::vector<ExactScalar> e_;
};

using ExactVector = std::vector<ExactScalar>;

std::string vector_key(const ExactVector&);

// One nonzero kernel vector of M, if the kernel is nontrivial.
std::optional<ExactVector> kernel_vector(const ExactMatrix& m);

// Rank over Q(sqrt5) of a list of row vectors.
std::size_t rank_of(const std::vector<ExactVector>& rows);

}  // namespace beauville
