#pragma once

#include <memory>
#include <string>
#include <variant>

#include "beauville/matrix.hpp"
#include "beauville/perms.hpp"

namespace beauville {

// Group element in whichever concrete carrier its group uses. Pairs carry
// direct-product elements. All carriers share one composition convention:
// (a * b) applies a first; for matrix carriers that makes the underlying
// matrix of a*b equal to M(b)*M(a), matching the monomial-matrix rule for
// signed permutations.
class Element {
public:
  struct Pair;
  using PairPtr = std::shared_ptr<const Pair>;
  using Value = std::variant<SignedPermutation, ExactMatrix, DihedralElement, PairPtr>;

  Element() = default;
  Element(SignedPermutation v) : v_(std::move(v)) {}
  Element(ExactMatrix v) : v_(std::move(v)) {}
  Element(DihedralElement v) : v_(std::move(v)) {}
  static Element pair(Element a, Element b);

  const Value& value() const { return v_; }
  bool is_signed_perm() const { return std::holds_alternative<SignedPermutation>(v_); }
  bool is_matrix() const { return std::holds_alternative<ExactMatrix>(v_); }
  bool is_dihedral() const { return std::holds_alternative<DihedralElement>(v_); }
  bool is_pair() const { return std::holds_alternative<PairPtr>(v_); }

  const SignedPermutation& as_signed_perm() const { return std::get<SignedPermutation>(v_); }
  const ExactMatrix& as_matrix() const { return std::get<ExactMatrix>(v_); }
  const DihedralElement& as_dihedral() const { return std::get<DihedralElement>(v_); }
  const Pair& as_pair() const { return *std::get<PairPtr>(v_); }

  Element operator*(const Element&) const;  // left factor acts first
  Element inverse() const;
  Element pow(std::int64_t) const;
  bool is_identity() const;
  bool operator==(const Element&) const;

  // Least positive m with g^m = e; throws past the cap (a matrix outside
  // any finite group we build would spin forever otherwise).
  std::uint64_t order(std::uint64_t cap = 4096) const;

  Element conjugate_by(const Element& h) const;  // h^-1 * g * h

  // True when the element, as written in its carrier, is a diagonal
  // matrix. Meaningful as a conjugacy separator only in monomial carriers.
  bool is_diagonal_matrix() const;

  std::string to_string() const;
  std::string key() const;  // exact form for hashing / dedup

private:
  Value v_;
};

struct Element::Pair {
  Element first, second;
};

}  // namespace beauville
