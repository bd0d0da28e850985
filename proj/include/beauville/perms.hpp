#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "beauville/matrix.hpp"

namespace beauville {

// Plain permutation of {0..n-1} (1-indexed only at the notation boundary).
//
// Composition convention, fixed project-wide: (p * q) means "apply p
// first, then q", so (p*q)(i) = q(p(i)). All catalogue data is encoded
// under this convention.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t n);                    // identity
  explicit Permutation(std::vector<std::uint32_t> img);   // 0-based images

  std::size_t degree() const { return img_.size(); }
  std::uint32_t operator()(std::uint32_t i) const { return img_[i]; }
  const std::vector<std::uint32_t>& images() const { return img_; }

  Permutation operator*(const Permutation&) const;  // left factor acts first
  Permutation inverse() const;
  bool is_identity() const;
  bool operator==(const Permutation&) const = default;

  std::uint64_t order() const;
  std::vector<std::vector<std::uint32_t>> cycles(bool include_fixed = false) const;
  std::vector<std::uint32_t> cycle_lengths() const;  // sorted, incl. fixed points

  std::string to_string() const;  // 1-based cycle notation, identity -> "()"

private:
  std::vector<std::uint32_t> img_;
};

// Signed permutation: a permutation together with the set of columns of
// its monomial matrix carrying -1. In the cycle notation of W(B_n) an
// underlined point (written "_k" in ASCII) marks such a column.
class SignedPermutation {
public:
  SignedPermutation() = default;
  explicit SignedPermutation(std::size_t n);  // identity
  SignedPermutation(Permutation p, std::vector<std::uint8_t> sign);

  std::size_t degree() const { return perm_.degree(); }
  const Permutation& perm() const { return perm_; }
  bool sign_at(std::uint32_t i) const { return sign_[i] != 0; }
  std::size_t sign_count() const;
  bool even_signs() const { return sign_count() % 2 == 0; }  // W(D_n) predicate

  SignedPermutation operator*(const SignedPermutation&) const;  // left acts first
  SignedPermutation inverse() const;
  SignedPermutation pow(std::uint64_t) const;
  bool is_identity() const;
  bool is_diagonal() const;  // underlying permutation trivial
  bool operator==(const SignedPermutation&) const = default;

  std::uint64_t order() const;
  std::int64_t trace() const;  // of the monomial matrix, no matrix built

  // Signed cycle type: multiset of (length, sign-of-cycle) where the sign
  // is the product of column signs around the cycle. Conjugation
  // invariant in W(B_n). Sorted canonically.
  std::vector<std::pair<std::uint32_t, std::int8_t>> cycle_type() const;

  ExactMatrix to_matrix() const;  // entry at (img(i), i) with column sign

  std::string key() const;  // exact canonical byte form

private:
  Permutation perm_;
  std::vector<std::uint8_t> sign_;
};

// Cycle-notation grammar (ASCII form of the underline notation):
//   expr  := cycle*
//   cycle := '(' point (',' point)* ')'
//   point := '_'? integer          (whitespace ignored)
// A length-1 cycle with '_' denotes a lone -1; plain length-1 cycles are
// accepted on input and dropped on output.
SignedPermutation parse_signed(const std::string& text, std::size_t degree);

// Canonical form: cycles sorted by least moved point, each cycle starting
// at its least point; signed fixed points printed as 1-cycles; identity
// formats as "". parse(format(p)) == p always.
std::string format_signed(const SignedPermutation&);

// Dihedral group element for I2(k): rotation index mod k plus a flip bit,
// kept abstract rather than as a cyclotomic matrix.
struct DihedralElement {
  std::uint32_t k = 3;
  std::uint32_t rot = 0;
  bool flip = false;

  bool operator==(const DihedralElement&) const = default;
  bool is_identity() const { return rot == 0 && !flip; }

  DihedralElement operator*(const DihedralElement&) const;  // left acts first
  DihedralElement inverse() const;
  std::uint64_t order() const;
  std::string to_string() const;
};

}  // namespace beauville
