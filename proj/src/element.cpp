#include "beauville/element.hpp"

#include <numeric>
#include <stdexcept>

namespace beauville {

Element Element::pair(Element a, Element b) {
  Element e;
  e.v_ = std::make_shared<const Pair>(Pair{std::move(a), std::move(b)});
  return e;
}

Element Element::operator*(const Element& o) const {
  if (v_.index() != o.v_.index())
    throw std::invalid_argument("Element: mixed carriers");
  if (is_signed_perm()) return Element(as_signed_perm() * o.as_signed_perm());
  if (is_matrix()) return Element(o.as_matrix() * as_matrix());  // left acts first
  if (is_dihedral()) return Element(as_dihedral() * o.as_dihedral());
  return pair(as_pair().first * o.as_pair().first,
              as_pair().second * o.as_pair().second);
}

Element Element::inverse() const {
  if (is_signed_perm()) return Element(as_signed_perm().inverse());
  if (is_matrix()) return Element(as_matrix().inverse());
  if (is_dihedral()) return Element(as_dihedral().inverse());
  return pair(as_pair().first.inverse(), as_pair().second.inverse());
}

Element Element::pow(std::int64_t k) const {
  Element base = k < 0 ? inverse() : *this;
  std::uint64_t m = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
  Element r = base * base.inverse();  // identity of the right carrier/degree
  while (m) {
    if (m & 1) r = r * base;
    base = base * base;
    m >>= 1;
  }
  return r;
}

bool Element::is_identity() const {
  if (is_signed_perm()) return as_signed_perm().is_identity();
  if (is_matrix()) return as_matrix().is_identity();
  if (is_dihedral()) return as_dihedral().is_identity();
  return as_pair().first.is_identity() && as_pair().second.is_identity();
}

bool Element::operator==(const Element& o) const {
  if (v_.index() != o.v_.index()) return false;
  if (is_pair())
    return as_pair().first == o.as_pair().first && as_pair().second == o.as_pair().second;
  if (is_signed_perm()) return as_signed_perm() == o.as_signed_perm();
  if (is_matrix()) return as_matrix() == o.as_matrix();
  return as_dihedral() == o.as_dihedral();
}

std::uint64_t Element::order(std::uint64_t cap) const {
  if (is_signed_perm()) return as_signed_perm().order();
  if (is_dihedral()) return as_dihedral().order();
  if (is_matrix()) {
    auto o = as_matrix().order(cap);
    if (!o) throw std::runtime_error("Element: order exceeds cap; matrix not of finite small order");
    return *o;
  }
  std::uint64_t a = as_pair().first.order(cap), b = as_pair().second.order(cap);
  return a / std::gcd(a, b) * b;
}

Element Element::conjugate_by(const Element& h) const {
  return h.inverse() * *this * h;
}

bool Element::is_diagonal_matrix() const {
  if (is_signed_perm()) return as_signed_perm().is_diagonal();
  if (is_matrix()) return as_matrix().is_diagonal();
  if (is_dihedral()) return as_dihedral().is_identity();
  return as_pair().first.is_diagonal_matrix() && as_pair().second.is_diagonal_matrix();
}

std::string Element::to_string() const {
  if (is_signed_perm()) {
    std::string s = format_signed(as_signed_perm());
    return s.empty() ? "()" : s;
  }
  if (is_matrix()) return as_matrix().to_string();
  if (is_dihedral()) return as_dihedral().to_string();
  return "(" + as_pair().first.to_string() + " | " + as_pair().second.to_string() + ")";
}

std::string Element::key() const {
  if (is_signed_perm()) return "s" + as_signed_perm().key();
  if (is_matrix()) return "m" + as_matrix().key();
  if (is_dihedral()) return "d" + as_dihedral().to_string();
  return "p[" + as_pair().first.key() + "][" + as_pair().second.key() + "]";
}

}  // namespace beauville
