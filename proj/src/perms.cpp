#include "beauville/perms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace beauville {

namespace {

std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) {
  return a / std::gcd(a, b) * b;
}

}  // namespace

// ----------------------------------------------------------- Permutation

Permutation::Permutation(std::size_t n) : img_(n) {
  std::iota(img_.begin(), img_.end(), 0u);
}

Permutation::Permutation(std::vector<std::uint32_t> img) : img_(std::move(img)) {
  std::vector<bool> seen(img_.size(), false);
  for (auto v : img_) {
    if (v >= img_.size() || seen[v])
      throw std::invalid_argument("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::operator*(const Permutation& o) const {
  if (degree() != o.degree()) throw std::invalid_argument("Permutation: degree mismatch");
  std::vector<std::uint32_t> r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r[i] = o.img_[img_[i]];
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> r(degree());
  for (std::size_t i = 0; i < degree(); ++i) r[img_[i]] = static_cast<std::uint32_t>(i);
  Permutation p;
  p.img_ = std::move(r);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

std::uint64_t Permutation::order() const {
  std::uint64_t o = 1;
  for (auto len : cycle_lengths()) o = lcm_u64(o, len);
  return o;
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles(bool include_fixed) const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree(), false);
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::vector<std::uint32_t> c;
    std::uint32_t j = i;
    do {
      seen[j] = true;
      c.push_back(j);
      j = img_[j];
    } while (j != i);
    if (c.size() > 1 || include_fixed) out.push_back(std::move(c));
  }
  return out;
}

std::vector<std::uint32_t> Permutation::cycle_lengths() const {
  std::vector<std::uint32_t> lens;
  for (auto& c : cycles(true)) lens.push_back(static_cast<std::uint32_t>(c.size()));
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Permutation::to_string() const {
  auto cs = cycles(false);
  if (cs.empty()) return "()";
  std::string s;
  for (auto& c : cs) {
    s += "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(c[i] + 1);
    }
    s += ")";
  }
  return s;
}

// ----------------------------------------------------- SignedPermutation

SignedPermutation::SignedPermutation(std::size_t n) : perm_(n), sign_(n, 0) {}

SignedPermutation::SignedPermutation(Permutation p, std::vector<std::uint8_t> sign)
    : perm_(std::move(p)), sign_(std::move(sign)) {
  if (sign_.size() != perm_.degree())
    throw std::invalid_argument("SignedPermutation: sign vector size mismatch");
}

std::size_t SignedPermutation::sign_count() const {
  std::size_t c = 0;
  for (auto s : sign_) c += s != 0;
  return c;
}

SignedPermutation SignedPermutation::operator*(const SignedPermutation& o) const {
  if (degree() != o.degree())
    throw std::invalid_argument("SignedPermutation: degree mismatch");
  // matrix of the product is M(o) * M(*this); column i picks up this
  // sign at i, then o's sign at img(i)
  Permutation p = perm_ * o.perm_;
  std::vector<std::uint8_t> s(degree());
  for (std::uint32_t i = 0; i < degree(); ++i)
    s[i] = static_cast<std::uint8_t>(sign_[i] ^ o.sign_[perm_(i)]);
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::inverse() const {
  Permutation p = perm_.inverse();
  std::vector<std::uint8_t> s(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) s[perm_(i)] = sign_[i];
  return SignedPermutation(std::move(p), std::move(s));
}

SignedPermutation SignedPermutation::pow(std::uint64_t k) const {
  SignedPermutation r(degree());
  SignedPermutation b = *this;
  while (k) {
    if (k & 1) r = r * b;
    b = b * b;
    k >>= 1;
  }
  return r;
}

bool SignedPermutation::is_identity() const {
  return perm_.is_identity() && sign_count() == 0;
}

bool SignedPermutation::is_diagonal() const { return perm_.is_identity(); }

std::uint64_t SignedPermutation::order() const {
  std::uint64_t o = 1;
  for (auto& [len, sg] : cycle_type())
    o = lcm_u64(o, sg < 0 ? 2ull * len : len);
  return o;
}

std::int64_t SignedPermutation::trace() const {
  std::int64_t t = 0;
  for (std::uint32_t i = 0; i < degree(); ++i)
    if (perm_(i) == i) t += sign_[i] ? -1 : 1;
  return t;
}

std::vector<std::pair<std::uint32_t, std::int8_t>> SignedPermutation::cycle_type() const {
  std::vector<std::pair<std::uint32_t, std::int8_t>> type;
  for (auto& c : perm_.cycles(true)) {
    int sg = 1;
    for (auto p : c)
      if (sign_[p]) sg = -sg;
    type.emplace_back(static_cast<std::uint32_t>(c.size()), static_cast<std::int8_t>(sg));
  }
  std::sort(type.begin(), type.end());
  return type;
}

ExactMatrix SignedPermutation::to_matrix() const {
  ExactMatrix m(degree());
  for (std::uint32_t i = 0; i < degree(); ++i)
    m.set(perm_(i), i, ExactScalar(sign_[i] ? -1 : 1));
  return m;
}

std::string SignedPermutation::key() const {
  std::string k;
  k.reserve(2 * degree());
  for (std::uint32_t i = 0; i < degree(); ++i) {
    k.push_back(static_cast<char>(perm_(i)));
    k.push_back(static_cast<char>(sign_[i]));
  }
  return k;
}

SignedPermutation parse_signed(const std::string& text, std::size_t degree) {
  std::vector<std::uint32_t> img(degree);
  std::iota(img.begin(), img.end(), 0u);
  std::vector<std::uint8_t> sign(degree, 0);
  std::vector<bool> used(degree, false);

  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_signed: expected '('");
    ++i;
    std::vector<std::uint32_t> pts;
    std::vector<bool> underl;
    for (;;) {
      skip_ws();
      bool u = false;
      if (i < text.size() && text[i] == '_') {
        u = true;
        ++i;
      }
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw std::invalid_argument("parse_signed: expected integer");
      unsigned long v = std::stoul(text.substr(start, i - start));
      if (v < 1 || v > degree) throw std::invalid_argument("parse_signed: point out of range");
      std::uint32_t p = static_cast<std::uint32_t>(v - 1);
      if (used[p]) throw std::invalid_argument("parse_signed: duplicate point");
      used[p] = true;
      pts.push_back(p);
      underl.push_back(u);
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      if (i < text.size() && text[i] == ')') {
        ++i;
        break;
      }
      throw std::invalid_argument("parse_signed: expected ',' or ')'");
    }
    for (std::size_t j = 0; j < pts.size(); ++j) {
      img[pts[j]] = pts[(j + 1) % pts.size()];
      if (underl[j]) sign[pts[j]] = 1;
    }
    skip_ws();
  }
  return SignedPermutation(Permutation(std::move(img)), std::move(sign));
}

std::string format_signed(const SignedPermutation& sp) {
  struct Cyc {
    std::uint32_t least;
    std::string text;
  };
  std::vector<Cyc> cycles;
  for (auto& c : sp.perm().cycles(true)) {
    bool moved = c.size() > 1;
    bool any_sign = false;
    for (auto p : c) any_sign |= sp.sign_at(p);
    if (!moved && !any_sign) continue;  // plain fixed point: omitted
    auto least_it = std::min_element(c.begin(), c.end());
    std::vector<std::uint32_t> rot(c.size());
    std::size_t off = static_cast<std::size_t>(least_it - c.begin());
    for (std::size_t j = 0; j < c.size(); ++j) rot[j] = c[(off + j) % c.size()];
    std::string t = "(";
    for (std::size_t j = 0; j < rot.size(); ++j) {
      if (j) t += ",";
      if (sp.sign_at(rot[j])) t += "_";
      t += std::to_string(rot[j] + 1);
    }
    t += ")";
    cycles.push_back({rot[0], std::move(t)});
  }
  std::sort(cycles.begin(), cycles.end(),
            [](const Cyc& a, const Cyc& b) { return a.least < b.least; });
  std::string s;
  for (auto& c : cycles) s += c.text;
  return s;
}

// -------------------------------------------------------- DihedralElement

DihedralElement DihedralElement::operator*(const DihedralElement& o) const {
  if (k != o.k) throw std::invalid_argument("DihedralElement: mixed k");
  DihedralElement r;
  r.k = k;
  r.flip = flip != o.flip;
  // as functions on Z_k with this applied first
  std::int64_t a = rot, b = o.rot;
  std::int64_t v = o.flip ? (b - a) : (a + b);
  v %= static_cast<std::int64_t>(k);
  if (v < 0) v += k;
  r.rot = static_cast<std::uint32_t>(v);
  return r;
}

DihedralElement DihedralElement::inverse() const {
  DihedralElement r = *this;
  if (!flip) r.rot = rot == 0 ? 0 : k - rot;
  return r;
}

std::uint64_t DihedralElement::order() const {
  if (is_identity()) return 1;
  if (flip) return 2;
  return k / std::gcd<std::uint64_t>(k, rot);
}

std::string DihedralElement::to_string() const {
  std::string s = "r" + std::to_string(rot);
  if (flip) s += "f";
  return s;
}

}  // namespace beauville
