#include "beauville/groups.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

namespace beauville {

namespace {

const char* family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::D: return "D";
    case Family::I2: return "I2";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::H3: return "H3";
    case Family::H4: return "H4";
  }
  return "?";
}

SignedPermutation adjacent_swap(std::size_t n, std::uint32_t i) {
  std::vector<std::uint32_t> img(n);
  for (std::uint32_t k = 0; k < n; ++k) img[k] = k;
  std::swap(img[i], img[i + 1]);
  return SignedPermutation(Permutation(std::move(img)), std::vector<std::uint8_t>(n, 0));
}

// Coxeter matrix (bond orders) per type; diagonal entries 1.
std::vector<std::vector<int>> coxeter_bonds(const CoxeterType& t) {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // default bond 3
  std::vector<std::tuple<int, int, int>> special;
  switch (t.family) {
    case Family::A:
      n = t.rank;
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      break;
    case Family::B:
      n = t.rank;
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      special.emplace_back(n - 2, n - 1, 4);
      break;
    case Family::D:
      n = t.rank;
      for (int i = 0; i + 2 < n; ++i) edges.emplace_back(i, i + 1);
      edges.emplace_back(n - 3, n - 1);
      break;
    case Family::I2:
      n = 2;
      special.emplace_back(0, 1, t.rank);
      break;
    case Family::E6:
      n = 6;
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}};
      break;
    case Family::E7:
      n = 7;
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}};
      break;
    case Family::E8:
      n = 8;
      edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 7}};
      break;
    case Family::F4:
      n = 4;
      edges = {{0, 1}, {2, 3}};
      special.emplace_back(1, 2, 4);
      break;
    case Family::H3:
      n = 3;
      edges = {{0, 1}};
      special.emplace_back(1, 2, 5);
      break;
    case Family::H4:
      n = 4;
      edges = {{0, 1}, {1, 2}};
      special.emplace_back(2, 3, 5);
      break;
  }
  std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (auto [a, b] : edges) m[a][b] = m[b][a] = 3;
  for (auto [a, b, k] : special) m[a][b] = m[b][a] = k;
  return m;
}

void verify_coxeter_relations(const std::vector<Element>& gens,
                              const std::vector<std::vector<int>>& bonds,
                              const std::string& name) {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (!(gens[i] * gens[i]).is_identity())
      throw std::logic_error(name + ": generator " + std::to_string(i) + " is not an involution");
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      std::uint64_t m = (gens[i] * gens[j]).order(64);
      if (m != static_cast<std::uint64_t>(bonds[i][j]))
        throw std::logic_error(name + ": bond order of generators " + std::to_string(i) + "," +
                               std::to_string(j) + " is " + std::to_string(m) + ", diagram says " +
                               std::to_string(bonds[i][j]));
    }
  }
}

// Reflection matrices in the simple-root basis: row j of S_j holds
// -a_{ij} off the diagonal (Cartan integers), everything else identity.
std::vector<ExactMatrix> cartan_reflections(const std::vector<std::vector<int>>& cartan) {
  std::size_t n = cartan.size();
  std::vector<ExactMatrix> gens;
  for (std::size_t j = 0; j < n; ++j) {
    ExactMatrix s = ExactMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
      s.set(j, i, ExactScalar(i == j ? -1 : -cartan[i][j]));
    gens.push_back(std::move(s));
  }
  return gens;
}

std::vector<std::vector<int>> cartan_matrix(const CoxeterType& t) {
  auto bonds = coxeter_bonds(t);
  std::size_t n = bonds.size();
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) c[i][j] = 2;
      else if (bonds[i][j] == 3) c[i][j] = -1;
      else if (bonds[i][j] == 4) c[i][j] = 0;  // filled in below
    }
  if (t.family == Family::F4) {
    // one short/long asymmetric bond
    c[1][2] = -1;
    c[2][1] = -2;
  }
  return c;
}

ExactVector basis_vector(std::size_t n, std::size_t i) {
  ExactVector v(n);
  v[i] = ExactScalar(1);
  return v;
}

std::size_t expected_root_count(Family f) {
  switch (f) {
    case Family::E6: return 72;
    case Family::E7: return 126;
    case Family::E8: return 240;
    case Family::F4: return 48;
    case Family::H3: return 30;
    case Family::H4: return 120;
    default: return 0;
  }
}

RealizedGroup make_root_group(const CoxeterType& t, std::vector<ExactMatrix> mats,
                              std::vector<ExactVector> seeds) {
  std::vector<Element> gens;
  for (auto& m : mats) gens.emplace_back(std::move(m));
  verify_coxeter_relations(gens, coxeter_bonds(t), type_to_string(t));
  std::vector<ExactMatrix> raw;
  for (auto& g : gens) raw.push_back(g.as_matrix());
  auto roots = orbit_closure(raw, seeds, 4096);
  std::size_t want = expected_root_count(t.family);
  if (roots.size() != want)
    throw std::logic_error(type_to_string(t) + ": root system has " + std::to_string(roots.size()) +
                           " vectors, expected " + std::to_string(want));
  // faithfulness: the generators are reflections in roots of the orbit, so
  // they fix the roots' complement pointwise and the action on the roots
  // is faithful as long as the orbit spans the generators' moved space,
  // which the rank of the group's type pins down
  if (rank_of(roots) != static_cast<std::size_t>(t.rank))
    throw std::logic_error(type_to_string(t) + ": roots do not span a space of the type's rank");
  return RealizedGroup(type_to_string(t), std::move(gens),
                       std::make_shared<VectorAction>(std::move(roots)), coxeter_order(t), t);
}

}  // namespace

CoxeterType parse_type(const std::string& d) {
  auto bad = [&] { return std::invalid_argument("unknown group descriptor: " + d); };
  if (d == "E6") return {Family::E6, 6};
  if (d == "E7") return {Family::E7, 7};
  if (d == "E8") return {Family::E8, 8};
  if (d == "F4") return {Family::F4, 4};
  if (d == "H3") return {Family::H3, 3};
  if (d == "H4") return {Family::H4, 4};
  if (d.size() >= 2 && (d[0] == 'A' || d[0] == 'B' || d[0] == 'D')) {
    int n = std::stoi(d.substr(1));
    Family f = d[0] == 'A' ? Family::A : d[0] == 'B' ? Family::B : Family::D;
    CoxeterType t{f, n};
    if ((f == Family::A && n < 1) || (f == Family::B && n < 2) || (f == Family::D && n < 4))
      throw bad();
    return t;
  }
  if (d.rfind("I2(", 0) == 0 && d.back() == ')') {
    int k = std::stoi(d.substr(3, d.size() - 4));
    if (k < 3) throw bad();
    return {Family::I2, k};
  }
  throw bad();
}

std::string type_to_string(const CoxeterType& t) {
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::D:
      return family_name(t.family) + std::to_string(t.rank);
    case Family::I2:
      return "I2(" + std::to_string(t.rank) + ")";
    default:
      return family_name(t.family);
  }
}

BigInt coxeter_order(const CoxeterType& t) {
  switch (t.family) {
    case Family::A: return BigInt::factorial(t.rank + 1);
    case Family::B: return BigInt::pow2(t.rank) * BigInt::factorial(t.rank);
    case Family::D: return BigInt::pow2(t.rank - 1) * BigInt::factorial(t.rank);
    case Family::I2: return BigInt(2 * t.rank);
    case Family::E6: return BigInt(51840);
    case Family::E7: return BigInt(2903040);
    case Family::E8: return BigInt(696729600);
    case Family::F4: return BigInt(1152);
    case Family::H3: return BigInt(120);
    case Family::H4: return BigInt(14400);
  }
  throw std::logic_error("coxeter_order: bad family");
}

int abelianization_rank(const CoxeterType& t) {
  switch (t.family) {
    case Family::B:
    case Family::F4:
      return 2;
    case Family::I2:
      return t.rank % 2 == 0 ? 2 : 1;
    default:
      return 1;
  }
}

RealizedGroup::RealizedGroup(std::string name, std::vector<Element> gens, ActionPtr action,
                             BigInt expected_order, std::optional<CoxeterType> type)
    : name_(std::move(name)),
      gens_(std::move(gens)),
      action_(std::move(action)),
      expected_(std::move(expected_order)),
      type_(type) {
  if (gens_.empty()) throw std::invalid_argument("RealizedGroup: no generators");
}

Element RealizedGroup::identity() const { return gens_[0] * gens_[0].inverse(); }

const StabilizerChain& RealizedGroup::chain() const {
  std::call_once(chain_once_, [this] {
    std::vector<Permutation> perms;
    for (const auto& g : gens_) perms.push_back(action_->permutation_of(g));
    chain_ = std::make_unique<StabilizerChain>(action_->degree(), perms);
    if (!expected_.is_zero() && !(chain_->order() == expected_))
      throw std::logic_error(name_ + ": stabilizer chain order " + chain_->order().to_string() +
                             " does not match expected " + expected_.to_string());
  });
  return *chain_;
}

bool RealizedGroup::contains(const Element& g) const {
  return chain().contains(action_->permutation_of(g));
}

std::vector<ExactMatrix> h4_simple_reflections() {
  auto perm_matrix = [](std::vector<std::uint32_t> img) {
    std::size_t n = img.size();
    ExactMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(img[i], i, ExactScalar(1));
    return m;
  };
  ExactMatrix s1 = perm_matrix({0, 1, 3, 2});
  ExactMatrix s2 = perm_matrix({0, 2, 1, 3});
  ExactMatrix s3 = perm_matrix({1, 0, 2, 3});
  // -(1/4) * [[1,r5,r5,r5],[r5,-3,1,1],[r5,1,-3,1],[r5,1,1,-3]]
  ExactMatrix s4(4);
  Rational q(BigInt(-1), BigInt(4));
  ExactScalar mq(q);                       // -1/4
  ExactScalar mq5(Rational(0), q);         // -(1/4) sqrt5
  auto rat = [&](std::int64_t v) { return mq * ExactScalar(v); };
  s4.set(0, 0, rat(1));
  for (int i = 1; i < 4; ++i) {
    s4.set(0, i, mq5);
    s4.set(i, 0, mq5);
    for (int j = 1; j < 4; ++j) s4.set(i, j, rat(i == j ? -3 : 1));
  }
  return {s1, s2, s3, s4};
}

RealizedGroup build_coxeter(const CoxeterType& t) {
  switch (t.family) {
    case Family::A: {
      std::size_t pts = t.rank + 1;
      std::vector<Element> gens;
      for (std::uint32_t i = 0; i + 1 < pts; ++i) gens.emplace_back(adjacent_swap(pts, i));
      verify_coxeter_relations(gens, coxeter_bonds(t), type_to_string(t));
      return RealizedGroup(type_to_string(t), std::move(gens),
                           std::make_shared<SignedPointAction>(pts), coxeter_order(t), t);
    }
    case Family::B: {
      std::size_t n = t.rank;
      std::vector<Element> gens;
      for (std::uint32_t i = 0; i + 1 < n; ++i) gens.emplace_back(adjacent_swap(n, i));
      std::vector<std::uint8_t> sg(n, 0);
      sg[n - 1] = 1;
      gens.emplace_back(SignedPermutation(Permutation(n), std::move(sg)));
      verify_coxeter_relations(gens, coxeter_bonds(t), type_to_string(t));
      return RealizedGroup(type_to_string(t), std::move(gens),
                           std::make_shared<SignedPointAction>(n), coxeter_order(t), t);
    }
    case Family::D: {
      std::size_t n = t.rank;
      std::vector<Element> gens;
      for (std::uint32_t i = 0; i + 1 < n; ++i) gens.emplace_back(adjacent_swap(n, i));
      std::vector<std::uint32_t> img(n);
      for (std::uint32_t k = 0; k < n; ++k) img[k] = k;
      std::swap(img[n - 2], img[n - 1]);
      std::vector<std::uint8_t> sg(n, 0);
      sg[n - 2] = sg[n - 1] = 1;
      gens.emplace_back(SignedPermutation(Permutation(std::move(img)), std::move(sg)));
      verify_coxeter_relations(gens, coxeter_bonds(t), type_to_string(t));
      return RealizedGroup(type_to_string(t), std::move(gens),
                           std::make_shared<SignedPointAction>(n), coxeter_order(t), t);
    }
    case Family::I2: {
      std::uint32_t k = t.rank;
      std::vector<Element> gens{Element(DihedralElement{k, 0, true}),
                                Element(DihedralElement{k, 1, true})};
      verify_coxeter_relations(gens, coxeter_bonds(t), type_to_string(t));
      return RealizedGroup(type_to_string(t), std::move(gens),
                           std::make_shared<DihedralRegularAction>(k), coxeter_order(t), t);
    }
    case Family::E6:
    case Family::E7:
    case Family::E8:
    case Family::F4: {
      auto mats = cartan_reflections(cartan_matrix(t));
      std::vector<ExactVector> seeds;
      for (std::size_t i = 0; i < mats.size(); ++i) seeds.push_back(basis_vector(mats.size(), i));
      return make_root_group(t, std::move(mats), std::move(seeds));
    }
    case Family::H3:
    case Family::H4: {
      auto all = h4_simple_reflections();
      std::vector<ExactMatrix> mats =
          t.family == Family::H4 ? all : std::vector<ExactMatrix>{all[1], all[2], all[3]};
      // seed roots (norm 2, -1 eigenvectors of the reflections): e_i - e_j
      // for the transposition matrices and (r5,1,1,1)/2 for the last
      Rational half(BigInt(1), BigInt(2));
      ExactVector special{ExactScalar(Rational(0), half), ExactScalar(half), ExactScalar(half),
                          ExactScalar(half)};
      auto diff = [](int i, int j) {
        ExactVector v(4);
        v[i] = ExactScalar(1);
        v[j] = ExactScalar(-1);
        return v;
      };
      std::vector<ExactVector> seeds = t.family == Family::H4
                                           ? std::vector<ExactVector>{diff(2, 3), diff(1, 2),
                                                                      diff(0, 1), special}
                                           : std::vector<ExactVector>{diff(1, 2), diff(0, 1),
                                                                      special};
      for (std::size_t i = 0; i < mats.size(); ++i) {
        ExactVector img = mats[i].apply(seeds[i]);
        for (std::size_t j = 0; j < 4; ++j)
          if (!(img[j] == -seeds[i][j]))
            throw std::logic_error("H family: seed is not the generator's root");
      }
      return make_root_group(t, std::move(mats), std::move(seeds));
    }
  }
  throw std::logic_error("build_coxeter: bad type");
}

RealizedGroup group_from_matrices(const std::string& name, const std::vector<ExactMatrix>& gens,
                                  const BigInt& expected_order) {
  if (gens.empty()) throw std::invalid_argument("group_from_matrices: no generators");
  std::size_t dim = gens[0].dim();
  // breadth-first search of short products for an element powering up to
  // a reflection (involution with a one-dimensional -1 eigenspace)
  std::optional<ExactMatrix> reflection;
  std::vector<ExactMatrix> pool{ExactMatrix::identity(dim)};
  std::unordered_set<std::string> seen{pool[0].key()};
  for (std::size_t i = 0; i < pool.size() && !reflection; ++i) {
    for (const auto& g : gens) {
      ExactMatrix w = g * pool[i];
      if (!seen.insert(w.key()).second) continue;
      auto o = w.order(512);
      if (!o) throw std::runtime_error(name + ": generator word of unbounded order");
      if (*o % 2 == 0) {
        ExactMatrix u = w.pow(*o / 2);
        if (u.trace() == ExactScalar(static_cast<std::int64_t>(dim) - 2)) {
          reflection = std::move(u);
          break;
        }
      }
      pool.push_back(std::move(w));
      if (pool.size() > 5000)
        throw std::runtime_error(name + ": no reflection found in search ball");
    }
  }
  if (!reflection) throw std::runtime_error(name + ": no reflection found");
  ExactMatrix shifted = *reflection;
  for (std::size_t i = 0; i < dim; ++i) shifted.set(i, i, shifted.at(i, i) + ExactScalar(1));
  auto root = kernel_vector(shifted);
  if (!root) throw std::logic_error(name + ": reflection has trivial -1 eigenspace");
  auto orbit = orbit_closure(gens, {*root}, 4096);
  if (rank_of(orbit) != dim)
    throw std::logic_error(name + ": reflection-root orbit does not span");
  std::vector<Element> egens;
  for (const auto& m : gens) egens.emplace_back(m);
  return RealizedGroup(name, std::move(egens), std::make_shared<VectorAction>(std::move(orbit)),
                       expected_order);
}

Element membership_matrix(const RealizedGroup& g, const ExactMatrix& m) {
  const auto* va = dynamic_cast<const VectorAction*>(g.action().get());
  if (!va) throw std::invalid_argument("membership_matrix: group is not root-realized");
  if (!va->points().empty() && va->points()[0].size() != m.dim())
    throw std::invalid_argument("membership_matrix: dimension mismatch");
  std::vector<std::uint32_t> img(va->degree());
  for (std::size_t i = 0; i < va->degree(); ++i) {
    std::size_t j = va->index_of(m.apply(va->points()[i]));
    if (j == VectorAction::npos)
      throw std::domain_error("membership_matrix: matrix does not preserve the root set");
    img[i] = static_cast<std::uint32_t>(j);
  }
  if (!g.chain().contains(Permutation(std::move(img))))
    throw std::domain_error("membership_matrix: induced permutation fails chain membership");
  return Element(m);
}

}  // namespace beauville
