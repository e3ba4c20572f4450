// Copyright 2026 The Inose-MWL Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "inose/number_field.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace inose {

namespace {

using Vec = std::vector<BigRational>;
using Node = detail::TowerNode;
using CSpan = std::span<const BigRational>;

bool all_zero(CSpan x) {
  return std::all_of(x.begin(), x.end(), [](const BigRational& q) { return sgn(q) == 0; });
}

void add_into(std::span<BigRational> acc, CSpan x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) acc[i] += x[i];
}

void sub_into(std::span<BigRational> acc, CSpan x) {
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) acc[i] -= x[i];
}


// ---------------------------------------------------- reduction modulo p

constexpr std::uint32_t kFirstModulus = 40009;

std::optional<std::uint32_t> rational_mod(const BigRational& q, std::uint32_t p) {
  const unsigned long d = mpz_fdiv_ui(q.get_den_mpz_t(), p);
  if (d == 0) return std::nullopt;
  const std::uint64_t n = mpz_fdiv_ui(q.get_num_mpz_t(), p);
  // d^(p-2) mod p.
  std::uint64_t inv = 1, base = d;
  for (std::uint32_t e = p - 2; e; e >>= 1) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(n * inv % p);
}

// Image of a coordinate vector of the field of `n` (nullptr for Q), given
// generator images for all steps up to n.
std::optional<std::uint32_t> span_mod(const Node* n, CSpan x, std::uint32_t p,
                                      const std::vector<std::uint32_t>& gens) {
  if (n == nullptr) return rational_mod(x[0], p);
  const std::size_t pd = n->parent_degree;
  const std::uint64_t g = gens[n->depth - 1];
  std::uint64_t acc = 0;
  for (std::size_t j = n->step_degree; j-- > 0;) {
    auto c = span_mod(n->parent.get(), x.subspan(j * pd, pd), p, gens);
    if (!c) return std::nullopt;
    acc = (acc * g + *c) % p;
  }
  return static_cast<std::uint32_t>(acc);
}

// A root modulo p of the minimal polynomial of n, by exhaustive search.
std::optional<std::uint32_t> step_root(const Node* n, std::uint32_t p, const std::vector<std::uint32_t>& gens) {
  std::vector<std::uint64_t> f;
  for (const auto& c : n->minpoly) {
    auto r = span_mod(n->parent.get(), c, p, gens);
    if (!r) return std::nullopt;
    f.push_back(*r);
  }
  for (std::uint64_t x = 0; x < p; ++x) {
    std::uint64_t v = 1;
    for (std::size_t j = f.size(); j-- > 0;) v = (v * x + f[j]) % p;
    if (v == 0) return static_cast<std::uint32_t>(x);
  }
  return std::nullopt;
}

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

detail::ModularImage choose_image(const Node* leaf) {
  std::vector<const Node*> chain;
  for (const Node* n = leaf; n; n = n->parent.get()) chain.insert(chain.begin(), n);
  auto attempt = [&](std::uint32_t p) -> std::optional<detail::ModularImage> {
    detail::ModularImage img{p, {}};
    for (const Node* n : chain) {
      auto r = step_root(n, p, img.gens);
      if (!r) return std::nullopt;
      img.gens.push_back(*r);
    }
    return img;
  };
  const Node* parent = leaf->parent.get();
  if (parent && parent->modular.p != 0) {
    detail::ModularImage img = parent->modular;
    if (auto r = step_root(leaf, img.p, img.gens)) {
      img.gens.push_back(*r);
      return img;
    }
  }
  std::uint32_t p = kFirstModulus;
  for (int tries = 0; tries < 64; ++tries, p += 2) {
    while (!is_prime(p)) p += 2;
    if (auto img = attempt(p)) return *img;
  }
  return {};
}

Vec mul(const Node* n, CSpan a, CSpan b);

// Reduces a product polynomial (chunks over the parent) modulo the minimal
// polynomial of `n`, leaving the result in the first step_degree chunks.
void reduce(const Node* n, std::vector<Vec>& prod) {
  const std::size_t d = n->step_degree;
  const Node* p = n->parent.get();
  for (std::size_t k = prod.size(); k-- > d;) {
    Vec c = std::move(prod[k]);
    if (all_zero(c)) continue;
    for (std::size_t j = 0; j < d; ++j) {
      auto& target = prod[k - d + j];
      if (n->rational_minpoly) {
        const BigRational& s = n->minpoly[j][0];
        if (sgn(s) == 0) continue;
        for (std::size_t t = 0; t < c.size(); ++t)
          if (sgn(c[t]) != 0) target[t] -= c[t] * s;
      } else {
        if (all_zero(n->minpoly[j])) continue;
        sub_into(target, mul(p, c, n->minpoly[j]));
      }
    }
  }
}

Vec mul(const Node* n, CSpan a, CSpan b) {
  if (!n) return Vec{a[0] * b[0]};
  const std::size_t d = n->step_degree, m = n->parent_degree;
  const Node* p = n->parent.get();
  std::vector<char> anz(d), bnz(d);
  for (std::size_t i = 0; i < d; ++i) {
    anz[i] = !all_zero(a.subspan(i * m, m));
    bnz[i] = !all_zero(b.subspan(i * m, m));
  }
  std::vector<Vec> prod(2 * d - 1, Vec(m));
  for (std::size_t i = 0; i < d; ++i) {
    if (!anz[i]) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (!bnz[j]) continue;
      add_into(prod[i + j], mul(p, a.subspan(i * m, m), b.subspan(j * m, m)));
    }
  }
  reduce(n, prod);
  Vec out;
  out.reserve(d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (auto& q : prod[i]) out.push_back(std::move(q));
  return out;
}

Vec inv(const Node* n, CSpan a);

// Polynomials over the parent field of a step, as chunk vectors.
using ChunkPoly = std::vector<Vec>;

void trim(ChunkPoly& f) {
  while (!f.empty() && all_zero(f.back())) f.pop_back();
}

ChunkPoly chunk_mul(const Node* p, const ChunkPoly& f, const ChunkPoly& g, std::size_t m) {
  if (f.empty() || g.empty()) return {};
  ChunkPoly r(f.size() + g.size() - 1, Vec(m));
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (all_zero(f[i])) continue;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (all_zero(g[j])) continue;
      add_into(r[i + j], mul(p, f[i], g[j]));
    }
  }
  trim(r);
  return r;
}

ChunkPoly chunk_sub(ChunkPoly f, const ChunkPoly& g, std::size_t m) {
  if (f.size() < g.size()) f.resize(g.size(), Vec(m));
  for (std::size_t i = 0; i < g.size(); ++i) sub_into(f[i], g[i]);
  trim(f);
  return f;
}

// Division with remainder over the parent field.
void chunk_divrem(const Node* p, ChunkPoly f, const ChunkPoly& g, std::size_t m,
                  ChunkPoly& q, ChunkPoly& r) {
  q.clear();
  trim(f);
  if (f.size() < g.size()) {
    r = std::move(f);
    return;
  }
  const Vec lead_inv = inv(p, g.back());
  q.assign(f.size() - g.size() + 1, Vec(m));
  for (std::size_t k = f.size(); k-- >= g.size();) {
    if (all_zero(f[k])) continue;
    Vec c = mul(p, f[k], lead_inv);
    const std::size_t shift = k - g.size() + 1;
    for (std::size_t j = 0; j < g.size(); ++j) sub_into(f[shift + j], mul(p, c, g[j]));
    q[shift] = std::move(c);
  }
  trim(f);
  trim(q);
  r = std::move(f);
}

Vec inv(const Node* n, CSpan a) {
  if (all_zero(a)) fail(ErrorCode::DivisionByZero, "inverse of zero");
  if (!n) return Vec{1 / a[0]};
  const std::size_t d = n->step_degree, m = n->parent_degree;
  const Node* p = n->parent.get();
  ChunkPoly A;
  for (std::size_t i = 0; i < d; ++i) A.emplace_back(a.begin() + i * m, a.begin() + (i + 1) * m);
  trim(A);
  if (A.size() == 1) {
    Vec out(d * m);
    Vec c = inv(p, A[0]);
    std::move(c.begin(), c.end(), out.begin());
    return out;
  }
  ChunkPoly M(n->minpoly.begin(), n->minpoly.end());
  Vec one(m);
  one[0] = 1;
  M.push_back(one);
  // Extended Euclid tracking only the cofactor of A.
  ChunkPoly r0 = std::move(M), r1 = A, s0, s1{one};
  while (r1.size() > 1) {
    ChunkPoly q, r;
    chunk_divrem(p, r0, r1, m, q, r);
    ChunkPoly s2 = chunk_sub(s0, chunk_mul(p, q, s1, m), m);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r1.empty())
    fail(ErrorCode::NotAField,
         "minimal polynomial of '" + n->name + "' shares a factor with the element");
  const Vec c = inv(p, r1[0]);
  Vec out(d * m);
  for (std::size_t i = 0; i < s1.size(); ++i) {
    Vec t = mul(p, s1[i], c);
    std::move(t.begin(), t.end(), out.begin() + i * m);
  }
  return out;
}

bool same_structure(const Node* a, const Node* b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->name == b->name && a->step_degree == b->step_degree &&
         a->minpoly == b->minpoly && same_structure(a->parent.get(), b->parent.get());
}

}  // namespace

// ---------------------------------------------------------------- FieldTower

bool operator==(const FieldTower& a, const FieldTower& b) {
  return same_structure(a.node_.get(), b.node_.get());
}

const detail::TowerNode* FieldTower::step_node(std::size_t step) const {
  if (step >= num_steps()) fail(ErrorCode::ParseError, "tower step out of range");
  const Node* n = node_.get();
  for (std::size_t k = num_steps() - 1; k > step; --k) n = n->parent.get();
  return n;
}

const std::string& FieldTower::generator_name(std::size_t step) const {
  return step_node(step)->name;
}

std::size_t FieldTower::step_degree(std::size_t step) const {
  return step_node(step)->step_degree;
}

std::vector<NFElement> FieldTower::minpoly(std::size_t step) const {
  const Node* n = step_node(step);
  FieldTower base = prefix(step);
  std::vector<NFElement> out;
  for (const auto& c : n->minpoly) out.emplace_back(base, c);
  out.push_back(base.one());
  return out;
}

FieldTower FieldTower::prefix(std::size_t steps) const {
  if (steps > num_steps()) fail(ErrorCode::TowerMismatch, "prefix longer than tower");
  std::shared_ptr<const Node> n = node_;
  for (std::size_t k = num_steps(); k > steps; --k) n = n->parent;
  return FieldTower(std::move(n));
}

bool FieldTower::extends(const FieldTower& base) const {
  if (base.num_steps() > num_steps()) return false;
  return prefix(base.num_steps()) == base;
}

FieldTower FieldTower::extend(const std::string& name,
                              const std::vector<NFElement>& minpoly) const {
  if (minpoly.size() < 3)
    fail(ErrorCode::DegreeTooSmall, "minimal polynomial of '" + name + "' has degree < 2");
  std::vector<NFElement> mp;
  for (const auto& c : minpoly) mp.push_back(c.lift_to(*this));
  if (!mp.back().is_one())
    fail(ErrorCode::NotMonic, "minimal polynomial of '" + name + "' is not monic");
  auto node = std::make_shared<Node>();
  node->parent = node_;
  node->name = name;
  node->step_degree = mp.size() - 1;
  node->parent_degree = degree();
  node->degree = degree() * node->step_degree;
  node->depth = num_steps() + 1;
  for (std::size_t j = 0; j + 1 < mp.size(); ++j) {
    node->minpoly.emplace_back(mp[j].coeffs().begin(), mp[j].coeffs().end());
    if (!mp[j].is_rational()) node->rational_minpoly = false;
  }
  node->modular = choose_image(node.get());
  return FieldTower(std::move(node));
}

FieldTower FieldTower::extend(const std::string& name,
                              const std::vector<BigRational>& minpoly) const {
  std::vector<NFElement> mp;
  for (const auto& q : minpoly) mp.push_back(from_rational(q));
  return extend(name, mp);
}

const detail::ModularImage& FieldTower::modular() const {
  static const detail::ModularImage rationals{kFirstModulus, {}};
  return node_ ? node_->modular : rationals;
}

std::optional<std::uint32_t> reduce_mod(const NFElement& x) {
  const auto& img = x.tower().modular();
  if (img.p == 0) return std::nullopt;
  return span_mod(x.tower().node(), x.coeffs(), img.p, img.gens);
}

NFElement FieldTower::zero() const { return NFElement(*this, BigRational(0)); }
NFElement FieldTower::one() const { return NFElement(*this, BigRational(1)); }
NFElement FieldTower::from_rational(const BigRational& q) const { return NFElement(*this, q); }
NFElement FieldTower::from_int(long n) const { return NFElement(*this, BigRational(n)); }

NFElement FieldTower::generator(std::size_t step) const {
  const Node* n = step_node(step);
  std::vector<BigRational> c(degree());
  c[n->parent_degree] = 1;
  return NFElement(*this, std::move(c));
}

NFElement FieldTower::generator(const std::string& name) const {
  for (std::size_t k = 0; k < num_steps(); ++k)
    if (generator_name(k) == name) return generator(k);
  fail(ErrorCode::ParseError, "no generator named '" + name + "'");
}

// ----------------------------------------------------------------- NFElement

NFElement::NFElement(FieldTower tower, std::vector<BigRational> coeffs)
    : tower_(std::move(tower)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != tower_.degree())
    fail(ErrorCode::TowerMismatch, "coefficient vector length differs from tower degree");
}

NFElement::NFElement(const FieldTower& tower, const BigRational& q)
    : tower_(tower), coeffs_(tower.degree()) {
  coeffs_[0] = q;
}

void NFElement::check_same_tower(const NFElement& o) const {
  if (tower_.node() != o.tower_.node() && !(tower_ == o.tower_))
    fail(ErrorCode::TowerMismatch, "operands live in different towers");
}

bool NFElement::is_zero() const { return all_zero(coeffs_); }

bool NFElement::is_one() const {
  return coeffs_[0] == 1 && all_zero(CSpan(coeffs_).subspan(1));
}

bool NFElement::is_rational() const { return all_zero(CSpan(coeffs_).subspan(1)); }

NFElement& NFElement::operator+=(const NFElement& o) {
  check_same_tower(o);
  add_into(coeffs_, o.coeffs_);
  return *this;
}

NFElement& NFElement::operator-=(const NFElement& o) {
  check_same_tower(o);
  sub_into(coeffs_, o.coeffs_);
  return *this;
}

NFElement& NFElement::operator*=(const BigRational& q) {
  if (sgn(q) == 0) {
    for (auto& c : coeffs_) c = 0;
  } else {
    for (auto& c : coeffs_)
      if (sgn(c) != 0) c *= q;
  }
  return *this;
}

NFElement operator*(const NFElement& a, const NFElement& b) {
  a.check_same_tower(b);
  if (a.is_rational()) return b * a.coeffs_[0];
  if (b.is_rational()) return a * b.coeffs_[0];
  return NFElement(a.tower_, mul(a.tower_.node(), a.coeffs_, b.coeffs_));
}

NFElement& NFElement::operator*=(const NFElement& o) { return *this = *this * o; }
NFElement& NFElement::operator/=(const NFElement& o) { return *this = *this / o; }

NFElement NFElement::operator-() const {
  NFElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const NFElement& a, const NFElement& b) {
  if (!(a.tower_ == b.tower_)) return false;
  return a.coeffs_ == b.coeffs_;
}

NFElement NFElement::inverse() const {
  if (is_rational()) {
    if (sgn(coeffs_[0]) == 0) fail(ErrorCode::DivisionByZero, "inverse of zero");
    return NFElement(tower_, BigRational(1 / coeffs_[0]));
  }
  return NFElement(tower_, inv(tower_.node(), coeffs_));
}

NFElement NFElement::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  NFElement result = tower_.one(), base = *this;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

NFElement NFElement::lift_to(const FieldTower& target) const {
  if (tower_.node() == target.node()) return *this;
  if (!target.extends(tower_))
    fail(ErrorCode::TowerMismatch, "target tower does not extend the element's tower");
  std::vector<BigRational> c(target.degree());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
  return NFElement(target, std::move(c));
}

NFElement NFElement::project_to(const FieldTower& base) const {
  if (tower_.node() == base.node()) return *this;
  if (!tower_.extends(base))
    fail(ErrorCode::TowerMismatch, "element tower does not extend the target");
  if (!all_zero(CSpan(coeffs_).subspan(base.degree())))
    fail(ErrorCode::NotInSubfield, "element " + to_string() + " is not in the subfield");
  return NFElement(base, std::vector<BigRational>(coeffs_.begin(), coeffs_.begin() + base.degree()));
}

std::string NFElement::to_string() const {
  const std::size_t steps = tower_.num_steps();
  std::vector<std::size_t> degs(steps);
  std::vector<std::string> names(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    degs[k] = tower_.step_degree(k);
    names[k] = tower_.generator_name(k);
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t idx = 0; idx < coeffs_.size(); ++idx) {
    const BigRational& c = coeffs_[idx];
    if (sgn(c) == 0) continue;
    std::string mono;
    std::size_t rest = idx;
    for (std::size_t k = 0; k < steps; ++k) {
      const std::size_t e = rest % degs[k];
      rest /= degs[k];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[k];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    BigRational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (mono.empty())
      os << mag.get_str();
    else if (mag == 1)
      os << mono;
    else
      os << mag.get_str() << "*" << mono;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

// --------------------------------------------------------- FieldAutomorphism

FieldAutomorphism::FieldAutomorphism(FieldTower tower, std::vector<NFElement> images)
    : tower_(std::move(tower)) {
  if (images.size() != tower_.num_steps())
    fail(ErrorCode::InvalidAutomorphism, "need one image per generator");
  for (auto& im : images) images_.push_back(im.lift_to(tower_));
  // Check each image against the minimal polynomial conjugated by the
  // restriction of this map to the lower steps.
  for (std::size_t k = 0; k < tower_.num_steps(); ++k) {
    const auto mp = tower_.minpoly(k);
    NFElement acc = tower_.zero();
    for (std::size_t j = mp.size(); j-- > 0;)
      acc = acc * images_[k] + apply_prefix(k, mp[j].coeffs());
    if (!acc.is_zero())
      fail(ErrorCode::InvalidAutomorphism,
           "image of '" + tower_.generator_name(k) + "' is not a root of its minimal polynomial");
  }
}

FieldAutomorphism FieldAutomorphism::identity(const FieldTower& tower) {
  std::vector<NFElement> ims;
  for (std::size_t k = 0; k < tower.num_steps(); ++k) ims.push_back(tower.generator(k));
  return FieldAutomorphism(tower, std::move(ims));
}

FieldAutomorphism FieldAutomorphism::moving(const FieldTower& tower, const std::string& name,
                                            const NFElement& image) {
  std::vector<NFElement> ims;
  bool found = false;
  for (std::size_t k = 0; k < tower.num_steps(); ++k) {
    if (tower.generator_name(k) == name) {
      ims.push_back(image);
      found = true;
    } else {
      ims.push_back(tower.generator(k));
    }
  }
  if (!found) fail(ErrorCode::InvalidAutomorphism, "no generator named '" + name + "'");
  return FieldAutomorphism(tower, std::move(ims));
}

NFElement FieldAutomorphism::apply_prefix(std::size_t steps, CSpan chunk) const {
  if (steps == 0) return tower_.from_rational(chunk[0]);
  const std::size_t d = tower_.step_degree(steps - 1);
  const std::size_t m = chunk.size() / d;
  NFElement acc = tower_.zero();
  for (std::size_t j = d; j-- > 0;) {
    acc *= images_[steps - 1];
    auto sub = chunk.subspan(j * m, m);
    if (!all_zero(sub)) acc += apply_prefix(steps - 1, sub);
  }
  return acc;
}

NFElement FieldAutomorphism::operator()(const NFElement& x) const {
  const NFElement y = x.lift_to(tower_);
  return apply_prefix(tower_.num_steps(), y.coeffs());
}

FieldAutomorphism FieldAutomorphism::then(const FieldAutomorphism& next) const {
  std::vector<NFElement> ims;
  for (const auto& im : images_) ims.push_back(next(im));
  return FieldAutomorphism(tower_, std::move(ims));
}

namespace {

class ElementParser {
 public:
  ElementParser(const FieldTower& t, const std::string& text) : t_(t), s_(text) {}

  NFElement parse() {
    NFElement v = sum();
    skip();
    if (pos_ != s_.size()) error("trailing input");
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& why) const {
    fail(ErrorCode::ParseError, why + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }

  NFElement sum() {
    NFElement v = eat('-') ? -product() : (eat('+'), product());
    for (;;) {
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  NFElement product() {
    NFElement v = power();
    for (;;) {
      if (eat('*')) v *= power();
      else if (eat('/')) v /= power();
      else return v;
    }
  }
  NFElement power() {
    NFElement v = atom();
    if (eat('^')) {
      const bool neg = eat('-');
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected an exponent");
      const long e = std::stol(s_.substr(start, pos_ - start));
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  NFElement atom() {
    if (eat('(')) {
      NFElement v = sum();
      if (!eat(')')) error("expected ')'");
      return v;
    }
    if (eat('-')) return -atom();
    skip();
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return t_.from_rational(parse_rational(s_.substr(start, pos_ - start)));
    }
    while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
    if (start == pos_) error("unexpected character");
    return t_.generator(s_.substr(start, pos_ - start));
  }

  const FieldTower& t_;
  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

NFElement parse_element(const FieldTower& tower, const std::string& text) {
  return ElementParser(tower, text).parse();
}

}  // namespace inose
