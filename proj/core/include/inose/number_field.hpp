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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "inose/errors.hpp"
#include "inose/rational.hpp"

namespace inose {

class NFElement;

namespace detail {

// One step of a tower: a generator adjoined to the parent field through a
// monic minimal polynomial whose coefficients live in the parent.
// Images of the generators under a homomorphism onto F_p (p = 0 when none
// was found).  Used only to certify coprimality quickly.
struct ModularImage {
  std::uint32_t p = 0;
  std::vector<std::uint32_t> gens;
};

struct TowerNode {
  std::shared_ptr<const TowerNode> parent;
  std::string name;
  std::size_t step_degree = 0;
  std::size_t parent_degree = 1;
  std::size_t degree = 1;  // parent_degree * step_degree
  std::size_t depth = 0;   // number of steps including this one
  // minpoly[j] is the coefficient of x^j (j < step_degree) in coordinates of
  // the parent field; the leading coefficient 1 is implicit.
  std::vector<std::vector<BigRational>> minpoly;
  // minpoly[j] is rational for every j; enables scalar reduction.
  bool rational_minpoly = true;
  ModularImage modular;
};

}  // namespace detail

// An iterated extension Q(g1)(g2)...(gn).  Elements use the lexicographic
// power-product basis g1^e1 * ... * gn^en with e1 varying fastest, so an
// element of a prefix tower embeds by zero padding.
class FieldTower {
 public:
  FieldTower() = default;  // Q

  static FieldTower rationals() { return FieldTower(); }

  // Adjoins a root of the monic polynomial whose ascending coefficients
  // (over this tower) are `minpoly`.  Irreducibility is not checked here;
  // a reducible polynomial surfaces as NotAField on inversion.
  FieldTower extend(const std::string& name,
                    const std::vector<NFElement>& minpoly) const;
  FieldTower extend(const std::string& name,
                    const std::vector<BigRational>& minpoly) const;

  std::size_t degree() const { return node_ ? node_->degree : 1; }
  std::size_t num_steps() const { return node_ ? node_->depth : 0; }

  // Steps are indexed from the bottom: step 0 is the first adjoined generator.
  const std::string& generator_name(std::size_t step) const;
  std::size_t step_degree(std::size_t step) const;
  // Ascending coefficient list including the leading 1, over prefix(step).
  std::vector<NFElement> minpoly(std::size_t step) const;

  FieldTower prefix(std::size_t steps) const;
  FieldTower parent() const { return prefix(num_steps() ? num_steps() - 1 : 0); }
  // True when `base` is a prefix of this tower (structurally).
  bool extends(const FieldTower& base) const;

  NFElement zero() const;
  NFElement one() const;
  NFElement from_rational(const BigRational& q) const;
  NFElement from_int(long n) const;
  NFElement generator(std::size_t step) const;
  // Looks up a generator by name; throws ParseError when absent.
  NFElement generator(const std::string& name) const;

  const detail::TowerNode* node() const { return node_.get(); }
  // The homomorphism onto F_p chosen when the tower was built.
  const detail::ModularImage& modular() const;

  friend bool operator==(const FieldTower& a, const FieldTower& b);

 private:
  explicit FieldTower(std::shared_ptr<const detail::TowerNode> node)
      : node_(std::move(node)) {}
  const detail::TowerNode* step_node(std::size_t step) const;

  std::shared_ptr<const detail::TowerNode> node_;
};

// Exact element of a FieldTower, stored as its coordinate vector.
class NFElement {
 public:
  NFElement() : coeffs_(1) {}  // 0 in Q
  NFElement(FieldTower tower, std::vector<BigRational> coeffs);
  NFElement(const FieldTower& tower, const BigRational& q);

  const FieldTower& tower() const { return tower_; }
  std::span<const BigRational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  // Requires is_rational().
  const BigRational& rational_part() const { return coeffs_[0]; }

  NFElement inverse() const;
  NFElement pow(long e) const;

  NFElement& operator+=(const NFElement& o);
  NFElement& operator-=(const NFElement& o);
  NFElement& operator*=(const NFElement& o);
  NFElement& operator/=(const NFElement& o);
  NFElement& operator*=(const BigRational& q);

  friend NFElement operator+(NFElement a, const NFElement& b) { return a += b; }
  friend NFElement operator-(NFElement a, const NFElement& b) { return a -= b; }
  friend NFElement operator*(const NFElement& a, const NFElement& b);
  friend NFElement operator/(const NFElement& a, const NFElement& b) {
    return a * b.inverse();
  }
  friend NFElement operator*(NFElement a, const BigRational& q) { return a *= q; }
  friend NFElement operator*(const BigRational& q, NFElement a) { return a *= q; }
  NFElement operator-() const;

  friend bool operator==(const NFElement& a, const NFElement& b);

  // Re-expresses this element in `target`, which must extend its tower.
  NFElement lift_to(const FieldTower& target) const;
  // Inverse of lift_to; NotInSubfield when the element does not lie in `base`.
  NFElement project_to(const FieldTower& base) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const NFElement& x) {
    return os << x.to_string();
  }

 private:
  void check_same_tower(const NFElement& o) const;

  FieldTower tower_;
  std::vector<BigRational> coeffs_;
};

// A field automorphism given by the images of the generators.
class FieldAutomorphism {
 public:
  // Each image must satisfy the conjugated minimal polynomial of its
  // generator; InvalidAutomorphism otherwise.
  FieldAutomorphism(FieldTower tower, std::vector<NFElement> images);

  static FieldAutomorphism identity(const FieldTower& tower);
  // Sends the generator `name` to `image` and fixes all other generators.
  static FieldAutomorphism moving(const FieldTower& tower,
                                  const std::string& name,
                                  const NFElement& image);

  const FieldTower& tower() const { return tower_; }
  const std::vector<NFElement>& images() const { return images_; }

  NFElement operator()(const NFElement& x) const;
  FieldAutomorphism then(const FieldAutomorphism& next) const;

 private:
  NFElement apply_prefix(std::size_t steps,
                         std::span<const BigRational> chunk) const;

  FieldTower tower_;
  std::vector<NFElement> images_;
};

// Reads an expression in the tower's generators: integers, rationals,
// + - * / ^ (integer exponents) and parentheses.  Accepts to_string() output.
NFElement parse_element(const FieldTower& tower, const std::string& text);

// Image of x under tower.modular(); nullopt when x is not integral at the
// chosen prime or no prime is available.
std::optional<std::uint32_t> reduce_mod(const NFElement& x);

}  // namespace inose
