#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "ctm/rational.hpp"

namespace ctm {

struct FiniteCharacter {
  std::string name;
  int dimension;
  std::vector<long long> values;  // indexed by element; real for the built-in groups
};

// Small finite group given by an explicit multiplication table plus its irreducible
// character table. Used as a ground-truth oracle: averaging an irreducible character
// over products of k commutators must give 1 / d^(2k-1).
class FiniteGroup {
 public:
  static FiniteGroup symmetric_3();
  static FiniteGroup quaternion_8();

  const std::string& name() const { return name_; }
  int order() const { return static_cast<int>(mul_.size()); }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return mul_.at(a).at(b); }
  int inverse(int a) const { return inv_.at(a); }
  const std::vector<FiniteCharacter>& characters() const { return chars_; }

  // y^{-1} z^{-1} y z
  int commutator(int y, int z) const {
    return multiply(multiply(inverse(y), inverse(z)), multiply(y, z));
  }

  // Structural sanity: group axioms, plus the character table being a plausible
  // irreducible table (class functions, dimensions, orthonormality).
  bool check_axioms(std::string* why = nullptr) const {
    auto fail = [&](const std::string& msg) {
      if (why) *why = msg;
      return false;
    };
    const int n = order();
    for (int a = 0; a < n; ++a) {
      if (static_cast<int>(mul_[a].size()) != n) return fail("multiplication table not square");
      for (int b = 0; b < n; ++b)
        if (mul_[a][b] < 0 || mul_[a][b] >= n) return fail("table entry out of range");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c)))
            return fail("associativity fails");
    for (int a = 0; a < n; ++a)
      if (multiply(identity_, a) != a || multiply(a, identity_) != a)
        return fail("identity fails");
    for (int a = 0; a < n; ++a)
      if (multiply(a, inv_[a]) != identity_ || multiply(inv_[a], a) != identity_)
        return fail("inverses fail");

    long long dim_sq = 0;
    for (const auto& chi : chars_) {
      if (static_cast<int>(chi.values.size()) != n) return fail("character length mismatch");
      if (chi.values[identity_] != chi.dimension) return fail("character value at identity");
      dim_sq += static_cast<long long>(chi.dimension) * chi.dimension;
      for (int g = 0; g < n; ++g)
        for (int h = 0; h < n; ++h)
          if (chi.values[multiply(multiply(g, h), inv_[g])] != chi.values[h])
            return fail("character is not a class function");
    }
    if (dim_sq != n) return fail("squared dimensions do not sum to the order");
    for (std::size_t a = 0; a < chars_.size(); ++a)
      for (std::size_t b = 0; b < chars_.size(); ++b) {
        long long inner = 0;
        for (int g = 0; g < n; ++g) inner += chars_[a].values[g] * chars_[b].values[g];
        if (inner != (a == b ? n : 0)) return fail("characters not orthonormal");
      }
    return true;
  }

 private:
  FiniteGroup(std::string name, std::vector<std::vector<int>> mul, int identity,
              std::vector<FiniteCharacter> chars)
      : name_(std::move(name)), mul_(std::move(mul)), identity_(identity),
        chars_(std::move(chars)) {
    inv_.assign(mul_.size(), -1);
    for (std::size_t a = 0; a < mul_.size(); ++a)
      for (std::size_t b = 0; b < mul_.size(); ++b)
        if (mul_[a][b] == static_cast<int>(identity_)) inv_[a] = static_cast<int>(b);
  }

  std::string name_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> inv_;
  int identity_;
  std::vector<FiniteCharacter> chars_;
};

inline FiniteGroup FiniteGroup::symmetric_3() {
  // Elements are the six permutations of {0,1,2} in one-line notation, composed as
  // (fg)(x) = f(g(x)).
  const std::array<std::array<int, 3>, 6> perms = {{
      {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
  }};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i)
      if (perms[i] == p) return static_cast<int>(i);
    throw std::logic_error("unknown permutation");
  };
  std::vector<std::vector<int>> mul(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> comp;
      for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
      mul[a][b] = index_of(comp);
    }
  // Index 0 is the identity; 1, 2, 5 are the transpositions; 3, 4 the 3-cycles.
  std::vector<FiniteCharacter> chars = {
      {"trivial", 1, {1, 1, 1, 1, 1, 1}},
      {"sign", 1, {1, -1, -1, 1, 1, -1}},
      {"standard", 2, {2, 0, 0, -1, -1, 0}},
  };
  return FiniteGroup("s3", std::move(mul), 0, std::move(chars));
}

inline FiniteGroup FiniteGroup::quaternion_8() {
  // Element 2a + s encodes sign (-1)^s times the basis quaternion with axis a,
  // axes ordered (1, i, j, k).
  auto axis_mul = [](int a, int b, int& sign) -> int {
    if (a == 0) return b;
    if (b == 0) return a;
    if (a == b) {
      sign = -sign;
      return 0;
    }
    // i*j = k, j*k = i, k*i = j, anticommuting otherwise.
    static const int third[4][4] = {{0, 0, 0, 0}, {0, 0, 3, 2}, {0, 3, 0, 1}, {0, 2, 1, 0}};
    bool forward = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
    if (!forward) sign = -sign;
    return third[a][b];
  };
  std::vector<std::vector<int>> mul(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      int sign = ((x & 1) ^ (y & 1)) ? -1 : 1;
      int axis = axis_mul(x >> 1, y >> 1, sign);
      mul[x][y] = 2 * axis + (sign < 0 ? 1 : 0);
    }
  std::vector<FiniteCharacter> chars = {
      {"trivial", 1, {1, 1, 1, 1, 1, 1, 1, 1}},
      {"chi_i", 1, {1, 1, 1, 1, -1, -1, -1, -1}},
      {"chi_j", 1, {1, 1, -1, -1, 1, 1, -1, -1}},
      {"chi_k", 1, {1, 1, -1, -1, -1, -1, 1, 1}},
      {"spin", 2, {2, -2, 0, 0, 0, 0, 0, 0}},
  };
  return FiniteGroup("q8", std::move(mul), 0, std::move(chars));
}

// Exact average of the character over products of k independent commutators,
// enumerated by brute force over all |G|^(2k) tuples. For an irreducible character
// this equals 1 / d^(2k-1).
inline Rational finite_commutator_average(const FiniteGroup& group, int char_index, int k) {
  if (k < 1) throw std::domain_error("k must be >= 1");
  if (char_index < 0 || char_index >= static_cast<int>(group.characters().size()))
    throw std::domain_error("character index out of range");
  const int n = group.order();
  const BigInt tuples = pow(BigInt(n), 2 * static_cast<unsigned>(k));
  if (tuples > 100000000) throw std::domain_error("finite brute force refuses > 1e8 tuples");

  std::vector<std::vector<int>> comm(n, std::vector<int>(n));
  for (int y = 0; y < n; ++y)
    for (int z = 0; z < n; ++z) comm[y][z] = group.commutator(y, z);

  const auto& chi = group.characters()[char_index].values;
  long long sum = 0;
  auto rec = [&](auto&& self, int depth, int prefix) -> void {
    if (depth == k) {
      sum += chi[prefix];
      return;
    }
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) self(self, depth + 1, group.multiply(prefix, comm[y][z]));
  };
  rec(rec, 0, group.identity());
  return Rational(BigInt(sum), tuples);
}

}  // namespace ctm
