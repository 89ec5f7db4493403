#pragma once

#include <string>
#include <vector>

#include "bruhat/matrix.hpp"
#include "bruhat/rational.hpp"

namespace bruhat {

// Weight in the fundamental-weight basis.
struct Weight {
  std::vector<Rat> c;

  Weight() = default;
  explicit Weight(std::vector<Rat> coeffs) : c(std::move(coeffs)) {}
  static Weight zero(int rank) { return Weight(std::vector<Rat>(rank, Rat(0))); }
  static Weight fundamental(int rank, int alpha) {
    Weight w = zero(rank);
    w.c[alpha] = Rat(1);
    return w;
  }
  int rank() const { return (int)c.size(); }
  bool is_zero() const {
    for (const auto& v : c)
      if (!bruhat::is_zero(v)) return false;
    return true;
  }
  bool is_dominant() const {
    for (const auto& v : c)
      if (sgn(v) < 0) return false;
    return true;
  }
  bool is_integral() const {
    for (const auto& v : c)
      if (v.get_den() != 1) return false;
    return true;
  }
  Weight operator+(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.c[i] += o.c[i];
    return r;
  }
  Weight operator-(const Weight& o) const {
    Weight r = *this;
    for (int i = 0; i < rank(); ++i) r.c[i] -= o.c[i];
    return r;
  }
  Weight operator-() const {
    Weight r = *this;
    for (auto& v : r.c) v = -v;
    return r;
  }
  Weight operator*(const Rat& s) const {
    Weight r = *this;
    for (auto& v : r.c) v *= s;
    return r;
  }
  bool operator==(const Weight& o) const { return c == o.c; }
  bool operator!=(const Weight& o) const { return !(*this == o); }
  std::string to_string() const;
};

// Rational vector in the coroot basis h_{alpha_1}..h_{alpha_r}.
struct CartanVector {
  std::vector<Rat> c;
  explicit CartanVector(std::vector<Rat> coeffs = {}) : c(std::move(coeffs)) {}
  int rank() const { return (int)c.size(); }
};

// Word in the simple reflections, letters 1..rank, not required reduced.
struct WeylWord {
  std::vector<int> letters;

  WeylWord() = default;
  explicit WeylWord(std::vector<int> ls) : letters(std::move(ls)) {}
  int length() const { return (int)letters.size(); }
  bool empty() const { return letters.empty(); }
  WeylWord reversed() const {
    return WeylWord(std::vector<int>(letters.rbegin(), letters.rend()));
  }
  WeylWord concat(const WeylWord& o) const {
    WeylWord r = *this;
    r.letters.insert(r.letters.end(), o.letters.begin(), o.letters.end());
    return r;
  }
  // letters k..l (1-based, inclusive); empty if k > l.
  WeylWord segment(int k, int l) const {
    WeylWord r;
    for (int i = k; i <= l; ++i) r.letters.push_back(letters[i - 1]);
    return r;
  }
  bool operator==(const WeylWord& o) const { return letters == o.letters; }
  std::string to_string() const;
  static WeylWord parse(const std::string& csv);  // "1,2,1"
};

struct LeafDimensions {
  int leaf_stabilizer_dim;
  int symplectic_leaf_dim;
};

struct LagrangianData {
  std::vector<std::vector<Rat>> basis;       // rows (zeta1 | zeta2) in coroot coords, length 2r
  std::vector<std::vector<Rat>> flip_basis;  // same for Flip(l_x)
  int p1_rank;
  int p2_rank;
};

class RootData {
 public:
  // type_label: "A1".."A8", "G2". form_scale scales the bilinear form; the
  // default makes short simple roots have squared length 2.
  static RootData simple(const std::string& type_label, const Rat& form_scale = Rat(1));

  const std::string& label() const { return label_; }
  int rank() const { return rank_; }
  // cartan(i, j) = <alpha_j, alpha_i^vee>
  int cartan(int i, int j) const { return cartan_[i][j]; }
  const Rat& symmetrizer(int i) const { return sym_[i]; }
  const Rat& form_scale() const { return scale_; }

  // alpha_j expressed in the fundamental-weight basis (0-based alpha index).
  Weight simple_root(int j) const;
  // <lambda, mu> under the chosen form.
  Rat pairing(const Weight& a, const Weight& b) const;
  // s_i(lambda), 0-based i.
  Weight reflect(int i, const Weight& w) const;
  // Left action of the word: w(lambda) = s_{l1} s_{l2} ... (lambda).
  Weight weyl_act(const WeylWord& w, const Weight& lam) const;

  // Matrix of the word's action on t^* in the fundamental-weight basis.
  MatQ weight_action_matrix(const WeylWord& w) const;
  // Matrix of the action on t in the coroot basis.
  MatQ cartan_action_matrix(const WeylWord& w) const;
  // Gram matrix <h_i, h_j> of the coroot basis.
  MatQ coroot_gram() const;

  bool is_identity(const WeylWord& w) const;
  bool same_element(const WeylWord& a, const WeylWord& b) const;
  int length(const WeylWord& w) const;  // reduced length of the product
  WeylWord reduced_word(const WeylWord& w) const;
  bool is_reduced(const WeylWord& w) const { return length(w) == w.length(); }

  // Weight of coordinate x_j on the Bott-Samelson cell: s_1..s_{j-1}(alpha_j).
  std::vector<Weight> coord_weights(const WeylWord& u) const;

  LeafDimensions leaf_dimension(const WeylWord& u) const;
  LagrangianData lagrangian_data(const WeylWord& u) const;

  // All positive roots in simple-root coordinates.
  std::vector<std::vector<int>> positive_roots() const;
  Rat root_length_sq(const std::vector<int>& alpha_coords) const;

  std::string to_json() const;

 private:
  void check_letter(int l) const;

  std::string label_;
  int rank_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<Rat> sym_;
  Rat scale_ = Rat(1);
  MatQ cartan_inv_;  // A^{-1}, for converting fw coords to simple-root coords
};

}  // namespace bruhat
