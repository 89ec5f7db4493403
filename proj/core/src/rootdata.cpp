#include "bruhat/rootdata.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace bruhat {

std::string Weight::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < rank(); ++i) {
    if (i) os << ",";
    os << rat_to_string(c[i]);
  }
  os << ")";
  return os.str();
}

std::string WeylWord::to_string() const {
  std::ostringstream os;
  for (size_t i = 0; i < letters.size(); ++i) {
    if (i) os << ",";
    os << letters[i];
  }
  return os.str();
}

WeylWord WeylWord::parse(const std::string& csv) {
  WeylWord w;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    w.letters.push_back(std::stoi(item));
  }
  return w;
}

RootData RootData::simple(const std::string& type_label, const Rat& form_scale) {
  RootData rd;
  rd.label_ = type_label;
  rd.scale_ = form_scale;
  if (type_label.size() < 2) throw std::invalid_argument("bad type label: " + type_label);
  char family = type_label[0];
  int n = std::stoi(type_label.substr(1));
  if (family == 'A' && n >= 1 && n <= 8) {
    rd.rank_ = n;
    rd.cartan_.assign(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      rd.cartan_[i][i] = 2;
      if (i + 1 < n) rd.cartan_[i][i + 1] = rd.cartan_[i + 1][i] = -1;
    }
    rd.sym_.assign(n, Rat(1));
  } else if (family == 'G' && n == 2) {
    rd.rank_ = 2;
    // alpha_1 short, alpha_2 long; cartan(i,j) = <alpha_j, alpha_i^vee>
    rd.cartan_ = {{2, -3}, {-1, 2}};
    rd.sym_ = {Rat(1), Rat(3)};
  } else {
    throw std::invalid_argument("unsupported type: " + type_label);
  }
  // symmetry of d_i a_ij
  for (int i = 0; i < rd.rank_; ++i)
    for (int j = 0; j < rd.rank_; ++j)
      if (rd.sym_[i] * rd.cartan_[i][j] != rd.sym_[j] * rd.cartan_[j][i])
        throw std::logic_error("symmetrizer mismatch");
  MatQ A(rd.rank_, rd.rank_);
  for (int i = 0; i < rd.rank_; ++i)
    for (int j = 0; j < rd.rank_; ++j) A.at(i, j) = Rat(rd.cartan_[i][j]);
  rd.cartan_inv_ = A.inverse();
  return rd;
}

void RootData::check_letter(int l) const {
  if (l < 1 || l > rank_) throw std::out_of_range("Weyl letter out of range: " + std::to_string(l));
}

Weight RootData::simple_root(int j) const {
  Weight w = Weight::zero(rank_);
  for (int i = 0; i < rank_; ++i) w.c[i] = Rat(cartan_[i][j]);
  return w;
}

Rat RootData::pairing(const Weight& a, const Weight& b) const {
  // express b in simple-root coords m = A^{-1} b, then <a,b> = sum scale d_j a_j m_j
  Rat acc(0);
  for (int j = 0; j < rank_; ++j) {
    Rat mj(0);
    for (int i = 0; i < rank_; ++i) mj += cartan_inv_.at(j, i) * b.c[i];
    acc += scale_ * sym_[j] * a.c[j] * mj;
  }
  return acc;
}

Weight RootData::reflect(int i, const Weight& w) const {
  Weight r = w;
  Rat ci = w.c[i];
  Weight ai = simple_root(i);
  for (int k = 0; k < rank_; ++k) r.c[k] -= ci * ai.c[k];
  return r;
}

Weight RootData::weyl_act(const WeylWord& w, const Weight& lam) const {
  Weight r = lam;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
    check_letter(*it);
    r = reflect(*it - 1, r);
  }
  return r;
}

MatQ RootData::weight_action_matrix(const WeylWord& w) const {
  MatQ M = MatQ::identity(rank_);
  for (int j = 0; j < rank_; ++j) {
    Weight col = weyl_act(w, Weight::fundamental(rank_, j));
    for (int i = 0; i < rank_; ++i) M.at(i, j) = col.c[i];
  }
  return M;
}

MatQ RootData::cartan_action_matrix(const WeylWord& w) const {
  // s_i(h_j) = h_j - cartan(j, i) h_i, applied right-to-left for the word
  MatQ M = MatQ::identity(rank_);
  auto reflect_vec = [&](int i, std::vector<Rat> v) {
    // alpha_i(h_j) = cartan(j, i)
    Rat ai_of_v(0);
    for (int j = 0; j < rank_; ++j) ai_of_v += Rat(cartan_[j][i]) * v[j];
    v[i] -= ai_of_v;
    return v;
  };
  for (int j = 0; j < rank_; ++j) {
    std::vector<Rat> v(rank_, Rat(0));
    v[j] = Rat(1);
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
      v = reflect_vec(*it - 1, std::move(v));
    for (int i = 0; i < rank_; ++i) M.at(i, j) = v[i];
  }
  return M;
}

MatQ RootData::coroot_gram() const {
  // h_i = (2/<a_i,a_i>) a_i^#, so <h_i,h_j> = 4 <a_i,a_j> / (<a_i,a_i><a_j,a_j>)
  MatQ G(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) {
      Rat aii = pairing(simple_root(i), simple_root(i));
      Rat ajj = pairing(simple_root(j), simple_root(j));
      Rat aij = pairing(simple_root(i), simple_root(j));
      G.at(i, j) = Rat(4) * aij / (aii * ajj);
    }
  return G;
}

bool RootData::is_identity(const WeylWord& w) const {
  return weight_action_matrix(w) == MatQ::identity(rank_);
}

bool RootData::same_element(const WeylWord& a, const WeylWord& b) const {
  return weight_action_matrix(a) == weight_action_matrix(b);
}

namespace {

bool is_negative_root_coords(const std::vector<Rat>& alpha_coords) {
  bool any = false;
  for (const auto& v : alpha_coords) {
    if (sgn(v) > 0) return false;
    if (sgn(v) < 0) any = true;
  }
  return any;
}

}  // namespace

WeylWord RootData::reduced_word(const WeylWord& w) const {
  for (int l : w.letters) check_letter(l);
  // peel descents: l(s_i r) < l(r) iff r^{-1}(alpha_i) < 0
  MatQ M = weight_action_matrix(w);
  MatQ Minv = M.inverse();
  WeylWord out;
  int guard = 0;
  while (!(M == MatQ::identity(rank_))) {
    if (++guard > 10000) throw std::logic_error("reduced_word: no termination");
    int found = -1;
    for (int i = 0; i < rank_; ++i) {
      // r^{-1}(alpha_i) in alpha coords: A^{-1} * (Minv * alpha_i_fw)
      Weight ai = simple_root(i);
      std::vector<Rat> img(rank_, Rat(0));
      for (int r = 0; r < rank_; ++r)
        for (int c = 0; c < rank_; ++c) img[r] += Minv.at(r, c) * ai.c[c];
      std::vector<Rat> acoords(rank_, Rat(0));
      for (int r = 0; r < rank_; ++r)
        for (int c = 0; c < rank_; ++c) acoords[r] += cartan_inv_.at(r, c) * img[c];
      if (is_negative_root_coords(acoords)) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::logic_error("reduced_word: no descent");
    out.letters.push_back(found + 1);
    // r <- s_i r
    WeylWord si(std::vector<int>{found + 1});
    MatQ Si = weight_action_matrix(si);
    M = Si * M;
    Minv = Minv * Si;  // (s_i r)^{-1} = r^{-1} s_i
  }
  return out;
}

int RootData::length(const WeylWord& w) const { return reduced_word(w).length(); }

std::vector<Weight> RootData::coord_weights(const WeylWord& u) const {
  std::vector<Weight> out;
  WeylWord prefix;
  for (int l : u.letters) {
    check_letter(l);
    out.push_back(weyl_act(prefix, simple_root(l - 1)));
    prefix.letters.push_back(l);
  }
  return out;
}

LeafDimensions RootData::leaf_dimension(const WeylWord& u) const {
  MatQ W = cartan_action_matrix(u);
  MatQ OneMinus = MatQ::identity(rank_) - W;
  int r = mat_rank(OneMinus);
  return LeafDimensions{r, u.length() + r};
}

LagrangianData RootData::lagrangian_data(const WeylWord& u) const {
  MatQ W = cartan_action_matrix(u);
  LagrangianData out;
  std::vector<std::vector<Rat>> p1rows, p2rows;
  for (int j = 0; j < rank_; ++j) {
    std::vector<Rat> zeta(rank_, Rat(0));
    zeta[j] = Rat(1);
    std::vector<Rat> wz(rank_, Rat(0));
    for (int i = 0; i < rank_; ++i) wz[i] = W.at(i, j);
    std::vector<Rat> row(2 * rank_), flip(2 * rank_);
    for (int i = 0; i < rank_; ++i) {
      Rat a = zeta[i] + wz[i], b = -zeta[i] + wz[i];
      row[i] = a;
      row[rank_ + i] = b;
      flip[i] = b;
      flip[rank_ + i] = a;
    }
    out.basis.push_back(row);
    out.flip_basis.push_back(flip);
    p1rows.push_back(std::vector<Rat>(row.begin(), row.begin() + rank_));
    p2rows.push_back(std::vector<Rat>(row.begin() + rank_, row.end()));
  }
  auto rank_of = [&](const std::vector<std::vector<Rat>>& rows) {
    MatQ M((int)rows.size(), rank_);
    for (int i = 0; i < (int)rows.size(); ++i)
      for (int j = 0; j < rank_; ++j) M.at(i, j) = rows[i][j];
    return mat_rank(M);
  };
  out.p1_rank = rank_of(p1rows);
  out.p2_rank = rank_of(p2rows);
  return out;
}

std::vector<std::vector<int>> RootData::positive_roots() const {
  // close the simple roots under reflections
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> frontier;
  for (int i = 0; i < rank_; ++i) {
    std::vector<int> a(rank_, 0);
    a[i] = 1;
    roots.insert(a);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& beta : frontier) {
      for (int i = 0; i < rank_; ++i) {
        // s_i(beta) in alpha coords: beta - <beta, alpha_i^vee> alpha_i
        int pair = 0;
        for (int j = 0; j < rank_; ++j) pair += cartan_[i][j] * beta[j];
        std::vector<int> im = beta;
        im[i] -= pair;
        bool pos = true, nonzero = false;
        for (int v : im) {
          if (v < 0) pos = false;
          if (v != 0) nonzero = true;
        }
        if (pos && nonzero && roots.insert(im).second) next.push_back(im);
      }
    }
    frontier = std::move(next);
  }
  std::vector<std::vector<int>> out(roots.begin(), roots.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int v : a) ha += v;
    for (int v : b) hb += v;
    if (ha != hb) return ha < hb;
    return a < b;
  });
  return out;
}

Rat RootData::root_length_sq(const std::vector<int>& ac) const {
  Rat acc(0);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j)
      acc += Rat(ac[i]) * Rat(ac[j]) * scale_ * sym_[i] * Rat(cartan_[i][j]);
  return acc;
}

std::string RootData::to_json() const {
  std::ostringstream os;
  os << "{\"type\":\"" << label_ << "\",\"cartan\":[";
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ",";
    os << "[";
    for (int j = 0; j < rank_; ++j) {
      if (j) os << ",";
      os << cartan_[i][j];
    }
    os << "]";
  }
  os << "],\"symmetrizer\":[";
  for (int i = 0; i < rank_; ++i) {
    if (i) os << ",";
    os << "\"" << rat_to_string(sym_[i]) << "\"";
  }
  os << "],\"form_scale\":\"" << rat_to_string(scale_) << "\"}";
  return os.str();
}

}  // namespace bruhat
