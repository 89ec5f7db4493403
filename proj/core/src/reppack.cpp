#include "bruhat/reppack.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bruhat {

using nlohmann::json;

RepPack RepPack::bundled(const RootData& rd) {
  RepPack p;
  p.rd = rd;
  char family = rd.label()[0];
  int r = rd.rank();
  if (family == 'A') {
    p.label = rd.label() + "-defining";
    p.dim = r + 1;
    for (int k = 0; k < p.dim; ++k) {
      Weight w = Weight::zero(r);
      if (k < r) w.c[k] += 1;
      if (k > 0) w.c[k - 1] -= 1;
      p.basis_weights.push_back(w);
    }
    for (int i = 0; i < r; ++i) {
      MatQ e(p.dim, p.dim), f(p.dim, p.dim);
      e.at(i, i + 1) = Rat(1);
      f.at(i + 1, i) = Rat(1);
      p.e_simple.push_back(e);
      p.f_simple.push_back(f);
    }
    for (int a = 0; a < r; ++a) {
      MinorScheme s;
      for (int i = 0; i <= a; ++i) {
        s.rows.push_back(i);
        s.cols.push_back(i);
      }
      p.schemes.push_back(s);
    }
  } else if (family == 'G') {
    p.label = "G2-7dim";
    p.dim = 7;
    auto wt = [&](long a, long b) {
      Weight w = Weight::zero(2);
      w.c[0] = Rat(a);
      w.c[1] = Rat(b);
      return w;
    };
    p.basis_weights = {wt(1, 0), wt(-1, 1), wt(2, -1), wt(0, 0), wt(-2, 1), wt(1, -1), wt(-1, 0)};
    MatQ e1(7, 7), f1(7, 7), e2(7, 7), f2(7, 7);
    e1.at(0, 1) = 1;
    e1.at(2, 3) = 2;
    e1.at(3, 4) = 1;
    e1.at(5, 6) = 1;
    f1.at(1, 0) = 1;
    f1.at(3, 2) = 1;
    f1.at(4, 3) = 2;
    f1.at(6, 5) = 1;
    e2.at(1, 2) = 1;
    e2.at(4, 5) = 1;
    f2.at(2, 1) = 1;
    f2.at(5, 4) = 1;
    p.e_simple = {e1, e2};
    p.f_simple = {f1, f2};
    p.schemes.push_back(MinorScheme{{0}, {0}});
    p.schemes.push_back(MinorScheme{{0, 1}, {0, 1}});
  } else {
    throw std::invalid_argument("no bundled representation for " + rd.label());
  }
  return p;
}

MatQ RepPack::h_simple(int i) const {
  return e_simple[i] * f_simple[i] - f_simple[i] * e_simple[i];
}

MatQ RepPack::sbar(int i) const {
  MatQ um = unipotent<Rat>(e_simple[i], Rat(-1));
  MatQ lp = unipotent<Rat>(f_simple[i], Rat(1));
  return um * lp * um;
}

MatQ RepPack::wbar(const WeylWord& w) const {
  MatQ out = MatQ::identity(dim);
  for (int l : w.letters) out = out * sbar(l - 1);
  return out;
}

MatQ RepPack::wbarbar(const WeylWord& w) const {
  WeylWord winv = rd.reduced_word(w.reversed());
  return wbar(winv).inverse();
}

std::string RepPack::to_json() const {
  json j;
  j["label"] = label;
  j["type"] = rd.label();
  j["form_scale"] = rat_to_string(rd.form_scale());
  j["dim"] = dim;
  json ws = json::array();
  for (const auto& w : basis_weights) {
    json row = json::array();
    for (const auto& c : w.c) row.push_back(rat_to_string(c));
    ws.push_back(row);
  }
  j["weights"] = ws;
  auto sparse = [](const MatQ& M) {
    json out = json::array();
    for (int i = 0; i < M.rows(); ++i)
      for (int k = 0; k < M.cols(); ++k)
        if (!is_zero(M.at(i, k))) out.push_back({i, k, rat_to_string(M.at(i, k))});
    return out;
  };
  json es = json::array(), fs = json::array();
  for (const auto& e : e_simple) es.push_back(sparse(e));
  for (const auto& f : f_simple) fs.push_back(sparse(f));
  j["e"] = es;
  j["f"] = fs;
  json sch = json::array();
  for (const auto& s : schemes) sch.push_back({{"rows", s.rows}, {"cols", s.cols}});
  j["schemes"] = sch;
  return j.dump(2);
}

RepPack RepPack::from_json(const std::string& text) {
  json j = json::parse(text);
  RepPack p;
  p.label = j.at("label").get<std::string>();
  Rat scale = rat_parse_or_throw(j.at("form_scale").get<std::string>());
  p.rd = RootData::simple(j.at("type").get<std::string>(), scale);
  p.dim = j.at("dim").get<int>();
  for (const auto& row : j.at("weights")) {
    std::vector<Rat> cs;
    for (const auto& v : row) cs.push_back(rat_parse_or_throw(v.get<std::string>()));
    p.basis_weights.push_back(Weight(cs));
  }
  auto dense = [&](const json& triplets) {
    MatQ M(p.dim, p.dim);
    for (const auto& t : triplets)
      M.at(t[0].get<int>(), t[1].get<int>()) = rat_parse_or_throw(t[2].get<std::string>());
    return M;
  };
  for (const auto& e : j.at("e")) p.e_simple.push_back(dense(e));
  for (const auto& f : j.at("f")) p.f_simple.push_back(dense(f));
  for (const auto& s : j.at("schemes"))
    p.schemes.push_back(MinorScheme{s.at("rows").get<std::vector<int>>(),
                                    s.at("cols").get<std::vector<int>>()});
  return p;
}

ValidationReport validate_rep_pack(const RepPack& rep, const RootData& rd) {
  ValidationReport rpt;
  int r = rd.rank(), d = rep.dim;
  if ((int)rep.basis_weights.size() != d) rpt.fail("weight count != dim");
  if ((int)rep.e_simple.size() != r || (int)rep.f_simple.size() != r)
    rpt.fail("generator count != rank");
  if (!rpt.ok) return rpt;

  for (int i = 0; i < r; ++i) {
    const MatQ &e = rep.e_simple[i], &f = rep.f_simple[i];
    if (e.is_zero() || f.is_zero()) rpt.fail("zero generator for root " + std::to_string(i + 1));
    // entries must connect weights mu -> mu + alpha_i (e) and be strictly upper
    Weight ai = rd.simple_root(i);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        if (!is_zero(e.at(a, b))) {
          if (a >= b) rpt.fail("e not strictly upper");
          if (rep.basis_weights[a] != rep.basis_weights[b] + ai)
            rpt.fail("e entry violates weight grading");
        }
        if (!is_zero(f.at(a, b))) {
          if (a <= b) rpt.fail("f not strictly lower");
          if (rep.basis_weights[a] != rep.basis_weights[b] - ai)
            rpt.fail("f entry violates weight grading");
        }
      }
    // h_i diagonal with the weight pairings; [h_i, e_j] = cartan(i,j) e_j
    MatQ h = rep.h_simple(i);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        Rat expect = (a == b) ? rep.basis_weights[a].c[i] : Rat(0);
        if (h.at(a, b) != expect) {
          rpt.fail("[e_i,f_i] != h_i for root " + std::to_string(i + 1));
          a = b = d;
        }
      }
    for (int j = 0; j < r; ++j) {
      MatQ lhs = h * rep.e_simple[j] - rep.e_simple[j] * h;
      if (!(lhs == rep.e_simple[j] * Rat(rd.cartan(i, j))))
        rpt.fail("[h_i, e_j] != a_ij e_j");
    }
  }
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      if (i == j) continue;
      MatQ x = rep.e_simple[i] * rep.f_simple[j] - rep.f_simple[j] * rep.e_simple[i];
      if (!x.is_zero()) rpt.fail("[e_i, f_j] != 0 for i != j");
    }

  // minor schemes must be leading principal blocks whose weight sum is the
  // fundamental weight, achieved by no other index subset
  if ((int)rep.schemes.size() != r) rpt.fail("scheme count != rank");
  for (int a = 0; a < r && rpt.ok; ++a) {
    const auto& s = rep.schemes[a];
    int k = (int)s.rows.size();
    for (int i = 0; i < k; ++i)
      if (s.rows[i] != i || s.cols[i] != i) rpt.fail("scheme not leading principal");
    Weight sum = Weight::zero(r);
    for (int i = 0; i < k; ++i) sum = sum + rep.basis_weights[i];
    if (!(sum == Weight::fundamental(r, a))) rpt.fail("scheme weight sum != fundamental weight");
    // uniqueness of the top weight among k-subsets
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<bool> sel(d, false);
    std::function<void(int, int, Weight)> rec = [&](int start, int left, Weight acc) {
      if (!rpt.ok) return;
      if (left == 0) {
        bool is_first = true;
        for (int i = 0; i < k; ++i)
          if (!sel[i]) is_first = false;
        if (!is_first && acc == sum) rpt.fail("top weight of exterior power not unique");
        return;
      }
      for (int i = start; i + left <= d; ++i) {
        sel[i] = true;
        rec(i + 1, left - 1, acc + rep.basis_weights[i]);
        sel[i] = false;
      }
    };
    rec(0, k, Weight::zero(r));
  }

  // Chevalley construction must succeed with all normalizations
  if (rpt.ok) {
    try {
      ChevalleyData cd = build_chevalley(rd, rep);
      auto pos = rd.positive_roots();
      if (cd.positive.size() != pos.size()) rpt.fail("positive root count mismatch");
    } catch (const std::exception& ex) {
      rpt.fail(std::string("chevalley build failed: ") + ex.what());
    }
  }
  return rpt;
}

LinSolver::LinSolver(const MatQ& columns) : n_(columns.rows()), m_(columns.cols()) {
  // row reduce [A | I_n]
  red_ = MatQ(n_, m_ + n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < m_; ++j) red_.at(i, j) = columns.at(i, j);
    red_.at(i, m_ + i) = Rat(1);
  }
  int row = 0;
  for (int c = 0; c < m_ && row < n_; ++c) {
    int p = -1;
    for (int i = row; i < n_; ++i)
      if (!is_zero(red_.at(i, c))) {
        p = i;
        break;
      }
    if (p < 0) continue;
    for (int j = 0; j < m_ + n_; ++j) std::swap(red_.at(p, j), red_.at(row, j));
    Rat piv = red_.at(row, c);
    for (int j = 0; j < m_ + n_; ++j) red_.at(row, j) /= piv;
    for (int i = 0; i < n_; ++i) {
      if (i == row || is_zero(red_.at(i, c))) continue;
      Rat f = red_.at(i, c);
      for (int j = 0; j < m_ + n_; ++j) red_.at(i, j) -= f * red_.at(row, j);
    }
    pivot_col_.push_back(c);
    ++row;
  }
  rank_ = row;
}

std::optional<std::vector<Rat>> LinSolver::solve(const std::vector<Rat>& rhs) const {
  // transformed rhs = E * rhs where E is the recorded row operations
  std::vector<Rat> t(n_, Rat(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (!is_zero(red_.at(i, m_ + j))) t[i] += red_.at(i, m_ + j) * rhs[j];
  std::vector<Rat> z(m_, Rat(0));
  for (int i = 0; i < rank_; ++i) z[pivot_col_[i]] = t[i];
  for (int i = rank_; i < n_; ++i)
    if (!is_zero(t[i])) return std::nullopt;
  return z;
}

std::vector<Rat> ChevalleyData::coords(const MatQ& X) const {
  std::vector<Rat> flat;
  flat.reserve((size_t)X.rows() * X.cols());
  for (int i = 0; i < X.rows(); ++i)
    for (int j = 0; j < X.cols(); ++j) flat.push_back(X.at(i, j));
  auto z = basis_solver.solve(flat);
  if (!z) throw std::domain_error("matrix not in the image of g");
  return *z;
}

ChevalleyData build_chevalley(const RootData& rd, const RepPack& rep) {
  ChevalleyData cd;
  int r = rd.rank();
  auto lie = [](const MatQ& a, const MatQ& b) { return a * b - b * a; };
  for (int i = 0; i < r; ++i) cd.coroot_h.push_back(rep.h_simple(i));

  auto pos = rd.positive_roots();
  std::map<std::vector<int>, std::pair<MatQ, MatQ>> vecs;
  for (const auto& beta : pos) {
    int height = 0;
    for (int v : beta) height += v;
    if (height == 1) {
      int i = 0;
      while (beta[i] == 0) ++i;
      RootVectors rv{beta, rep.e_simple[i], rep.f_simple[i], rd.root_length_sq(beta),
                     "simple"};
      cd.positive.push_back(rv);
      vecs[beta] = {rv.e, rv.f};
      continue;
    }
    bool done = false;
    for (int i = 0; i < r && !done; ++i) {
      std::vector<int> gamma = beta;
      gamma[i] -= 1;
      bool ok = true;
      for (int v : gamma)
        if (v < 0) ok = false;
      if (!ok || !vecs.count(gamma)) continue;
      MatQ eb = lie(rep.e_simple[i], vecs[gamma].first);
      if (eb.is_zero()) continue;
      MatQ fb = lie(rep.f_simple[i], vecs[gamma].second);
      if (fb.is_zero()) continue;
      MatQ h = lie(eb, fb);
      // beta(h) with h = sum c_i h_i: solve the diagonal, then pair with beta
      // h is diagonal; c_i read off from its action vs fundamental-weight coords
      // Solve sum_i c_i * mu(h_i) = h_diag(mu) using the first rank() independent rows.
      MatQ A(rep.dim, r);
      std::vector<Rat> bvec(rep.dim);
      for (int k = 0; k < rep.dim; ++k) {
        for (int i2 = 0; i2 < r; ++i2) A.at(k, i2) = rep.basis_weights[k].c[i2];
        bvec[k] = h.at(k, k);
      }
      LinSolver ls(A);
      auto cs = ls.solve(bvec);
      if (!cs) throw std::logic_error("chevalley: [e,f] not in torus span");
      Rat beta_h(0);
      for (int i2 = 0; i2 < r; ++i2) {
        Rat beta_hi(0);  // beta(h_{i2}) = sum_j beta_j cartan(i2, j)
        for (int j = 0; j < r; ++j) beta_hi += Rat(beta[j]) * Rat(rd.cartan(i2, j));
        beta_h += (*cs)[i2] * beta_hi;
      }
      if (is_zero(beta_h)) throw std::logic_error("chevalley: beta([e,f]) = 0");
      fb = fb * (Rat(2) / beta_h);
      std::ostringstream rec;
      rec << "[x_" << (i + 1) << ", x_gamma], gamma=(";
      for (size_t t = 0; t < gamma.size(); ++t) rec << (t ? "," : "") << gamma[t];
      rec << ")";
      cd.positive.push_back(RootVectors{beta, eb, fb, rd.root_length_sq(beta), rec.str()});
      vecs[beta] = {eb, fb};
      done = true;
    }
    if (!done) throw std::logic_error("chevalley: no commutator chain for a positive root");
  }

  for (const auto& rv : cd.positive) cd.basis.push_back(rv.e);
  for (const auto& rv : cd.positive) cd.basis.push_back(rv.f);
  for (const auto& h : cd.coroot_h) cd.basis.push_back(h);
  MatQ cols(rep.dim * rep.dim, (int)cd.basis.size());
  for (int b = 0; b < (int)cd.basis.size(); ++b)
    for (int i = 0; i < rep.dim; ++i)
      for (int j = 0; j < rep.dim; ++j)
        cols.at(i * rep.dim + j, b) = cd.basis[b].at(i, j);
  cd.basis_solver = LinSolver(cols);
  if (cd.basis_solver.rank() != (int)cd.basis.size())
    throw std::logic_error("chevalley: root vectors not independent (unfaithful pack?)");
  return cd;
}

}  // namespace bruhat
