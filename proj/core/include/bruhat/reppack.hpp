#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bruhat/matrix.hpp"
#include "bruhat/rootdata.hpp"

namespace bruhat {

// Delta^{omega} as the determinant of a fixed submatrix of the base rep.
// Both bundled families use leading principal blocks.
struct MinorScheme {
  std::vector<int> rows, cols;
};

// Weight-graded exact matrix representation with Chevalley generators for
// the simple roots. Basis ordered so N is unit upper triangular.
struct RepPack {
  std::string label;
  RootData rd;
  int dim = 0;
  std::vector<Weight> basis_weights;
  std::vector<MatQ> e_simple, f_simple;  // 0-based by simple root
  std::vector<MinorScheme> schemes;      // 0-based by fundamental weight

  static RepPack bundled(const RootData& rd);

  MatQ h_simple(int i) const;  // [e_i, f_i]
  MatQ sbar(int i) const;      // u_i(-1) u_{-i}(1) u_i(-1)
  MatQ wbar(const WeylWord& w_reduced) const;
  MatQ wbarbar(const WeylWord& w_reduced) const;  // (overline{w^{-1}})^{-1}

  std::string to_json() const;
  static RepPack from_json(const std::string& text);
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(const std::string& msg) {
    ok = false;
    failures.push_back(msg);
  }
};

ValidationReport validate_rep_pack(const RepPack& rep, const RootData& rd);

// Root vectors for one positive root, normalized so beta([e,f]) = 2.
struct RootVectors {
  std::vector<int> alpha_coords;
  MatQ e, f;
  Rat len_sq;                // <beta, beta>
  std::string built_from;    // commutator recipe, for the record
};

// Exact linear solver with a fixed coefficient matrix, reused across solves.
class LinSolver {
 public:
  LinSolver() = default;
  explicit LinSolver(const MatQ& columns);  // solves columns * z = rhs
  std::optional<std::vector<Rat>> solve(const std::vector<Rat>& rhs) const;
  int rank() const { return rank_; }

 private:
  int n_ = 0, m_ = 0, rank_ = 0;
  MatQ red_;                // row-reduced [A | I]
  std::vector<int> pivot_col_;
};

struct ChevalleyData {
  std::vector<RootVectors> positive;  // by increasing height
  std::vector<MatQ> coroot_h;         // h_{alpha_i}
  std::vector<MatQ> basis;            // e's, f's, h's : a basis of g inside End(V)
  LinSolver basis_solver;             // expresses End(V) elems in that basis

  int dim_g() const { return (int)basis.size(); }
  // coordinates of X in the g-basis; throws if X is not in the image of g
  std::vector<Rat> coords(const MatQ& X) const;
};

ChevalleyData build_chevalley(const RootData& rd, const RepPack& rep);

// --- group elements over a coefficient ring ---------------------------------

template <class R>
Mat<R> mat_cast(const MatQ& M) {
  Mat<R> r(M.rows(), M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) r.at(i, j) = R(M.at(i, j));
  return r;
}

// exp(c * gen) for a nilpotent rational generator.
template <class R>
Mat<R> unipotent(const MatQ& gen, const R& c) {
  int n = gen.rows();
  Mat<R> out = Mat<R>::identity(n);
  MatQ pw = MatQ::identity(n);
  Rat fact(1);
  R cpow = R(Rat(1));
  for (int k = 1; k <= n; ++k) {
    pw = pw * gen;
    if (pw.is_zero()) break;
    fact *= Rat(k);
    cpow = cpow * c;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (is_zero(pw.at(i, j))) continue;
        out.at(i, j) = out.at(i, j) + cpow * R(pw.at(i, j) / fact);
      }
  }
  return out;
}

// p_alpha(x) = u_alpha(x) sbar_alpha, 1-based letter.
template <class R>
Mat<R> p_letter(const RepPack& rep, int letter, const R& x) {
  return unipotent<R>(rep.e_simple[letter - 1], x) * mat_cast<R>(rep.sbar(letter - 1));
}

template <class R>
Mat<R> p_letter_inv(const RepPack& rep, int letter, const R& x) {
  // p^{-1} = sbar^{-1} u(-x)
  MatQ sb = rep.sbar(letter - 1);
  return mat_cast<R>(sb.inverse()) * unipotent<R>(rep.e_simple[letter - 1], R(Rat(0)) - x);
}

// Torus element from fundamental character values (values must be units).
template <class R>
Mat<R> torus_point(const RepPack& rep, std::span<const R> xi) {
  Mat<R> t(rep.dim, rep.dim);
  for (int k = 0; k < rep.dim; ++k) {
    R v = R(Rat(1));
    for (int i = 0; i < rep.rd.rank(); ++i) {
      long c = rep.basis_weights[k].c[i].get_num().get_si();
      for (long s = 0; s < c; ++s) v = v * xi[i];
      for (long s = 0; s > c; --s) v = v / xi[i];
    }
    t.at(k, k) = v;
  }
  return t;
}

// --- generalized minors ------------------------------------------------------

template <class R>
R fundamental_minor(const RepPack& rep, const Mat<R>& g, int alpha /*0-based*/) {
  const MinorScheme& s = rep.schemes[alpha];
  return submatrix_det(g, s.rows, s.cols);
}

// Delta_{w1 lambda, w2 lambda}(g) = Delta^lambda(w1bar^{-1} g w2bar);
// lambda dominant integral.
template <class R>
R generalized_minor(const RepPack& rep, const Mat<R>& g, const WeylWord& w1, const WeylWord& w2,
                    const Weight& lambda) {
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::domain_error("generalized_minor: lambda must be dominant integral");
  WeylWord r1 = rep.rd.reduced_word(w1), r2 = rep.rd.reduced_word(w2);
  Mat<R> h = mat_cast<R>(rep.wbar(r1).inverse()) * g * mat_cast<R>(rep.wbar(r2));
  R out = R(Rat(1));
  for (int a = 0; a < rep.rd.rank(); ++a) {
    long n = lambda.c[a].get_num().get_si();
    for (long k = 0; k < n; ++k) out = out * fundamental_minor(rep, h, a);
  }
  return out;
}

// --- factorizations ----------------------------------------------------------

template <class R>
struct LDU {
  Mat<R> lower, torus, upper;
  std::vector<R> torus_chars;  // t^{omega_alpha} per fundamental weight
};

// g = [g]_- [g]_0 [g]_+ in the weight-ordered basis; nullopt if g is not in
// B_- B (a leading principal minor vanishes).
template <class R>
std::optional<LDU<R>> gauss_ldu(const RepPack& rep, const Mat<R>& g) {
  int n = g.rows();
  Mat<R> L = Mat<R>::identity(n), U = Mat<R>::identity(n), D(n, n);
  Mat<R> A = g;
  for (int k = 0; k < n; ++k) {
    R piv = A.at(k, k);
    if (piv == R(Rat(0))) return std::nullopt;
    D.at(k, k) = piv;
    for (int i = k + 1; i < n; ++i) L.at(i, k) = A.at(i, k) / piv;
    for (int j = k + 1; j < n; ++j) U.at(k, j) = A.at(k, j) / piv;
    for (int i = k + 1; i < n; ++i) {
      if (A.at(i, k) == R(Rat(0))) continue;
      R f = A.at(i, k) / piv;
      for (int j = k + 1; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(k, j);
      A.at(i, k) = R(Rat(0));
    }
  }
  LDU<R> out{L, D, U, {}};
  for (int a = 0; a < rep.rd.rank(); ++a) {
    R v = R(Rat(1));
    for (int i : rep.schemes[a].rows) v = v * D.at(i, i);
    out.torus_chars.push_back(v);
  }
  return out;
}

// g = n m with n in N (unit upper), m in N_- (unit lower); nullopt otherwise.
template <class R>
std::optional<std::pair<Mat<R>, Mat<R>>> ul_factor(const Mat<R>& g) {
  int n = g.rows();
  auto rev = [n](int i) { return n - 1 - i; };
  Mat<R> Rg(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) Rg.at(i, j) = g.at(rev(i), rev(j));
  // Rg = L * U with L unit lower; need U's diagonal to be all ones
  Mat<R> L = Mat<R>::identity(n), A = Rg;
  for (int k = 0; k < n; ++k) {
    R piv = A.at(k, k);
    if (piv == R(Rat(0))) return std::nullopt;
    for (int i = k + 1; i < n; ++i) {
      if (A.at(i, k) == R(Rat(0))) continue;
      R f = A.at(i, k) / piv;
      L.at(i, k) = f;
      for (int j = k; j < n; ++j) A.at(i, j) = A.at(i, j) - f * A.at(k, j);
    }
  }
  for (int k = 0; k < n; ++k)
    if (!(A.at(k, k) == R(Rat(1)))) return std::nullopt;
  // g = (reversed L)(reversed U): unit upper times unit lower
  Mat<R> nmat(n, n), mmat(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      nmat.at(i, j) = L.at(rev(i), rev(j));
      mmat.at(i, j) = A.at(rev(i), rev(j));
    }
  return std::make_pair(nmat, mmat);
}

template <class R>
bool is_upper_triangular(const Mat<R>& g) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (!(g.at(i, j) == R(Rat(0)))) return false;
  return true;
}

template <class R>
bool is_unit_upper(const Mat<R>& g) {
  if (!is_upper_triangular(g)) return false;
  for (int i = 0; i < g.rows(); ++i)
    if (!(g.at(i, i) == R(Rat(1)))) return false;
  return true;
}

template <class R>
bool is_unit_lower(const Mat<R>& g) {
  for (int i = 0; i < g.rows(); ++i) {
    if (!(g.at(i, i) == R(Rat(1)))) return false;
    for (int j = i + 1; j < g.cols(); ++j)
      if (!(g.at(i, j) == R(Rat(0)))) return false;
  }
  return true;
}

}  // namespace bruhat
