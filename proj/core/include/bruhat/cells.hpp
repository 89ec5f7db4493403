#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/bracket_table.hpp"
#include "bruhat/poly.hpp"
#include "bruhat/ratfunc.hpp"
#include "bruhat/reppack.hpp"
#include "bruhat/rootdata.hpp"

namespace bruhat {

// A generalized Bruhat cell of Bott-Samelson type: a word in simple
// reflections together with the representation used for minors.
struct CellSpec {
  RootData rd;
  WeylWord word;
  RepPack rep;

  static CellSpec make(const std::string& type_label, const WeylWord& word,
                       std::optional<Rat> form_scale = std::nullopt);
  // General sequences flatten to the concatenation of chosen reduced words.
  static CellSpec flatten(const RootData& rd, const std::vector<WeylWord>& us);

  int dim() const { return word.length(); }
  std::vector<Weight> coord_weights() const { return rd.coord_weights(word); }
  VarNames var_names() const { return VarNames::xs(dim()); }
};

struct CellPoint {
  std::vector<Rat> x;
};

struct IntervalMinor {
  Weight lambda;
  int i = 1, j = 0;  // 1-based; j = i-1 encodes the constant 1
  Poly poly;
  Weight t_weight;
};

// All prefix products p_{[1,k]}(x), k = 0..n, over the ring R.
template <class R>
std::vector<Mat<R>> bs_prefix_products(const CellSpec& spec, std::span<const R> xs) {
  std::vector<Mat<R>> out;
  out.push_back(Mat<R>::identity(spec.rep.dim));
  for (int k = 0; k < spec.dim(); ++k)
    out.push_back(out.back() * p_letter<R>(spec.rep, spec.word.letters[k], xs[k]));
  return out;
}

// y^lambda_{[i,j]} = Delta^lambda(p_i ... p_j) as a polynomial in x_i..x_j.
IntervalMinor y_interval(const CellSpec& spec, const Weight& lambda, int i, int j);
// y^lambda over the full word.
Poly y_full(const CellSpec& spec, const Weight& lambda);
// true iff all y^{omega_alpha}(x) != 0 for alpha occurring in the word.
bool on_open_leaf(const CellSpec& spec, const CellPoint& p);

// --- Bott-Samelson chart extraction ------------------------------------------

enum class ChartKind { BottSamelson, Lowering };  // phi^u and phi^{(e)}

template <class R>
struct Extraction {
  std::vector<R> coords;
  Mat<R> residual;  // in B (upper triangular)
};

// Strips the letters of `word` off the flag chain; flags[k] must lie in the
// Bruhat cell of the k-th chunk. Throws std::domain_error when a required
// minor vanishes (point not in the chart image) or membership fails.
template <class R>
Extraction<R> extract_bs_coords(const RepPack& rep, std::span<const Mat<R>> flags,
                                std::span<const WeylWord> chunks, ChartKind kind);

// Convenience wrapper: one flag per letter.
template <class R>
Extraction<R> extract_bs_coords_letters(const RepPack& rep, std::span<const Mat<R>> flags,
                                        const WeylWord& word, ChartKind kind);

template <class R>
Extraction<R> extract_bs_coords(const RepPack& rep, std::span<const Mat<R>> flags,
                                std::span<const WeylWord> chunks, ChartKind kind) {
  const R zero = R(Rat(0));
  Mat<R> residual = Mat<R>::identity(rep.dim);
  std::vector<R> coords;
  for (size_t c = 0; c < flags.size(); ++c) {
    Mat<R> h = residual * flags[c];
    for (int letter : chunks[c].letters) {
      int a = letter - 1;
      MatQ sbinv = rep.sbar(a).inverse();
      R d_top = fundamental_minor(rep, h, a);
      Mat<R> sh = mat_cast<R>(sbinv) * h;
      R d_tw = fundamental_minor(rep, sh, a);
      if (kind == ChartKind::BottSamelson) {
        if (d_tw == zero)
          throw std::domain_error("extract_bs_coords: twisted minor vanishes (off chart)");
        R x = d_top / d_tw;
        coords.push_back(x);
        h = mat_cast<R>(sbinv) * (unipotent<R>(rep.e_simple[a], zero - x) * h);
      } else {
        if (d_top == zero)
          throw std::domain_error("extract_bs_coords: principal minor vanishes (off chart)");
        R eps = d_tw / d_top;
        coords.push_back(eps);
        h = unipotent<R>(rep.f_simple[a], zero - eps) * h;
      }
    }
    if (!is_upper_triangular(h))
      throw std::domain_error("extract_bs_coords: membership failure (residual not in B)");
    residual = h;
  }
  return Extraction<R>{std::move(coords), std::move(residual)};
}

template <class R>
Extraction<R> extract_bs_coords_letters(const RepPack& rep, std::span<const Mat<R>> flags,
                                        const WeylWord& word, ChartKind kind) {
  std::vector<WeylWord> chunks;
  for (int l : word.letters) chunks.push_back(WeylWord({l}));
  return extract_bs_coords<R>(rep, flags, chunks, kind);
}

// --- bracket tables -----------------------------------------------------------

enum class BracketMethod { Chart, Interp, Both };

struct BracketOptions {
  BracketMethod method = BracketMethod::Interp;
  std::string cache_dir;  // optional on-disk cache
  bool use_memory_cache = true;
  int max_degree_bound = 8;
};

BracketTable compute_bracket_table(const CellSpec& spec, const BracketOptions& opts = {});

// tau on the open leaf: torus character values t^{omega_alpha} of
// [p_{[1,n]}(x)]_0. nullopt off the open leaf.
std::optional<std::vector<Rat>> tau_eval(const CellSpec& spec, const CellPoint& p);

// --- torus extension 0 |x| pi_n ----------------------------------------------

// Extended table on (x_1..x_n, xi_1..xi_r) with {xi_k, f} = xi_k theta(M(omega_k))(f).
// Default M = -#; a Weyl word w gives M = -w o #.
BracketTable torus_extension(const BracketTable& bt, const RootData& rd,
                             const std::optional<WeylWord>& twist = std::nullopt);

// Laurent-monomial-dressed polynomial t^{mu} * body with mu = sum texp_k omega_k.
struct TorusDressed {
  std::vector<long> texp;  // exponents of xi_1..xi_r
  Poly body;               // in the x variables

  Weight torus_weight(const RootData& rd) const {
    Weight w = Weight::zero(rd.rank());
    for (int k = 0; k < rd.rank(); ++k) w.c[k] = Rat(texp[k]);
    return w;
  }
  bool operator==(const TorusDressed& o) const { return texp == o.texp && body == o.body; }
  std::string to_string(const RootData& rd, const VarNames& xvars,
                        const std::vector<std::string>& torus_names) const;
};

struct LogCanonical {
  bool is_log_canonical = false;
  Rat coefficient = Rat(0);
};

// {f, g} via the table; log-canonical iff {f,g} = c f g.
LogCanonical check_log_canonical_pair(const Poly& f, const Poly& g, const BracketTable& bt);
// Same for torus-dressed functions over the mixed structure 0 |x| pi_n.
LogCanonical check_log_canonical_dressed(const TorusDressed& f, const TorusDressed& g,
                                         const BracketTable& base, const RootData& rd);
// {f, g} itself for dressed arguments: result is xi^{f.texp+g.texp} * poly.
TorusDressed dressed_bracket(const TorusDressed& f, const TorusDressed& g,
                             const BracketTable& base, const RootData& rd);

// --- doubled-word integrable systems ------------------------------------------

struct DoubledSystem {
  CellSpec spec;  // word (u^{-1}, u), length 2n
  WeylWord u;     // the half word
  std::vector<IntervalMinor> ys;      // y_1..y_n
  std::vector<TorusDressed> ytildes;  // ytilde_1..ytilde_n on T x O^u
};

DoubledSystem build_doubled_system(const RootData& rd, const WeylWord& u,
                                   std::optional<Rat> form_scale = std::nullopt);

}  // namespace bruhat
