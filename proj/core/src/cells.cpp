#include "bruhat/cells.hpp"

#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

#include "bruhat/cache.hpp"

namespace bruhat {

CellSpec CellSpec::make(const std::string& type_label, const WeylWord& word,
                        std::optional<Rat> form_scale) {
  Rat scale = form_scale.value_or(Rat(1));
  RootData rd = RootData::simple(type_label, scale);
  for (int l : word.letters)
    if (l < 1 || l > rd.rank()) throw std::out_of_range("word letter out of range");
  return CellSpec{rd, word, RepPack::bundled(rd)};
}

CellSpec CellSpec::flatten(const RootData& rd, const std::vector<WeylWord>& us) {
  WeylWord flat;
  for (const auto& u : us) flat = flat.concat(rd.reduced_word(u));
  return CellSpec{rd, flat, RepPack::bundled(rd)};
}

IntervalMinor y_interval(const CellSpec& spec, const Weight& lambda, int i, int j) {
  int n = spec.dim();
  if (!lambda.is_dominant() || !lambda.is_integral())
    throw std::domain_error("y_interval: lambda must be dominant integral");
  if (i < 1 || j > n || j < i - 1) throw std::out_of_range("y_interval: bad indices");
  IntervalMinor out;
  out.lambda = lambda;
  out.i = i;
  out.j = j;
  out.t_weight = spec.rd.weyl_act(spec.word.segment(1, i - 1), lambda) -
                 spec.rd.weyl_act(spec.word.segment(1, j), lambda);
  if (j == i - 1) {
    out.poly = Poly(Rat(1));
    return out;
  }
  Mat<Poly> prod = Mat<Poly>::identity(spec.rep.dim);
  for (int k = i; k <= j; ++k)
    prod = prod * p_letter<Poly>(spec.rep, spec.word.letters[k - 1], Poly::var(k - 1));
  Poly val(Rat(1));
  for (int a = 0; a < spec.rd.rank(); ++a) {
    long m = lambda.c[a].get_num().get_si();
    if (m == 0) continue;
    Poly d = fundamental_minor(spec.rep, prod, a);
    val *= d.pow((int)m);
  }
  out.poly = val;
  return out;
}

Poly y_full(const CellSpec& spec, const Weight& lambda) {
  return y_interval(spec, lambda, 1, spec.dim()).poly;
}

bool on_open_leaf(const CellSpec& spec, const CellPoint& p) {
  std::vector<bool> seen(spec.rd.rank(), false);
  for (int l : spec.word.letters) seen[l - 1] = true;
  for (int a = 0; a < spec.rd.rank(); ++a) {
    if (!seen[a]) continue;
    Poly y = y_full(spec, Weight::fundamental(spec.rd.rank(), a));
    if (is_zero(y.eval_rat(p.x))) return false;
  }
  return true;
}

std::optional<std::vector<Rat>> tau_eval(const CellSpec& spec, const CellPoint& p) {
  auto prods = bs_prefix_products<Rat>(spec, p.x);
  auto ldu = gauss_ldu(spec.rep, prods.back());
  if (!ldu) return std::nullopt;
  return ldu->torus_chars;
}

// ---------------------------------------------------------------------------
// interp method: push the product bivector through the quotient at exact
// rational points, then interpolate each entry.
// ---------------------------------------------------------------------------

namespace {

struct RetrySignal {};

// Incremental exact column-echelon tracker.
class RankTracker {
 public:
  explicit RankTracker(int nrows) : nrows_(nrows) {}
  bool try_add(const std::vector<Rat>& col) {
    std::vector<Rat> v = col;
    for (const auto& [pivot, row] : reduced_) {
      if (is_zero(v[pivot])) continue;
      Rat f = v[pivot];
      for (int i = 0; i < nrows_; ++i) v[i] -= f * row[i];
    }
    int pivot = -1;
    for (int i = 0; i < nrows_; ++i)
      if (!is_zero(v[i])) {
        pivot = i;
        break;
      }
    if (pivot < 0) return false;
    Rat f = v[pivot];
    for (int i = 0; i < nrows_; ++i) v[i] /= f;
    reduced_.push_back({pivot, v});
    return true;
  }

 private:
  int nrows_;
  std::vector<std::pair<int, std::vector<Rat>>> reduced_;
};

std::vector<Rat> flat(const MatQ& M) {
  std::vector<Rat> v;
  v.reserve((size_t)M.rows() * M.cols());
  for (int i = 0; i < M.rows(); ++i)
    for (int j = 0; j < M.cols(); ++j) v.push_back(M.at(i, j));
  return v;
}

class InterpEngine {
 public:
  InterpEngine(const CellSpec& spec) : spec_(spec), chev_(build_chevalley(spec.rd, spec.rep)) {
    for (const auto& rv : chev_.positive) borel_.push_back(rv.e);
    for (const auto& h : chev_.coroot_h) borel_.push_back(h);
    dim_g_ = chev_.dim_g();
    n_extra_ = dim_g_ - (int)borel_.size() - 1;  // = #positive roots - 1
  }

  int n() const { return spec_.dim(); }
  int n_extra() const { return n_extra_; }

  // Bracket value matrix at the point, or nullopt when a slot basis is
  // degenerate there.
  std::optional<MatQ> bracket_at(std::span<const Rat> xs) const {
    const int n = spec_.dim();
    const int dim = spec_.rep.dim;
    struct Slot {
      LinSolver solver;
      std::vector<MatQ> cols_as_g;  // for spill reconstruction (borel only)
    };
    std::vector<LinSolver> solvers;
    std::vector<MatQ> g(n), ginv(n);
    for (int k = 0; k < n; ++k) {
      int letter = spec_.word.letters[k];
      g[k] = p_letter<Rat>(spec_.rep, letter, xs[k]);
      ginv[k] = p_letter_inv<Rat>(spec_.rep, letter, xs[k]);
    }
    int nb = (int)borel_.size();
    for (int k = 0; k < n; ++k) {
      int letter = spec_.word.letters[k];
      std::vector<std::vector<Rat>> cols;
      cols.push_back(flat(spec_.rep.e_simple[letter - 1]));
      for (const auto& b : borel_) cols.push_back(flat(g[k] * b * ginv[k]));
      RankTracker rt(dim * dim);
      for (const auto& c : cols)
        if (!rt.try_add(c)) return std::nullopt;  // chart direction inside the fiber
      // complete with g-basis elements
      std::vector<int> extra_ids;
      for (int b = 0; b < dim_g_ && (int)extra_ids.size() < n_extra_; ++b) {
        auto c = flat(chev_.basis[b]);
        if (rt.try_add(c)) {
          cols.push_back(c);
          extra_ids.push_back(b);
        }
      }
      if ((int)extra_ids.size() != n_extra_) return std::nullopt;
      MatQ A(dim * dim, (int)cols.size());
      for (int cidx = 0; cidx < (int)cols.size(); ++cidx)
        for (int ridx = 0; ridx < dim * dim; ++ridx) A.at(ridx, cidx) = cols[cidx][ridx];
      solvers.push_back(LinSolver(A));
    }

    const int total = n + n * n_extra_;
    // coords of a g-element sitting in slot k, with fiber spill pushed right
    auto coords = [&](int slot, const MatQ& X0) -> std::optional<std::vector<Rat>> {
      std::vector<Rat> z(total, Rat(0));
      MatQ X = X0;
      for (int k = slot; k < n; ++k) {
        auto sol = solvers[k].solve(flat(X));
        if (!sol) return std::nullopt;
        z[k] += (*sol)[0];
        for (int t = 0; t < n_extra_; ++t) z[n + k * n_extra_ + t] += (*sol)[1 + nb + t];
        if (k == n - 1) break;
        MatQ spill(spec_.rep.dim, spec_.rep.dim);
        bool nonzero = false;
        for (int b = 0; b < nb; ++b) {
          if (is_zero((*sol)[1 + b])) continue;
          spill = spill + borel_[b] * (*sol)[1 + b];
          nonzero = true;
        }
        if (!nonzero) break;
        X = spill;
      }
      return z;
    };

    MatQ B(total, total);
    for (int k = 0; k < n; ++k) {
      for (const auto& rv : chev_.positive) {
        Rat cf = rv.len_sq / 2;
        MatQ adf = g[k] * rv.f * ginv[k];
        MatQ ade = g[k] * rv.e * ginv[k];
        auto z1 = coords(k, adf), z2 = coords(k, ade);
        auto z3 = coords(k, rv.f), z4 = coords(k, rv.e);
        if (!z1 || !z2 || !z3 || !z4) return std::nullopt;
        auto wedge = [&](const std::vector<Rat>& a, const std::vector<Rat>& b, const Rat& c) {
          for (int i = 0; i < total; ++i) {
            if (is_zero(a[i])) continue;
            for (int j = 0; j < total; ++j) {
              if (is_zero(b[j])) continue;
              B.at(i, j) += c * a[i] * b[j];
              B.at(j, i) -= c * a[i] * b[j];
            }
          }
        };
        wedge(*z1, *z2, cf);
        wedge(*z3, *z4, -cf);
      }
    }
    // tangency: all components on completion directions must cancel
    for (int i = 0; i < total; ++i)
      for (int j = n; j < total; ++j)
        if (!is_zero(B.at(i, j)))
          throw std::logic_error("interp: pushed bivector not tangent to the cell");
    MatQ out(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.at(i, j) = B.at(i, j);
    return out;
  }

 private:
  const CellSpec& spec_;
  ChevalleyData chev_;
  std::vector<MatQ> borel_;
  int dim_g_ = 0, n_extra_ = 0;
};

BracketTable assemble_table(const CellSpec& spec, const std::string& method,
                            const std::function<Poly(int, int)>& entry) {
  BracketTable bt;
  bt.n = spec.dim();
  bt.var_names = spec.var_names().names;
  bt.weights = spec.coord_weights();
  bt.type_label = spec.rd.label();
  bt.word = spec.word;
  bt.form_scale = spec.rd.form_scale();
  bt.method = method;
  for (int i = 0; i < bt.n; ++i)
    for (int j = i + 1; j < bt.n; ++j) bt.entries[{i, j}] = entry(i, j);
  return bt;
}

BracketTable interp_table(const CellSpec& spec, const BracketOptions& opts) {
  InterpEngine engine(spec);
  const int n = spec.dim();
  if (n == 0) return assemble_table(spec, "interp", [](int, int) { return Poly(); });
  std::mt19937_64 rng(20240915u + (unsigned)n);
  std::uniform_int_distribution<long> num(1, 9), den(1, 4), sign(0, 1);

  std::vector<long> offsets(n, 0);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::map<std::vector<int32_t>, MatQ> cache;
    try {
      for (int d = 1; d <= opts.max_degree_bound; d *= 2) {
        auto exps = lower_set(n, d);
        std::vector<std::vector<Rat>> grid(n);
        for (int k = 0; k < n; ++k)
          for (int t = 0; t <= d; ++t) grid[k].push_back(Rat(offsets[k] + t + 1));
        for (const auto& e : exps) {
          if (cache.count(e)) continue;
          std::vector<Rat> pt(n);
          for (int k = 0; k < n; ++k) pt[k] = grid[k][e[k]];
          auto val = engine.bracket_at(pt);
          if (!val) throw RetrySignal{};
          cache.emplace(e, std::move(*val));
        }
        // interpolate every entry at this bound
        std::map<std::pair<int, int>, Poly> cand;
        for (int i = 0; i < n; ++i)
          for (int j = i + 1; j < n; ++j)
            cand[{i, j}] = newton_interpolate(
                exps, grid, [&](size_t idx) { return cache.at(exps[idx]).at(i, j); });
        // verify all entries at fresh random points
        bool ok = true;
        for (int v = 0; v < 5 && ok; ++v) {
          std::vector<Rat> pt(n);
          std::optional<MatQ> val;
          for (int tries = 0; tries < 20 && !val; ++tries) {
            for (int k = 0; k < n; ++k) {
              Rat q = rat(num(rng), den(rng));
              pt[k] = sign(rng) ? q : -q;
            }
            val = engine.bracket_at(pt);
          }
          if (!val) throw RetrySignal{};
          for (auto& [ij, p] : cand)
            if (p.eval_rat(pt) != val->at(ij.first, ij.second)) {
              ok = false;
              break;
            }
        }
        if (ok)
          return assemble_table(spec, "interp",
                                [&](int i, int j) { return cand.at({i, j}); });
      }
      throw std::runtime_error("compute_bracket_table: interpolation verification failure");
    } catch (const RetrySignal&) {
      for (int k = 0; k < n; ++k) offsets[k] += 7 * (k + 1) + attempt;
    }
  }
  throw std::runtime_error("compute_bracket_table: no usable interpolation grid found");
}

// Lowering-chart coordinates eps_k(x) as reduced fractions a_k/b_k, computed
// with a single running denominator instead of per-entry rational functions.
std::vector<std::pair<Poly, Poly>> chart_transition(const CellSpec& spec) {
  const RepPack& rep = spec.rep;
  const int n = spec.dim(), dim = rep.dim;
  Mat<Poly> P = Mat<Poly>::identity(dim);
  std::vector<std::pair<Poly, Poly>> eps;
  for (int k = 0; k < n; ++k) {
    int a = spec.word.letters[k] - 1;
    P = P * p_letter<Poly>(rep, spec.word.letters[k], Poly::var(k));
    const MinorScheme& scheme = rep.schemes[a];
    Poly top = submatrix_det(P, scheme.rows, scheme.cols);
    MatQ sbinv = rep.sbar(a).inverse();
    Mat<Poly> SP = mat_cast<Poly>(sbinv) * P;
    Poly tw = submatrix_det(SP, scheme.rows, scheme.cols);
    if (top.is_zero()) throw std::logic_error("chart method: principal minor identically zero");
    Poly g = Poly::gcd(tw, top);
    Poly ak = *tw.divided_by(g), bk = *top.divided_by(g);
    Rat cb = bk.content();
    eps.push_back({ak / cb, bk / cb});
    const auto& [an, bn] = eps.back();
    // strip u_{-alpha}(-eps): all entries times b^m are polynomial, m from
    // the nilpotency order of f
    const MatQ& f = rep.f_simple[a];
    std::vector<MatQ> pw = {MatQ::identity(dim)};
    while (!(pw.back() * f).is_zero()) pw.push_back(pw.back() * f);
    int m = (int)pw.size() - 1;
    Mat<Poly> Nu(dim, dim);
    Rat fact(1);
    Poly apow(Rat(1));
    for (int t = 0; t <= m; ++t) {
      if (t > 0) {
        fact *= Rat(t);
        apow = apow * an * Rat(-1);
      }
      Poly bpow(Rat(1));
      for (int s = 0; s < m - t; ++s) bpow = bpow * bn;
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
          if (!is_zero(pw[t].at(i, j)))
            Nu.at(i, j) += apow * bpow * (pw[t].at(i, j) / fact);
    }
    P = Nu * P;
    // strictly-lower entries of the residual must cancel identically
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < i; ++j)
        if (!P.at(i, j).is_zero())
          throw std::logic_error("chart method: non-polynomial residue (not in B)");
    // drop common content to keep entries small
    Poly cg;
    for (int i = 0; i < dim && !cg.is_constant(); ++i)
      for (int j = i; j < dim && !cg.is_constant(); ++j)
        if (!P.at(i, j).is_zero())
          cg = cg.is_zero() ? P.at(i, j) : Poly::gcd(cg, P.at(i, j));
    if (!cg.is_zero() && !cg.is_constant()) {
      for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j)
          if (!P.at(i, j).is_zero()) P.at(i, j) = *P.at(i, j).divided_by(cg);
    }
  }
  return eps;
}

// Pushforward of the log-canonical structure {eps_k, eps_l} = <a_k,a_l> eps_k eps_l
// through the inverse transition. With N_{ki} = d(eps_k)/dx_i cleared of the
// row denominator b_k^2, the bracket matrix B solves N B N^T = R where
// R_{kl} = <a_k,a_l> a_k b_k a_l b_l. B is found on an exact grid and then
// certified by the polynomial identity N B N^T = R.
BracketTable chart_table(const CellSpec& spec, const BracketOptions& opts) {
  const int n = spec.dim();
  if (n == 0) return assemble_table(spec, "chart", [](int, int) { return Poly(); });
  auto eps = chart_transition(spec);

  Mat<Poly> N(n, n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      N.at(k, i) = eps[k].first.derivative(i) * eps[k].second -
                   eps[k].first * eps[k].second.derivative(i);
  Mat<Poly> R(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = k + 1; l < n; ++l) {
      Rat c = spec.rd.pairing(spec.rd.simple_root(spec.word.letters[k] - 1),
                              spec.rd.simple_root(spec.word.letters[l] - 1));
      Poly v = eps[k].first * eps[k].second * eps[l].first * eps[l].second * c;
      R.at(k, l) = v;
      R.at(l, k) = -v;
    }

  auto value_at = [&](std::span<const Rat> pt) -> std::optional<MatQ> {
    MatQ Np(n, n), Rp(n, n);
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i) {
        Np.at(k, i) = N.at(k, i).eval_rat(pt);
        Rp.at(k, i) = R.at(k, i).eval_rat(pt);
      }
    try {
      MatQ Ninv = Np.inverse();
      return Ninv * Rp * Ninv.transpose();
    } catch (const std::domain_error&) {
      return std::nullopt;
    }
  };

  std::vector<long> offsets(n, 0);
  for (int attempt = 0; attempt < 6; ++attempt) {
    std::map<std::vector<int32_t>, MatQ> cache;
    try {
      for (int d = 1; d <= opts.max_degree_bound; d *= 2) {
        auto exps = lower_set(n, d);
        std::vector<std::vector<Rat>> grid(n);
        for (int k = 0; k < n; ++k)
          for (int t = 0; t <= d; ++t) grid[k].push_back(Rat(offsets[k] + t + 1));
        for (const auto& e : exps) {
          if (cache.count(e)) continue;
          std::vector<Rat> pt(n);
          for (int k = 0; k < n; ++k) pt[k] = grid[k][e[k]];
          auto val = value_at(pt);
          if (!val) throw RetrySignal{};
          cache.emplace(e, std::move(*val));
        }
        Mat<Poly> B(n, n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            B.at(i, j) = newton_interpolate(
                exps, grid, [&](size_t idx) { return cache.at(exps[idx]).at(i, j); });
          }
        // symbolic certificate: the denominator-cleared inverse substitution
        if (N * B * N.transpose() == R)
          return assemble_table(spec, "chart", [&](int i, int j) { return B.at(i, j); });
      }
      throw std::runtime_error("chart method: no polynomial table within the degree bound");
    } catch (const RetrySignal&) {
      for (int k = 0; k < n; ++k) offsets[k] += 5 * (k + 1) + attempt;
    }
  }
  throw std::runtime_error("chart method: no usable grid found");
}

std::string cache_key(const CellSpec& spec, const std::string& method) {
  std::ostringstream os;
  os << spec.rd.label() << "|" << spec.word.to_string() << "|"
     << rat_to_string(spec.rd.form_scale()) << "|" << method;
  return os.str();
}

std::map<std::string, BracketTable>& memory_cache() {
  static std::map<std::string, BracketTable> cache;
  return cache;
}
std::shared_mutex& memory_cache_mutex() {
  static std::shared_mutex m;
  return m;
}

}  // namespace

BracketTable compute_bracket_table(const CellSpec& spec, const BracketOptions& opts) {
  std::string method = opts.method == BracketMethod::Chart    ? "chart"
                       : opts.method == BracketMethod::Interp ? "interp"
                                                              : "both";
  std::string key = cache_key(spec, method);
  if (opts.use_memory_cache) {
    std::shared_lock lk(memory_cache_mutex());
    auto it = memory_cache().find(key);
    if (it != memory_cache().end()) return it->second;
  }
  if (!opts.cache_dir.empty()) {
    auto cached = cache_load_table(opts.cache_dir, key);
    if (cached) {
      std::unique_lock lk(memory_cache_mutex());
      memory_cache()[key] = *cached;
      return *cached;
    }
  }
  BracketTable bt;
  switch (opts.method) {
    case BracketMethod::Interp:
      bt = interp_table(spec, opts);
      break;
    case BracketMethod::Chart:
      bt = chart_table(spec, opts);
      break;
    case BracketMethod::Both: {
      BracketTable a = interp_table(spec, opts);
      BracketTable b = chart_table(spec, opts);
      if (!(a == b))
        throw std::runtime_error("compute_bracket_table: chart and interp methods disagree");
      bt = a;
      bt.method = "both";
      break;
    }
  }
  if (opts.use_memory_cache) {
    std::unique_lock lk(memory_cache_mutex());
    memory_cache()[key] = bt;
  }
  if (!opts.cache_dir.empty()) cache_store_table(opts.cache_dir, key, bt);
  return bt;
}

// ---------------------------------------------------------------------------
// torus extension and dressed functions
// ---------------------------------------------------------------------------

BracketTable torus_extension(const BracketTable& bt, const RootData& rd,
                             const std::optional<WeylWord>& twist) {
  BracketTable ext = bt;
  int n = bt.n, r = rd.rank();
  ext.n = n + r;
  ext.method = bt.method.empty() ? "torus" : bt.method + "+torus";
  for (int k = 0; k < r; ++k) {
    ext.var_names.push_back("xi" + std::to_string(k + 1));
    ext.weights.push_back(Weight::fundamental(r, k));
  }
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < r; ++k) {
      Weight target = Weight::fundamental(r, k);
      if (twist) target = rd.weyl_act(*twist, target);
      // {x_j, xi_k} = <lambda_j, w(omega_k)> x_j xi_k
      Rat c = rd.pairing(bt.weights[j], target);
      Poly entry = Poly::monomial_term(Monomial::var(j) * Monomial::var(n + k), c);
      ext.entries[{j, n + k}] = entry;
    }
  for (int k = 0; k < r; ++k)
    for (int l = k + 1; l < r; ++l) ext.entries[{n + k, n + l}] = Poly();
  return ext;
}

namespace {

// sum over monomials of P of -<mu, wt(m)> c_m m
Poly torus_bracket_poly(const Weight& mu, const Poly& P, const BracketTable& base,
                        const RootData& rd) {
  Poly out;
  for (const auto& [m, c] : P.terms()) {
    Weight wm = monomial_weight(m, base.weights, rd.rank());
    Rat coeff = -rd.pairing(mu, wm);
    if (!is_zero(coeff)) out += Poly::monomial_term(m, c * coeff);
  }
  return out;
}

}  // namespace

TorusDressed dressed_bracket(const TorusDressed& f, const TorusDressed& g,
                             const BracketTable& base, const RootData& rd) {
  TorusDressed out;
  out.texp.resize(rd.rank());
  for (int k = 0; k < rd.rank(); ++k) out.texp[k] = f.texp[k] + g.texp[k];
  Weight mu_f = f.torus_weight(rd), mu_g = g.torus_weight(rd);
  out.body = poisson_bracket(f.body, g.body, base) +
             f.body * torus_bracket_poly(mu_f, g.body, base, rd) -
             g.body * torus_bracket_poly(mu_g, f.body, base, rd);
  return out;
}

LogCanonical check_log_canonical_pair(const Poly& f, const Poly& g, const BracketTable& bt) {
  Poly P = poisson_bracket(f, g, bt);
  Poly Q = f * g;
  LogCanonical out;
  if (P.is_zero()) {
    out.is_log_canonical = true;
    out.coefficient = Rat(0);
    return out;
  }
  if (Q.is_zero()) return out;
  Rat c = P.leading_coeff() / Q.leading_coeff();
  if (P == Q * c) {
    out.is_log_canonical = true;
    out.coefficient = c;
  }
  return out;
}

LogCanonical check_log_canonical_dressed(const TorusDressed& f, const TorusDressed& g,
                                         const BracketTable& base, const RootData& rd) {
  TorusDressed br = dressed_bracket(f, g, base, rd);
  Poly Q = f.body * g.body;
  LogCanonical out;
  if (br.body.is_zero()) {
    out.is_log_canonical = true;
    out.coefficient = Rat(0);
    return out;
  }
  if (Q.is_zero()) return out;
  Rat c = br.body.leading_coeff() / Q.leading_coeff();
  if (br.body == Q * c) {
    out.is_log_canonical = true;
    out.coefficient = c;
  }
  return out;
}

std::string TorusDressed::to_string(const RootData& rd, const VarNames& xvars,
                                    const std::vector<std::string>& torus_names) const {
  std::ostringstream os;
  bool any = false;
  for (int k = 0; k < rd.rank(); ++k) {
    if (texp[k] == 0) continue;
    if (any) os << "*";
    os << torus_names[k];
    if (texp[k] != 1) os << "^" << texp[k];
    any = true;
  }
  std::string b = body.to_string(xvars);
  if (!any) return b;
  if (b == "1") return os.str();
  os << "*(" << b << ")";
  return os.str();
}

DoubledSystem build_doubled_system(const RootData& rd, const WeylWord& u,
                                   std::optional<Rat> form_scale) {
  DoubledSystem out;
  int n = u.length();
  WeylWord doubled = u.reversed().concat(u);
  out.spec = CellSpec::make(rd.label(), doubled,
                            form_scale.value_or(rd.form_scale()));
  out.u = u;
  for (int k = 1; k <= n; ++k) {
    int alpha = u.letters[k - 1];
    Weight om = Weight::fundamental(rd.rank(), alpha - 1);
    out.ys.push_back(y_interval(out.spec, om, n + 1 - k, n + k));
    TorusDressed ty;
    Weight tw = -out.spec.rd.weyl_act(doubled.segment(1, n - k + 1), om);
    ty.texp.resize(rd.rank());
    for (int i = 0; i < rd.rank(); ++i) ty.texp[i] = tw.c[i].get_num().get_si();
    ty.body = y_interval(out.spec, om, n - k + 2, n + k - 1).poly;
    out.ytildes.push_back(ty);
  }
  return out;
}

}  // namespace bruhat
