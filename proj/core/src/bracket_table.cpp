#include "bruhat/bracket_table.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace bruhat {

using nlohmann::json;

const Poly& BracketTable::stored_entry(int i, int j) const {
  auto it = entries.find({i, j});
  if (it == entries.end()) throw std::out_of_range("BracketTable: missing entry");
  return it->second;
}

Poly BracketTable::bracket_of_vars(int i, int j) const {
  if (i == j) return Poly();
  if (i < j) return stored_entry(i, j);
  return -stored_entry(j, i);
}

std::string BracketTable::to_json() const {
  json j;
  j["type"] = type_label;
  json w = json::array();
  for (int l : word.letters) w.push_back(l);
  j["word"] = w;
  j["form_scale"] = rat_to_string(form_scale);
  j["method"] = method;
  j["n"] = n;
  j["vars"] = var_names;
  VarNames nm = names();
  json wts = json::array();
  for (const auto& wt : weights) {
    json row = json::array();
    for (const auto& c : wt.c) row.push_back(rat_to_string(c));
    wts.push_back(row);
  }
  j["weights"] = wts;
  json br = json::object();
  for (const auto& [ij, p] : entries) {
    std::string key = std::to_string(ij.first + 1) + "," + std::to_string(ij.second + 1);
    br[key] = p.to_string(nm);
  }
  j["brackets"] = br;
  return j.dump(2);
}

BracketTable BracketTable::from_json(const std::string& text) {
  json j = json::parse(text);
  BracketTable bt;
  bt.type_label = j.at("type").get<std::string>();
  for (const auto& l : j.at("word")) bt.word.letters.push_back(l.get<int>());
  bt.form_scale = rat_parse_or_throw(j.at("form_scale").get<std::string>());
  bt.method = j.value("method", "");
  bt.n = j.at("n").get<int>();
  bt.var_names = j.at("vars").get<std::vector<std::string>>();
  for (const auto& row : j.at("weights")) {
    std::vector<Rat> cs;
    for (const auto& v : row) cs.push_back(rat_parse_or_throw(v.get<std::string>()));
    bt.weights.push_back(Weight(cs));
  }
  VarNames nm = bt.names();
  for (auto it = j.at("brackets").begin(); it != j.at("brackets").end(); ++it) {
    auto comma = it.key().find(',');
    int a = std::stoi(it.key().substr(0, comma)) - 1;
    int b = std::stoi(it.key().substr(comma + 1)) - 1;
    auto p = Poly::parse(it.value().get<std::string>(), nm);
    if (!p) throw std::runtime_error("BracketTable: bad polynomial " + it.value().get<std::string>());
    bt.entries[{a, b}] = *p;
  }
  return bt;
}

Poly poisson_bracket(const Poly& f, const Poly& g, const BracketTable& bt) {
  if (f.max_var() > bt.n || g.max_var() > bt.n)
    throw std::domain_error("poisson_bracket: unknown variable");
  std::vector<Poly> df(bt.n), dg(bt.n);
  std::vector<bool> nf(bt.n, false), ng(bt.n, false);
  for (int i = 0; i < bt.n; ++i) {
    df[i] = f.derivative(i);
    dg[i] = g.derivative(i);
    nf[i] = !df[i].is_zero();
    ng[i] = !dg[i].is_zero();
  }
  Poly acc;
  for (const auto& [ij, entry] : bt.entries) {
    auto [i, j] = ij;
    if ((nf[i] && ng[j]) || (nf[j] && ng[i])) acc += entry * (df[i] * dg[j] - df[j] * dg[i]);
  }
  return acc;
}

JacobiReport jacobi_check(const BracketTable& bt) {
  JacobiReport rep;
  for (int i = 0; i < bt.n; ++i)
    for (int j = i + 1; j < bt.n; ++j)
      for (int k = j + 1; k < bt.n; ++k) {
        Poly s = poisson_bracket(Poly::var(i), poisson_bracket(Poly::var(j), Poly::var(k), bt), bt) +
                 poisson_bracket(Poly::var(j), poisson_bracket(Poly::var(k), Poly::var(i), bt), bt) +
                 poisson_bracket(Poly::var(k), poisson_bracket(Poly::var(i), Poly::var(j), bt), bt);
        if (!s.is_zero()) {
          rep.ok = false;
          rep.i = i;
          rep.j = j;
          rep.k = k;
          rep.violation = s;
          return rep;
        }
      }
  return rep;
}

Weight monomial_weight(const Monomial& m, std::span<const Weight> wts, int rank) {
  Weight acc = Weight::zero(rank);
  for (int i = 0; i < (int)m.e.size(); ++i)
    if (m.e[i] != 0) acc = acc + wts[i] * Rat(m.e[i]);
  return acc;
}

std::optional<Weight> poly_weight(const Poly& f, std::span<const Weight> wts, int rank) {
  std::optional<Weight> w;
  for (const auto& [m, c] : f.terms()) {
    Weight mw = monomial_weight(m, wts, rank);
    if (!w)
      w = mw;
    else if (!(*w == mw))
      return std::nullopt;
  }
  if (!w) return Weight::zero(rank);
  return w;
}

bool weight_homogeneous(const BracketTable& bt) {
  int rank = bt.weights.empty() ? 0 : bt.weights[0].rank();
  for (const auto& [ij, entry] : bt.entries) {
    Weight target = bt.weights[ij.first] + bt.weights[ij.second];
    for (const auto& [m, c] : entry.terms())
      if (!(monomial_weight(m, bt.weights, rank) == target)) return false;
  }
  return true;
}

std::vector<std::vector<int32_t>> lower_set(int nvars, int degree_bound) {
  std::vector<std::vector<int32_t>> out;
  std::vector<int32_t> cur(nvars, 0);
  std::function<void(int, int)> rec = [&](int pos, int remaining) {
    if (pos == nvars) {
      out.push_back(cur);
      return;
    }
    for (int d = 0; d <= remaining; ++d) {
      cur[pos] = d;
      rec(pos + 1, remaining - d);
    }
    cur[pos] = 0;
  };
  rec(0, degree_bound);
  // graded-lex ascending extends componentwise divisibility
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int32_t da = 0, db = 0;
    for (auto v : a) da += v;
    for (auto v : b) db += v;
    if (da != db) return da < db;
    return a < b;
  });
  return out;
}

Poly newton_interpolate(const std::vector<std::vector<int32_t>>& exps,
                        const std::vector<std::vector<Rat>>& grid,
                        const std::function<Rat(size_t)>& value_of_node) {
  size_t N = exps.size();
  int nvars = grid.size();
  // newton_at(m', node m) = prod_k prod_{t < m'_k} (grid[k][m_k] - grid[k][t])
  auto newton_at = [&](const std::vector<int32_t>& mp, const std::vector<int32_t>& m) {
    Rat v(1);
    for (int k = 0; k < nvars; ++k) {
      for (int32_t t = 0; t < mp[k]; ++t) {
        if (t >= m[k]) return Rat(0);  // includes the vanishing factor
        v *= grid[k][m[k]] - grid[k][t];
      }
    }
    return v;
  };
  std::vector<Rat> coeff(N);
  for (size_t p = 0; p < N; ++p) {
    Rat acc = value_of_node(p);
    for (size_t q = 0; q < p; ++q) {
      if (is_zero(coeff[q])) continue;
      Rat nv = newton_at(exps[q], exps[p]);
      if (!is_zero(nv)) acc -= coeff[q] * nv;
    }
    Rat diag = newton_at(exps[p], exps[p]);
    coeff[p] = acc / diag;
  }
  // expand sum coeff_m * N_m into monomial form
  Poly out;
  for (size_t q = 0; q < N; ++q) {
    if (is_zero(coeff[q])) continue;
    Poly term(coeff[q]);
    for (int k = 0; k < nvars; ++k)
      for (int32_t t = 0; t < exps[q][k]; ++t)
        term *= Poly::var(k) - Poly(grid[k][t]);
    out += term;
  }
  return out;
}

Poly interpolate_poly(const std::function<Rat(std::span<const Rat>)>& evaluator, int nvars,
                      const InterpolateOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::uniform_int_distribution<int> num(1, 97), den(1, 7);
  std::optional<Poly> prev;
  for (int d = std::max(1, opts.initial_bound); d <= opts.max_bound; d = d * 2) {
    auto exps = lower_set(nvars, d);
    std::vector<std::vector<Rat>> grid(nvars);
    for (int k = 0; k < nvars; ++k)
      for (int t = 0; t <= d; ++t) grid[k].push_back(Rat(t + 1));
    Poly p = newton_interpolate(exps, grid, [&](size_t idx) {
      std::vector<Rat> pt(nvars);
      for (int k = 0; k < nvars; ++k) pt[k] = grid[k][exps[idx][k]];
      return evaluator(pt);
    });
    if (prev && *prev == p) {
      bool ok = true;
      for (int v = 0; v < opts.verify_points && ok; ++v) {
        std::vector<Rat> pt(nvars);
        for (int k = 0; k < nvars; ++k) pt[k] = rat(num(rng), den(rng));
        if (evaluator(pt) != p.eval_rat(pt)) ok = false;
      }
      if (ok) return p;
      throw std::runtime_error("interpolate_poly: verification failed after bound agreement");
    }
    prev = p;
  }
  throw std::runtime_error("interpolate_poly: evaluator not polynomial within max bound");
}

}  // namespace bruhat
