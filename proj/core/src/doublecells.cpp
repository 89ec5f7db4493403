#include "bruhat/doublecells.hpp"

#include <sstream>
#include <stdexcept>

namespace bruhat {

DoubleCellSpec DoubleCellSpec::make(const std::string& type_label, const WeylWord& u,
                                    const WeylWord& v, std::optional<Rat> form_scale) {
  RootData rd = RootData::simple(type_label, form_scale.value_or(Rat(1)));
  if (!rd.is_reduced(u)) throw std::domain_error("DoubleCellSpec: u-word not reduced");
  if (!rd.is_reduced(v)) throw std::domain_error("DoubleCellSpec: v-word not reduced");
  return DoubleCellSpec{rd, RepPack::bundled(rd), u, v};
}

GuvDecomposition decompose_guv(const MatQ& g, const DoubleCellSpec& spec) {
  const RepPack& rep = spec.rep;
  const RootData& rd = spec.rd;
  // Bruhat membership через minors: Delta_{u omega, omega}(g) != 0 and
  // Delta_{omega, v omega}(g) != 0 for all fundamental weights.
  for (int a = 0; a < rd.rank(); ++a) {
    Weight om = Weight::fundamental(rd.rank(), a);
    if (is_zero(generalized_minor<Rat>(rep, g, spec.u_word, WeylWord(), om)))
      throw std::domain_error("decompose_guv: g not in BuB (minor vanishes)");
    if (is_zero(generalized_minor<Rat>(rep, g, WeylWord(), spec.v_word, om)))
      throw std::domain_error("decompose_guv: g not in B_-vB_- (minor vanishes)");
  }
  MatQ ubar = rep.wbar(spec.u_word);
  MatQ vbb = rep.wbarbar(spec.v_word);

  GuvDecomposition out;
  out.g = g;
  // u-side: LDU of ubar^{-1} g
  auto lduU = gauss_ldu<Rat>(rep, ubar.inverse() * g);
  if (!lduU) throw std::domain_error("decompose_guv: ubar^{-1} g not in B_- B");
  out.tprime = lduU->torus;
  out.tprime_chars = lduU->torus_chars;
  out.nprime = out.tprime * lduU->upper * out.tprime.inverse();
  out.n_ubar = g * (out.nprime * out.tprime).inverse();
  if (!is_unit_upper(out.n_ubar * ubar.inverse()) || !is_unit_lower(ubar.inverse() * out.n_ubar))
    throw std::domain_error("decompose_guv: n ubar not in C_ubar");

  // v-side: t = ([g vbb^{-1}]_0)^v, then m' from the UL factorization
  auto lduV = gauss_ldu<Rat>(rep, g * vbb.inverse());
  if (!lduV) throw std::domain_error("decompose_guv: g vbb^{-1} not in B_- B");
  MatQ vbar = rep.wbar(spec.v_word);
  out.t = vbar.inverse() * lduV->torus * vbar;
  auto ul = ul_factor<Rat>(vbb.inverse() * (g * out.t.inverse()));
  if (!ul) throw std::domain_error("decompose_guv: no N N_- factorization on the v side");
  out.mprime = ul->second;
  out.m_vbb = g * out.t.inverse() * out.mprime.inverse();
  if (!is_unit_upper(vbb.inverse() * out.m_vbb) || !is_unit_lower(out.m_vbb * vbb.inverse()))
    throw std::domain_error("decompose_guv: m vbb not in D_vbb");
  for (int a = 0; a < rd.rank(); ++a)
    out.t_chars.push_back(fundamental_minor<Rat>(rep, out.t, a));

  if (!(out.n_ubar * out.nprime * out.tprime == g) || !(out.m_vbb * out.mprime * out.t == g))
    throw std::logic_error("decompose_guv: factorization does not re-multiply to g");
  return out;
}

FzPoint fz_embed(const MatQ& g, const DoubleCellSpec& spec) {
  GuvDecomposition dec = decompose_guv(g, spec);
  std::vector<MatQ> flags = {dec.m_vbb.inverse(), dec.n_ubar};
  std::vector<WeylWord> chunks = {spec.v_word.reversed(), spec.u_word};
  Extraction<Rat> ext =
      extract_bs_coords<Rat>(spec.rep, flags, chunks, ChartKind::BottSamelson);
  return FzPoint{dec.t_chars, ext.coords};
}

MatQ fz_embed_inverse(const FzPoint& pt, const DoubleCellSpec& spec) {
  const RepPack& rep = spec.rep;
  CellSpec cell = spec.cell();
  if (!on_open_leaf(cell, CellPoint{pt.x}))
    throw std::domain_error("fz_embed_inverse: point off the open leaf");
  int a = spec.a(), b = spec.b();
  // normalize the two flags to C_{v^{-1}-bar} and C_{ubar}
  MatQ p1 = MatQ::identity(rep.dim), p2 = MatQ::identity(rep.dim);
  for (int k = 1; k <= a; ++k)
    p1 = p1 * p_letter<Rat>(rep, cell.word.letters[k - 1], pt.x[k - 1]);
  for (int k = a + 1; k <= a + b; ++k)
    p2 = p2 * p_letter<Rat>(rep, cell.word.letters[k - 1], pt.x[k - 1]);

  MatQ vinv_bar = rep.wbar(spec.v_word.reversed());  // representative of v^{-1}
  auto ldu1 = gauss_ldu<Rat>(rep, vinv_bar.inverse() * p1);
  if (!ldu1) throw std::domain_error("fz_embed_inverse: first flag not in B v^{-1} B");
  MatQ c1 = vinv_bar * ldu1->lower;  // in C_{v^{-1}-bar}
  MatQ b1 = p1.inverse() * c1;       // in B
  MatQ ubar = rep.wbar(spec.u_word);
  auto ldu2 = gauss_ldu<Rat>(rep, ubar.inverse() * (b1.inverse() * p2));
  if (!ldu2) throw std::domain_error("fz_embed_inverse: second flag not in B u B");
  MatQ c2 = ubar * ldu2->lower;  // n ubar in C_ubar

  MatQ m_vbb = c1.inverse();
  auto ldu3 = gauss_ldu<Rat>(rep, m_vbb.inverse() * c2);
  if (!ldu3) throw std::domain_error("fz_embed_inverse: (m vbb)^{-1} n ubar not in B_- B");
  MatQ t = torus_point<Rat>(rep, pt.torus);
  return m_vbb * ldu3->lower * t;
}

TorusDressed fz_minor_bs(const DoubleCellSpec& spec, const Weight& lambda, int i, int j) {
  int a = spec.a(), b = spec.b();
  if (i < 0 || i > a || j < 1 || j > b + 1) throw std::out_of_range("fz_minor_bs: bad indices");
  CellSpec cell = spec.cell();
  TorusDressed out;
  Weight tw = -spec.rd.weyl_act(cell.word.segment(1, a - i), lambda);
  out.texp.resize(spec.rd.rank());
  for (int k = 0; k < spec.rd.rank(); ++k) {
    if (tw.c[k].get_den() != 1) throw std::domain_error("fz_minor_bs: non-integral torus weight");
    out.texp[k] = tw.c[k].get_num().get_si();
  }
  out.body = y_interval(cell, lambda, a + 1 - i, a - 1 + j).poly;
  return out;
}

Rat fz_minor_twist(const MatQ& g, const DoubleCellSpec& spec, const Weight& lambda, int i,
                   int j) {
  const RepPack& rep = spec.rep;
  MatQ ubar = rep.wbar(spec.u_word);
  MatQ vbb = rep.wbarbar(spec.v_word);
  auto lduU = gauss_ldu<Rat>(rep, ubar.inverse() * g);
  auto lduV = gauss_ldu<Rat>(rep, g * vbb.inverse());
  if (!lduU || !lduV) throw std::domain_error("fz_minor_twist: g not in G^{u,v}");
  // ghat = ([ubar^{-1} g]_-^{-1} ubar^{-1} g vbb^{-1} [g vbb^{-1}]_+^{-1})^{-1}
  MatQ inner = lduU->lower.inverse() * (ubar.inverse() * g * vbb.inverse()) *
               lduV->upper.inverse();
  MatQ ghat = inner.inverse();
  // Delta_{w1 lam, w2 lam}(g') = Delta^lam(w2bb^{-1} ghat w1bb)
  WeylWord w1 = spec.rd.reduced_word(spec.u_interval(j).reversed());  // (u_{[j,b]})^{-1}
  WeylWord w2 = spec.rd.reduced_word(spec.v_interval(i));             // v_{[1,i]}
  MatQ h = rep.wbarbar(w2).inverse() * ghat * rep.wbarbar(w1);
  Rat out(1);
  for (int al = 0; al < spec.rd.rank(); ++al) {
    long m = lambda.c[al].get_num().get_si();
    for (long t = 0; t < m; ++t) out *= fundamental_minor<Rat>(rep, h, al);
  }
  return out;
}

std::vector<KzChainEntry> fz_minor_chain(const DoubleCellSpec& spec) {
  int a = spec.a(), b = spec.b(), r = spec.rd.rank();
  // alternating shuffle, u-letter first, then leftovers
  std::vector<char> shuffle;
  {
    int iu = 0, iv = 0;
    while (iu < b || iv < a) {
      if (iu < b) shuffle.push_back('u'), ++iu;
      if (iv < a) shuffle.push_back('v'), ++iv;
    }
  }
  std::vector<KzChainEntry> chain;
  int seen_u = 0, seen_v = 0;
  for (int k = 1; k <= a + b; ++k) {
    KzChainEntry e;
    e.k = k;
    e.i = seen_v;
    e.j = 1 + seen_u;
    if (shuffle[k - 1] == 'u') {
      e.alpha = spec.u_word.letters[e.j - 1];
      ++seen_u;
    } else {
      e.alpha = spec.v_word.letters[e.i];  // (i+1)-th letter, 0-based access
      ++seen_v;
    }
    Weight om = Weight::fundamental(r, e.alpha - 1);
    e.gamma = spec.rd.weyl_act(spec.u_interval(e.j).reversed(), om);
    e.delta = spec.rd.weyl_act(spec.v_interval(e.i), om);
    e.expr = fz_minor_bs(spec, om, e.i, e.j);
    chain.push_back(e);
  }
  for (int l = 1; l <= r; ++l) {
    KzChainEntry e;
    e.k = a + b + l;
    e.i = a;
    e.j = b + 1;
    e.alpha = l;
    Weight om = Weight::fundamental(r, l - 1);
    e.gamma = om;
    e.delta = spec.rd.weyl_act(spec.v_word, om);
    e.expr = fz_minor_bs(spec, om, a, b + 1);
    chain.push_back(e);
  }
  return chain;
}

std::vector<KzChainEntry> kz_system(const DoubleCellSpec& spec) {
  if (!(spec.u_word == spec.v_word))
    throw std::domain_error("kz_system: defined on G^{u,u} (u-word must equal v-word)");
  if (!spec.rd.is_reduced(spec.u_word)) throw std::domain_error("kz_system: u-word not reduced");
  auto chain = fz_minor_chain(spec);
  std::vector<KzChainEntry> odd;
  for (int k = 1; k <= spec.b(); ++k) odd.push_back(chain[2 * (k - 1)]);
  return odd;
}

OracleReport kz_bracket_oracle(const DoubleCellSpec& spec, const std::vector<KzChainEntry>& chain,
                               const BracketTable& base) {
  OracleReport rpt;
  for (size_t s = 0; s < chain.size(); ++s)
    for (size_t t = s; t < chain.size(); ++t) {
      const auto& Mk = chain[s];
      const auto& Ml = chain[t];
      Rat expected = spec.rd.pairing(Mk.delta, Ml.delta) - spec.rd.pairing(Mk.gamma, Ml.gamma);
      LogCanonical lc = check_log_canonical_dressed(Mk.expr, Ml.expr, base, spec.rd);
      ++rpt.pairs_checked;
      if (!lc.is_log_canonical || lc.coefficient != expected) {
        rpt.ok = false;
        std::ostringstream os;
        os << "pair (M_" << Mk.k << ", M_" << Ml.k << "): table coefficient "
           << (lc.is_log_canonical ? rat_to_string(lc.coefficient) : std::string("not log-canonical"))
           << " vs weight formula " << rat_to_string(expected);
        rpt.mismatches.push_back(os.str());
      }
    }
  return rpt;
}

}  // namespace bruhat
