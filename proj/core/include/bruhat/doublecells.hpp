#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bruhat/cells.hpp"
#include "bruhat/reppack.hpp"
#include "bruhat/rootdata.hpp"

namespace bruhat {

// Double Bruhat cell G^{u,v} with chosen reduced words. The Bott-Samelson
// word is (v^{-1}, u): the reversed v-word followed by the u-word.
struct DoubleCellSpec {
  RootData rd;
  RepPack rep;
  WeylWord u_word, v_word;  // reduced

  static DoubleCellSpec make(const std::string& type_label, const WeylWord& u, const WeylWord& v,
                             std::optional<Rat> form_scale = std::nullopt);

  int a() const { return v_word.length(); }
  int b() const { return u_word.length(); }
  WeylWord concat_word() const { return v_word.reversed().concat(u_word); }
  CellSpec cell() const { return CellSpec{rd, concat_word(), rep}; }

  // v_{[1,i]} = product of the first i letters of the v-word; u_{[j,b]} =
  // letters j..b of the u-word.
  WeylWord v_interval(int i) const { return v_word.segment(1, i); }
  WeylWord u_interval(int j) const { return u_word.segment(j, b()); }
};

// g = n ubar n' t' = m vbarbar m' t, all parts as matrices in the base rep.
struct GuvDecomposition {
  MatQ g;
  MatQ n_ubar, nprime, tprime;
  MatQ m_vbb, mprime, t;
  std::vector<Rat> t_chars, tprime_chars;  // fundamental character values
};

GuvDecomposition decompose_guv(const MatQ& g, const DoubleCellSpec& spec);

struct FzPoint {
  std::vector<Rat> torus;  // t^{omega_alpha}
  std::vector<Rat> x;      // Bott-Samelson coordinates, length a+b
};

FzPoint fz_embed(const MatQ& g, const DoubleCellSpec& spec);
MatQ fz_embed_inverse(const FzPoint& pt, const DoubleCellSpec& spec);

// M^lambda_{i,j} in Bott-Samelson coordinates:
// t^{-s_1..s_{a-i}(lambda)} y^lambda_{[a+1-i, a-1+j]}.
TorusDressed fz_minor_bs(const DoubleCellSpec& spec, const Weight& lambda, int i, int j);

// The same minor evaluated on the group through the hat twist
// (no theta automorphism needed).
Rat fz_minor_twist(const MatQ& g, const DoubleCellSpec& spec, const Weight& lambda, int i, int j);

// One entry of the Fomin-Zelevinsky minor chain attached to a shuffle.
struct KzChainEntry {
  int k = 0;        // 1-based position in the chain
  int i = 0, j = 1;
  int alpha = 1;    // 1-based simple root
  Weight gamma, delta;  // gamma^k = u_{[j,b]}^{-1} omega, delta^k = v_{[1,i]} omega
  TorusDressed expr;
};

// Chain M_1..M_{a+b} from the alternating (u then v) shuffle, plus the r
// appended entries M^{omega_l}_{a, b+1}.
std::vector<KzChainEntry> fz_minor_chain(const DoubleCellSpec& spec);

// Kogan-Zelevinsky system on G^{u,u}: M_1, M_3, ..., M_{2n-1}. Requires a
// reduced u-word and u = v.
std::vector<KzChainEntry> kz_system(const DoubleCellSpec& spec);

struct OracleReport {
  bool ok = true;
  int pairs_checked = 0;
  std::vector<std::string> mismatches;
};

// Checks {M_k, M_k'} = (<delta^k, delta^k'> - <gamma^k, gamma^k'>) M_k M_k'
// for every ordered pair, via the mixed-structure bracket table.
OracleReport kz_bracket_oracle(const DoubleCellSpec& spec, const std::vector<KzChainEntry>& chain,
                               const BracketTable& base);

}  // namespace bruhat
