#pragma once

// Cuspidal supports and character-sheaf labels. A CuspidalLevi records one
// cuspidal subset J together with the type of its relative Weyl group
// N_W(iota W_J)/W_J and the stored (d, count, case) data of its cuspidal
// objects. CSLabel is the triple (J, E', A') with A' named by an index.

#include <optional>
#include <string>
#include <vector>

#include "taumap/weyl.hpp"

namespace taumap {

enum class LeviKind { empty, proper, full };

enum class UnipotentCase { i, ii };

struct CuspidalDatum {
  std::optional<int> d;  // nullopt where the value is unspecified (classical)
  int count = 1;
  UnipotentCase support_case = UnipotentCase::i;

  friend bool operator==(const CuspidalDatum&, const CuspidalDatum&) = default;
};

struct CuspidalLevi {
  LeviKind kind = LeviKind::empty;
  WeylType levi_type = WeylType::trivial();  // meaningful for proper/full
  WeylType relative_type = WeylType::trivial();
  std::vector<CuspidalDatum> d_values;

  friend bool operator==(const CuspidalLevi&, const CuspidalLevi&) = default;
};

struct CSLabel {
  LeviKind levi_kind = LeviKind::empty;
  WeylType levi_type = WeylType::trivial();
  IrrLabel relative_char;
  std::optional<int> d;
  int cuspidal_index = 1;

  static CSLabel plain(IrrLabel e) {
    return {LeviKind::empty, WeylType::trivial(), std::move(e), 0, 1};
  }

  friend bool operator==(const CSLabel&, const CSLabel&) = default;
};

struct CS2Pair {
  CuspidalLevi levi;
  IrrLabel relative_char;

  friend bool operator==(const CS2Pair&, const CS2Pair&) = default;
};

// Empty levi first, then proper/full levis by increasing rank.
// 2A_n: A_{k(k+1)/2-1} for k >= 2 with k(k+1)/2-1 <= n and == n mod 2,
//       relative type B_{(n+1-k(k+1)/2)/2}.
// 2D_n: D_{k^2} for odd k >= 3 with k^2 <= n, relative type B_{n-k^2}.
// 2E6:  A5 (relative A1) and the full E6 (relative trivial, d in {4,0}).
// 3D4:  the full D4 (relative trivial, d in {1,0}).
std::vector<CuspidalLevi> cuspidal_levis(const TwistedType& tt);

// The pair set CS''(D) for the classical types; UnsupportedType otherwise.
std::vector<CS2Pair> enumerate_cs2(const TwistedType& tt);

// All triples (J, E', A'), expanding each stored (d, count) by index 1..count.
std::vector<CSLabel> enumerate_cs_prime(const TwistedType& tt);

// The stored count N_d; 0 if d is not among the levi's stored values.
int cuspidal_count(const TwistedType& tt, const CuspidalLevi& levi, int d);

// Case (ii) exactly at (2E6, d=0) and (3D4, d=0); requires d to be a stored
// cuspidal d of the full levi.
UnipotentCase unipotent_support_case(const TwistedType& tt, int d);

// Levi lookup by kind and type; empty when absent.
std::optional<CuspidalLevi> find_levi(const TwistedType& tt, LeviKind kind,
                                      const WeylType& levi_type);

// Surface syntax mirrors the tables: plain label text for empty-levi entries,
// `(A5,eps,0)` style triples otherwise, with `#i` selecting one of several
// cuspidal objects, e.g. `(E6,1,0)#2`. Classical cuspidal data carries no d,
// so those triples render as pairs, e.g. `(A2,[1|])`.
std::string render(const TwistedType& tt, const CSLabel& x);
CSLabel parse_cs_label(const TwistedType& tt, const std::string& s);

}  // namespace taumap
