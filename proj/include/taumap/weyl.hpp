#pragma once

// Labels for irreducible characters of the Weyl groups occurring as relative
// groups here: partitions of m+1 for type A_m, bipartitions of m for type B_m
// (B_0 is the trivial group), and Malle's n_m names for F4 and G2. Also the
// diagram-folding map: the type of the fixed subgroup W^kappa.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "taumap/error.hpp"
#include "taumap/twisted.hpp"

namespace taumap {

enum class WeylFamily { A, B, D, F4, G2, E6, trivial };

struct WeylType {
  WeylFamily family;
  int rank;

  static WeylType type_a(int m);  // m >= 1
  static WeylType type_b(int m);  // m >= 0; B_0 denotes the trivial group
  static WeylType type_d(int m);  // m >= 2
  static WeylType f4() { return {WeylFamily::F4, 4}; }
  static WeylType g2() { return {WeylFamily::G2, 2}; }
  static WeylType e6() { return {WeylFamily::E6, 6}; }
  static WeylType trivial() { return {WeylFamily::trivial, 0}; }

  bool is_trivial_group() const {
    return family == WeylFamily::trivial ||
           (family == WeylFamily::B && rank == 0);
  }

  friend bool operator==(const WeylType&, const WeylType&) = default;
};

std::string render(const WeylType& t);
WeylType parse_weyl_type(const std::string& s);

// Partitions are weakly decreasing lists of positive parts.
using Partition = std::vector<int>;
using Bipartition = std::pair<Partition, Partition>;

// Character name n_m (optionally primed) as in the F4/G2 alphabets.
struct NamedLabel {
  int degree = 0;
  int b = 0;
  int primes = 0;  // 0, 1 or 2; rendered as ASCII apostrophes

  friend bool operator==(const NamedLabel&, const NamedLabel&) = default;
};

struct IrrLabel {
  std::variant<Partition, Bipartition, NamedLabel> value;

  static IrrLabel of(Partition p) { return {std::move(p)}; }
  static IrrLabel of(Bipartition bp) { return {std::move(bp)}; }
  static IrrLabel of(NamedLabel n) { return {n}; }
  // The label of the unit character of a trivial group (B_0 convention).
  static IrrLabel unit() { return {Bipartition{}}; }

  const Partition* partition() const { return std::get_if<Partition>(&value); }
  const Bipartition* bipartition() const {
    return std::get_if<Bipartition>(&value);
  }
  const NamedLabel* named() const { return std::get_if<NamedLabel>(&value); }

  friend bool operator==(const IrrLabel&, const IrrLabel&) = default;
};

// All partitions of n in reverse-lexicographic order, e.g.
// 4 -> (4),(3,1),(2,2),(2,1,1),(1,1,1,1).
std::vector<Partition> partitions(int n);

// All ordered pairs (alpha,beta) with |alpha|+|beta| = n; the size of alpha
// runs from n down to 0, each side in reverse-lexicographic order.
std::vector<Bipartition> bipartitions(int n);

// The 25-element F4 and 6-element G2 alphabets, in (degree, b, primes) order.
const std::vector<NamedLabel>& f4_alphabet();
const std::vector<NamedLabel>& g2_alphabet();

// Labels of Irr(W) for the supported types; throws UnsupportedType for E6
// (only its folded image F4 is ever needed) and for type D.
std::vector<IrrLabel> irr_labels(const WeylType& t);

// Type of the fixed subgroup W^kappa under the diagram automorphism:
// 2A_n -> B_{floor((n+1)/2)}, 2D_n -> B_{n-1}, 2E6 -> F4, 3D4 -> G2.
WeylType folded_type(const TwistedType& tt);

std::string render(const IrrLabel& label);

// Surface syntax: `<degree><primes>_<b>` for named labels (primes as ' or '',
// Unicode prime marks accepted), `[p1,p2,...]` for partitions and
// `[a1,...|b1,...]` for bipartitions. The one-argument form checks named
// labels against the union of the F4 and G2 alphabets; the two-argument form
// checks the label against Irr of the given type.
IrrLabel parse_label(const std::string& s);
IrrLabel parse_label(const std::string& s, const WeylType& t);

}  // namespace taumap
