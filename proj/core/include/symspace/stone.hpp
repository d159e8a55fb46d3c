#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symspace/rational.hpp"

namespace symspace {

// Subsets of a ground set {0, ..., n-1} as bitmasks; n is capped at 16.
using Mask = std::uint32_t;

// Subset lattice over a finite ground set, closed under union, intersection
// and complement. Always contains the empty and the full set. Members are
// exactly the unions of the atoms, which double as the blocks of the point
// partition the algebra induces.
class FiniteBooleanAlgebra {
 public:
  static constexpr int kMaxGround = 16;

  static FiniteBooleanAlgebra generate(int ground_size, const std::vector<Mask>& generators);
  // Validates closure of an explicit member list.
  static FiniteBooleanAlgebra from_members(int ground_size, std::vector<Mask> members);

  int ground_size() const { return ground_size_; }
  Mask full() const { return full_; }
  const std::vector<Mask>& members() const { return members_; }  // ascending
  const std::vector<Mask>& atoms() const { return atoms_; }      // ascending

  bool contains(Mask m) const { return index_of(m) >= 0; }
  int index_of(Mask m) const;
  Mask atom_of_point(int point) const;

 private:
  FiniteBooleanAlgebra() = default;
  void build_index();

  int ground_size_ = 0;
  Mask full_ = 0;
  std::vector<Mask> members_;
  std::vector<Mask> atoms_;
  std::vector<int> index_;  // mask -> member index, -1 if absent
};

// Maximal filter, stored as the sorted member indices it selects.
struct Ultrafilter {
  std::vector<int> selected;

  friend bool operator==(const Ultrafilter&, const Ultrafilter&) = default;
};

// Blocks of indistinguishability: two points are equivalent when no member
// separates them. Blocks coincide with the atoms.
struct ZetaPartition {
  std::vector<std::vector<int>> blocks;  // point lists, by ascending atom mask
  std::vector<int> block_of_point;
};

ZetaPartition zeta_partition(const FiniteBooleanAlgebra& alg);

// Complete enumeration; the k-th ultrafilter is the principal filter of the
// k-th atom, so the count equals the number of atoms.
std::vector<Ultrafilter> ultrafilters(const FiniteBooleanAlgebra& alg);

// Literal check of the four ultrafilter axioms.
bool is_ultrafilter(const FiniteBooleanAlgebra& alg, const Ultrafilter& uf);

// Indices (into ultrafilters(alg)) of the ultrafilters containing `member`.
// Raises NotAMember when the mask is not in the algebra.
std::vector<int> stone_map(const FiniteBooleanAlgebra& alg, Mask member);

Ultrafilter point_ultrafilter(const FiniteBooleanAlgebra& alg, int point);

struct StoneIsomorphismReport {
  bool ok = true;
  std::string detail;
};

// All-pairs verification that the clopen-image map preserves union,
// intersection and complement, and is injective.
StoneIsomorphismReport verify_stone_isomorphism(const FiniteBooleanAlgebra& alg);

// Finite measure model: one positive weight per ground point.
struct WeightedSpace {
  std::vector<Rat> weights;
};

struct FactorSpace {
  WeightedSpace space;              // one weight per block
  std::vector<int> projection;      // point -> block id
};

// Collapses the space along the zeta-partition; block weights are the sums
// of their members' weights, so the projection is measure preserving.
FactorSpace factor_space(const WeightedSpace& space, const FiniteBooleanAlgebra& alg);

bool is_zeta_set(const FiniteBooleanAlgebra& alg, Mask subset);

}  // namespace symspace
