#include "symspace/stone.hpp"

#include <algorithm>
#include <map>

namespace symspace {

namespace {

void check_ground_size(int n) {
  if (n < 1 || n > FiniteBooleanAlgebra::kMaxGround)
    raise(Errc::InvalidInput,
          "ground size must be within 1.." + std::to_string(FiniteBooleanAlgebra::kMaxGround));
}

std::vector<Mask> atoms_from_signatures(int n, const std::vector<Mask>& generators) {
  // Points sharing the same membership pattern across all generators form an
  // atom of the generated algebra.
  std::map<std::vector<bool>, Mask> groups;
  for (int point = 0; point < n; ++point) {
    std::vector<bool> sig;
    sig.reserve(generators.size());
    for (Mask g : generators) sig.push_back((g >> point) & 1u);
    groups[sig] |= Mask(1) << point;
  }
  std::vector<Mask> atoms;
  atoms.reserve(groups.size());
  for (const auto& [sig, mask] : groups) atoms.push_back(mask);
  std::sort(atoms.begin(), atoms.end());
  return atoms;
}

std::vector<Mask> unions_of(const std::vector<Mask>& atoms) {
  std::vector<Mask> members;
  members.reserve(size_t(1) << atoms.size());
  for (Mask subset = 0; subset < (Mask(1) << atoms.size()); ++subset) {
    Mask m = 0;
    for (size_t a = 0; a < atoms.size(); ++a)
      if ((subset >> a) & 1u) m |= atoms[a];
    members.push_back(m);
  }
  std::sort(members.begin(), members.end());
  return members;
}

}  // namespace

void FiniteBooleanAlgebra::build_index() {
  index_.assign(size_t(1) << ground_size_, -1);
  for (size_t i = 0; i < members_.size(); ++i) index_[members_[i]] = static_cast<int>(i);
}

int FiniteBooleanAlgebra::index_of(Mask m) const {
  if (m >= index_.size()) return -1;
  return index_[m];
}

Mask FiniteBooleanAlgebra::atom_of_point(int point) const {
  if (point < 0 || point >= ground_size_) raise(Errc::InvalidInput, "point outside the ground set");
  for (Mask a : atoms_)
    if ((a >> point) & 1u) return a;
  raise(Errc::InvalidInput, "atoms do not cover the ground set");
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::generate(int ground_size,
                                                    const std::vector<Mask>& generators) {
  check_ground_size(ground_size);
  FiniteBooleanAlgebra alg;
  alg.ground_size_ = ground_size;
  alg.full_ = (Mask(1) << ground_size) - 1;
  for (Mask g : generators)
    if ((g & ~alg.full_) != 0) raise(Errc::InvalidInput, "generator exceeds the ground set");
  alg.atoms_ = atoms_from_signatures(ground_size, generators);
  alg.members_ = unions_of(alg.atoms_);
  alg.build_index();
  return alg;
}

FiniteBooleanAlgebra FiniteBooleanAlgebra::from_members(int ground_size,
                                                        std::vector<Mask> members) {
  check_ground_size(ground_size);
  FiniteBooleanAlgebra alg;
  alg.ground_size_ = ground_size;
  alg.full_ = (Mask(1) << ground_size) - 1;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (Mask m : members)
    if ((m & ~alg.full_) != 0) raise(Errc::InvalidInput, "member exceeds the ground set");
  alg.members_ = std::move(members);
  alg.build_index();

  // Closure is equivalent to: the atoms (minimal point envelopes) partition
  // the ground set, every member is a union of atoms, and all unions occur.
  std::vector<Mask> atoms;
  for (int point = 0; point < ground_size; ++point) {
    Mask envelope = alg.full_;
    for (Mask m : alg.members_)
      if ((m >> point) & 1u) envelope &= m;
    if (((envelope >> point) & 1u) == 0)
      raise(Errc::InvalidInput, "member list is not closed (missing full set?)");
    atoms.push_back(envelope);
  }
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  alg.atoms_ = std::move(atoms);
  auto expected = unions_of(alg.atoms_);
  if (expected != alg.members_)
    raise(Errc::InvalidInput, "member list is not closed under the Boolean operations");
  return alg;
}

ZetaPartition zeta_partition(const FiniteBooleanAlgebra& alg) {
  ZetaPartition out;
  out.block_of_point.assign(alg.ground_size(), -1);
  for (size_t a = 0; a < alg.atoms().size(); ++a) {
    std::vector<int> block;
    for (int point = 0; point < alg.ground_size(); ++point)
      if ((alg.atoms()[a] >> point) & 1u) {
        block.push_back(point);
        out.block_of_point[point] = static_cast<int>(a);
      }
    out.blocks.push_back(std::move(block));
  }
  return out;
}

std::vector<Ultrafilter> ultrafilters(const FiniteBooleanAlgebra& alg) {
  std::vector<Ultrafilter> out;
  out.reserve(alg.atoms().size());
  for (Mask atom : alg.atoms()) {
    Ultrafilter uf;
    for (size_t i = 0; i < alg.members().size(); ++i)
      if ((alg.members()[i] & atom) == atom) uf.selected.push_back(static_cast<int>(i));
    out.push_back(std::move(uf));
  }
  return out;
}

bool is_ultrafilter(const FiniteBooleanAlgebra& alg, const Ultrafilter& uf) {
  const auto& members = alg.members();
  std::vector<bool> in(members.size(), false);
  for (int idx : uf.selected) {
    if (idx < 0 || idx >= static_cast<int>(members.size())) return false;
    in[idx] = true;
  }
  for (size_t i = 0; i < members.size(); ++i) {
    if (in[i] && members[i] == 0) return false;  // the empty set never belongs
    for (size_t j = 0; j < members.size(); ++j) {
      if (in[i] && (members[i] & members[j]) == members[i] && !in[j]) return false;  // upward
      if (in[i] && in[j]) {
        int k = alg.index_of(members[i] & members[j]);
        if (k < 0 || !in[k]) return false;  // closed under intersection
      }
    }
    int c = alg.index_of(~members[i] & alg.full());
    if (c < 0) return false;
    if (in[i] == in[c]) return false;  // exactly one of A, complement(A)
  }
  return true;
}

std::vector<int> stone_map(const FiniteBooleanAlgebra& alg, Mask member) {
  if (!alg.contains(member)) raise(Errc::NotAMember, "mask is not a member of the algebra");
  std::vector<int> out;
  for (size_t a = 0; a < alg.atoms().size(); ++a)
    if ((member & alg.atoms()[a]) == alg.atoms()[a]) out.push_back(static_cast<int>(a));
  return out;
}

Ultrafilter point_ultrafilter(const FiniteBooleanAlgebra& alg, int point) {
  if (point < 0 || point >= alg.ground_size())
    raise(Errc::InvalidInput, "point outside the ground set");
  Ultrafilter uf;
  for (size_t i = 0; i < alg.members().size(); ++i)
    if ((alg.members()[i] >> point) & 1u) uf.selected.push_back(static_cast<int>(i));
  return uf;
}

StoneIsomorphismReport verify_stone_isomorphism(const FiniteBooleanAlgebra& alg) {
  // Represent each member by the set of atoms below it; the clopen image of
  // a member is exactly that atom set, so the Boolean operations must map to
  // bitmask operations on atom sets.
  const auto& members = alg.members();
  const auto& atoms = alg.atoms();
  std::vector<Mask> atom_set(members.size(), 0);
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t a = 0; a < atoms.size(); ++a)
      if ((members[i] & atoms[a]) == atoms[a]) atom_set[i] |= Mask(1) << a;

  const Mask atom_full = (Mask(1) << atoms.size()) - 1;
  for (size_t i = 0; i < members.size(); ++i) {
    int ci = alg.index_of(~members[i] & alg.full());
    if (ci < 0 || atom_set[ci] != (~atom_set[i] & atom_full))
      return {false, "complement not preserved at member " + std::to_string(i)};
    for (size_t j = i; j < members.size(); ++j) {
      int u = alg.index_of(members[i] | members[j]);
      int m = alg.index_of(members[i] & members[j]);
      if (u < 0 || m < 0) return {false, "algebra not closed"};
      if (atom_set[u] != (atom_set[i] | atom_set[j]))
        return {false, "union not preserved at pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
      if (atom_set[m] != (atom_set[i] & atom_set[j]))
        return {false, "intersection not preserved at pair (" + std::to_string(i) + "," +
                           std::to_string(j) + ")"};
      if (i != j && atom_set[i] == atom_set[j]) return {false, "clopen image not injective"};
    }
  }
  return {true, ""};
}

FactorSpace factor_space(const WeightedSpace& space, const FiniteBooleanAlgebra& alg) {
  if (static_cast<int>(space.weights.size()) != alg.ground_size())
    raise(Errc::InvalidInput, "weight count must match the ground size");
  for (const auto& w : space.weights)
    if (w <= 0) raise(Errc::InvalidInput, "weights must be positive");
  ZetaPartition zeta = zeta_partition(alg);
  FactorSpace out;
  out.projection = zeta.block_of_point;
  out.space.weights.assign(zeta.blocks.size(), Rat(0));
  for (int point = 0; point < alg.ground_size(); ++point)
    out.space.weights[zeta.block_of_point[point]] += space.weights[point];
  return out;
}

bool is_zeta_set(const FiniteBooleanAlgebra& alg, Mask subset) {
  for (Mask atom : alg.atoms()) {
    Mask overlap = subset & atom;
    if (overlap != 0 && overlap != atom) return false;
  }
  return true;
}

}  // namespace symspace
