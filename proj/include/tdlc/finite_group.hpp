#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace tdlc {

/// Finite group given by its full multiplication table. Elements are
/// 0..order-1; identity() need not be 0.
class FiniteGroup {
 public:
  using Element = std::uint32_t;
  using Table = std::vector<std::vector<Element>>;

  /// The trivial group.
  FiniteGroup() : table_{{0}}, inverse_{0}, name_("1") {}

  /// Checks closure, identity, inverses and (for order <= 512) associativity.
  static FiniteGroup from_table(Table table, std::string name = {});
  /// Closure of permutations of {0..degree-1}; element 0 is the identity.
  static FiniteGroup from_permutations(const std::vector<std::vector<std::uint32_t>>& generators,
                                       std::string name = {});

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t n);
  /// Dihedral group of order 2n.
  static FiniteGroup dihedral(std::size_t n);
  static FiniteGroup symmetric(std::size_t n);
  static FiniteGroup alternating(std::size_t n);
  /// "1", "C<n>", "D<n>" (order 2n), "S<n>", "A<n>", "V4".
  static FiniteGroup preset(const std::string& name);

  std::size_t order() const noexcept { return table_.size(); }
  Element identity() const noexcept { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inv(Element a) const { return inverse_[a]; }
  const Table& table() const noexcept { return table_; }
  const std::string& name() const noexcept { return name_; }
  /// Permutation images when built from permutations, else empty.
  const std::vector<std::vector<std::uint32_t>>& permutations() const noexcept { return perms_; }

  /// Sorted element list of the subgroup generated by gens.
  std::vector<Element> subgroup(const std::vector<Element>& gens) const;
  /// Canonical representative of the left coset a*H: the identity for H
  /// itself, otherwise the least element.
  Element left_coset_rep(Element a, const std::vector<bool>& in_h) const;

 private:
  Table table_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::string name_;
  std::vector<std::vector<std::uint32_t>> perms_;
};

/// Extends generator images to a full map and checks it is a homomorphism.
/// Returns false when the assignment does not extend.
bool extend_homomorphism(const FiniteGroup& from, const FiniteGroup& to,
                         const std::vector<std::pair<FiniteGroup::Element, FiniteGroup::Element>>& images,
                         std::vector<FiniteGroup::Element>& out);

}  // namespace tdlc
