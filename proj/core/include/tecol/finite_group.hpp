#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace tecol {

using GroupElement = std::uint32_t;

/// A finite group stored as a full multiplication table.
///
/// Elements are indexed 0..order()-1 and index 0 is always the identity.
/// Instances are immutable once constructed; build them with make_group()
/// or named_group().
class FiniteGroup {
 public:
  FiniteGroup() = default;

  std::size_t order() const noexcept { return order_; }
  GroupElement mul(GroupElement a, GroupElement b) const { return table_[a * order_ + b]; }
  GroupElement inv(GroupElement a) const { return inverse_[a]; }
  const std::vector<GroupElement>& table() const noexcept { return table_; }
  const std::vector<GroupElement>& inverse_table() const noexcept { return inverse_; }

  bool is_abelian() const;
  /// Short human-readable tag, e.g. "cyclic:3"; "table" for user tables.
  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.order_ == b.order_ && a.table_ == b.table_;
  }

 private:
  friend FiniteGroup make_group(const std::vector<std::vector<GroupElement>>& table);
  friend FiniteGroup rename(FiniteGroup g, std::string name);

  std::size_t order_ = 1;
  std::vector<GroupElement> table_{0};
  std::vector<GroupElement> inverse_{0};
  std::string name_ = "trivial";
};

/// Validates a square multiplication table and computes inverses.
/// Throws MalformedTable, NoIdentity, NotAssociative or NoInverse; the
/// error witness lists the offending indices.
FiniteGroup make_group(const std::vector<std::vector<GroupElement>>& table);

FiniteGroup rename(FiniteGroup g, std::string name);

enum class GroupKind { Cyclic, Dihedral, Symmetric3, DirectProduct };

struct NamedGroupRequest {
  GroupKind kind = GroupKind::Cyclic;
  std::int64_t parameter = 1;  // m for Cyclic and Dihedral
  std::shared_ptr<const FiniteGroup> left;
  std::shared_ptr<const FiniteGroup> right;
};

// Element orderings:
//   cyclic m      : i  <->  i mod m
//   dihedral m    : i < m  <->  r^i ;  m + i  <->  s r^i   (order 2m, s r s = r^-1)
//   symmetric-3   : permutations of {0,1,2} in lexicographic order of their
//                   one-line notation; product is composition (a*b)(x) = a(b(x))
//   product(A, B) : a * |B| + b  <->  (a, b)
FiniteGroup named_group(const NamedGroupRequest& request);

FiniteGroup cyclic_group(std::int64_t m);
FiniteGroup dihedral_group(std::int64_t m);
FiniteGroup symmetric3_group();
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Parses a named-group key: "trivial", "cyclic:m", "dihedral:m", "S3".
/// Products are written "product:<key>*<key>", e.g. "product:cyclic:2*cyclic:2".
FiniteGroup named_group(const std::string& key);

/// A validated automorphism of a fixed FiniteGroup.
class Automorphism {
 public:
  Automorphism() = default;

  static Automorphism identity(std::size_t order);

  GroupElement operator()(GroupElement x) const { return perm_[x]; }
  const std::vector<GroupElement>& permutation() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }

  /// Least r >= 1 with this^r = identity.
  std::size_t order() const;
  bool is_identity() const;

  /// (a * b)(x) = a(b(x))
  friend Automorphism compose(const Automorphism& a, const Automorphism& b);
  Automorphism inverse() const;
  /// Integer power; negative exponents use the inverse.
  Automorphism pow(std::int64_t exponent) const;

  friend bool operator==(const Automorphism& a, const Automorphism& b) { return a.perm_ == b.perm_; }

 private:
  friend Automorphism validate_automorphism(const FiniteGroup& g, const std::vector<GroupElement>& perm);
  explicit Automorphism(std::vector<GroupElement> perm) : perm_(std::move(perm)) {}

  std::vector<GroupElement> perm_{0};
};

/// Throws NotBijection or NotHomomorphism (witness a, b, a*b).
Automorphism validate_automorphism(const FiniteGroup& g, const std::vector<GroupElement>& perm);

/// x -> x^-1; only an automorphism for abelian groups.
std::vector<GroupElement> inversion_map(const FiniteGroup& g);

}  // namespace tecol
