#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "tecol/finite_group.hpp"
#include "tecol/multigraph.hpp"

namespace tecol {

enum class QuotientKind { Z, Dinf };

/// Element t^n s^eps of Z (eps = 0) or of the infinite dihedral group, where
/// s is the reflection generator and s t s = t^-1.
struct QuotientElement {
  std::int64_t n = 0;
  int eps = 0;

  bool is_identity() const { return n == 0 && eps == 0; }
  bool is_reflection() const { return eps != 0; }

  friend QuotientElement operator*(const QuotientElement& a, const QuotientElement& b) {
    return {a.n + (a.eps ? -b.n : b.n), a.eps ^ b.eps};
  }
  QuotientElement inverse() const { return eps ? *this : QuotientElement{-n, 0}; }

  friend auto operator<=>(const QuotientElement&, const QuotientElement&) = default;
};

/// Element (delta, q) of Delta x| Q.
struct GammaElement {
  GroupElement delta = 0;
  QuotientElement q;

  bool is_identity() const { return delta == 0 && q.is_identity(); }
  friend auto operator<=>(const GammaElement&, const GammaElement&) = default;
};

/// Gamma = Delta x| Q with Q in {Z, D_inf}. `alpha` is the action of the
/// translation generator on Delta and `rho` the action of the reflection.
/// A group element q = t^n s^eps acts by alpha^n o rho^eps.
class MarkedGroupSpec {
 public:
  /// Throws InvalidSpec, IdentityGenerator, SymmetryViolation or
  /// DuplicateGenerator. `allow_multiset` permits repeated generators.
  MarkedGroupSpec(FiniteGroup delta, QuotientKind kind, Automorphism alpha, std::optional<Automorphism> rho,
                  std::vector<GammaElement> generators, bool allow_multiset = false);

  const FiniteGroup& delta() const noexcept { return delta_; }
  QuotientKind kind() const noexcept { return kind_; }
  const Automorphism& alpha() const noexcept { return alpha_; }
  const std::optional<Automorphism>& rho() const noexcept { return rho_; }
  const std::vector<GammaElement>& generators() const noexcept { return generators_; }
  std::size_t d() const noexcept { return generators_.size(); }
  bool allows_multiset() const noexcept { return allow_multiset_; }

  /// Index in generators() of an inverse of generator i (the same index for
  /// involutions; distinct copies are paired up for multisets).
  std::size_t inverse_index(std::size_t i) const { return inverse_index_[i]; }
  std::size_t alpha_order() const noexcept { return alpha_order_; }

  /// Image of delta under the automorphism attached to q.
  GroupElement act(const QuotientElement& q, GroupElement delta) const;

 private:
  FiniteGroup delta_;
  QuotientKind kind_;
  Automorphism alpha_;
  std::optional<Automorphism> rho_;
  std::vector<GammaElement> generators_;
  bool allow_multiset_ = false;
  std::size_t alpha_order_ = 1;
  std::vector<Automorphism> alpha_powers_;
  std::vector<std::size_t> inverse_index_;
};

GammaElement gamma_mul(const MarkedGroupSpec& spec, const GammaElement& a, const GammaElement& b);
GammaElement gamma_inv(const MarkedGroupSpec& spec, const GammaElement& a);

struct GeneratorPartition {
  std::vector<std::size_t> interior;  // S_0: trivial quotient image
  /// Translation-type generators keyed by n != 0 (eps = 0). For Q = Z these
  /// are all of the S_n with n != 0.
  std::map<std::int64_t, std::vector<std::size_t>> translations;
  /// Generators with reflection image (eps = 1), in generator order.
  std::vector<std::size_t> reflections;
  std::map<QuotientElement, std::vector<std::size_t>> by_image;

  std::size_t d = 0;
  std::size_t d0 = 0;
  /// Number of generators with positive translation image.
  std::size_t k = 0;

  std::size_t count(std::int64_t n) const;
  std::size_t quotient_degree() const { return d - d0; }
};

/// Throws IdentityGenerator or SymmetryViolation when the generator list is
/// not inverse-closed.
GeneratorPartition partition_generators(const MarkedGroupSpec& spec);

/// Finite Cayley model of Gamma_N = Delta x| Q_N with Q_N = Z/N or the
/// dihedral group of order 2N.
///
/// Vertex (delta, q) has index orbit(q) * |Delta| + delta where orbit(q) is
/// n mod N for Z and eps * N + (n mod N) for D_inf. Generator s moves x to
/// s * x. Edges are created once from their owner, the lexicographically
/// smaller of (x, i) and (s_i x, inverse_index(i)), in ascending owner order;
/// the edge label is the smaller generator index of the pair.
class FiniteModel {
 public:
  const MarkedGroupSpec& spec() const noexcept { return *spec_; }
  const GeneratorPartition& partition() const noexcept { return partition_; }
  std::size_t N() const noexcept { return n_; }
  std::size_t orbit_count() const noexcept { return orbit_count_; }
  std::size_t fiber_size() const noexcept { return spec_->delta().order(); }
  const Multigraph& graph() const noexcept { return graph_; }

  VertexId vertex(GroupElement delta, std::size_t orbit) const {
    return static_cast<VertexId>(orbit * fiber_size() + delta);
  }
  std::size_t orbit_of(VertexId v) const { return v / fiber_size(); }
  GroupElement delta_of(VertexId v) const { return static_cast<GroupElement>(v % fiber_size()); }
  QuotientElement orbit_element(std::size_t orbit) const;
  std::size_t orbit_index(const QuotientElement& q) const;

  /// Vertex s_i * x.
  VertexId act(std::size_t generator, VertexId x) const;
  /// The edge {x, s_i x}.
  EdgeId edge_at(VertexId x, std::size_t generator) const { return slots_[x * spec_->d() + generator]; }
  bool is_interior(EdgeId e) const;

 private:
  friend FiniteModel finite_model(const MarkedGroupSpec& spec, std::size_t N);
  FiniteModel() = default;

  std::shared_ptr<const MarkedGroupSpec> spec_;
  GeneratorPartition partition_;
  std::size_t n_ = 0;
  std::size_t orbit_count_ = 0;
  Multigraph graph_;
  std::vector<EdgeId> slots_;
  std::vector<std::uint8_t> interior_generator_;
};

/// Smallest N accepted by finite_model for this spec.
std::size_t minimal_model_size(const MarkedGroupSpec& spec);

/// The model keeps its own copy of the spec. Throws TwistNotClosed or
/// ModelTooSmall (witness: the minimal admissible N).
FiniteModel finite_model(const MarkedGroupSpec& spec, std::size_t N);

/// Quotient multigraph H on the Delta-orbits.
///
/// Edge layout (shared with the coloring engines):
///   Z     : slot i = i-th positive-image generator ordered by (n, index);
///           edge i*N + y joins y and y + n_i.
///   D_inf : first one slot per reflection-image generator in generator
///           order, edge j*N + n joining (n, 0) and r_j (n, 0); then one slot
///           per positive translation ordered by (n, index), edge
///           R*N + 2N*i + orbit(y) joining y and t^{n_i} y.
/// `generator[e]` is the generator whose action from the first endpoint
/// lifts e to |Delta| edges of the model.
struct QuotientMultigraph {
  Multigraph graph;
  std::vector<std::uint32_t> generator;
  std::size_t degree = 0;
};

QuotientMultigraph build_quotient_multigraph(const FiniteModel& model);

/// Images of the non-interior generators, in generator order.
std::vector<QuotientElement> quotient_generators(const MarkedGroupSpec& spec);

}  // namespace tecol
