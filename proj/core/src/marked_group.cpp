#include "tecol/marked_group.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <numeric>

#include "tecol/error.hpp"

namespace tecol {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<std::int64_t> witness_of(const GammaElement& g) {
  return {static_cast<std::int64_t>(g.delta), g.q.n, g.q.eps};
}

}  // namespace

MarkedGroupSpec::MarkedGroupSpec(FiniteGroup delta, QuotientKind kind, Automorphism alpha,
                                 std::optional<Automorphism> rho, std::vector<GammaElement> generators,
                                 bool allow_multiset)
    : delta_(std::move(delta)),
      kind_(kind),
      alpha_(std::move(alpha)),
      rho_(std::move(rho)),
      generators_(std::move(generators)),
      allow_multiset_(allow_multiset) {
  const std::size_t m = delta_.order();
  if (alpha_.size() != m) throw Error(Errc::InvalidSpec, "alpha acts on a group of a different order");
  validate_automorphism(delta_, alpha_.permutation());

  if (kind_ == QuotientKind::Z && rho_)
    throw Error(Errc::InvalidSpec, "rho is only meaningful for the infinite dihedral quotient");
  if (kind_ == QuotientKind::Dinf) {
    if (!rho_) throw Error(Errc::InvalidSpec, "the infinite dihedral quotient needs rho");
    if (rho_->size() != m) throw Error(Errc::InvalidSpec, "rho acts on a group of a different order");
    validate_automorphism(delta_, rho_->permutation());
    if (!compose(*rho_, *rho_).is_identity()) throw Error(Errc::InvalidSpec, "rho^2 is not the identity");
    if (!(compose(*rho_, compose(alpha_, *rho_)) == alpha_.inverse()))
      throw Error(Errc::InvalidSpec, "rho alpha rho != alpha^-1; the action does not factor through D_inf");
  }

  alpha_order_ = alpha_.order();
  alpha_powers_.reserve(alpha_order_);
  for (std::size_t p = 0; p < alpha_order_; ++p) alpha_powers_.push_back(alpha_.pow(static_cast<std::int64_t>(p)));

  for (const auto& g : generators_) {
    if (g.delta >= m) throw Error(Errc::InvalidSpec, "generator delta index out of range", witness_of(g));
    if (g.q.eps != 0 && g.q.eps != 1) throw Error(Errc::InvalidSpec, "epsilon must be 0 or 1", witness_of(g));
    if (kind_ == QuotientKind::Z && g.q.eps != 0)
      throw Error(Errc::InvalidSpec, "reflection generator in a Z-quotient spec", witness_of(g));
    if (g.is_identity()) throw Error(Errc::IdentityGenerator, "the identity is not a generator", witness_of(g));
  }

  // Pair each generator with an inverse copy: first unused occurrence wins.
  const std::size_t d = generators_.size();
  inverse_index_.assign(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (inverse_index_[i] != d) continue;
    const GammaElement inv = gamma_inv(*this, generators_[i]);
    if (inv == generators_[i]) {
      inverse_index_[i] = i;
      continue;
    }
    bool matched = false;
    for (std::size_t j = i + 1; j < d && !matched; ++j) {
      if (inverse_index_[j] == d && generators_[j] == inv) {
        inverse_index_[i] = j;
        inverse_index_[j] = i;
        matched = true;
      }
    }
    if (!matched)
      throw Error(Errc::SymmetryViolation, "generator " + std::to_string(i) + " has no inverse in the set",
                  witness_of(generators_[i]));
  }

  if (!allow_multiset_) {
    std::vector<GammaElement> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    const auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) throw Error(Errc::DuplicateGenerator, "repeated generator", witness_of(*dup));
  }
}

GroupElement MarkedGroupSpec::act(const QuotientElement& q, GroupElement delta) const {
  if (q.eps) delta = (*rho_)(delta);
  return alpha_powers_[static_cast<std::size_t>(mod(q.n, static_cast<std::int64_t>(alpha_order_)))](delta);
}

GammaElement gamma_mul(const MarkedGroupSpec& spec, const GammaElement& a, const GammaElement& b) {
  return {spec.delta().mul(a.delta, spec.act(a.q, b.delta)), a.q * b.q};
}

GammaElement gamma_inv(const MarkedGroupSpec& spec, const GammaElement& a) {
  const QuotientElement qi = a.q.inverse();
  return {spec.act(qi, spec.delta().inv(a.delta)), qi};
}

std::size_t GeneratorPartition::count(std::int64_t n) const {
  if (n == 0) return interior.size();
  const auto it = translations.find(n);
  return it == translations.end() ? 0 : it->second.size();
}

GeneratorPartition partition_generators(const MarkedGroupSpec& spec) {
  GeneratorPartition p;
  const auto& gens = spec.generators();
  p.d = gens.size();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto& g = gens[i];
    if (g.is_identity()) throw Error(Errc::IdentityGenerator, "the identity is not a generator", witness_of(g));
    p.by_image[g.q].push_back(i);
    if (g.q.is_identity()) {
      p.interior.push_back(i);
    } else if (g.q.is_reflection()) {
      p.reflections.push_back(i);
    } else {
      p.translations[g.q.n].push_back(i);
      if (g.q.n > 0) ++p.k;
    }
  }
  p.d0 = p.interior.size();

  // S_{-n} must be S_n^{-1} elementwise.
  for (const auto& [n, members] : p.translations) {
    const auto mirror = p.translations.find(-n);
    if (mirror == p.translations.end() || mirror->second.size() != members.size())
      throw Error(Errc::SymmetryViolation, "S_" + std::to_string(-n) + " is not S_" + std::to_string(n) + "^-1", {n});
    for (std::size_t i : members) {
      const GammaElement inv = gamma_inv(spec, gens[i]);
      const bool found = std::any_of(mirror->second.begin(), mirror->second.end(),
                                     [&](std::size_t j) { return gens[j] == inv; });
      if (!found)
        throw Error(Errc::SymmetryViolation, "inverse of generator " + std::to_string(i) + " missing",
                    witness_of(gens[i]));
    }
  }
  return p;
}

std::size_t minimal_model_size(const MarkedGroupSpec& spec) {
  std::int64_t reach = 0;
  for (const auto& g : spec.generators()) reach = std::max(reach, std::abs(g.q.n));
  const auto step = static_cast<std::size_t>(spec.alpha_order());
  const auto floor = static_cast<std::size_t>(2 * reach + 1);
  return (floor + step - 1) / step * step;
}

QuotientElement FiniteModel::orbit_element(std::size_t orbit) const {
  if (spec_->kind() == QuotientKind::Z) return {static_cast<std::int64_t>(orbit), 0};
  return {static_cast<std::int64_t>(orbit % n_), static_cast<int>(orbit / n_)};
}

std::size_t FiniteModel::orbit_index(const QuotientElement& q) const {
  const auto n = static_cast<std::size_t>(mod(q.n, static_cast<std::int64_t>(n_)));
  return spec_->kind() == QuotientKind::Z ? n : static_cast<std::size_t>(q.eps) * n_ + n;
}

VertexId FiniteModel::act(std::size_t generator, VertexId x) const {
  const GammaElement& s = spec_->generators()[generator];
  const GroupElement delta = spec_->delta().mul(s.delta, spec_->act(s.q, delta_of(x)));
  return vertex(delta, orbit_index(s.q * orbit_element(orbit_of(x))));
}

bool FiniteModel::is_interior(EdgeId e) const { return interior_generator_[graph_.label(e)] != 0; }

FiniteModel finite_model(const MarkedGroupSpec& spec, std::size_t N) {
  if (N == 0 || N % spec.alpha_order() != 0)
    throw Error(Errc::TwistNotClosed,
                "N = " + std::to_string(N) + " is not a multiple of order(alpha) = " + std::to_string(spec.alpha_order()),
                {static_cast<std::int64_t>(N), static_cast<std::int64_t>(spec.alpha_order())});
  const std::size_t minimal = minimal_model_size(spec);
  if (N < minimal)
    throw Error(Errc::ModelTooSmall, "N = " + std::to_string(N) + " is too small; minimal admissible N is " +
                                         std::to_string(minimal),
                {static_cast<std::int64_t>(minimal)});

  FiniteModel model;
  model.spec_ = std::make_shared<const MarkedGroupSpec>(spec);
  model.partition_ = partition_generators(spec);
  model.n_ = N;
  model.orbit_count_ = spec.kind() == QuotientKind::Z ? N : 2 * N;

  const std::size_t d = spec.d();
  const std::size_t vertices = model.orbit_count_ * spec.delta().order();
  if (vertices * d / 2 >= static_cast<std::size_t>(std::numeric_limits<EdgeId>::max()))
    throw Error(Errc::TooLarge, "model too large for 32-bit edge ids");

  model.interior_generator_.assign(d, 0);
  for (std::size_t i : model.partition_.interior) model.interior_generator_[i] = 1;

  constexpr EdgeId kUnset = static_cast<EdgeId>(-1);
  model.slots_.assign(vertices * d, kUnset);
  std::vector<Endpoints> edges;
  std::vector<std::uint32_t> labels;
  edges.reserve(vertices * d / 2);
  labels.reserve(vertices * d / 2);
  for (VertexId x = 0; x < vertices; ++x) {
    for (std::size_t i = 0; i < d; ++i) {
      if (model.slots_[x * d + i] != kUnset) continue;
      const VertexId y = model.act(i, x);
      const std::size_t j = spec.inverse_index(i);
      // (x, i) is the owner: (y, j) is either larger or was not yet visited
      const auto id = static_cast<EdgeId>(edges.size());
      edges.push_back({x, y});
      labels.push_back(static_cast<std::uint32_t>(std::min(i, j)));
      model.slots_[x * d + i] = id;
      model.slots_[static_cast<std::size_t>(y) * d + j] = id;
    }
  }
  model.graph_ = Multigraph(vertices, std::move(edges), std::move(labels));
  return model;
}

std::vector<QuotientElement> quotient_generators(const MarkedGroupSpec& spec) {
  std::vector<QuotientElement> out;
  for (const auto& g : spec.generators())
    if (!g.q.is_identity()) out.push_back(g.q);
  return out;
}

namespace {

/// Positive translation generators ordered by (n, index).
std::vector<std::size_t> positive_slots(const FiniteModel& model) {
  std::vector<std::size_t> slots;
  for (const auto& [n, members] : model.partition().translations)
    if (n > 0) slots.insert(slots.end(), members.begin(), members.end());
  // map iteration already orders by n; members are in index order
  return slots;
}

}  // namespace

QuotientMultigraph build_quotient_multigraph(const FiniteModel& model) {
  const auto& gens = model.spec().generators();
  const std::size_t N = model.N();
  std::vector<Endpoints> edges;
  std::vector<std::uint32_t> generator;

  auto add = [&](std::size_t source, std::size_t g) {
    const std::size_t target = model.orbit_index(gens[g].q * model.orbit_element(source));
    edges.push_back({static_cast<VertexId>(source), static_cast<VertexId>(target)});
    generator.push_back(static_cast<std::uint32_t>(g));
  };

  if (model.spec().kind() == QuotientKind::Dinf) {
    for (std::size_t g : model.partition().reflections)
      for (std::size_t n = 0; n < N; ++n) add(n, g);
  }
  for (std::size_t g : positive_slots(model))
    for (std::size_t y = 0; y < model.orbit_count(); ++y) add(y, g);

  QuotientMultigraph h;
  h.degree = model.partition().quotient_degree();
  h.graph = Multigraph(model.orbit_count(), std::move(edges));
  h.generator = std::move(generator);
  return h;
}

}  // namespace tecol
