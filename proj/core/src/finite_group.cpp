#include "tecol/finite_group.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include "tecol/error.hpp"

namespace tecol {

namespace {

using Table = std::vector<std::vector<GroupElement>>;

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t parse_parameter(const std::string& text, const std::string& key) {
  try {
    std::size_t used = 0;
    const long long value = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return value;
  } catch (const std::exception&) {
    throw Error(Errc::UnsupportedKind, "bad group parameter in '" + key + "'");
  }
}

}  // namespace

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order_; ++a)
    for (std::size_t b = a + 1; b < order_; ++b)
      if (table_[a * order_ + b] != table_[b * order_ + a]) return false;
  return true;
}

FiniteGroup make_group(const Table& table) {
  const std::size_t m = table.size();
  if (m == 0) throw Error(Errc::MalformedTable, "empty table");
  for (std::size_t a = 0; a < m; ++a) {
    if (table[a].size() != m)
      throw Error(Errc::MalformedTable, "row " + std::to_string(a) + " has wrong length",
                  {static_cast<std::int64_t>(a)});
    for (std::size_t b = 0; b < m; ++b)
      if (table[a][b] >= m)
        throw Error(Errc::MalformedTable, "entry out of range",
                    {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)});
  }

  for (std::size_t a = 0; a < m; ++a) {
    if (table[0][a] != a || table[a][0] != a)
      throw Error(Errc::NoIdentity, "element 0 is not a two-sided identity",
                  {static_cast<std::int64_t>(a)});
  }

  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      for (std::size_t c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) {
          std::ostringstream os;
          os << "(" << a << "*" << b << ")*" << c << " != " << a << "*(" << b << "*" << c << ")";
          throw Error(Errc::NotAssociative, os.str(),
                      {static_cast<std::int64_t>(a), static_cast<std::int64_t>(b),
                       static_cast<std::int64_t>(c)});
        }

  FiniteGroup g;
  g.order_ = m;
  g.table_.assign(m * m, 0);
  g.inverse_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a)
    std::copy(table[a].begin(), table[a].end(), g.table_.begin() + static_cast<std::ptrdiff_t>(a * m));

  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m && !found; ++b) {
      if (table[a][b] == 0 && table[b][a] == 0) {
        g.inverse_[a] = static_cast<GroupElement>(b);
        found = true;
      }
    }
    if (!found)
      throw Error(Errc::NoInverse, "element " + std::to_string(a) + " has no inverse",
                  {static_cast<std::int64_t>(a)});
  }
  g.name_ = "table";
  return g;
}

FiniteGroup rename(FiniteGroup g, std::string name) {
  g.name_ = std::move(name);
  return g;
}

FiniteGroup cyclic_group(std::int64_t m) {
  if (m < 1) throw Error(Errc::UnsupportedKind, "cyclic group needs m >= 1");
  Table t(static_cast<std::size_t>(m), std::vector<GroupElement>(static_cast<std::size_t>(m)));
  for (std::int64_t a = 0; a < m; ++a)
    for (std::int64_t b = 0; b < m; ++b) t[a][b] = static_cast<GroupElement>((a + b) % m);
  return rename(make_group(t), m == 1 ? "trivial" : "cyclic:" + std::to_string(m));
}

FiniteGroup dihedral_group(std::int64_t m) {
  if (m < 1) throw Error(Errc::UnsupportedKind, "dihedral group needs m >= 1");
  const std::size_t n = static_cast<std::size_t>(2 * m);
  Table t(n, std::vector<GroupElement>(n));
  // element (f, i) = s^f r^i ; (s^f1 r^i1)(s^f2 r^i2) = s^(f1+f2) r^((-1)^f2 i1 + i2)
  for (std::size_t a = 0; a < n; ++a) {
    const std::int64_t f1 = static_cast<std::int64_t>(a) / m, i1 = static_cast<std::int64_t>(a) % m;
    for (std::size_t b = 0; b < n; ++b) {
      const std::int64_t f2 = static_cast<std::int64_t>(b) / m, i2 = static_cast<std::int64_t>(b) % m;
      const std::int64_t f = (f1 + f2) % 2;
      const std::int64_t i = mod((f2 ? -i1 : i1) + i2, m);
      t[a][b] = static_cast<GroupElement>(f * m + i);
    }
  }
  return rename(make_group(t), "dihedral:" + std::to_string(m));
}

FiniteGroup symmetric3_group() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  auto index_of = [&](const std::array<int, 3>& q) {
    return static_cast<GroupElement>(std::find(perms.begin(), perms.end(), q) - perms.begin());
  };
  Table t(6, std::vector<GroupElement>(6));
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[a][perms[b][x]];
      t[a][b] = index_of(c);
    }
  return rename(make_group(t), "S3");
}

FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  Table t(n, std::vector<GroupElement>(n));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto xa = static_cast<GroupElement>(x / nb), xb = static_cast<GroupElement>(x % nb);
      const auto ya = static_cast<GroupElement>(y / nb), yb = static_cast<GroupElement>(y % nb);
      t[x][y] = static_cast<GroupElement>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  return rename(make_group(t), "product:" + a.name() + "*" + b.name());
}

FiniteGroup named_group(const NamedGroupRequest& request) {
  switch (request.kind) {
    case GroupKind::Cyclic: return cyclic_group(request.parameter);
    case GroupKind::Dihedral: return dihedral_group(request.parameter);
    case GroupKind::Symmetric3: return symmetric3_group();
    case GroupKind::DirectProduct:
      if (!request.left || !request.right)
        throw Error(Errc::UnsupportedKind, "direct product needs two factors");
      return direct_product(*request.left, *request.right);
  }
  throw Error(Errc::UnsupportedKind, "unknown group kind");
}

FiniteGroup named_group(const std::string& key) {
  if (key == "trivial") return cyclic_group(1);
  if (key == "S3" || key == "symmetric-3" || key == "symmetric:3") return symmetric3_group();
  if (key.rfind("product:", 0) == 0) {
    const std::string rest = key.substr(8);
    const auto star = rest.find('*');
    if (star == std::string::npos) throw Error(Errc::UnsupportedKind, "product needs 'A*B' in '" + key + "'");
    return direct_product(named_group(rest.substr(0, star)), named_group(rest.substr(star + 1)));
  }
  if (key.rfind("cyclic:", 0) == 0) return cyclic_group(parse_parameter(key.substr(7), key));
  if (key.rfind("Z/", 0) == 0) return cyclic_group(parse_parameter(key.substr(2), key));
  if (key.rfind("dihedral:", 0) == 0) return dihedral_group(parse_parameter(key.substr(9), key));
  throw Error(Errc::UnsupportedKind, "unknown group key '" + key + "'");
}

Automorphism Automorphism::identity(std::size_t order) {
  std::vector<GroupElement> p(order);
  for (std::size_t i = 0; i < order; ++i) p[i] = static_cast<GroupElement>(i);
  return Automorphism(std::move(p));
}

bool Automorphism::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i)
    if (perm_[i] != i) return false;
  return true;
}

std::size_t Automorphism::order() const {
  Automorphism power = *this;
  std::size_t r = 1;
  while (!power.is_identity()) {
    power = compose(*this, power);
    ++r;
  }
  return r;
}

Automorphism compose(const Automorphism& a, const Automorphism& b) {
  std::vector<GroupElement> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return Automorphism(std::move(p));
}

Automorphism Automorphism::inverse() const {
  std::vector<GroupElement> p(perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<GroupElement>(i);
  return Automorphism(std::move(p));
}

Automorphism Automorphism::pow(std::int64_t exponent) const {
  const auto ord = static_cast<std::int64_t>(order());
  std::int64_t e = mod(exponent, ord);
  Automorphism result = identity(perm_.size());
  for (std::int64_t i = 0; i < e; ++i) result = compose(*this, result);
  return result;
}

Automorphism validate_automorphism(const FiniteGroup& g, const std::vector<GroupElement>& perm) {
  const std::size_t m = g.order();
  if (perm.size() != m) throw Error(Errc::NotBijection, "permutation has wrong length");
  std::vector<bool> hit(m, false);
  for (std::size_t i = 0; i < m; ++i) {
    if (perm[i] >= m || hit[perm[i]])
      throw Error(Errc::NotBijection, "not a permutation of 0..m-1", {static_cast<std::int64_t>(i)});
    hit[perm[i]] = true;
  }
  for (GroupElement a = 0; a < m; ++a)
    for (GroupElement b = 0; b < m; ++b)
      if (perm[g.mul(a, b)] != g.mul(perm[a], perm[b]))
        throw Error(Errc::NotHomomorphism, "phi(a*b) != phi(a)*phi(b)",
                    {a, b, static_cast<std::int64_t>(g.mul(a, b))});
  return Automorphism(perm);
}

std::vector<GroupElement> inversion_map(const FiniteGroup& g) { return g.inverse_table(); }

}  // namespace tecol
