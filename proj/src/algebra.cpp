#include "groupoidkit/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace gk {

namespace {

bool same_host(const HostPtr& a, const HostPtr& b) { return a == b || (a && b && *a == *b); }

std::string label_pair(const FiniteGroupoid& g, Arrow a, Arrow b) {
  return "(" + g.label(a) + ", " + g.label(b) + ")";
}

}  // namespace

AlgebraElement::AlgebraElement(HostPtr host) : host_(std::move(host)) {
  if (!host_) throw std::invalid_argument("AlgebraElement: null host");
  coeffs_.assign(host_->size(), GaussianRational{});
}

AlgebraElement::AlgebraElement(HostPtr host, Vector coeffs)
    : host_(std::move(host)), coeffs_(std::move(coeffs)) {
  if (!host_) throw std::invalid_argument("AlgebraElement: null host");
  if (coeffs_.size() != host_->size())
    throw std::invalid_argument("AlgebraElement: coefficient count differs from arrow count");
}

AlgebraElement AlgebraElement::delta(HostPtr host, Arrow a) {
  AlgebraElement e(std::move(host));
  e.coeffs_.at(a) = 1;
  return e;
}

AlgebraElement AlgebraElement::one(HostPtr host) {
  AlgebraElement e(std::move(host));
  for (Arrow x : e.host_->units()) e.coeffs_[x] = 1;
  return e;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
  if (!same_host(host_, o.host_)) throw GroupoidError("algebra elements over different groupoids");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
  if (!same_host(host_, o.host_)) throw GroupoidError("algebra elements over different groupoids");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator*=(const GaussianRational& c) {
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool AlgebraElement::operator==(const AlgebraElement& o) const {
  return same_host(host_, o.host_) && coeffs_ == o.coeffs_;
}

AlgebraElement convolve(const AlgebraElement& f, const AlgebraElement& g) {
  if (!same_host(f.host(), g.host())) throw GroupoidError("convolve: different host groupoids");
  const FiniteGroupoid& G = *f.host();
  const auto n = static_cast<Arrow>(G.size());
  std::vector<ArrowSet> from(G.size());
  for (Arrow b = 0; b < n; ++b) from[G.src(b)].push_back(b);

  Vector out(G.size());
  for (Arrow c = 0; c < n; ++c) {
    for (Arrow b : from[G.src(c)]) {
      if (g[b].is_zero()) continue;
      const Arrow a = G.comp(c, G.inv(b));
      if (f[a].is_zero()) continue;
      out[c] += f[a] * g[b];
    }
  }
  return {f.host(), std::move(out)};
}

AlgebraElement involute(const AlgebraElement& f) {
  const FiniteGroupoid& G = *f.host();
  Vector out(G.size());
  for (std::size_t c = 0; c < G.size(); ++c) out[c] = f[G.inv(static_cast<Arrow>(c))].conj();
  return {f.host(), std::move(out)};
}

Vector left_delta(const FiniteGroupoid& g, Arrow a, const Vector& f) {
  Vector out(g.size());
  for (std::size_t b = 0; b < g.size(); ++b)
    if (!f[b].is_zero() && g.composable(a, static_cast<Arrow>(b)))
      out[g.comp(a, static_cast<Arrow>(b))] += f[b];
  return out;
}

Vector right_delta(const FiniteGroupoid& g, const Vector& f, Arrow a) {
  Vector out(g.size());
  for (std::size_t b = 0; b < g.size(); ++b)
    if (!f[b].is_zero() && g.composable(static_cast<Arrow>(b), a))
      out[g.comp(static_cast<Arrow>(b), a)] += f[b];
  return out;
}

Vector AlgebraHom::image_of(Arrow a) const {
  Vector v(codomain->size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = matrix[i][a];
  return v;
}

AlgebraElement AlgebraHom::apply(const AlgebraElement& f) const {
  if (!same_host(f.host(), domain)) throw GroupoidError("AlgebraHom: element outside the domain");
  if (codomain->empty()) return AlgebraElement(codomain);
  return {codomain, mat_vec(matrix, f.coeffs())};
}

std::size_t AlgebraHom::rank() const { return gk::rank(matrix); }

Matrix AlgebraHom::kernel() const { return nullspace(matrix, domain->size()); }

std::optional<std::string> hom_violation(const AlgebraHom& h) {
  const FiniteGroupoid& G = *h.domain;
  const auto n = static_cast<Arrow>(G.size());
  std::vector<AlgebraElement> images;
  images.reserve(G.size());
  for (Arrow a = 0; a < n; ++a) images.emplace_back(h.codomain, h.image_of(a));

  for (Arrow a = 0; a < n; ++a) {
    if (involute(images[a]) != images[G.inv(a)])
      return "not *-preserving at '" + G.label(a) + "'";
    for (Arrow b = 0; b < n; ++b) {
      const AlgebraElement lhs =
          G.composable(a, b) ? images[G.comp(a, b)] : AlgebraElement(h.codomain);
      if (lhs != convolve(images[a], images[b]))
        return "not multiplicative at " + label_pair(G, a, b);
    }
  }
  return std::nullopt;
}

AlgebraHom compose(const AlgebraHom& g, const AlgebraHom& f) {
  if (!same_host(f.codomain, g.domain)) throw GroupoidError("compose: hom types do not match");
  // Through the zero algebra the product has no inner dimension.
  Matrix m = f.matrix.empty() ? Matrix(g.codomain->size(), Vector(f.domain->size()))
                              : mat_mul(g.matrix, f.matrix);
  return {f.domain, g.codomain, std::move(m)};
}

AlgebraHom restriction_hom(const HostPtr& g, const ArrowSet& f) {
  HostPtr target = share(restrict(*g, f));
  const ArrowSet arrows = restriction_arrows(*g, f);
  Matrix m(target->size(), Vector(g->size()));
  for (std::size_t i = 0; i < arrows.size(); ++i) m[i][arrows[i]] = 1;
  return {g, std::move(target), std::move(m)};
}

AlgebraHom quotient_hom(const HostPtr& g, const NormalSubgroupoid& h) {
  QuotientResult q = quotient(*g, h);
  HostPtr target = share(std::move(q.quotient));
  Matrix m(target->size(), Vector(g->size()));
  for (std::size_t a = 0; a < g->size(); ++a) m[q.class_map[a]][a] = 1;
  return {g, std::move(target), std::move(m)};
}

Matrix diagonal_basis(const FiniteGroupoid& g) {
  Matrix out;
  for (Arrow x : g.units()) {
    Vector v(g.size());
    v[x] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

bool IdealBasis::is_two_sided_ideal() const {
  const FiniteGroupoid& G = *host_;
  for (const auto& row : basis_.rows())
    for (std::size_t a = 0; a < G.size(); ++a) {
      if (!basis_.contains(left_delta(G, static_cast<Arrow>(a), row))) return false;
      if (!basis_.contains(right_delta(G, row, static_cast<Arrow>(a)))) return false;
    }
  return true;
}

IdealBasis commutator_ideal(const HostPtr& g) {
  const FiniteGroupoid& G = *g;
  const auto n = static_cast<Arrow>(G.size());
  EchelonBasis basis(G.size());

  // delta_a * delta_b - delta_b * delta_a has at most two nonzero entries.
  std::set<std::pair<Arrow, Arrow>> seeds;
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = a + 1; b < n; ++b) {
      const Arrow ab = G.composable(a, b) ? G.comp(a, b) : kNoArrow;
      const Arrow ba = G.composable(b, a) ? G.comp(b, a) : kNoArrow;
      if (ab != ba) seeds.emplace(ab, ba);
    }

  Matrix frontier;
  for (const auto& [plus, minus] : seeds) {
    Vector v(G.size());
    if (plus != kNoArrow) v[plus] += 1;
    if (minus != kNoArrow) v[minus] -= 1;
    if (basis.insert(v)) frontier.push_back(std::move(v));
  }

  // Each round multiplies the vectors added in the previous round by every
  // basis delta on both sides; at most dim rounds.
  for (std::size_t round = 0; round < G.size() && !frontier.empty(); ++round) {
    Matrix next;
    for (const auto& v : frontier)
      for (Arrow a = 0; a < n; ++a) {
        Vector l = left_delta(G, a, v);
        if (basis.insert(l)) next.push_back(std::move(l));
        Vector r = right_delta(G, v, a);
        if (basis.insert(r)) next.push_back(std::move(r));
      }
    frontier = std::move(next);
  }
  return {g, std::move(basis)};
}

std::size_t abelianization_dim(const HostPtr& g) { return g->size() - commutator_ideal(g).dim(); }

AlgebraHom abelianization_hom(const HostPtr& g) {
  AlgebraHom restriction = restriction_hom(g, fixed_points(*g));
  AlgebraHom q = quotient_hom(restriction.codomain, commutator_subgroupoid(*restriction.codomain));
  return compose(q, restriction);
}

namespace {

AbelianizedFiber fiber_of(const FiniteGroupoid& g, const Abelianization& ab, Arrow x) {
  const auto& incl = ab.fixed.inclusion;
  auto it = std::find(incl.begin(), incl.end(), x);
  if (it == incl.end() || !g.is_unit(x))
    throw GroupoidError("'" + g.label(x) + "' is not a fixed point", {x});
  const auto& cls = ab.result.class_map;
  const Arrow qx = cls[static_cast<std::size_t>(it - incl.begin())];
  const FiniteGroupoid& gab = ab.groupoid();
  const ArrowSet fiber = gab.isotropy_at(qx);

  std::vector<int> class_of(g.size(), -1);
  for (std::size_t i = 0; i < incl.size(); ++i) {
    if (g.src(incl[i]) != x) continue;
    auto pos = std::lower_bound(fiber.begin(), fiber.end(), cls[i]);
    class_of[incl[i]] = static_cast<int>(pos - fiber.begin());
  }
  return {x, FiniteAbelianGroup(fiber_group(gab, qx)), std::move(class_of)};
}

}  // namespace

AbelianizedFiber abelianized_fiber(const FiniteGroupoid& g, Arrow x) {
  return fiber_of(g, abelianize_groupoid(g), x);
}

std::complex<double> CharacterFunctional::evaluate(const AlgebraElement& f) const {
  std::complex<double> sum{0.0, 0.0};
  for (std::size_t c = 0; c < values.size(); ++c)
    if (values[c] && !f[static_cast<Arrow>(c)].is_zero())
      sum += f[static_cast<Arrow>(c)].to_complex() * values[c]->to_complex();
  return sum;
}

CharacterFunctional character_functional(const HostPtr& g, const AbelianizedFiber& fiber,
                                         const Character& chi) {
  if (!is_character(fiber.group, chi))
    throw GroupoidError("character_functional: not a character of the abelianized fiber at '" +
                        g->label(fiber.x) + "'");
  CharacterFunctional phi{g, fiber.x, chi, std::vector<CyclotomicEntry>(g->size())};
  for (std::size_t c = 0; c < g->size(); ++c)
    if (fiber.class_of[c] >= 0) phi.values[c] = RootOfUnity(chi.exps[fiber.class_of[c]], chi.modulus);
  return phi;
}

CharacterFunctional character_functional(const HostPtr& g, Arrow x, const Character& chi) {
  return character_functional(g, abelianized_fiber(*g, x), chi);
}

std::optional<std::string> functional_violation(const CharacterFunctional& phi) {
  const FiniteGroupoid& G = *phi.host;
  const auto n = static_cast<Arrow>(G.size());
  const RootOfUnity one;
  for (Arrow x : G.units()) {
    const CyclotomicEntry expected = x == phi.x ? CyclotomicEntry(one) : std::nullopt;
    if (phi.values[x] != expected) return "diagonal value at '" + G.label(x) + "' is wrong";
  }
  for (Arrow a = 0; a < n; ++a) {
    const CyclotomicEntry star = phi.values[a] ? CyclotomicEntry(phi.values[a]->conj()) : std::nullopt;
    if (phi.values[G.inv(a)] != star) return "not *-preserving at '" + G.label(a) + "'";
    for (Arrow b = 0; b < n; ++b) {
      const CyclotomicEntry lhs = G.composable(a, b) ? phi.values[G.comp(a, b)] : std::nullopt;
      if (lhs != phi.values[a] * phi.values[b]) return "not multiplicative at " + label_pair(G, a, b);
    }
  }
  return std::nullopt;
}

std::vector<CharacterFunctional> enumerate_characters(const HostPtr& g) {
  const Abelianization ab = abelianize_groupoid(*g);
  std::vector<CharacterFunctional> out;
  for (Arrow x : fixed_points(*g)) {
    const AbelianizedFiber fiber = fiber_of(*g, ab, x);
    for (const auto& chi : characters(fiber.group)) out.push_back(character_functional(g, fiber, chi));
  }
  return out;
}

std::vector<std::vector<std::complex<double>>> GelfandMatrix::to_complex() const {
  std::vector<std::vector<std::complex<double>>> out;
  for (const auto& row : entries) {
    auto& r = out.emplace_back();
    for (const auto& e : row) r.push_back(gk::to_complex(e));
  }
  return out;
}

GelfandMatrix gelfand_transform(const FiniteGroupoid& g) {
  const DualBundle dual = dual_bundle(g);
  GelfandMatrix m;
  for (const auto& fiber : dual.fibers) {
    for (std::size_t k = 0; k < fiber.characters.size(); ++k) {
      const Character& chi = fiber.characters[k];
      std::vector<CyclotomicEntry> row(g.size());
      for (std::size_t i = 0; i < fiber.arrows.size(); ++i)
        row[fiber.arrows[i]] = RootOfUnity(chi.exps[i], chi.modulus);
      m.rows.emplace_back(fiber.unit, k);
      m.entries.push_back(std::move(row));
    }
  }
  return m;
}

std::optional<std::string> gelfand_multiplicativity_violation(const FiniteGroupoid& g,
                                                              const GelfandMatrix& m) {
  const auto n = static_cast<Arrow>(g.size());
  for (Arrow a = 0; a < n; ++a)
    for (Arrow b = 0; b < n; ++b)
      for (const auto& row : m.entries) {
        const CyclotomicEntry lhs = g.composable(a, b) ? row[g.comp(a, b)] : std::nullopt;
        if (lhs != row[a] * row[b]) return "transform not multiplicative at " + label_pair(g, a, b);
      }
  return std::nullopt;
}

std::complex<double> determinant(std::vector<std::vector<std::complex<double>>> m) {
  const std::size_t n = m.size();
  std::complex<double> det{1.0, 0.0};
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r)
      if (std::abs(m[r][c]) > std::abs(m[p][c])) p = r;
    if (std::abs(m[p][c]) == 0.0) return {0.0, 0.0};
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      const std::complex<double> f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

}  // namespace gk
