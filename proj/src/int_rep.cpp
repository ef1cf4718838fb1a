#include "csep/int_rep.hpp"

#include "csep/error.hpp"

#include <algorithm>

namespace csep {

void validate(const FiniteGroup& g, const std::vector<IntMat>& mats) {
  if (static_cast<int>(mats.size()) != g.order())
    throw Error(ErrorKind::InvalidInput, "need one matrix per group element");
  const std::size_t h = mats[0].rows();
  for (int x = 0; x < g.order(); ++x) {
    if (mats[x].rows() != h || mats[x].cols() != h) throw Error(ErrorKind::DimensionMismatch, "matrix size");
    Int d = mats[x].det();
    if (d != 1 && d != -1) throw Error(ErrorKind::NonUnimodular, "matrix of element " + std::to_string(x));
  }
  if (!(mats[0] == IntMat::identity(h))) throw Error(ErrorKind::NotAHomomorphism, "identity is not mapped to id");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!(mats[a] * mats[b] == mats[g.mul(a, b)]))
        throw Error(ErrorKind::NotAHomomorphism,
                    "mat(" + std::to_string(a) + ")mat(" + std::to_string(b) + ") != mat(product)");
}

IntRep::IntRep(FiniteGroup g, std::vector<IntMat> mats) {
  validate(g, mats);
  group_ = std::make_shared<const FiniteGroup>(std::move(g));
  dim_ = mats[0].rows();
  mats_ = std::move(mats);
}

IntRep IntRep::trivial(FiniteGroup g, std::size_t dim) {
  std::vector<IntMat> m(g.order(), IntMat::identity(dim));
  return IntRep(std::move(g), std::move(m));
}

std::vector<Int> character(const IntRep& rep) {
  std::vector<Int> c;
  for (const auto& m : rep.mats()) c.push_back(m.trace());
  return c;
}

ModPRep reduce(const IntRep& rep, long p) { return reduce(rep.group(), rep.mats(), p); }

CharacterMap varpi(const IntRep& rep, const std::vector<Int>& values) {
  const auto& g = rep.group();
  if (static_cast<int>(values.size()) != g.order()) throw Error(ErrorKind::InvalidInput, "one value per element");
  for (int a = 0; a < g.order(); ++a)
    for (int x = 0; x < g.order(); ++x)
      if (values[g.conj(a, x)] != values[x]) throw Error(ErrorKind::NotClassConstant, "values not class-constant");
  IntMat m(rep.dim(), rep.dim());
  for (int x = 0; x < g.order(); ++x)
    if (sgn(values[g.inv(x)]) != 0) m = m + values[g.inv(x)] * rep.mat(x);
  return CharacterMap{values, m, 0};
}

Vec IsotypicComponent::embed_scaled(std::span<const Int> y) const {
  const auto& b = lattice.num.basis();
  Vec v = zero_vec(b.cols());
  for (std::size_t k = 0; k < y.size(); ++k)
    if (sgn(y[k]) != 0)
      for (std::size_t j = 0; j < b.cols(); ++j) v[j] += y[k] * b(k, j);
  return v;
}

namespace {

SquareHull build_hull(const IntRep& rep, long p, std::uint64_t seed) {
  const auto& g = rep.group();
  const std::size_t h = rep.dim();
  const Int order = g.order();
  auto cs = split(reduce(rep, p), g, seed);
  auto orbits = galois_orbit_sums(cs, g, p);
  std::sort(orbits.begin(), orbits.end(), [](const OrbitSum& a, const OrbitSum& b) { return a.values < b.values; });
  SquareHull hull;
  hull.prime = p;
  RatMat total(h, h);
  std::size_t rank_sum = 0;
  for (const auto& o : orbits) {
    IsotypicComponent c;
    c.index = hull.components.size();
    c.d = o.dim;
    c.orbit_size = o.members.size();
    c.multiplicity = cs[o.members[0]].multiplicity;
    c.orbit_char = varpi(rep, o.values);
    c.orbit_char.scalar = order / Int(o.dim);
    IntMat big = Int(o.dim) * c.orbit_char.matrix;  // |G| pi_i
    c.projector = Rat(1, 1) / Rat(order) * RatMat(big);
    c.lattice = RatLattice::make(image(big), order);
    const auto& num = c.lattice.num;
    const std::size_t r = num.rank();
    if (r == 0) throw Error(ErrorKind::Internal, "empty isotypic component");
    rank_sum += r;
    total = total + c.projector;
    // coordinates of pi_i(e_j): y num = (big e_j) den / |G|
    c.coords = IntMat(r, h);
    for (std::size_t j = 0; j < h; ++j) {
      Vec col = big.col(j);
      for (auto& x : col) {
        Int t = x * c.lattice.den;
        if (!mpz_divisible_p(t.get_mpz_t(), order.get_mpz_t())) throw Error(ErrorKind::Internal, "projector scale");
        x = t / order;
      }
      auto y = num.coords(col);
      if (!y) throw Error(ErrorKind::Internal, "projection outside M_i");
      for (std::size_t k = 0; k < r; ++k) c.coords(k, j) = (*y)[k];
    }
    std::vector<IntMat> cm;
    for (int x = 0; x < g.order(); ++x) {
      IntMat a(r, r);
      for (std::size_t k = 0; k < r; ++k) {
        auto y = num.coords(rep.act(x, num.basis().row(k)));
        if (!y) throw Error(ErrorKind::Internal, "M_i is not invariant");
        for (std::size_t t = 0; t < r; ++t) a(t, k) = (*y)[t];
      }
      cm.push_back(std::move(a));
    }
    c.comp_rep = IntRep(g, std::move(cm));
    hull.components.push_back(std::move(c));
  }
  if (rank_sum != h || !(total == RatMat::identity(h)))
    throw Error(ErrorKind::Internal, "isotypic projectors do not decompose the module");
  return hull;
}

}  // namespace

SquareHull square_hull(const IntRep& rep, const HullOptions& opt) {
  const auto& g = rep.group();
  long min = opt.min_prime ? opt.min_prime : static_cast<long>(2 * rep.dim() * g.order() + 1);
  long p = find_prime(1, g.exponent(), Int(g.order()), min);
  for (int attempt = 0;; ++attempt) {
    try {
      return build_hull(rep, p, opt.seed + attempt);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::SplittingPrimeFailure || attempt >= 4) throw;
      p = find_prime(1, g.exponent(), Int(g.order()), p + 1);
    }
  }
}

Lattice w_lattice(const IntRep& rep, int g) { return image(IntMat::identity(rep.dim()) - rep.mat(g)); }

Lattice v_lattice(const IntRep& rep, int g) { return radical(w_lattice(rep, g)); }

Lattice fixed_lattice(const IntRep& rep, int g) { return kernel(IntMat::identity(rep.dim()) - rep.mat(g)); }

bool is_irreducible(const SquareHull& hull) {
  return hull.size() == 1 && hull.components[0].multiplicity == 1;
}

bool is_irreducible(const IntRep& rep, const HullOptions& opt) {
  if (rep.dim() == 0) return false;
  return is_irreducible(square_hull(rep, opt));
}

ComponentWV component_w_v(const SquareHull& hull, std::size_t i, int g) {
  if (i >= hull.size()) throw Error(ErrorKind::InvalidInput, "component index out of range");
  const auto& c = hull.components[i];
  Lattice w = image(IntMat::identity(c.rank()) - c.comp_rep.mat(g));
  return ComponentWV{w, radical(w)};
}

}  // namespace csep
