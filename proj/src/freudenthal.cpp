#include "c0t/errors.hpp"
#include "c0t/plcore.hpp"

#include <algorithm>
#include <numeric>

namespace c0t {

namespace {

std::size_t grid_id(const std::vector<std::size_t>& idx, std::size_t side) {
  std::size_t id = 0;
  std::size_t stride = 1;
  for (auto i : idx) {
    id += i * stride;
    stride *= side;
  }
  return id;
}

void check_params(int m, int s) {
  if (m < 1) throw InvalidInput("cube dimension must be >= 1");
  if (s < 1) throw InvalidInput("subdivisions must be >= 1");
  if (m > 8) throw InvalidInput("cube dimension too large");
}

}  // namespace

PLMap freudenthal_cube(int m, int s) {
  check_params(m, s);
  const auto dim = static_cast<std::size_t>(m);
  const auto side = static_cast<std::size_t>(s) + 1;
  std::size_t count = 1;
  for (std::size_t j = 0; j < dim; ++j) count *= side;

  std::vector<Point> coords;
  coords.reserve(count);
  for (std::size_t id = 0; id < count; ++id) {
    std::vector<Rational> c(dim);
    std::size_t rest = id;
    for (std::size_t j = 0; j < dim; ++j) {
      c[j] = ratio(static_cast<long>(2 * (rest % side)), s) - 1;
      rest /= side;
    }
    coords.emplace_back(std::move(c));
  }

  std::vector<Simplex> tops;
  std::vector<std::size_t> base(dim, 0);
  for (;;) {
    std::vector<std::size_t> perm(dim);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Simplex simplex;
      auto idx = base;
      simplex.vertices.push_back(grid_id(idx, side));
      for (auto axis : perm) {
        ++idx[axis];
        simplex.vertices.push_back(grid_id(idx, side));
      }
      tops.push_back(std::move(simplex));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::size_t j = 0;
    while (j < dim && ++base[j] == static_cast<std::size_t>(s)) base[j++] = 0;
    if (j == dim) break;
  }

  auto domain = std::make_shared<const SimplicialComplex>(SimplicialComplex::from_facets(count, tops));
  return PLMap(std::move(domain), std::move(coords));
}

CubeLocation freudenthal_locate(int m, int s, const Point& x) {
  check_params(m, s);
  const auto dim = static_cast<std::size_t>(m);
  if (x.dim() != dim) throw InvalidInput("point dimension does not match the cube");
  const auto side = static_cast<std::size_t>(s) + 1;

  std::vector<std::size_t> base(dim);
  std::vector<Rational> local(dim);
  for (std::size_t j = 0; j < dim; ++j) {
    if (x[j] < -1 || x[j] > 1) throw InvalidInput("point outside [-1,1]^m");
    const Rational u = (x[j] + 1) * s / 2;
    mpz_class cell = u.get_num() / u.get_den();  // floor for u >= 0
    if (cell >= s) cell = s - 1;
    base[j] = cell.get_ui();
    local[j] = u - Rational(cell);
  }
  std::vector<std::size_t> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(),
                   [&](std::size_t a, std::size_t b) { return local[a] > local[b]; });

  CubeLocation loc;
  auto idx = base;
  loc.simplex.vertices.push_back(grid_id(idx, side));
  for (auto axis : perm) {
    ++idx[axis];
    loc.simplex.vertices.push_back(grid_id(idx, side));
  }
  loc.weights.resize(dim + 1);
  loc.weights[0] = 1 - local[perm[0]];
  for (std::size_t i = 1; i < dim; ++i) loc.weights[i] = local[perm[i - 1]] - local[perm[i]];
  loc.weights[dim] = local[perm[dim - 1]];
  return loc;
}

}  // namespace c0t
