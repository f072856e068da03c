#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace fb {

using Point = std::array<double, 3>;  // components beyond n are zero

// Uniform Cartesian grid on the cube [-L,L]^n with spacing h and m field
// components per node. Node i has coordinate -L + i*h along each axis.
struct GridSpec {
  int n = 2;       // spatial dimension, 2 or 3
  int m = 1;       // codomain dimension
  double h = 0.0;  // spacing
  double L = 1.0;  // cube half-width

  GridSpec() = default;
  GridSpec(int n_, int m_, double h_, double L_) : n(n_), m(m_), h(h_), L(L_) {
    validate();
  }

  void validate() const {
    if (n != 2 && n != 3) throw std::invalid_argument("GridSpec: n must be 2 or 3");
    if (m < 1) throw std::invalid_argument("GridSpec: m must be >= 1");
    if (!(h > 0.0)) throw std::invalid_argument("GridSpec: h must be positive");
    if (!(L >= 1.0)) throw std::invalid_argument("GridSpec: L must be >= 1");
    const double k = 2.0 * L / h;
    if (std::abs(k - std::round(k)) > 1e-9 * std::max(1.0, k))
      throw std::invalid_argument("GridSpec: 2L/h must be an integer");
  }

  // nodes per axis
  int npa() const { return static_cast<int>(std::llround(2.0 * L / h)) + 1; }
  std::int64_t node_count() const {
    std::int64_t c = 1;
    for (int d = 0; d < n; ++d) c *= npa();
    return c;
  }
  double coord(int i) const { return -L + i * h; }

  std::int64_t flat(const std::array<int, 3>& idx) const {
    std::int64_t f = idx[0];
    for (int d = 1; d < n; ++d) f = f * npa() + idx[d];
    return f;
  }
  std::array<int, 3> unflat(std::int64_t f) const {
    std::array<int, 3> idx{0, 0, 0};
    for (int d = n - 1; d >= 0; --d) {
      idx[d] = static_cast<int>(f % npa());
      f /= npa();
    }
    return idx;
  }
  Point node_point(const std::array<int, 3>& idx) const {
    Point p{0, 0, 0};
    for (int d = 0; d < n; ++d) p[d] = coord(idx[d]);
    return p;
  }
  bool inside_cube(const Point& p) const {
    for (int d = 0; d < n; ++d)
      if (p[d] < -L - 1e-12 || p[d] > L + 1e-12) return false;
    return true;
  }
};

// Ball localization (x0, r). All analysis quantities are indexed by one.
struct BallFrame {
  Point x0{0, 0, 0};
  double r = 0.0;

  BallFrame() = default;
  BallFrame(Point c, double radius) : x0(c), r(radius) {}

  void validate(const GridSpec& g) const {
    if (!(r > 0.0)) throw std::domain_error("BallFrame: r must be positive");
    if (r < 4.0 * g.h - 1e-12)
      throw std::domain_error("BallFrame: r below resolution floor 4h");
    for (int d = 0; d < g.n; ++d)
      if (std::abs(x0[d]) + r > g.L + 1e-12)
        throw std::domain_error("BallFrame: closure of ball exceeds grid cube");
  }
};

enum class MaskMode {
  InscribedBall,  // Dirichlet outside the open unit ball and on cube faces
  CubeFaces,      // Dirichlet on cube faces only
};

// Discrete u : [-L,L]^n -> R^m. Values stored node-major (m contiguous
// components per node, nodes in lexicographic order). Immutable by
// convention once built; solvers construct new fields.
struct VectorField {
  GridSpec spec;
  std::vector<double> values;        // node_count * m
  std::vector<std::uint8_t> mask;    // 1 = Dirichlet node

  const double* at(std::int64_t flat) const { return values.data() + flat * spec.m; }
  double* at(std::int64_t flat) { return values.data() + flat * spec.m; }
  bool dirichlet(std::int64_t flat) const { return mask[static_cast<size_t>(flat)] != 0; }

  double max_abs() const {
    double s = 0.0;
    for (double v : values) s = std::max(s, std::abs(v));
    return s;
  }
};

using Initializer = std::function<void(const Point&, double* /*out, m values*/)>;

VectorField make_field(const GridSpec& spec, const Initializer& init,
                       MaskMode mode = MaskMode::InscribedBall);

// Serialization: header "n,m,h,L", then one row "i1,..,in,u1,..,um" per node.
void write_field(std::ostream& os, const VectorField& u);
void write_field_file(const std::string& path, const VectorField& u);
VectorField read_field(std::istream& is, MaskMode mode = MaskMode::InscribedBall);
VectorField read_field_file(const std::string& path, MaskMode mode = MaskMode::InscribedBall);

}  // namespace fb
