#include "bulkedge/contour.hpp"

#include <algorithm>
#include <cmath>

namespace bulkedge {

namespace {

// Proper intersection test for open segments (a,b) and (c,d).
bool segments_cross(cplx a, cplx b, cplx c, cplx d) {
  auto orient = [](cplx p, cplx q, cplx r) {
    double v = (q.real() - p.real()) * (r.imag() - p.imag()) -
               (q.imag() - p.imag()) * (r.real() - p.real());
    if (v > 1e-14) return 1;
    if (v < -1e-14) return -1;
    return 0;
  };
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 != o2 && o3 != o4 && o1 != 0 && o2 != 0 && o3 != 0 && o4 != 0;
}

double polygon_signed_area(const std::vector<cplx>& v) {
  double area = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const cplx& p = v[i];
    const cplx& q = v[(i + 1) % v.size()];
    area += p.real() * q.imag() - q.real() * p.imag();
  }
  return 0.5 * area;
}

double point_segment_distance(cplx p, cplx a, cplx b) {
  cplx ab = b - a;
  double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(p - a);
  double t = std::clamp(((p - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(p - (a + t * ab));
}

}  // namespace

Contour Contour::circle(cplx center, double radius, int quadrature_nodes) {
  if (radius <= 0.0) throw std::invalid_argument("contour: radius must be positive");
  if (quadrature_nodes < 16) throw std::invalid_argument("contour: need at least 16 quadrature nodes");
  Contour c;
  c.kind_ = Kind::Circle;
  c.center_ = center;
  c.radius_x_ = c.radius_y_ = radius;
  c.nodes_ = quadrature_nodes;
  return c;
}

Contour Contour::ellipse(cplx center, double semi_x, double semi_y, double rotation,
                         int quadrature_nodes) {
  if (semi_x <= 0.0 || semi_y <= 0.0)
    throw std::invalid_argument("contour: semi-axes must be positive");
  if (quadrature_nodes < 16) throw std::invalid_argument("contour: need at least 16 quadrature nodes");
  Contour c;
  c.kind_ = Kind::Ellipse;
  c.center_ = center;
  c.radius_x_ = semi_x;
  c.radius_y_ = semi_y;
  c.rotation_ = rotation;
  c.nodes_ = quadrature_nodes;
  return c;
}

Contour Contour::polyline(std::vector<cplx> vertices, int quadrature_nodes) {
  if (vertices.size() < 3) throw std::invalid_argument("contour: polyline needs >= 3 vertices");
  if (quadrature_nodes < 16) throw std::invalid_argument("contour: need at least 16 quadrature nodes");
  if (std::abs(vertices.front() - vertices.back()) < 1e-14) vertices.pop_back();
  const size_t n = vertices.size();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i + 1 || (i == 0 && j == n - 1)) continue;
      if (segments_cross(vertices[i], vertices[(i + 1) % n], vertices[j],
                         vertices[(j + 1) % n]))
        throw std::invalid_argument("contour: polyline is self-intersecting");
    }
  if (polygon_signed_area(vertices) < 0.0)
    std::reverse(vertices.begin(), vertices.end());

  Contour c;
  c.kind_ = Kind::Polyline;
  c.vertices_ = std::move(vertices);
  c.nodes_ = quadrature_nodes;
  c.cum_length_.assign(c.vertices_.size() + 1, 0.0);
  for (size_t i = 0; i < c.vertices_.size(); ++i) {
    cplx a = c.vertices_[i];
    cplx b = c.vertices_[(i + 1) % c.vertices_.size()];
    c.cum_length_[i + 1] = c.cum_length_[i] + std::abs(b - a);
  }
  return c;
}

Contour Contour::with_nodes(int m) const {
  Contour c = *this;
  c.nodes_ = std::max(m, 16);
  return c;
}

cplx Contour::point(double t) const {
  t -= std::floor(t);
  switch (kind_) {
    case Kind::Circle:
      return center_ + radius_x_ * std::exp(kImag * (2.0 * kPi * t));
    case Kind::Ellipse: {
      double th = 2.0 * kPi * t;
      cplx local(radius_x_ * std::cos(th), radius_y_ * std::sin(th));
      return center_ + local * std::exp(kImag * rotation_);
    }
    case Kind::Polyline:
      return point_arclength(t);
  }
  return center_;
}

cplx Contour::point_arclength(double s) const {
  s -= std::floor(s);
  if (kind_ == Kind::Circle) return point(s);
  if (kind_ == Kind::Ellipse) {
    // Invert the cumulative arclength numerically on a fine angle grid.
    const int fine = 4096;
    double target = s;
    double total = 0.0;
    std::vector<double> cum(fine + 1, 0.0);
    cplx prev = point(0.0);
    for (int i = 1; i <= fine; ++i) {
      cplx cur = point(static_cast<double>(i) / fine);
      total += std::abs(cur - prev);
      cum[i] = total;
      prev = cur;
    }
    double want = target * total;
    auto it = std::lower_bound(cum.begin(), cum.end(), want);
    int idx = static_cast<int>(it - cum.begin());
    if (idx <= 0) return point(0.0);
    double t0 = static_cast<double>(idx - 1) / fine;
    double seg = cum[idx] - cum[idx - 1];
    double frac = seg > 0 ? (want - cum[idx - 1]) / seg : 0.0;
    return point(t0 + frac / fine);
  }
  double total = cum_length_.back();
  double want = s * total;
  auto it = std::upper_bound(cum_length_.begin(), cum_length_.end(), want);
  size_t idx = std::min<size_t>(it - cum_length_.begin(), cum_length_.size() - 1);
  size_t edge = idx == 0 ? 0 : idx - 1;
  double seg = cum_length_[edge + 1] - cum_length_[edge];
  double frac = seg > 0 ? (want - cum_length_[edge]) / seg : 0.0;
  cplx a = vertices_[edge];
  cplx b = vertices_[(edge + 1) % vertices_.size()];
  return a + frac * (b - a);
}

std::vector<Contour::Node> Contour::quadrature(int m) const {
  std::vector<Node> out;
  out.reserve(m);
  switch (kind_) {
    case Kind::Circle: {
      double dth = 2.0 * kPi / m;
      for (int i = 0; i < m; ++i) {
        double th = dth * i;
        cplx e = std::exp(kImag * th);
        out.push_back({center_ + radius_x_ * e, kImag * radius_x_ * e * dth});
      }
      break;
    }
    case Kind::Ellipse: {
      double dth = 2.0 * kPi / m;
      cplx rot = std::exp(kImag * rotation_);
      for (int i = 0; i < m; ++i) {
        double th = dth * i;
        cplx local(radius_x_ * std::cos(th), radius_y_ * std::sin(th));
        cplx deriv(-radius_x_ * std::sin(th), radius_y_ * std::cos(th));
        out.push_back({center_ + local * rot, deriv * rot * dth});
      }
      break;
    }
    case Kind::Polyline: {
      // Composite trapezoid along edges, nodes distributed by arclength.
      const size_t n = vertices_.size();
      double total = cum_length_.back();
      for (size_t e = 0; e < n; ++e) {
        cplx a = vertices_[e], b = vertices_[(e + 1) % n];
        double len = std::abs(b - a);
        int sub = std::max(1, static_cast<int>(std::lround(m * len / total)));
        cplx step = (b - a) / static_cast<double>(sub);
        for (int i = 0; i < sub; ++i)
          out.push_back({a + (static_cast<double>(i) + 0.5) * step, step});
      }
      break;
    }
  }
  return out;
}

bool Contour::contains(cplx p) const {
  switch (kind_) {
    case Kind::Circle:
      return std::abs(p - center_) < radius_x_;
    case Kind::Ellipse: {
      cplx local = (p - center_) * std::exp(-kImag * rotation_);
      double u = local.real() / radius_x_, v = local.imag() / radius_y_;
      return u * u + v * v < 1.0;
    }
    case Kind::Polyline: {
      bool inside = false;
      const size_t n = vertices_.size();
      for (size_t i = 0, j = n - 1; i < n; j = i++) {
        double xi = vertices_[i].real(), yi = vertices_[i].imag();
        double xj = vertices_[j].real(), yj = vertices_[j].imag();
        bool cross = ((yi > p.imag()) != (yj > p.imag())) &&
                     (p.real() < (xj - xi) * (p.imag() - yi) / (yj - yi) + xi);
        if (cross) inside = !inside;
      }
      return inside;
    }
  }
  return false;
}

double Contour::distance(cplx p) const {
  switch (kind_) {
    case Kind::Circle:
      return std::abs(std::abs(p - center_) - radius_x_);
    case Kind::Ellipse: {
      // Distance to a dense sample of the boundary; adequate for margin checks.
      const int fine = 2048;
      double best = std::numeric_limits<double>::max();
      for (int i = 0; i < fine; ++i)
        best = std::min(best, std::abs(p - point(static_cast<double>(i) / fine)));
      return best;
    }
    case Kind::Polyline: {
      double best = std::numeric_limits<double>::max();
      const size_t n = vertices_.size();
      for (size_t i = 0; i < n; ++i)
        best = std::min(best, point_segment_distance(p, vertices_[i], vertices_[(i + 1) % n]));
      return best;
    }
  }
  return 0.0;
}

double Contour::diameter() const {
  switch (kind_) {
    case Kind::Circle:
      return 2.0 * radius_x_;
    case Kind::Ellipse:
      return 2.0 * std::max(radius_x_, radius_y_);
    case Kind::Polyline: {
      double best = 0.0;
      for (size_t i = 0; i < vertices_.size(); ++i)
        for (size_t j = i + 1; j < vertices_.size(); ++j)
          best = std::max(best, std::abs(vertices_[i] - vertices_[j]));
      return best;
    }
  }
  return 0.0;
}

}  // namespace bulkedge
