#include "kurank2/render.hpp"

#include <algorithm>
#include <sstream>

#include "kurank2/cubic3.hpp"
#include "kurank2/lattice.hpp"

namespace kurank2 {

namespace {

constexpr Int kUnit = 20;       // half the horizontal spacing in hexagonal mode
constexpr Int kRow = 35;        // about 20 * sqrt(3)
constexpr Int kMargin = 40;
constexpr Int kMaxPoints = 40000;

struct Pos {
  Int x, y;
};

Pos raw_position(const RenderSpec& spec, Int n, Int m) {
  if (spec.mode == CoordinateMode::Hexagonal) return {(2 * n + m) * kUnit, -m * kRow};
  return {n * 2 * kUnit, -m * 2 * kUnit};
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_lattice_svg(const RenderSpec& spec) {
  if (spec.n_min > spec.n_max || spec.m_min > spec.m_max)
    fail(ErrorCode::PreconditionFailed, "empty render window");
  const Wide count = mul(spec.n_max - spec.n_min + 1, spec.m_max - spec.m_min + 1);
  if (count > kMaxPoints) fail(ErrorCode::PreconditionFailed, "render window has too many points");

  Int x_lo = INT64_MAX, x_hi = INT64_MIN, y_lo = INT64_MAX, y_hi = INT64_MIN;
  for (Int n : {spec.n_min, spec.n_max})
    for (Int m : {spec.m_min, spec.m_max}) {
      Pos p = raw_position(spec, n, m);
      x_lo = std::min(x_lo, p.x);
      x_hi = std::max(x_hi, p.x);
      y_lo = std::min(y_lo, p.y);
      y_hi = std::max(y_hi, p.y);
    }
  const Int width = x_hi - x_lo + 2 * kMargin, height = y_hi - y_lo + 2 * kMargin;
  auto place = [&](Int n, Int m) {
    Pos p = raw_position(spec, n, m);
    return Pos{p.x - x_lo + kMargin, p.y - y_lo + kMargin};
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << " " << height << "\">\n";
  os << "<title>" << (spec.mode == CoordinateMode::Hexagonal ? "hexagonal" : "euclidean")
     << " coordinates, n in [" << spec.n_min << "," << spec.n_max << "], m in [" << spec.m_min << ","
     << spec.m_max << "]</title>\n";

  // the three rays alpha, beta, gamma through the origin, clipped to the window
  const bool origin_inside =
      spec.n_min <= 0 && 0 <= spec.n_max && spec.m_min <= 0 && 0 <= spec.m_max;
  if (origin_inside) {
    for (KuClass ray : {kAlpha, kBeta, kGamma}) {
      Int t = 1;
      auto inside = [&](Int k) {
        Int n = ray.n * k, m = ray.m * k;
        return spec.n_min <= n && n <= spec.n_max && spec.m_min <= m && m <= spec.m_max;
      };
      while (inside(t + 1)) ++t;
      Int s = 1;
      while (inside(-(s + 1))) ++s;
      if (!inside(t) || !inside(-s)) continue;
      Pos a = place(ray.n * t, ray.m * t), b = place(-ray.n * s, -ray.m * s);
      os << "<line class=\"ray\" x1=\"" << b.x << "\" y1=\"" << b.y << "\" x2=\"" << a.x << "\" y2=\"" << a.y
         << "\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
    }
  }

  for (Int m = spec.m_max; m >= spec.m_min; --m) {
    for (Int n = spec.n_min; n <= spec.n_max; ++n) {
      const Pos p = place(n, m);
      const KuClass v{n, m};
      const bool origin = v.zero();
      const bool primitive = !origin && is_primitive(v.vec());
      os << "<circle class=\"pt\" data-n=\"" << n << "\" data-m=\"" << m << "\" cx=\"" << p.x << "\" cy=\"" << p.y
         << "\" r=\"" << (origin ? 4 : 3) << "\" fill=\"" << (origin ? "#000000" : primitive ? "#1f4e99" : "#ffffff")
         << "\" stroke=\"#1f4e99\" stroke-width=\"1\"/>\n";
    }
  }

  if (spec.annotate) {
    for (Int m = spec.m_max; m >= spec.m_min; --m) {
      for (Int n = spec.n_min; n <= spec.n_max; ++n) {
        const KuClass v{n, m};
        if (v.zero()) continue;
        const ModuliInfo info = moduli_info(v);
        const KuClass u = info.normal.cls;
        const bool small = u == kAlpha || u == kBeta || u == KuClass{1, 1} || u == KuClass{2, 0} || u == KuClass{0, 2};
        if (!small) continue;
        const Pos p = place(n, m);
        os << "<text class=\"label\" x=\"" << p.x + 5 << "\" y=\"" << p.y - 5
           << "\" font-size=\"10\" font-family=\"serif\">" << escape(to_symbolic(v)) << "</text>\n";
      }
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace kurank2
