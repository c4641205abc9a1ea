#include "cli.hpp"

#include "gkz/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <set>
#include <sstream>

namespace gkz::cli {

namespace {

constexpr double kSize = 400.0;
constexpr double kMargin = 30.0;

const char* kFills[] = {"#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5"};

}  // namespace

std::string face_lattice_text(const PointConfig& cfg, const MarkedSubdivision& s) {
  std::ostringstream o;
  auto list = [&](const IndexSet& ids) {
    o << "{";
    for (std::size_t k = 0; k < ids.size(); ++k) o << (k ? "," : "") << ids[k];
    o << "}";
  };
  for (std::size_t c = 0; c < s.cells().size(); ++c) {
    const auto& cell = s.cells()[c];
    o << "cell " << c << " vertices ";
    list(cell.vertices);
    o << " marking ";
    list(cell.marking);
    o << "\n";
    std::set<IndexSet> level{cell.vertices};
    for (std::size_t d = cfg.dim(); d-- > 0;) {
      std::set<IndexSet> next;
      for (const auto& f : level) {
        if (f.size() == 1) continue;
        Hull h = hull_faces(cfg, f);
        for (const auto& fp : h.facet_points) {
          IndexSet sub;
          std::set_intersection(fp.begin(), fp.end(), f.begin(), f.end(), std::back_inserter(sub));
          next.insert(hull_faces(cfg, sub).vertices);
        }
      }
      o << "  dim " << d << ":";
      for (const auto& f : next) {
        o << " ";
        list(f);
      }
      o << "\n";
      level = std::move(next);
    }
  }
  return o.str();
}

std::string render_svg(const PointConfig& cfg, const MarkedSubdivision& s) {
  if (cfg.dim() > 2) throw DimensionMismatch("svg output needs a configuration of dimension 1 or 2");
  const std::size_t r = cfg.size();
  std::vector<double> xs(r), ys(r, 0.0);
  for (Index i = 0; i < r; ++i) {
    xs[i] = cfg.point(i)[0].get_d();
    if (cfg.dim() == 2) ys[i] = cfg.point(i)[1].get_d();
  }
  auto [xmin, xmax] = std::minmax_element(xs.begin(), xs.end());
  auto [ymin, ymax] = std::minmax_element(ys.begin(), ys.end());
  double span = std::max({*xmax - *xmin, *ymax - *ymin, 1.0});
  double unit = (kSize - 2 * kMargin) / span;
  auto px = [&](Index i) { return kMargin + (xs[i] - *xmin) * unit; };
  auto py = [&](Index i) { return cfg.dim() == 2 ? kSize - kMargin - (ys[i] - *ymin) * unit : kSize / 2; };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
    << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
  for (std::size_t c = 0; c < s.cells().size(); ++c) {
    const auto& cell = s.cells()[c];
    const char* fill = kFills[c % 8];
    if (cfg.dim() == 1) {
      auto [lo, hi] = std::minmax_element(cell.vertices.begin(), cell.vertices.end(),
                                          [&](Index a, Index b) { return xs[a] < xs[b]; });
      o << "  <line x1=\"" << px(*lo) << "\" y1=\"" << kSize / 2 + 8 * (c % 2 ? 1 : -1) << "\" x2=\"" << px(*hi)
        << "\" y2=\"" << kSize / 2 + 8 * (c % 2 ? 1 : -1) << "\" stroke=\"" << fill
        << "\" stroke-width=\"10\" stroke-opacity=\"0.8\"/>\n";
      continue;
    }
    double cx = 0, cy = 0;
    for (auto v : cell.vertices) {
      cx += px(v);
      cy += py(v);
    }
    cx /= static_cast<double>(cell.vertices.size());
    cy /= static_cast<double>(cell.vertices.size());
    std::vector<Index> ring = cell.vertices;
    std::sort(ring.begin(), ring.end(), [&](Index a, Index b) {
      return std::atan2(py(a) - cy, px(a) - cx) < std::atan2(py(b) - cy, px(b) - cx);
    });
    o << "  <polygon points=\"";
    for (std::size_t k = 0; k < ring.size(); ++k) o << (k ? " " : "") << px(ring[k]) << "," << py(ring[k]);
    o << "\" fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"#333\" stroke-width=\"1.5\"/>\n";
  }
  IndexSet marked = s.marked_points();
  for (Index i = 0; i < r; ++i) {
    bool m = std::binary_search(marked.begin(), marked.end(), i);
    o << "  <circle cx=\"" << px(i) << "\" cy=\"" << py(i) << "\" r=\"4\" fill=\"" << (m ? "#000" : "#fff")
      << "\" stroke=\"#000\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace gkz::cli
