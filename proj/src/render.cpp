#include "especial/render.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace especial {

namespace {

class Canvas {
 public:
  explicit Canvas(const RenderOptions& o)
      : o_(o),
        cx_(ratio(o.width, 2)),
        cy_(ratio(o.height, 2)),
        radius_(ratio(std::min(o.width, o.height), 2) - o.margin) {
    if (radius_ <= 0) throw std::invalid_argument("render margin leaves no room for the disc");
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width
         << "\" height=\"" << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height
         << "\">\n";
  }

  std::string x(const PlanePoint& p) const { return to_decimal(cx_ + radius_ * p.x); }
  std::string y(const PlanePoint& p) const { return to_decimal(cy_ - radius_ * p.y); }
  std::string xy(const PlanePoint& p) const { return x(p) + "," + y(p); }

  void disc() {
    out_ << "  <circle id=\"disc\" cx=\"" << to_decimal(cx_) << "\" cy=\"" << to_decimal(cy_)
         << "\" r=\"" << to_decimal(radius_) << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\""
         << o_.circle_stroke << "\"/>\n";
  }

  // Polygon, segment or dot according to the vertex count.
  void shape(const std::string& id, const std::string& cls, const std::vector<PlanePoint>& v,
             const std::string& stroke, const std::string& fill, double width) {
    out_ << "  ";
    if (v.size() >= 3) {
      out_ << "<polygon id=\"" << id << "\" class=\"" << cls << "\" points=\"";
      for (std::size_t k = 0; k < v.size(); ++k) out_ << (k ? " " : "") << xy(v[k]);
      out_ << "\" fill=\"" << fill << "\" stroke=\"" << stroke << "\" stroke-width=\"" << width
           << "\"/>\n";
    } else if (v.size() == 2) {
      line(id, cls, v[0], v[1], stroke, width);
    } else {
      dot(id, cls, v[0], width + 1.5, stroke);
    }
  }

  void line(const std::string& id, const std::string& cls, const PlanePoint& a,
            const PlanePoint& b, const std::string& stroke, double width) {
    out_ << "<line id=\"" << id << "\" class=\"" << cls << "\" x1=\"" << x(a) << "\" y1=\"" << y(a)
         << "\" x2=\"" << x(b) << "\" y2=\"" << y(b) << "\" stroke=\"" << stroke
         << "\" stroke-width=\"" << width << "\"/>\n";
  }

  void dot(const std::string& id, const std::string& cls, const PlanePoint& p, double r,
           const std::string& fill) {
    out_ << "<circle id=\"" << id << "\" class=\"" << cls << "\" cx=\"" << x(p) << "\" cy=\""
         << y(p) << "\" r=\"" << r << "\" fill=\"" << fill << "\"/>\n";
  }

  void text(const std::string& id, const PlanePoint& p, const std::string& body) {
    out_ << "  <text id=\"" << id << "\" x=\"" << x(p) << "\" y=\"" << y(p)
         << "\" font-family=\"sans-serif\" font-size=\"12\">" << body << "</text>\n";
  }

  std::ostream& raw() { return out_; }

  std::string finish() {
    out_ << "</svg>\n";
    return out_.str();
  }

 private:
  const RenderOptions& o_;
  Rational cx_, cy_, radius_;
  std::ostringstream out_;
};

std::string element_label(const FamilyPair& fp, Side side, std::size_t i) {
  const auto& labels = fp.labels(side);
  if (i < labels.size()) return labels[i];
  return std::string(side == Side::Plus ? "+" : "-") + std::to_string(i);
}

// Label position: the hull barycenter pushed slightly towards the boundary.
PlanePoint label_anchor(const ConvexCell& cell) {
  PlanePoint b = cell.barycenter();
  return {b.x * Rational(21, 20), b.y * Rational(21, 20)};
}

std::string id_of(Side side) { return std::string(to_string(side)); }

}  // namespace

std::string render_input_svg(const FamilyPair& fp, const std::vector<LinkedCell>& cells,
                             const RenderOptions& o) {
  Canvas c(o);
  c.disc();
  if (o.linked_region && o.cells) {
    c.raw() << " <g id=\"linked-region\">\n";
    for (const auto& lc : cells) {
      c.shape("cell-" + std::to_string(lc.z.plus) + "-" + std::to_string(lc.z.minus), "cell",
              lc.cell.vertices(), o.cell_color, o.cell_color, 1.0);
    }
    c.raw() << " </g>\n";
  }
  if (o.hulls) {
    for (Side side : {Side::Plus, Side::Minus}) {
      const std::string& color = side == Side::Plus ? o.plus_color : o.minus_color;
      c.raw() << " <g id=\"hulls-" << id_of(side) << "\">\n";
      for (std::size_t i = 0; i < fp.family(side).size(); ++i) {
        const ConvexCell h = hull(fp.family(side)[i]);
        c.shape("hull-" + id_of(side) + "-" + std::to_string(i), "hull " + id_of(side),
                h.vertices(), color, "none", o.hull_stroke);
        if (o.labels) {
          c.text("label-" + id_of(side) + "-" + std::to_string(i), label_anchor(h),
                 element_label(fp, side, i));
        }
      }
      c.raw() << " </g>\n";
    }
  }
  std::set<CirclePoint> marks;
  for (Side side : {Side::Plus, Side::Minus}) {
    for (const auto& s : fp.family(side)) marks.insert(s.begin(), s.end());
  }
  c.raw() << " <g id=\"marks\">\n";
  std::size_t k = 0;
  for (const auto& m : marks) {
    c.dot("mark-" + std::to_string(k++), "mark", param_to_point(m), 3.0, "#000000");
  }
  c.raw() << " </g>\n";
  return c.finish();
}

std::string render_straightened_svg(const StraightenedDisc& sd, const RenderOptions& o) {
  Canvas c(o);
  c.disc();
  if (o.leaves) {
    for (Side side : {Side::Plus, Side::Minus}) {
      const std::string& color = side == Side::Plus ? o.plus_color : o.minus_color;
      for (const auto& leaf : sd.leaves(side)) {
        const std::string base = "leaf-" + id_of(side) + "-" + std::to_string(leaf.element);
        c.raw() << " <g id=\"" << base << "\">\n";
        for (std::size_t e = 0; e < leaf.edges.size(); ++e) {
          c.raw() << " ";
          c.line(base + "-edge-" + std::to_string(e), "leaf " + id_of(side),
                 sd.position(leaf, leaf.edges[e].first), sd.position(leaf, leaf.edges[e].second),
                 color, o.leaf_stroke);
        }
        c.raw() << " </g>\n";
      }
    }
  }
  if (o.straightened) {
    c.raw() << " <g id=\"z-points\">\n";
    for (std::size_t k = 0; k < sd.disc.interior().size(); ++k) {
      const auto& z = sd.disc.interior()[k];
      c.raw() << " ";
      c.dot("z-" + std::to_string(z.plus) + "-" + std::to_string(z.minus),
            z.link >= 3 ? "z singular" : "z", sd.interior_layout[k], z.link >= 3 ? 5.0 : 3.5,
            "#000000");
    }
    for (std::size_t k = 0; k < sd.disc.boundary().size(); ++k) {
      const auto& z = sd.disc.boundary()[k];
      c.raw() << " ";
      c.dot("boundary-" + std::to_string(z.plus) + "-" + std::to_string(z.minus), "boundary",
            sd.boundary_layout[k], 3.5, "#ffffff");
    }
    for (const auto& v : sd.virtual_layout) {
      c.raw() << " ";
      c.dot("virtual-" + id_of(v.family) + "-" + std::to_string(v.element), "virtual", v.position,
            3.0, "#999999");
    }
    c.raw() << " </g>\n";
  }
  if (o.labels) {
    for (std::size_t k = 0; k < sd.disc.interior().size(); ++k) {
      const auto& z = sd.disc.interior()[k];
      c.text("label-z-" + std::to_string(z.plus) + "-" + std::to_string(z.minus),
             sd.interior_layout[k],
             "(" + std::to_string(z.plus) + "," + std::to_string(z.minus) + ")");
    }
  }
  return c.finish();
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot rename " + tmp + " to " + path + ": " + ec.message());
  }
}

}  // namespace especial
