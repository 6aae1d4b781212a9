#include "trigrove/render.hpp"

#include <sstream>

namespace trigrove {

namespace {

constexpr int kUnit = 40;
constexpr int kMargin = 20;

int x_of(int n, Vertex v) { return (v.i + n) * kUnit / 2 + kMargin; }
int y_of(Vertex v) { return -v.j * kUnit + kMargin; }

class Canvas {
 public:
  explicit Canvas(int n) : n_(n) {
    const int w = n * kUnit + 2 * kMargin;
    const int h = n * kUnit + 2 * kMargin;
    out_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << w << "\" height=\"" << h
         << "\" viewBox=\"0 0 " << w << ' ' << h << "\">\n";
  }

  void edges(std::span<const Edge> list, const char* color) {
    if (list.empty()) return;
    out_ << "<g stroke=\"" << color << "\" stroke-width=\"2\" stroke-linecap=\"round\">\n";
    for (const Edge& e : list) {
      out_ << "<line x1=\"" << x_of(n_, e.a) << "\" y1=\"" << y_of(e.a) << "\" x2=\"" << x_of(n_, e.b) << "\" y2=\""
           << y_of(e.b) << "\"/>\n";
    }
    out_ << "</g>\n";
  }

  std::string finish() {
    out_ << "<g fill=\"#000000\">\n";
    for (const Vertex& v : Board::get(n_)->vertices()) {
      out_ << "<circle cx=\"" << x_of(n_, v) << "\" cy=\"" << y_of(v) << "\" r=\"3\"/>\n";
    }
    out_ << "</g>\n</svg>\n";
    return out_.str();
  }

 private:
  int n_;
  std::ostringstream out_;
};

}  // namespace

std::string render_svg(int n, std::span<const Edge> edges) {
  Canvas canvas(n);
  canvas.edges(edges, "#000000");
  return canvas.finish();
}

std::string render_diff_svg(const DiffGrove& d) {
  Canvas canvas(d.n);
  canvas.edges(d.blue, "#0000FF");
  canvas.edges(d.black, "#000000");
  canvas.edges(d.red, "#FF0000");
  return canvas.finish();
}

}  // namespace trigrove
