#include "exptrop/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "exptrop/error.hpp"

namespace exptrop {

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    std::string s = buf;
    return s == "-0.0000" ? "0.0000" : s;
}

double dot(const FloatPoint& a, const FloatPoint& b) { return a[0] * b[0] + a[1] * b[1]; }

FloatPoint to_float(const RealVec& v) { return {v[0].to_double(), v[1].to_double()}; }

/// Parameter interval of p + s d inside the halfplanes and the box.
std::optional<std::pair<double, double>> clip_line(const FloatPoint& p, const FloatPoint& d,
                                                   const std::vector<std::pair<FloatPoint, double>>& halfplanes) {
    double lo = -INFINITY;
    double hi = INFINITY;
    for (const auto& [g, h] : halfplanes) {
        const double gd = dot(g, d);
        const double slack = h - dot(g, p);
        if (std::abs(gd) < 1e-15) {
            if (slack < -1e-12) return std::nullopt;
            continue;
        }
        (gd > 0 ? hi : lo) = gd > 0 ? std::min(hi, slack / gd) : std::max(lo, slack / gd);
    }
    if (!(lo < hi)) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::vector<std::pair<FloatPoint, double>> box(double B) {
    return {{{1, 0}, B}, {{-1, 0}, B}, {{0, 1}, B}, {{0, -1}, B}};
}

std::vector<std::pair<FloatPoint, double>> halfplanes_of(const Polyhedron& P) {
    std::vector<std::pair<FloatPoint, double>> out;
    for (std::size_t r = 0; r < P.inequalities().size(); ++r)
        out.push_back({to_float(P.inequalities()[r]), P.inequality_rhs()[r].to_double()});
    return out;
}

/// Sutherland-Hodgman clipping of a convex polygon by a halfplane g.x <= h.
std::vector<FloatPoint> clip_polygon(const std::vector<FloatPoint>& poly, const FloatPoint& g, double h) {
    std::vector<FloatPoint> out;
    for (std::size_t k = 0; k < poly.size(); ++k) {
        const FloatPoint& a = poly[k];
        const FloatPoint& b = poly[(k + 1) % poly.size()];
        const double fa = dot(g, a) - h;
        const double fb = dot(g, b) - h;
        if (fa <= 0) out.push_back(a);
        if ((fa < 0 && fb > 0) || (fa > 0 && fb < 0)) {
            const double s = fa / (fa - fb);
            out.push_back({a[0] + s * (b[0] - a[0]), a[1] + s * (b[1] - a[1])});
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const SvgScene& scene) {
    const double B = scene.bound;
    if (!(B > 0)) throw PreconditionError("bound must be positive");
    if (scene.complex && scene.complex->ambient_dim() != 2)
        throw PreconditionError("SVG rendering needs ambient dimension 2, got " + std::to_string(scene.complex->ambient_dim()));
    for (const auto& p : scene.points)
        if (p.size() != 2) throw PreconditionError("SVG rendering needs 2-dimensional points");
    if (scene.line && scene.line->size() != 2) throw PreconditionError("SVG rendering needs a 2-dimensional line");

    const double stroke = B / 200;
    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(-B) << ' ' << num(-B) << ' ' << num(2 * B) << ' '
       << num(2 * B) << "\" width=\"480\" height=\"480\">\n";
    // Flip y so that the picture uses mathematical orientation.
    os << "<g transform=\"scale(1,-1)\">\n";
    os << "<rect x=\"" << num(-B) << "\" y=\"" << num(-B) << "\" width=\"" << num(2 * B) << "\" height=\"" << num(2 * B)
       << "\" fill=\"white\"/>\n";

    if (scene.points.empty()) {
        os << "<g class=\"amoeba\"/>\n";
    } else {
        os << "<g class=\"amoeba\" fill=\"#4a7ab0\" fill-opacity=\"0.5\">\n";
        for (const auto& p : scene.points)
            if (std::abs(p[0]) <= B && std::abs(p[1]) <= B)
                os << "<circle cx=\"" << num(p[0]) << "\" cy=\"" << num(p[1]) << "\" r=\"" << num(stroke) << "\"/>\n";
        os << "</g>\n";
    }

    std::ostringstream cells;
    if (scene.complex) {
        for (const auto& c : scene.complex->cells()) {
            if (c.dim() == 2) {
                std::vector<FloatPoint> poly{{-B, -B}, {B, -B}, {B, B}, {-B, B}};
                for (const auto& [g, h] : halfplanes_of(c)) poly = clip_polygon(poly, g, h);
                if (poly.size() < 3) continue;
                cells << "<polygon fill=\"#dddddd\" stroke=\"none\" points=\"";
                for (std::size_t k = 0; k < poly.size(); ++k) cells << (k ? " " : "") << num(poly[k][0]) << ',' << num(poly[k][1]);
                cells << "\"/>\n";
            } else if (c.dim() == 1) {
                const FloatPoint a = to_float(c.equations()[0]);
                const FloatPoint d{-a[1], a[0]};
                const FloatPoint p = to_float(c.relint_point());
                auto planes = halfplanes_of(c);
                for (const auto& bp : box(B)) planes.push_back(bp);
                if (auto seg = clip_line(p, d, planes)) {
                    cells << "<line x1=\"" << num(p[0] + seg->first * d[0]) << "\" y1=\"" << num(p[1] + seg->first * d[1])
                          << "\" x2=\"" << num(p[0] + seg->second * d[0]) << "\" y2=\"" << num(p[1] + seg->second * d[1])
                          << "\"/>\n";
                }
            }
        }
        for (const auto& c : scene.complex->cells_of_dim(0)) {
            const FloatPoint p = to_float(c.relint_point());
            if (std::abs(p[0]) <= B && std::abs(p[1]) <= B)
                cells << "<circle cx=\"" << num(p[0]) << "\" cy=\"" << num(p[1]) << "\" r=\"" << num(4 * stroke) << "\"/>\n";
        }
    }
    const std::string body = cells.str();
    if (body.empty()) os << "<g class=\"complex\"/>\n";
    else os << "<g class=\"complex\" stroke=\"black\" stroke-width=\"" << num(2 * stroke) << "\">\n" << body << "</g>\n";

    if (scene.line) {
        const FloatPoint d = *scene.line;
        if (auto seg = clip_line({0, 0}, d, box(B))) {
            os << "<g class=\"realpart\" stroke=\"#c0392b\" stroke-width=\"" << num(2 * stroke) << "\">\n"
               << "<line x1=\"" << num(seg->first * d[0]) << "\" y1=\"" << num(seg->first * d[1]) << "\" x2=\""
               << num(seg->second * d[0]) << "\" y2=\"" << num(seg->second * d[1]) << "\"/>\n</g>\n";
        }
    }
    os << "</g>\n</svg>\n";
    return os.str();
}

}  // namespace exptrop
