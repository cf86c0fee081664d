#include "limitless/modulus.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace limitless {

Modulus Modulus::lipschitz(double c) {
    if (!(c >= 0) || !std::isfinite(c)) throw InvalidModulus("Lipschitz constant must be >= 0");
    Modulus m;
    m.kind_ = Kind::lipschitz;
    m.c_ = c;
    return m;
}

Modulus Modulus::hoelder(double c, double gamma) {
    if (!(c >= 0) || !std::isfinite(c)) throw InvalidModulus("Hoelder constant must be >= 0");
    if (!(gamma > 0.0) || !(gamma <= 1.0)) throw InvalidModulus("Hoelder exponent must be in (0, 1]");
    Modulus m;
    m.kind_ = Kind::hoelder;
    m.c_ = c;
    m.gamma_ = gamma;
    return m;
}

namespace {

// Cross product of (p1 -> p2) x (p1 -> p3); >= 0 means p2 does not make a
// strict right turn, i.e. the chain p1, p2, p3 is not strictly concave.
double cross(const Modulus::Vertex& p1, const Modulus::Vertex& p2, const Modulus::Vertex& p3) {
    return (p2.first - p1.first) * (p3.second - p1.second) -
           (p2.second - p1.second) * (p3.first - p1.first);
}

} // namespace

Modulus Modulus::piecewise_linear_concave(std::vector<Vertex> vertices) {
    if (vertices.empty()) throw InvalidModulus("vertex list is empty");
    if (vertices.front() != Vertex{0.0, 0.0}) throw InvalidModulus("first vertex must be (0, 0)");
    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        if (!(vertices[i].first < vertices[i + 1].first))
            throw InvalidModulus("vertex abscissae must be strictly increasing");
    }
    for (std::size_t i = 0; i + 2 < vertices.size(); ++i) {
        if (cross(vertices[i], vertices[i + 1], vertices[i + 2]) > 0)
            throw InvalidModulus("segment slopes must be non-increasing");
    }
    if (vertices.size() >= 2 && vertices.back().second < vertices[vertices.size() - 2].second)
        throw InvalidModulus("final segment slope must be non-negative");
    Modulus m;
    m.kind_ = Kind::piecewise_linear_concave;
    m.vertices_ = std::move(vertices);
    return m;
}

Modulus Modulus::piecewise_unchecked(std::vector<Vertex> vertices) {
    Modulus m;
    m.kind_ = Kind::piecewise_linear_concave;
    m.vertices_ = std::move(vertices);
    return m;
}

double Modulus::operator()(double t) const {
    if (t < 0) throw NegativeArgument("modulus evaluated at negative argument");
    switch (kind_) {
    case Kind::lipschitz:
        return c_ * t;
    case Kind::hoelder:
        return c_ * std::pow(t, gamma_);
    case Kind::piecewise_linear_concave: {
        if (vertices_.empty()) return 0.0;
        if (t <= vertices_.front().first) return vertices_.front().second;
        if (vertices_.size() == 1) return vertices_.front().second;
        auto it = std::upper_bound(vertices_.begin(), vertices_.end(), t,
                                   [](double v, const Vertex& p) { return v < p.first; });
        const Vertex* hi = it == vertices_.end() ? &vertices_.back() : &*it;
        const Vertex* lo = it == vertices_.end() ? &vertices_[vertices_.size() - 2] : &*(it - 1);
        double slope = (hi->second - lo->second) / (hi->first - lo->first);
        return lo->second + slope * (t - lo->first);
    }
    }
    return 0.0;
}

SubadditivityReport check_subadditive(const Modulus& m, int grid_n, double t_max) {
    if (grid_n < 2) throw std::invalid_argument("subadditivity grid needs at least 2 points");
    const double eps = std::ldexp(1.0, -40);
    SubadditivityReport rep;
    rep.worst_margin = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < grid_n; ++i) {
        double s = t_max * i / (grid_n - 1);
        for (int j = 0; j < grid_n; ++j) {
            double t = t_max * j / (grid_n - 1);
            double margin = m(s + t) - m(s) - m(t);
            if (margin > rep.worst_margin) {
                rep.worst_margin = margin;
                rep.worst_s = s;
                rep.worst_t = t;
            }
        }
    }
    rep.passed = rep.worst_margin <= eps;
    return rep;
}

Modulus concave_majorant(const SampleSet& samples) {
    std::vector<Modulus::Vertex> pts;
    pts.reserve(samples.points.size() + 1);
    for (auto [h, g] : samples.points) {
        if (h < 0 || g < 0) throw NegativeSample("oscillation samples must be non-negative");
        if (!std::isfinite(h) || !std::isfinite(g))
            throw NegativeSample("oscillation samples must be finite");
        if (h == 0) continue; // g(0) = 0 by definition; the origin is prepended below
        pts.emplace_back(h, g);
    }
    std::sort(pts.begin(), pts.end());
    pts.insert(pts.begin(), {0.0, 0.0});

    // Running maximum in h-order; duplicate h keeps the larger g.
    std::vector<Modulus::Vertex> mono;
    for (auto& p : pts) {
        double g = mono.empty() ? p.second : std::max(mono.back().second, p.second);
        if (!mono.empty() && mono.back().first == p.first)
            mono.back().second = g;
        else
            mono.emplace_back(p.first, g);
    }

    // Upper hull, monotone chain: pop while the middle point is on or below
    // the chord, so surviving slopes strictly decrease.
    std::vector<Modulus::Vertex> hull;
    for (const auto& p : mono) {
        while (hull.size() >= 2 && cross(hull[hull.size() - 2], hull.back(), p) >= 0)
            hull.pop_back();
        hull.push_back(p);
    }
    return Modulus::piecewise_linear_concave(std::move(hull));
}

SampleSet empirical_oscillation(const NumericFunction& f, double lo, double hi, int grid_n,
                                int h_count) {
    if (grid_n < 2) throw std::invalid_argument("oscillation grid needs at least 2 points");
    if (h_count < 1) throw std::invalid_argument("need at least one separation");
    if (!(lo < hi)) throw InvalidInterval("oscillation domain must have positive width");

    const double width = hi - lo;
    std::vector<double> xs(static_cast<std::size_t>(grid_n));
    std::vector<double> fs(static_cast<std::size_t>(grid_n));
    for (int i = 0; i < grid_n; ++i) {
        xs[i] = lo + width * i / (grid_n - 1);
        fs[i] = f(xs[i]);
        if (!std::isfinite(fs[i]))
            throw EvaluationFailure("function value not finite at x = " + std::to_string(xs[i]));
    }

    // best[j] = max |f(x_{i+j}) - f(x_i)|, then prefix-max to get g at
    // separation j * spacing.
    std::vector<double> best(static_cast<std::size_t>(grid_n), 0.0);
    for (int j = 1; j < grid_n; ++j)
        for (int i = 0; i + j < grid_n; ++i)
            best[j] = std::max(best[j], std::fabs(fs[i + j] - fs[i]));
    for (int j = 2; j < grid_n; ++j) best[j] = std::max(best[j], best[j - 1]);

    SampleSet out;
    int max_sep = grid_n - 1;
    int prev = 0;
    for (int k = 1; k <= h_count; ++k) {
        int j = static_cast<int>(std::lround(static_cast<double>(k) * max_sep / h_count));
        if (j < 1) j = 1;
        if (j > max_sep) j = max_sep;
        if (j == prev) continue;
        prev = j;
        out.points.emplace_back(width * j / (grid_n - 1), best[j]);
    }
    return out;
}

SampleSet read_sample_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw CsvError("empty CSV input");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string header = line;
    header.erase(std::remove_if(header.begin(), header.end(),
                                [](unsigned char c) { return std::isspace(c); }),
                 header.end());
    if (header != "h,g") throw CsvError("expected header row 'h,g', found '" + line + "'");

    SampleSet out;
    std::size_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.find_first_not_of(" \t") == std::string::npos) continue;
        std::istringstream row(line);
        std::string hs, gs;
        if (!std::getline(row, hs, ',') || !std::getline(row, gs))
            throw CsvError("line " + std::to_string(lineno) + ": expected 'h,g'");
        try {
            out.points.emplace_back(std::stod(hs), std::stod(gs));
        } catch (const std::exception&) {
            throw CsvError("line " + std::to_string(lineno) + ": not a number");
        }
    }
    return out;
}

} // namespace limitless
