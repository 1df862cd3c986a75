#include "algnum/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <unordered_map>

#include "algnum/complexexp.hpp"
#include "algnum/errors.hpp"
#include "algnum/language.hpp"

namespace algnum {

double tile_tail_bound(const NumberSystem& ns, int depth) {
    double r = std::sqrt(ns.modulus_squared().get_d());
    return static_cast<double>(ns.digit_max()) * std::pow(r, -depth) / (r - 1.0);
}

TileCloud tile_cloud(const NumberSystem& ns, const LatticePoint& n, int depth, size_t cap) {
    if (depth < 0) throw DomainError("cloud depth must be >= 0");
    {
        auto r = integer_expansion(ns, n);
        if (!std::holds_alternative<Expansion>(r)) {
            throw DomainError("tile base has no terminating integer expansion");
        }
    }
    TileCloud cloud;
    cloud.base = n;
    cloud.depth = depth;
    cloud.color_index = color_of(ns, n);

    GaussRat base_value = ns.lattice_value(n);
    std::complex<double> base(base_value.re.get_d(), base_value.im.get_d());
    GaussRat alpha = ns.alpha();
    std::complex<double> alpha_d(alpha.re.get_d(), alpha.im.get_d());
    std::complex<double> inv_alpha = 1.0 / alpha_d;

    // depth-first over fractional tails: tree node advances by v -> alpha v + d,
    // the point accumulates d * alpha^{-t}
    std::function<void(const LatticePoint&, std::complex<double>, std::complex<double>, int)>
        rec = [&](const LatticePoint& node, std::complex<double> acc,
                  std::complex<double> scale, int remaining) {
            if (remaining == 0) {
                if (cloud.points.size() >= cap) {
                    throw ResourceError("tile cloud exceeded its size cap");
                }
                cloud.points.push_back(base + acc);
                return;
            }
            for (int d : branch_digits(ns, node).digits) {
                rec(ns.tree_child(node, d), acc + scale * double(d), scale * inv_alpha,
                    remaining - 1);
            }
        };
    rec(n, {0.0, 0.0}, inv_alpha, depth);
    return cloud;
}

int color_of(const NumberSystem& ns, const LatticePoint& n) {
    auto parity_fallback = [&]() {
        long l = to_long(Int(mod_euclid(n.lam, Int(2))));
        long m = to_long(Int(mod_euclid(n.mu, Int(2))));
        return static_cast<int>(l + 2 * m);
    };
    if (ns.den().is_unit()) return parity_fallback();
    // smallest-norm prime divisor of den(alpha), ties broken by canonical order
    auto factors = factor(ns.den()).factors;
    GaussInt p = std::min_element(factors.begin(), factors.end(),
                                  [](const PrimePower& a, const PrimePower& b) {
                                      if (a.prime.norm() != b.prime.norm())
                                          return a.prime.norm() < b.prime.norm();
                                      return a.prime < b.prime;
                                  })
                     ->prime;
    GaussRat v = ns.lattice_value(n);
    if (v.re.get_den() != 1 || v.im.get_den() != 1) return parity_fallback();
    GaussInt z(Int(v.re.get_num()), Int(v.im.get_num()));
    long np = to_long(p.norm());
    try {
        std::vector<long> c = base_p_digits(z, p, 3);
        long idx = c[1] + np * c[2];
        if (c[0] != 0) idx = c[0] + np * c[1] + np * np * c[2];
        return static_cast<int>(idx);
    } catch (const DomainError&) {
        return parity_fallback();
    }
}

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

Rgb palette(int idx) {
    static const Rgb colors[] = {
        {220, 50, 47},    // red
        {38, 139, 210},   // blue
        {181, 137, 0},    // yellow
        {133, 153, 0},    // green
        {211, 54, 130},   // magenta
        {42, 161, 152},   // cyan
        {203, 75, 22},    // orange
        {108, 113, 196},  // violet
    };
    return colors[((idx % 8) + 8) % 8];
}

}  // namespace

std::vector<std::uint8_t> render_ppm(const std::vector<TileCloud>& clouds, const Window& window,
                                     int width, int height) {
    if (window.width() <= 0 || window.height() <= 0) throw DomainError("zero-area window");
    if (width <= 0 || height <= 0) throw DomainError("image must have positive dimensions");
    std::string header = "P6\n" + std::to_string(width) + " " + std::to_string(height) + "\n255\n";
    std::vector<std::uint8_t> img(header.begin(), header.end());
    size_t pixels_at = img.size();
    img.resize(pixels_at + static_cast<size_t>(width) * height * 3, 255);
    auto put = [&](int px, int py, Rgb c) {
        if (px < 0 || px >= width || py < 0 || py >= height) return;
        size_t off = pixels_at + 3 * (static_cast<size_t>(py) * width + px);
        img[off] = c.r;
        img[off + 1] = c.g;
        img[off + 2] = c.b;
    };
    for (const TileCloud& cloud : clouds) {
        Rgb c = palette(cloud.color_index);
        for (const auto& pt : cloud.points) {
            int px = static_cast<int>((pt.real() - window.x0) / window.width() * width);
            int py = static_cast<int>((window.y1 - pt.imag()) / window.height() * height);
            put(px, py, c);
        }
    }
    return img;
}

std::string render_svg(const std::vector<TileCloud>& clouds, const Window& window, int width,
                       int height) {
    if (window.width() <= 0 || window.height() <= 0) throw DomainError("zero-area window");
    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(width) + "\" height=\"" + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    char buf[160];
    for (const TileCloud& cloud : clouds) {
        Rgb c = palette(cloud.color_index);
        std::snprintf(buf, sizeof buf, "<g fill=\"rgb(%d,%d,%d)\">\n", c.r, c.g, c.b);
        svg += buf;
        for (const auto& pt : cloud.points) {
            double px = (pt.real() - window.x0) / window.width() * width;
            double py = (window.y1 - pt.imag()) / window.height() * height;
            std::snprintf(buf, sizeof buf, "<circle cx=\"%.2f\" cy=\"%.2f\" r=\"0.8\"/>\n", px,
                          py);
            svg += buf;
        }
        svg += "</g>\n";
    }
    svg += "</svg>\n";
    return svg;
}

namespace {

// uniform grid over a cloud's points for near-neighbor distance queries
struct CloudIndex {
    TileCloud cloud;
    double cell = 1.0;
    std::unordered_map<long long, std::vector<int>> buckets;

    static long long key(long cx, long cy) {
        return (static_cast<long long>(cx) << 32) ^ (cy & 0xffffffffLL);
    }
    void build(double cell_size) {
        cell = cell_size;
        for (int i = 0; i < static_cast<int>(cloud.points.size()); ++i) {
            long cx = static_cast<long>(std::floor(cloud.points[i].real() / cell));
            long cy = static_cast<long>(std::floor(cloud.points[i].imag() / cell));
            buckets[key(cx, cy)].push_back(i);
        }
    }
    double min_dist(std::complex<double> x, double beyond) const {
        long cx = static_cast<long>(std::floor(x.real() / cell));
        long cy = static_cast<long>(std::floor(x.imag() / cell));
        double best = beyond;
        for (long dy = -1; dy <= 1; ++dy) {
            for (long dx = -1; dx <= 1; ++dx) {
                auto it = buckets.find(key(cx + dx, cy + dy));
                if (it == buckets.end()) continue;
                for (int i : it->second) {
                    best = std::min(best, std::abs(cloud.points[i] - x));
                }
            }
        }
        return best;
    }
};

}  // namespace

CoverageStats tiling_coverage_probe(const NumberSystem& ns, const Window& window,
                                    size_t samples, int depth, std::uint64_t seed) {
    CoverageStats stats;
    stats.samples = samples;
    if (samples == 0) return stats;
    if (ns.degree() != 2) throw DomainError("the tiling probe needs a complex base");

    const double tau = tile_tail_bound(ns, depth);
    const double slack = tau / 100.0;
    const double frac_radius =
        static_cast<double>(ns.digit_max()) / (std::sqrt(ns.modulus_squared().get_d()) - 1.0);

    std::map<std::pair<Int, Int>, CloudIndex> clouds;
    auto cloud_at = [&](const LatticePoint& n) -> const CloudIndex* {
        auto key = std::make_pair(n.lam, n.mu);
        auto it = clouds.find(key);
        if (it != clouds.end()) return &it->second;
        auto r = integer_expansion(ns, n);
        if (!std::holds_alternative<Expansion>(r)) return nullptr;
        CloudIndex ci;
        ci.cloud = tile_cloud(ns, n, depth);
        ci.build(std::max(tau, 1e-9));
        return &clouds.emplace(key, std::move(ci)).first->second;
    };

    const double bim = ns.basis2().im.get_d();
    const double bre = ns.basis2().re.get_d();
    const double a2 = ns.a2().get_d();

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ux(window.x0, window.x1), uy(window.y0, window.y1);
    for (size_t i = 0; i < samples; ++i) {
        double xr = ux(rng), xi = uy(rng);
        std::complex<double> xc(xr, xi);
        // exact rational input: doubles are exact binary rationals
        ComplexInput input = ComplexInput::exact(Rat(xr), Rat(xi));
        Expansion w = approximate_expansion(ns, input, depth);
        // integer part of the word
        std::vector<int> int_digits;
        for (long exp = std::max(w.empty() ? 0L : w.msb_exponent, 0L); exp >= 0; --exp) {
            int_digits.push_back(w.digit_at(exp));
        }
        Expansion int_part = Expansion::integer_word(std::move(int_digits));
        auto n_opt = ns.to_lattice(evaluate(ns, int_part));
        if (!n_opt) continue;  // cannot happen for valid words
        const CloudIndex* own = cloud_at(*n_opt);
        if (own) {
            double d = own->min_dist(xc, 1e100);
            if (d <= tau + 1e-9) ++stats.covered;
        }
        // multiplicity: tiles achieving the minimum distance within slack
        double reach = frac_radius + tau + slack;
        double m0 = (xi - reach) / bim, m1 = (xi + reach) / bim;
        long mu_lo = static_cast<long>(std::ceil(std::min(m0, m1)));
        long mu_hi = static_cast<long>(std::floor(std::max(m0, m1)));
        std::vector<std::pair<double, std::pair<long, long>>> dists;
        double dmin = 1e100;
        for (long mu = mu_lo; mu <= mu_hi; ++mu) {
            double re_off = mu * bre;
            long lam_lo = static_cast<long>(std::ceil((xr - reach - re_off) / a2));
            long lam_hi = static_cast<long>(std::floor((xr + reach - re_off) / a2));
            for (long lam = lam_lo; lam <= lam_hi; ++lam) {
                std::complex<double> center(lam * a2 + re_off, mu * bim);
                if (std::abs(center - xc) > reach) continue;
                const CloudIndex* ci = cloud_at(LatticePoint(Int(lam), Int(mu)));
                if (!ci) continue;
                double d = ci->min_dist(xc, dmin + 2 * slack + 1e-9);
                dists.push_back({d, {lam, mu}});
                dmin = std::min(dmin, d);
            }
        }
        int mult = 0;
        for (const auto& [d, who] : dists) {
            if (d <= dmin + slack) ++mult;
        }
        ++stats.multiplicity_histogram[mult];
    }
    return stats;
}

}  // namespace algnum
