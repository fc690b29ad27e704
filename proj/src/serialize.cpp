#include "hsp/serialize.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <sstream>

namespace hsp {

namespace {

using nlohmann::json;

std::string format_g17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

RegionDocument make_region_document(const Region& region, double alpha, int quad_order,
                                    const std::string& version) {
    const SupportCurve& curve = region.curve;
    RegionDocument doc;
    doc.n = curve.n;
    doc.r = curve.r;
    doc.rho = curve.rho;
    doc.alpha = alpha;
    doc.m_beta = static_cast<int>(curve.betas.size()) - 1;
    doc.quad_order = quad_order;
    doc.version = version;
    doc.beta = curve.betas;
    doc.h = curve.h;
    const Complex rot = std::exp(Complex(0.0, alpha));
    doc.curve_re.reserve(curve.f.size());
    doc.curve_im.reserve(curve.f.size());
    for (const Complex& f : curve.f) {
        const Complex w = rot * f;
        doc.curve_re.push_back(w.real());
        doc.curve_im.push_back(w.imag());
    }
    for (const Complex& v : region.polygon.vertices) {
        const Complex w = rot * v;
        doc.polygon.emplace_back(w.real(), w.imag());
    }
    if (!doc.polygon.empty()) doc.polygon.push_back(doc.polygon.front()); // closed ring
    return doc;
}

std::string to_json(const RegionDocument& doc) {
    json j;
    j["kind"] = "region";
    j["version"] = doc.version;
    j["n"] = doc.n;
    j["r"] = doc.r;
    j["rho"] = doc.rho;
    j["alpha"] = doc.alpha;
    j["m_beta"] = doc.m_beta;
    j["quad_order"] = doc.quad_order;
    j["beta"] = doc.beta;
    j["h"] = doc.h;
    j["curve_re"] = doc.curve_re;
    j["curve_im"] = doc.curve_im;
    json poly = json::array();
    for (const auto& [re, im] : doc.polygon) poly.push_back(json::array({re, im}));
    j["polygon"] = std::move(poly);
    return j.dump(2) + "\n";
}

RegionDocument region_document_from_json(const std::string& text) {
    const json j = json::parse(text);
    RegionDocument doc;
    doc.n = j.at("n").get<int>();
    doc.r = j.at("r").get<double>();
    doc.rho = j.at("rho").get<double>();
    doc.alpha = j.at("alpha").get<double>();
    doc.m_beta = j.at("m_beta").get<int>();
    doc.quad_order = j.at("quad_order").get<int>();
    doc.version = j.at("version").get<std::string>();
    doc.beta = j.at("beta").get<std::vector<double>>();
    doc.h = j.at("h").get<std::vector<double>>();
    doc.curve_re = j.at("curve_re").get<std::vector<double>>();
    doc.curve_im = j.at("curve_im").get<std::vector<double>>();
    for (const auto& v : j.at("polygon"))
        doc.polygon.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
    return doc;
}

std::string to_csv(const RegionDocument& doc) {
    std::string out = "beta,h,re,im\n";
    for (std::size_t i = 0; i < doc.beta.size(); ++i) {
        out += format_g17(doc.beta[i]);
        out += ',';
        out += format_g17(doc.h[i]);
        out += ',';
        out += format_g17(doc.curve_re[i]);
        out += ',';
        out += format_g17(doc.curve_im[i]);
        out += '\n';
    }
    return out;
}

std::string to_svg(const RegionDocument& doc) {
    // fixed 1000x1000 viewbox mapping the closed unit disk
    const auto px = [](double re) { return 500.0 + 450.0 * re; };
    const auto py = [](double im) { return 500.0 - 450.0 * im; };
    std::ostringstream svg;
    svg.precision(6);
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 1000 1000\">\n";
    svg << "  <rect width=\"1000\" height=\"1000\" fill=\"white\"/>\n";
    svg << "  <circle cx=\"500\" cy=\"500\" r=\"450\" fill=\"none\" stroke=\"#bbbbbb\" "
           "stroke-width=\"1.5\"/>\n";
    if (!doc.polygon.empty()) {
        svg << "  <path d=\"";
        for (std::size_t i = 0; i + 1 < doc.polygon.size(); ++i)
            svg << (i == 0 ? 'M' : 'L') << px(doc.polygon[i].first) << ' '
                << py(doc.polygon[i].second) << ' ';
        svg << "Z\" fill=\"#4477aa33\" stroke=\"#4477aa\" stroke-width=\"2\"/>\n";
    }
    if (!doc.curve_re.empty()) {
        svg << "  <polyline points=\"";
        for (std::size_t i = 0; i < doc.curve_re.size(); ++i)
            svg << px(doc.curve_re[i]) << ',' << py(doc.curve_im[i]) << ' ';
        svg << "\" fill=\"none\" stroke=\"#cc3311\" stroke-width=\"1\"/>\n";
    }
    const double cx = px(doc.rho * std::cos(doc.alpha));
    const double cy = py(doc.rho * std::sin(doc.alpha));
    svg << "  <circle cx=\"" << cx << "\" cy=\"" << cy
        << "\" r=\"4\" fill=\"#000000\"/>\n</svg>\n";
    return svg.str();
}

std::string to_json(const TrialReport& report) {
    json j;
    j["kind"] = "verification-report";
    j["n"] = report.n;
    j["r"] = report.r;
    j["seed"] = report.seed;
    j["trials"] = report.trials;
    j["worst_margin"] = report.worst_margin;
    j["pass"] = report.pass;
    json failures = json::array();
    for (const TrialFailure& f : report.failures) {
        failures.push_back({{"trial", f.trial},
                            {"sample_index", f.sample_index},
                            {"point_re", f.point.real()},
                            {"point_im", f.point.imag()},
                            {"margin", f.margin}});
    }
    j["failures"] = std::move(failures);
    json claims = json::array();
    for (const ClaimResult& c : report.claims) {
        claims.push_back({{"name", c.name},
                          {"pass", c.pass},
                          {"observed", c.observed},
                          {"threshold", c.threshold},
                          {"detail", c.detail}});
    }
    j["claims"] = std::move(claims);
    return j.dump(2) + "\n";
}

} // namespace hsp
